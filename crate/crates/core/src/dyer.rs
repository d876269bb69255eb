//! Biclosed sets of positive roots: the finite type A enumeration, and the
//! extended weak order of the affine symmetric group seen as TITOs modulo
//! imaginary inversions.

use std::fmt;

use crate::error::{Error, Result};
use crate::sn::InversionSet;
use crate::tito::{encode, join_tito, meet_tito, parse_windows, Block, Direction, Tito};

/// Positive roots e_b - e_a of type A_{n-1}, indexed by pairs (a,b).
pub type RootSetFin = InversionSet;

pub fn is_closed_fin(x: &RootSetFin) -> bool {
    x.closure() == *x
}

pub fn is_coclosed_fin(x: &RootSetFin) -> bool {
    let all = crate::sn::Permutation::reversal(x.n).inversions();
    let comp = InversionSet { n: x.n, pairs: all.pairs.difference(&x.pairs).copied().collect() };
    is_closed_fin(&comp)
}

pub fn is_biclosed_fin(x: &RootSetFin) -> bool {
    is_closed_fin(x) && is_coclosed_fin(x)
}

/// All biclosed sets, by brute force over subsets of the positive roots.
pub fn enumerate_biclosed_fin(n: usize) -> Result<Vec<RootSetFin>> {
    if n > 6 {
        return Err(Error::TooLarge(format!("enumerating subsets of {} roots", n * n.saturating_sub(1) / 2)));
    }
    let roots: Vec<(usize, usize)> = (1..=n).flat_map(|a| (a + 1..=n).map(move |b| (a, b))).collect();
    let mut out = Vec::new();
    for mask in 0u32..1 << roots.len() {
        let set = InversionSet {
            n,
            pairs: roots.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &r)| r).collect(),
        };
        if is_biclosed_fin(&set) {
            out.push(set);
        }
    }
    Ok(out)
}

/// Element of the extended weak order, stored as the least TITO of its
/// class: every block of size one is waxing.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyerElement {
    rep: Tito,
}

impl DyerElement {
    pub fn rep(&self) -> &Tito {
        &self.rep
    }

    pub fn n(&self) -> usize {
        self.rep.n()
    }

    /// Accepts window notation with or without the `dyer:` prefix.
    pub fn parse(text: &str, n: usize) -> Result<DyerElement> {
        let t = text.trim();
        let t = t.strip_prefix("dyer:").unwrap_or(t);
        Ok(dyer_normal_form(&parse_windows(t, n)?))
    }
}

impl fmt::Display for DyerElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "dyer:{}", self.rep)
    }
}

pub fn dyer_normal_form(t: &Tito) -> DyerElement {
    let blocks = t
        .blocks()
        .iter()
        .map(|b| if b.len() == 1 { Block::new(Direction::Waxing, b.window.clone()) } else { b.clone() })
        .collect();
    DyerElement { rep: Tito::new(t.n(), blocks).unwrap() }
}

fn check_n(n: usize, xs: &[DyerElement]) -> Result<()> {
    match xs.iter().find(|x| x.n() != n) {
        Some(x) => Err(Error::MixedSizes(n, x.n())),
        None => Ok(()),
    }
}

/// Containment of real inversions <a,b>, a and b in different residue classes.
pub fn dyer_leq(x: &DyerElement, y: &DyerElement) -> Result<bool> {
    if x.n() != y.n() {
        return Err(Error::MixedSizes(x.n(), y.n()));
    }
    let (ex, ey) = (encode(&x.rep), encode(&y.rep));
    let n = x.n();
    Ok((0..n).all(|i| (0..n).filter(|&j| j != i).all(|j| real_subset(&ex, &ey, i, j))))
}

fn real_subset(ex: &crate::tito::ThresholdEncoding, ey: &crate::tito::ThresholdEncoding, i: usize, j: usize) -> bool {
    let (s, o) = (ex.get(i, j), ey.get(i, j));
    let tail_ok = match (s.tail, o.tail) {
        (None, _) => true,
        (Some(_), None) => false,
        (Some(a), Some(b)) => b <= a,
    };
    tail_ok && s.finite.iter().all(|&d| o.contains(d))
}

pub fn dyer_join(n: usize, xs: &[DyerElement]) -> Result<DyerElement> {
    check_n(n, xs)?;
    let reps: Vec<Tito> = xs.iter().map(|x| x.rep.clone()).collect();
    Ok(dyer_normal_form(&join_tito(n, &reps)?))
}

pub fn dyer_meet(n: usize, xs: &[DyerElement]) -> Result<DyerElement> {
    check_n(n, xs)?;
    let reps: Vec<Tito> = xs.iter().map(|x| x.rep.clone()).collect();
    Ok(dyer_normal_form(&meet_tito(n, &reps)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str, n: usize) -> DyerElement {
        DyerElement::parse(s, n).unwrap()
    }

    #[test]
    fn biclosed_examples() {
        assert!(is_biclosed_fin(&InversionSet::new(3, [(1, 2), (2, 3), (1, 3)]).unwrap()));
        assert!(is_biclosed_fin(&InversionSet::new(3, []).unwrap()));
        assert!(!is_biclosed_fin(&InversionSet::new(3, [(1, 2), (2, 3)]).unwrap()));
        assert_eq!(enumerate_biclosed_fin(1).unwrap().len(), 1);
        assert_eq!(enumerate_biclosed_fin(3).unwrap().len(), 6);
        assert_eq!(enumerate_biclosed_fin(6).unwrap().len(), 720);
        assert!(enumerate_biclosed_fin(7).is_err());
    }

    #[test]
    fn normal_form_examples() {
        assert_eq!(d("[~1][2]", 2).to_string(), "dyer:[1][2]");
        assert_eq!(d("[~2,1]", 2).to_string(), "dyer:[~2,1]");
        assert_eq!(d("[1][~2,3][0]", 4).to_string(), "dyer:[1][~2,3][4]");
        assert_eq!(d("dyer:[1][2]", 2), d("[~1][2]", 2));
    }

    #[test]
    fn join_of_atoms() {
        let j = dyer_join(2, &[d("[2,1]", 2), d("[0,3]", 2)]).unwrap();
        assert_eq!(j, d("[~2,1]", 2));
        let bottom = dyer_normal_form(&Tito::standard(2));
        assert!(dyer_leq(&bottom, &j).unwrap());
        assert!(!dyer_leq(&j, &bottom).unwrap());
    }
}
