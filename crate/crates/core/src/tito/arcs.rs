use std::collections::BTreeSet;
use std::fmt;

use super::{join_tito, lower_walls_tito, residue, Block, Tito};
use crate::arc::{parse_arc_body, Arc};
use crate::error::{Error, Result};

/// Class of an arc under translation by multiples of n, stored with 1 <= a <= n.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WrappedArc {
    pub n: usize,
    pub arc: Arc,
}

impl WrappedArc {
    pub fn new(n: usize, arc: Arc) -> WrappedArc {
        let shift = (arc.a - 1).rem_euclid(n as i64) + 1 - arc.a;
        WrappedArc { n, arc: arc.translate(shift) }
    }

    pub fn from_left(n: usize, a: i64, b: i64, left: impl IntoIterator<Item = i64>) -> Result<WrappedArc> {
        Ok(WrappedArc::new(n, Arc::from_left(a, b, left)?))
    }

    pub fn a(&self) -> i64 {
        self.arc.a
    }

    pub fn b(&self) -> i64 {
        self.arc.b
    }

    pub fn span(&self) -> i64 {
        self.arc.span()
    }

    pub fn is_imaginary(&self) -> bool {
        residue(self.arc.a, self.n) == residue(self.arc.b, self.n)
    }

    /// The representative translated by k·n.
    pub fn translate(&self, k: i64) -> Arc {
        self.arc.translate(k * self.n as i64)
    }

    pub fn parse(text: &str, n: usize) -> Result<WrappedArc> {
        let t = text.trim();
        let body = t
            .strip_prefix('<')
            .and_then(|r| r.strip_suffix('>'))
            .ok_or_else(|| Error::Parse(format!("wrapped arc must look like <a,b|l|r>, got {t:?}")))?;
        Ok(WrappedArc::new(n, parse_arc_body(body)?))
    }
}

impl fmt::Display for WrappedArc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.arc.to_string();
        write!(f, "<{}>", &s[1..s.len() - 1])
    }
}

/// No two translates cross. Translates shifted by at least the span share
/// at most an endpoint and cannot cross.
pub fn is_wrapped_arc(w: &WrappedArc) -> bool {
    let n = w.n as i64;
    (1..).take_while(|k| k * n < w.span()).all(|k| !w.arc.crosses(&w.translate(k)))
}

pub fn wrapped_cross(x: &WrappedArc, y: &WrappedArc) -> bool {
    if x == y {
        return false;
    }
    let n = x.n as i64;
    let lo = (x.a() - y.b()).div_euclid(n);
    let hi = (x.b() - y.a()).div_euclid(n) + 1;
    (lo..=hi).any(|k| x.arc.crosses(&y.translate(k)))
}

pub fn lower_wrapped_arcs(t: &Tito) -> Vec<WrappedArc> {
    lower_walls_tito(t)
        .into_iter()
        .map(|w| WrappedArc::from_left(t.n(), w.a, w.b, (w.a + 1..w.b).filter(|&x| t.lt(x, w.b))).unwrap())
        .collect()
}

/// Which of the four window shapes the join-irreducible of `w` takes.
pub fn ji_case(w: &WrappedArc) -> u8 {
    let n = w.n as i64;
    match w.span().cmp(&n) {
        std::cmp::Ordering::Less => 1,
        std::cmp::Ordering::Equal => 2,
        std::cmp::Ordering::Greater if w.arc.right.contains(&(w.a() + n)) => 3,
        std::cmp::Ordering::Greater => 4,
    }
}

/// The completely join-irreducible TITO whose only lower wrapped arc is `w`.
pub fn ji_from_wrapped_arc(w: &WrappedArc) -> Result<Tito> {
    if !is_wrapped_arc(w) {
        return Err(Error::NotWrapped(w.to_string()));
    }
    let n = w.n;
    let ni = n as i64;
    let (a, b) = (w.a(), w.b());
    let (left, right) = (&w.arc.left, &w.arc.right);
    let blocks = match ji_case(w) {
        1 => {
            let mut win: Vec<i64> = left.iter().copied().collect();
            win.extend([b, a]);
            win.extend(right.iter().copied());
            win.extend(b + 1..ni + a);
            vec![Block::waxing(win)]
        }
        2 => {
            let mut blocks = Vec::new();
            if !left.is_empty() {
                blocks.push(Block::waxing(left.iter().copied().collect()));
            }
            blocks.push(Block::waning(vec![a]));
            if !right.is_empty() {
                blocks.push(Block::waxing(right.iter().copied().collect()));
            }
            blocks
        }
        3 => {
            let others = (0..n).filter(|&x| x != residue(a, n) && x != residue(b, n));
            let mut win: Vec<i64> = others
                .map(|x| {
                    let below = a - 1 - (a - 1 - x as i64).rem_euclid(ni);
                    left.iter().copied().filter(|&l| residue(l, n) == x).max().unwrap_or(below).max(below)
                })
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect();
            win.extend([b, a]);
            vec![Block::waxing(win)]
        }
        _ => {
            let (mut ls, mut cs, mut rs) = (BTreeSet::new(), BTreeSet::new(), BTreeSet::new());
            for x in (0..n).filter(|&x| x != residue(a, n) && x != residue(b, n)) {
                let lx = left.iter().copied().filter(|&l| residue(l, n) == x);
                let rx = right.iter().copied().filter(|&r| residue(r, n) == x).min();
                match (lx.clone().max(), rx) {
                    (Some(l), None) => ls.insert(l),
                    (Some(_), Some(_)) => cs.insert(lx.min().unwrap()),
                    (None, Some(r)) => rs.insert(r),
                    (None, None) => unreachable!("every residue occurs inside an arc longer than n"),
                };
            }
            let mut blocks = Vec::new();
            if !ls.is_empty() {
                blocks.push(Block::waxing(ls.into_iter().collect()));
            }
            let mut mid: Vec<i64> = cs.into_iter().collect();
            mid.extend([b, a]);
            blocks.push(Block::waning(mid));
            if !rs.is_empty() {
                blocks.push(Block::waxing(rs.into_iter().collect()));
            }
            blocks
        }
    };
    Tito::new(n, blocks)
}

/// Join of the join-irreducibles of a cyclic noncrossing collection.
pub fn join_of_cyclic_collection(arcs: &[WrappedArc], n: usize) -> Result<Tito> {
    for (i, x) in arcs.iter().enumerate() {
        if x.n != n {
            return Err(Error::MixedSizes(n, x.n));
        }
        if !is_wrapped_arc(x) {
            return Err(Error::NotWrapped(x.to_string()));
        }
        for y in &arcs[i + 1..] {
            if x == y || wrapped_cross(x, y) {
                return Err(Error::Crossing(format!("{x} and {y}")));
            }
        }
    }
    let jis = arcs.iter().map(ji_from_wrapped_arc).collect::<Result<Vec<_>>>()?;
    join_tito(n, &jis)
}

pub fn canonical_join_rep_tito(t: &Tito) -> Result<Vec<WrappedArc>> {
    if !t.is_widely_generated() {
        return Err(Error::NotWidelyGenerated(format!("{t} has two consecutive waxing blocks")));
    }
    Ok(lower_wrapped_arcs(t))
}
