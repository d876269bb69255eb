use std::collections::{BTreeMap, BTreeSet};

use super::{check_arc_sn, join_irreducible_from_arc, lower_arcs_sn, Permutation};
use crate::arc::Arc;
use crate::error::{Error, Result};

/// Every arc for S_n.
pub fn all_arcs_sn(n: usize) -> Vec<Arc> {
    let mut out = Vec::new();
    for a in 1..=n as i64 {
        for b in a + 1..=n as i64 {
            let inner: Vec<i64> = (a + 1..b).collect();
            for mask in 0u32..1 << inner.len() {
                let left = inner.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &x)| x);
                out.push(Arc::from_left(a, b, left).unwrap());
            }
        }
    }
    out
}

fn subarcs(arc: &Arc) -> impl Iterator<Item = Arc> + '_ {
    (arc.a..arc.b).flat_map(move |a| {
        (a + 1..=arc.b).map(move |b| Arc::from_left(a, b, arc.left.range(a + 1..b).copied()).unwrap())
    })
}

/// A set of arcs closed under taking subarcs: the arcs surviving in a
/// lattice congruence of the weak order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcIdeal {
    pub n: usize,
    pub arcs: BTreeSet<Arc>,
}

impl ArcIdeal {
    pub fn new(n: usize, arcs: impl IntoIterator<Item = Arc>) -> Result<Self> {
        let arcs: BTreeSet<Arc> = arcs.into_iter().collect();
        for arc in &arcs {
            check_arc_sn(arc, n)?;
            if let Some(missing) = subarcs(arc).find(|s| !arcs.contains(s)) {
                return Err(Error::NotIdeal(format!("{arc} is present but its subarc {missing} is not")));
            }
        }
        Ok(ArcIdeal { n, arcs })
    }

    pub fn contains(&self, arc: &Arc) -> bool {
        self.arcs.contains(arc)
    }
}

/// Bottom element of the congruence class of `pi`: step down through lower
/// arcs outside the ideal until none remain.
pub fn congruence_pi_down(ideal: &ArcIdeal, pi: &Permutation) -> Result<Permutation> {
    if pi.n() != ideal.n {
        return Err(Error::MixedSizes(ideal.n, pi.n()));
    }
    let mut cur = pi.clone();
    while let Some(arc) = lower_arcs_sn(&cur).into_iter().find(|arc| !ideal.contains(arc)) {
        cur = cur.left_transpose(arc.a as usize, arc.b as usize);
    }
    Ok(cur)
}

/// Classes of the congruence with arc set `ideal`, keyed by their bottom elements.
pub fn congruence_classes(ideal: &ArcIdeal) -> Result<BTreeMap<Permutation, Vec<Permutation>>> {
    let mut classes: BTreeMap<Permutation, Vec<Permutation>> = BTreeMap::new();
    for pi in super::all_permutations(ideal.n) {
        classes.entry(congruence_pi_down(ideal, &pi)?).or_default().push(pi);
    }
    Ok(classes)
}

/// Arcs whose join-irreducible is not identified with its unique lower cover.
pub fn contracted_arcs(n: usize, same_class: impl Fn(&Permutation, &Permutation) -> bool) -> BTreeSet<Arc> {
    all_arcs_sn(n)
        .into_iter()
        .filter(|arc| {
            let j = join_irreducible_from_arc(arc, n).unwrap();
            same_class(&j, &j.left_transpose(arc.a as usize, arc.b as usize))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn arcs(v: &[&str]) -> Vec<Arc> {
        v.iter().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn pi_down_example() {
        let k = ArcIdeal::new(3, arcs(&["(1,2||)", "(2,3||)"])).unwrap();
        assert_eq!(congruence_pi_down(&k, &p("312")).unwrap(), p("132"));
    }

    #[test]
    fn ideal_must_be_closed() {
        assert!(matches!(ArcIdeal::new(3, arcs(&["(1,3|2|)"])), Err(Error::NotIdeal(_))));
        assert!(ArcIdeal::new(3, arcs(&["(1,3|2|)", "(1,2||)", "(2,3||)"])).is_ok());
    }

    #[test]
    fn arc_count() {
        // sum over spans d of (n - d) 2^(d-1)
        assert_eq!(all_arcs_sn(4).len(), 11);
        assert_eq!(all_arcs_sn(5).len(), 26);
    }

    // The classes predicted by an arc ideal agree with the congruence
    // generated by contracting every arc outside it.
    #[test]
    fn pi_down_matches_generated_congruence() {
        for n in 3..=4 {
            let lat = crate::lab::weak_order_sn_lattice(n);
            let perms = crate::sn::all_permutations(n);
            let index = |p: &Permutation| perms.iter().position(|q| q == p).unwrap();
            let arcs = all_arcs_sn(n);
            let mut ideals = 0;
            for mask in 0u32..1 << arcs.len() {
                let chosen = arcs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, a)| a.clone());
                let Ok(ideal) = ArcIdeal::new(n, chosen) else { continue };
                ideals += 1;
                let pairs: Vec<(usize, usize)> = arcs
                    .iter()
                    .filter(|a| !ideal.contains(a))
                    .map(|a| {
                        let j = join_irreducible_from_arc(a, n).unwrap();
                        (index(&j), index(&j.left_transpose(a.a as usize, a.b as usize)))
                    })
                    .collect();
                let oracle = lat.congruence_generated_by(&pairs);
                for p in &perms {
                    let down = congruence_pi_down(&ideal, p).unwrap();
                    assert_eq!(oracle[index(p)], oracle[index(&down)]);
                    // down is the least element of its class
                    for q in &perms {
                        if oracle[index(q)] == oracle[index(p)] {
                            assert!(super::super::leq_sn(&down, q).unwrap());
                        }
                    }
                }
                let contracted = contracted_arcs(n, |x, y| oracle[index(x)] == oracle[index(y)]);
                let kept: BTreeSet<Arc> = arcs.iter().filter(|a| !contracted.contains(a)).cloned().collect();
                assert_eq!(kept, ideal.arcs);
            }
            assert!(ideals > 1);
        }
    }

    #[test]
    fn contracting_231_onto_213() {
        let lat = crate::lab::weak_order_sn_lattice(3);
        let perms = crate::sn::all_permutations(3);
        let index = |s: &str| perms.iter().position(|q| *q == p(s)).unwrap();
        let c = lat.congruence_generated_by(&[(index("231"), index("213"))]);
        assert!(lat.is_congruence(&c));
        let classes: BTreeSet<Vec<String>> =
            (0..6).map(|x| (0..6).filter(|&y| c[y] == c[x]).map(|y| perms[y].to_string()).collect()).collect();
        let want: BTreeSet<Vec<String>> = [vec!["123"], vec!["132"], vec!["213", "231"], vec!["312"], vec!["321"]]
            .into_iter()
            .map(|v| v.into_iter().map(String::from).collect())
            .collect();
        assert_eq!(classes, want);
        // Collapsing only 231 and 321 is not a congruence.
        let mut bad: Vec<usize> = (0..6).collect();
        bad[index("321")] = index("231");
        assert!(!lat.is_congruence(&bad));
    }
}
