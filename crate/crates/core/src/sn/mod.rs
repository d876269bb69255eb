//! The weak order on the symmetric group S_n, its inversion sets, and its
//! noncrossing arc diagrams.

mod congruence;
mod shard;

pub use congruence::{all_arcs_sn, congruence_classes, congruence_pi_down, contracted_arcs, ArcIdeal};
pub use shard::{shard, Shard, ShardConstraint};

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arc::Arc;
use crate::error::{Error, Result};
use crate::pairs::{self, PairSet};

/// A permutation of 1..=n in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Permutation {
    one_line: Vec<usize>,
}

/// Inversion set of a permutation of 1..=n: pairs (a,b), a < b, with b placed
/// before a.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct InversionSet {
    pub n: usize,
    pub pairs: BTreeSet<(usize, usize)>,
}

impl InversionSet {
    pub fn new(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let pairs: BTreeSet<(usize, usize)> = pairs.into_iter().collect();
        for &(a, b) in &pairs {
            if a == 0 || a >= b || b > n {
                return Err(Error::OutOfRange(format!("pair ({a},{b}) for n = {n}")));
            }
        }
        Ok(InversionSet { n, pairs })
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.pairs.contains(&(a, b))
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    fn ground(&self) -> Vec<i64> {
        (1..=self.n as i64).collect()
    }

    fn to_pairset(&self) -> PairSet {
        self.pairs.iter().map(|&(a, b)| (a as i64, b as i64)).collect()
    }

    fn from_pairset(n: usize, s: &PairSet) -> Self {
        InversionSet { n, pairs: s.iter().map(|&(a, b)| (a as usize, b as usize)).collect() }
    }

    pub fn is_biclosed(&self) -> bool {
        pairs::is_biclosed(&self.ground(), &self.to_pairset())
    }

    pub fn closure(&self) -> InversionSet {
        InversionSet::from_pairset(self.n, &pairs::closure(&self.ground(), &self.to_pairset()))
    }

    pub fn interior(&self) -> InversionSet {
        InversionSet::from_pairset(self.n, &pairs::interior(&self.ground(), &self.to_pairset()))
    }
}

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            if v == 0 || v > n || seen[v] {
                return Err(Error::OutOfRange(format!("{one_line:?} is not a permutation of 1..={n}")));
            }
            seen[v] = true;
        }
        Ok(Permutation { one_line })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { one_line: (1..=n).collect() }
    }

    pub fn reversal(n: usize) -> Self {
        Permutation { one_line: (1..=n).rev().collect() }
    }

    pub fn n(&self) -> usize {
        self.one_line.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    /// `pos[v]` is the 0-based position of value v; index 0 is unused.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.n() + 1];
        for (i, &v) in self.one_line.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    pub fn inversions(&self) -> InversionSet {
        let pos = self.positions();
        let n = self.n();
        let mut pairs = BTreeSet::new();
        for a in 1..=n {
            for b in a + 1..=n {
                if pos[b] < pos[a] {
                    pairs.insert((a, b));
                }
            }
        }
        InversionSet { n, pairs }
    }

    pub fn length(&self) -> usize {
        self.inversions().len()
    }

    /// Left multiplication by the transposition (a b): swaps the values a and b.
    pub fn left_transpose(&self, a: usize, b: usize) -> Permutation {
        let one_line = self
            .one_line
            .iter()
            .map(|&v| {
                if v == a {
                    b
                } else if v == b {
                    a
                } else {
                    v
                }
            })
            .collect();
        Permutation { one_line }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for v in &self.one_line {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.one_line.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty permutation".into()));
        }
        let vals: Result<Vec<usize>> = if s.contains(',') || s.contains(' ') {
            s.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad entry {t:?}"))))
                .collect()
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::Parse(format!("bad digit {c:?}"))))
                .collect()
        };
        Permutation::new(vals?)
    }
}

pub fn inversion_set(pi: &Permutation) -> InversionSet {
    pi.inversions()
}

pub fn permutation_from_inversions(set: &InversionSet) -> Result<Permutation> {
    if !set.is_biclosed() {
        return Err(Error::NotBiclosed(format!("{:?}", set.pairs)));
    }
    let n = set.n;
    // Position of v = number of values placed before it.
    let mut one_line = vec![0; n];
    for v in 1..=n {
        let before =
            (1..v).filter(|&u| !set.contains(u, v)).count() + (v + 1..=n).filter(|&u| set.contains(v, u)).count();
        one_line[before] = v;
    }
    Permutation::new(one_line)
}

fn check_sizes(n: usize, sets: &[InversionSet]) -> Result<()> {
    for s in sets {
        if s.n != n {
            return Err(Error::MixedSizes(n, s.n));
        }
    }
    Ok(())
}

/// Join in the weak order: closure of the union. The empty join is the identity.
pub fn join_sn(n: usize, sets: &[InversionSet]) -> Result<InversionSet> {
    check_sizes(n, sets)?;
    let union = InversionSet { n, pairs: sets.iter().flat_map(|s| s.pairs.iter().copied()).collect() };
    Ok(union.closure())
}

/// Meet in the weak order: interior of the intersection. The empty meet is the reversal.
pub fn meet_sn(n: usize, sets: &[InversionSet]) -> Result<InversionSet> {
    check_sizes(n, sets)?;
    let mut inter = Permutation::reversal(n).inversions().pairs;
    for s in sets {
        inter = inter.intersection(&s.pairs).copied().collect();
    }
    Ok(InversionSet { n, pairs: inter }.interior())
}

pub fn leq_sn(x: &Permutation, y: &Permutation) -> Result<bool> {
    if x.n() != y.n() {
        return Err(Error::MixedSizes(x.n(), y.n()));
    }
    Ok(x.inversions().pairs.is_subset(&y.inversions().pairs))
}

/// Lower walls (a,b), a < b: b sits immediately left of a.
pub fn lower_walls_sn(pi: &Permutation) -> Vec<(usize, usize)> {
    pi.one_line.windows(2).filter(|w| w[0] > w[1]).map(|w| (w[1], w[0])).collect()
}

/// Upper walls (a,b), a < b: a sits immediately left of b.
pub fn upper_walls_sn(pi: &Permutation) -> Vec<(usize, usize)> {
    pi.one_line.windows(2).filter(|w| w[0] < w[1]).map(|w| (w[0], w[1])).collect()
}

fn arc_at_wall(pi: &Permutation, a: usize, b: usize) -> Arc {
    let pos = pi.positions();
    let first = pos[a].min(pos[b]);
    let left = (a + 1..b).filter(|&v| pos[v] < first).map(|v| v as i64);
    Arc::from_left(a as i64, b as i64, left).expect("arc from a wall is well formed")
}

pub fn lower_arcs_sn(pi: &Permutation) -> Vec<Arc> {
    lower_walls_sn(pi).into_iter().map(|(a, b)| arc_at_wall(pi, a, b)).collect()
}

pub fn upper_arcs_sn(pi: &Permutation) -> Vec<Arc> {
    upper_walls_sn(pi).into_iter().map(|(a, b)| arc_at_wall(pi, a, b)).collect()
}

pub fn check_arc_sn(arc: &Arc, n: usize) -> Result<()> {
    if arc.a < 1 || arc.b > n as i64 {
        return Err(Error::OutOfRange(format!("arc {arc} does not fit in 1..={n}")));
    }
    Ok(())
}

/// The join-irreducible whose unique lower arc is `arc`:
/// 1..a-1, left set, b, a, right set, b+1..n.
pub fn join_irreducible_from_arc(arc: &Arc, n: usize) -> Result<Permutation> {
    check_arc_sn(arc, n)?;
    let (a, b) = (arc.a as usize, arc.b as usize);
    let mut one_line: Vec<usize> = (1..a).collect();
    one_line.extend(arc.left.iter().map(|&x| x as usize));
    one_line.push(b);
    one_line.push(a);
    one_line.extend(arc.right.iter().map(|&x| x as usize));
    one_line.extend(b + 1..=n);
    Permutation::new(one_line)
}

pub fn canonical_join_rep_sn(pi: &Permutation) -> Vec<Arc> {
    lower_arcs_sn(pi)
}

pub fn check_noncrossing(arcs: &[Arc]) -> Result<()> {
    for (i, x) in arcs.iter().enumerate() {
        for y in &arcs[i + 1..] {
            if x == y || x.crosses(y) {
                return Err(Error::Crossing(format!("{x} and {y}")));
            }
        }
    }
    Ok(())
}

/// Inverse of `canonical_join_rep_sn`: join of the join-irreducibles of a
/// noncrossing collection.
pub fn permutation_from_noncrossing(arcs: &[Arc], n: usize) -> Result<Permutation> {
    for arc in arcs {
        check_arc_sn(arc, n)?;
    }
    check_noncrossing(arcs)?;
    let invs: Vec<InversionSet> =
        arcs.iter().map(|arc| join_irreducible_from_arc(arc, n).map(|j| j.inversions())).collect::<Result<_>>()?;
    permutation_from_inversions(&join_sn(n, &invs)?)
}

/// All permutations of 1..=n in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut cur: Vec<usize> = (1..=n).collect();
    let mut out = vec![Permutation { one_line: cur.clone() }];
    while let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) {
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(Permutation { one_line: cur.clone() });
    }
    out
}
