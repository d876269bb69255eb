//! Finite posets and lattices: lattice checks, join-irreducibles, canonical
//! join representations, semidistributivity and congruences.

mod quotients;

pub use quotients::{tito_quotient, tot_quotient, weak_order_sn_lattice, TitoQuotient, MAX_QUOTIENT_WINDOW};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset {
    labels: Vec<String>,
    leq: Vec<Vec<bool>>,
}

impl FinitePoset {
    pub fn new(labels: Vec<String>, leq: Vec<Vec<bool>>) -> Result<Self> {
        let n = labels.len();
        if leq.len() != n || leq.iter().any(|row| row.len() != n) {
            return Err(Error::MixedSizes(n, leq.len()));
        }
        for i in 0..n {
            if !leq[i][i] {
                return Err(Error::PreconditionViolated(format!("order is not reflexive at {}", labels[i])));
            }
            for j in 0..n {
                if i != j && leq[i][j] && leq[j][i] {
                    return Err(Error::PreconditionViolated(format!(
                        "order is not antisymmetric at {} and {}",
                        labels[i], labels[j]
                    )));
                }
                for k in 0..n {
                    if leq[i][j] && leq[j][k] && !leq[i][k] {
                        return Err(Error::PreconditionViolated(format!("order is not transitive at {}", labels[j])));
                    }
                }
            }
        }
        Ok(FinitePoset { labels, leq })
    }

    pub fn from_fn(labels: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let n = labels.len();
        let m = (0..n).map(|i| (0..n).map(|j| leq(i, j)).collect()).collect();
        FinitePoset::new(labels, m)
    }

    /// Builds the order generated by a cover list, as written by `to_json`.
    pub fn from_covers(labels: Vec<String>, covers: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(x, y) in covers {
            if x >= n || y >= n {
                return Err(Error::OutOfRange(format!("cover ({x},{y}) with {n} elements")));
            }
            leq[x][y] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    for j in 0..n {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        FinitePoset::new(labels, leq)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        struct In {
            elements: Vec<String>,
            covers: Vec<(usize, usize)>,
        }
        let v: In = serde_json::from_str(text).map_err(|e| Error::Parse(format!("poset JSON: {e}")))?;
        FinitePoset::from_covers(v.elements, &v.covers)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x][y]
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq[x][y]
    }

    pub fn covers(&self, x: usize, y: usize) -> bool {
        self.lt(x, y) && !(0..self.len()).any(|z| self.lt(x, z) && self.lt(z, y))
    }

    pub fn lower_covers(&self, x: usize) -> Vec<usize> {
        (0..self.len()).filter(|&y| self.covers(y, x)).collect()
    }

    pub fn upper_covers(&self, x: usize) -> Vec<usize> {
        (0..self.len()).filter(|&y| self.covers(x, y)).collect()
    }

    /// Cover relations (lower, upper) in index order.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.len() {
            for y in self.upper_covers(x) {
                out.push((x, y));
            }
        }
        out
    }

    /// Length of the longest chain from a minimal element up to each element.
    pub fn ranks(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&x| (0..self.len()).filter(|&y| self.lt(y, x)).count());
        let mut rank = vec![0; self.len()];
        for &x in &order {
            rank[x] = self.lower_covers(x).iter().map(|&y| rank[y] + 1).max().unwrap_or(0);
        }
        rank
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Out<'a> {
            elements: &'a [String],
            covers: Vec<(usize, usize)>,
        }
        serde_json::to_value(Out { elements: &self.labels, covers: self.cover_pairs() }).unwrap()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    pub poset: FinitePoset,
    join: Vec<Vec<usize>>,
    meet: Vec<Vec<usize>>,
    pub bottom: usize,
    pub top: usize,
}

fn unique_bound(p: &FinitePoset, x: usize, y: usize, upper: bool) -> Option<usize> {
    let n = p.len();
    let bounds: Vec<usize> =
        (0..n).filter(|&z| if upper { p.leq(x, z) && p.leq(y, z) } else { p.leq(z, x) && p.leq(z, y) }).collect();
    bounds.iter().copied().find(|&z| bounds.iter().all(|&w| if upper { p.leq(z, w) } else { p.leq(w, z) }))
}

/// Checks that every pair has a join and a meet and tabulates both.
pub fn check_lattice(p: FinitePoset) -> Result<FiniteLattice> {
    let n = p.len();
    if n == 0 {
        return Err(Error::PreconditionViolated("empty poset".into()));
    }
    let mut join = vec![vec![0; n]; n];
    let mut meet = vec![vec![0; n]; n];
    for x in 0..n {
        for y in x..n {
            let j = unique_bound(&p, x, y, true).ok_or(Error::NotALattice(x, y))?;
            let m = unique_bound(&p, x, y, false).ok_or(Error::NotALattice(x, y))?;
            join[x][y] = j;
            join[y][x] = j;
            meet[x][y] = m;
            meet[y][x] = m;
        }
    }
    let bottom = (0..n).find(|&x| (0..n).all(|y| p.leq(x, y))).ok_or(Error::NotALattice(0, 0))?;
    let top = (0..n).find(|&x| (0..n).all(|y| p.leq(y, x))).ok_or(Error::NotALattice(0, 0))?;
    Ok(FiniteLattice { poset: p, join, meet, bottom, top })
}

impl FiniteLattice {
    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.poset.leq(x, y)
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x][y]
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x][y]
    }

    pub fn join_all(&self, xs: &[usize]) -> usize {
        xs.iter().fold(self.bottom, |acc, &x| self.join(acc, x))
    }

    pub fn meet_all(&self, xs: &[usize]) -> usize {
        xs.iter().fold(self.top, |acc, &x| self.meet(acc, x))
    }

    /// Elements covering exactly one element.
    pub fn join_irreducibles(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.poset.lower_covers(x).len() == 1).collect()
    }

    pub fn meet_irreducibles(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.poset.upper_covers(x).len() == 1).collect()
    }

    /// Canonical join representation of `x`, if any. For each lower cover y
    /// the set {z : z v y = x} must have a least element; those least
    /// elements form the representation.
    pub fn canonical_join_rep(&self, x: usize) -> Option<Vec<usize>> {
        let mut out = Vec::new();
        for y in self.poset.lower_covers(x) {
            let zs: Vec<usize> = (0..self.len()).filter(|&z| self.leq(z, x) && self.join(z, y) == x).collect();
            let m = self.meet_all(&zs);
            if self.join(m, y) != x {
                return None;
            }
            out.push(m);
        }
        out.sort_unstable();
        Some(out)
    }

    /// x v y = z v y implies (x ^ z) v y = x v y.
    pub fn is_join_semidistributive(&self) -> bool {
        self.sd_witness(true).is_none()
    }

    pub fn is_meet_semidistributive(&self) -> bool {
        self.sd_witness(false).is_none()
    }

    pub fn is_semidistributive(&self) -> bool {
        self.is_join_semidistributive() && self.is_meet_semidistributive()
    }

    /// A triple (x, z, y) violating join (or meet) semidistributivity.
    pub fn sd_witness(&self, join_side: bool) -> Option<(usize, usize, usize)> {
        let (op, dual): (&Vec<Vec<usize>>, &Vec<Vec<usize>>) =
            if join_side { (&self.join, &self.meet) } else { (&self.meet, &self.join) };
        let n = self.len();
        for y in 0..n {
            for x in 0..n {
                for z in x + 1..n {
                    let v = op[x][y];
                    if op[z][y] == v && op[dual[x][z]][y] != v {
                        return Some((x, z, y));
                    }
                }
            }
        }
        None
    }

    /// A partition (given as a class id per element) is a congruence iff its
    /// classes are intervals and both projections are order preserving.
    pub fn is_congruence(&self, class_of: &[usize]) -> bool {
        if class_of.len() != self.len() {
            return false;
        }
        let n = self.len();
        let mut down = vec![0; n];
        let mut up = vec![0; n];
        for x in 0..n {
            let class: Vec<usize> = (0..n).filter(|&y| class_of[y] == class_of[x]).collect();
            let lo = self.meet_all(&class);
            let hi = self.join_all(&class);
            if class_of[lo] != class_of[x] || class_of[hi] != class_of[x] {
                return false;
            }
            if (0..n).any(|z| self.leq(lo, z) && self.leq(z, hi) && class_of[z] != class_of[x]) {
                return false;
            }
            down[x] = lo;
            up[x] = hi;
        }
        (0..n).all(|x| (0..n).all(|y| !self.leq(x, y) || (self.leq(down[x], down[y]) && self.leq(up[x], up[y]))))
    }

    /// Finest congruence identifying each given pair; class ids are the
    /// smallest element index in each class.
    pub fn congruence_generated_by(&self, pairs: &[(usize, usize)]) -> Vec<usize> {
        let n = self.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut c = x;
            while parent[c] != r {
                let next = parent[c];
                parent[c] = r;
                c = next;
            }
            r
        }
        fn union(parent: &mut [usize], x: usize, y: usize) -> bool {
            let (a, b) = (find(parent, x), find(parent, y));
            if a == b {
                return false;
            }
            let (lo, hi) = (a.min(b), a.max(b));
            parent[hi] = lo;
            true
        }
        for &(x, y) in pairs {
            union(&mut parent, x, y);
        }
        loop {
            let mut changed = false;
            for x in 0..n {
                let r = find(&mut parent, x);
                if r == x {
                    continue;
                }
                for z in 0..n {
                    changed |= union(&mut parent, self.join(x, z), self.join(r, z));
                    changed |= union(&mut parent, self.meet(x, z), self.meet(r, z));
                }
            }
            if !changed {
                break;
            }
        }
        (0..n).map(|x| find(&mut parent, x)).collect()
    }

    /// Quotient lattice; its elements are labelled by the bottoms of the classes.
    pub fn quotient(&self, class_of: &[usize]) -> Result<FiniteLattice> {
        if !self.is_congruence(class_of) {
            return Err(Error::NotACongruence("classes are not intervals with monotone projections".into()));
        }
        let n = self.len();
        let bottoms: Vec<usize> =
            (0..n).filter(|&x| (0..n).all(|y| class_of[y] != class_of[x] || self.leq(x, y))).collect();
        let labels = bottoms.iter().map(|&b| self.poset.labels()[b].clone()).collect();
        let p = FinitePoset::from_fn(labels, |i, j| self.leq(bottoms[i], bottoms[j]))?;
        check_lattice(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> FiniteLattice {
        let p = FinitePoset::from_fn((0..n).map(|i| i.to_string()).collect(), |i, j| i <= j).unwrap();
        check_lattice(p).unwrap()
    }

    // Pentagon N5: 0 < a < b < 1, 0 < c < 1.
    fn pentagon() -> FiniteLattice {
        let labels = ["0", "a", "b", "c", "1"].map(String::from).to_vec();
        let rel = [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 4), (2, 4), (3, 4)];
        let p = FinitePoset::from_fn(labels, |i, j| i == j || rel.contains(&(i, j))).unwrap();
        check_lattice(p).unwrap()
    }

    // Diamond M3 is not semidistributive.
    fn diamond() -> FiniteLattice {
        let labels = ["0", "a", "b", "c", "1"].map(String::from).to_vec();
        let p = FinitePoset::from_fn(labels, |i, j| i == j || i == 0 || j == 4).unwrap();
        check_lattice(p).unwrap()
    }

    #[test]
    fn json_round_trip() {
        let p = pentagon().poset;
        let q = FinitePoset::from_json(&p.to_json().to_string()).unwrap();
        assert_eq!(p, q);
        let cyclic = r#"{"elements":["a","b"],"covers":[[0,1],[1,0]]}"#;
        assert!(matches!(FinitePoset::from_json(cyclic), Err(Error::PreconditionViolated(_))));
        assert!(matches!(FinitePoset::from_json("{"), Err(Error::Parse(_))));
    }

    #[test]
    fn chain_is_distributive() {
        let c = chain(4);
        assert!(c.is_semidistributive());
        assert_eq!(c.join_irreducibles(), vec![1, 2, 3]);
        assert_eq!(c.canonical_join_rep(3), Some(vec![3]));
    }

    #[test]
    fn pentagon_is_semidistributive_and_diamond_is_not() {
        assert!(pentagon().is_semidistributive());
        assert!(!diamond().is_join_semidistributive());
        assert!(!diamond().is_meet_semidistributive());
        assert_eq!(diamond().canonical_join_rep(4), None);
    }

    #[test]
    fn non_lattice_rejected() {
        // Two maximal elements.
        let labels = ["0", "a", "b"].map(String::from).to_vec();
        let p = FinitePoset::from_fn(labels, |i, j| i == j || i == 0).unwrap();
        assert!(matches!(check_lattice(p), Err(Error::NotALattice(_, _))));
    }

    #[test]
    fn pentagon_congruences() {
        let l = pentagon();
        // Collapsing a < b forces nothing else.
        let c = l.congruence_generated_by(&[(1, 2)]);
        assert_eq!(c, vec![0, 1, 1, 3, 4]);
        assert!(l.is_congruence(&c));
        // Collapsing 0 < a forces c = 1, and then b = 0.
        let c = l.congruence_generated_by(&[(0, 1)]);
        assert_eq!(c, vec![0, 0, 0, 3, 3]);
        assert_eq!(l.quotient(&c).unwrap().len(), 2);
        assert!(!l.is_congruence(&[0, 0, 2, 3, 4]));
    }
}
