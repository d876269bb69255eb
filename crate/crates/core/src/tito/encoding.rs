//! Finite presentation of a TITO inversion set. For each ordered pair of
//! residues (i, j) we record the set of shifts D > 0, D ≡ j - i (mod n), such
//! that <a, a+D> is an inversion for a ≡ i. Each such set is a finite set
//! together with an optional tail {T, T+n, T+2n, ...}.

use std::collections::BTreeSet;

use serde::Serialize;

use super::{residue, Block, Direction, Tito};
use crate::error::{Error, Result};

/// Rounds of relaxation before the closure is declared divergent.
const MAX_ROUNDS: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct ShiftSet {
    pub finite: BTreeSet<i64>,
    pub tail: Option<i64>,
}

impl ShiftSet {
    pub fn is_empty(&self) -> bool {
        self.finite.is_empty() && self.tail.is_none()
    }

    pub fn contains(&self, d: i64) -> bool {
        self.finite.contains(&d) || self.tail.is_some_and(|t| d >= t)
    }

    /// Whether the set holds every admissible shift, `first` being the smallest.
    pub fn is_all(&self, first: i64) -> bool {
        self.tail == Some(first)
    }

    fn all(first: i64) -> ShiftSet {
        ShiftSet { finite: BTreeSet::new(), tail: Some(first) }
    }

    /// Drops finite members covered by the tail and lowers the tail over
    /// finite members directly below it.
    fn normalize(&mut self, n: i64) {
        if let Some(mut t) = self.tail {
            self.finite.retain(|&d| d < t);
            while self.finite.remove(&(t - n)) {
                t -= n;
            }
            self.tail = Some(t);
        }
    }

    fn union_with(&mut self, other: &ShiftSet, n: i64) -> bool {
        let before = self.clone();
        self.finite.extend(other.finite.iter().copied());
        self.tail = match (self.tail, other.tail) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        self.normalize(n);
        *self != before
    }

    /// Minkowski sum {d + e}.
    fn sum(&self, other: &ShiftSet, n: i64) -> ShiftSet {
        if self.is_empty() || other.is_empty() {
            return ShiftSet::default();
        }
        let mut out = ShiftSet::default();
        for d in &self.finite {
            for e in &other.finite {
                out.finite.insert(d + e);
            }
        }
        let min = |s: &ShiftSet| s.finite.iter().next().copied().or(s.tail).unwrap();
        let mut tail = None::<i64>;
        if let Some(t) = self.tail {
            tail = Some(t + min(other));
        }
        if let Some(t) = other.tail {
            let c = t + min(self);
            tail = Some(tail.map_or(c, |x| x.min(c)));
        }
        out.tail = tail;
        out.normalize(n);
        out
    }

    fn is_subset(&self, other: &ShiftSet) -> bool {
        let tail_ok = match (self.tail, other.tail) {
            (None, _) => true,
            (Some(_), None) => false,
            (Some(a), Some(b)) => b <= a,
        };
        tail_ok && self.finite.iter().all(|&d| other.contains(d))
    }
}

/// Direction bit per residue plus the shift set of every ordered residue pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdEncoding {
    pub n: usize,
    pub dir: Vec<Direction>,
    /// Row-major over (i, j), residues 0..n.
    pub pairs: Vec<ShiftSet>,
}

fn first_shift(n: usize, i: usize, j: usize) -> i64 {
    let r = (j as i64 - i as i64).rem_euclid(n as i64);
    if r == 0 {
        n as i64
    } else {
        r
    }
}

impl ThresholdEncoding {
    pub fn empty(n: usize) -> ThresholdEncoding {
        ThresholdEncoding { n, dir: vec![Direction::Waxing; n], pairs: vec![ShiftSet::default(); n * n] }
    }

    pub fn get(&self, i: usize, j: usize) -> &ShiftSet {
        &self.pairs[i * self.n + j]
    }

    /// Whether <a,b> (a < b) is in the encoded inversion set.
    pub fn contains(&self, a: i64, b: i64) -> bool {
        a < b && self.get(residue(a, self.n), residue(b, self.n)).contains(b - a)
    }

    /// a ≺ b in the encoded order.
    pub fn lt(&self, a: i64, b: i64) -> bool {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => !self.contains(a, b),
            std::cmp::Ordering::Greater => self.contains(b, a),
            std::cmp::Ordering::Equal => false,
        }
    }

    pub fn insert_pair(&mut self, a: i64, b: i64) {
        assert!(a < b);
        let (i, j) = (residue(a, self.n), residue(b, self.n));
        let n = self.n as i64;
        let s = &mut self.pairs[i * self.n + j];
        s.finite.insert(b - a);
        s.normalize(n);
    }

    pub fn union_with(&mut self, other: &ThresholdEncoding) {
        let n = self.n as i64;
        for (s, o) in self.pairs.iter_mut().zip(&other.pairs) {
            s.union_with(o, n);
        }
    }

    pub fn is_subset(&self, other: &ThresholdEncoding) -> bool {
        self.pairs.iter().zip(&other.pairs).all(|(s, o)| s.is_subset(o))
    }

    /// Closure under <a,b>,<b,c> => <a,c>. An imaginary shift for residue i
    /// makes the whole class waning, so it is promoted to every multiple of n
    /// at once; this is valid when the closure is known to be a TITO
    /// inversion set, as for unions of TITO inversion sets and for the
    /// translates of a finite inversion set.
    pub fn closed(&self) -> Result<ThresholdEncoding> {
        let n = self.n;
        let ni = n as i64;
        let mut t = self.clone();
        for _ in 0..MAX_ROUNDS {
            let mut changed = false;
            for i in 0..n {
                let s = &mut t.pairs[i * n + i];
                if !s.is_empty() && !s.is_all(ni) {
                    *s = ShiftSet::all(ni);
                    changed = true;
                }
            }
            for i in 0..n {
                for j in 0..n {
                    if t.pairs[i * n + j].is_empty() {
                        continue;
                    }
                    for k in 0..n {
                        if t.pairs[i * n + k].is_all(first_shift(n, i, k)) {
                            continue;
                        }
                        let s = t.pairs[i * n + j].sum(&t.pairs[j * n + k], ni);
                        changed |= t.pairs[i * n + k].union_with(&s, ni);
                    }
                }
            }
            if !changed {
                for i in 0..n {
                    t.dir[i] = if t.get(i, i).is_empty() { Direction::Waxing } else { Direction::Waning };
                }
                return Ok(t);
            }
        }
        Err(Error::InconsistentEncoding("closure did not converge".into()))
    }

    /// Largest shift mentioned anywhere; bounds searches over representatives.
    fn max_shift(&self) -> i64 {
        self.pairs.iter().flat_map(|s| s.finite.iter().copied().chain(s.tail)).max().unwrap_or(0)
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Pair<'a> {
            from: usize,
            to: usize,
            finite: &'a BTreeSet<i64>,
            tail: Option<i64>,
        }
        let class = |r: usize| if r == 0 { self.n } else { r };
        let mut dir = vec![Direction::Waxing; self.n];
        for r in 0..self.n {
            dir[class(r) - 1] = self.dir[r];
        }
        let mut pairs = Vec::new();
        for i in 1..=self.n {
            for j in 1..=self.n {
                let s = self.get(i % self.n, j % self.n);
                pairs.push(Pair { from: i, to: j, finite: &s.finite, tail: s.tail });
            }
        }
        serde_json::json!({ "n": self.n, "dir": dir, "pairs": pairs })
    }
}

pub fn encode(t: &Tito) -> ThresholdEncoding {
    let n = t.n();
    let ni = n as i64;
    let mut enc = ThresholdEncoding::empty(n);
    for i in 0..n {
        let (bi, p) = t.place[i];
        let block = &t.blocks()[bi];
        enc.dir[i] = block.direction;
        for j in 0..n {
            let (bj, q) = t.place[j];
            let first = first_shift(n, i, j);
            let set = if bi != bj {
                if bj < bi {
                    ShiftSet::all(first)
                } else {
                    ShiftSet::default()
                }
            } else {
                let k = block.len() as i64;
                let (p, q) = (p as i64, q as i64);
                let (wp, wq) = (block.window[p as usize], block.window[q as usize]);
                let shift = |m: i64| wq - wp + m * ni;
                let m_low = (wp - wq).div_euclid(ni) + 1;
                match block.direction {
                    Direction::Waxing => {
                        let m_max = (p - q - 1).div_euclid(k);
                        ShiftSet { finite: (m_low..=m_max).map(shift).collect(), tail: None }
                    }
                    Direction::Waning => {
                        let m_min = (q - p).div_euclid(k) + 1;
                        ShiftSet { finite: BTreeSet::new(), tail: Some(shift(m_min.max(m_low))) }
                    }
                }
            };
            let mut set = set;
            set.normalize(ni);
            enc.pairs[i * n + j] = set;
        }
    }
    enc
}

/// Reconstructs window notation from a closed encoding: blocks from the
/// cross-class relations, then each window by locating one representative of
/// every residue strictly between x and x ± n.
pub fn decode(enc: &ThresholdEncoding) -> Result<Tito> {
    let n = enc.n;
    let ni = n as i64;
    let bad = |msg: String| Error::InconsistentEncoding(msg);
    for i in 0..n {
        for j in 0..n {
            let s = enc.get(i, j);
            let first = first_shift(n, i, j);
            if s.finite.iter().chain(s.tail.iter()).any(|&d| d < first || (d - first) % ni != 0) {
                return Err(bad(format!("shift of the wrong residue for pair ({i},{j})")));
            }
        }
    }
    let mut dir = vec![Direction::Waxing; n];
    for (i, d) in dir.iter_mut().enumerate() {
        let s = enc.get(i, i);
        if s.is_all(ni) {
            *d = Direction::Waning;
        } else if !s.is_empty() {
            return Err(bad(format!("residue {i} is neither waxing nor waning")));
        }
    }
    // before[i][j]: class i lies entirely before class j.
    let before = |i: usize, j: usize| enc.get(j, i).is_all(first_shift(n, j, i)) && enc.get(i, j).is_empty();
    let mut group: Vec<usize> = (0..n).collect();
    for i in 0..n {
        for j in 0..n {
            if i != j && !before(i, j) && !before(j, i) {
                let (gi, gj) = (group[i], group[j]);
                if gi != gj {
                    let (lo, hi) = (gi.min(gj), gi.max(gj));
                    for g in group.iter_mut() {
                        if *g == hi {
                            *g = lo;
                        }
                    }
                }
            }
        }
    }
    let mut reps: Vec<usize> = group.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    for i in 0..n {
        for j in 0..n {
            if group[i] != group[j] && before(i, j) != before(group[i], group[j]) {
                return Err(bad("block order is not constant across residues".into()));
            }
        }
    }
    let all_reps = reps.clone();
    reps.sort_by_key(|&g| all_reps.iter().filter(|&&h| h != g && before(h, g)).count());
    for w in reps.windows(2) {
        if !before(w[0], w[1]) {
            return Err(bad("block order is not total".into()));
        }
    }
    let bound = enc.max_shift() / ni + 3;
    let mut blocks = Vec::new();
    for &g in &reps {
        let members: Vec<usize> = (0..n).filter(|&i| group[i] == g).collect();
        let d = dir[members[0]];
        if members.iter().any(|&i| dir[i] != d) {
            return Err(bad("a block mixes waxing and waning residues".into()));
        }
        let x0 = members[0] as i64;
        let end = match d {
            Direction::Waxing => x0 + ni,
            Direction::Waning => x0 - ni,
        };
        let mut window = vec![x0];
        for &s in &members[1..] {
            let found: Vec<i64> =
                (-bound..=bound).map(|m| s as i64 + m * ni).filter(|&y| enc.lt(x0, y) && enc.lt(y, end)).collect();
            match found.as_slice() {
                [y] => window.push(*y),
                _ => return Err(bad(format!("no unique representative of residue {s} in the window of {x0}"))),
            }
        }
        window[1..].sort_by(|&x, &y| if enc.lt(x, y) { std::cmp::Ordering::Less } else { std::cmp::Ordering::Greater });
        blocks.push(Block::new(d, window));
    }
    let t = Tito::new(n, blocks)?;
    if encode(&t).pairs != enc.pairs {
        return Err(bad("encoding is not realized by any TITO".into()));
    }
    Ok(t)
}

/// Smallest TITO whose inversion set contains every translate of the given
/// pairs. The pairs must be the inversions of a total order (or a union of
/// TITO inversion sets) for the result to exist.
pub fn closure_of_translates(n: usize, pairs: impl IntoIterator<Item = (i64, i64)>) -> Result<Tito> {
    let mut enc = ThresholdEncoding::empty(n);
    for (a, b) in pairs {
        if a >= b {
            return Err(Error::OutOfRange(format!("pair ({a},{b}) is not increasing")));
        }
        enc.insert_pair(a, b);
    }
    decode(&enc.closed()?)
}
