//! Translation-invariant total orders (TITOs) of the integers: total orders
//! with a ≺ b iff a+n ≺ b+n.
//!
//! A TITO is stored in window notation: an ordered list of blocks, each a
//! window of integers with distinct residues mod n. A waxing window
//! `[x1,...,xk]` means x1 ≺ ... ≺ xk ≺ x1+n, a waning window `[~x1,...,xk]`
//! means x1 ≺ ... ≺ xk ≺ x1-n, and every element of an earlier block precedes
//! every element of a later one.

mod arcs;
mod encoding;

pub use arcs::{
    canonical_join_rep_tito, is_wrapped_arc, ji_case, ji_from_wrapped_arc, join_of_cyclic_collection,
    lower_wrapped_arcs, wrapped_cross, WrappedArc,
};
pub use encoding::{closure_of_translates, decode, encode, ShiftSet, ThresholdEncoding};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Waxing,
    Waning,
}

impl Direction {
    pub fn flipped(self) -> Direction {
        match self {
            Direction::Waxing => Direction::Waning,
            Direction::Waning => Direction::Waxing,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Block {
    pub direction: Direction,
    pub window: Vec<i64>,
}

impl Block {
    pub fn new(direction: Direction, window: Vec<i64>) -> Block {
        Block { direction, window }
    }

    pub fn waxing(window: Vec<i64>) -> Block {
        Block::new(Direction::Waxing, window)
    }

    pub fn waning(window: Vec<i64>) -> Block {
        Block::new(Direction::Waning, window)
    }

    pub fn len(&self) -> usize {
        self.window.len()
    }

    pub fn is_empty(&self) -> bool {
        self.window.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tito {
    n: usize,
    blocks: Vec<Block>,
    /// (block, index in window) for each residue 0..n.
    place: Vec<(usize, usize)>,
}

pub(crate) fn residue(x: i64, n: usize) -> usize {
    x.rem_euclid(n as i64) as usize
}

/// Slides a window to the representative whose entry sum lies in
/// [k(k+1)/2, k(k+1)/2 + n - 1].
fn canonical_window(n: usize, dir: Direction, window: &[i64]) -> Vec<i64> {
    let n = n as i64;
    let k = window.len() as i64;
    let lo = k * (k + 1) / 2;
    let s: i64 = window.iter().sum();
    // Number of single slides, each raising the sum by n.
    let steps = -(s - lo).div_euclid(n);
    let full = steps.div_euclid(k);
    let rest = steps.rem_euclid(k);
    let mut w: Vec<i64> = window.iter().map(|x| x + full * n).collect();
    for _ in 0..rest {
        match dir {
            Direction::Waxing => {
                let first = w.remove(0);
                w.push(first + n);
            }
            Direction::Waning => {
                let last = w.pop().unwrap();
                w.insert(0, last + n);
            }
        }
    }
    w
}

impl Tito {
    /// Validates the blocks and slides every window to canonical form.
    pub fn new(n: usize, blocks: Vec<Block>) -> Result<Tito> {
        if n == 0 {
            return Err(Error::InvalidWindows("n must be positive".into()));
        }
        let mut place = vec![None; n];
        let mut count = 0;
        for (bi, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidWindows("empty block".into()));
            }
            for (p, &x) in block.window.iter().enumerate() {
                let r = residue(x, n);
                if place[r].is_some() {
                    return Err(Error::InvalidWindows(format!("residue of {x} appears twice")));
                }
                place[r] = Some((bi, p));
                count += 1;
            }
        }
        if count != n {
            return Err(Error::InvalidWindows(format!("windows cover {count} residues, expected {n}")));
        }
        let blocks = blocks
            .into_iter()
            .map(|b| Block { window: canonical_window(n, b.direction, &b.window), direction: b.direction })
            .collect::<Vec<_>>();
        let mut place = vec![(0, 0); n];
        for (bi, block) in blocks.iter().enumerate() {
            for (p, &x) in block.window.iter().enumerate() {
                place[residue(x, n)] = (bi, p);
            }
        }
        Ok(Tito { n, blocks, place })
    }

    /// The standard order [1,2,...,n].
    pub fn standard(n: usize) -> Tito {
        Tito::new(n, vec![Block::waxing((1..=n as i64).collect())]).unwrap()
    }

    /// The full reversal [~n,...,2,1].
    pub fn reversal(n: usize) -> Tito {
        Tito::standard(n).reverse()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// Block index and position of x; positions increase along the order
    /// within a block.
    pub fn locate(&self, x: i64) -> (usize, i64) {
        let (bi, p) = self.place[residue(x, self.n)];
        let block = &self.blocks[bi];
        let k = block.len() as i64;
        let m = (x - block.window[p]) / self.n as i64;
        let pos = match block.direction {
            Direction::Waxing => p as i64 + m * k,
            Direction::Waning => p as i64 - m * k,
        };
        (bi, pos)
    }

    pub fn block_of(&self, x: i64) -> usize {
        self.place[residue(x, self.n)].0
    }

    pub fn lt(&self, a: i64, b: i64) -> bool {
        a != b && self.locate(a) < self.locate(b)
    }

    /// Whether the reflection index <a,b> (a < b) is an inversion: b ≺ a.
    pub fn is_inversion(&self, a: i64, b: i64) -> bool {
        a < b && self.lt(b, a)
    }

    /// Reverses the order: block sequence, every window, and every direction.
    pub fn reverse(&self) -> Tito {
        let blocks = self
            .blocks
            .iter()
            .rev()
            .map(|b| Block::new(b.direction.flipped(), b.window.iter().rev().copied().collect()))
            .collect();
        Tito::new(self.n, blocks).unwrap()
    }

    /// No two adjacent blocks are both waxing.
    pub fn is_widely_generated(&self) -> bool {
        !self.blocks.windows(2).any(|w| w[0].direction == Direction::Waxing && w[1].direction == Direction::Waxing)
    }

    /// The values lo..=hi listed in this order.
    pub fn word(&self, lo: i64, hi: i64) -> Vec<i64> {
        let mut w: Vec<i64> = (lo..=hi).collect();
        w.sort_by_key(|&x| self.locate(x));
        w
    }
}

impl fmt::Display for Tito {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.blocks {
            write!(f, "[")?;
            if b.direction == Direction::Waning {
                write!(f, "~")?;
            }
            let parts: Vec<String> = b.window.iter().map(|x| x.to_string()).collect();
            write!(f, "{}]", parts.join(","))?;
        }
        Ok(())
    }
}

/// Parses `BLOCK+` with `BLOCK = '[' '~'? INT (',' INT)* ']'`.
pub fn parse_windows(text: &str, n: usize) -> Result<Tito> {
    let mut blocks = Vec::new();
    let mut rest = text.trim();
    if rest.is_empty() {
        return Err(Error::Parse("empty window notation".into()));
    }
    while !rest.is_empty() {
        let body = rest.strip_prefix('[').ok_or_else(|| Error::Parse(format!("expected '[' at {rest:?}")))?;
        let close = body.find(']').ok_or_else(|| Error::Parse("unclosed '['".into()))?;
        let (inner, tail) = (body[..close].trim(), &body[close + 1..]);
        let (direction, inner) = match inner.strip_prefix('~') {
            Some(r) => (Direction::Waning, r.trim()),
            None => (Direction::Waxing, inner),
        };
        if inner.is_empty() {
            return Err(Error::InvalidWindows("empty block".into()));
        }
        let window = inner
            .split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad window entry {:?}", t.trim()))))
            .collect::<Result<Vec<_>>>()?;
        blocks.push(Block::new(direction, window));
        rest = tail.trim_start();
    }
    Tito::new(n, blocks)
}

pub fn format_windows(t: &Tito) -> String {
    t.to_string()
}

/// Builds a TITO from possibly non-canonical windows.
pub fn normalize_tito(n: usize, blocks: Vec<Block>) -> Result<Tito> {
    Tito::new(n, blocks)
}

pub fn lt_tito(t: &Tito, a: i64, b: i64) -> bool {
    t.lt(a, b)
}

pub fn reverse_tito(t: &Tito) -> Tito {
    t.reverse()
}

pub fn is_widely_generated_tito(t: &Tito) -> bool {
    t.is_widely_generated()
}

/// Class <a,b> = <a+kn,b+kn> of pairs a < b, stored with 1 <= a <= n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ReflectionIndex {
    pub a: i64,
    pub b: i64,
}

impl ReflectionIndex {
    pub fn new(a: i64, b: i64, n: usize) -> Result<ReflectionIndex> {
        if a >= b {
            return Err(Error::OutOfRange(format!("reflection index <{a},{b}> needs a < b")));
        }
        let shift = (a - 1).rem_euclid(n as i64) + 1 - a;
        Ok(ReflectionIndex { a: a + shift, b: b + shift })
    }

    pub fn is_imaginary(&self, n: usize) -> bool {
        residue(self.a, n) == residue(self.b, n)
    }

    pub fn parse(text: &str, n: usize) -> Result<ReflectionIndex> {
        let t = text.trim();
        let body = t
            .strip_prefix('<')
            .and_then(|r| r.strip_suffix('>'))
            .ok_or_else(|| Error::Parse(format!("reflection index must look like <a,b>, got {t:?}")))?;
        let (a, b) = body.split_once(',').ok_or_else(|| Error::Parse(format!("expected <a,b>, got {t:?}")))?;
        let a = a.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad integer {a:?}")))?;
        let b = b.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad integer {b:?}")))?;
        ReflectionIndex::new(a, b, n)
    }
}

impl fmt::Display for ReflectionIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{},{}>", self.a, self.b)
    }
}

pub fn inversion_contains(t: &Tito, ri: &ReflectionIndex) -> bool {
    t.is_inversion(ri.a, ri.b)
}

fn check_same_n(n: usize, ts: &[Tito]) -> Result<()> {
    match ts.iter().find(|t| t.n != n) {
        Some(t) => Err(Error::MixedSizes(n, t.n)),
        None => Ok(()),
    }
}

/// Join: the TITO whose inversion set is the closure of the union. The empty
/// join is the standard order.
pub fn join_tito(n: usize, ts: &[Tito]) -> Result<Tito> {
    check_same_n(n, ts)?;
    let mut table = ThresholdEncoding::empty(n);
    for t in ts {
        table.union_with(&encode(t));
    }
    decode(&table.closed()?)
}

/// Meet through the order-reversing involution. The empty meet is the full reversal.
pub fn meet_tito(n: usize, ts: &[Tito]) -> Result<Tito> {
    check_same_n(n, ts)?;
    let rev: Vec<Tito> = ts.iter().map(Tito::reverse).collect();
    Ok(join_tito(n, &rev)?.reverse())
}

pub fn leq_tito(x: &Tito, y: &Tito) -> Result<bool> {
    if x.n != y.n {
        return Err(Error::MixedSizes(x.n, y.n));
    }
    Ok(encode(x).is_subset(&encode(y)))
}

/// Lower walls: adjacent pairs y ≺· z inside a block with y > z, read
/// cyclically through x_{k+1} = x_1 ± n. A waning block of size one gives the
/// imaginary wall <a-n,a>.
pub fn lower_walls_tito(t: &Tito) -> Vec<ReflectionIndex> {
    let n = t.n as i64;
    let mut out = Vec::new();
    for block in &t.blocks {
        let w = &block.window;
        let wrap = match block.direction {
            Direction::Waxing => w[0] + n,
            Direction::Waning => w[0] - n,
        };
        for p in 0..w.len() {
            let y = w[p];
            let z = if p + 1 < w.len() { w[p + 1] } else { wrap };
            if y > z {
                out.push(ReflectionIndex::new(z, y, t.n).unwrap());
            }
        }
    }
    out.sort();
    out
}

/// The TITO covered by `t` that no longer has the wall `w` as an inversion.
pub fn flip_tito(t: &Tito, w: &ReflectionIndex) -> Result<Tito> {
    if !lower_walls_tito(t).contains(w) {
        return Err(Error::NotAWall(format!("{w} is not a lower wall of {t}")));
    }
    let n = t.n;
    let blocks = if w.is_imaginary(n) {
        t.blocks
            .iter()
            .map(|b| {
                if b.len() == 1 && residue(b.window[0], n) == residue(w.a, n) {
                    Block::waxing(b.window.clone())
                } else {
                    b.clone()
                }
            })
            .collect()
    } else {
        let (ra, rb, d) = (residue(w.a, n), residue(w.b, n), w.b - w.a);
        let swap = |x: i64| {
            let r = residue(x, n);
            if r == ra {
                x + d
            } else if r == rb {
                x - d
            } else {
                x
            }
        };
        t.blocks.iter().map(|b| Block::new(b.direction, b.window.iter().map(|&x| swap(x)).collect())).collect()
    };
    Tito::new(n, blocks)
}

#[cfg(test)]
mod tests;
