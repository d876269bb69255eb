//! Total orders of the integers that differ from the standard order in
//! finitely many pairs.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arc::Arc;
use crate::error::{Error, Result};
use crate::pairs::{self, PairSet};
use crate::sn::check_noncrossing;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct TotalOrder {
    invs: PairSet,
}

fn ground_of(invs: &PairSet) -> Vec<i64> {
    match (invs.iter().map(|p| p.0).min(), invs.iter().map(|p| p.1).max()) {
        (Some(lo), Some(hi)) => (lo..=hi).collect(),
        _ => Vec::new(),
    }
}

impl TotalOrder {
    pub fn standard() -> Self {
        TotalOrder::default()
    }

    pub fn from_inversions(invs: impl IntoIterator<Item = (i64, i64)>) -> Result<Self> {
        let invs: PairSet = invs.into_iter().collect();
        if let Some(&(a, b)) = invs.iter().find(|(a, b)| a >= b) {
            return Err(Error::OutOfRange(format!("pair ({a},{b}) is not increasing")));
        }
        if !pairs::is_biclosed(&ground_of(&invs), &invs) {
            return Err(Error::NotBiclosed(format!("{invs:?}")));
        }
        Ok(TotalOrder { invs })
    }

    /// The order listing `word` (a rearrangement of start..start+len) and
    /// agreeing with the standard order elsewhere.
    pub fn from_word(start: i64, word: &[i64]) -> Result<Self> {
        let end = start + word.len() as i64;
        let mut sorted = word.to_vec();
        sorted.sort_unstable();
        if sorted != (start..end).collect::<Vec<_>>() {
            return Err(Error::OutOfRange(format!("{word:?} is not a rearrangement of {start}..{end}")));
        }
        let mut invs = PairSet::new();
        for (i, &x) in word.iter().enumerate() {
            for &y in &word[i + 1..] {
                if x > y {
                    invs.insert((y, x));
                }
            }
        }
        Ok(TotalOrder { invs })
    }

    pub fn inversions(&self) -> &PairSet {
        &self.invs
    }

    pub fn is_inversion(&self, a: i64, b: i64) -> bool {
        self.invs.contains(&(a, b))
    }

    /// Smallest interval containing every inverted value.
    pub fn window(&self) -> Option<(i64, i64)> {
        let g = ground_of(&self.invs);
        Some((*g.first()?, *g.last()?))
    }

    pub fn lt(&self, x: i64, y: i64) -> bool {
        match x.cmp(&y) {
            std::cmp::Ordering::Less => !self.invs.contains(&(x, y)),
            std::cmp::Ordering::Greater => self.invs.contains(&(y, x)),
            std::cmp::Ordering::Equal => false,
        }
    }

    /// The values lo..=hi listed in this order.
    pub fn word(&self, lo: i64, hi: i64) -> Vec<i64> {
        let mut w: Vec<i64> = (lo..=hi).collect();
        w.sort_by(|&x, &y| match (x == y, self.lt(x, y)) {
            (true, _) => std::cmp::Ordering::Equal,
            (false, true) => std::cmp::Ordering::Less,
            (false, false) => std::cmp::Ordering::Greater,
        });
        w
    }

    pub fn leq(&self, other: &TotalOrder) -> bool {
        self.invs.is_subset(&other.invs)
    }

    /// Left multiplication by the transposition of the values a and b.
    pub fn left_transpose(&self, a: i64, b: i64) -> TotalOrder {
        let (lo, hi) = match self.window() {
            Some((l, h)) => (l.min(a).min(b), h.max(a).max(b)),
            None => (a.min(b), a.max(b)),
        };
        let w: Vec<i64> = self
            .word(lo, hi)
            .into_iter()
            .map(|v| {
                if v == a {
                    b
                } else if v == b {
                    a
                } else {
                    v
                }
            })
            .collect();
        TotalOrder::from_word(lo, &w).unwrap()
    }
}

impl fmt::Display for TotalOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.window() {
            None => write!(f, "id"),
            Some((lo, hi)) => {
                let parts: Vec<String> = self.word(lo, hi).iter().map(|v| v.to_string()).collect();
                write!(f, "{lo}:{}", parts.join(","))
            }
        }
    }
}

impl FromStr for TotalOrder {
    type Err = Error;

    /// `id`, or `start:w1,w2,...` listing start..start+len in order.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "id" {
            return Ok(TotalOrder::standard());
        }
        let (start, word) = s.split_once(':').ok_or_else(|| Error::Parse(format!("expected start:word, got {s:?}")))?;
        let start = start.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad start {start:?}")))?;
        TotalOrder::from_word(start, &word_in_order(word)?)
    }
}

fn word_in_order(s: &str) -> Result<Vec<i64>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<i64>().map_err(|_| Error::Parse(format!("bad integer {t:?}"))))
        .collect()
}

pub fn lt_total(t: &TotalOrder, a: i64, b: i64) -> bool {
    t.lt(a, b)
}

pub fn join_tot(ts: &[TotalOrder]) -> TotalOrder {
    let union: PairSet = ts.iter().flat_map(|t| t.invs.iter().copied()).collect();
    TotalOrder { invs: pairs::closure(&ground_of(&union), &union) }
}

/// There is no top total order, so the meet of an empty list is rejected.
pub fn meet_tot(ts: &[TotalOrder]) -> Result<TotalOrder> {
    let (first, rest) = ts.split_first().ok_or_else(|| Error::PreconditionViolated("empty meet in Tot".into()))?;
    let mut inter = first.invs.clone();
    for t in rest {
        inter = inter.intersection(&t.invs).copied().collect();
    }
    Ok(TotalOrder { invs: pairs::interior(&ground_of(&inter), &inter) })
}

/// Lower walls (a,b), a < b: b immediately precedes a.
pub fn lower_walls_tot(t: &TotalOrder) -> Vec<(i64, i64)> {
    let Some((lo, hi)) = t.window() else { return Vec::new() };
    t.word(lo, hi).windows(2).filter(|w| w[0] > w[1]).map(|w| (w[1], w[0])).collect()
}

pub fn lower_arcs_tot(t: &TotalOrder) -> Vec<Arc> {
    lower_walls_tot(t)
        .into_iter()
        .map(|(a, b)| Arc::from_left(a, b, (a + 1..b).filter(|&x| t.lt(x, b))).unwrap())
        .collect()
}

pub fn ji_from_arc_tot(arc: &Arc) -> TotalOrder {
    let mut w: Vec<i64> = arc.left.iter().copied().collect();
    w.push(arc.b);
    w.push(arc.a);
    w.extend(arc.right.iter().copied());
    TotalOrder::from_word(arc.a, &w).expect("arc order is a rearrangement of [a,b]")
}

pub fn join_of_noncrossing_tot(arcs: &[Arc]) -> Result<TotalOrder> {
    check_noncrossing(arcs)?;
    Ok(join_tot(&arcs.iter().map(ji_from_arc_tot).collect::<Vec<_>>()))
}

pub fn canonical_join_rep_tot(t: &TotalOrder) -> Vec<Arc> {
    lower_arcs_tot(t)
}

/// An element covered by `high` and above `low`, obtained by undoing the
/// inversion of N(high) \ N(low) that is closest together in `high`.
pub fn find_cover_below(low: &TotalOrder, high: &TotalOrder, a: i64, b: i64) -> Result<TotalOrder> {
    if !low.leq(high) {
        return Err(Error::PreconditionViolated("low is not below high".into()));
    }
    if !high.lt(b, a) || !low.lt(a, b) {
        return Err(Error::PreconditionViolated(format!("need {b} before {a} in high and {a} before {b} in low")));
    }
    let (lo, hi) = high.window().expect("high has an inversion");
    let word = high.word(lo, hi);
    let pos = |v: i64| word.iter().position(|&w| w == v).unwrap();
    let (x, y) = high.invs.difference(&low.invs).copied().min_by_key(|&(x, y)| (pos(x) - pos(y), x, y)).unwrap();
    Ok(high.left_transpose(x, y))
}

/// All total orders of `lo..=hi` (identity outside), as inversion sets.
pub fn all_orders_on(lo: i64, hi: i64) -> Vec<TotalOrder> {
    let n = (hi - lo + 1).max(0) as usize;
    crate::sn::all_permutations(n)
        .into_iter()
        .map(|p| {
            let w: Vec<i64> = p.one_line().iter().map(|&v| v as i64 + lo - 1).collect();
            TotalOrder::from_word(lo, &w).unwrap()
        })
        .collect()
}

pub fn inversions_json(t: &TotalOrder) -> serde_json::Value {
    serde_json::to_value(t.invs.iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>()).unwrap()
}
