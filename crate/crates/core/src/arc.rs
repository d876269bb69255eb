//! Arcs on the integers: endpoints a < b and a split of the values strictly
//! between them into a left set and a right set.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Arc {
    pub a: i64,
    pub b: i64,
    pub left: BTreeSet<i64>,
    pub right: BTreeSet<i64>,
}

impl Arc {
    pub fn new(a: i64, b: i64, left: BTreeSet<i64>, right: BTreeSet<i64>) -> Result<Self> {
        if a >= b {
            return Err(Error::OutOfRange(format!("arc endpoints {a} >= {b}")));
        }
        if left.intersection(&right).next().is_some() {
            return Err(Error::OutOfRange(format!("left and right sets of ({a},{b}) overlap")));
        }
        let covered = left.len() + right.len();
        if covered as i64 != b - a - 1 || left.iter().chain(right.iter()).any(|&x| x <= a || x >= b) {
            return Err(Error::OutOfRange(format!(
                "left and right sets must partition the values strictly between {a} and {b}"
            )));
        }
        Ok(Arc { a, b, left, right })
    }

    /// Builds an arc from the left set alone; everything else between the
    /// endpoints goes right.
    pub fn from_left(a: i64, b: i64, left: impl IntoIterator<Item = i64>) -> Result<Self> {
        let left: BTreeSet<i64> = left.into_iter().collect();
        let right = (a + 1..b).filter(|x| !left.contains(x)).collect();
        Arc::new(a, b, left, right)
    }

    pub fn span(&self) -> i64 {
        self.b - self.a
    }

    pub fn translate(&self, k: i64) -> Arc {
        Arc {
            a: self.a + k,
            b: self.b + k,
            left: self.left.iter().map(|x| x + k).collect(),
            right: self.right.iter().map(|x| x + k).collect(),
        }
    }

    fn side_hits(&self, other: &Arc, mine: &BTreeSet<i64>, theirs: &BTreeSet<i64>) -> bool {
        mine.intersection(theirs).next().is_some()
            || theirs.contains(&self.a)
            || theirs.contains(&self.b)
            || mine.contains(&other.a)
            || mine.contains(&other.b)
    }

    /// Two distinct arcs cross when they share an endpoint of the same kind,
    /// or when each passes on the wrong side of the other somewhere.
    pub fn crosses(&self, other: &Arc) -> bool {
        if self == other {
            return false;
        }
        if self.a == other.a || self.b == other.b {
            return true;
        }
        self.side_hits(other, &self.left, &other.right) && self.side_hits(other, &self.right, &other.left)
    }

    pub fn is_subarc_of(&self, other: &Arc) -> bool {
        other.a <= self.a
            && self.b <= other.b
            && self.left.iter().all(|x| other.left.contains(x))
            && self.right.iter().all(|x| other.right.contains(x))
    }
}

fn fmt_set(f: &mut fmt::Formatter<'_>, s: &BTreeSet<i64>) -> fmt::Result {
    let parts: Vec<String> = s.iter().map(|x| x.to_string()).collect();
    write!(f, "{}", parts.join(" "))
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{}|", self.a, self.b)?;
        fmt_set(f, &self.left)?;
        write!(f, "|")?;
        fmt_set(f, &self.right)?;
        write!(f, ")")
    }
}

pub(crate) fn parse_int_list(s: &str) -> Result<BTreeSet<i64>> {
    s.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<i64>().map_err(|_| Error::Parse(format!("bad integer {t:?}"))))
        .collect()
}

/// Parses the body `a,b|l...|r...` shared by plain and wrapped arcs.
pub(crate) fn parse_arc_body(body: &str) -> Result<Arc> {
    let parts: Vec<&str> = body.split('|').collect();
    if parts.len() != 3 {
        return Err(Error::Parse(format!("expected a,b|left|right, got {body:?}")));
    }
    let ends: Vec<&str> = parts[0].split(',').map(str::trim).collect();
    if ends.len() != 2 {
        return Err(Error::Parse(format!("expected two endpoints in {:?}", parts[0])));
    }
    let a = ends[0].parse::<i64>().map_err(|_| Error::Parse(format!("bad endpoint {:?}", ends[0])))?;
    let b = ends[1].parse::<i64>().map_err(|_| Error::Parse(format!("bad endpoint {:?}", ends[1])))?;
    Arc::new(a, b, parse_int_list(parts[1])?, parse_int_list(parts[2])?)
}

impl FromStr for Arc {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let body = s
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("arc must look like (a,b|l|r), got {s:?}")))?;
        parse_arc_body(body)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arc(s: &str) -> Arc {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display_round_trip() {
        let a = arc("(1,5|2|3 4)");
        assert_eq!(a.to_string(), "(1,5|2|3 4)");
        assert_eq!(arc("(3,4||)").to_string(), "(3,4||)");
        assert!("(1,4|2|2 3)".parse::<Arc>().is_err());
        assert!("(1,4|2|)".parse::<Arc>().is_err());
    }

    #[test]
    fn crossing_examples() {
        // Same left endpoint always crosses.
        assert!(arc("(1,3|2|)").crosses(&arc("(1,2||)")));
        // Nested on one side does not cross.
        assert!(!arc("(1,4|2 3|)").crosses(&arc("(2,3||)")));
        // One starts below the other and ends above it.
        assert!(arc("(1,3|2|)").crosses(&arc("(2,4|3|)")));
        assert!(arc("(2,4|3|)").crosses(&arc("(1,3|2|)")));
        // Starting below and staying below does not cross.
        assert!(!arc("(1,3||2)").crosses(&arc("(2,4|3|)")));
        // Sharing a point as left end of one and right end of the other is fine.
        assert!(!arc("(1,2||)").crosses(&arc("(2,3||)")));
    }

    #[test]
    fn subarc_examples() {
        assert!(arc("(2,3||)").is_subarc_of(&arc("(1,4|2|3)")));
        assert!(arc("(1,3|2|)").is_subarc_of(&arc("(1,4|2|3)")));
        assert!(!arc("(1,3||2)").is_subarc_of(&arc("(1,4|2|3)")));
    }
}
