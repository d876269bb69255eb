use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use super::check_arc_sn;
use crate::arc::Arc;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ShardConstraint {
    /// x_i = x_j
    Equal(usize, usize),
    /// x_i < x_j
    Less(usize, usize),
}

/// Polyhedral cone inside the hyperplane x_a = x_b cut out by one arc.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Shard {
    pub n: usize,
    pub constraints: Vec<ShardConstraint>,
}

pub fn shard(arc: &Arc, n: usize) -> Result<Shard> {
    check_arc_sn(arc, n)?;
    let (a, b) = (arc.a as usize, arc.b as usize);
    let mut constraints = vec![ShardConstraint::Equal(a, b)];
    for m in a + 1..b {
        if arc.left.contains(&(m as i64)) {
            constraints.push(ShardConstraint::Less(m, a));
        } else {
            constraints.push(ShardConstraint::Less(a, m));
        }
    }
    Ok(Shard { n, constraints })
}

impl Shard {
    /// Exact membership test; `point[i - 1]` is the coordinate x_i.
    pub fn contains(&self, point: &[Ratio<i64>]) -> Result<bool> {
        if point.len() != self.n {
            return Err(Error::MixedSizes(self.n, point.len()));
        }
        let x = |i: usize| point[i - 1];
        Ok(self.constraints.iter().all(|c| match *c {
            ShardConstraint::Equal(i, j) => x(i) == x(j),
            ShardConstraint::Less(i, j) => x(i) < x(j),
        }))
    }
}
