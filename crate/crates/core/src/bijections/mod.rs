//! The three weight-tracking bijections that reduce the U-class to the
//! Q-class and peel one column off Q.
//!
//! - [`phi`]: U-class → P-class × partitions into distinct parts `< N_1`.
//! - [`psi`]: P-class → Q-class × partitions into at most `N_{k-1}` parts.
//! - [`chi`]: Q-class with profile `N` → Q-class with profile `N - (1,…,1)`.
//!
//! Every move edits a marked working copy and keeps the marks of the parts
//! it touches. On exit the carried marks are compared with a fresh Gordon
//! marking of the result, and a disagreement is reported as
//! [`Error::MarkingMismatch`].

mod first;
mod second;
mod third;

pub use first::{
    beta_closed_form, first_dilation, first_reduction, phi, phi_inv, phi_inv_traced, phi_traced, DilationType,
    PhiOutput,
};
pub use second::{
    psi, psi_inv, psi_inv_traced, psi_traced, second_dilation, second_reduction, second_reduction_at, PsiOutput,
};
pub use third::{chi, chi_inv};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::marking::{gordon_mark, MarkedPart, MarkedProfile};
use crate::overpartition::{ClassParams, Overpartition, Part};

fn parse_parts(s: &str) -> Result<Vec<u32>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<u32>().ok().filter(|&v| v > 0).ok_or_else(|| Error::Parse {
                token: t.to_string(),
                reason: "expected a positive integer",
            })
        })
        .collect()
}

fn join(parts: &[u32], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let s: Vec<String> = parts.iter().map(u32::to_string).collect();
    f.write_str(&s.join(","))
}

/// A partition into distinct parts, stored decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct DistinctPartition(Vec<u32>);

impl DistinctPartition {
    /// Sorts the parts decreasingly; rejects zero and repeated parts.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not a partition into distinct positive parts"
            )));
        }
        Ok(DistinctPartition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u64 {
        self.0.iter().map(|&v| u64::from(v)).sum()
    }
}

impl TryFrom<Vec<u32>> for DistinctPartition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        DistinctPartition::new(v)
    }
}

impl From<DistinctPartition> for Vec<u32> {
    fn from(d: DistinctPartition) -> Vec<u32> {
        d.0
    }
}

impl fmt::Display for DistinctPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        join(&self.0, f)
    }
}

impl FromStr for DistinctPartition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        DistinctPartition::new(parse_parts(s)?)
    }
}

/// An ordinary partition, stored weakly decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct BoundedPartition(Vec<u32>);

impl BoundedPartition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(BoundedPartition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.0.iter().map(|&v| u64::from(v)).sum()
    }
}

impl TryFrom<Vec<u32>> for BoundedPartition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        BoundedPartition::new(v)
    }
}

impl From<BoundedPartition> for Vec<u32> {
    fn from(d: BoundedPartition) -> Vec<u32> {
        d.0
    }
}

impl fmt::Display for BoundedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        join(&self.0, f)
    }
}

impl FromStr for BoundedPartition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        BoundedPartition::new(parse_parts(s)?)
    }
}

/// A marked working copy whose marks are carried along by the moves.
#[derive(Debug, Clone)]
struct Board {
    cells: Vec<MarkedPart>,
}

impl Board {
    fn new(lambda: &Overpartition) -> Self {
        Board {
            cells: gordon_mark(lambda).entries().to_vec(),
        }
    }

    fn value(&self, idx: usize) -> u32 {
        self.cells[idx].part.value
    }

    fn overlined(&self, idx: usize) -> bool {
        self.cells[idx].part.overlined
    }

    fn mark(&self, idx: usize) -> u32 {
        self.cells[idx].mark
    }

    fn set_value(&mut self, idx: usize, v: u32) {
        self.cells[idx].part.value = v;
    }

    fn set_overlined(&mut self, idx: usize, o: bool) {
        self.cells[idx].part.overlined = o;
    }

    fn part(&self, idx: usize) -> Part {
        self.cells[idx].part
    }

    fn indices(&self) -> std::ops::Range<usize> {
        0..self.cells.len()
    }

    fn with_mark(&self, r: u32) -> impl Iterator<Item = usize> + '_ {
        self.indices().filter(move |&j| self.mark(j) == r)
    }

    fn with_value(&self, v: u32) -> impl Iterator<Item = usize> + '_ {
        self.indices().filter(move |&j| self.value(j) == v)
    }

    fn marks_of_value(&self, v: u32) -> Vec<u32> {
        self.with_value(v).map(|j| self.mark(j)).collect()
    }

    fn has_value(&self, v: u32) -> bool {
        self.with_value(v).next().is_some()
    }

    fn has_part(&self, p: Part) -> bool {
        self.indices().any(|j| self.part(j) == p)
    }

    /// `r`-marked cells in increasing part order.
    fn row(&self, r: u32) -> Vec<usize> {
        let mut row: Vec<usize> = self.with_mark(r).collect();
        row.sort_by_key(|&j| self.part(j));
        row
    }

    /// Builds the result and checks the carried marks.
    fn finish(self, op: &'static str) -> Result<Overpartition> {
        let lambda = Overpartition::new(self.cells.iter().map(|c| c.part).collect())?;
        let key = |c: &MarkedPart| (c.part, c.mark);
        let mut carried = self.cells;
        carried.sort_by_key(key);
        let mut fresh = gordon_mark(&lambda).entries().to_vec();
        fresh.sort_by_key(key);
        if carried != fresh {
            return Err(Error::MarkingMismatch(op));
        }
        Ok(lambda)
    }
}

/// Profile of a class member; fails when marks exceed `k - 1`.
fn profile_of(lambda: &Overpartition, p: ClassParams) -> Result<MarkedProfile> {
    gordon_mark(lambda).profile(p.k())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn auxiliary_partitions() {
        let d: DistinctPartition = "1,6,2".parse().unwrap();
        assert_eq!(d.to_string(), "6,2,1");
        assert_eq!(d.weight(), 9);
        assert!("3,3".parse::<DistinctPartition>().is_err());
        let b: BoundedPartition = "1 3 3 7 3".parse().unwrap();
        assert_eq!(b.to_string(), "7,3,3,3,1");
        assert_eq!(serde_json::to_string(&b).unwrap(), "[7,3,3,3,1]");
        assert!(serde_json::from_str::<DistinctPartition>("[2,2]").is_err());
        assert!("0".parse::<BoundedPartition>().is_err());
    }
}
