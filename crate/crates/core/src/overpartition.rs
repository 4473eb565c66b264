//! Overpartitions, their parts and the `(k, i)` class parameters.
//!
//! Parts are ordered `1̄ < 1 < 2̄ < 2 < …`. An [`Overpartition`] stores its
//! parts weakly decreasing in that order, so the overlined copy of a value
//! comes after its non-overlined copies. The text form mirrors the storage:
//! `"8,8,8~,5,1~"` is `8 + 8 + 8̄ + 5 + 1̄`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A single part: a positive integer, possibly overlined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Part {
    pub value: u32,
    pub overlined: bool,
}

impl Part {
    pub const fn plain(value: u32) -> Self {
        Part {
            value,
            overlined: false,
        }
    }

    pub const fn bar(value: u32) -> Self {
        Part { value, overlined: true }
    }

    pub const fn new(value: u32, overlined: bool) -> Self {
        Part { value, overlined }
    }
}

impl Ord for Part {
    fn cmp(&self, other: &Self) -> Ordering {
        self.value
            .cmp(&other.value)
            .then((!self.overlined).cmp(&!other.overlined))
    }
}

impl PartialOrd for Part {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.overlined {
            write!(f, "{}~", self.value)
        } else {
            write!(f, "{}", self.value)
        }
    }
}

impl FromStr for Part {
    type Err = Error;

    fn from_str(token: &str) -> Result<Self> {
        let (digits, overlined) = match token.strip_suffix('~') {
            Some(d) => (d, true),
            None => (token, false),
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse {
                token: token.to_string(),
                reason: "expected a positive integer optionally followed by `~`",
            });
        }
        let value: u32 = digits.parse().map_err(|_| Error::Parse {
            token: token.to_string(),
            reason: "value out of range",
        })?;
        if value == 0 {
            return Err(Error::ZeroPart);
        }
        Ok(Part { value, overlined })
    }
}

/// Parameters `(k, i)` with `k >= 2` and `1 <= i <= k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ClassParams {
    k: u32,
    i: u32,
}

impl ClassParams {
    pub fn new(k: u32, i: u32) -> Result<Self> {
        if k < 2 || i < 1 || i > k {
            return Err(Error::InvalidParams { k, i });
        }
        Ok(ClassParams { k, i })
    }

    pub fn k(self) -> u32 {
        self.k
    }

    pub fn i(self) -> u32 {
        self.i
    }

    /// `i` capped at `k - 1`; the classes built from marked profiles do not
    /// distinguish `i = k` from `i = k - 1`.
    pub fn i_capped(self) -> u32 {
        self.i.min(self.k - 1)
    }

    /// All valid parameter pairs with `2 <= k <= k_max`, ordered by `(k, i)`.
    pub fn all_up_to(k_max: u32) -> impl Iterator<Item = ClassParams> {
        (2..=k_max).flat_map(|k| (1..=k).map(move |i| ClassParams { k, i }))
    }
}

impl fmt::Display for ClassParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(k={}, i={})", self.k, self.i)
    }
}

/// An overpartition in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "RawOverpartition")]
pub struct Overpartition {
    parts: Vec<Part>,
}

#[derive(Deserialize)]
struct RawOverpartition {
    parts: Vec<Part>,
}

impl TryFrom<RawOverpartition> for Overpartition {
    type Error = Error;

    fn try_from(raw: RawOverpartition) -> Result<Self> {
        Overpartition::new(raw.parts)
    }
}

impl Overpartition {
    /// The empty overpartition of 0.
    pub fn empty() -> Self {
        Overpartition::default()
    }

    /// Canonicalizes `parts`, rejecting zero parts and repeated overlined parts.
    pub fn new(mut parts: Vec<Part>) -> Result<Self> {
        if parts.iter().any(|p| p.value == 0) {
            return Err(Error::ZeroPart);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        for w in parts.windows(2) {
            if w[0].overlined && w[0] == w[1] {
                return Err(Error::DuplicateOverline(w[0].value));
            }
        }
        Ok(Overpartition { parts })
    }

    /// Parts in canonical (weakly decreasing) order.
    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    /// Parts in increasing order `1̄ < 1 < 2̄ < …`.
    pub fn ascending(&self) -> impl DoubleEndedIterator<Item = Part> + ExactSizeIterator + '_ {
        self.parts.iter().rev().copied()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|p| u64::from(p.value)).sum()
    }

    /// Smallest part in the order `1̄ < 1 < …`.
    pub fn smallest(&self) -> Option<Part> {
        self.parts.last().copied()
    }

    /// `(f_t, f̄_t)`: number of non-overlined and overlined parts equal to `t`.
    pub fn frequency(&self, t: u32) -> (u32, u32) {
        self.parts.iter().filter(|p| p.value == t).fold(
            (0, 0),
            |(f, fb), p| {
                if p.overlined {
                    (f, fb + 1)
                } else {
                    (f + 1, fb)
                }
            },
        )
    }

    pub fn contains(&self, part: Part) -> bool {
        self.parts.binary_search_by(|p| part.cmp(p)).is_ok()
    }

    pub fn largest_value(&self) -> u32 {
        self.parts.first().map_or(0, |p| p.value)
    }

    /// Frequency table indexed by value: `table[t] = (f_t, f̄_t)`, with room
    /// for `t = largest + 1`.
    pub fn frequency_table(&self) -> Vec<(u32, u32)> {
        let mut table = vec![(0, 0); self.largest_value() as usize + 2];
        for p in &self.parts {
            let e = &mut table[p.value as usize];
            if p.overlined {
                e.1 += 1;
            } else {
                e.0 += 1;
            }
        }
        table
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("overpartition serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

impl fmt::Display for Overpartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, p) in self.parts.iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Overpartition {
    type Err = Error;

    /// Accepts comma and/or whitespace separated tokens like `"12,10~,8"`.
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(Part::from_str)
            .collect::<Result<Vec<_>>>()?;
        Overpartition::new(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn part_order_puts_overline_below() {
        assert!(Part::bar(1) < Part::plain(1));
        assert!(Part::plain(1) < Part::bar(2));
    }

    #[test]
    fn parse_canonicalizes() {
        let a: Overpartition = "3,1~,2,1".parse().unwrap();
        assert_eq!(a.to_string(), "3,2,1,1~");
        assert_eq!(a.weight(), 7);
        assert_eq!(a.frequency(1), (1, 1));
        let b: Overpartition = "1~ 3  2,1".parse().unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert_eq!("2~,2~".parse::<Overpartition>(), Err(Error::DuplicateOverline(2)));
        assert_eq!("0".parse::<Overpartition>(), Err(Error::ZeroPart));
        assert!(matches!("2,x".parse::<Overpartition>(), Err(Error::Parse { .. })));
        assert!("".parse::<Overpartition>().unwrap().is_empty());
    }

    #[test]
    fn json_round_trip() {
        let a: Overpartition = "5,3~,3,1~".parse().unwrap();
        let j = a.to_json().to_string();
        assert_eq!(
            j,
            r#"{"parts":[{"value":5,"overlined":false},{"value":3,"overlined":false},{"value":3,"overlined":true},{"value":1,"overlined":true}]}"#
        );
        assert_eq!(Overpartition::from_json(&j).unwrap(), a);
        assert!(
            Overpartition::from_json(r#"{"parts":[{"value":2,"overlined":true},{"value":2,"overlined":true}]}"#)
                .is_err()
        );
    }

    #[test]
    fn params_validated() {
        assert!(ClassParams::new(1, 1).is_err());
        assert!(ClassParams::new(3, 0).is_err());
        assert!(ClassParams::new(3, 4).is_err());
        assert_eq!(ClassParams::new(4, 4).unwrap().i_capped(), 3);
        assert_eq!(ClassParams::all_up_to(4).count(), 2 + 3 + 4);
    }
}
