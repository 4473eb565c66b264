//! Gordon markings.
//!
//! Parts are scanned in increasing order and each receives the smallest
//! positive mark not already used by a part of the same value and not used
//! by a part of the value just below. When the scanned value `v` has an
//! overlined copy in the overpartition, the smallest mark among the parts
//! of value `v - 1` is released again.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::overpartition::{ClassParams, Overpartition, Part};

/// A part together with its mark.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MarkedPart {
    pub part: Part,
    pub mark: u32,
}

impl Serialize for MarkedPart {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("MarkedPart", 3)?;
        st.serialize_field("value", &self.part.value)?;
        st.serialize_field("overlined", &self.part.overlined)?;
        st.serialize_field("mark", &self.mark)?;
        st.end()
    }
}

/// The Gordon marking of an overpartition. Entries are kept in increasing
/// part order; equal non-overlined parts appear in the order they were
/// marked, so their marks increase.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GordonMarking {
    entries: Vec<MarkedPart>,
}

/// Marks for parts given in increasing order.
fn marks_of_ascending(parts: &[Part]) -> Vec<u32> {
    let mut marks = Vec::with_capacity(parts.len());
    let mut below: Vec<u32> = Vec::new();
    let mut below_value = 0;
    for group in parts.chunk_by(|a, b| a.value == b.value) {
        let v = group[0].value;
        let mut forbidden: Vec<u32> = if below_value + 1 == v { below } else { Vec::new() };
        if group.iter().any(|p| p.overlined) {
            if let Some(pos) = (0..forbidden.len()).min_by_key(|&j| forbidden[j]) {
                forbidden.swap_remove(pos);
            }
        }
        let mut here: Vec<u32> = Vec::with_capacity(group.len());
        for _ in group {
            let mark = (1..)
                .find(|m| !here.contains(m) && !forbidden.contains(m))
                .expect("a free mark always exists");
            here.push(mark);
        }
        marks.extend_from_slice(&here);
        below = here;
        below_value = v;
    }
    marks
}

impl GordonMarking {
    pub fn compute(lambda: &Overpartition) -> Self {
        let parts: Vec<Part> = lambda.ascending().collect();
        let marks = marks_of_ascending(&parts);
        GordonMarking {
            entries: parts
                .into_iter()
                .zip(marks)
                .map(|(part, mark)| MarkedPart { part, mark })
                .collect(),
        }
    }

    /// Entries in increasing part order.
    pub fn entries(&self) -> &[MarkedPart] {
        &self.entries
    }

    pub fn overpartition(&self) -> Overpartition {
        Overpartition::new(self.entries.iter().map(|e| e.part).collect()).expect("marking holds a valid overpartition")
    }

    /// Largest mark, or 0 for the empty marking.
    pub fn max_mark(&self) -> u32 {
        self.entries.iter().map(|e| e.mark).max().unwrap_or(0)
    }

    /// Row `λ^(r)`: the `r`-marked parts in increasing order.
    pub fn row(&self, r: u32) -> Vec<Part> {
        self.entries.iter().filter(|e| e.mark == r).map(|e| e.part).collect()
    }

    /// All nonempty rows keyed by mark.
    pub fn rows(&self) -> BTreeMap<u32, Vec<Part>> {
        let mut rows: BTreeMap<u32, Vec<Part>> = BTreeMap::new();
        for e in &self.entries {
            rows.entry(e.mark).or_default().push(e.part);
        }
        rows
    }

    /// `N_r`, the number of `r`-marked parts.
    pub fn count(&self, r: u32) -> u32 {
        self.entries.iter().filter(|e| e.mark == r).count() as u32
    }

    /// `n_r = N_r - N_{r-1}` with `N_0 = 0`.
    pub fn n_r(&self, r: u32) -> i64 {
        let prev = if r <= 1 { 0 } else { self.count(r - 1) };
        i64::from(self.count(r)) - i64::from(prev)
    }

    /// `(N_1, ..., N_{k-1})`. Fails when some mark exceeds `k - 1`.
    pub fn profile(&self, k: u32) -> Result<MarkedProfile> {
        if self.max_mark() > k - 1 {
            return Err(Error::domain(
                "marks bounded by k-1",
                format!("marking uses mark {} but k = {k}", self.max_mark()),
            ));
        }
        MarkedProfile::new(k, (1..k).map(|r| self.count(r)).collect())
    }

    /// Plain-text grid: one line per mark, largest mark on top, one column
    /// per value from 1 to the largest value.
    pub fn grid(&self) -> String {
        let top = self.max_mark();
        let width = self.entries.iter().map(|e| e.part.value).max().unwrap_or(0) as usize;
        let label_width = top.to_string().len();
        let mut cells = vec![vec![String::new(); width]; top as usize];
        for e in &self.entries {
            cells[(e.mark - 1) as usize][(e.part.value - 1) as usize] = e.part.to_string();
        }
        let col_width: Vec<usize> = (0..width)
            .map(|c| {
                cells
                    .iter()
                    .map(|row| row[c].len())
                    .max()
                    .unwrap_or(0)
                    .max((c + 1).to_string().len())
            })
            .collect();
        let mut out = String::new();
        for r in (1..=top).rev() {
            let mut line = format!("{r:>label_width$} |");
            for (c, w) in col_width.iter().enumerate() {
                let _ = write!(line, " {:<w$}", cells[(r - 1) as usize][c]);
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

impl Serialize for GordonMarking {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Rows<'a>(&'a GordonMarking);
        impl Serialize for Rows<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let rows = self.0.rows();
                let mut map = s.serialize_map(Some(rows.len()))?;
                for (r, parts) in rows {
                    let tokens: Vec<String> = parts.iter().map(Part::to_string).collect();
                    map.serialize_entry(&r.to_string(), &tokens)?;
                }
                map.end()
            }
        }
        let descending: Vec<MarkedPart> = self.entries.iter().rev().copied().collect();
        let mut st = s.serialize_struct("GordonMarking", 2)?;
        st.serialize_field("parts", &descending)?;
        st.serialize_field("rows", &Rows(self))?;
        st.end()
    }
}

/// Row sizes `(N_1, ..., N_{k-1})`, weakly decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarkedProfile {
    k: u32,
    counts: Vec<u32>,
}

impl MarkedProfile {
    pub fn new(k: u32, counts: Vec<u32>) -> Result<Self> {
        if k < 2 || counts.len() != (k - 1) as usize || counts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidProfile(counts));
        }
        Ok(MarkedProfile { k, counts })
    }

    pub fn zero(k: u32) -> Self {
        MarkedProfile {
            k,
            counts: vec![0; (k - 1) as usize],
        }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    /// `N_r` for `1 <= r <= k - 1`; `N_k = 0` by convention.
    pub fn get(&self, r: u32) -> u32 {
        if r == 0 || r >= self.k {
            0
        } else {
            self.counts[(r - 1) as usize]
        }
    }

    pub fn n1(&self) -> u32 {
        self.get(1)
    }

    pub fn top(&self) -> u32 {
        self.get(self.k - 1)
    }

    pub fn total(&self) -> u32 {
        self.counts.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.counts.iter().all(|&c| c == 0)
    }

    /// Profile with every entry shifted by `delta`; `None` if an entry would
    /// become negative.
    pub fn shifted(&self, delta: i64) -> Option<Self> {
        let counts = self
            .counts
            .iter()
            .map(|&c| u32::try_from(i64::from(c) + delta).ok())
            .collect::<Option<Vec<_>>>()?;
        Some(MarkedProfile { k: self.k, counts })
    }

    /// Every profile for `k` with `N_1 <= n1_max`, in lexicographic order.
    pub fn all(k: u32, n1_max: u32) -> Vec<MarkedProfile> {
        fn rec(len: usize, bound: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if acc.len() == len {
                out.push(acc.clone());
                return;
            }
            for v in 0..=bound {
                acc.push(v);
                rec(len, v, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        rec((k - 1) as usize, n1_max, &mut Vec::new(), &mut out);
        out.into_iter().map(|counts| MarkedProfile { k, counts }).collect()
    }

    /// Weight drop of the row-shortening bijection:
    /// `N_1 + 2(N_2 + ... + N_{k-1}) - i' + 1` with `i' = min(i, k-1)`.
    pub fn chi_delta(&self, p: ClassParams) -> i64 {
        let rest: u32 = self.counts[1..].iter().sum();
        i64::from(self.n1()) + 2 * i64::from(rest) - i64::from(p.i_capped()) + 1
    }
}

pub fn gordon_mark(lambda: &Overpartition) -> GordonMarking {
    GordonMarking::compute(lambda)
}
