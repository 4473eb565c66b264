//! Count tables built by filtering the overpartition stream.

use std::fmt::Write as _;

use serde_json::{json, Value};

use super::classes::{is_in_u, satisfies_b, satisfies_c, satisfies_d};
use super::{overpartitions, partitions};
use crate::overpartition::{ClassParams, Overpartition};

/// The classes that can be counted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Class {
    /// Difference condition with at most `i - 1` non-overlined ones.
    D,
    /// Congruence condition on parts.
    C,
    /// Ordinary partitions with the difference-2-at-distance-`k-1` condition.
    B,
    /// D-class members with overlined smallest part (the U-class).
    F,
    /// D-class members with non-overlined smallest part (the I-class).
    G,
}

impl Class {
    pub fn contains(self, lambda: &Overpartition, p: ClassParams) -> bool {
        match self {
            Class::D => satisfies_d(lambda, p),
            Class::C => satisfies_c(lambda, p),
            Class::B => satisfies_b(lambda, p),
            Class::F => is_in_u(lambda, p),
            Class::G => lambda.smallest().is_some_and(|s| !s.overlined) && satisfies_d(lambda, p),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Class::D => "D",
            Class::C => "C",
            Class::B => "B",
            Class::F => "F",
            Class::G => "G",
        }
    }
}

/// Exact counts indexed by length `m` and weight `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    /// `cells[n][m]` for `0 <= m <= n <= n_max`.
    cells: Vec<Vec<u64>>,
}

impl CountTable {
    pub fn zeros(n_max: u32) -> Self {
        CountTable {
            cells: (0..=n_max as usize).map(|n| vec![0; n + 1]).collect(),
        }
    }

    /// Counts every class member of weight at most `n_max`.
    pub fn enumerate(class: Class, p: ClassParams, n_max: u32) -> Self {
        let mut table = CountTable::zeros(n_max);
        for n in 0..=n_max {
            let stream = if class == Class::B {
                partitions(n)
            } else {
                overpartitions(n)
            };
            for lambda in stream {
                if class.contains(&lambda, p) {
                    table.cells[n as usize][lambda.len()] += 1;
                }
            }
        }
        table
    }

    /// One table per `(class, params)` job, from a single pass over the
    /// overpartitions.
    pub fn enumerate_many(jobs: &[(Class, ClassParams)], n_max: u32) -> Vec<Self> {
        let mut tables = vec![CountTable::zeros(n_max); jobs.len()];
        for n in 0..=n_max {
            for lambda in overpartitions(n) {
                for (table, &(class, p)) in tables.iter_mut().zip(jobs) {
                    if class.contains(&lambda, p) {
                        table.cells[n as usize][lambda.len()] += 1;
                    }
                }
            }
        }
        tables
    }

    /// Builds a table from any `(m, n) -> count` function.
    pub fn from_fn(n_max: u32, mut f: impl FnMut(u32, u32) -> u64) -> Self {
        let mut table = CountTable::zeros(n_max);
        for n in 0..=n_max {
            for m in 0..=n {
                table.cells[n as usize][m as usize] = f(m, n);
            }
        }
        table
    }

    pub fn n_max(&self) -> u32 {
        (self.cells.len() - 1) as u32
    }

    /// Count at `(m, n)`; zero outside the table or at negative indices.
    pub fn get(&self, m: i64, n: i64) -> u64 {
        if m < 0 || n < 0 {
            return 0;
        }
        self.cells
            .get(n as usize)
            .and_then(|row| row.get(m as usize))
            .copied()
            .unwrap_or(0)
    }

    /// Total over all lengths at weight `n`.
    pub fn total(&self, n: u32) -> u64 {
        self.cells.get(n as usize).map_or(0, |row| row.iter().sum())
    }

    /// Nonzero cells ordered by `(n, m)`.
    pub fn nonzero(&self) -> impl Iterator<Item = (u32, u32, u64)> + '_ {
        self.cells.iter().enumerate().flat_map(|(n, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, &c)| c > 0)
                .map(move |(m, &c)| (m as u32, n as u32, c))
        })
    }

    /// First `(m, n)` (ordered by `n`, then `m`) where the tables differ.
    pub fn first_difference(&self, other: &CountTable) -> Option<(u32, u32)> {
        let n_max = self.n_max().max(other.n_max());
        (0..=n_max)
            .flat_map(|n| (0..=n).map(move |m| (m, n)))
            .find(|&(m, n)| self.get(m.into(), n.into()) != other.get(m.into(), n.into()))
    }

    /// TSV lines `n<TAB>count`, or `m<TAB>n<TAB>count` for nonzero cells when
    /// `by_length` is set.
    pub fn to_tsv(&self, by_length: bool) -> String {
        let mut out = String::new();
        if by_length {
            for (m, n, c) in self.nonzero() {
                let _ = writeln!(out, "{m}\t{n}\t{c}");
            }
        } else {
            for n in 0..=self.n_max() {
                let _ = writeln!(out, "{n}\t{}", self.total(n));
            }
        }
        out
    }

    pub fn to_json(&self, by_length: bool) -> Value {
        if by_length {
            Value::Array(
                self.nonzero()
                    .map(|(m, n, c)| json!({"m": m, "n": n, "count": c}))
                    .collect(),
            )
        } else {
            Value::Array(
                (0..=self.n_max())
                    .map(|n| json!({"n": n, "count": self.total(n)}))
                    .collect(),
            )
        }
    }
}

fn count_where(n: u32, mut keep: impl FnMut(&Overpartition) -> bool) -> u64 {
    overpartitions(n).filter(|l| keep(l)).count() as u64
}

pub fn count_d(p: ClassParams, n: u32) -> u64 {
    count_where(n, |l| satisfies_d(l, p))
}

pub fn count_d_mn(p: ClassParams, m: u32, n: u32) -> u64 {
    count_where(n, |l| l.len() == m as usize && satisfies_d(l, p))
}

pub fn count_c(p: ClassParams, n: u32) -> u64 {
    count_where(n, |l| satisfies_c(l, p))
}

pub fn count_b(p: ClassParams, n: u32) -> u64 {
    partitions(n).filter(|l| satisfies_b(l, p)).count() as u64
}

pub fn count_b_mn(p: ClassParams, m: u32, n: u32) -> u64 {
    partitions(n)
        .filter(|l| l.len() == m as usize && satisfies_b(l, p))
        .count() as u64
}

/// Splits the D-class members with `m` parts and weight `n` by whether the
/// smallest part is overlined (first list) or not (second list). The empty
/// overpartition belongs to neither.
pub fn classify_t(p: ClassParams, m: u32, n: u32) -> (Vec<Overpartition>, Vec<Overpartition>) {
    overpartitions(n)
        .filter(|l| l.len() == m as usize && !l.is_empty() && satisfies_d(l, p))
        .partition(|l| l.smallest().is_some_and(|s| s.overlined))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(k: u32, i: u32) -> ClassParams {
        ClassParams::new(k, i).unwrap()
    }

    #[test]
    fn small_counts() {
        assert_eq!(count_d(params(2, 2), 4), 6);
        assert_eq!(count_d(params(2, 1), 4), 4);
        assert_eq!(count_c(params(2, 2), 4), 6);
        assert_eq!(count_c(params(2, 1), 4), 4);
        assert_eq!(count_b(params(2, 1), 4), 1);
        for p in ClassParams::all_up_to(5) {
            assert_eq!(count_d(p, 0), 1);
        }
    }

    #[test]
    fn classify_small_case() {
        let p = params(2, 2);
        let mut u = Vec::new();
        let mut i = Vec::new();
        for m in 0..=4 {
            let (a, b) = classify_t(p, m, 4);
            u.extend(a.iter().map(|l| l.to_string()));
            i.extend(b.iter().map(|l| l.to_string()));
        }
        u.sort();
        i.sort();
        assert_eq!(u, vec!["3,1~", "3~,1~", "4~"]);
        assert_eq!(i, vec!["3,1", "3~,1", "4"]);
        let (a, b) = classify_t(p, 0, 0);
        assert!(a.is_empty() && b.is_empty());
    }

    #[test]
    fn table_totals_and_split() {
        for p in ClassParams::all_up_to(4) {
            let d = CountTable::enumerate(Class::D, p, 12);
            let f = CountTable::enumerate(Class::F, p, 12);
            let g = CountTable::enumerate(Class::G, p, 12);
            for n in 0..=12 {
                assert_eq!(d.total(n), count_d(p, n));
                for m in 0..=n {
                    let (m, n) = (i64::from(m), i64::from(n));
                    let split = f.get(m, n) + g.get(m, n) + u64::from((m, n) == (0, 0));
                    assert_eq!(d.get(m, n), split);
                }
            }
            assert_eq!(f.get(0, 0), 0);
            assert_eq!(d.get(-1, 3), 0);
        }
    }

    #[test]
    fn tsv_output() {
        let t = CountTable::enumerate(Class::D, params(2, 2), 4);
        assert_eq!(t.to_tsv(false).lines().last(), Some("4\t6"));
        assert_eq!(CountTable::enumerate(Class::D, params(2, 2), 0).to_tsv(false), "0\t1\n");
        assert_eq!(
            CountTable::enumerate(Class::D, params(2, 2), 0).to_tsv(true),
            "0\t0\t1\n"
        );
    }
}
