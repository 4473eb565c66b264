//! The numbers `W_{k,i}(m, n)` defined by
//! `W_{k,i}(m,n) - W_{k,i-1}(m,n) = W_{k,k-i}(m-i, n-m) + W_{k,k-i+1}(m-i+1, n-m)`
//! with `W_{k,i}(0,0) = 1` for `i >= 1`, `W_{k,0} = 0`, and zero whenever an
//! index is negative or exactly one of `m`, `n` is zero.

use crate::overpartition::ClassParams;

/// Bottom-up table of `W_{k,i}(m, n)` for `0 <= i <= k` and `m, n <= n_max`.
#[derive(Debug, Clone)]
pub struct WTable {
    k: u32,
    n_max: u32,
    /// `values[n][i][m]`
    values: Vec<Vec<Vec<u64>>>,
}

impl WTable {
    pub fn new(k: u32, n_max: u32) -> Self {
        assert!(k >= 2, "k must be at least 2");
        let mut table = WTable {
            k,
            n_max,
            values: Vec::with_capacity(n_max as usize + 1),
        };
        for n in 0..=n_max {
            let mut layer = vec![vec![0u64; n_max as usize + 1]; k as usize + 1];
            for i in 1..=k {
                for m in 0..=n_max {
                    let v = match (m, n) {
                        (0, 0) => 1,
                        (0, _) | (_, 0) => 0,
                        _ => {
                            let (m, n, i) = (i64::from(m), i64::from(n), i64::from(i));
                            let k = i64::from(k);
                            layer[(i - 1) as usize][m as usize]
                                + table.lookup(k - i, m - i, n - m)
                                + table.lookup(k - i + 1, m - i + 1, n - m)
                        }
                    };
                    layer[i as usize][m as usize] = v;
                }
            }
            table.values.push(layer);
        }
        table
    }

    /// Lookup in already computed layers; used while building.
    fn lookup(&self, i: i64, m: i64, n: i64) -> u64 {
        if i <= 0 || m < 0 || n < 0 || m > i64::from(self.n_max) {
            return 0;
        }
        self.values
            .get(n as usize)
            .map_or(0, |layer| layer[i as usize][m as usize])
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// `W_{k,i}(m, n)`; indices outside `0..=n_max` give 0 only when they are
    /// negative, and panic when they exceed the table.
    pub fn get(&self, i: i64, m: i64, n: i64) -> u64 {
        assert!(
            m <= i64::from(self.n_max) && n <= i64::from(self.n_max),
            "index beyond table"
        );
        if i > i64::from(self.k) {
            return 0;
        }
        self.lookup(i, m, n)
    }
}

/// `W_{k,i}(m, n)` for any integers `m`, `n`.
pub fn recurrence_w(p: ClassParams, m: i64, n: i64) -> u64 {
    if m < 0 || n < 0 {
        return 0;
    }
    let bound = m.max(n) as u32;
    WTable::new(p.k(), bound).get(i64::from(p.i()), m, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::{count_d, Class, CountTable};

    #[test]
    fn initial_values() {
        for p in ClassParams::all_up_to(4) {
            assert_eq!(recurrence_w(p, 0, 0), 1);
            assert_eq!(recurrence_w(p, -1, 3), 0);
            assert_eq!(recurrence_w(p, 0, 3), 0);
            assert_eq!(recurrence_w(p, 2, 0), 0);
        }
        let t = WTable::new(3, 5);
        assert!((0..=5).all(|m| (0..=5).all(|n| t.get(0, m, n) == 0)));
    }

    #[test]
    fn w_matches_small_count() {
        let p = ClassParams::new(2, 2).unwrap();
        let t = WTable::new(2, 4);
        let total: u64 = (0..=4).map(|m| t.get(2, m, 4)).sum();
        assert_eq!(total, 6);
        assert_eq!(total, count_d(p, 4));
    }

    #[test]
    fn w_matches_enumeration() {
        for p in ClassParams::all_up_to(4) {
            let t = WTable::new(p.k(), 12);
            let d = CountTable::enumerate(Class::D, p, 12);
            for n in 0..=12i64 {
                for m in 0..=n {
                    assert_eq!(t.get(p.i().into(), m, n), d.get(m, n), "{p} m={m} n={n}");
                }
            }
        }
    }
}
