//! Exhaustive generation of overpartitions and exact class counts.
//!
//! - [`overpartitions`] streams every overpartition of `n` in descending
//!   lexicographic order of the canonical form.
//! - [`classes`] holds the membership predicates (D, C, B, U/I, P, Q).
//! - [`counts`] turns predicates into [`CountTable`]s.
//! - [`recurrence`] evaluates the two-variable recurrence for `W_{k,i}(m, n)`.

pub mod classes;
pub mod counts;
pub mod recurrence;

pub use classes::{in_q_or_base, is_in_p, is_in_q, is_in_u, satisfies_b, satisfies_c, satisfies_d};
pub use counts::{classify_t, count_b, count_b_mn, count_c, count_d, count_d_mn, Class, CountTable};
pub use recurrence::{recurrence_w, WTable};

use crate::overpartition::{Overpartition, Part};

/// Every overpartition of `n`, largest first.
pub fn overpartitions(n: u32) -> Overpartitions {
    Overpartitions {
        n,
        parts: Vec::new(),
        state: State::Fresh,
        plain_only: false,
    }
}

/// Ordinary partitions of `n` (overpartitions without overlined parts),
/// largest first.
pub fn partitions(n: u32) -> Overpartitions {
    Overpartitions {
        plain_only: true,
        ..overpartitions(n)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum State {
    Fresh,
    Running,
    Done,
}

/// Iterator returned by [`overpartitions`].
#[derive(Debug, Clone)]
pub struct Overpartitions {
    n: u32,
    parts: Vec<Part>,
    state: State,
    plain_only: bool,
}

/// The next smaller part in the order `1̄ < 1 < 2̄ < …`.
fn pred(p: Part, plain_only: bool) -> Option<Part> {
    if plain_only {
        (p.value >= 2).then(|| Part::plain(p.value - 1))
    } else if !p.overlined {
        Some(Part::bar(p.value))
    } else if p.value >= 2 {
        Some(Part::plain(p.value - 1))
    } else {
        None
    }
}

/// Largest part allowed after `p` in a canonical sequence.
fn bound_after(p: Part) -> Option<Part> {
    if p.overlined {
        pred(p, false)
    } else {
        Some(p)
    }
}

fn fillable(rem: u32, bound: Option<Part>) -> bool {
    match bound {
        _ if rem == 0 => true,
        None => false,
        Some(b) => b.value >= 2 || !b.overlined || rem == 1,
    }
}

impl Overpartitions {
    fn fill(&mut self, mut rem: u32, mut bound: Option<Part>) {
        while rem > 0 {
            let b = bound.expect("fill is only called on feasible states");
            let mut q = if b.value > rem { Some(Part::plain(rem)) } else { Some(b) };
            while let Some(c) = q {
                if fillable(rem - c.value, bound_after(c)) {
                    break;
                }
                q = pred(c, self.plain_only);
            }
            let c = q.expect("feasible state has a next part");
            self.parts.push(c);
            rem -= c.value;
            bound = bound_after(c);
        }
    }

    fn advance(&mut self) -> bool {
        let mut rem = 0;
        while let Some(p) = self.parts.pop() {
            rem += p.value;
            let mut q = pred(p, self.plain_only);
            while let Some(c) = q {
                if fillable(rem - c.value, bound_after(c)) {
                    self.parts.push(c);
                    self.fill(rem - c.value, bound_after(c));
                    return true;
                }
                q = pred(c, self.plain_only);
            }
        }
        false
    }
}

impl Iterator for Overpartitions {
    type Item = Overpartition;

    fn next(&mut self) -> Option<Overpartition> {
        match self.state {
            State::Done => return None,
            State::Fresh => {
                self.state = State::Running;
                self.fill(self.n, Some(Part::plain(self.n.max(1))));
            }
            State::Running => {
                if !self.advance() {
                    self.state = State::Done;
                    return None;
                }
            }
        }
        let lambda = Overpartition::new(self.parts.clone()).expect("generator emits canonical sequences");
        if self.n == 0 {
            self.state = State::Done;
        }
        Some(lambda)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    /// Coefficients of (-q)_inf/(q)_inf by plain integer convolution.
    fn overpartition_numbers(n_max: usize) -> Vec<u64> {
        let mut c = vec![0u64; n_max + 1];
        c[0] = 1;
        for j in 1..=n_max {
            // multiply by (1 + q^j)
            for d in (j..=n_max).rev() {
                c[d] += c[d - j];
            }
            // divide by (1 - q^j)
            for d in j..=n_max {
                c[d] += c[d - j];
            }
        }
        c
    }

    #[test]
    fn counts_match_generating_function() {
        let expected = overpartition_numbers(16);
        for n in 0..=16u32 {
            let all: Vec<Overpartition> = overpartitions(n).collect();
            assert_eq!(all.len() as u64, expected[n as usize], "n={n}");
            let distinct: HashSet<&Overpartition> = all.iter().collect();
            assert_eq!(distinct.len(), all.len());
            assert!(all.iter().all(|l| l.weight() == u64::from(n)));
        }
        assert_eq!(overpartitions(3).count(), 8);
    }

    #[test]
    fn order_is_descending_lexicographic() {
        for n in 0..=10 {
            let all: Vec<Overpartition> = overpartitions(n).collect();
            for w in all.windows(2) {
                assert!(w[0].parts() > w[1].parts(), "{} !> {}", w[0], w[1]);
            }
        }
        let one: Vec<String> = overpartitions(1).map(|l| l.to_string()).collect();
        assert_eq!(one, vec!["1", "1~"]);
        let zero: Vec<Overpartition> = overpartitions(0).collect();
        assert_eq!(zero, vec![Overpartition::empty()]);
    }

    #[test]
    fn partitions_are_counted_by_p() {
        let p: Vec<usize> = (0..=10).map(|n| partitions(n).count()).collect();
        assert_eq!(p, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(partitions(40).count(), 37338);
        for n in 0..=12 {
            let direct: Vec<Overpartition> = partitions(n).collect();
            let filtered: Vec<Overpartition> = overpartitions(n)
                .filter(|l| l.parts().iter().all(|p| !p.overlined))
                .collect();
            assert_eq!(direct, filtered);
        }
    }
}
