//! Membership predicates for the counting classes.
//!
//! The difference condition on D is checked in frequency form:
//! `f_t + f̄_t + f_{t+1} <= k - 1` for every `t >= 0` and `f_1 <= i - 1`.
//! Reading the parts in descending order with an overlined copy counted
//! before the non-overlined copies of the same value, this is the same as
//! `d_j - d_{j+k-1} >= 1` (overlined `d_j`) or `>= 2` (non-overlined `d_j`).

use crate::error::{Error, Result};
use crate::marking::{gordon_mark, GordonMarking};
use crate::overpartition::{ClassParams, Overpartition};

/// `f_t + f̄_t + f_{t+1}` for every `t` from 0 to the largest value.
fn window_loads(lambda: &Overpartition) -> impl Iterator<Item = (u32, u32)> + '_ {
    let table = lambda.frequency_table();
    (0..table.len() - 1).map(move |t| {
        let (f, fb) = table[t];
        (t as u32, f + fb + table[t + 1].0)
    })
}

pub fn satisfies_d(lambda: &Overpartition, p: ClassParams) -> bool {
    lambda.frequency(1).0 < p.i() && window_loads(lambda).all(|(_, load)| load < p.k())
}

pub fn satisfies_c(lambda: &Overpartition, p: ClassParams) -> bool {
    let (k, i) = (p.k(), p.i());
    if i == k {
        return lambda.parts().iter().all(|q| q.value % k != 0);
    }
    let m = 2 * k;
    lambda.parts().iter().filter(|q| !q.overlined).all(|q| {
        let r = q.value % m;
        r != 0 && r != i && r != m - i
    })
}

/// Ordinary partitions with `b_j - b_{j+k-1} >= 2` and at most `i - 1` ones.
pub fn satisfies_b(lambda: &Overpartition, p: ClassParams) -> bool {
    lambda.parts().iter().all(|q| !q.overlined) && satisfies_d(lambda, p)
}

/// D-class and nonempty with overlined smallest part.
pub fn is_in_u(lambda: &Overpartition, p: ClassParams) -> bool {
    lambda.smallest().is_some_and(|s| s.overlined) && satisfies_d(lambda, p)
}

fn require_u(lambda: &Overpartition, p: ClassParams) -> Result<GordonMarking> {
    if !is_in_u(lambda, p) {
        return Err(Error::domain(
            "U-class membership",
            format!("{lambda} is not a D-class overpartition with overlined smallest part for {p}"),
        ));
    }
    Ok(gordon_mark(lambda))
}

fn p_condition(marking: &GordonMarking) -> bool {
    marking.entries().iter().all(|e| e.mark != 1 || e.part.overlined)
}

/// The Q-class conditions on an overpartition already known to be in P.
fn q_condition(lambda: &Overpartition, marking: &GordonMarking, p: ClassParams) -> bool {
    let k = p.k();
    let Some(g) = marking
        .entries()
        .iter()
        .filter(|e| e.mark == k - 1)
        .map(|e| e.part.value)
        .max()
    else {
        return true;
    };
    let saturated = window_loads(lambda)
        .filter(|&(t, _)| t >= 1 && t < g)
        .all(|(_, load)| load == k - 1);
    saturated && lambda.frequency(1).0 == p.i_capped() - 1
}

/// Every 1-marked part is overlined. Errors unless `λ` is in the U-class.
pub fn is_in_p(lambda: &Overpartition, p: ClassParams) -> Result<bool> {
    let marking = require_u(lambda, p)?;
    Ok(p_condition(&marking))
}

/// P-class members that are saturated below their largest `(k-1)`-marked
/// part: `f_t + f̄_t + f_{t+1} = k - 1` for `1 <= t < g`, and the number of
/// non-overlined ones is `min(i, k-1) - 1`. Errors unless `λ` is in U.
pub fn is_in_q(lambda: &Overpartition, p: ClassParams) -> Result<bool> {
    let marking = require_u(lambda, p)?;
    Ok(p_condition(&marking) && q_condition(lambda, &marking, p))
}

/// Q-class membership where the empty overpartition counts as the single
/// member for the all-zero profile.
pub fn in_q_or_base(lambda: &Overpartition, p: ClassParams) -> bool {
    lambda.is_empty() || is_in_q(lambda, p).unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::overpartitions;

    fn op(s: &str) -> Overpartition {
        s.parse().unwrap()
    }

    fn params(k: u32, i: u32) -> ClassParams {
        ClassParams::new(k, i).unwrap()
    }

    /// The difference condition read off the descending sequence directly,
    /// with an overlined copy placed before equal non-overlined copies.
    fn d_by_differences(lambda: &Overpartition, p: ClassParams) -> bool {
        let mut d: Vec<_> = lambda.parts().to_vec();
        d.sort_by(|a, b| b.value.cmp(&a.value).then(b.overlined.cmp(&a.overlined)));
        let span = (p.k() - 1) as usize;
        let gaps_ok = (0..d.len()).all(|j| match d.get(j + span) {
            None => true,
            Some(far) => {
                let need = if d[j].overlined { 1 } else { 2 };
                d[j].value >= far.value + need
            }
        });
        gaps_ok && lambda.frequency(1).0 < p.i()
    }

    #[test]
    fn d_condition_examples() {
        assert!(satisfies_d(&op("3,1~"), params(2, 1)));
        assert!(!satisfies_d(&op("3,1"), params(2, 1)));
        assert!(satisfies_d(&Overpartition::empty(), params(5, 3)));
        let lambda = op("16,13,12,12,11,10~,8~,8,8,7,6~,6,5,5,4,2,2,1~");
        assert!(satisfies_d(&lambda, params(4, 1)));
        assert!(!satisfies_d(&lambda, params(3, 3)));
    }

    #[test]
    fn d_condition_agrees_with_difference_form() {
        for n in 0..=13 {
            for lambda in overpartitions(n) {
                for p in ClassParams::all_up_to(5) {
                    assert_eq!(satisfies_d(&lambda, p), d_by_differences(&lambda, p), "{lambda} {p}");
                }
            }
        }
    }

    #[test]
    fn c_condition_examples() {
        let members = |p: ClassParams| -> Vec<String> {
            overpartitions(4)
                .filter(|l| satisfies_c(l, p))
                .map(|l| l.to_string())
                .collect()
        };
        assert_eq!(members(params(2, 1)), vec!["4~", "3~,1~", "2,2", "2,2~"]);
        assert_eq!(
            members(params(2, 2)),
            vec!["3,1", "3,1~", "3~,1", "3~,1~", "1,1,1,1", "1,1,1,1~"]
        );
        assert!(satisfies_c(&Overpartition::empty(), params(3, 2)));
    }

    #[test]
    fn b_condition_example() {
        let b: Vec<String> = overpartitions(4)
            .filter(|l| satisfies_b(l, params(2, 1)))
            .map(|l| l.to_string())
            .collect();
        assert_eq!(b, vec!["4"]);
    }

    #[test]
    fn worked_alpha_is_in_p_not_q() {
        // rows: 1-marked 1̄,4̄,6̄,7̄,10̄,11̄,13̄; 2-marked 2,4,6,8,10,12; 3-marked 2,4,6,8,12
        let alpha = op("13~,12,12,11~,10,10~,8,8,7~,6,6,6~,4,4,4~,2,2,1~");
        assert_eq!(alpha.weight(), 126);
        let p = params(4, 1);
        assert!(is_in_p(&alpha, p).unwrap());
        assert!(!is_in_q(&alpha, p).unwrap());
        assert!(is_in_p(&op("3,1"), p).is_err());
    }

    #[test]
    fn smallest_q_members() {
        // lowest term of the closed form for profile (1,...,1):
        // N_1 + 2(N_2 + ... + N_{k-1}) - i' + 1 = 2k - 2 - i'
        for p in ClassParams::all_up_to(4) {
            let k = p.k();
            let want = 2 * k - 2 - p.i_capped();
            let found: Vec<Overpartition> = (1..=want)
                .flat_map(overpartitions)
                .filter(|l| {
                    is_in_q(l, p).unwrap_or(false)
                        && gordon_mark(l).profile(k).unwrap().counts().iter().all(|&c| c == 1)
                })
                .collect();
            assert_eq!(found.len(), 1, "{p}");
            assert_eq!(found[0].weight(), u64::from(want));
        }
        assert!(in_q_or_base(&Overpartition::empty(), params(3, 2)));
    }

    #[test]
    fn class_inclusions() {
        for n in 1..=12 {
            for lambda in overpartitions(n) {
                for p in ClassParams::all_up_to(4) {
                    let u = is_in_u(&lambda, p);
                    assert!(!u || satisfies_d(&lambda, p));
                    match (is_in_p(&lambda, p), is_in_q(&lambda, p)) {
                        (Ok(pp), Ok(q)) => {
                            assert!(u);
                            assert!(!q || pp);
                        }
                        (Err(_), Err(_)) => assert!(!u),
                        _ => unreachable!(),
                    }
                }
            }
        }
    }
}
