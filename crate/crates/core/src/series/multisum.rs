//! Multiple sums over marked profiles `N_1 >= N_2 >= … >= N_{k-1} >= 0`.
//!
//! With `N_k = 0` and `e(N) = N_1(N_1+1)/2 + N_2² + … + N_{k-1}² + N_{i+1} + … + N_{k-1}`:
//!
//! - main: `q^e (-q)_{N_1-1} (1 + q^{N_i}) x^{ΣN} / ((q)_{N_1-N_2} ⋯ (q)_{N_{k-1}})`
//! - F: the same without `(1 + q^{N_i})`; G: F times `q^{N_i}`
//! - Q: `q^e / ((q)_{N_1-N_2} ⋯ (q)_{N_{k-2}-N_{k-1}})` for a single profile
//! - ordinary: `q^{N_1² + … + N_{k-1}² + N_i + … + N_{k-1}} x^{ΣN} / ((q)_{N_1-N_2} ⋯ (q)_{N_{k-1}})`
//!
//! `(-q)_{-1} = 1/2`, so the zero profile contributes `1/2` to F and G.

use crate::marking::MarkedProfile;
use crate::overpartition::ClassParams;
use crate::scalar::{Coefficient, Field};
use crate::series::pochhammer::{div_q_factors, mul_q_factors};
use crate::series::{BivariateSeries, TruncatedSeries};

/// Calls `f` on every profile whose smallest possible q-degree
/// `N_1(N_1+1)/2 + N_2² + … + N_{k-1}²` is at most `q_order` and whose
/// size `ΣN` is at most `x_order`.
pub fn for_each_profile(k: u32, x_order: u32, q_order: u32, mut f: impl FnMut(&[u32])) {
    fn rec(
        len: usize,
        acc: &mut Vec<u32>,
        cost: u64,
        size: u64,
        x_order: u64,
        q_order: u64,
        f: &mut dyn FnMut(&[u32]),
    ) {
        if acc.len() == len {
            f(acc);
            return;
        }
        let bound = acc.last().copied().unwrap_or(u32::MAX);
        for v in 0..=bound {
            let v64 = u64::from(v);
            let c = if acc.is_empty() { v64 * (v64 + 1) / 2 } else { v64 * v64 };
            if cost + c > q_order || size + v64 > x_order {
                break;
            }
            acc.push(v);
            rec(len, acc, cost + c, size + v64, x_order, q_order, f);
            acc.pop();
        }
    }
    rec(
        (k - 1) as usize,
        &mut Vec::new(),
        0,
        0,
        u64::from(x_order),
        u64::from(q_order),
        &mut f,
    );
}

/// `N_r` with `N_0` unused and `N_r = 0` for `r >= k`.
fn nth(counts: &[u32], r: u32) -> u32 {
    counts.get((r as usize).wrapping_sub(1)).copied().unwrap_or(0)
}

fn base_exponent(counts: &[u32], i: u32) -> u32 {
    let n1 = nth(counts, 1);
    let squares: u32 = counts.iter().skip(1).map(|&n| n * n).sum();
    let linear: u32 = counts.iter().skip(i as usize).sum();
    n1 * (n1 + 1) / 2 + squares + linear
}

/// Divides by `(q)_{N_1-N_2} ⋯ (q)_{N_{last-1}-N_last}` and, when
/// `include_last`, by `(q)_{N_{k-1}}`.
fn divide_by_gaps<C: Coefficient>(s: &mut TruncatedSeries<C>, counts: &[u32], include_last: bool) {
    for w in counts.windows(2) {
        div_q_factors(s, 1, 1, 1, Some(w[0] - w[1]));
    }
    if include_last {
        if let Some(&last) = counts.last() {
            div_q_factors(s, 1, 1, 1, Some(last));
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    Main,
    F,
    G,
}

fn overpartition_term<C: Field>(counts: &[u32], i: u32, side: Side, q_order: u32) -> TruncatedSeries<C> {
    let e = base_exponent(counts, i);
    let mut s = TruncatedSeries::monomial(C::one(), e, q_order);
    let n1 = nth(counts, 1);
    if n1 == 0 {
        s = s.scale(&C::half());
    } else {
        mul_q_factors(&mut s, -1, 1, 1, Some(n1 - 1));
    }
    let ni = nth(counts, i);
    match side {
        Side::Main => s.mul_binomial(&C::one(), ni),
        Side::F => {}
        Side::G => s = s.shift(ni),
    }
    divide_by_gaps(&mut s, counts, true);
    s
}

fn overpartition_sum<C: Field>(p: ClassParams, side: Side, x_order: u32, q_order: u32) -> BivariateSeries<C> {
    let mut total = BivariateSeries::zero(x_order, q_order);
    for_each_profile(p.k(), x_order, q_order, |counts| {
        let term = overpartition_term::<C>(counts, p.i(), side, q_order);
        total.add_q_series(counts.iter().sum(), &term);
    });
    total
}

/// The generating function of `D_{k,i}(m, n)` as a sum over profiles.
pub fn sum_side_main<C: Field>(p: ClassParams, x_order: u32, q_order: u32) -> BivariateSeries<C> {
    overpartition_sum(p, Side::Main, x_order, q_order)
}

/// The generating function of the U-class (overlined smallest part).
pub fn sum_side_f<C: Field>(p: ClassParams, x_order: u32, q_order: u32) -> BivariateSeries<C> {
    overpartition_sum(p, Side::F, x_order, q_order)
}

/// The generating function of the I-class (non-overlined smallest part).
pub fn sum_side_g<C: Field>(p: ClassParams, x_order: u32, q_order: u32) -> BivariateSeries<C> {
    overpartition_sum(p, Side::G, x_order, q_order)
}

/// Closed form for the Q-class with a fixed profile.
pub fn sum_side_q<C: Coefficient>(profile: &MarkedProfile, p: ClassParams, q_order: u32) -> TruncatedSeries<C> {
    let counts = profile.counts();
    let mut s = TruncatedSeries::monomial(C::one(), base_exponent(counts, p.i()), q_order);
    divide_by_gaps(&mut s, counts, false);
    s
}

/// The ordinary-partition sum whose coefficients count `B_{k,i}(m, n)`.
pub fn andrews_sum_side<C: Coefficient>(p: ClassParams, x_order: u32, q_order: u32) -> BivariateSeries<C> {
    let mut total = BivariateSeries::zero(x_order, q_order);
    for_each_profile(p.k(), x_order, q_order, |counts| {
        let squares: u32 = counts.iter().map(|&n| n * n).sum();
        let linear: u32 = counts.iter().skip((p.i() - 1) as usize).sum();
        let mut s = TruncatedSeries::monomial(C::one(), squares + linear, q_order);
        divide_by_gaps(&mut s, counts, true);
        total.add_q_series(counts.iter().sum(), &s);
    });
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::{count_d, is_in_q, overpartitions, Class, CountTable};
    use crate::marking::gordon_mark;
    use crate::Rational;
    use num_traits::One;

    fn params(k: u32, i: u32) -> ClassParams {
        ClassParams::new(k, i).unwrap()
    }

    fn int(n: u64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn main_sum_small_cases() {
        for p in ClassParams::all_up_to(4) {
            let s: BivariateSeries<Rational> = sum_side_main(p, 8, 8);
            assert!(s.coeff(0, 0).is_one());
        }
        let s: BivariateSeries<Rational> = sum_side_main(params(2, 2), 4, 4);
        assert_eq!(s.at_x_one().coeff(4), int(count_d(params(2, 2), 4)));
        let p = params(4, 2);
        let s: BivariateSeries<Rational> = sum_side_main(p, 12, 12);
        let d = CountTable::enumerate(Class::D, p, 12);
        for n in 0..=12 {
            for m in 0..=12 {
                assert_eq!(s.coeff(m, n), int(d.get(m, n)));
            }
        }
    }

    #[test]
    fn f_plus_g_is_main() {
        let p = params(3, 2);
        let f: BivariateSeries<Rational> = sum_side_f(p, 16, 16);
        let g: BivariateSeries<Rational> = sum_side_g(p, 16, 16);
        let half = Rational::new(1.into(), 2.into());
        assert_eq!(f.coeff(0, 0), half);
        assert_eq!(g.coeff(0, 0), half);
        assert_eq!(&f + &g, sum_side_main(p, 16, 16));
    }

    #[test]
    fn q_closed_form_small() {
        let zero = MarkedProfile::zero(3);
        let one: TruncatedSeries<Rational> = sum_side_q(&zero, params(3, 1), 5);
        assert_eq!(one, TruncatedSeries::one(5));
        for (p, counts) in [(params(3, 1), vec![1, 0]), (params(3, 2), vec![2, 1])] {
            let profile = MarkedProfile::new(3, counts).unwrap();
            let closed: TruncatedSeries<Rational> = sum_side_q(&profile, p, 14);
            for n in 1..=14 {
                let found = overpartitions(n)
                    .filter(|l| {
                        is_in_q(l, p).unwrap_or(false) && gordon_mark(l).profile(3).ok().as_ref() == Some(&profile)
                    })
                    .count() as u64;
                assert_eq!(closed.coeff(n), int(found), "{p} {profile:?} n={n}");
            }
        }
    }

    #[test]
    fn profile_pruning() {
        let mut seen = Vec::new();
        for_each_profile(3, 10, 4, |c| seen.push(c.to_vec()));
        // N_1(N_1+1)/2 + N_2^2 <= 4
        assert_eq!(seen, vec![vec![0, 0], vec![1, 0], vec![1, 1], vec![2, 0], vec![2, 1]]);
    }
}
