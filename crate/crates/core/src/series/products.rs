//! Infinite-product sides and the classical product/sum identities.

use crate::overpartition::ClassParams;
use crate::scalar::Coefficient;
use crate::series::pochhammer::{div_q_factors, mul_q_factors};
use crate::series::TruncatedSeries;

/// `(q^i, q^{M-i}, q^M; q^M)_∞`
pub fn triple_product<C: Coefficient>(i: u32, modulus: u32, q_order: u32) -> TruncatedSeries<C> {
    let mut s = TruncatedSeries::one(q_order);
    for start in [i, modulus - i, modulus] {
        mul_q_factors(&mut s, 1, start, modulus, None);
    }
    s
}

/// `(-q)_∞ (q^i, q^{2k-i}, q^{2k}; q^{2k})_∞ / (q)_∞`, the generating
/// function of the congruence class.
pub fn product_side_c<C: Coefficient>(p: ClassParams, q_order: u32) -> TruncatedSeries<C> {
    let mut s = triple_product(p.i(), 2 * p.k(), q_order);
    mul_q_factors(&mut s, -1, 1, 1, None);
    div_q_factors(&mut s, 1, 1, 1, None);
    s
}

/// `Σ_{n ∈ Z} (-1)^n q^{kn² + kn - in}`
pub fn jacobi_bilateral<C: Coefficient>(p: ClassParams, q_order: u32) -> TruncatedSeries<C> {
    let (k, i) = (i64::from(p.k()), i64::from(p.i()));
    bilateral(q_order, |n| k * n * n + k * n - i * n)
}

/// `Σ_{n ∈ Z} (-1)^n q^{e(n)}` for an exponent that grows in both
/// directions away from `n = 0`.
fn bilateral<C: Coefficient>(q_order: u32, e: impl Fn(i64) -> i64) -> TruncatedSeries<C> {
    let mut s = TruncatedSeries::zero(q_order);
    for dir in [1i64, -1] {
        let first = if dir == 1 { 0 } else { -1 };
        let mut n = first;
        loop {
            let d = e(n);
            assert!(d >= 0, "bilateral exponent must be nonnegative");
            if d > i64::from(q_order) {
                break;
            }
            let term = if n % 2 == 0 { C::one() } else { -C::one() };
            let t = TruncatedSeries::monomial(term, d as u32, q_order);
            s = &s + &t;
            n += dir;
        }
    }
    s
}

/// Whether the bilateral sum equals the triple product up to `q_order`.
pub fn jacobi_specialization(p: ClassParams, q_order: u32) -> bool {
    let lhs = jacobi_bilateral::<crate::Rational>(p, q_order);
    lhs == triple_product(p.i(), 2 * p.k(), q_order)
}

/// `(q^i, q^{2k+1-i}, q^{2k+1}; q^{2k+1})_∞ / (q)_∞`
pub fn andrews_product_side<C: Coefficient>(p: ClassParams, q_order: u32) -> TruncatedSeries<C> {
    let mut s = triple_product(p.i(), 2 * p.k() + 1, q_order);
    div_q_factors(&mut s, 1, 1, 1, None);
    s
}

/// `Σ_{n ∈ Z} (-1)^n q^{n(3n-1)/2}`
pub fn pentagonal_sum<C: Coefficient>(q_order: u32) -> TruncatedSeries<C> {
    bilateral(q_order, |n| n * (3 * n - 1) / 2)
}

/// `(q; q)_∞`
pub fn euler_product<C: Coefficient>(q_order: u32) -> TruncatedSeries<C> {
    let mut s = TruncatedSeries::one(q_order);
    mul_q_factors(&mut s, 1, 1, 1, None);
    s
}

/// `Σ_n q^{n² + shift·n} / (q)_n`
pub fn rogers_ramanujan_sum<C: Coefficient>(shift: u32, q_order: u32) -> TruncatedSeries<C> {
    let mut s = TruncatedSeries::zero(q_order);
    for n in 0u32.. {
        let e = n * n + shift * n;
        if e > q_order {
            break;
        }
        let mut t = TruncatedSeries::monomial(C::one(), e, q_order);
        div_q_factors(&mut t, 1, 1, 1, Some(n));
        s = &s + &t;
    }
    s
}

/// `1 / (q^a, q^{5-a}; q^5)_∞`
pub fn rogers_ramanujan_product<C: Coefficient>(a: u32, q_order: u32) -> TruncatedSeries<C> {
    let mut s = TruncatedSeries::one(q_order);
    div_q_factors(&mut s, 1, a, 5, None);
    div_q_factors(&mut s, 1, 5 - a, 5, None);
    s
}
