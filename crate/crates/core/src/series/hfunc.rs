//! The two-variable series
//!
//! `H_{k,i}(a;x;q) = Σ_n x^{kn} q^{kn²+n-in} a^n (1 - x^i q^{2ni}) (axq^{n+1})_∞ (1/a)_n / ((q)_n (xq^n)_∞)`
//!
//! and `J_{k,i}(a;x;q) = H_{k,i}(a;xq;q) - axq H_{k,i-1}(a;xq;q)`, for the
//! bases `a ∈ {0, -1, -1/q}` and `x` a monomial `x^e q^f` with `e ∈ {0, 1}`.
//! At `a = 0` the product `a^n (1/a)_n` is replaced by its limit
//! `(-1)^n q^{n(n-1)/2}`.

use crate::error::{Error, Result};
use crate::overpartition::ClassParams;
use crate::scalar::Coefficient;
use crate::series::pochhammer::{div_xq_factors, mul_xq_factors, MonomialParam};
use crate::series::BivariateSeries;

/// `a = -1`
pub const A_MINUS_ONE: MonomialParam = MonomialParam::q_power(-1, 0);
/// `a = -1/q`
pub const A_MINUS_ONE_OVER_Q: MonomialParam = MonomialParam::q_power(-1, -1);
/// `a = 0`
pub const A_ZERO: MonomialParam = MonomialParam::ZERO;

fn check_a(a: MonomialParam) -> Result<()> {
    if a == A_ZERO || a == A_MINUS_ONE || a == A_MINUS_ONE_OVER_Q {
        Ok(())
    } else {
        Err(Error::Unsupported(format!(
            "H is only expanded for a in {{0, -1, -1/q}}, got {a:?}"
        )))
    }
}

fn check_x(x: MonomialParam) -> Result<()> {
    if x.sign != 1 || x.x_exp > 1 || x.q_exp < 0 || (x.x_exp == 0 && x.q_exp == 0) {
        return Err(Error::Unsupported(format!(
            "x must be x^e q^f with e in {{0,1}}, f >= 0 and (e, f) != (0, 0); got {x:?}"
        )));
    }
    Ok(())
}

/// `x -> xq`
fn times_q(x: MonomialParam) -> MonomialParam {
    MonomialParam {
        q_exp: x.q_exp + 1,
        ..x
    }
}

/// Expands `H_{k,i}(a; x; q)` in the box `x^m q^n`, `m <= x_order`,
/// `n <= q_order`. Any `0 <= i <= k` is accepted; `H_{k,0} = 0`.
pub fn h_series<C: Coefficient>(
    k: u32,
    i: u32,
    a: MonomialParam,
    x: MonomialParam,
    x_order: u32,
    q_order: u32,
) -> Result<BivariateSeries<C>> {
    check_a(a)?;
    check_x(x)?;
    if k < 1 || i > k {
        return Err(Error::InvalidParams { k, i });
    }
    let mut total = BivariateSeries::zero(x_order, q_order);
    if i == 0 {
        return Ok(total);
    }
    let (k, i) = (i64::from(k), i64::from(i));
    let (xe, qe) = (i64::from(x.x_exp), i64::from(x.q_exp));
    let qa = i64::from(a.q_exp);
    for n in 0i64.. {
        let x_deg = xe * k * n;
        let mut q_deg = qe * k * n + k * n * n + n - i * n;
        if a.is_zero() {
            q_deg += n * (n - 1) / 2;
        } else {
            q_deg += qa * n;
        }
        debug_assert!(q_deg >= 0);
        if x_deg > i64::from(x_order) || q_deg > i64::from(q_order) {
            break;
        }
        let sign = if n % 2 == 0 { C::one() } else { -C::one() };
        let mut term = BivariateSeries::monomial(sign, x_deg as u32, q_deg as u32, x_order, q_order);
        // 1 - x^i q^{2ni}
        term.mul_binomial(&-C::one(), (xe * i) as u32, (qe * i + 2 * n * i) as u32);
        if !a.is_zero() {
            // (a x q^{n+1})_∞ with a = -q^qa
            let start = qa + qe + n + 1;
            mul_xq_factors(&mut term, -1, x.x_exp, start as u32, None);
            // (1/a)_n = (-q^{-qa})_n
            mul_xq_factors(&mut term, -1, 0, (-qa) as u32, Some(n as u32));
        }
        div_xq_factors(&mut term, 1, 0, 1, Some(n as u32));
        div_xq_factors(&mut term, 1, x.x_exp, (qe + n) as u32, None);
        total = &total + &term;
    }
    Ok(total)
}

/// `J_{k,i}(a; x; q) = H_{k,i}(a;xq;q) - axq H_{k,i-1}(a;xq;q)`.
pub fn j_series<C: Coefficient>(
    k: u32,
    i: u32,
    a: MonomialParam,
    x: MonomialParam,
    x_order: u32,
    q_order: u32,
) -> Result<BivariateSeries<C>> {
    let xq = times_q(x);
    let main = h_series(k, i, a, xq, x_order, q_order)?;
    if a.is_zero() || i == 0 {
        return Ok(main);
    }
    let lower = h_series::<C>(k, i - 1, a, xq, x_order, q_order)?;
    let axq = a.times(xq);
    let shifted = lower.mul_monomial(&axq.coefficient(), axq.x_exp, axq.q_exp as u32);
    Ok(&main - &shifted)
}

/// `W_{k,i}(x; q) = H_{k,i}(-1/q; xq; q)`, the generating function of
/// `D_{k,i}(m, n)`.
pub fn w_series<C: Coefficient>(p: ClassParams, x_order: u32, q_order: u32) -> BivariateSeries<C> {
    h_series(
        p.k(),
        p.i(),
        A_MINUS_ONE_OVER_Q,
        MonomialParam::x_times_q(1),
        x_order,
        q_order,
    )
    .expect("W uses a supported instantiation")
}

/// Checks
/// `H_{k,i} - H_{k,i-1} = x^{i-1} H_{k,k-i+1}(a;xq;q) - a x^i q H_{k,k-i}(a;xq;q)`
/// and returns the first differing `(m, n)`, if any.
pub fn h_recurrence_mismatch<C: Coefficient>(
    p: ClassParams,
    a: MonomialParam,
    x: MonomialParam,
    x_order: u32,
    q_order: u32,
) -> Result<Option<(u32, u32)>> {
    let (k, i) = (p.k(), p.i());
    let h = |ii: u32, xx: MonomialParam| h_series::<C>(k, ii, a, xx, x_order, q_order);
    let lhs = &h(i, x)? - &h(i - 1, x)?;
    let xq = times_q(x);
    let first = h(k - i + 1, xq)?.mul_monomial(&C::one(), x.x_exp * (i - 1), (x.q_exp as u32) * (i - 1));
    let rhs = if a.is_zero() {
        first
    } else {
        let ax_iq_exp = a.q_exp + x.q_exp * i as i32 + 1;
        let second = h(k - i, xq)?.mul_monomial(&a.coefficient(), x.x_exp * i, ax_iq_exp as u32);
        &first - &second
    };
    Ok(lhs.first_difference(&rhs))
}

/// The recurrence for `W`:
/// `W_i(x) - W_{i-1}(x) = (xq)^i W_{k-i}(xq) + (xq)^{i-1} W_{k-i+1}(xq)`.
pub fn check_h_recurrence(p: ClassParams, q_order: u32) -> bool {
    h_recurrence_mismatch::<crate::Rational>(p, A_MINUS_ONE_OVER_Q, MonomialParam::x_times_q(1), q_order, q_order)
        .expect("supported instantiation")
        .is_none()
}

/// Which relation between `J` and `H` failed, with the first bad `(m, n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JMismatch {
    pub relation: &'static str,
    pub k: u32,
    pub a: MonomialParam,
    pub x: MonomialParam,
    pub at: (u32, u32),
}

/// Checks `J_{k,k}(-1;1;q) = H_{k,k}(-1/q;q;q)` and
/// `J_{k,1}(a;x;q) = H_{k,1}(a;xq;q)` for `a ∈ {-1, -1/q}`, `x ∈ {x, xq}`.
pub fn j_relation_mismatches<C: Coefficient>(k: u32, q_order: u32) -> Result<Vec<JMismatch>> {
    let mut bad = Vec::new();
    let one = MonomialParam::q_power(1, 0);
    let q = MonomialParam::q_power(1, 1);
    let lhs = j_series::<C>(k, k, A_MINUS_ONE, one, 0, q_order)?;
    let rhs = h_series::<C>(k, k, A_MINUS_ONE_OVER_Q, q, 0, q_order)?;
    if let Some(at) = lhs.first_difference(&rhs) {
        bad.push(JMismatch {
            relation: "J_{k,k}(-1;1;q) = H_{k,k}(-1/q;q;q)",
            k,
            a: A_MINUS_ONE,
            x: one,
            at,
        });
    }
    for a in [A_MINUS_ONE, A_MINUS_ONE_OVER_Q] {
        for x in [MonomialParam::x_times_q(0), MonomialParam::x_times_q(1)] {
            let lhs = j_series::<C>(k, 1, a, x, q_order, q_order)?;
            let rhs = h_series::<C>(k, 1, a, times_q(x), q_order, q_order)?;
            if let Some(at) = lhs.first_difference(&rhs) {
                bad.push(JMismatch {
                    relation: "J_{k,1}(a;x;q) = H_{k,1}(a;xq;q)",
                    k,
                    a,
                    x,
                    at,
                });
            }
        }
    }
    Ok(bad)
}

/// Both `J` relations for `k ∈ {2, 3, 4}`.
pub fn check_j_relations(q_order: u32) -> bool {
    (2..=4).all(|k| {
        j_relation_mismatches::<crate::Rational>(k, q_order)
            .expect("supported instantiation")
            .is_empty()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::{Class, CountTable};
    use crate::Rational;
    use num_traits::{One, Zero};

    fn params(k: u32, i: u32) -> ClassParams {
        ClassParams::new(k, i).unwrap()
    }

    #[test]
    fn w_matches_enumeration() {
        for p in ClassParams::all_up_to(3) {
            let w: BivariateSeries<Rational> = w_series(p, 10, 10);
            let d = CountTable::enumerate(Class::D, p, 10);
            for n in 0..=10i64 {
                for m in 0..=10i64 {
                    assert_eq!(w.coeff(m, n), Rational::from_integer(d.get(m, n).into()), "{p} {m} {n}");
                }
            }
        }
    }

    #[test]
    fn constant_term_is_one() {
        for a in [A_ZERO, A_MINUS_ONE, A_MINUS_ONE_OVER_Q] {
            let h: BivariateSeries<Rational> = h_series(3, 2, a, MonomialParam::x_times_q(0), 6, 6).unwrap();
            assert!(h.coeff(0, 0).is_one(), "{a:?}");
        }
        let h0: BivariateSeries<Rational> = h_series(3, 0, A_ZERO, MonomialParam::x_times_q(0), 4, 4).unwrap();
        assert!(h0.nonzero().is_empty());
    }

    #[test]
    fn unsupported_instantiations() {
        let bad_a = MonomialParam::q_power(1, 1);
        assert!(h_series::<Rational>(3, 1, bad_a, MonomialParam::x_times_q(0), 3, 3).is_err());
        let x_one = MonomialParam::q_power(1, 0);
        assert!(h_series::<Rational>(3, 1, A_MINUS_ONE, x_one, 3, 3).is_err());
    }

    #[test]
    fn recurrences_small() {
        assert!(check_h_recurrence(params(3, 2), 20));
        assert!(check_h_recurrence(params(2, 1), 20));
        assert!(check_j_relations(12));
        // x = 0 degenerates to constants on both sides
        let z: BivariateSeries<Rational> = BivariateSeries::zero(0, 0);
        assert!(z.coeff(0, 0).is_zero());
    }
}
