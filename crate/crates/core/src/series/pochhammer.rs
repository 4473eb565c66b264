//! q-Pochhammer symbols with monomial bases.

use crate::error::{Error, Result};
use crate::scalar::{Coefficient, Field};
use crate::series::{BivariateSeries, TruncatedSeries};

/// `sign · x^x_exp · q^q_exp`, with `sign = 0` standing for the constant 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MonomialParam {
    pub sign: i8,
    pub q_exp: i32,
    pub x_exp: u32,
}

impl MonomialParam {
    pub const ZERO: MonomialParam = MonomialParam {
        sign: 0,
        q_exp: 0,
        x_exp: 0,
    };

    pub const fn new(sign: i8, q_exp: i32, x_exp: u32) -> Self {
        MonomialParam { sign, q_exp, x_exp }
    }

    /// `sign · q^e`
    pub const fn q_power(sign: i8, q_exp: i32) -> Self {
        MonomialParam::new(sign, q_exp, 0)
    }

    /// `x q^e`
    pub const fn x_times_q(q_exp: i32) -> Self {
        MonomialParam::new(1, q_exp, 1)
    }

    pub fn is_zero(self) -> bool {
        self.sign == 0
    }

    pub fn times(self, other: MonomialParam) -> MonomialParam {
        MonomialParam {
            sign: self.sign * other.sign,
            q_exp: self.q_exp + other.q_exp,
            x_exp: self.x_exp + other.x_exp,
        }
    }

    pub(crate) fn coefficient<C: Coefficient>(self) -> C {
        C::from_i64_exact(i64::from(self.sign))
    }
}

/// Multiplies `s` by `∏_{j < count} (1 - sign q^{start + j·step})`; with
/// `count = None` the product runs until the exponent passes the order.
pub fn mul_q_factors<C: Coefficient>(s: &mut TruncatedSeries<C>, sign: i8, start: u32, step: u32, count: Option<u32>) {
    assert!(
        step >= 1 || count.is_some(),
        "an infinite product needs a positive step"
    );
    let c = C::from_i64_exact(-i64::from(sign));
    let mut j = 0;
    while count.is_none_or(|n| j < n) {
        let d = start + j * step;
        if d > s.order() {
            break;
        }
        s.mul_binomial(&c, d);
        j += 1;
    }
}

/// Divides `s` by `∏_{j < count} (1 - sign q^{start + j·step})`, `start >= 1`.
pub fn div_q_factors<C: Coefficient>(s: &mut TruncatedSeries<C>, sign: i8, start: u32, step: u32, count: Option<u32>) {
    assert!(start >= 1 && step >= 1, "divisor factors need positive degree");
    let c = C::from_i64_exact(-i64::from(sign));
    let mut j = 0;
    while count.is_none_or(|n| j < n) {
        let d = start + j * step;
        if d > s.order() {
            break;
        }
        s.div_binomial(&c, d);
        j += 1;
    }
}

/// Bivariate analogue of [`mul_q_factors`] with base `sign x^a q^start`.
pub fn mul_xq_factors<C: Coefficient>(s: &mut BivariateSeries<C>, sign: i8, a: u32, start: u32, count: Option<u32>) {
    let c = C::from_i64_exact(-i64::from(sign));
    let mut j = 0;
    while count.is_none_or(|n| j < n) {
        let d = start + j;
        if d > s.q_order() || a > s.x_order() {
            break;
        }
        s.mul_binomial(&c, a, d);
        j += 1;
    }
}

/// Bivariate analogue of [`div_q_factors`] with base `sign x^a q^start`.
pub fn div_xq_factors<C: Coefficient>(s: &mut BivariateSeries<C>, sign: i8, a: u32, start: u32, count: Option<u32>) {
    let c = C::from_i64_exact(-i64::from(sign));
    let mut j = 0;
    while count.is_none_or(|n| j < n) {
        let d = start + j;
        if d > s.q_order() || a > s.x_order() {
            break;
        }
        s.div_binomial(&c, a, d);
        j += 1;
    }
}

/// `(c; q)_n = ∏_{j=0}^{n-1} (1 - c q^j)` for a base without `x`.
///
/// `n = -1` is accepted only for `c = -q`, where `(-q; q)_{-1} = 1/2`.
pub fn poch_finite<C: Field>(c: MonomialParam, n: i64, order: u32) -> Result<TruncatedSeries<C>> {
    if c.x_exp != 0 {
        return Err(Error::Unsupported("finite q-Pochhammer with an x in the base".into()));
    }
    if n < -1 {
        return Err(Error::Unsupported(format!("(c;q)_n with n = {n}")));
    }
    if n == -1 {
        if c != MonomialParam::q_power(-1, 1) {
            return Err(Error::Unsupported("(c;q)_{-1} is only defined here for c = -q".into()));
        }
        return Ok(TruncatedSeries::monomial(C::half(), 0, order));
    }
    let mut s = TruncatedSeries::one(order);
    if c.is_zero() || n == 0 {
        return Ok(s);
    }
    if c.q_exp < 0 {
        return Err(Error::Unsupported("base with a negative power of q".into()));
    }
    mul_q_factors(&mut s, c.sign, c.q_exp as u32, 1, Some(n as u32));
    Ok(s)
}

/// `∏_{j>=0} (1 - sign q^{e + j b})`.
pub fn poch_infinite<C: Coefficient>(sign: i8, e: i64, b: i64, order: u32) -> Result<TruncatedSeries<C>> {
    if e <= 0 {
        return Err(Error::Unsupported(format!(
            "infinite product starting at q^{e} has a divergent constant term"
        )));
    }
    if b <= 0 {
        return Err(Error::Unsupported(format!("infinite product with step {b}")));
    }
    let mut s = TruncatedSeries::one(order);
    mul_q_factors(&mut s, sign, e as u32, b as u32, None);
    Ok(s)
}

/// `1 / (q; q)_n`.
pub fn inv_q_poch<C: Coefficient>(n: u32, order: u32) -> TruncatedSeries<C> {
    let mut s = TruncatedSeries::one(order);
    div_q_factors(&mut s, 1, 1, 1, Some(n));
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn ints(s: &TruncatedSeries<Rational>) -> Vec<i64> {
        s.coeffs()
            .iter()
            .map(|c| {
                assert!(c.is_integer());
                i64::try_from(c.to_integer()).unwrap()
            })
            .collect()
    }

    #[test]
    fn finite_examples() {
        let q = MonomialParam::q_power(1, 1);
        let minus_q = MonomialParam::q_power(-1, 1);
        assert_eq!(ints(&poch_finite(q, 0, 5).unwrap()), vec![1, 0, 0, 0, 0, 0]);
        assert_eq!(ints(&poch_finite(minus_q, 2, 5).unwrap()), vec![1, 1, 1, 1, 0, 0]);
        let half = poch_finite::<Rational>(minus_q, -1, 3).unwrap();
        assert_eq!(half.coeff(0), Rational::new(1.into(), 2.into()));
        assert!(poch_finite::<Rational>(q, -1, 3).is_err());
        assert!(poch_finite::<Rational>(minus_q, -2, 3).is_err());
        // (-1;q)_2 = 2(1+q)
        let m1 = MonomialParam::q_power(-1, 0);
        assert_eq!(ints(&poch_finite(m1, 2, 3).unwrap()), vec![2, 2, 0, 0]);
    }

    #[test]
    fn infinite_examples() {
        let euler: TruncatedSeries<Rational> = poch_infinite(1, 1, 1, 10).unwrap();
        assert_eq!(ints(&euler), vec![1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0]);
        let trivial: TruncatedSeries<Rational> = poch_infinite(1, 2, 2, 1).unwrap();
        assert_eq!(ints(&trivial), vec![1, 0]);
        assert!(poch_infinite::<Rational>(1, 0, 1, 5).is_err());
        // (-q)_inf / (q)_inf, coefficient of q^3 is 8
        let mut s: TruncatedSeries<Rational> = poch_infinite(-1, 1, 1, 5).unwrap();
        div_q_factors(&mut s, 1, 1, 1, None);
        assert_eq!(ints(&s), vec![1, 2, 4, 8, 14, 24]);
    }

    #[test]
    fn inverse_poch() {
        let s: TruncatedSeries<Rational> = inv_q_poch(2, 6);
        assert_eq!(ints(&s), vec![1, 1, 2, 2, 3, 3, 4]);
    }
}
