//! Truncated formal power series in `q` and in `(x, q)`.
//!
//! - [`TruncatedSeries`] keeps the coefficients of `q^0..=q^N`.
//! - [`BivariateSeries`] keeps `x^m q^n` for `m <= M`, `n <= N`.
//! - [`pochhammer`] expands `(c; q)_n` and `(c; q)_∞` for monomial `c`.
//! - [`products`] holds the infinite-product sides and classical checks.
//! - [`hfunc`] expands the two-variable functions `H`, `J` and `W`.
//! - [`multisum`] evaluates the multiple sums indexed by marked profiles.
//!
//! Every retained coefficient is exact: truncation only drops terms that
//! cannot influence degrees inside the box.

pub mod hfunc;
pub mod multisum;
pub mod pochhammer;
pub mod products;

use std::fmt::{Display, Write as _};
use std::ops::{Add, Mul, Neg, Sub};

use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::scalar::Coefficient;

/// A power series in `q` known modulo `q^{N+1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries<C> {
    coeffs: Vec<C>,
}

impl<C: Coefficient> TruncatedSeries<C> {
    pub fn zero(order: u32) -> Self {
        TruncatedSeries {
            coeffs: vec![C::zero(); order as usize + 1],
        }
    }

    pub fn one(order: u32) -> Self {
        Self::monomial(C::one(), 0, order)
    }

    /// `c q^d`, or zero when `d` is beyond the order.
    pub fn monomial(c: C, d: u32, order: u32) -> Self {
        let mut s = Self::zero(order);
        if d <= order {
            s.coeffs[d as usize] = c;
        }
        s
    }

    pub fn from_coeffs(mut coeffs: Vec<C>, order: u32) -> Self {
        coeffs.resize(order as usize + 1, C::zero());
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> u32 {
        (self.coeffs.len() - 1) as u32
    }

    pub fn coeff(&self, d: u32) -> C {
        self.coeffs.get(d as usize).cloned().unwrap_or_else(C::zero)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn truncate(&self, order: u32) -> Self {
        Self::from_coeffs(
            self.coeffs.iter().take(order as usize + 1).cloned().collect(),
            order.min(self.order()),
        )
    }

    pub fn scale(&self, c: &C) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    /// Multiplies by `q^d`.
    pub fn shift(&self, d: u32) -> Self {
        let n = self.coeffs.len();
        let mut out = vec![C::zero(); n];
        for (j, a) in self.coeffs.iter().enumerate().take(n.saturating_sub(d as usize)) {
            out[j + d as usize] = a.clone();
        }
        TruncatedSeries { coeffs: out }
    }

    /// Multiplies in place by `1 + c q^d`.
    pub fn mul_binomial(&mut self, c: &C, d: u32) {
        let d = d as usize;
        if d == 0 {
            let f = C::one() + c.clone();
            for a in &mut self.coeffs {
                *a = a.clone() * f.clone();
            }
            return;
        }
        for j in (d..self.coeffs.len()).rev() {
            let add = self.coeffs[j - d].clone() * c.clone();
            self.coeffs[j] = self.coeffs[j].clone() + add;
        }
    }

    /// Divides in place by `1 + c q^d`, `d >= 1`.
    pub fn div_binomial(&mut self, c: &C, d: u32) {
        assert!(d >= 1, "division by a binomial needs a positive degree");
        let d = d as usize;
        for j in d..self.coeffs.len() {
            let sub = self.coeffs[j - d].clone() * c.clone();
            self.coeffs[j] = self.coeffs[j].clone() - sub;
        }
    }

    /// First degree where the two series differ, over the common order.
    pub fn first_difference(&self, other: &Self) -> Option<u32> {
        let order = self.order().min(other.order());
        (0..=order).find(|&d| self.coeff(d) != other.coeff(d))
    }
}

impl<C: Coefficient + Display> TruncatedSeries<C> {
    /// Lines `n<TAB>coefficient` for nonzero coefficients.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for (d, a) in self.coeffs.iter().enumerate() {
            if !a.is_zero() {
                let _ = writeln!(out, "{d}\t{a}");
            }
        }
        out
    }
}

impl<C: Coefficient + Display> Serialize for TruncatedSeries<C> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        struct Coeffs<'a, C>(&'a [C]);
        impl<C: Coefficient + Display> Serialize for Coeffs<'_, C> {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                let mut map = s.serialize_map(None)?;
                for (d, a) in self.0.iter().enumerate() {
                    if !a.is_zero() {
                        map.serialize_entry(&d.to_string(), &a.to_string())?;
                    }
                }
                map.end()
            }
        }
        let mut st = s.serialize_struct("TruncatedSeries", 2)?;
        st.serialize_field("truncation", &self.order())?;
        st.serialize_field("coeffs", &Coeffs(&self.coeffs))?;
        st.end()
    }
}

fn zip_with<C: Coefficient>(a: &[C], b: &[C], f: impl Fn(C, C) -> C) -> Vec<C> {
    a.iter().zip(b).map(|(x, y)| f(x.clone(), y.clone())).collect()
}

impl<C: Coefficient> Add for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;
    fn add(self, rhs: Self) -> TruncatedSeries<C> {
        TruncatedSeries {
            coeffs: zip_with(&self.coeffs, &rhs.coeffs, |x, y| x + y),
        }
    }
}

impl<C: Coefficient> Sub for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;
    fn sub(self, rhs: Self) -> TruncatedSeries<C> {
        TruncatedSeries {
            coeffs: zip_with(&self.coeffs, &rhs.coeffs, |x, y| x - y),
        }
    }
}

impl<C: Coefficient> Neg for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;
    fn neg(self) -> TruncatedSeries<C> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().cloned().map(|a| -a).collect(),
        }
    }
}

impl<C: Coefficient> Mul for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;
    fn mul(self, rhs: Self) -> TruncatedSeries<C> {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        let mut out = vec![C::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n - i) {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        TruncatedSeries { coeffs: out }
    }
}

macro_rules! forward_owned {
    ($ty:ident, $($tr:ident $m:ident),*) => {$(
        impl<C: Coefficient> $tr for $ty<C> {
            type Output = $ty<C>;
            fn $m(self, rhs: Self) -> $ty<C> {
                (&self).$m(&rhs)
            }
        }
    )*};
}

forward_owned!(TruncatedSeries, Add add, Sub sub, Mul mul);

/// A power series in `x` and `q` known for `x^m q^n` with `m <= M`, `n <= N`.
#[derive(Debug, Clone, PartialEq)]
pub struct BivariateSeries<C> {
    x_order: u32,
    q_order: u32,
    /// Row-major by `m`.
    coeffs: Vec<C>,
}

impl<C: Coefficient> BivariateSeries<C> {
    pub fn zero(x_order: u32, q_order: u32) -> Self {
        BivariateSeries {
            x_order,
            q_order,
            coeffs: vec![C::zero(); (x_order as usize + 1) * (q_order as usize + 1)],
        }
    }

    pub fn one(x_order: u32, q_order: u32) -> Self {
        Self::monomial(C::one(), 0, 0, x_order, q_order)
    }

    /// `c x^m q^n`, or zero outside the box.
    pub fn monomial(c: C, m: u32, n: u32, x_order: u32, q_order: u32) -> Self {
        let mut s = Self::zero(x_order, q_order);
        if m <= x_order && n <= q_order {
            let idx = s.idx(m, n);
            s.coeffs[idx] = c;
        }
        s
    }

    /// Places `x^m · f(q)` into the box.
    pub fn from_q_series(m: u32, f: &TruncatedSeries<C>, x_order: u32, q_order: u32) -> Self {
        let mut s = Self::zero(x_order, q_order);
        s.add_q_series(m, f);
        s
    }

    fn idx(&self, m: u32, n: u32) -> usize {
        m as usize * (self.q_order as usize + 1) + n as usize
    }

    pub fn x_order(&self) -> u32 {
        self.x_order
    }

    pub fn q_order(&self) -> u32 {
        self.q_order
    }

    /// Coefficient of `x^m q^n`; zero outside the box or at negative indices.
    pub fn coeff(&self, m: i64, n: i64) -> C {
        if m < 0 || n < 0 || m > i64::from(self.x_order) || n > i64::from(self.q_order) {
            return C::zero();
        }
        self.coeffs[self.idx(m as u32, n as u32)].clone()
    }

    pub fn set(&mut self, m: u32, n: u32, c: C) {
        let idx = self.idx(m, n);
        self.coeffs[idx] = c;
    }

    /// Adds `x^m · f(q)` in place.
    pub fn add_q_series(&mut self, m: u32, f: &TruncatedSeries<C>) {
        if m > self.x_order {
            return;
        }
        let top = self.q_order.min(f.order());
        for n in 0..=top {
            let idx = self.idx(m, n);
            self.coeffs[idx] = self.coeffs[idx].clone() + f.coeff(n);
        }
    }

    /// Coefficients of `x^m` as a series in `q`.
    pub fn x_coefficient(&self, m: u32) -> TruncatedSeries<C> {
        TruncatedSeries::from_coeffs(
            (0..=self.q_order).map(|n| self.coeff(m.into(), n.into())).collect(),
            self.q_order,
        )
    }

    /// Sets `x = 1`. Exact whenever no term `x^m q^n` with `m > M` and
    /// `n <= N` exists, for instance when every term has `m <= n` and
    /// `M >= N`.
    pub fn at_x_one(&self) -> TruncatedSeries<C> {
        let mut out = TruncatedSeries::zero(self.q_order);
        for m in 0..=self.x_order {
            out = &out + &self.x_coefficient(m);
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        BivariateSeries {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
            ..*self
        }
    }

    /// Multiplies by `c x^a q^b`.
    pub fn mul_monomial(&self, c: &C, a: u32, b: u32) -> Self {
        let mut out = Self::zero(self.x_order, self.q_order);
        for m in 0..=self.x_order {
            for n in 0..=self.q_order {
                let (tm, tn) = (m + a, n + b);
                if tm <= self.x_order && tn <= self.q_order {
                    let v = self.coeff(m.into(), n.into());
                    if !v.is_zero() {
                        out.set(tm, tn, v * c.clone());
                    }
                }
            }
        }
        out
    }

    /// Substitutes `x -> x q^e`.
    pub fn substitute_x(&self, e: u32) -> Self {
        let mut out = Self::zero(self.x_order, self.q_order);
        for m in 0..=self.x_order {
            for n in 0..=self.q_order {
                let tn = n + e * m;
                if tn <= self.q_order {
                    out.set(m, tn, self.coeff(m.into(), n.into()));
                }
            }
        }
        out
    }

    /// Multiplies in place by `1 + c x^a q^b`.
    pub fn mul_binomial(&mut self, c: &C, a: u32, b: u32) {
        if (a, b) == (0, 0) {
            let f = C::one() + c.clone();
            for v in &mut self.coeffs {
                *v = v.clone() * f.clone();
            }
            return;
        }
        for m in (a..=self.x_order).rev() {
            for n in (b..=self.q_order).rev() {
                let src = self.coeff((m - a).into(), (n - b).into());
                if !src.is_zero() {
                    let idx = self.idx(m, n);
                    self.coeffs[idx] = self.coeffs[idx].clone() + src * c.clone();
                }
            }
        }
    }

    /// Divides in place by `1 + c x^a q^b` with `(a, b) != (0, 0)`.
    pub fn div_binomial(&mut self, c: &C, a: u32, b: u32) {
        assert!((a, b) != (0, 0), "division by a binomial needs a positive degree");
        for m in a..=self.x_order {
            for n in b..=self.q_order {
                let src = self.coeff((m - a).into(), (n - b).into());
                if !src.is_zero() {
                    let idx = self.idx(m, n);
                    self.coeffs[idx] = self.coeffs[idx].clone() - src * c.clone();
                }
            }
        }
    }

    /// First `(m, n)` (ordered by `n`, then `m`) where the series differ.
    pub fn first_difference(&self, other: &Self) -> Option<(u32, u32)> {
        let xo = self.x_order.min(other.x_order);
        let qo = self.q_order.min(other.q_order);
        (0..=qo)
            .flat_map(|n| (0..=xo).map(move |m| (m, n)))
            .find(|&(m, n)| self.coeff(m.into(), n.into()) != other.coeff(m.into(), n.into()))
    }

    /// Nonzero coefficients ordered by `(n, m)`.
    pub fn nonzero(&self) -> Vec<(u32, u32, C)> {
        let mut out = Vec::new();
        for n in 0..=self.q_order {
            for m in 0..=self.x_order {
                let v = self.coeff(m.into(), n.into());
                if !v.is_zero() {
                    out.push((m, n, v));
                }
            }
        }
        out
    }
}

impl<C: Coefficient + Display> BivariateSeries<C> {
    /// Lines `m<TAB>n<TAB>coefficient` for nonzero coefficients.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for (m, n, v) in self.nonzero() {
            let _ = writeln!(out, "{m}\t{n}\t{v}");
        }
        out
    }
}

impl<C: Coefficient + Display> Serialize for BivariateSeries<C> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        struct Coeffs<'a, C>(&'a BivariateSeries<C>);
        impl<C: Coefficient + Display> Serialize for Coeffs<'_, C> {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                let mut map = s.serialize_map(None)?;
                for (m, n, v) in self.0.nonzero() {
                    map.serialize_entry(&format!("{m},{n}"), &v.to_string())?;
                }
                map.end()
            }
        }
        let mut st = s.serialize_struct("BivariateSeries", 3)?;
        st.serialize_field("truncation", &self.q_order)?;
        st.serialize_field("x_truncation", &self.x_order)?;
        st.serialize_field("coeffs", &Coeffs(self))?;
        st.end()
    }
}

impl<C: Coefficient> Add for &BivariateSeries<C> {
    type Output = BivariateSeries<C>;
    fn add(self, rhs: Self) -> BivariateSeries<C> {
        assert_eq!((self.x_order, self.q_order), (rhs.x_order, rhs.q_order), "box mismatch");
        BivariateSeries {
            coeffs: zip_with(&self.coeffs, &rhs.coeffs, |x, y| x + y),
            ..*self
        }
    }
}

impl<C: Coefficient> Sub for &BivariateSeries<C> {
    type Output = BivariateSeries<C>;
    fn sub(self, rhs: Self) -> BivariateSeries<C> {
        assert_eq!((self.x_order, self.q_order), (rhs.x_order, rhs.q_order), "box mismatch");
        BivariateSeries {
            coeffs: zip_with(&self.coeffs, &rhs.coeffs, |x, y| x - y),
            ..*self
        }
    }
}

impl<C: Coefficient> Neg for &BivariateSeries<C> {
    type Output = BivariateSeries<C>;
    fn neg(self) -> BivariateSeries<C> {
        BivariateSeries {
            coeffs: self.coeffs.iter().cloned().map(|a| -a).collect(),
            ..*self
        }
    }
}

impl<C: Coefficient> Mul for &BivariateSeries<C> {
    type Output = BivariateSeries<C>;
    fn mul(self, rhs: Self) -> BivariateSeries<C> {
        assert_eq!((self.x_order, self.q_order), (rhs.x_order, rhs.q_order), "box mismatch");
        let mut out: BivariateSeries<C> = BivariateSeries::zero(self.x_order, self.q_order);
        for (m1, n1, a) in self.nonzero() {
            for m2 in 0..=self.x_order - m1 {
                for n2 in 0..=self.q_order - n1 {
                    let b = rhs.coeff(m2.into(), n2.into());
                    if !b.is_zero() {
                        let idx = out.idx(m1 + m2, n1 + n2);
                        out.coeffs[idx] = out.coeffs[idx].clone() + a.clone() * b;
                    }
                }
            }
        }
        out
    }
}

forward_owned!(BivariateSeries, Add add, Sub sub, Mul mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use num_traits::{One, Zero};
    use proptest::prelude::*;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn series(v: &[i64], order: u32) -> TruncatedSeries<Rational> {
        TruncatedSeries::from_coeffs(v.iter().map(|&a| r(a)).collect(), order)
    }

    #[test]
    fn binomial_ops_invert() {
        let mut s = series(&[1, 2, 3, 4, 5, 6], 5);
        let orig = s.clone();
        s.mul_binomial(&r(-3), 2);
        assert_eq!(s.coeffs()[2], r(3 - 3));
        s.div_binomial(&r(-3), 2);
        assert_eq!(s, orig);
    }

    #[test]
    fn geometric_series() {
        let mut s = TruncatedSeries::<Rational>::one(6);
        s.div_binomial(&r(-1), 1);
        assert!(s.coeffs().iter().all(|c| c.is_one()));
        let sq = &s * &s;
        assert_eq!(sq.coeff(6), r(7));
    }

    #[test]
    fn json_and_tsv() {
        let s = TruncatedSeries::from_coeffs(vec![Rational::new(1.into(), 2.into()), r(0), r(-3)], 3);
        assert_eq!(
            serde_json::to_string(&s).unwrap(),
            r#"{"truncation":3,"coeffs":{"0":"1/2","2":"-3"}}"#
        );
        assert_eq!(s.to_tsv(), "0\t1/2\n2\t-3\n");
    }

    #[test]
    fn bivariate_substitution_and_specialization() {
        // 1/(1 - x q) truncated: sum x^m q^m
        let mut s = BivariateSeries::<Rational>::one(4, 4);
        s.div_binomial(&r(-1), 1, 1);
        assert_eq!(s.coeff(3, 3), r(1));
        assert_eq!(s.coeff(3, 2), r(0));
        let t = s.substitute_x(1);
        assert_eq!(t.coeff(2, 4), r(1));
        assert_eq!(s.at_x_one().coeff(4), r(1));
        let mut u = s.clone();
        u.mul_binomial(&r(-1), 1, 1);
        assert_eq!(u, BivariateSeries::one(4, 4));
        assert!(s.mul_monomial(&r(2), 1, 0).coeff(0, 0).is_zero());
    }

    #[test]
    fn generic_over_floats() {
        let mut s = TruncatedSeries::<f64>::one(5);
        s.div_binomial(&-1.0, 1);
        s.div_binomial(&-1.0, 2);
        // partitions into parts 1 and 2
        assert_eq!(s.coeffs(), &[1.0, 1.0, 2.0, 2.0, 3.0, 3.0]);
    }

    fn arb_series(order: u32) -> impl Strategy<Value = TruncatedSeries<Rational>> {
        proptest::collection::vec(-20i64..20, order as usize + 1).prop_map(move |v| series(&v, order))
    }

    proptest! {
        #[test]
        fn multiplication_commutes_with_truncation(a in arb_series(12), b in arb_series(12), cut in 0u32..12) {
            let full = (&a * &b).truncate(cut);
            let early = &a.truncate(cut) * &b.truncate(cut);
            prop_assert_eq!(full, early);
            prop_assert_eq!(&a * &b, &b * &a);
            let sum_cut = (&a + &b).truncate(cut);
            prop_assert_eq!(sum_cut, &a.truncate(cut) + &b.truncate(cut));
        }
    }
}
