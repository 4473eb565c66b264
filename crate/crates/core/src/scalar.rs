//! Coefficient rings for the series engine.

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{FromPrimitive, Num};

/// Any commutative ring the series engine can work over.
pub trait Coefficient: Clone + PartialEq + Debug + Num + Neg<Output = Self> + FromPrimitive {
    fn from_i64_exact(n: i64) -> Self {
        Self::from_i64(n).expect("small integers are representable")
    }
}

impl<T> Coefficient for T where T: Clone + PartialEq + Debug + Num + Neg<Output = T> + FromPrimitive {}

/// Coefficient rings with exact division by nonzero integers, needed
/// wherever a half appears.
pub trait Field: Coefficient {
    fn half() -> Self {
        Self::one() / Self::from_i64_exact(2)
    }
}

impl Field for BigRational {}
impl Field for Rational64 {}
impl Field for f64 {}
impl Field for f32 {}

/// Integer-valued check used when verifying identities whose coefficients
/// must be integers.
pub trait Integrality {
    fn is_integral(&self) -> bool;
}

impl Integrality for BigRational {
    fn is_integral(&self) -> bool {
        self.is_integer()
    }
}

impl Integrality for Rational64 {
    fn is_integral(&self) -> bool {
        self.is_integer()
    }
}

impl Integrality for BigInt {
    fn is_integral(&self) -> bool {
        true
    }
}

impl Integrality for i64 {
    fn is_integral(&self) -> bool {
        true
    }
}
