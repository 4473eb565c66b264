//! Overpartitions with bounded successive ranks, Gordon markings, exact
//! q-series and the bijections behind the weighted-word identities.
//!
//! - [`Overpartition`] and [`GordonMarking`] are the combinatorial objects.
//! - [`enumeration`] lists overpartitions, tests class membership and
//!   tabulates counts, including the `W` recurrence.
//! - [`series`] holds truncated power series in `q` (and `x`) with exact
//!   coefficients, the `H`/`J` functions and the sum and product sides.
//! - [`bijections`] implements the reductions, dilations and the maps
//!   `phi`, `psi`, `chi`.
//! - [`verify`] runs the finite checks that back the command line tool.
//!
//! Series code is generic over a [`scalar::Coefficient`]; the aliases below
//! fix it to exact rationals.

pub mod bijections;
pub mod enumeration;
mod error;
pub mod marking;
mod overpartition;
pub mod scalar;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use marking::{gordon_mark, GordonMarking, MarkedPart, MarkedProfile};
pub use overpartition::{ClassParams, Overpartition, Part};
pub use series::{BivariateSeries, TruncatedSeries};

/// Exact coefficients.
pub type Rational = num_rational::BigRational;
/// A power series in `q` with rational coefficients.
pub type QSeries = TruncatedSeries<Rational>;
/// A power series in `x` and `q` with rational coefficients.
pub type XqSeries = BivariateSeries<Rational>;

#[allow(dead_code)]
fn assert_send_sync() {
    fn check<T: Send + Sync>() {}
    check::<Overpartition>();
    check::<GordonMarking>();
    check::<QSeries>();
    check::<XqSeries>();
    check::<Error>();
}
