//! Exact coefficient domains: big rationals and truncated Laurent series.

mod rational;
mod series;

pub use rational::{parse_rational, rat, rat_arith, rational_to_string, RatOp, Rational};
pub use series::{series_inv, series_mul, TruncSeries};

use num_traits::{One, Zero};
use std::fmt;

/// A commutative coefficient domain for polynomials and Fock vectors.
///
/// Constants (`zero`, `one`, `from_rational`) must combine with every
/// value of the domain, so series constants carry no parameter and no cap.
pub trait Coeff: Clone + PartialEq + Zero + One + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn from_rational(r: Rational) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn scaled(&self, r: &Rational) -> Self;
    /// Tag used by the JSON schemas: `rational` or `series:<param>:<cap>`.
    fn domain_tag(&self) -> String;
    /// Value of the constant (exponent zero) part.
    fn constant_part(&self) -> Rational;
    fn to_json(&self) -> serde_json::Value;
}

impl Coeff for Rational {
    fn from_rational(r: Rational) -> Self {
        r
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn scaled(&self, r: &Rational) -> Self {
        self * r
    }
    fn domain_tag(&self) -> String {
        "rational".to_string()
    }
    fn constant_part(&self) -> Rational {
        self.clone()
    }
    fn to_json(&self) -> serde_json::Value {
        serde_json::Value::String(rational_to_string(self))
    }
}
