//! Exact coefficient rings.
//!
//! Everything downstream is generic over [`Coeff`]: the rationals, polynomials
//! in β ([`BetaPoly`]), truncated h-series with β-polynomial coefficients
//! ([`HJet`]), plus two auxiliary rings used internally: dense univariate
//! polynomials ([`UniPoly`], which doubles as the t-polynomial type) and
//! bivariate polynomials in q and t ([`QtPoly`]).

mod binom;
mod jet;
mod rational;
mod sparse;
mod unipoly;

use std::fmt;

pub use binom::{binom, binom_ext, factorial};
pub use jet::{jet_exp, HJet, DEFAULT_ORDER};
pub use rational::{ParseRationalError, Rational};
pub use sparse::{BetaPoly, QtPoly};
pub use unipoly::UniPoly;

/// A commutative ring with exact equality and an embedding of ℚ.
pub trait Coeff: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negate(&self) -> Self;
    fn from_rational(r: &Rational) -> Self;
    /// The value as a rational constant, if it is one.
    fn as_rational(&self) -> Option<Rational>;
    /// Whether `Display` output is a single factor (no parentheses needed
    /// when used as a multiplier).
    fn is_atomic(&self) -> bool;

    fn from_int(v: i64) -> Self {
        Self::from_rational(&Rational::from_int(v))
    }

    fn scale(&self, r: &Rational) -> Self {
        self.times(&Self::from_rational(r))
    }

    fn add_assign(&mut self, rhs: &Self) {
        *self = self.plus(rhs);
    }

    fn sub_assign(&mut self, rhs: &Self) {
        *self = self.minus(rhs);
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn powu(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.times(&base);
            }
        }
        acc
    }
}

/// Rings that contain the deformation parameter β.
pub trait HasBeta: Coeff {
    fn beta() -> Self;
}

impl Coeff for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negate(&self) -> Self {
        -self
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
    fn is_atomic(&self) -> bool {
        true
    }
    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
    fn is_one(&self) -> bool {
        Rational::is_one(self)
    }
}

/// Renders `coeff * rest` with the conventions used throughout the crate:
/// unit coefficients are elided and compound coefficients are parenthesised.
pub fn fmt_scaled<C: Coeff>(c: &C, rest: &str) -> String {
    if rest.is_empty() {
        return c.to_string();
    }
    if c.is_one() {
        return rest.to_string();
    }
    if c.negate().is_one() {
        return format!("-{rest}");
    }
    if c.is_atomic() {
        format!("{c}*{rest}")
    } else {
        format!("({c})*{rest}")
    }
}

/// Joins rendered signed terms as `a + b - c`.
pub fn join_terms(terms: Vec<String>) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, t) in terms.into_iter().enumerate() {
        if k == 0 {
            out.push_str(&t);
        } else if let Some(stripped) = t.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(stripped);
        } else {
            out.push_str(" + ");
            out.push_str(&t);
        }
    }
    out
}
