//! Closed-form coefficients as rational functions of `n` at a fixed `r`.
//!
//! A printed coefficient such as `C(n-3, r-2)(n-2r)/(r-1)` can be singular
//! at particular parameters while the operator it multiplies is perfectly
//! well defined. Each coefficient therefore carries one or more equivalent
//! forms; a form is usable at `n` if, after cancelling common factors
//! `(n - n₀)` between numerator and denominator, the denominator does not
//! vanish there.

use crate::error::{Error, Result};
use crate::rings::{factorial, Coeff, Rational, UniPoly};

/// `num(n) / den(n)`.
#[derive(Clone, Debug, PartialEq)]
pub struct NRat {
    num: UniPoly,
    den: UniPoly,
}

impl NRat {
    pub fn poly(p: UniPoly) -> Self {
        NRat { num: p, den: UniPoly::one() }
    }

    pub fn rat(c: Rational) -> Self {
        NRat::poly(UniPoly::from_coeffs(vec![c]))
    }

    pub fn int(c: i64) -> Self {
        NRat::rat(Rational::from_int(c))
    }

    pub fn frac(p: i64, q: i64) -> Self {
        NRat::rat(Rational::new(p, q))
    }

    pub fn times(&self, o: &NRat) -> NRat {
        NRat { num: self.num.times(&o.num), den: self.den.times(&o.den) }
    }

    pub fn mul_poly(&self, p: &UniPoly) -> NRat {
        NRat { num: self.num.times(p), den: self.den.clone() }
    }

    pub fn over(&self, p: &UniPoly) -> NRat {
        NRat { num: self.num.clone(), den: self.den.times(p) }
    }

    pub fn plus(&self, o: &NRat) -> NRat {
        NRat { num: self.num.times(&o.den).plus(&o.num.times(&self.den)), den: self.den.times(&o.den) }
    }

    /// Value at `n`, or `None` at a genuine pole or a `0/0` form with an
    /// identically zero denominator.
    pub fn eval(&self, n: i64) -> Option<Rational> {
        if self.den.is_zero() {
            return None;
        }
        let x = Rational::from_int(n);
        let root = UniPoly::linear_root(&x);
        let (mut num, mut den) = (self.num.clone(), self.den.clone());
        while den.eval(&x).is_zero() {
            if !num.eval(&x).is_zero() {
                return None;
            }
            if num.is_zero() {
                return Some(Rational::zero());
            }
            num = num.exact_div(&root).ok()?;
            den = den.exact_div(&root).ok()?;
        }
        Some(&num.eval(&x) / &den.eval(&x))
    }
}

/// `a·n + b`.
pub fn lin(a: i64, b: i64) -> UniPoly {
    UniPoly::from_ints(&[b, a])
}

/// Polynomial in `n` with the given integer coefficients, constant first.
pub fn npoly(coeffs: &[i64]) -> UniPoly {
    UniPoly::from_ints(coeffs)
}

/// `C(n - shift, k)` as a polynomial in `n`; zero for `k < 0`.
pub fn nbinom(shift: i64, k: i64) -> UniPoly {
    if k < 0 {
        return UniPoly::zero();
    }
    let mut p = UniPoly::one();
    for i in 0..k {
        p = p.times(&lin(1, -shift - i));
    }
    let inv = factorial(k as u32).recip().expect("factorial is nonzero");
    p.scale(&inv)
}

/// A named coefficient with its equivalent forms, tried in order.
#[derive(Clone, Debug)]
pub struct Forms {
    label: String,
    forms: Vec<NRat>,
}

impl Forms {
    pub fn new(label: impl Into<String>, forms: Vec<NRat>) -> Self {
        Forms { label: label.into(), forms }
    }

    pub fn single(label: impl Into<String>, form: NRat) -> Self {
        Forms::new(label, vec![form])
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn eval(&self, n: i64, r: i64) -> Result<Rational> {
        self.forms.iter().find_map(|f| f.eval(n)).ok_or_else(|| {
            Error::Domain(format!("coefficient {} has no nonsingular form at n={n}, r={r}", self.label))
        })
    }
}
