//! Dense univariate polynomials over ℚ.

use std::fmt;

use super::{fmt_scaled, join_terms, Coeff, Rational};
use crate::error::{Error, Result};

/// Dense univariate polynomial; `coeffs[k]` is the coefficient of the k-th
/// power. Trailing zeros are never stored. Renders with variable `t`; use
/// [`UniPoly::render`] for another name.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut p = UniPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        UniPoly::from_coeffs(coeffs.iter().map(|&c| Rational::from_int(c)).collect())
    }

    /// The variable itself.
    pub fn var() -> Self {
        UniPoly::monomial(1, Rational::one())
    }

    /// `c·x^k`.
    pub fn monomial(k: usize, c: Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        UniPoly::from_coeffs(coeffs)
    }

    /// `x - a`.
    pub fn linear_root(a: &Rational) -> Self {
        UniPoly::from_coeffs(vec![-a, Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| &(&acc * x) + c)
    }

    /// Horner evaluation at an element of any coefficient ring.
    pub fn eval_in<C: Coeff>(&self, x: &C) -> C {
        self.coeffs.iter().rev().fold(C::zero(), |acc, c| acc.times(x).plus(&C::from_rational(c)))
    }

    /// Euclidean division: `self = q·d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let dd = d.degree().ok_or_else(|| Error::Domain("division by the zero polynomial".into()))?;
        let lead_inv = d.coeffs[dd].recip().expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return Ok((UniPoly::zero(), UniPoly::zero()));
        };
        if nd < dd {
            return Ok((UniPoly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &(&c * dc);
            }
            quot[k] = c;
        }
        Ok((UniPoly::from_coeffs(quot), UniPoly::from_coeffs(rem)))
    }

    /// Quotient of an exact division; errors with the remainder otherwise.
    pub fn exact_div(&self, d: &UniPoly) -> Result<UniPoly> {
        let (q, r) = self.div_rem(d)?;
        if !r.is_zero() {
            return Err(Error::InexactDivision { remainder: r.to_string() });
        }
        Ok(q)
    }

    /// Renders with the given variable name.
    pub fn render(&self, var: &str) -> String {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let v = match k {
                    0 => String::new(),
                    1 => var.to_string(),
                    _ => format!("{var}^{k}"),
                };
                fmt_scaled(c, &v)
            })
            .collect();
        join_terms(terms)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }
}

impl Coeff for UniPoly {
    fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }
    fn one() -> Self {
        UniPoly { coeffs: vec![Rational::one()] }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn plus(&self, rhs: &Self) -> Self {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..len).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }
    fn minus(&self, rhs: &Self) -> Self {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..len).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect())
    }
    fn times(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        UniPoly::from_coeffs(out)
    }
    fn negate(&self) -> Self {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
    fn from_rational(r: &Rational) -> Self {
        UniPoly::from_coeffs(vec![r.clone()])
    }
    fn as_rational(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }
    fn is_atomic(&self) -> bool {
        let nonzero = self.coeffs.iter().filter(|c| !c.is_zero()).count();
        nonzero <= 1
    }
    fn scale(&self, r: &Rational) -> Self {
        UniPoly::from_coeffs(self.coeffs.iter().map(|c| c * r).collect())
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("t"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_round_trip() {
        let a = UniPoly::from_ints(&[1, 0, 0, 0, -1]);
        let b = UniPoly::from_ints(&[1, -1]);
        let q = a.exact_div(&b).unwrap();
        assert_eq!(q, UniPoly::from_ints(&[1, 1, 1, 1]));
        assert!(matches!(
            UniPoly::from_ints(&[1, 0, 1]).exact_div(&b),
            Err(Error::InexactDivision { .. })
        ));
        let (q, r) = UniPoly::from_ints(&[3, 2, 1]).div_rem(&UniPoly::from_ints(&[1, 1])).unwrap();
        assert_eq!(q, UniPoly::from_ints(&[1, 1]));
        assert_eq!(r, UniPoly::from_ints(&[2]));
    }

    #[test]
    fn rendering_and_eval() {
        let p = UniPoly::from_ints(&[1, -2, 0, 3]);
        assert_eq!(p.to_string(), "1 - 2*t + 3*t^3");
        assert_eq!(p.render("n"), "1 - 2*n + 3*n^3");
        assert_eq!(p.eval(&Rational::from_int(2)), Rational::from_int(21));
        assert_eq!(UniPoly::zero().to_string(), "0");
    }
}
