//! Truncated power series in h with β-polynomial coefficients.

use std::fmt;

use super::{fmt_scaled, join_terms, BetaPoly, Coeff, HasBeta, Rational};
use crate::error::{Error, Result};

/// Truncation order used when none is given.
pub const DEFAULT_ORDER: usize = 4;

/// Marks a jet that is an exact constant (no truncation yet). Mixing it with
/// a truncated jet adopts the other operand's order.
const EXACT: usize = usize::MAX;

/// Element of `BetaPoly[h] / (h^(K+1))`.
///
/// Constants built through [`Coeff::from_rational`] carry no order of their
/// own; binary operations take the smaller order of the two operands.
#[derive(Clone, Debug)]
pub struct HJet {
    order: usize,
    /// Coefficients of h^0, h^1, ... with trailing zeros trimmed.
    coeffs: Vec<BetaPoly>,
}

impl HJet {
    /// Builds `Σ coeffs[k]·h^k mod h^(order+1)`.
    pub fn from_coeffs(order: usize, coeffs: Vec<BetaPoly>) -> Self {
        let mut jet = HJet { order, coeffs };
        jet.normalize();
        jet
    }

    /// The jet `h` at truncation order `order`.
    pub fn h(order: usize) -> Self {
        HJet::from_coeffs(order, vec![BetaPoly::zero(), BetaPoly::one()])
    }

    /// A constant viewed at a definite truncation order.
    pub fn constant(order: usize, c: BetaPoly) -> Self {
        HJet::from_coeffs(order, vec![c])
    }

    /// `None` for exact constants.
    pub fn order(&self) -> Option<usize> {
        (self.order != EXACT).then_some(self.order)
    }

    /// Coefficient of h^k (zero beyond the stored range).
    pub fn coeff(&self, k: usize) -> BetaPoly {
        self.coeffs.get(k).cloned().unwrap_or_else(BetaPoly::zero)
    }

    /// Re-truncates at a lower (or equal) order.
    pub fn truncate(&self, order: usize) -> Self {
        HJet::from_coeffs(order.min(self.order), self.coeffs.clone())
    }

    pub fn power(&self, m: u32) -> Self {
        self.powu(m)
    }

    /// Multiplicative inverse; the constant term must be a nonzero rational.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.coeff(0);
        let inv0 = c0
            .as_rational()
            .and_then(|c| c.recip())
            .ok_or_else(|| Error::Domain(format!("jet inverse needs a nonzero rational constant term, got {c0}")))?;
        if self.order == EXACT {
            if self.coeffs.len() <= 1 {
                return Ok(HJet::from_rational(&inv0));
            }
            return Err(Error::Domain("inverse of a non-constant untruncated jet".into()));
        }
        // Solve a·b = 1 degree by degree.
        let mut out: Vec<BetaPoly> = vec![BetaPoly::constant(inv0.clone())];
        for k in 1..=self.order {
            let mut acc = BetaPoly::zero();
            for j in 1..=k.min(self.coeffs.len().saturating_sub(1)) {
                acc.add_assign(&self.coeffs[j].times(&out[k - j]));
            }
            out.push(acc.scale(&(-&inv0)));
        }
        Ok(HJet::from_coeffs(self.order, out))
    }

    fn normalize(&mut self) {
        if self.order != EXACT && self.coeffs.len() > self.order + 1 {
            self.coeffs.truncate(self.order + 1);
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }
}

/// `Σ_{k≤K} u^k/k!` truncated at the order of `u`.
pub fn jet_exp(u: &HJet) -> Result<HJet> {
    if !u.coeff(0).is_zero() {
        return Err(Error::Domain(format!("jet_exp needs a zero constant term, got {}", u.coeff(0))));
    }
    if u.coeffs.is_empty() {
        return Ok(HJet { order: u.order, coeffs: vec![BetaPoly::one()] });
    }
    if u.order == EXACT {
        return Err(Error::Domain("jet_exp of an untruncated jet".into()));
    }
    let mut sum = HJet::constant(u.order, BetaPoly::one());
    let mut term = sum.clone();
    for k in 1..=u.order {
        term = term.times(u).scale(&Rational::new(1, k as i64));
        if term.is_zero() {
            break;
        }
        sum.add_assign(&term);
    }
    Ok(sum)
}

impl PartialEq for HJet {
    /// Equality of all coefficients up to the smaller of the two orders.
    fn eq(&self, other: &Self) -> bool {
        let upto = self.order.min(other.order);
        let len = self.coeffs.len().max(other.coeffs.len()).min(upto.saturating_add(1));
        (0..len).all(|k| self.coeff(k) == other.coeff(k))
    }
}

impl Coeff for HJet {
    fn zero() -> Self {
        HJet { order: EXACT, coeffs: Vec::new() }
    }
    fn one() -> Self {
        HJet { order: EXACT, coeffs: vec![BetaPoly::one()] }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn plus(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len)
            .map(|k| match (self.coeffs.get(k), rhs.coeffs.get(k)) {
                (Some(a), Some(b)) => a.plus(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        HJet::from_coeffs(order, coeffs)
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.plus(&rhs.negate())
    }
    fn times(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return HJet { order, coeffs: Vec::new() };
        }
        let full = self.coeffs.len() + rhs.coeffs.len() - 1;
        let len = if order == EXACT { full } else { full.min(order + 1) };
        let mut coeffs = vec![BetaPoly::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i >= len {
                break;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                coeffs[i + j].add_assign(&a.times(b));
            }
        }
        HJet::from_coeffs(order, coeffs)
    }
    fn negate(&self) -> Self {
        HJet { order: self.order, coeffs: self.coeffs.iter().map(|c| c.negate()).collect() }
    }
    fn from_rational(r: &Rational) -> Self {
        HJet::from_coeffs(EXACT, vec![BetaPoly::constant(r.clone())])
    }
    fn as_rational(&self) -> Option<Rational> {
        match self.coeffs.as_slice() {
            [] => Some(Rational::zero()),
            [c] => c.as_rational(),
            _ => None,
        }
    }
    fn is_atomic(&self) -> bool {
        match self.coeffs.as_slice() {
            [] => true,
            [c] => c.is_atomic(),
            _ => self.coeffs.iter().filter(|c| !c.is_zero()).count() == 1 && self.coeffs.last().unwrap().is_atomic(),
        }
    }
    fn scale(&self, r: &Rational) -> Self {
        HJet::from_coeffs(self.order, self.coeffs.iter().map(|c| c.scale(r)).collect())
    }
}

impl HasBeta for HJet {
    fn beta() -> Self {
        HJet::from_coeffs(EXACT, vec![BetaPoly::beta()])
    }
}

impl fmt::Display for HJet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let var = match k {
                    0 => String::new(),
                    1 => "h".to_string(),
                    _ => format!("h^{k}"),
                };
                fmt_scaled(c, &var)
            })
            .collect();
        f.write_str(&join_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bh(order: usize) -> HJet {
        HJet::beta().times(&HJet::h(order))
    }

    #[test]
    fn exp_of_beta_h() {
        let e = jet_exp(&bh(4)).unwrap();
        assert_eq!(e.to_string(), "1 + b*h + 1/2*b^2*h^2 + 1/6*b^3*h^3 + 1/24*b^4*h^4");
        assert_eq!(jet_exp(&HJet::zero()).unwrap(), HJet::one());
    }

    #[test]
    fn exp_rejects_constant_term() {
        let u = HJet::h(4).plus(&HJet::one());
        assert!(matches!(jet_exp(&u), Err(Error::Domain(_))));
    }

    #[test]
    fn inverse_pairs() {
        let h = HJet::h(4);
        let two_h = h.scale(&Rational::from_int(2));
        let prod = jet_exp(&two_h).unwrap().times(&jet_exp(&two_h.negate()).unwrap());
        assert_eq!(prod, HJet::constant(4, BetaPoly::one()));

        let a = HJet::h(2).negate().times(&HJet::beta()).plus(&HJet::one());
        assert_eq!(a.inverse().unwrap().to_string(), "1 + b*h + b^2*h^2");
        assert!(HJet::h(3).inverse().is_err());
    }

    #[test]
    fn geometric_series() {
        let h = HJet::h(4);
        let a = HJet::one().plus(&h);
        let b = HJet::from_coeffs(
            4,
            [1, -1, 1, -1, 1].iter().map(|&c| BetaPoly::constant(Rational::from_int(c))).collect(),
        );
        let p = a.times(&b);
        assert!(p.minus(&HJet::one()).is_zero());
    }

    #[test]
    fn exponent_law() {
        let h = HJet::h(4);
        let cube = jet_exp(&h).unwrap().power(3);
        assert_eq!(cube, jet_exp(&h.scale(&Rational::from_int(3))).unwrap());
    }

    #[test]
    fn mixed_orders_truncate_to_smaller() {
        let a = jet_exp(&bh(4)).unwrap();
        let b = jet_exp(&bh(2)).unwrap();
        let p = a.times(&b);
        assert_eq!(p.order(), Some(2));
        assert_eq!(p.coeff(2), BetaPoly::monomial(2, Rational::from_int(2)));
        assert_eq!(p.coeff(3), BetaPoly::zero());
    }
}
