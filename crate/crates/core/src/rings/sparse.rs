//! Sparse polynomials with rational coefficients: [`BetaPoly`] in one
//! variable β and [`QtPoly`] in the two Macdonald parameters q, t.

use std::fmt;

use super::{fmt_scaled, join_terms, Coeff, HasBeta, Rational};

/// Exponent keys for [`Sparse`]: added under multiplication, ordered for
/// canonical storage.
pub(crate) trait Exponent: Copy + Ord + fmt::Debug + Send + Sync + 'static {
    const ZERO: Self;
    fn mul(self, other: Self) -> Self;
}

impl Exponent for u32 {
    const ZERO: Self = 0;
    fn mul(self, other: Self) -> Self {
        self + other
    }
}

impl Exponent for (u32, u32) {
    const ZERO: Self = (0, 0);
    fn mul(self, other: Self) -> Self {
        (self.0 + other.0, self.1 + other.1)
    }
}

/// Sorted `(exponent, coefficient)` pairs with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub(crate) struct Sparse<K: Exponent> {
    terms: Vec<(K, Rational)>,
}

impl<K: Exponent> Sparse<K> {
    fn zero() -> Self {
        Sparse { terms: Vec::new() }
    }

    fn constant(c: Rational) -> Self {
        Self::monomial(K::ZERO, c)
    }

    fn monomial(k: K, c: Rational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Sparse { terms: vec![(k, c)] }
        }
    }

    fn from_unsorted(mut terms: Vec<(K, Rational)>) -> Self {
        terms.sort_by_key(|a| a.0);
        let mut out: Vec<(K, Rational)> = Vec::with_capacity(terms.len());
        for (k, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == k => last.1 = &last.1 + &c,
                _ => out.push((k, c)),
            }
        }
        out.retain(|t| !t.1.is_zero());
        Sparse { terms: out }
    }

    fn combine(&self, rhs: &Self, negate_rhs: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &rhs.terms);
        while i < a.len() || j < b.len() {
            let take = if i == a.len() {
                std::cmp::Ordering::Greater
            } else if j == b.len() {
                std::cmp::Ordering::Less
            } else {
                a[i].0.cmp(&b[j].0)
            };
            match take {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    let c = if negate_rhs { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate_rhs { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Sparse { terms: out }
    }

    fn mul(&self, rhs: &Self) -> Self {
        if self.terms.is_empty() || rhs.terms.is_empty() {
            return Self::zero();
        }
        if self.terms.len() == 1 && self.terms[0].0 == K::ZERO {
            return rhs.scale(&self.terms[0].1);
        }
        if rhs.terms.len() == 1 && rhs.terms[0].0 == K::ZERO {
            return self.scale(&rhs.terms[0].1);
        }
        let mut prod = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (ka, ca) in &self.terms {
            for (kb, cb) in &rhs.terms {
                prod.push((ka.mul(*kb), ca * cb));
            }
        }
        Self::from_unsorted(prod)
    }

    fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Sparse { terms: self.terms.iter().map(|(k, c)| (*k, c * r)).collect() }
    }

    fn negate(&self) -> Self {
        Sparse { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }

    fn as_rational(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(k, c)] if *k == K::ZERO => Some(c.clone()),
            _ => None,
        }
    }

    fn coeff(&self, k: K) -> Rational {
        match self.terms.binary_search_by(|t| t.0.cmp(&k)) {
            Ok(pos) => self.terms[pos].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    fn is_one(&self) -> bool {
        matches!(self.terms.as_slice(), [(k, c)] if *k == K::ZERO && c.is_one())
    }
}

macro_rules! sparse_ring {
    ($name:ident) => {
        impl Coeff for $name {
            fn zero() -> Self {
                $name(Sparse::zero())
            }
            fn one() -> Self {
                $name(Sparse::constant(Rational::one()))
            }
            fn is_zero(&self) -> bool {
                self.0.terms.is_empty()
            }
            fn plus(&self, rhs: &Self) -> Self {
                $name(self.0.combine(&rhs.0, false))
            }
            fn minus(&self, rhs: &Self) -> Self {
                $name(self.0.combine(&rhs.0, true))
            }
            fn times(&self, rhs: &Self) -> Self {
                $name(self.0.mul(&rhs.0))
            }
            fn negate(&self) -> Self {
                $name(self.0.negate())
            }
            fn from_rational(r: &Rational) -> Self {
                $name(Sparse::constant(r.clone()))
            }
            fn as_rational(&self) -> Option<Rational> {
                self.0.as_rational()
            }
            fn is_atomic(&self) -> bool {
                self.0.terms.len() <= 1
            }
            fn scale(&self, r: &Rational) -> Self {
                $name(self.0.scale(r))
            }
            fn is_one(&self) -> bool {
                self.0.is_one()
            }
        }
    };
}

/// Polynomial in β with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BetaPoly(Sparse<u32>);

sparse_ring!(BetaPoly);

impl BetaPoly {
    pub fn constant(c: Rational) -> Self {
        BetaPoly(Sparse::constant(c))
    }

    /// `c·β^k`.
    pub fn monomial(k: u32, c: Rational) -> Self {
        BetaPoly(Sparse::monomial(k, c))
    }

    pub fn from_coeffs(coeffs: impl IntoIterator<Item = (u32, Rational)>) -> Self {
        BetaPoly(Sparse::from_unsorted(coeffs.into_iter().collect()))
    }

    /// Coefficient of β^k.
    pub fn coeff(&self, k: u32) -> Rational {
        self.0.coeff(k)
    }

    /// Highest stored exponent, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.0.terms.last().map(|t| t.0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Rational)> {
        self.0.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn eval(&self, beta: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (k, c) in &self.0.terms {
            acc = &acc + &(c * &beta.pow(*k));
        }
        acc
    }
}

impl HasBeta for BetaPoly {
    fn beta() -> Self {
        BetaPoly::monomial(1, Rational::one())
    }
}

impl fmt::Display for BetaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .0
            .terms
            .iter()
            .map(|(k, c)| {
                let var = match k {
                    0 => String::new(),
                    1 => "b".to_string(),
                    _ => format!("b^{k}"),
                };
                fmt_scaled(c, &var)
            })
            .collect();
        f.write_str(&join_terms(terms))
    }
}

/// Polynomial in q and t with rational coefficients. Exact image of the
/// Macdonald operators before the substitution q = e^h, t = e^{βh}.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QtPoly(Sparse<(u32, u32)>);

sparse_ring!(QtPoly);

impl QtPoly {
    pub fn q() -> Self {
        QtPoly(Sparse::monomial((1, 0), Rational::one()))
    }

    pub fn t() -> Self {
        QtPoly(Sparse::monomial((0, 1), Rational::one()))
    }

    /// `c·q^a·t^b`.
    pub fn monomial(a: u32, b: u32, c: Rational) -> Self {
        QtPoly(Sparse::monomial((a, b), c))
    }

    /// Multiplies by `q^a` without touching coefficients.
    pub fn shift_q(&self, a: u32) -> Self {
        QtPoly(Sparse { terms: self.0.terms.iter().map(|((x, y), c)| ((x + a, *y), c.clone())).collect() })
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &Rational)> {
        self.0.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn eval(&self, q: &Rational, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for ((a, b), c) in &self.0.terms {
            acc = &acc + &(&(c * &q.pow(*a)) * &t.pow(*b));
        }
        acc
    }
}

impl fmt::Display for QtPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .0
            .terms
            .iter()
            .map(|((a, b), c)| {
                let mut parts = Vec::new();
                match a {
                    0 => {}
                    1 => parts.push("q".to_string()),
                    _ => parts.push(format!("q^{a}")),
                }
                match b {
                    0 => {}
                    1 => parts.push("t".to_string()),
                    _ => parts.push(format!("t^{b}")),
                }
                fmt_scaled(c, &parts.join("*"))
            })
            .collect();
        f.write_str(&join_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn beta_arithmetic_prunes_zeros() {
        let b = BetaPoly::beta();
        let one = BetaPoly::one();
        let sq = one.plus(&b).times(&one.plus(&b));
        assert_eq!(sq.to_string(), "1 + 2*b + b^2");
        assert_eq!(sq.degree(), Some(2));
        let diff = sq.minus(&sq);
        assert!(diff.is_zero());
        assert_eq!(diff.degree(), None);
        let neg = one.minus(&b.scale(&r(1, 2)));
        assert_eq!(neg.to_string(), "1 - 1/2*b");
        assert_eq!(neg.eval(&r(4, 1)), r(-1, 1));
    }

    #[test]
    fn atomicity_controls_parentheses() {
        assert!(BetaPoly::beta().is_atomic());
        assert!(BetaPoly::constant(r(3, 2)).is_atomic());
        assert!(BetaPoly::monomial(2, r(3, 1)).is_atomic());
        assert!(!BetaPoly::one().plus(&BetaPoly::beta()).is_atomic());
    }

    #[test]
    fn qt_monomials() {
        let p = QtPoly::q().times(&QtPoly::t()).plus(&QtPoly::one());
        assert_eq!(p.to_string(), "1 + q*t");
        assert_eq!(p.shift_q(2).to_string(), "q^2 + q^3*t");
        assert_eq!(p.eval(&r(2, 1), &r(1, 3)), r(5, 3));
    }
}
