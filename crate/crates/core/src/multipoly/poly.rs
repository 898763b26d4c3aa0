use std::collections::BTreeMap;
use std::fmt;

use super::{Monomial, Partition, MAX_VARS};
use crate::error::{Error, Result};
use crate::rings::{fmt_scaled, join_terms, Coeff, Rational};

/// Sparse polynomial in `x_1..x_n` over the ring `C`.
///
/// Terms are kept sorted by ascending monomial (graded lex) with no zero
/// coefficients, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Debug)]
pub struct MultiPoly<C> {
    n: usize,
    terms: Vec<(Monomial, C)>,
}

/// Binary operation selector for [`poly_arith`].
#[derive(Clone, Debug)]
pub enum PolyOp<C> {
    Add,
    Mul,
    Scale(C),
}

/// Checked ring operation; errors on mismatched variable counts.
pub fn poly_arith<C: Coeff>(f: &MultiPoly<C>, g: &MultiPoly<C>, op: PolyOp<C>) -> Result<MultiPoly<C>> {
    if let PolyOp::Scale(c) = op {
        return Ok(f.scale(&c));
    }
    if f.n != g.n {
        return Err(Error::Domain(format!("variable count mismatch: {} vs {}", f.n, g.n)));
    }
    Ok(match op {
        PolyOp::Add => f.plus(g),
        PolyOp::Mul => f.times(g),
        PolyOp::Scale(_) => unreachable!(),
    })
}

impl<C: Coeff> MultiPoly<C> {
    pub fn zero(n: usize) -> Self {
        assert!(n <= MAX_VARS, "at most {MAX_VARS} variables supported");
        MultiPoly { n, terms: Vec::new() }
    }

    pub fn constant(n: usize, c: C) -> Self {
        MultiPoly::monomial(n, Monomial::ONE, c)
    }

    pub fn one(n: usize) -> Self {
        MultiPoly::constant(n, C::one())
    }

    pub fn monomial(n: usize, m: Monomial, c: C) -> Self {
        let mut p = MultiPoly::zero(n);
        if !c.is_zero() {
            p.terms.push((m, c));
        }
        p
    }

    /// The variable `x_i` (0-based index).
    pub fn var(n: usize, i: usize) -> Self {
        assert!(i < n);
        MultiPoly::monomial(n, Monomial::var(i), C::one())
    }

    /// `x_i - x_j` (0-based indices).
    pub fn var_diff(n: usize, i: usize, j: usize) -> Self {
        MultiPoly::from_terms(n, [(Monomial::var(i), C::one()), (Monomial::var(j), C::one().negate())])
    }

    /// Builds a polynomial from arbitrary terms, combining repeats.
    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut p = MultiPoly::zero(n);
        p.terms = terms.into_iter().collect();
        p.canonicalize();
        p
    }

    /// Convenience constructor from exponent vectors.
    pub fn from_exponents(n: usize, terms: impl IntoIterator<Item = (Vec<u32>, C)>) -> Self {
        MultiPoly::from_terms(
            n,
            terms.into_iter().map(|(e, c)| {
                assert_eq!(e.len(), n, "exponent vector length must equal n");
                (Monomial::from_exponents(&e), c)
            }),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> &[(Monomial, C)] {
        &self.terms
    }

    pub fn coeff(&self, m: Monomial) -> C {
        match self.terms.binary_search_by(|t| t.0.cmp(&m)) {
            Ok(pos) => self.terms[pos].1.clone(),
            Err(_) => C::zero(),
        }
    }

    /// Largest monomial under graded lex, with its coefficient.
    pub fn leading(&self) -> Option<&(Monomial, C)> {
        self.terms.last()
    }

    /// Total degree; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.last().map(|t| t.0.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].0.degree() == w[1].0.degree())
    }

    pub fn plus(&self, rhs: &Self) -> Self {
        self.merge(rhs, false)
    }

    pub fn minus(&self, rhs: &Self) -> Self {
        self.merge(rhs, true)
    }

    pub fn negate(&self) -> Self {
        MultiPoly { n: self.n, terms: self.terms.iter().map(|(m, c)| (*m, c.negate())).collect() }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return MultiPoly::zero(self.n);
        }
        if c.is_one() {
            return self.clone();
        }
        self.map_coeffs_pruned(|x| x.times(c))
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return MultiPoly::zero(self.n);
        }
        self.map_coeffs_pruned(|x| x.scale(r))
    }

    /// Multiplies every term by the monomial `m`.
    pub fn shift(&self, m: Monomial) -> Self {
        MultiPoly { n: self.n, terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect() }
    }

    pub fn times(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.n, rhs.n);
        if self.is_zero() || rhs.is_zero() {
            return MultiPoly::zero(self.n);
        }
        if rhs.terms.len() == 1 {
            let (m, c) = &rhs.terms[0];
            return self.shift(*m).scale(c);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return rhs.shift(*m).scale(c);
        }
        let mut prod = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                prod.push((ma.mul(*mb), ca.times(cb)));
            }
        }
        MultiPoly::from_terms(self.n, prod)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(MultiPoly::one(self.n), |acc, _| acc.times(self))
    }

    /// Sum of many polynomials in one canonicalization pass.
    pub fn sum<'a>(n: usize, parts: impl IntoIterator<Item = &'a MultiPoly<C>>) -> Self {
        MultiPoly::from_terms(n, parts.into_iter().flat_map(|p| p.terms.iter().cloned()))
    }

    /// Exact quotient `q` with `q·g = self`.
    ///
    /// Division by leading terms under graded lex. The leading coefficient of
    /// `g` must be a nonzero rational constant. The quotient is verified by
    /// multiplying back; any remainder is reported as an error.
    pub fn exact_div(&self, g: &Self) -> Result<Self> {
        if self.n != g.n {
            return Err(Error::Domain(format!("variable count mismatch: {} vs {}", self.n, g.n)));
        }
        let (lm, lc) = g.leading().ok_or_else(|| Error::Domain("division by zero polynomial".into()))?;
        let lc_inv = lc
            .as_rational()
            .and_then(|r| r.recip())
            .ok_or_else(|| Error::Domain(format!("divisor leading coefficient {lc} is not a unit")))?;
        let (lm, n) = (*lm, self.n);
        let tail: Vec<(Monomial, C)> = g.terms[..g.terms.len() - 1].to_vec();

        let mut rem: BTreeMap<Monomial, C> = self.terms.iter().cloned().collect();
        let mut quot: Vec<(Monomial, C)> = Vec::new();
        let mut stuck: Vec<(Monomial, C)> = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            let Some(qm) = m.div(lm, n) else {
                stuck.push((m, c));
                continue;
            };
            let qc = c.scale(&lc_inv);
            for (tm, tc) in &tail {
                let key = qm.mul(*tm);
                let delta = qc.times(tc);
                match rem.entry(key) {
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let v = e.get().minus(&delta);
                        if v.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = v;
                        }
                    }
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(delta.negate());
                    }
                }
            }
            quot.push((qm, qc));
        }
        if !stuck.is_empty() {
            let r = MultiPoly::from_terms(n, stuck);
            return Err(Error::InexactDivision { remainder: r.to_string() });
        }
        let q = MultiPoly::from_terms(n, quot);
        if q.times(g) != *self {
            return Err(Error::Contract(format!("division post-check failed for ({self}) / ({g})")));
        }
        Ok(q)
    }

    /// `K_ij f`: exchanges `x_i` and `x_j` (0-based).
    pub fn swap(&self, i: usize, j: usize) -> Self {
        MultiPoly::from_terms(self.n, self.terms.iter().map(|(m, c)| (m.swap(i, j), c.clone())))
    }

    /// `x_i ∂_i f` (0-based).
    pub fn euler(&self, i: usize) -> Self {
        self.map_terms(|m, c| {
            let e = m.exponent(i);
            (e != 0).then(|| c.scale(&Rational::from_int(e as i64)))
        })
    }

    /// `(f - K_ij f) / (x_i - x_j)`, computed monomial by monomial.
    ///
    /// For `a > b`, `x_i^a x_j^b - x_i^b x_j^a = (x_i - x_j) (x_i x_j)^b
    /// Σ_{k<a-b} x_i^{a-b-1-k} x_j^k`.
    pub fn divided_difference(&self, i: usize, j: usize) -> Self {
        let mut out = Vec::new();
        for (m, c) in &self.terms {
            let (a, b) = (m.exponent(i), m.exponent(j));
            if a == b {
                continue;
            }
            let (lo, hi, c) = if a > b { (b, a, c.clone()) } else { (a, b, c.negate()) };
            let base = m.with_exponent(i, lo).with_exponent(j, lo);
            for k in 0..hi - lo {
                let mono = base.with_exponent(i, lo + hi - lo - 1 - k).with_exponent(j, lo + k);
                out.push((mono, c.clone()));
            }
        }
        MultiPoly::from_terms(self.n, out)
    }

    /// Applies a per-term map; `None` drops the term. Monomials must stay
    /// distinct and the order is restored afterwards.
    pub fn map_terms(&self, f: impl Fn(Monomial, &C) -> Option<C>) -> Self {
        let terms = self
            .terms
            .iter()
            .filter_map(|(m, c)| f(*m, c).filter(|v| !v.is_zero()).map(|v| (*m, v)))
            .collect();
        MultiPoly { n: self.n, terms }
    }

    /// Changes the coefficient ring.
    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> MultiPoly<D> {
        MultiPoly {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (*m, f(c))).filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Embeds a rational polynomial into this ring.
    pub fn from_rational_poly(p: &MultiPoly<Rational>) -> Self {
        p.map_coeffs(C::from_rational)
    }

    /// Checks invariance under every adjacent transposition.
    pub fn check_symmetric(&self) -> Result<()> {
        for i in 0..self.n.saturating_sub(1) {
            for (m, c) in &self.terms {
                if self.coeff(m.swap(i, i + 1)) != *c {
                    return Err(Error::NonSymmetric { i: i + 1, j: i + 2 });
                }
            }
        }
        Ok(())
    }

    pub fn is_symmetric(&self) -> bool {
        self.check_symmetric().is_ok()
    }

    /// Coordinates in the monomial-symmetric basis; errors on non-symmetric
    /// input. A constant term appears under the empty partition.
    pub fn to_msym_coords(&self) -> Result<BTreeMap<Partition, C>> {
        self.check_symmetric()?;
        Ok(self
            .terms
            .iter()
            .filter(|(m, _)| m.is_sorted(self.n))
            .map(|(m, c)| (Partition::new(m.exponents(self.n)), c.clone()))
            .collect())
    }

    fn map_coeffs_pruned(&self, f: impl Fn(&C) -> C) -> Self {
        self.map_terms(|_, c| Some(f(c)))
    }

    fn merge(&self, rhs: &Self, negate_rhs: bool) -> Self {
        debug_assert_eq!(self.n, rhs.n);
        use std::cmp::Ordering::*;
        let (a, b) = (&self.terms, &rhs.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Greater => {
                    out.push((b[j].0, if negate_rhs { b[j].1.negate() } else { b[j].1.clone() }));
                    j += 1;
                }
                Equal => {
                    let c = if negate_rhs { a[i].1.minus(&b[j].1) } else { a[i].1.plus(&b[j].1) };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (*m, if negate_rhs { c.negate() } else { c.clone() })));
        MultiPoly { n: self.n, terms: out }
    }

    fn canonicalize(&mut self) {
        let mut terms = std::mem::take(&mut self.terms);
        terms.sort_by_key(|a| a.0);
        let mut out: Vec<(Monomial, C)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1.add_assign(&c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| !t.1.is_zero());
        self.terms = out;
    }
}

/// The monomial symmetric polynomial `m_λ` in `n` variables.
pub fn monomial_symmetric<C: Coeff>(lambda: &Partition, n: usize) -> Result<MultiPoly<C>> {
    if lambda.len() > n {
        return Err(Error::Domain(format!("partition {lambda} has more than {n} parts")));
    }
    let mut exps: Vec<u32> = lambda.parts().to_vec();
    exps.resize(n, 0);
    // Distinct permutations of a multiset, starting from the sorted
    // (ascending) arrangement and stepping with next_permutation.
    exps.sort_unstable();
    let mut terms = Vec::new();
    loop {
        terms.push((Monomial::from_exponents(&exps), C::one()));
        if !next_permutation(&mut exps) {
            break;
        }
    }
    Ok(MultiPoly::from_terms(n, terms))
}

fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl<C: Coeff> fmt::Display for MultiPoly<C> {
    /// Terms in descending graded-lex order, e.g. `x1^2 + 2*x1*x2 + x2^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms.iter().rev().map(|(m, c)| fmt_scaled(c, &m.render(self.n))).collect();
        f.write_str(&join_terms(terms))
    }
}
