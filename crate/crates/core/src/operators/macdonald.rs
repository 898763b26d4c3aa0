//! Macdonald operators
//! `D_n^r = t^{r(r-1)/2} Σ_{|I|=r} Π_{i∈I, j∉I} (t x_i - x_j)/(x_i - x_j) Π_{i∈I} T_{q,x_i}`.
//!
//! Every subset term is brought over the full Vandermonde
//! `V = Π_{a<b} (x_a - x_b)`: with `V_I`, `V_{I^c}` the Vandermondes of the
//! subset and its complement,
//! `Π_{i∈I, j∉I} (x_i - x_j) = ε_I V / (V_I V_{I^c})`, where
//! `ε_I = (-1)^{#{(i,j): i∈I, j∉I, i>j}}`. The numerators
//! `ε_I V_I V_{I^c} Π (t x_i - x_j)` are precomputed once per operator; one
//! exact division by `V` finishes each application.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::multipoly::MultiPoly;
use crate::rings::{jet_exp, BetaPoly, Coeff, HJet, HasBeta, QtPoly, Rational, UniPoly};

use super::basic::{powers_upto, subsets, vandermonde};
use super::LinearOperator;

/// Precomputed subset numerators for one `(n, r, t)`.
#[derive(Clone, Debug)]
pub struct SubsetKernels<C> {
    n: usize,
    r: usize,
    vandermonde: MultiPoly<C>,
    kernels: Vec<(Vec<usize>, MultiPoly<C>)>,
    prefactor: C,
}

impl<C: Coeff> SubsetKernels<C> {
    pub fn new(n: usize, r: usize, t: &C) -> Result<Self> {
        if r == 0 || r > n {
            return Err(Error::Domain(format!("Macdonald operator needs 1 <= r <= n, got n={n}, r={r}")));
        }
        let mut kernels = Vec::new();
        for set in subsets(n, r) {
            let comp: Vec<usize> = (0..n).filter(|j| !set.contains(j)).collect();
            let mut k = vandermonde::<C>(n, &set).times(&vandermonde(n, &comp));
            let mut inversions = 0;
            for &i in &set {
                for &j in &comp {
                    if i > j {
                        inversions += 1;
                    }
                    let mut factor = MultiPoly::var(n, i).scale(t);
                    factor = factor.minus(&MultiPoly::var(n, j));
                    k = k.times(&factor);
                }
            }
            if inversions % 2 == 1 {
                k = k.negate();
            }
            kernels.push((set, k));
        }
        let prefactor = t.powu((r * (r - 1) / 2) as u32);
        Ok(SubsetKernels { n, r, vandermonde: vandermonde(n, &(0..n).collect::<Vec<_>>()), kernels, prefactor })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// `Σ_I Π (t x_i - x_j)/(x_i - x_j) · shift(I, f)` without the
    /// `t^{r(r-1)/2}` prefactor.
    pub fn apply_raw(&self, f: &MultiPoly<C>, shift: impl Fn(&[usize], &MultiPoly<C>) -> MultiPoly<C>) -> Result<MultiPoly<C>> {
        let parts: Vec<MultiPoly<C>> = self.kernels.iter().map(|(set, k)| k.times(&shift(set, f))).collect();
        let numer = MultiPoly::sum(self.n, parts.iter());
        numer
            .exact_div(&self.vandermonde)
            .map_err(|e| Error::Contract(format!("Macdonald numerator not divisible by the Vandermonde: {e}")))
    }

    /// Full operator: prefactor times [`Self::apply_raw`].
    pub fn apply(&self, f: &MultiPoly<C>, shift: impl Fn(&[usize], &MultiPoly<C>) -> MultiPoly<C>) -> Result<MultiPoly<C>> {
        Ok(self.apply_raw(f, shift)?.scale(&self.prefactor))
    }
}

/// Multiplies each monomial by `q^(Σ_{i∈I} e_i)`, i.e. `Π_{i∈I} T_{q,x_i}`.
fn subset_shift<C: Coeff>(powers: &[C], set: &[usize], f: &MultiPoly<C>) -> MultiPoly<C> {
    f.map_terms(|m, c| {
        let a: u32 = set.iter().map(|&i| m.exponent(i)).sum();
        Some(c.times(&powers[a as usize]))
    })
}

fn max_degree<C: Coeff>(f: &MultiPoly<C>) -> u32 {
    f.degree().unwrap_or(0)
}

/// `D_n^r` at rational `q`, `t` over any ring containing ℚ.
pub fn macdonald_specialized<C: Coeff>(n: usize, r: usize, q: &Rational, t: &Rational) -> Result<LinearOperator<C>> {
    let kernels = SubsetKernels::new(n, r, &C::from_rational(t))?;
    let qv = C::from_rational(q);
    Ok(LinearOperator::new(n, format!("D[{n},{r}](q={q},t={t})"), move |f| {
        f.check_symmetric()?;
        let powers = powers_upto(&qv, max_degree(f));
        kernels.apply(f, |set, g| subset_shift(&powers, set, g))
    }))
}

/// `D_n^r` with `q` and `t` kept symbolic: rational input, coefficients in
/// `ℚ[q,t]`.
#[derive(Clone, Debug)]
pub struct MacdonaldQt {
    kernels: SubsetKernels<QtPoly>,
}

impl MacdonaldQt {
    pub fn new(n: usize, r: usize) -> Result<Self> {
        Ok(MacdonaldQt { kernels: SubsetKernels::new(n, r, &QtPoly::t())? })
    }

    pub fn apply(&self, f: &MultiPoly<Rational>) -> Result<MultiPoly<QtPoly>> {
        f.check_symmetric()?;
        let lifted: MultiPoly<QtPoly> = MultiPoly::from_rational_poly(f);
        self.kernels.apply(&lifted, |set, g| {
            g.map_terms(|m, c| {
                let a: u32 = set.iter().map(|&i| m.exponent(i)).sum();
                Some(c.shift_q(a))
            })
        })
    }
}

/// Substitutes `q = e^h`, `t = e^{βh}` into a `ℚ[q,t]` coefficient,
/// truncating at `order`. Exponentials are memoised per `(a, b)`.
pub struct JetSubstitution {
    order: usize,
    cache: HashMap<(u32, u32), HJet>,
}

impl JetSubstitution {
    pub fn new(order: usize) -> Self {
        JetSubstitution { order, cache: HashMap::new() }
    }

    /// `e^{(a + bβ)h}`.
    fn exp_monomial(&mut self, a: u32, b: u32) -> HJet {
        let order = self.order;
        self.cache
            .entry((a, b))
            .or_insert_with(|| {
                let rate = BetaPoly::from_coeffs([(0, Rational::from_int(a as i64)), (1, Rational::from_int(b as i64))]);
                let u = HJet::constant(order, rate).times(&HJet::h(order));
                jet_exp(&u).expect("zero constant term")
            })
            .clone()
    }

    pub fn apply(&mut self, c: &QtPoly) -> HJet {
        let mut acc = HJet::constant(self.order, BetaPoly::zero());
        for ((a, b), coef) in c.terms() {
            acc = acc.plus(&self.exp_monomial(a, b).scale(coef));
        }
        acc
    }

    pub fn apply_poly(&mut self, f: &MultiPoly<QtPoly>) -> MultiPoly<HJet> {
        MultiPoly::from_terms(f.n(), f.terms().iter().map(|(m, c)| (*m, self.apply(c))))
    }
}

/// Jet-mode `D_n^r` on rational symmetric input, through the exact
/// `ℚ[q,t]` image followed by substitution.
pub fn macdonald_jet(n: usize, r: usize, order: usize) -> Result<LinearOperator<HJet>> {
    let qt = MacdonaldQt::new(n, r)?;
    // Inputs with non-rational coefficients fall back to the literal jet
    // evaluation, built on first use.
    let literal: OnceLock<Result<SubsetKernels<HJet>>> = OnceLock::new();
    let q = jet_exp(&HJet::h(order))?;
    Ok(LinearOperator::new(n, format!("D[{n},{r}](h^{order})"), move |f: &MultiPoly<HJet>| {
        f.check_symmetric()?;
        let rational: Option<Vec<_>> = f.terms().iter().map(|(m, c)| c.as_rational().map(|r| (*m, r))).collect();
        match rational {
            Some(terms) => {
                let image = qt.apply(&MultiPoly::from_terms(f.n(), terms))?;
                Ok(JetSubstitution::new(order).apply_poly(&image))
            }
            None => {
                let kernels = literal
                    .get_or_init(|| SubsetKernels::new(n, r, &jet_exp(&HJet::beta().times(&HJet::h(order)))?))
                    .as_ref()
                    .map_err(Clone::clone)?;
                let powers = powers_upto(&q, max_degree(f));
                kernels.apply(f, |set, g| subset_shift(&powers, set, g))
            }
        }
    }))
}

/// Jet-mode `D_n^r` evaluated literally in the jet ring: `q = e^h`,
/// `t = e^{βh}` as jets, shifts as jet powers. Slower; kept as an
/// independent path for cross-checking [`macdonald_jet`].
pub fn macdonald_jet_literal(n: usize, r: usize, order: usize) -> Result<LinearOperator<HJet>> {
    let t = jet_exp(&HJet::beta().times(&HJet::h(order)))?;
    let q = jet_exp(&HJet::h(order))?;
    let kernels = SubsetKernels::new(n, r, &t)?;
    Ok(LinearOperator::new(n, format!("D[{n},{r}](h^{order}, literal)"), move |f| {
        f.check_symmetric()?;
        let powers = powers_upto(&q, max_degree(f));
        kernels.apply(f, |set, g| subset_shift(&powers, set, g))
    }))
}

/// `Σ_{|I|=r} Π_{i∈I, j∉I} (t x_i - x_j)/(x_i - x_j)` as a t-polynomial.
/// Errors if the sum is not a constant in x.
pub fn scalar_part(n: usize, r: usize) -> Result<UniPoly> {
    let kernels = SubsetKernels::new(n, r, &UniPoly::var())?;
    let value = kernels.apply_raw(&MultiPoly::one(n), |_, g| g.clone())?;
    match value.terms() {
        [] => Ok(UniPoly::zero()),
        [(m, c)] if m.degree() == 0 => Ok(c.clone()),
        _ => Err(Error::Contract(format!("scalar part depends on x: {value}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipoly::{monomial_symmetric, Partition};

    fn m(parts: &[u32], n: usize) -> MultiPoly<Rational> {
        monomial_symmetric(&Partition::new(parts.to_vec()), n).unwrap()
    }

    #[test]
    fn symbolic_examples() {
        let d21 = MacdonaldQt::new(2, 1).unwrap();
        assert_eq!(d21.apply(&MultiPoly::one(2)).unwrap().to_string(), "1 + t");
        assert_eq!(d21.apply(&m(&[1], 2)).unwrap().to_string(), "(1 + q*t)*x1 + (1 + q*t)*x2");
        let d22 = MacdonaldQt::new(2, 2).unwrap();
        assert_eq!(d22.apply(&m(&[1, 1], 2)).unwrap().to_string(), "q^2*t*x1*x2");
    }

    #[test]
    fn specialized_matches_symbolic() {
        let (q, t) = (Rational::new(2, 3), Rational::new(5, 7));
        for n in 2..=3 {
            for r in 1..=n {
                let op = macdonald_specialized::<Rational>(n, r, &q, &t).unwrap();
                let sym = MacdonaldQt::new(n, r).unwrap();
                for lam in [vec![1], vec![2, 1], vec![1, 1]] {
                    let f = m(&lam, n);
                    let lhs = op.apply(&f).unwrap();
                    let rhs = sym.apply(&f).unwrap().map_coeffs(|c| c.eval(&q, &t));
                    assert_eq!(lhs, rhs, "n={n} r={r} lambda={lam:?}");
                }
            }
        }
    }

    #[test]
    fn jet_routes_agree() {
        for (n, r) in [(2, 1), (3, 1), (3, 2)] {
            let fast = macdonald_jet(n, r, 3).unwrap();
            let slow = macdonald_jet_literal(n, r, 3).unwrap();
            for lam in [vec![1], vec![2], vec![1, 1]] {
                let f = m(&lam, n).map_coeffs(HJet::from_rational);
                assert_eq!(fast.apply(&f).unwrap(), slow.apply(&f).unwrap(), "n={n} r={r}");
            }
        }
    }

    #[test]
    fn scalar_part_small() {
        assert_eq!(scalar_part(3, 2).unwrap(), UniPoly::from_ints(&[1, 1, 1]));
        assert_eq!(scalar_part(4, 2).unwrap(), UniPoly::from_ints(&[1, 1, 2, 1, 1]));
    }

    #[test]
    fn rejects_non_symmetric() {
        let op = macdonald_specialized::<Rational>(2, 1, &Rational::from_int(2), &Rational::from_int(3)).unwrap();
        assert!(matches!(op.apply(&MultiPoly::var(2, 0)), Err(Error::NonSymmetric { .. })));
    }
}
