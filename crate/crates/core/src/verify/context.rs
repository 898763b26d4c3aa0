//! Extraction of h-expansion coefficients of `D_n^r` as matrices, with the
//! caches shared by a run of identity checks.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::multipoly::{monomial_symmetric, partitions_upto, MultiPoly, Partition};
use crate::operators::{MacdonaldQt, JetSubstitution, OperatorMatrix};
use crate::rings::{BetaPoly, Coeff, HJet, QtPoly, Rational};

use super::closed::{Block, BlockCache, ClosedForm};

/// `m_λ`, with `m_∅ = 1`.
pub(crate) fn msym<C: Coeff>(lam: &Partition, n: usize) -> Result<MultiPoly<C>> {
    if lam.is_empty() {
        Ok(MultiPoly::one(n))
    } else {
        monomial_symmetric(lam, n)
    }
}

/// Images `D_n^r m_λ` over `ℚ[q,t]` for one basis window.
struct Images {
    basis: Vec<Partition>,
    columns: Vec<MultiPoly<QtPoly>>,
}

impl Images {
    fn new(n: usize, r: usize, basis: &[Partition]) -> Result<Self> {
        let op = MacdonaldQt::new(n, r)?;
        let mut columns = Vec::with_capacity(basis.len());
        for lam in basis {
            columns.push(op.apply(&msym(lam, n)?)?);
        }
        Ok(Images { basis: basis.to_vec(), columns })
    }

    /// The `h^k` coefficients of the columns under `q = e^h`, `t = e^{βh}`.
    fn order(&self, n: usize, k: usize) -> Result<OperatorMatrix<BetaPoly>> {
        let mut sub = JetSubstitution::new(k);
        let mut cols = Vec::with_capacity(self.columns.len());
        for image in &self.columns {
            let jets = sub.apply_poly(image);
            let coeffs = jets.map_coeffs(|c: &HJet| c.coeff(k));
            cols.push(coeffs.to_msym_coords()?);
        }
        OperatorMatrix::from_columns(n, self.basis.clone(), cols)
    }
}

/// `h^k` coefficient of `D_n^r` as a matrix on `basis`: apply `D_n^r` to
/// each `m_λ`, expand under `q = e^h`, `t = e^{βh}` and read off the
/// coordinates of the `h^k` coefficient.
pub fn extract_order(n: usize, r: usize, k: usize, basis: &[Partition]) -> Result<OperatorMatrix<BetaPoly>> {
    Images::new(n, r, basis)?.order(n, k)
}

/// `h^k` coefficient of `D_n^r` applied to a symmetric polynomial with
/// β-polynomial coefficients, computed through its m-expansion.
pub fn order_apply(n: usize, r: usize, k: usize, f: &MultiPoly<BetaPoly>) -> Result<MultiPoly<BetaPoly>> {
    let op = MacdonaldQt::new(n, r)?;
    let mut sub = JetSubstitution::new(k);
    let mut parts = Vec::new();
    for (lam, c) in f.to_msym_coords()? {
        let image = sub.apply_poly(&op.apply(&msym(&lam, n)?)?);
        parts.push(image.map_coeffs(|j: &HJet| j.coeff(k)).scale(&c));
    }
    Ok(MultiPoly::sum(n, parts.iter()))
}

/// Caches for a batch of checks: Macdonald images per `(n, r, degree)`,
/// expansion orders per `(n, r, k, degree)`, block matrices per `(n, degree)`.
pub struct Context {
    jet_order: usize,
    images: HashMap<(usize, usize, u32), Images>,
    orders: HashMap<(usize, usize, usize, u32), OperatorMatrix<BetaPoly>>,
    blocks: HashMap<(usize, u32), BlockCache>,
}

impl Context {
    pub fn new(jet_order: usize) -> Self {
        Context { jet_order, images: HashMap::new(), orders: HashMap::new(), blocks: HashMap::new() }
    }

    pub fn jet_order(&self) -> usize {
        self.jet_order
    }

    pub fn basis(n: usize, degree: u32) -> Vec<Partition> {
        partitions_upto(degree, n)
    }

    /// Cached [`extract_order`] on the window `|λ| ≤ degree`.
    pub fn order(&mut self, n: usize, r: usize, k: usize, degree: u32) -> Result<OperatorMatrix<BetaPoly>> {
        if k > self.jet_order {
            return Err(Error::Domain(format!("order {k} exceeds the jet order {}", self.jet_order)));
        }
        if let Some(m) = self.orders.get(&(n, r, k, degree)) {
            return Ok(m.clone());
        }
        let key = (n, r, degree);
        if let std::collections::hash_map::Entry::Vacant(e) = self.images.entry(key) {
            e.insert(Images::new(n, r, &Self::basis(n, degree))?);
        }
        let m = self.images[&key].order(n, k)?;
        self.orders.insert((n, r, k, degree), m.clone());
        Ok(m)
    }

    fn blocks(&mut self, n: usize, degree: u32) -> &mut BlockCache {
        self.blocks.entry((n, degree)).or_insert_with(|| BlockCache::new(n, Self::basis(n, degree)))
    }

    pub fn block(&mut self, n: usize, degree: u32, b: Block) -> Result<OperatorMatrix<BetaPoly>> {
        Ok(self.blocks(n, degree).get(b)?.clone())
    }

    pub fn closed(&mut self, cf: &ClosedForm, degree: u32) -> Result<OperatorMatrix<BetaPoly>> {
        cf.matrix(self.blocks(cf.n(), degree))
    }
}

/// Keeps the `β^j` coefficient of every entry.
pub fn beta_slice(m: &OperatorMatrix<BetaPoly>, j: u32) -> OperatorMatrix<BetaPoly> {
    m.map(|c| BetaPoly::constant(c.coeff(j)))
}

/// Evaluates every entry at a rational β.
pub fn at_beta(m: &OperatorMatrix<BetaPoly>, beta: &Rational) -> OperatorMatrix<Rational> {
    m.map(|c| c.eval(beta))
}
