//! Dunkl operators `d_i = x_i∂_i + β Σ_{j≠i} x_i/(x_i - x_j) (1 - K_ij)` and
//! their power sums `H_k = Σ_i d_i^k`.

use crate::multipoly::{Monomial, MultiPoly};
use crate::rings::HasBeta;

use super::LinearOperator;

/// `d_i f` (0-based `i`). The rational part is evaluated as an exact divided
/// difference, so the result is always a polynomial.
pub fn dunkl_apply<C: HasBeta>(i: usize, f: &MultiPoly<C>) -> MultiPoly<C> {
    let n = f.n();
    let mut parts = Vec::with_capacity(n);
    for j in (0..n).filter(|&j| j != i) {
        parts.push(f.divided_difference(i, j));
    }
    let rational = MultiPoly::sum(n, parts.iter()).shift(Monomial::var(i)).scale(&C::beta());
    f.euler(i).plus(&rational)
}

/// `H_k f = Σ_i d_i^k f`.
pub fn h_op_apply<C: HasBeta>(k: u32, f: &MultiPoly<C>) -> MultiPoly<C> {
    let n = f.n();
    let images: Vec<MultiPoly<C>> = (0..n)
        .map(|i| {
            let mut g = f.clone();
            for _ in 0..k {
                g = dunkl_apply(i, &g);
            }
            g
        })
        .collect();
    MultiPoly::sum(n, images.iter())
}

pub fn dunkl_op<C: HasBeta>(n: usize, i: usize) -> LinearOperator<C> {
    LinearOperator::new(n, format!("d{}", i + 1), move |f| Ok(dunkl_apply(i, f)))
}

pub fn h_op<C: HasBeta>(n: usize, k: u32) -> LinearOperator<C> {
    LinearOperator::new(n, format!("H{k}"), move |f| Ok(h_op_apply(k, f)))
}
