//! Auxiliary operators used by the second-order `H_3` identities.

use crate::error::Result;
use crate::multipoly::{Monomial, MultiPoly};
use crate::rings::{Coeff, Rational};

/// `(x_i∂_i - x_j∂_j) f / (x_i - x_j)` for symmetric `f`. The numerator is
/// antisymmetric in `(i, j)`, so the divided difference is twice the
/// quotient.
fn euler_diff_quotient<C: Coeff>(i: usize, j: usize, f: &MultiPoly<C>) -> MultiPoly<C> {
    let g = f.euler(i).minus(&f.euler(j));
    g.divided_difference(i, j).scale_rational(&Rational::new(1, 2))
}

/// `Σ_{i<j} (x_i + x_j)/(x_i - x_j) (x_i∂_i - x_j∂_j)`.
pub fn aux_a_apply<C: Coeff>(f: &MultiPoly<C>) -> Result<MultiPoly<C>> {
    f.check_symmetric()?;
    let n = f.n();
    let mut parts = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let s = MultiPoly::var(n, i).plus(&MultiPoly::var(n, j));
            parts.push(s.times(&euler_diff_quotient(i, j, f)));
        }
    }
    Ok(MultiPoly::sum(n, parts.iter()))
}

/// `Σ_i (Σ_{j≠i} x_i/(x_i-x_j)(1-K_ij)) (Σ_{j≠i} x_i/(x_i-x_j)(x_i∂_i-x_j∂_j))`.
pub fn beta2_lhs_apply<C: Coeff>(f: &MultiPoly<C>) -> Result<MultiPoly<C>> {
    f.check_symmetric()?;
    let n = f.n();
    let mut parts = Vec::new();
    for i in 0..n {
        let xi = Monomial::var(i);
        let inner: Vec<MultiPoly<C>> = (0..n).filter(|&j| j != i).map(|j| euler_diff_quotient(i, j, f).shift(xi)).collect();
        let g = MultiPoly::sum(n, inner.iter());
        for j in (0..n).filter(|&j| j != i) {
            parts.push(g.divided_difference(i, j).shift(xi));
        }
    }
    Ok(MultiPoly::sum(n, parts.iter()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipoly::{monomial_symmetric, Partition};

    #[test]
    fn two_variable_values() {
        // At n = 2: A p₁ = p₁ and A m₂ = 2(x₁+x₂)(x₁²-x₂²)/(x₁-x₂) = 2 p₁².
        let p1: MultiPoly<Rational> = monomial_symmetric(&Partition::new(vec![1]), 2).unwrap();
        assert_eq!(aux_a_apply(&p1).unwrap(), p1);
        let m2: MultiPoly<Rational> = monomial_symmetric(&Partition::new(vec![2]), 2).unwrap();
        assert_eq!(aux_a_apply(&m2).unwrap(), p1.times(&p1).scale(&Rational::from_int(2)));
        assert!(aux_a_apply(&MultiPoly::<Rational>::var(2, 0)).is_err());
    }
}
