//! Jack polynomials as joint eigenvectors of `H_2` and `H_3` at a rational β.
//!
//! On each weight block the matrix of `H_2` in the m-basis is triangular
//! for dominance, so the monic eigenvector with leading term `m_λ` comes
//! from a forward solve down the block.

use crate::error::{Error, Result};
use crate::multipoly::{partitions_upto, Partition};
use crate::operators::{h_op, operator_matrix, OperatorMatrix};
use crate::rings::{BetaPoly, Rational};

use super::context::at_beta;

/// A Jack polynomial in m-coordinates, leading partition first.
#[derive(Clone, Debug, PartialEq)]
pub struct JackVector {
    pub lambda: Partition,
    /// Nonzero coordinates, in basis order.
    pub coords: Vec<(Partition, Rational)>,
}

impl JackVector {
    pub fn render(&self) -> String {
        let terms = self.coords.iter().map(|(mu, c)| crate::rings::fmt_scaled(c, &format!("m{mu}"))).collect();
        crate::rings::join_terms(terms)
    }
}

fn h_matrix(n: usize, k: u32, basis: &[Partition], beta: &Rational) -> Result<OperatorMatrix<Rational>> {
    Ok(at_beta(&operator_matrix(&h_op::<BetaPoly>(n, k), basis)?, beta))
}

/// Monic Jack polynomials for every `λ` with `1 ≤ |λ| ≤ max_degree` and at
/// most `n` parts.
pub fn jack_solve(n: usize, max_degree: u32, beta: &Rational) -> Result<Vec<JackVector>> {
    let basis = partitions_upto(max_degree, n);
    let h2 = h_matrix(n, 2, &basis, beta)?;
    let h3 = h_matrix(n, 3, &basis, beta)?;
    let dim = basis.len();

    for col in 0..dim {
        for row in 0..dim {
            let c = h2.entry(row, col);
            if !c.is_zero() && !basis[col].dominates(&basis[row]) {
                return Err(Error::Contract(format!(
                    "H2 is not dominance-triangular: m{} has an m{} component",
                    basis[col], basis[row]
                )));
            }
        }
    }
    for a in 0..dim {
        for b in a + 1..dim {
            if basis[a].weight() == basis[b].weight() && h2.entry(a, a) == h2.entry(b, b) {
                return Err(Error::Degeneracy(format!(
                    "H2 eigenvalue {} shared by {} and {} at beta = {beta}",
                    h2.entry(a, a),
                    basis[a],
                    basis[b]
                )));
            }
        }
    }

    let mut out = Vec::with_capacity(dim);
    for p in 0..dim {
        let lam = &basis[p];
        let e = h2.entry(p, p).clone();
        let mut v = vec![Rational::zero(); dim];
        v[p] = Rational::one();
        // Basis order puts dominant partitions first, so everything below
        // λ sits at larger indices.
        for q in p + 1..dim {
            if basis[q].weight() != lam.weight() {
                break;
            }
            let mut s = Rational::zero();
            for (k, vk) in v.iter().enumerate().take(q).skip(p) {
                s = &s + &(h2.entry(q, k) * vk);
            }
            v[q] = &s / &(&e - h2.entry(q, q));
        }
        let jack = JackVector {
            lambda: lam.clone(),
            coords: basis.iter().zip(&v).filter(|(_, c)| !c.is_zero()).map(|(m, c)| (m.clone(), c.clone())).collect(),
        };
        post_check(&jack, &basis, &v, &h2, &h3)?;
        out.push(jack);
    }
    Ok(out)
}

fn apply(m: &OperatorMatrix<Rational>, v: &[Rational]) -> Vec<Rational> {
    (0..v.len())
        .map(|row| {
            v.iter().enumerate().fold(Rational::zero(), |acc, (col, x)| &acc + &(m.entry(row, col) * x))
        })
        .collect()
}

/// `v` must be an eigenvector of both matrices and supported below `λ`.
fn post_check(
    jack: &JackVector,
    basis: &[Partition],
    v: &[Rational],
    h2: &OperatorMatrix<Rational>,
    h3: &OperatorMatrix<Rational>,
) -> Result<()> {
    let p = basis.iter().position(|b| *b == jack.lambda).expect("λ is in the basis");
    for (name, m) in [("H2", h2), ("H3", h3)] {
        let image = apply(m, v);
        let e = &image[p];
        if image.iter().zip(v).any(|(y, x)| *y != e * x) {
            return Err(Error::Contract(format!("m{} solution is not an {name} eigenvector", jack.lambda)));
        }
    }
    if let Some((mu, _)) = jack.coords.iter().find(|(mu, _)| !jack.lambda.dominates(mu)) {
        return Err(Error::Contract(format!("m{} solution has an m{mu} component outside dominance", jack.lambda)));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn find<'a>(js: &'a [JackVector], parts: &[u32]) -> &'a JackVector {
        js.iter().find(|j| j.lambda == Partition::new(parts.to_vec())).unwrap()
    }

    #[test]
    fn two_variable_examples() {
        let js = jack_solve(2, 2, &Rational::one()).unwrap();
        assert_eq!(find(&js, &[1, 1]).render(), "m[1,1]");
        assert_eq!(find(&js, &[2]).render(), "m[2] + m[1,1]");
        let js = jack_solve(2, 2, &Rational::from_int(2)).unwrap();
        assert_eq!(find(&js, &[2]).coords[1].1, Rational::new(4, 3));
    }

    #[test]
    fn degenerate_beta_is_reported() {
        // At β = -1 the weight-2 eigenvalues of H2 at n = 2 coincide.
        match jack_solve(2, 2, &Rational::from_int(-1)) {
            Err(Error::Degeneracy(msg)) => assert!(msg.contains("[2]") && msg.contains("[1,1]"), "{msg}"),
            other => panic!("expected a degeneracy error, got {other:?}"),
        }
    }
}
