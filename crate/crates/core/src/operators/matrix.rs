use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::multipoly::{monomial_symmetric, MultiPoly, Partition};
use crate::rings::{fmt_scaled, join_terms, Coeff};

use super::LinearOperator;

/// Matrix of a degree-preserving operator on the span of `{m_λ : λ ∈ basis}`.
/// `entries[row][col]` is the `m_{basis[row]}` coordinate of the image of
/// `m_{basis[col]}`.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorMatrix<C> {
    n: usize,
    basis: Vec<Partition>,
    entries: Vec<Vec<C>>,
}

/// Column `λ` is `to_msym_coords(A(m_λ))`.
pub fn operator_matrix<C: Coeff>(op: &LinearOperator<C>, basis: &[Partition]) -> Result<OperatorMatrix<C>> {
    let n = op.n();
    let mut columns = Vec::with_capacity(basis.len());
    for lam in basis {
        let image = op.apply(&monomial_symmetric(lam, n)?)?;
        let coords = image
            .to_msym_coords()
            .map_err(|e| Error::Contract(format!("{} applied to m{lam} is not symmetric: {e}", op.name())))?;
        columns.push(coords);
    }
    OperatorMatrix::from_columns(n, basis.to_vec(), columns)
}

impl<C: Coeff> OperatorMatrix<C> {
    /// Assembles a matrix from coordinate maps; errors if a column has a
    /// nonzero coordinate outside the basis.
    pub fn from_columns(n: usize, basis: Vec<Partition>, columns: Vec<BTreeMap<Partition, C>>) -> Result<Self> {
        let index: BTreeMap<&Partition, usize> = basis.iter().enumerate().map(|(k, p)| (p, k)).collect();
        let dim = basis.len();
        let mut entries = vec![vec![C::zero(); dim]; dim];
        for (col, coords) in columns.into_iter().enumerate() {
            for (mu, c) in coords {
                if c.is_zero() {
                    continue;
                }
                let row = *index
                    .get(&mu)
                    .ok_or_else(|| Error::Contract(format!("image of m{} leaves the basis at m{mu}", basis[col])))?;
                entries[row][col] = c;
            }
        }
        Ok(OperatorMatrix { n, basis, entries })
    }

    pub fn zero(n: usize, basis: Vec<Partition>) -> Self {
        let dim = basis.len();
        OperatorMatrix { n, basis, entries: vec![vec![C::zero(); dim]; dim] }
    }

    pub fn identity(n: usize, basis: Vec<Partition>) -> Self {
        let mut m = OperatorMatrix::zero(n, basis);
        for k in 0..m.dim() {
            m.entries[k][k] = C::one();
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> &[Partition] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn entry(&self, row: usize, col: usize) -> &C {
        &self.entries[row][col]
    }

    pub fn entries(&self) -> &[Vec<C>] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|row| row.iter().all(|c| c.is_zero()))
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> OperatorMatrix<D> {
        OperatorMatrix {
            n: self.n,
            basis: self.basis.clone(),
            entries: self.entries.iter().map(|row| row.iter().map(&f).collect()).collect(),
        }
    }

    fn zip(&self, other: &Self, f: impl Fn(&C, &C) -> C) -> Self {
        assert_eq!(self.basis, other.basis, "matrices over different bases");
        OperatorMatrix {
            n: self.n,
            basis: self.basis.clone(),
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| f(x, y)).collect())
                .collect(),
        }
    }

    pub fn plus(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a.plus(b))
    }

    pub fn minus(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a.minus(b))
    }

    pub fn scale(&self, c: &C) -> Self {
        self.map(|x| x.times(c))
    }

    /// Matrix product `self·other`, i.e. the composite applying `other` first.
    pub fn times(&self, other: &Self) -> Self {
        assert_eq!(self.basis, other.basis, "matrices over different bases");
        let dim = self.dim();
        let mut entries = vec![vec![C::zero(); dim]; dim];
        for (i, row) in entries.iter_mut().enumerate() {
            for k in 0..dim {
                let a = &self.entries[i][k];
                if a.is_zero() {
                    continue;
                }
                for (j, out) in row.iter_mut().enumerate() {
                    let b = &other.entries[k][j];
                    if !b.is_zero() {
                        out.add_assign(&a.times(b));
                    }
                }
            }
        }
        OperatorMatrix { n: self.n, basis: self.basis.clone(), entries }
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.times(other).minus(&other.times(self))
    }

    /// Image of `m_{basis[col]}` as an m-basis expansion.
    pub fn column_poly(&self, col: usize) -> String {
        let terms = (0..self.dim())
            .filter(|&row| !self.entries[row][col].is_zero())
            .map(|row| fmt_scaled(&self.entries[row][col], &format!("m{}", self.basis[row])))
            .collect();
        join_terms(terms)
    }

    /// Nonzero columns as `m[λ] -> Σ c·m[μ]`, separated by `; `; `0` for the
    /// zero matrix.
    pub fn render(&self) -> String {
        let cols: Vec<String> = (0..self.dim())
            .filter(|&col| (0..self.dim()).any(|row| !self.entries[row][col].is_zero()))
            .map(|col| format!("m{} -> {}", self.basis[col], self.column_poly(col)))
            .collect();
        if cols.is_empty() {
            "0".to_string()
        } else {
            cols.join("; ")
        }
    }

    /// Applies the matrix to a symmetric polynomial given in coordinates.
    pub fn apply_coords(&self, coords: &BTreeMap<Partition, C>) -> BTreeMap<Partition, C> {
        let mut out = BTreeMap::new();
        for (col, lam) in self.basis.iter().enumerate() {
            let Some(x) = coords.get(lam) else { continue };
            for row in 0..self.dim() {
                let e = &self.entries[row][col];
                if !e.is_zero() {
                    let v: &mut C = out.entry(self.basis[row].clone()).or_insert_with(C::zero);
                    v.add_assign(&e.times(x));
                }
            }
        }
        out.retain(|_, v: &mut C| !v.is_zero());
        out
    }

    /// Rebuilds the polynomial `Σ_λ c_λ m_λ` in `n` variables.
    pub fn coords_to_poly(n: usize, coords: &BTreeMap<Partition, C>) -> Result<MultiPoly<C>> {
        let mut parts = Vec::new();
        for (lam, c) in coords {
            parts.push(monomial_symmetric::<C>(lam, n)?.scale(c));
        }
        Ok(MultiPoly::sum(n, parts.iter()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipoly::partitions_upto;
    use crate::operators::{h_op, LinearOperator};
    use crate::rings::BetaPoly;

    #[test]
    fn euler_and_h2_matrices() {
        let basis = partitions_upto(3, 3);
        let h1 = operator_matrix(&h_op::<BetaPoly>(3, 1), &basis).unwrap();
        for (k, lam) in basis.iter().enumerate() {
            for j in 0..basis.len() {
                let expected = if j == k { BetaPoly::from_int(lam.weight() as i64) } else { BetaPoly::zero() };
                assert_eq!(*h1.entry(j, k), expected);
            }
        }

        let b2 = vec![Partition::new(vec![2]), Partition::new(vec![1, 1])];
        let h2 = operator_matrix(&h_op::<BetaPoly>(2, 2), &b2).unwrap();
        assert_eq!(h2.render(), "m[2] -> (4 + 2*b)*m[2] + 4*b*m[1,1]; m[1,1] -> 2*m[1,1]");

        let z = operator_matrix(&LinearOperator::<BetaPoly>::zero(2), &b2).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.render(), "0");
    }
}
