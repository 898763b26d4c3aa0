//! Search for a pair of expansion orders of `D_n^r`, `D_n^s` that fail to
//! commute on a basis window.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::multipoly::{MultiPoly, Partition};
use crate::rings::{fmt_scaled, join_terms, BetaPoly, Coeff};

use super::context::{msym, order_apply, Context};

#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub n: usize,
    pub r: usize,
    pub s: usize,
    pub i: usize,
    pub j: usize,
    pub lambda: Partition,
    /// `[D_n^r(h^i), D_n^s(h^j)] m_λ` in m-coordinates.
    pub residual: BTreeMap<Partition, BetaPoly>,
}

impl Witness {
    pub fn rendering(&self) -> String {
        render_coords(&self.residual)
    }

    /// Recomputes the commutator on `m_λ` by applying the orders to the
    /// polynomial directly, without the cached matrices.
    pub fn reevaluate(&self) -> Result<BTreeMap<Partition, BetaPoly>> {
        let f: MultiPoly<BetaPoly> = msym(&self.lambda, self.n)?;
        let ab = order_apply(self.n, self.r, self.i, &order_apply(self.n, self.s, self.j, &f)?)?;
        let ba = order_apply(self.n, self.s, self.j, &order_apply(self.n, self.r, self.i, &f)?)?;
        ab.minus(&ba).to_msym_coords()
    }
}

pub(crate) fn render_coords(coords: &BTreeMap<Partition, BetaPoly>) -> String {
    join_terms(coords.iter().map(|(mu, c)| fmt_scaled(c, &format!("m{mu}"))).collect())
}

#[derive(Clone, Debug, PartialEq)]
pub struct WitnessGrid {
    pub n_max: usize,
    pub i_values: Vec<usize>,
    pub j_values: Vec<usize>,
    pub degree: u32,
}

impl WitnessGrid {
    /// `n ≤ n_max`, `i = order_max`, `j ∈ {2, 3}`.
    pub fn standard(n_max: usize, order_max: usize, degree: u32) -> Self {
        WitnessGrid { n_max, i_values: vec![order_max], j_values: vec![2, 3], degree }
    }

    pub fn describe(&self) -> String {
        format!(
            "2 <= n <= {}, i in {:?}, j in {:?}, 1 <= r,s <= n, |lambda| <= {}",
            self.n_max, self.i_values, self.j_values, self.degree
        )
    }

    /// `(i, j)` pairs ordered by `i + j`, then `i`.
    fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> =
            self.i_values.iter().flat_map(|&i| self.j_values.iter().map(move |&j| (i, j))).collect();
        out.sort_by_key(|&(i, j)| (i + j, i));
        out.dedup();
        out
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct WitnessReport {
    pub grid: WitnessGrid,
    pub witness: Option<Witness>,
}

impl WitnessReport {
    pub fn found(&self) -> bool {
        self.witness.is_some()
    }
}

/// Scans the grid in the order `(n, i + j, i, r, s, |λ|)` and returns the
/// first nonzero commutator column.
pub fn noncommutativity_witness(ctx: &mut Context, grid: &WitnessGrid) -> Result<WitnessReport> {
    for n in 2..=grid.n_max {
        for &(i, j) in &grid.pairs() {
            for r in 1..=n {
                for s in 1..=n {
                    let a = ctx.order(n, r, i, grid.degree)?;
                    let b = ctx.order(n, s, j, grid.degree)?;
                    let c = a.commutator(&b);
                    // Basis order is by weight, so the first nonzero column
                    // has the lowest weight.
                    let hit = (0..c.dim()).find(|&col| (0..c.dim()).any(|row| !c.entry(row, col).is_zero()));
                    if let Some(col) = hit {
                        let residual = (0..c.dim())
                            .filter(|&row| !c.entry(row, col).is_zero())
                            .map(|row| (c.basis()[row].clone(), c.entry(row, col).clone()))
                            .collect();
                        let witness = Witness { n, r, s, i, j, lambda: c.basis()[col].clone(), residual };
                        return Ok(WitnessReport { grid: grid.clone(), witness: Some(witness) });
                    }
                }
            }
        }
    }
    Ok(WitnessReport { grid: grid.clone(), witness: None })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_orders_commute() {
        let mut ctx = Context::new(3);
        let grid = WitnessGrid { n_max: 3, i_values: vec![1, 3], j_values: vec![1, 2, 3], degree: 3 };
        let report = noncommutativity_witness(&mut ctx, &grid).unwrap();
        assert!(!report.found());
    }

    #[test]
    fn pair_order() {
        let grid = WitnessGrid { n_max: 2, i_values: vec![4, 3], j_values: vec![2, 3], degree: 2 };
        assert_eq!(grid.pairs(), vec![(3, 2), (3, 3), (4, 2), (4, 3)]);
    }
}
