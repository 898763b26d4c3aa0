//! Linear operators on polynomials: the operator algebra, q-shifts, Dunkl
//! operators, the `B`/`L`/`m` family, Macdonald operators, and their
//! matrices on the monomial-symmetric basis.

mod basic;
mod bfamily;
mod dunkl;
mod linear;
mod macdonald;
mod matrix;

pub use basic::{diagonal_op, euler_op, qshift_apply, qshift_op, subsets, swap_op, vandermonde};
pub use bfamily::{b_family_apply, b_family_op, BSpec};
pub use dunkl::{dunkl_apply, dunkl_op, h_op, h_op_apply};
pub use linear::{op_algebra, LinearOperator, OpAlgebra};
pub use macdonald::{
    macdonald_jet, macdonald_jet_literal, macdonald_specialized, scalar_part, JetSubstitution, MacdonaldQt,
    SubsetKernels,
};
pub use matrix::{operator_matrix, OperatorMatrix};
