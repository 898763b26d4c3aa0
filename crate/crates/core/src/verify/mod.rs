//! Identity checks: extraction of expansion coefficients, the closed forms
//! they are compared with, and the verdicts that record the comparison.

mod aux;
mod closed;
mod coeff;
mod context;
mod identity;
mod jack;
mod seed;
mod types;
mod witness;

pub use aux::{aux_a_apply, beta2_lhs_apply};
pub use closed::{build_closed_form, Block, BlockCache, ClosedForm, Term, CLOSED_FORMS};
pub use coeff::{lin, nbinom, npoly, Forms, NRat};
pub use context::{at_beta, beta_slice, extract_order, order_apply, Context};
pub use identity::{
    identity_names, run_suite, suite_entries, verify_identity, IdentitySpec, Params, Scope, Status, Verdict,
    REGISTRY, SUITES, TYPE_GRID,
};
pub use jack::{jack_solve, JackVector};
pub use seed::{qt_samples, random_poly};
pub use types::{
    shared_pole_sum, single_center_sum, type_shape, type_six_unit_apply, type_sum_literal, type_sum_raw,
    type_support_constant, type_support_pieces, type_term_count, type_term_count_formula, type_two_unit_apply,
    TypeSum,
};
pub use witness::{noncommutativity_witness, Witness, WitnessGrid, WitnessReport};
