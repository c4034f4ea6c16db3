//! Smooth complete fans and the graded cohomology of toric line bundles.
//!
//! Sign convention: for `D = sum a_rho D_rho` the support function satisfies
//! `psi_D(u_rho) = -a_rho`. The degree-`m` piece of `H^i(Y, O(D))` is the
//! reduced cohomology `H~^{i-1}` of the subcomplex spanned by the rays with
//! `<m, u_rho> < -a_rho`.

mod complex;
pub mod corpus;
mod fan;
mod toric;

pub use complex::{negative_complex, reduced_cohomology_dims, NegativeComplex};
pub use fan::{support_function_value, validate_fan, Fan, FanViolation, ToricDivisor};
pub use toric::{
    for_each_lattice_point, graded_piece, lattice_points_nef, toric_cohomology,
    toric_cohomology_with, weight_support, Caps, GradedCohomologyTable, NefCount, WeightEntry,
};

use crate::exact::Overflow;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FanError {
    #[error("invalid fan: {}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<FanViolation>),
    #[error("divisor has {got} coefficients, fan has {rays} rays")]
    DivisorLength { got: usize, rays: usize },
    #[error("weight has {got} coordinates, fan has dimension {dim}")]
    WeightLength { got: usize, dim: usize },
    #[error("no maximal cone contains the point (fan not complete)")]
    NoContainingCone,
    #[error("maximal cone {0} is singular")]
    SingularCone(usize),
    #[error(
        "non-complete or inconsistent fan: unbounded chamber with nonzero cohomology {pattern:?}"
    )]
    UnboundedChamber { pattern: Vec<bool> },
    #[error("cap exceeded: {value} {what} (cap {cap})")]
    CapExceeded {
        what: &'static str,
        value: u64,
        cap: u64,
    },
    #[error("integer overflow")]
    Overflow,
}

impl From<Overflow> for FanError {
    fn from(_: Overflow) -> Self {
        FanError::Overflow
    }
}
