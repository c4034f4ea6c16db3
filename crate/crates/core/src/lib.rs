//! Exact cohomology of line bundles on smooth complete toroidal horospherical
//! varieties.
//!
//! The cohomology of `O(D)` on `X = G x^P Y` splits as a tensor product of a
//! Borel–Weil–Bott factor on `G/P` ([`bwb`]) and the graded cohomology of a
//! toric line bundle on the fiber `Y` ([`fan_toric`]); [`horospherical`]
//! assembles the two. [`cech_oracle`] recomputes the toric side by brute
//! force for cross-checking.

pub mod bwb;
pub mod cech_oracle;
pub mod cli;
pub mod exact;
pub mod fan_toric;
pub mod horospherical;
pub mod root_system;
pub mod schema;

pub use bwb::{bwb_solve, BwbResult, FlagBundle};
pub use cech_oracle::{cech_cohomology, oracle_total, CechOracle};
pub use fan_toric::{
    toric_cohomology, validate_fan, weight_support, Fan, GradedCohomologyTable, ToricDivisor,
};
pub use horospherical::{horo_cohomology, HoroCohomologyReport, HoroDivisor, HorosphericalModel};
pub use root_system::{build_root_datum, ParabolicSpec, RootDatum, Weight, WeylWord};
