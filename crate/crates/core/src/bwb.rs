//! Borel–Weil–Bott for line bundles on `G/P` given by color coefficients.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::root_system::{DotAction, ParabolicSpec, RootDatum, RootSystemError, Weight, WeylWord};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BwbError {
    #[error("color coefficients must be given exactly for {expected:?}, got {got:?}")]
    ColorKeys {
        expected: Vec<usize>,
        got: Vec<usize>,
    },
    #[error("sorted word is not a minimal coset representative (internal error)")]
    NotMinimal,
    #[error(transparent)]
    RootSystem(#[from] RootSystemError),
}

/// Homogeneous line bundle on `G/P` with weight `sum_{a in I} d_a varpi_a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagBundle {
    pub datum: RootDatum,
    pub spec: ParabolicSpec,
    /// Keyed by 1-based simple-root index; keys are exactly the colors.
    pub coeffs: BTreeMap<usize, i64>,
}

impl FlagBundle {
    pub fn new(
        datum: RootDatum,
        spec: ParabolicSpec,
        coeffs: BTreeMap<usize, i64>,
    ) -> Result<Self, BwbError> {
        let expected: Vec<usize> = spec.color_set().into_iter().collect();
        let got: Vec<usize> = coeffs.keys().copied().collect();
        if expected != got {
            return Err(BwbError::ColorKeys { expected, got });
        }
        Ok(FlagBundle {
            datum,
            spec,
            coeffs,
        })
    }

    /// The weight, with zero coordinates on the Levi set.
    pub fn weight(&self) -> Weight {
        Weight(
            (1..=self.datum.rank())
                .map(|i| self.coeffs.get(&i).copied().unwrap_or(0))
                .collect(),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BwbResult {
    Vanishing,
    /// The only nonzero group is `H^degree`, which is dual to the
    /// irreducible module of highest weight `highest_weight`.
    Nonvanishing {
        degree: usize,
        highest_weight: Weight,
        dimension: u64,
        word: WeylWord,
    },
}

impl BwbResult {
    /// Dimension of `H^i` for every `i`.
    pub fn dimension_in_degree(&self, i: usize) -> u64 {
        match self {
            BwbResult::Nonvanishing {
                degree, dimension, ..
            } if *degree == i => *dimension,
            _ => 0,
        }
    }

    pub fn euler_characteristic(&self) -> i128 {
        match self {
            BwbResult::Vanishing => 0,
            BwbResult::Nonvanishing {
                degree, dimension, ..
            } => {
                let sign = if degree % 2 == 0 { 1 } else { -1 };
                sign * i128::from(*dimension)
            }
        }
    }
}

pub fn bwb_solve(bundle: &FlagBundle) -> Result<BwbResult, BwbError> {
    let lambda = bundle.weight();
    match bundle.datum.to_dominant_dot(&lambda)? {
        DotAction::Singular => Ok(BwbResult::Vanishing),
        DotAction::Regular {
            dominant,
            length,
            word,
        } => {
            // <lambda + rho, alpha^vee> = 1 on the Levi set forces w in W^P
            if !bundle.datum.is_minimal_coset_rep(&word, &bundle.spec)? {
                return Err(BwbError::NotMinimal);
            }
            let dimension = bundle.datum.weyl_dimension(&dominant)?;
            Ok(BwbResult::Nonvanishing {
                degree: length,
                highest_weight: dominant,
                dimension,
                word,
            })
        }
    }
}
