//! Line bundle cohomology on a smooth toroidal horospherical variety
//! `X = G x^P Y`, assembled from the flag factor `G/P` and the toric fiber `Y`:
//!
//! `H^n(X, O(D)) = sum_{p+q=n} H^p(G/P, O(E_1)) ⊗ H^q(Y, O(E_2'))`,
//!
//! where only `p = l(w)` can contribute.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bwb::{bwb_solve, BwbError, BwbResult, FlagBundle};
use crate::fan_toric::{
    toric_cohomology_with, validate_fan, Caps, Fan, FanError, GradedCohomologyTable, ToricDivisor,
};
use crate::root_system::{ParabolicSpec, RootDatum};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HoroError {
    #[error("boundary coefficients: got {got}, fan has {rays} rays")]
    BoundaryLength { got: usize, rays: usize },
    #[error("parabolic rank {spec} does not match root datum rank {datum}")]
    RankMismatch { spec: usize, datum: usize },
    #[error(transparent)]
    Flag(#[from] BwbError),
    #[error(transparent)]
    Fan(#[from] FanError),
    #[error("integer overflow")]
    Overflow,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HorosphericalModel {
    pub datum: RootDatum,
    pub spec: ParabolicSpec,
    /// Fan of the toric fiber, in the cocharacter lattice of `P/H`.
    pub fan: Fan,
}

impl HorosphericalModel {
    pub fn new(datum: RootDatum, spec: ParabolicSpec, fan: Fan) -> Result<Self, HoroError> {
        if spec.rank != datum.rank() {
            return Err(HoroError::RankMismatch {
                spec: spec.rank,
                datum: datum.rank(),
            });
        }
        validate_fan(&fan).map_err(FanError::Invalid)?;
        Ok(HorosphericalModel { datum, spec, fan })
    }

    /// `dim G/P + dim Y`.
    pub fn dimension(&self) -> usize {
        self.datum.flag_dimension(&self.spec) + self.fan.dim
    }
}

/// `D = sum d_alpha D_alpha + sum d_i X_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HoroDivisor {
    /// Color coefficients, keyed by 1-based simple-root index.
    pub colors: BTreeMap<usize, i64>,
    /// Coefficients of the `G`-stable divisors, aligned with the fan's rays.
    pub boundary: Vec<i64>,
}

/// Splits `D` into the pullback part on `G/P` and the fiber part on `Y`.
pub fn split_divisor(
    model: &HorosphericalModel,
    divisor: &HoroDivisor,
) -> Result<(FlagBundle, ToricDivisor), HoroError> {
    if divisor.boundary.len() != model.fan.num_rays() {
        return Err(HoroError::BoundaryLength {
            got: divisor.boundary.len(),
            rays: model.fan.num_rays(),
        });
    }
    let flag = FlagBundle::new(
        model.datum.clone(),
        model.spec.clone(),
        divisor.colors.clone(),
    )?;
    Ok((flag, ToricDivisor(divisor.boundary.clone())))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToricContribution {
    pub q: usize,
    pub m: Vec<i64>,
    pub dim: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeRow {
    pub n: usize,
    pub total_dim: u64,
    pub toric_entries: Vec<ToricContribution>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HoroCohomologyReport {
    pub root_type: String,
    pub levi_set: Vec<usize>,
    pub flag_factor: BwbResult,
    /// The flag factor of `H^l` is the dual of the module with the reported
    /// highest weight.
    pub flag_module_dual: bool,
    pub degrees: Vec<DegreeRow>,
}

impl HoroCohomologyReport {
    pub fn totals(&self) -> Vec<u64> {
        self.degrees.iter().map(|d| d.total_dim).collect()
    }

    pub fn euler_characteristic(&self) -> i128 {
        self.degrees
            .iter()
            .map(|d| {
                let h = i128::from(d.total_dim);
                if d.n % 2 == 0 {
                    h
                } else {
                    -h
                }
            })
            .sum()
    }
}

pub fn horo_cohomology(
    model: &HorosphericalModel,
    divisor: &HoroDivisor,
) -> Result<HoroCohomologyReport, HoroError> {
    horo_cohomology_with(model, divisor, Caps::default())
}

pub fn horo_cohomology_with(
    model: &HorosphericalModel,
    divisor: &HoroDivisor,
    caps: Caps,
) -> Result<HoroCohomologyReport, HoroError> {
    let (flag, toric) = split_divisor(model, divisor)?;
    let flag_factor = bwb_solve(&flag)?;
    let table = toric_cohomology_with(&model.fan, &toric, caps)?;
    assemble(model, flag_factor, &table)
}

fn assemble(
    model: &HorosphericalModel,
    flag_factor: BwbResult,
    table: &GradedCohomologyTable,
) -> Result<HoroCohomologyReport, HoroError> {
    let top = model.dimension();
    let mut degrees: Vec<DegreeRow> = (0..=top)
        .map(|n| DegreeRow {
            n,
            total_dim: 0,
            toric_entries: Vec::new(),
        })
        .collect();
    if let BwbResult::Nonvanishing {
        degree, dimension, ..
    } = &flag_factor
    {
        for entry in &table.entries {
            for (q, &h) in entry.dims.iter().enumerate() {
                if h == 0 {
                    continue;
                }
                let row = &mut degrees[degree + q];
                row.toric_entries.push(ToricContribution {
                    q,
                    m: entry.m.clone(),
                    dim: h,
                });
                let weighted = dimension.checked_mul(h).ok_or(HoroError::Overflow)?;
                row.total_dim = row
                    .total_dim
                    .checked_add(weighted)
                    .ok_or(HoroError::Overflow)?;
            }
        }
    }
    Ok(HoroCohomologyReport {
        root_type: model.datum.type_label(),
        levi_set: model.spec.levi_set.iter().copied().collect(),
        flag_factor,
        flag_module_dual: true,
        degrees,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerCheck {
    pub chi_x: i128,
    pub chi_flag: i128,
    pub chi_toric: i128,
    pub ok: bool,
}

/// `chi(X, D) = chi(G/P, E_1) * chi(Y, E_2')`.
pub fn euler_check(
    model: &HorosphericalModel,
    divisor: &HoroDivisor,
) -> Result<EulerCheck, HoroError> {
    let (flag, toric) = split_divisor(model, divisor)?;
    let flag_factor = bwb_solve(&flag)?;
    let table = toric_cohomology_with(&model.fan, &toric, Caps::default())?;
    let chi_flag = flag_factor.euler_characteristic();
    let chi_toric = table.euler_characteristic();
    let chi_x = assemble(model, flag_factor, &table)?.euler_characteristic();
    Ok(EulerCheck {
        chi_x,
        chi_flag,
        chi_toric,
        ok: chi_x == chi_flag * chi_toric,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan_toric::corpus;
    use crate::root_system::{build_root_datum, Weight};

    fn a1_over_p1() -> HorosphericalModel {
        let datum = build_root_datum("A1").unwrap();
        HorosphericalModel::new(datum, ParabolicSpec::borel(1), corpus::p1()).unwrap()
    }

    fn divisor(color: i64, boundary: &[i64]) -> HoroDivisor {
        HoroDivisor {
            colors: [(1, color)].into_iter().collect(),
            boundary: boundary.to_vec(),
        }
    }

    #[test]
    fn split_is_relabeling() {
        let model = a1_over_p1();
        let (flag, toric) = split_divisor(&model, &divisor(2, &[0, 0])).unwrap();
        assert_eq!(flag.weight(), Weight(vec![2]));
        assert_eq!(toric, ToricDivisor(vec![0, 0]));
        let (flag, toric) = split_divisor(&model, &divisor(0, &[3, -1])).unwrap();
        assert_eq!(flag.weight(), Weight(vec![0]));
        assert_eq!(toric, ToricDivisor(vec![3, -1]));
        assert!(matches!(
            split_divisor(&model, &divisor(0, &[1])),
            Err(HoroError::BoundaryLength { got: 1, rays: 2 })
        ));
    }

    #[test]
    fn sections_in_degree_zero() {
        let report = horo_cohomology(&a1_over_p1(), &divisor(2, &[0, 0])).unwrap();
        assert_eq!(report.totals(), vec![3, 0, 0]);
    }

    #[test]
    fn shifted_degree() {
        let report = horo_cohomology(&a1_over_p1(), &divisor(-3, &[-2, 0])).unwrap();
        assert_eq!(report.totals(), vec![0, 0, 2]);
        assert_eq!(
            report.degrees[2].toric_entries,
            vec![ToricContribution {
                q: 1,
                m: vec![1],
                dim: 1
            }]
        );
    }

    #[test]
    fn vanishing_flag_factor_kills_everything() {
        for b in -3..=3 {
            let report = horo_cohomology(&a1_over_p1(), &divisor(-1, &[b, 0])).unwrap();
            assert_eq!(report.flag_factor, BwbResult::Vanishing);
            assert!(report.totals().iter().all(|&h| h == 0));
        }
    }

    #[test]
    fn euler_examples() {
        let model = a1_over_p1();
        assert_eq!(
            euler_check(&model, &divisor(2, &[0, 0])).unwrap(),
            EulerCheck {
                chi_x: 3,
                chi_flag: 3,
                chi_toric: 1,
                ok: true
            }
        );
        assert_eq!(
            euler_check(&model, &divisor(-3, &[-2, 0])).unwrap(),
            EulerCheck {
                chi_x: 2,
                chi_flag: -2,
                chi_toric: -1,
                ok: true
            }
        );
        let vanishing = euler_check(&model, &divisor(-1, &[4, 0])).unwrap();
        assert_eq!(
            (vanishing.chi_x, vanishing.chi_flag, vanishing.ok),
            (0, 0, true)
        );
        assert_eq!(vanishing.chi_toric, 5);
    }

    #[test]
    fn degenerate_models() {
        // no group: X = Y
        let toric_only = HorosphericalModel::new(
            RootDatum::from_factors(vec![]),
            ParabolicSpec::borel(0),
            corpus::p2(),
        )
        .unwrap();
        let report = horo_cohomology(
            &toric_only,
            &HoroDivisor {
                colors: BTreeMap::new(),
                boundary: vec![-3, 0, 0],
            },
        )
        .unwrap();
        assert_eq!(report.totals(), vec![0, 0, 1]);

        // point fiber: X = G/P
        let datum = build_root_datum("A2").unwrap();
        let spec = ParabolicSpec::new(2, [2]).unwrap();
        let flag_only = HorosphericalModel::new(datum, spec, corpus::point()).unwrap();
        let report = horo_cohomology(
            &flag_only,
            &HoroDivisor {
                colors: [(1, 2)].into_iter().collect(),
                boundary: vec![],
            },
        )
        .unwrap();
        assert_eq!(report.totals(), vec![6, 0, 0]);
    }
}
