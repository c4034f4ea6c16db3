//! Brute-force Čech cohomology of `O(D)` in a fixed torus degree, over the
//! cover by the affine charts of the maximal cones.
//!
//! Shares only the fan representation, lattice-box iteration and exact rank
//! computation with the combinatorial pipeline in [`crate::fan_toric`].

use std::collections::HashMap;

use crate::exact::{self, Overflow};
use crate::fan_toric::{
    for_each_lattice_point, Fan, GradedCohomologyTable, ToricDivisor, WeightEntry,
};

/// Charts per cover; the alternating complex has `2^k - 1` generators.
pub const MAX_CHARTS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("cones {0} and {1} do not intersect in the cone on their common rays")]
    ConeIntersection(usize, usize),
    #[error("cover has {0} charts, more than the oracle supports ({MAX_CHARTS})")]
    TooManyCharts(usize),
    #[error("fan has more than 64 rays")]
    TooManyRays,
    #[error("divisor has {got} coefficients, fan has {rays} rays")]
    DivisorLength { got: usize, rays: usize },
    #[error("weight has {got} coordinates, fan has dimension {dim}")]
    WeightLength { got: usize, dim: usize },
    #[error("nonzero Čech cohomology above the fan dimension (degree {0})")]
    AboveDimension(usize),
    #[error("integer overflow")]
    Overflow,
}

impl From<Overflow> for OracleError {
    fn from(_: Overflow) -> Self {
        OracleError::Overflow
    }
}

/// Čech complex skeleton of a fan: every nonempty set of charts together with
/// the rays spanning its intersection.
pub struct CechOracle<'a> {
    fan: &'a Fan,
    /// `by_size[s]`: chart subsets with `s + 1` elements, as
    /// `(chart mask, common ray mask)`, ascending by chart mask.
    by_size: Vec<Vec<(u32, u64)>>,
}

impl<'a> CechOracle<'a> {
    /// Builds the cover, asserting that any two cones meet in the cone
    /// spanned by their common rays.
    pub fn new(fan: &'a Fan) -> Result<Self, OracleError> {
        let k = fan.max_cones.len();
        if k > MAX_CHARTS {
            return Err(OracleError::TooManyCharts(k));
        }
        if fan.num_rays() > 64 {
            return Err(OracleError::TooManyRays);
        }
        for a in 0..k {
            for b in (a + 1)..k {
                if !fan
                    .meets_in_common_face(a, b)
                    .map_err(|_| OracleError::ConeIntersection(a, b))?
                {
                    return Err(OracleError::ConeIntersection(a, b));
                }
            }
        }
        let cone_masks: Vec<u64> = fan
            .max_cones
            .iter()
            .map(|c| c.iter().fold(0u64, |m, &r| m | (1 << r)))
            .collect();
        let mut by_size = vec![Vec::new(); k];
        for charts in 1u32..(1u32 << k) {
            let common = (0..k)
                .filter(|&c| charts >> c & 1 == 1)
                .fold(u64::MAX, |m, c| m & cone_masks[c]);
            by_size[charts.count_ones() as usize - 1].push((charts, common));
        }
        Ok(CechOracle { fan, by_size })
    }

    fn accepting_mask(&self, divisor: &ToricDivisor, m: &[i64]) -> Result<u64, OracleError> {
        let mut mask = 0u64;
        for (r, (u, a)) in self.fan.rays.iter().zip(&divisor.0).enumerate() {
            if exact::dot(m, u)? >= a.checked_neg().ok_or(Overflow)? {
                mask |= 1 << r;
            }
        }
        Ok(mask)
    }

    /// Čech cohomology dimensions when exactly the rays in `accepting`
    /// satisfy `<m, u_rho> >= -a_rho`.
    fn dims_for_mask(&self, accepting: u64) -> Result<Vec<u64>, OracleError> {
        let k = self.by_size.len();
        // cochains of degree p: accepted chart subsets of size p + 1
        let basis: Vec<Vec<u32>> = self
            .by_size
            .iter()
            .map(|level| {
                level
                    .iter()
                    .filter(|(_, common)| common & !accepting == 0)
                    .map(|(charts, _)| *charts)
                    .collect()
            })
            .collect();
        let mut ranks = vec![0usize; k];
        for p in 0..k.saturating_sub(1) {
            let (lower, upper) = (&basis[p], &basis[p + 1]);
            if lower.is_empty() || upper.is_empty() {
                continue;
            }
            let column: HashMap<u32, usize> =
                lower.iter().enumerate().map(|(i, &s)| (s, i)).collect();
            let matrix: Vec<Vec<i64>> = upper
                .iter()
                .map(|&target| {
                    let mut row = vec![0i64; lower.len()];
                    let charts: Vec<u32> = (0..k as u32).filter(|c| target >> c & 1 == 1).collect();
                    for (j, c) in charts.iter().enumerate() {
                        if let Some(&col) = column.get(&(target & !(1 << c))) {
                            row[col] = if j % 2 == 0 { 1 } else { -1 };
                        }
                    }
                    row
                })
                .collect();
            ranks[p] = exact::rank_int(&matrix)?;
        }
        let d = self.fan.dim;
        let mut dims = vec![0u64; d + 1];
        for p in 0..k {
            let incoming = if p == 0 { 0 } else { ranks[p - 1] };
            let h = (basis[p].len() - ranks[p] - incoming) as u64;
            if p <= d {
                dims[p] = h;
            } else if h != 0 {
                return Err(OracleError::AboveDimension(p));
            }
        }
        Ok(dims)
    }

    fn check(&self, divisor: &ToricDivisor, m: Option<&[i64]>) -> Result<(), OracleError> {
        if divisor.0.len() != self.fan.num_rays() {
            return Err(OracleError::DivisorLength {
                got: divisor.0.len(),
                rays: self.fan.num_rays(),
            });
        }
        if let Some(m) = m {
            if m.len() != self.fan.dim {
                return Err(OracleError::WeightLength {
                    got: m.len(),
                    dim: self.fan.dim,
                });
            }
        }
        Ok(())
    }

    pub fn piece(&self, divisor: &ToricDivisor, m: &[i64]) -> Result<Vec<u64>, OracleError> {
        self.check(divisor, Some(m))?;
        self.dims_for_mask(self.accepting_mask(divisor, m)?)
    }

    /// Sums the degree-`m` pieces over the box `[-radius, radius]^d`.
    pub fn total(
        &self,
        divisor: &ToricDivisor,
        radius: i64,
    ) -> Result<GradedCohomologyTable, OracleError> {
        self.check(divisor, None)?;
        let d = self.fan.dim;
        let lo = vec![-radius; d];
        let hi = vec![radius; d];
        let mut cache: HashMap<u64, Vec<u64>> = HashMap::new();
        let mut entries = Vec::new();
        for_each_lattice_point(&lo, &hi, |m| {
            let mask = self.accepting_mask(divisor, m)?;
            let dims = match cache.get(&mask) {
                Some(dims) => dims.clone(),
                None => {
                    let dims = self.dims_for_mask(mask)?;
                    cache.insert(mask, dims.clone());
                    dims
                }
            };
            if dims.iter().any(|&h| h != 0) {
                entries.push(WeightEntry {
                    m: m.to_vec(),
                    dims,
                });
            }
            Ok::<(), OracleError>(())
        })?;
        GradedCohomologyTable::from_entries(d, entries).map_err(|_| OracleError::Overflow)
    }
}

pub fn cech_cohomology(
    fan: &Fan,
    divisor: &ToricDivisor,
    m: &[i64],
) -> Result<Vec<u64>, OracleError> {
    CechOracle::new(fan)?.piece(divisor, m)
}

pub fn oracle_total(
    fan: &Fan,
    divisor: &ToricDivisor,
    box_radius: i64,
) -> Result<GradedCohomologyTable, OracleError> {
    CechOracle::new(fan)?.total(divisor, box_radius)
}
