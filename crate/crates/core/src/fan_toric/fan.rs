use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::FanError;
use crate::exact::{self, Checked, LinearProgram, LpOutcome, Relation, Q};

/// Complete fan in `N = Z^dim`, given by primitive rays and maximal cones
/// (0-based ray indices).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fan {
    pub dim: usize,
    pub rays: Vec<Vec<i64>>,
    pub max_cones: Vec<Vec<usize>>,
}

/// Torus-invariant divisor `sum a_rho D_rho`, one coefficient per ray.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ToricDivisor(pub Vec<i64>);

impl ToricDivisor {
    pub fn zero(num_rays: usize) -> Self {
        ToricDivisor(vec![0; num_rays])
    }

    /// `K = -sum D_rho`.
    pub fn canonical(num_rays: usize) -> Self {
        ToricDivisor(vec![-1; num_rays])
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FanViolation {
    RayLength {
        ray: usize,
        len: usize,
    },
    ZeroRay {
        ray: usize,
    },
    NonPrimitive {
        ray: usize,
    },
    DuplicateRay {
        first: usize,
        second: usize,
    },
    ConeIndex {
        cone: usize,
        index: usize,
    },
    ConeSize {
        cone: usize,
        size: usize,
    },
    Smoothness {
        cone: usize,
        det: i128,
    },
    /// A codimension-one face of a maximal cone lies in `count != 2` maximal cones.
    Completeness {
        facet: Vec<usize>,
        count: usize,
    },
    /// Two maximal cones meet outside the cone on their common rays.
    Intersection {
        first: usize,
        second: usize,
    },
    /// A sample point of `N_R` lies in no maximal cone.
    Coverage {
        point: Vec<i64>,
    },
    ZeroDimensional,
    Empty,
}

impl fmt::Display for FanViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FanViolation::RayLength { ray, len } => write!(f, "ray {ray} has {len} coordinates"),
            FanViolation::ZeroRay { ray } => write!(f, "ray {ray} is zero"),
            FanViolation::NonPrimitive { ray } => write!(f, "ray {ray} is not primitive"),
            FanViolation::DuplicateRay { first, second } => {
                write!(f, "rays {first} and {second} coincide")
            }
            FanViolation::ConeIndex { cone, index } => {
                write!(f, "cone {cone} references missing ray {index}")
            }
            FanViolation::ConeSize { cone, size } => {
                write!(
                    f,
                    "smoothness violation: cone {cone} has {size} distinct rays"
                )
            }
            FanViolation::Smoothness { cone, det } => {
                write!(f, "smoothness violation: cone {cone} has determinant {det}")
            }
            FanViolation::Completeness { facet, count } => {
                write!(
                    f,
                    "completeness violation: facet {facet:?} lies in {count} maximal cones"
                )
            }
            FanViolation::Intersection { first, second } => {
                write!(f, "cones {first} and {second} do not meet in a common face")
            }
            FanViolation::Coverage { point } => {
                write!(f, "completeness violation: point {point:?} is not covered")
            }
            FanViolation::ZeroDimensional => write!(
                f,
                "a zero-dimensional fan must have no rays and one empty cone"
            ),
            FanViolation::Empty => write!(f, "fan has no maximal cones"),
        }
    }
}

/// Deterministic sample points for the coverage diagnostic.
const COVERAGE_SAMPLES: usize = 1000;

fn splitmix(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

impl Fan {
    pub fn new(dim: usize, rays: Vec<Vec<i64>>, max_cones: Vec<Vec<usize>>) -> Self {
        let max_cones = max_cones
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        Fan {
            dim,
            rays,
            max_cones,
        }
    }

    pub fn num_rays(&self) -> usize {
        self.rays.len()
    }

    /// Generator matrix with the cone's rays as rows.
    pub(crate) fn cone_rows(&self, cone: usize) -> Vec<Vec<i64>> {
        self.max_cones[cone]
            .iter()
            .map(|&r| self.rays[r].clone())
            .collect()
    }

    /// Coordinates of `v` in the basis of the cone's rays, if the cone is
    /// full-dimensional and simplicial.
    pub(crate) fn cone_coordinates(
        &self,
        cone: usize,
        v: &[Q],
    ) -> Result<Option<Vec<Q>>, FanError> {
        let rows = self.cone_rows(cone);
        if rows.len() != self.dim {
            return Ok(None);
        }
        // columns are rays: solve G c = v
        let g: Vec<Vec<Q>> = (0..self.dim)
            .map(|i| rows.iter().map(|r| exact::q(r[i])).collect())
            .collect();
        Ok(exact::solve(&g, v)?)
    }

    /// Index of a maximal cone containing `v`.
    pub fn containing_cone(&self, v: &[Q]) -> Result<Option<(usize, Vec<Q>)>, FanError> {
        for cone in 0..self.max_cones.len() {
            if let Some(c) = self.cone_coordinates(cone, v)? {
                if c.iter().all(|x| !x.is_negative()) {
                    return Ok(Some((cone, c)));
                }
            }
        }
        Ok(None)
    }

    /// Rays common to every cone in `cones`.
    pub fn common_rays(&self, cones: &[usize]) -> Vec<usize> {
        let mut it = cones.iter();
        let Some(&first) = it.next() else {
            return Vec::new();
        };
        let mut common: BTreeSet<usize> = self.max_cones[first].iter().copied().collect();
        for &c in it {
            let other: BTreeSet<usize> = self.max_cones[c].iter().copied().collect();
            common = common.intersection(&other).copied().collect();
        }
        common.into_iter().collect()
    }

    /// True iff `cone_a ∩ cone_b` is the cone on their common rays.
    pub fn meets_in_common_face(&self, a: usize, b: usize) -> Result<bool, FanError> {
        let ra = &self.max_cones[a];
        let rb = &self.max_cones[b];
        let d = self.dim;
        let (na, nb) = (ra.len(), rb.len());
        // variables: lambda (na), mu (nb); sum lambda_i u_i = sum mu_j v_j
        let mut lp = LinearProgram::new(na + nb);
        for k in 0..d {
            let mut row: Vec<Q> = ra.iter().map(|&r| exact::q(self.rays[r][k])).collect();
            row.extend(rb.iter().map(|&r| exact::q(-self.rays[r][k])));
            lp.push(row, Relation::Eq, Q::zero());
        }
        for v in 0..na + nb {
            let mut row = vec![Q::zero(); na + nb];
            row[v] = Q::one();
            lp.push(row, Relation::Ge, Q::zero());
        }
        lp.push(vec![Q::one(); na + nb], Relation::Le, Q::one());
        let mut objective = vec![Q::zero(); na + nb];
        for (i, r) in ra.iter().enumerate() {
            if !rb.contains(r) {
                objective[i] = Q::one();
            }
        }
        Ok(match lp.maximize(&objective)? {
            LpOutcome::Optimal { value, .. } => value.is_zero(),
            LpOutcome::Unbounded | LpOutcome::Infeasible => false,
        })
    }

    /// Character `m_sigma` with `<m_sigma, u_rho> = -a_rho` on the cone's rays.
    pub fn cone_character(&self, cone: usize, divisor: &ToricDivisor) -> Result<Vec<Q>, FanError> {
        let rows = self.cone_rows(cone);
        let a: Vec<Vec<Q>> = exact::to_rational_matrix(&rows);
        let rhs: Vec<Q> = self.max_cones[cone]
            .iter()
            .map(|&r| exact::q(-divisor.0[r]))
            .collect();
        exact::solve(&a, &rhs)?.ok_or(FanError::SingularCone(cone))
    }

    pub(crate) fn check_divisor(&self, divisor: &ToricDivisor) -> Result<(), FanError> {
        if divisor.0.len() != self.rays.len() {
            return Err(FanError::DivisorLength {
                got: divisor.0.len(),
                rays: self.rays.len(),
            });
        }
        Ok(())
    }

    pub(crate) fn check_weight(&self, m: &[i64]) -> Result<(), FanError> {
        if m.len() != self.dim {
            return Err(FanError::WeightLength {
                got: m.len(),
                dim: self.dim,
            });
        }
        Ok(())
    }
}

/// Checks primitivity, smoothness and completeness of the fan; returns every
/// violation found.
pub fn validate_fan(fan: &Fan) -> Result<(), Vec<FanViolation>> {
    let mut violations = Vec::new();
    let d = fan.dim;
    if d == 0 {
        let ok = fan.rays.is_empty() && fan.max_cones.len() == 1 && fan.max_cones[0].is_empty();
        return if ok {
            Ok(())
        } else {
            Err(vec![FanViolation::ZeroDimensional])
        };
    }
    if fan.max_cones.is_empty() {
        violations.push(FanViolation::Empty);
    }
    for (i, ray) in fan.rays.iter().enumerate() {
        if ray.len() != d {
            violations.push(FanViolation::RayLength {
                ray: i,
                len: ray.len(),
            });
            continue;
        }
        let g = ray.iter().fold(0i64, |acc, &x| acc.gcd(&x));
        if g == 0 {
            violations.push(FanViolation::ZeroRay { ray: i });
        } else if g != 1 {
            violations.push(FanViolation::NonPrimitive { ray: i });
        }
        if let Some(j) = (0..i).find(|&j| fan.rays[j] == *ray) {
            violations.push(FanViolation::DuplicateRay {
                first: j,
                second: i,
            });
        }
    }
    if !violations.is_empty() {
        return Err(violations);
    }

    let mut well_formed = true;
    for (c, cone) in fan.max_cones.iter().enumerate() {
        if let Some(&index) = cone.iter().find(|&&r| r >= fan.rays.len()) {
            violations.push(FanViolation::ConeIndex { cone: c, index });
            well_formed = false;
            continue;
        }
        let distinct: BTreeSet<usize> = cone.iter().copied().collect();
        if distinct.len() != d || cone.len() != d {
            violations.push(FanViolation::ConeSize {
                cone: c,
                size: distinct.len(),
            });
            well_formed = false;
            continue;
        }
        match exact::determinant(&fan.cone_rows(c)) {
            Ok(det) if det.abs() == Q::one() => {}
            Ok(det) => {
                violations.push(FanViolation::Smoothness {
                    cone: c,
                    det: det.to_integer(),
                });
                well_formed = false;
            }
            Err(_) => {
                violations.push(FanViolation::Smoothness {
                    cone: c,
                    det: i128::MAX,
                });
                well_formed = false;
            }
        }
    }
    if !well_formed {
        return Err(violations);
    }

    let mut facets: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for cone in &fan.max_cones {
        let mut sorted = cone.clone();
        sorted.sort_unstable();
        for skip in 0..sorted.len() {
            let facet: Vec<usize> = sorted
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != skip)
                .map(|(_, &r)| r)
                .collect();
            *facets.entry(facet).or_default() += 1;
        }
    }
    for (facet, count) in facets {
        if count != 2 {
            violations.push(FanViolation::Completeness { facet, count });
        }
    }

    for a in 0..fan.max_cones.len() {
        for b in (a + 1)..fan.max_cones.len() {
            match fan.meets_in_common_face(a, b) {
                Ok(true) => {}
                _ => violations.push(FanViolation::Intersection {
                    first: a,
                    second: b,
                }),
            }
        }
    }

    if violations.is_empty() {
        let mut state = 0x5eed_u64 ^ (d as u64);
        for _ in 0..COVERAGE_SAMPLES {
            let point: Vec<i64> = (0..d)
                .map(|_| (splitmix(&mut state) % 2001) as i64 - 1000)
                .collect();
            let v: Vec<Q> = point.iter().map(|&x| exact::q(x)).collect();
            match fan.containing_cone(&v) {
                Ok(Some(_)) => {}
                _ => {
                    violations.push(FanViolation::Coverage { point });
                    break;
                }
            }
        }
    }

    if violations.is_empty() {
        Ok(())
    } else {
        Err(violations)
    }
}

/// `psi_D(v)`, with `psi_D(u_rho) = -a_rho`, linear on each maximal cone.
pub fn support_function_value(fan: &Fan, divisor: &ToricDivisor, v: &[Q]) -> Result<Q, FanError> {
    fan.check_divisor(divisor)?;
    if v.len() != fan.dim {
        return Err(FanError::WeightLength {
            got: v.len(),
            dim: fan.dim,
        });
    }
    if fan.dim == 0 {
        return Ok(Q::zero());
    }
    let (cone, _) = fan.containing_cone(v)?.ok_or(FanError::NoContainingCone)?;
    let m = fan.cone_character(cone, divisor)?;
    Ok(m.iter()
        .zip(v)
        .try_fold(Q::zero(), |acc, (x, y)| acc.plus(&x.times(y)?))?)
}
