use std::collections::HashMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::complex::{complex_from_pattern, qualifying_rays, reduced_cohomology_dims};
use super::{Fan, FanError, ToricDivisor};
use crate::exact::{self, Checked, LinearProgram, LpOutcome, Relation, Q};

/// Size limits for chamber enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    pub max_rays: usize,
    /// Lattice points scanned per bounded chamber.
    pub max_box_points: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_rays: 14,
            max_box_points: 10_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightEntry {
    pub m: Vec<i64>,
    /// `h^0_m, .., h^d_m`.
    pub dims: Vec<u64>,
}

/// Per-weight cohomology and totals, entries sorted by weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedCohomologyTable {
    pub dim: usize,
    pub entries: Vec<WeightEntry>,
    pub totals: Vec<u64>,
}

impl GradedCohomologyTable {
    pub fn from_entries(dim: usize, mut entries: Vec<WeightEntry>) -> Result<Self, FanError> {
        entries.retain(|e| e.dims.iter().any(|&h| h != 0));
        entries.sort_by(|a, b| a.m.cmp(&b.m));
        let mut totals = vec![0u64; dim + 1];
        for e in &entries {
            for (t, h) in totals.iter_mut().zip(&e.dims) {
                *t = t.checked_add(*h).ok_or(FanError::Overflow)?;
            }
        }
        Ok(GradedCohomologyTable {
            dim,
            entries,
            totals,
        })
    }

    pub fn get(&self, m: &[i64]) -> Option<&WeightEntry> {
        self.entries
            .binary_search_by(|e| e.m.as_slice().cmp(m))
            .ok()
            .map(|k| &self.entries[k])
    }

    pub fn euler_characteristic(&self) -> i128 {
        self.totals
            .iter()
            .enumerate()
            .map(|(i, &h)| if i % 2 == 0 { h as i128 } else { -(h as i128) })
            .sum()
    }

    /// Largest `|m_k|` over the stored weights.
    pub fn support_radius(&self) -> i64 {
        self.entries
            .iter()
            .flat_map(|e| e.m.iter().map(|c| c.abs()))
            .max()
            .unwrap_or(0)
    }
}

/// Iterates the integer points of the box `lo..=hi`, last coordinate fastest.
pub fn for_each_lattice_point<E>(
    lo: &[i64],
    hi: &[i64],
    mut visit: impl FnMut(&[i64]) -> Result<(), E>,
) -> Result<(), E> {
    let d = lo.len();
    if lo.iter().zip(hi).any(|(a, b)| a > b) {
        return Ok(());
    }
    let mut point = lo.to_vec();
    loop {
        visit(&point)?;
        let mut k = d;
        loop {
            if k == 0 {
                return Ok(());
            }
            k -= 1;
            if point[k] < hi[k] {
                point[k] += 1;
                point[k + 1..].copy_from_slice(&lo[k + 1..]);
                break;
            }
        }
    }
}

fn box_volume(lo: &[i64], hi: &[i64]) -> Option<u64> {
    lo.iter().zip(hi).try_fold(1u64, |acc, (a, b)| {
        if a > b {
            Some(0)
        } else {
            acc.checked_mul(u64::try_from(b.checked_sub(*a)?.checked_add(1)?).ok()?)
        }
    })
}

/// `h^i_m = dim H~^{i-1}` of the negative complex, for `i = 0..=d`.
pub fn graded_piece(fan: &Fan, divisor: &ToricDivisor, m: &[i64]) -> Result<Vec<u64>, FanError> {
    fan.check_divisor(divisor)?;
    fan.check_weight(m)?;
    pattern_dims(fan, &qualifying_rays(fan, divisor, m)?)
}

fn pattern_dims(fan: &Fan, qualifying: &[bool]) -> Result<Vec<u64>, FanError> {
    let complex = complex_from_pattern(fan, qualifying);
    Ok(reduced_cohomology_dims(&complex, fan.dim as isize - 1)?)
}

/// Half-space for ray `r`: qualifying means `<m,u> <= -a - 1`, otherwise
/// `<m,u> >= -a`. On lattice points this is exactly the strict/non-strict
/// split, with walls on the non-qualifying side.
fn ray_constraint(
    fan: &Fan,
    divisor: &ToricDivisor,
    r: usize,
    qualifying: bool,
) -> Result<(Vec<Q>, Relation, Q), FanError> {
    let coeffs = fan.rays[r].iter().map(|&x| exact::q(x)).collect();
    let bound = Q::zero().minus(&exact::q(divisor.0[r]))?;
    Ok(if qualifying {
        (coeffs, Relation::Le, bound.minus(&Q::one())?)
    } else {
        (coeffs, Relation::Ge, bound)
    })
}

struct ChamberSearch<'a> {
    fan: &'a Fan,
    divisor: &'a ToricDivisor,
    caps: Caps,
    pattern: Vec<bool>,
    lp: LinearProgram,
    dims_cache: HashMap<Vec<bool>, Vec<u64>>,
    entries: Vec<WeightEntry>,
}

impl ChamberSearch<'_> {
    fn descend(&mut self, r: usize) -> Result<(), FanError> {
        if r == self.fan.num_rays() {
            return self.leaf();
        }
        for qualifying in [false, true] {
            let (coeffs, relation, rhs) = ray_constraint(self.fan, self.divisor, r, qualifying)?;
            self.lp.push(coeffs, relation, rhs);
            if self.lp.is_feasible()? {
                self.pattern.push(qualifying);
                self.descend(r + 1)?;
                self.pattern.pop();
            }
            self.lp.pop();
        }
        Ok(())
    }

    fn leaf(&mut self) -> Result<(), FanError> {
        let dims = match self.dims_cache.get(&self.pattern) {
            Some(d) => d.clone(),
            None => {
                let d = pattern_dims(self.fan, &self.pattern)?;
                self.dims_cache.insert(self.pattern.clone(), d.clone());
                d
            }
        };
        if dims.iter().all(|&h| h == 0) {
            return Ok(());
        }
        let d = self.fan.dim;
        let mut lo = Vec::with_capacity(d);
        let mut hi = Vec::with_capacity(d);
        for k in 0..d {
            let mut axis = vec![Q::zero(); d];
            axis[k] = Q::one();
            let upper = match self.lp.maximize(&axis)? {
                LpOutcome::Optimal { value, .. } => value.floor().to_integer(),
                _ => {
                    return Err(FanError::UnboundedChamber {
                        pattern: self.pattern.clone(),
                    })
                }
            };
            let lower = match self.lp.minimize(&axis)? {
                LpOutcome::Optimal { value, .. } => value.ceil().to_integer(),
                _ => {
                    return Err(FanError::UnboundedChamber {
                        pattern: self.pattern.clone(),
                    })
                }
            };
            lo.push(i64::try_from(lower).map_err(|_| FanError::Overflow)?);
            hi.push(i64::try_from(upper).map_err(|_| FanError::Overflow)?);
        }
        let volume = box_volume(&lo, &hi).ok_or(FanError::Overflow)?;
        if volume > self.caps.max_box_points {
            return Err(FanError::CapExceeded {
                what: "lattice points in a chamber box",
                value: volume,
                cap: self.caps.max_box_points,
            });
        }
        let (fan, divisor, pattern) = (self.fan, self.divisor, &self.pattern);
        let entries = &mut self.entries;
        for_each_lattice_point(&lo, &hi, |m| {
            if qualifying_rays(fan, divisor, m)? == *pattern {
                entries.push(WeightEntry {
                    m: m.to_vec(),
                    dims: dims.clone(),
                });
            }
            Ok::<(), FanError>(())
        })
    }
}

/// All weights with nonzero cohomology, found by enumerating the realizable
/// sign patterns of the arrangement `<m, u_rho> = -a_rho`.
pub fn weight_support(
    fan: &Fan,
    divisor: &ToricDivisor,
    caps: Caps,
) -> Result<Vec<WeightEntry>, FanError> {
    fan.check_divisor(divisor)?;
    if fan.num_rays() > caps.max_rays {
        return Err(FanError::CapExceeded {
            what: "rays",
            value: fan.num_rays() as u64,
            cap: caps.max_rays as u64,
        });
    }
    let mut search = ChamberSearch {
        fan,
        divisor,
        caps,
        pattern: Vec::with_capacity(fan.num_rays()),
        lp: LinearProgram::new(fan.dim),
        dims_cache: HashMap::new(),
        entries: Vec::new(),
    };
    search.descend(0)?;
    let mut entries = search.entries;
    entries.sort_by(|a, b| a.m.cmp(&b.m));
    Ok(entries)
}

pub fn toric_cohomology(
    fan: &Fan,
    divisor: &ToricDivisor,
) -> Result<GradedCohomologyTable, FanError> {
    toric_cohomology_with(fan, divisor, Caps::default())
}

pub fn toric_cohomology_with(
    fan: &Fan,
    divisor: &ToricDivisor,
    caps: Caps,
) -> Result<GradedCohomologyTable, FanError> {
    GradedCohomologyTable::from_entries(fan.dim, weight_support(fan, divisor, caps)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "count", rename_all = "snake_case")]
pub enum NefCount {
    Nef(u64),
    NotNef,
}

/// For nef `D`, the number of lattice points of
/// `P_D = { m : <m, u_rho> >= -a_rho }`.
pub fn lattice_points_nef(fan: &Fan, divisor: &ToricDivisor) -> Result<NefCount, FanError> {
    fan.check_divisor(divisor)?;
    let in_polytope = |m: &[Q]| -> Result<bool, FanError> {
        for (u, a) in fan.rays.iter().zip(&divisor.0) {
            let value = u
                .iter()
                .zip(m)
                .try_fold(Q::zero(), |acc, (x, y)| acc.plus(&exact::q(*x).times(y)?))?;
            if value < exact::q(-a) {
                return Ok(false);
            }
        }
        Ok(true)
    };
    let mut vertices = Vec::new();
    for cone in 0..fan.max_cones.len() {
        let m = fan.cone_character(cone, divisor)?;
        if !in_polytope(&m)? {
            return Ok(NefCount::NotNef);
        }
        vertices.push(m);
    }
    // P_D is the convex hull of the cone characters
    let d = fan.dim;
    let corner =
        |pick: fn(&Q) -> i128, best: fn(i128, i128) -> i128| -> Result<Vec<i64>, FanError> {
            (0..d)
                .map(|k| {
                    let v = vertices
                        .iter()
                        .map(|v| pick(&v[k]))
                        .reduce(best)
                        .unwrap_or(0);
                    i64::try_from(v).map_err(|_| FanError::Overflow)
                })
                .collect()
        };
    let lo = corner(|x| x.ceil().to_integer(), i128::min)?;
    let hi = corner(|x| x.floor().to_integer(), i128::max)?;
    let mut count = 0u64;
    for_each_lattice_point(&lo, &hi, |m| {
        let mq: Vec<Q> = m.iter().map(|&x| exact::q(x)).collect();
        if in_polytope(&mq)? {
            count += 1;
        }
        Ok::<(), FanError>(())
    })?;
    Ok(NefCount::Nef(count))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan_toric::corpus;

    fn entry(m: &[i64], dims: &[u64]) -> WeightEntry {
        WeightEntry {
            m: m.to_vec(),
            dims: dims.to_vec(),
        }
    }

    #[test]
    fn lattice_box_iteration() {
        let mut seen = Vec::new();
        for_each_lattice_point(&[0, -1], &[1, 0], |p| {
            seen.push(p.to_vec());
            Ok::<(), ()>(())
        })
        .unwrap();
        assert_eq!(seen, vec![vec![0, -1], vec![0, 0], vec![1, -1], vec![1, 0]]);
        let mut zero_dim = 0;
        for_each_lattice_point(&[], &[], |_| {
            zero_dim += 1;
            Ok::<(), ()>(())
        })
        .unwrap();
        assert_eq!(zero_dim, 1);
    }

    #[test]
    fn p1_graded_pieces() {
        let fan = corpus::p1();
        assert_eq!(
            graded_piece(&fan, &ToricDivisor(vec![2, 0]), &[-1]).unwrap(),
            vec![1, 0]
        );
        assert_eq!(
            graded_piece(&fan, &ToricDivisor(vec![-2, 0]), &[1]).unwrap(),
            vec![0, 1]
        );
        for m in -5..=5 {
            assert_eq!(
                graded_piece(&fan, &ToricDivisor(vec![-1, 0]), &[m]).unwrap(),
                vec![0, 0],
                "m={m}"
            );
        }
    }

    #[test]
    fn p1_weight_supports() {
        let fan = corpus::p1();
        assert_eq!(
            weight_support(&fan, &ToricDivisor(vec![-2, 0]), Caps::default()).unwrap(),
            vec![entry(&[1], &[0, 1])]
        );
        assert_eq!(
            weight_support(&fan, &ToricDivisor(vec![2, 0]), Caps::default()).unwrap(),
            vec![
                entry(&[-2], &[1, 0]),
                entry(&[-1], &[1, 0]),
                entry(&[0], &[1, 0])
            ]
        );
    }

    #[test]
    fn trivial_bundle_has_only_constants() {
        for (name, fan) in corpus::all() {
            let support =
                weight_support(&fan, &ToricDivisor::zero(fan.num_rays()), Caps::default()).unwrap();
            let mut expected = vec![0u64; fan.dim + 1];
            expected[0] = 1;
            assert_eq!(support, vec![entry(&vec![0; fan.dim], &expected)], "{name}");
        }
    }

    #[test]
    fn classical_totals() {
        let p2 = corpus::p2();
        assert_eq!(
            toric_cohomology(&p2, &ToricDivisor(vec![-1, -1, -1]))
                .unwrap()
                .totals,
            vec![0, 0, 1]
        );
        assert_eq!(
            toric_cohomology(&p2, &ToricDivisor(vec![-3, 0, 0]))
                .unwrap()
                .totals,
            vec![0, 0, 1]
        );
        assert_eq!(
            toric_cohomology(&p2, &ToricDivisor(vec![1, 0, 0]))
                .unwrap()
                .totals,
            vec![3, 0, 0]
        );
        let quadric = corpus::p1xp1();
        assert_eq!(
            toric_cohomology(&quadric, &ToricDivisor(vec![-2, 0, -2, 0]))
                .unwrap()
                .totals,
            vec![0, 0, 1]
        );
    }

    #[test]
    fn nef_counts() {
        let p2 = corpus::p2();
        assert_eq!(
            lattice_points_nef(&p2, &ToricDivisor(vec![1, 0, 0])).unwrap(),
            NefCount::Nef(3)
        );
        assert_eq!(
            lattice_points_nef(&p2, &ToricDivisor(vec![-1, 0, 0])).unwrap(),
            NefCount::NotNef
        );
        for (_, fan) in corpus::all() {
            assert_eq!(
                lattice_points_nef(&fan, &ToricDivisor::zero(fan.num_rays())).unwrap(),
                NefCount::Nef(1)
            );
        }
        let p1 = corpus::p1();
        assert_eq!(
            lattice_points_nef(&p1, &ToricDivisor(vec![5, 0])).unwrap(),
            NefCount::Nef(6)
        );
        assert_eq!(
            lattice_points_nef(&p1, &ToricDivisor(vec![0, 5])).unwrap(),
            NefCount::Nef(6)
        );
    }

    #[test]
    fn point_fan() {
        let fan = corpus::point();
        let table = toric_cohomology(&fan, &ToricDivisor(vec![])).unwrap();
        assert_eq!(table.totals, vec![1]);
        assert_eq!(table.entries, vec![entry(&[], &[1])]);
    }

    #[test]
    fn ray_cap() {
        let caps = Caps {
            max_rays: 2,
            ..Caps::default()
        };
        let fan = corpus::p2();
        assert!(matches!(
            weight_support(&fan, &ToricDivisor::zero(3), caps),
            Err(FanError::CapExceeded { what: "rays", .. })
        ));
    }
}
