use std::collections::BTreeSet;

use super::{Fan, FanError, ToricDivisor};
use crate::exact::{self, ExactResult};

/// Simplicial complex on ray indices spanned by the rays `rho` with
/// `<m, u_rho> < -a_rho`. Faces are the qualifying subsets of maximal cones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NegativeComplex {
    pub vertices: BTreeSet<usize>,
    /// Maximal faces, each sorted.
    pub facets: Vec<Vec<usize>>,
}

impl NegativeComplex {
    pub fn empty() -> Self {
        NegativeComplex {
            vertices: BTreeSet::new(),
            facets: Vec::new(),
        }
    }

    /// Complex generated by `faces` (downward closure), keeping maximal ones.
    pub fn from_faces(faces: impl IntoIterator<Item = Vec<usize>>) -> Self {
        let mut generators: Vec<BTreeSet<usize>> = faces
            .into_iter()
            .map(|f| f.into_iter().collect::<BTreeSet<_>>())
            .filter(|f| !f.is_empty())
            .collect();
        generators.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        let mut facets: Vec<BTreeSet<usize>> = Vec::new();
        for g in generators {
            if !facets.iter().any(|f| g.is_subset(f)) {
                facets.push(g);
            }
        }
        let vertices = facets.iter().flatten().copied().collect();
        let mut facets: Vec<Vec<usize>> = facets
            .into_iter()
            .map(|f| f.into_iter().collect())
            .collect();
        facets.sort();
        NegativeComplex { vertices, facets }
    }

    /// All faces including the empty one, grouped by cardinality.
    pub fn faces_by_size(&self) -> Vec<Vec<Vec<usize>>> {
        let top = self.facets.iter().map(Vec::len).max().unwrap_or(0);
        let mut by_size: Vec<BTreeSet<Vec<usize>>> = vec![BTreeSet::new(); top + 1];
        by_size[0].insert(Vec::new());
        for facet in &self.facets {
            let n = facet.len();
            for mask in 1u64..(1u64 << n) {
                let face: Vec<usize> = (0..n)
                    .filter(|k| mask >> k & 1 == 1)
                    .map(|k| facet[k])
                    .collect();
                by_size[face.len()].insert(face);
            }
        }
        by_size
            .into_iter()
            .map(|s| s.into_iter().collect())
            .collect()
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    /// `-1 + sum over nonempty faces of (-1)^(|F|-1)`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.faces_by_size()
            .iter()
            .enumerate()
            .map(|(size, faces)| {
                let sign = if size % 2 == 1 { 1 } else { -1 };
                sign * faces.len() as i64
            })
            .sum()
    }
}

pub(crate) fn qualifying_rays(
    fan: &Fan,
    divisor: &ToricDivisor,
    m: &[i64],
) -> Result<Vec<bool>, FanError> {
    fan.rays
        .iter()
        .zip(&divisor.0)
        .map(|(u, a)| Ok(exact::dot(m, u)? < a.checked_neg().ok_or(exact::Overflow)?))
        .collect()
}

pub(crate) fn complex_from_pattern(fan: &Fan, qualifying: &[bool]) -> NegativeComplex {
    NegativeComplex::from_faces(
        fan.max_cones
            .iter()
            .map(|cone| cone.iter().copied().filter(|&r| qualifying[r]).collect()),
    )
}

pub fn negative_complex(
    fan: &Fan,
    divisor: &ToricDivisor,
    m: &[i64],
) -> Result<NegativeComplex, FanError> {
    fan.check_divisor(divisor)?;
    fan.check_weight(m)?;
    Ok(complex_from_pattern(
        fan,
        &qualifying_rays(fan, divisor, m)?,
    ))
}

/// Matrix of the coboundary from faces of size `k` to faces of size `k + 1`.
fn coboundary(lower: &[Vec<usize>], upper: &[Vec<usize>]) -> Vec<Vec<i64>> {
    upper
        .iter()
        .map(|g| {
            let mut row = vec![0i64; lower.len()];
            for skip in 0..g.len() {
                let face: Vec<usize> = g
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| *k != skip)
                    .map(|(_, &v)| v)
                    .collect();
                let col = lower
                    .binary_search(&face)
                    .expect("complex is downward closed");
                row[col] = if skip % 2 == 0 { 1 } else { -1 };
            }
            row
        })
        .collect()
}

/// Dimensions of reduced cohomology `H~^{-1}, H~^0, .., H~^top` over the
/// rationals. The empty complex has `H~^{-1} = 1`.
pub fn reduced_cohomology_dims(complex: &NegativeComplex, top: isize) -> ExactResult<Vec<u64>> {
    let faces = complex.faces_by_size();
    let count = |size: usize| faces.get(size).map_or(0, Vec::len);
    // rank of the coboundary leaving cochain degree p = size - 1
    let rank_from = |size: usize| -> ExactResult<usize> {
        match (faces.get(size), faces.get(size + 1)) {
            (Some(lower), Some(upper)) if !lower.is_empty() && !upper.is_empty() => {
                exact::rank_int(&coboundary(lower, upper))
            }
            _ => Ok(0),
        }
    };
    let mut dims = Vec::new();
    let mut rank_in = 0usize;
    for p in -1..=top {
        let size = (p + 1) as usize;
        let rank_out = rank_from(size)?;
        let dim = (count(size) as u64)
            .minus_u(rank_out as u64)?
            .minus_u(rank_in as u64)?;
        dims.push(dim);
        rank_in = rank_out;
    }
    Ok(dims)
}

trait CheckedSubU64 {
    fn minus_u(self, other: u64) -> ExactResult<u64>;
}

impl CheckedSubU64 for u64 {
    fn minus_u(self, other: u64) -> ExactResult<u64> {
        self.checked_sub(other).ok_or(exact::Overflow)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan_toric::corpus;

    #[test]
    fn empty_complex_convention() {
        assert_eq!(
            reduced_cohomology_dims(&NegativeComplex::empty(), 1).unwrap(),
            vec![1, 0, 0]
        );
    }

    #[test]
    fn sphere_and_disc() {
        let s0 = NegativeComplex::from_faces([vec![0], vec![1]]);
        assert_eq!(reduced_cohomology_dims(&s0, 1).unwrap(), vec![0, 1, 0]);
        let circle = NegativeComplex::from_faces([vec![0, 1], vec![1, 2], vec![0, 2]]);
        assert_eq!(
            reduced_cohomology_dims(&circle, 2).unwrap(),
            vec![0, 0, 1, 0]
        );
        let disc = NegativeComplex::from_faces([vec![0, 1, 2]]);
        assert_eq!(reduced_cohomology_dims(&disc, 2).unwrap(), vec![0, 0, 0, 0]);
        let point = NegativeComplex::from_faces([vec![4]]);
        assert_eq!(reduced_cohomology_dims(&point, 0).unwrap(), vec![0, 0]);
    }

    #[test]
    fn facets_are_maximal() {
        let c = NegativeComplex::from_faces([vec![1], vec![0, 1], vec![2], vec![]]);
        assert_eq!(c.facets, vec![vec![0, 1], vec![2]]);
        assert_eq!(c.vertices, [0, 1, 2].into_iter().collect());
    }

    #[test]
    fn p1_negative_complexes() {
        let fan = corpus::p1();
        let c = negative_complex(&fan, &ToricDivisor(vec![-2, 0]), &[1]).unwrap();
        assert_eq!(c.facets, vec![vec![0], vec![1]]);
        let c = negative_complex(&fan, &ToricDivisor(vec![0, 0]), &[0]).unwrap();
        assert!(c.is_empty());
        let c = negative_complex(&fan, &ToricDivisor(vec![0, 0]), &[1]).unwrap();
        assert_eq!(c.facets, vec![vec![1]]);
    }
}
