//! Root data, Weyl group combinatorics and the Weyl dimension formula.
//!
//! Conventions: the Cartan matrix is `A[i][j] = <alpha_j, alpha_i^vee>`, so in
//! fundamental-weight coordinates `alpha_j` is column `j` of `A`, and the simple
//! reflection `s_i` sends `lambda` to `lambda - lambda_i * column_i`.
//!
//! Simple-root indices are 1-based in every public signature and in
//! [`WeylWord`] letters.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::exact::{Checked, Overflow};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootSystemError {
    #[error("unknown root type label `{0}`")]
    UnknownType(String),
    #[error("rank {rank} out of supported range for type {family}")]
    RankOutOfRange { family: char, rank: usize },
    #[error("simple root index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("weight has {got} coordinates, datum has rank {rank}")]
    WeightLength { got: usize, rank: usize },
    #[error("weight {0} is not dominant")]
    NotDominant(Weight),
    #[error("coset enumeration exceeded cap of {0} elements")]
    CapExceeded(usize),
    #[error("Weyl dimension is not an integer (internal error)")]
    NonIntegralDimension,
    #[error("integer overflow")]
    Overflow,
}

impl From<Overflow> for RootSystemError {
    fn from(_: Overflow) -> Self {
        RootSystemError::Overflow
    }
}

pub type Result<T> = std::result::Result<T, RootSystemError>;

/// A simple Cartan type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CartanType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
    F4,
    G2,
}

impl CartanType {
    pub fn rank(self) -> usize {
        match self {
            CartanType::A(r)
            | CartanType::B(r)
            | CartanType::C(r)
            | CartanType::D(r)
            | CartanType::E(r) => r,
            CartanType::F4 => 4,
            CartanType::G2 => 2,
        }
    }

    /// Cartan matrix in Bourbaki numbering.
    pub fn cartan_matrix(self) -> Vec<Vec<i64>> {
        let r = self.rank();
        let mut a = vec![vec![0i64; r]; r];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self {
            CartanType::A(_)
            | CartanType::B(_)
            | CartanType::C(_)
            | CartanType::F4
            | CartanType::G2 => {
                for i in 0..r - 1 {
                    link(i, i + 1);
                }
            }
            CartanType::D(_) => {
                for i in 0..r - 2 {
                    link(i, i + 1);
                }
                link(r - 3, r - 1);
            }
            CartanType::E(_) => {
                link(0, 2);
                link(1, 3);
                for i in 2..r - 1 {
                    link(i, i + 1);
                }
            }
        }
        match self {
            // the row of the shorter root carries the -2 / -3 entry
            // B: alpha_r short
            CartanType::B(_) => a[r - 1][r - 2] = -2,
            // C: alpha_r long; F4: alpha_3, alpha_4 short; G2: alpha_1 short
            CartanType::C(_) => a[r - 2][r - 1] = -2,
            CartanType::F4 => a[2][1] = -2,
            CartanType::G2 => a[0][1] = -3,
            _ => {}
        }
        a
    }
}

impl FromStr for CartanType {
    type Err = RootSystemError;

    fn from_str(label: &str) -> Result<Self> {
        let label = label.trim();
        let unknown = || RootSystemError::UnknownType(label.to_string());
        let mut chars = label.chars();
        let family = chars.next().ok_or_else(unknown)?.to_ascii_uppercase();
        let rank: usize = chars.as_str().parse().map_err(|_| unknown())?;
        let out_of_range = || RootSystemError::RankOutOfRange { family, rank };
        let ty = match family {
            'A' if (1..=8).contains(&rank) => CartanType::A(rank),
            'B' if (2..=8).contains(&rank) => CartanType::B(rank),
            'C' if (2..=8).contains(&rank) => CartanType::C(rank),
            'D' if (3..=8).contains(&rank) => CartanType::D(rank),
            'E' if (6..=8).contains(&rank) => CartanType::E(rank),
            'F' if rank == 4 => CartanType::F4,
            'G' if rank == 2 => CartanType::G2,
            'A' | 'B' | 'C' | 'D' | 'E' | 'F' | 'G' => return Err(out_of_range()),
            _ => return Err(unknown()),
        };
        Ok(ty)
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CartanType::A(r) => write!(f, "A{r}"),
            CartanType::B(r) => write!(f, "B{r}"),
            CartanType::C(r) => write!(f, "C{r}"),
            CartanType::D(r) => write!(f, "D{r}"),
            CartanType::E(r) => write!(f, "E{r}"),
            CartanType::F4 => write!(f, "F4"),
            CartanType::G2 => write!(f, "G2"),
        }
    }
}

/// Integral weight in the fundamental-weight basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_strictly_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 1)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Word in the simple reflections, read left to right:
/// `[i1, i2, .., ik]` is `s_i1 s_i2 .. s_ik`. Letters are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeylWord {
    pub word: Vec<usize>,
    pub length: usize,
}

impl WeylWord {
    pub fn identity() -> Self {
        Self::from_letters(Vec::new())
    }

    pub fn from_letters(word: Vec<usize>) -> Self {
        let length = word.len();
        WeylWord { word, length }
    }

    /// Acts on a weight (fundamental-weight coordinates).
    pub fn act_on_weight(&self, datum: &RootDatum, weight: &Weight) -> Result<Weight> {
        self.word
            .iter()
            .rev()
            .try_fold(weight.clone(), |w, &i| datum.reflect(i, &w))
    }

    /// Acts on a root given in simple-root coordinates.
    pub fn act_on_root(&self, datum: &RootDatum, root: &[i64]) -> Result<Vec<i64>> {
        self.word
            .iter()
            .rev()
            .try_fold(root.to_vec(), |b, &i| datum.reflect_root(i, &b))
    }

    /// Number of positive roots sent to negative roots.
    pub fn inversion_count(&self, datum: &RootDatum) -> Result<usize> {
        let mut count = 0;
        for beta in &datum.positive_roots {
            let image = self.act_on_root(datum, beta)?;
            if image.iter().any(|&c| c < 0) {
                count += 1;
            }
        }
        Ok(count)
    }

    pub fn is_reduced(&self, datum: &RootDatum) -> Result<bool> {
        Ok(self.inversion_count(datum)? == self.length)
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "e");
        }
        for (k, i) in self.word.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "s{i}")?;
        }
        Ok(())
    }
}

/// Parabolic subgroup given by the simple roots of its Levi factor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParabolicSpec {
    pub rank: usize,
    pub levi_set: BTreeSet<usize>,
}

impl ParabolicSpec {
    pub fn new(rank: usize, levi_set: impl IntoIterator<Item = usize>) -> Result<Self> {
        let levi_set: BTreeSet<usize> = levi_set.into_iter().collect();
        if let Some(&bad) = levi_set.iter().find(|&&i| i == 0 || i > rank) {
            return Err(RootSystemError::IndexOutOfRange { index: bad, rank });
        }
        Ok(ParabolicSpec { rank, levi_set })
    }

    pub fn borel(rank: usize) -> Self {
        ParabolicSpec {
            rank,
            levi_set: BTreeSet::new(),
        }
    }

    /// The colors `I = S \ S_P`.
    pub fn color_set(&self) -> BTreeSet<usize> {
        (1..=self.rank)
            .filter(|i| !self.levi_set.contains(i))
            .collect()
    }
}

/// Finite (semisimple) root datum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootDatum {
    pub factors: Vec<CartanType>,
    pub cartan: Vec<Vec<i64>>,
    /// Positive roots in simple-root coordinates, sorted by height then
    /// lexicographically.
    pub positive_roots: Vec<Vec<i64>>,
    /// `positive_coroots[k]` is the coroot of `positive_roots[k]`, in
    /// simple-coroot coordinates.
    pub positive_coroots: Vec<Vec<i64>>,
}

/// Accepts `"A2"`, `"A1xB2"`, `"A1 x A1"` or a list of simple labels.
pub fn parse_type_label(label: &str) -> Result<Vec<CartanType>> {
    let label = label.trim();
    if label.is_empty() {
        return Ok(Vec::new());
    }
    label.split(['x', 'X', '*', '×']).map(str::parse).collect()
}

pub fn build_root_datum(label: &str) -> Result<RootDatum> {
    Ok(RootDatum::from_factors(parse_type_label(label)?))
}

fn block_diagonal(factors: &[CartanType]) -> Vec<Vec<i64>> {
    let rank = factors.iter().map(|f| f.rank()).sum();
    let mut a = vec![vec![0i64; rank]; rank];
    let mut offset = 0;
    for f in factors {
        let block = f.cartan_matrix();
        for (i, row) in block.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                a[offset + i][offset + j] = *v;
            }
        }
        offset += f.rank();
    }
    a
}

/// Positive roots of the Cartan matrix via root strings.
fn enumerate_positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let r = cartan.len();
    let simple = |i: usize| {
        let mut e = vec![0i64; r];
        e[i] = 1;
        e
    };
    let mut known: HashSet<Vec<i64>> = (0..r).map(simple).collect();
    let mut roots: Vec<Vec<i64>> = (0..r).map(simple).collect();
    let mut layer = roots.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..r {
                let pairing: i64 = (0..r).map(|j| beta[j] * cartan[i][j]).sum();
                let mut down = 0;
                let mut probe = beta.clone();
                loop {
                    probe[i] -= 1;
                    if known.contains(&probe) {
                        down += 1;
                    } else {
                        break;
                    }
                }
                if down - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        roots.extend(next.iter().cloned());
        layer = next;
    }
    roots.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| a.cmp(b))
    });
    roots
}

/// Half squared lengths `e_i` with `e_i A_ij = e_j A_ji`, scaled to integers.
fn symmetrizer(cartan: &[Vec<i64>]) -> Vec<i64> {
    let r = cartan.len();
    let mut e: Vec<Option<Ratio<i64>>> = vec![None; r];
    for start in 0..r {
        if e[start].is_some() {
            continue;
        }
        let mut component = vec![start];
        e[start] = Some(Ratio::one());
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for j in 0..r {
                if j != i && cartan[i][j] != 0 && e[j].is_none() {
                    let ei = e[i].unwrap();
                    e[j] = Some(ei * Ratio::new(cartan[i][j], cartan[j][i]));
                    component.push(j);
                    queue.push_back(j);
                }
            }
        }
        let denom_lcm = component.iter().fold(1i64, |acc, &k| {
            num_integer::lcm(acc, *e[k].unwrap().denom())
        });
        for &k in &component {
            e[k] = Some(e[k].unwrap() * denom_lcm);
        }
    }
    e.into_iter().map(|v| v.unwrap().to_integer()).collect()
}

impl RootDatum {
    pub fn from_factors(factors: Vec<CartanType>) -> Self {
        let cartan = block_diagonal(&factors);
        let positive_roots = enumerate_positive_roots(&cartan);
        let transpose: Vec<Vec<i64>> = (0..cartan.len())
            .map(|i| cartan.iter().map(|row| row[i]).collect())
            .collect();
        let dual_roots: HashSet<Vec<i64>> =
            enumerate_positive_roots(&transpose).into_iter().collect();
        let e = symmetrizer(&cartan);
        let r = cartan.len();
        let positive_coroots: Vec<Vec<i64>> = positive_roots
            .iter()
            .map(|beta| {
                // (beta, beta) = sum_ij c_i c_j e_i A_ij
                let norm: i64 = (0..r)
                    .flat_map(|i| (0..r).map(move |j| (i, j)))
                    .map(|(i, j)| beta[i] * beta[j] * e[i] * cartan[i][j])
                    .sum();
                beta.iter()
                    .zip(&e)
                    .map(|(c, ej)| {
                        let num = 2 * c * ej;
                        debug_assert_eq!(num % norm, 0);
                        num / norm
                    })
                    .collect()
            })
            .collect();
        debug_assert_eq!(dual_roots.len(), positive_coroots.len());
        debug_assert!(positive_coroots.iter().all(|c| dual_roots.contains(c)));
        RootDatum {
            factors,
            cartan,
            positive_roots,
            positive_coroots,
        }
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn type_label(&self) -> String {
        self.factors
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join("x")
    }

    /// The positive coroots as a set, computed independently from the
    /// transposed Cartan matrix.
    pub fn dual_positive_roots(&self) -> Vec<Vec<i64>> {
        let r = self.rank();
        let transpose: Vec<Vec<i64>> = (0..r)
            .map(|i| self.cartan.iter().map(|row| row[i]).collect())
            .collect();
        enumerate_positive_roots(&transpose)
    }

    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank()])
    }

    fn check_index(&self, i: usize) -> Result<usize> {
        if i == 0 || i > self.rank() {
            return Err(RootSystemError::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            });
        }
        Ok(i - 1)
    }

    fn check_weight(&self, weight: &Weight) -> Result<()> {
        if weight.0.len() != self.rank() {
            return Err(RootSystemError::WeightLength {
                got: weight.0.len(),
                rank: self.rank(),
            });
        }
        Ok(())
    }

    /// Simple reflection `s_i` (1-based) on a weight.
    pub fn reflect(&self, i: usize, weight: &Weight) -> Result<Weight> {
        let i = self.check_index(i)?;
        self.check_weight(weight)?;
        let li = weight.0[i];
        let coords = weight
            .0
            .iter()
            .enumerate()
            .map(|(k, &c)| c.minus(&li.times(&self.cartan[k][i])?))
            .collect::<std::result::Result<_, _>>()?;
        Ok(Weight(coords))
    }

    /// Simple reflection `s_i` (1-based) on a root in simple-root coordinates.
    pub fn reflect_root(&self, i: usize, root: &[i64]) -> Result<Vec<i64>> {
        let i = self.check_index(i)?;
        let mut pairing = 0i64;
        for (j, c) in root.iter().enumerate() {
            pairing = pairing.plus(&c.times(&self.cartan[i][j])?)?;
        }
        let mut out = root.to_vec();
        out[i] = out[i].minus(&pairing)?;
        Ok(out)
    }

    /// Dot action sort: finds `w` with `w(lambda + rho) - rho` dominant, or
    /// reports that `lambda + rho` lies on a wall.
    pub fn to_dominant_dot(&self, lambda: &Weight) -> Result<DotAction> {
        self.check_weight(lambda)?;
        let mut nu = Weight(
            lambda
                .0
                .iter()
                .map(|c| c.plus(&1))
                .collect::<std::result::Result<_, _>>()?,
        );
        let mut applied = Vec::new();
        loop {
            if nu.0.contains(&0) {
                return Ok(DotAction::Singular);
            }
            match nu.0.iter().position(|&c| c < 0) {
                Some(i) => {
                    nu = self.reflect(i + 1, &nu)?;
                    applied.push(i + 1);
                }
                None => break,
            }
        }
        if !nu.is_strictly_dominant() {
            return Ok(DotAction::Singular);
        }
        applied.reverse();
        let dominant = Weight(nu.0.iter().map(|c| c - 1).collect());
        let word = WeylWord::from_letters(applied);
        Ok(DotAction::Regular {
            length: word.length,
            dominant,
            word,
        })
    }

    /// `<lambda, beta^vee>` for a coroot in simple-coroot coordinates.
    fn pair_with_coroot(lambda: &[i64], coroot: &[i64]) -> Result<i64> {
        Ok(crate::exact::dot(lambda, coroot)?)
    }

    /// Dimension of the irreducible module of highest weight `mu`.
    pub fn weyl_dimension(&self, mu: &Weight) -> Result<u64> {
        self.check_weight(mu)?;
        if !mu.is_dominant() {
            return Err(RootSystemError::NotDominant(mu.clone()));
        }
        let shifted: Vec<i64> =
            mu.0.iter()
                .map(|c| c.plus(&1))
                .collect::<std::result::Result<_, _>>()?;
        let rho = self.rho();
        let mut product = Ratio::<i128>::one();
        for coroot in &self.positive_coroots {
            let num = Self::pair_with_coroot(&shifted, coroot)?;
            let den = Self::pair_with_coroot(&rho.0, coroot)?;
            let factor = Ratio::new(num as i128, den as i128);
            product = product.times(&factor)?;
        }
        if !product.is_integer() || product <= Ratio::zero() {
            return Err(RootSystemError::NonIntegralDimension);
        }
        u64::try_from(product.to_integer()).map_err(|_| RootSystemError::Overflow)
    }

    /// Sorts a weight to the dominant chamber by reflecting at the smallest
    /// negative coordinate; returns the dominant weight and the left-to-right
    /// word `w` with `w(dominant) = weight`.
    fn sort_to_dominant(&self, weight: &Weight) -> Result<(Weight, Vec<usize>)> {
        let mut x = weight.clone();
        let mut letters = Vec::new();
        while let Some(i) = x.0.iter().position(|&c| c < 0) {
            x = self.reflect(i + 1, &x)?;
            letters.push(i + 1);
        }
        Ok((x, letters))
    }

    /// Minimal length representatives of `W / W_P`, sorted by length then by
    /// word. Each word is the lexicographically smallest reduced word.
    pub fn minimal_coset_reps(&self, spec: &ParabolicSpec, cap: usize) -> Result<Vec<WeylWord>> {
        let r = self.rank();
        if spec.rank != r {
            return Err(RootSystemError::WeightLength {
                got: spec.rank,
                rank: r,
            });
        }
        // stabilizer of this dominant weight is exactly W_P
        let seed = Weight(
            (1..=r)
                .map(|i| i64::from(!spec.levi_set.contains(&i)))
                .collect(),
        );
        let mut orbit: HashSet<Weight> = HashSet::from([seed.clone()]);
        let mut queue = VecDeque::from([seed]);
        while let Some(x) = queue.pop_front() {
            for i in 0..r {
                if x.0[i] == 0 {
                    continue;
                }
                let y = self.reflect(i + 1, &x)?;
                if orbit.insert(y.clone()) {
                    if orbit.len() > cap {
                        return Err(RootSystemError::CapExceeded(cap));
                    }
                    queue.push_back(y);
                }
            }
        }
        let mut reps = orbit
            .iter()
            .map(|x| Ok(WeylWord::from_letters(self.sort_to_dominant(x)?.1)))
            .collect::<Result<Vec<_>>>()?;
        reps.sort_by(|a, b| a.length.cmp(&b.length).then_with(|| a.word.cmp(&b.word)));
        Ok(reps)
    }

    /// `|W|`, by enumerating the regular orbit of `rho`.
    pub fn weyl_group_order(&self, cap: usize) -> Result<usize> {
        Ok(self
            .minimal_coset_reps(&ParabolicSpec::borel(self.rank()), cap)?
            .len())
    }

    /// `w(alpha) > 0` for every `alpha` in the Levi set.
    pub fn is_minimal_coset_rep(&self, word: &WeylWord, spec: &ParabolicSpec) -> Result<bool> {
        for &i in &spec.levi_set {
            let mut alpha = vec![0i64; self.rank()];
            alpha[self.check_index(i)?] = 1;
            if word.act_on_root(self, &alpha)?.iter().any(|&c| c < 0) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Dimension of `G/P`: positive roots not in the Levi subsystem.
    pub fn flag_dimension(&self, spec: &ParabolicSpec) -> usize {
        let colors = spec.color_set();
        self.positive_roots
            .iter()
            .filter(|beta| colors.iter().any(|&i| beta[i - 1] != 0))
            .count()
    }
}

/// Outcome of the dot-action sort.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DotAction {
    Singular,
    Regular {
        dominant: Weight,
        length: usize,
        word: WeylWord,
    },
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_counts_match_types() {
        let cases = [
            ("A1", 1),
            ("A2", 3),
            ("A3", 6),
            ("A8", 36),
            ("B2", 4),
            ("B3", 9),
            ("C3", 9),
            ("D4", 12),
            ("D5", 20),
            ("G2", 6),
            ("F4", 24),
            ("E6", 36),
            ("E7", 63),
            ("E8", 120),
            ("A1xA1", 2),
        ];
        for (label, count) in cases {
            let datum = build_root_datum(label).unwrap();
            assert_eq!(datum.positive_roots.len(), count, "{label}");
        }
    }

    #[test]
    fn cartan_invariants() {
        for label in ["A3", "B4", "C4", "D5", "E6", "E7", "E8", "F4", "G2"] {
            let a = build_root_datum(label).unwrap().cartan;
            for i in 0..a.len() {
                assert_eq!(a[i][i], 2);
                for j in 0..a.len() {
                    if i != j {
                        assert!(a[i][j] <= 0);
                        assert_eq!(a[i][j] == 0, a[j][i] == 0);
                    }
                }
            }
        }
    }

    #[test]
    fn coroots_are_dual_roots() {
        for label in ["B2", "B3", "C3", "G2", "F4", "A1xG2"] {
            let datum = build_root_datum(label).unwrap();
            let mut mine = datum.positive_coroots.clone();
            let mut dual = datum.dual_positive_roots();
            mine.sort();
            dual.sort();
            assert_eq!(mine, dual, "{label}");
        }
        // G2: highest root 3a1+2a2 (long) has coroot a1v + 2a2v
        let g2 = build_root_datum("G2").unwrap();
        let k = g2
            .positive_roots
            .iter()
            .position(|b| b == &vec![3, 2])
            .unwrap();
        assert_eq!(g2.positive_coroots[k], vec![1, 2]);
    }

    #[test]
    fn bad_labels() {
        assert!(matches!(
            build_root_datum("Q3"),
            Err(RootSystemError::UnknownType(_))
        ));
        assert!(matches!(
            build_root_datum("A9"),
            Err(RootSystemError::RankOutOfRange { .. })
        ));
        assert!(matches!(
            build_root_datum("E5"),
            Err(RootSystemError::RankOutOfRange { .. })
        ));
        assert!(build_root_datum("A").is_err());
    }

    #[test]
    fn reflections() {
        let a1 = build_root_datum("A1").unwrap();
        assert_eq!(a1.reflect(1, &Weight(vec![3])).unwrap(), Weight(vec![-3]));
        let a2 = build_root_datum("A2").unwrap();
        assert_eq!(
            a2.reflect(1, &Weight(vec![1, 0])).unwrap(),
            Weight(vec![-1, 1])
        );
        assert_eq!(
            a2.reflect(1, &Weight(vec![0, 5])).unwrap(),
            Weight(vec![0, 5])
        );
        assert!(matches!(
            a2.reflect(3, &Weight(vec![0, 0])),
            Err(RootSystemError::IndexOutOfRange { index: 3, rank: 2 })
        ));
    }

    #[test]
    fn dot_action_examples() {
        let a1 = build_root_datum("A1").unwrap();
        assert_eq!(
            a1.to_dominant_dot(&Weight(vec![0])).unwrap(),
            DotAction::Regular {
                dominant: Weight(vec![0]),
                length: 0,
                word: WeylWord::identity()
            }
        );
        assert_eq!(
            a1.to_dominant_dot(&Weight(vec![-1])).unwrap(),
            DotAction::Singular
        );
        match a1.to_dominant_dot(&Weight(vec![-3])).unwrap() {
            DotAction::Regular {
                dominant, length, ..
            } => {
                assert_eq!(dominant, Weight(vec![1]));
                assert_eq!(length, 1);
            }
            other => panic!("{other:?}"),
        }
        let a2 = build_root_datum("A2").unwrap();
        assert_eq!(
            a2.to_dominant_dot(&Weight(vec![1, -3])).unwrap(),
            DotAction::Singular
        );
    }

    #[test]
    fn dot_word_realizes_the_element() {
        let b2 = build_root_datum("B2").unwrap();
        let lambda = Weight(vec![-5, 1]);
        let DotAction::Regular { dominant, word, .. } = b2.to_dominant_dot(&lambda).unwrap() else {
            panic!("expected regular");
        };
        let nu = Weight(vec![-4, 2]);
        let image = word.act_on_weight(&b2, &nu).unwrap();
        assert_eq!(Weight(image.0.iter().map(|c| c - 1).collect()), dominant);
        assert!(word.is_reduced(&b2).unwrap());
    }

    #[test]
    fn weyl_dimensions() {
        let a1 = build_root_datum("A1").unwrap();
        for m in 0..10 {
            assert_eq!(a1.weyl_dimension(&Weight(vec![m])).unwrap(), m as u64 + 1);
        }
        let a2 = build_root_datum("A2").unwrap();
        assert_eq!(a2.weyl_dimension(&Weight(vec![1, 0])).unwrap(), 3);
        assert_eq!(a2.weyl_dimension(&Weight(vec![1, 1])).unwrap(), 8);
        // adjoint representations: highest root
        assert_eq!(
            build_root_datum("G2")
                .unwrap()
                .weyl_dimension(&Weight(vec![0, 1]))
                .unwrap(),
            14
        );
        assert_eq!(
            build_root_datum("F4")
                .unwrap()
                .weyl_dimension(&Weight(vec![1, 0, 0, 0]))
                .unwrap(),
            52
        );
        assert_eq!(
            build_root_datum("E8")
                .unwrap()
                .weyl_dimension(&Weight(vec![0, 0, 0, 0, 0, 0, 0, 1]))
                .unwrap(),
            248
        );
        assert_eq!(
            build_root_datum("B2")
                .unwrap()
                .weyl_dimension(&Weight(vec![0, 1]))
                .unwrap(),
            4
        );
        assert!(matches!(
            a2.weyl_dimension(&Weight(vec![-1, 0])),
            Err(RootSystemError::NotDominant(_))
        ));
    }

    #[test]
    fn coset_reps_examples() {
        let a2 = build_root_datum("A2").unwrap();
        let full = ParabolicSpec::new(2, [1, 2]).unwrap();
        assert_eq!(
            a2.minimal_coset_reps(&full, 100).unwrap(),
            vec![WeylWord::identity()]
        );
        let reps = a2
            .minimal_coset_reps(&ParabolicSpec::new(2, [1]).unwrap(), 100)
            .unwrap();
        assert_eq!(reps.len(), 3);
        assert_eq!(reps[0], WeylWord::identity());
        assert_eq!(reps[1].word, vec![2]);
        assert_eq!(reps[2].word, vec![1, 2]);
        let a1 = build_root_datum("A1").unwrap();
        assert_eq!(
            a1.minimal_coset_reps(&ParabolicSpec::borel(1), 100)
                .unwrap()
                .len(),
            2
        );
    }

    #[test]
    fn weyl_group_orders() {
        let cases = [
            ("A1", 2),
            ("A2", 6),
            ("A3", 24),
            ("B2", 8),
            ("B3", 48),
            ("G2", 12),
            ("D4", 192),
            ("F4", 1152),
        ];
        for (label, order) in cases {
            let datum = build_root_datum(label).unwrap();
            assert_eq!(datum.weyl_group_order(100_000).unwrap(), order, "{label}");
        }
    }

    #[test]
    fn coset_cap_is_enforced() {
        let e8 = build_root_datum("E8").unwrap();
        assert_eq!(
            e8.minimal_coset_reps(&ParabolicSpec::borel(8), 10_000),
            Err(RootSystemError::CapExceeded(10_000))
        );
    }

    #[test]
    fn flag_dimensions() {
        let a2 = build_root_datum("A2").unwrap();
        assert_eq!(a2.flag_dimension(&ParabolicSpec::new(2, [2]).unwrap()), 2);
        assert_eq!(a2.flag_dimension(&ParabolicSpec::borel(2)), 3);
        assert_eq!(
            a2.flag_dimension(&ParabolicSpec::new(2, [1, 2]).unwrap()),
            0
        );
    }
}
