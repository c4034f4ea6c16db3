//! Exact rational linear algebra: rank, square solves, determinants and a
//! small dense simplex solver.
//!
//! Every arithmetic step is checked. An overflow surfaces as
//! [`Overflow`] instead of wrapping.

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Signed, Zero};

/// Exact rational with `i128` numerator and denominator.
pub type Q = Ratio<i128>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("exact arithmetic overflow")]
pub struct Overflow;

pub type ExactResult<T> = Result<T, Overflow>;

pub(crate) trait Checked: Sized {
    fn plus(&self, other: &Self) -> ExactResult<Self>;
    fn minus(&self, other: &Self) -> ExactResult<Self>;
    fn times(&self, other: &Self) -> ExactResult<Self>;
    fn over(&self, other: &Self) -> ExactResult<Self>;
}

impl Checked for Q {
    fn plus(&self, other: &Self) -> ExactResult<Self> {
        self.checked_add(other).ok_or(Overflow)
    }
    fn minus(&self, other: &Self) -> ExactResult<Self> {
        self.checked_sub(other).ok_or(Overflow)
    }
    fn times(&self, other: &Self) -> ExactResult<Self> {
        self.checked_mul(other).ok_or(Overflow)
    }
    fn over(&self, other: &Self) -> ExactResult<Self> {
        self.checked_div(other).ok_or(Overflow)
    }
}

impl Checked for i64 {
    fn plus(&self, other: &Self) -> ExactResult<Self> {
        i64::checked_add(*self, *other).ok_or(Overflow)
    }
    fn minus(&self, other: &Self) -> ExactResult<Self> {
        i64::checked_sub(*self, *other).ok_or(Overflow)
    }
    fn times(&self, other: &Self) -> ExactResult<Self> {
        i64::checked_mul(*self, *other).ok_or(Overflow)
    }
    fn over(&self, other: &Self) -> ExactResult<Self> {
        i64::checked_div(*self, *other).ok_or(Overflow)
    }
}

pub fn q(n: i64) -> Q {
    Q::from_integer(n as i128)
}

/// Checked integer dot product.
pub fn dot(a: &[i64], b: &[i64]) -> ExactResult<i64> {
    a.iter()
        .zip(b)
        .try_fold(0i64, |acc, (x, y)| acc.plus(&x.times(y)?))
}

pub fn to_rational_matrix(rows: &[Vec<i64>]) -> Vec<Vec<Q>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| q(x)).collect())
        .collect()
}

/// Reduces `rows` in place to row echelon form and returns the pivot columns.
fn echelon(rows: &mut [Vec<Q>]) -> ExactResult<Vec<usize>> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][c];
        for i in (r + 1)..rows.len() {
            if rows[i][c].is_zero() {
                continue;
            }
            let factor = rows[i][c].over(&pivot)?;
            for j in c..ncols {
                let delta = factor.times(&rows[r][j])?;
                rows[i][j] = rows[i][j].minus(&delta)?;
            }
        }
        pivots.push(c);
        r += 1;
    }
    Ok(pivots)
}

pub fn rank(mut rows: Vec<Vec<Q>>) -> ExactResult<usize> {
    Ok(echelon(&mut rows)?.len())
}

/// Rank of a matrix with small integer entries (boundary matrices).
pub fn rank_int(rows: &[Vec<i64>]) -> ExactResult<usize> {
    rank(to_rational_matrix(rows))
}

pub fn determinant(rows: &[Vec<i64>]) -> ExactResult<Q> {
    let n = rows.len();
    let mut m = to_rational_matrix(rows);
    let mut det = Q::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Ok(Q::zero());
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        let pivot = m[c][c];
        det = det.times(&pivot)?;
        for i in (c + 1)..n {
            if m[i][c].is_zero() {
                continue;
            }
            let factor = m[i][c].over(&pivot)?;
            for j in c..n {
                let delta = factor.times(&m[c][j])?;
                m[i][j] = m[i][j].minus(&delta)?;
            }
        }
    }
    Ok(det)
}

/// Solves the square system `a x = b`. Returns `None` when `a` is singular.
pub fn solve(a: &[Vec<Q>], b: &[Q]) -> ExactResult<Option<Vec<Q>>> {
    let n = a.len();
    let mut aug: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(*rhs);
            r
        })
        .collect();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !aug[i][c].is_zero()) else {
            return Ok(None);
        };
        aug.swap(p, c);
        let pivot = aug[c][c];
        for j in c..=n {
            aug[c][j] = aug[c][j].over(&pivot)?;
        }
        for i in 0..n {
            if i == c || aug[i][c].is_zero() {
                continue;
            }
            let factor = aug[i][c];
            for j in c..=n {
                let delta = factor.times(&aug[c][j])?;
                aug[i][j] = aug[i][j].minus(&delta)?;
            }
        }
    }
    Ok(Some(aug.into_iter().map(|r| r[n]).collect()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Debug, Clone)]
pub struct Constraint {
    pub coeffs: Vec<Q>,
    pub relation: Relation,
    pub rhs: Q,
}

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal { value: Q, point: Vec<Q> },
}

/// Linear program over free (sign-unrestricted) variables.
#[derive(Debug, Clone, Default)]
pub struct LinearProgram {
    pub num_vars: usize,
    pub constraints: Vec<Constraint>,
}

impl LinearProgram {
    pub fn new(num_vars: usize) -> Self {
        Self {
            num_vars,
            constraints: Vec::new(),
        }
    }

    pub fn push(&mut self, coeffs: Vec<Q>, relation: Relation, rhs: Q) {
        debug_assert_eq!(coeffs.len(), self.num_vars);
        self.constraints.push(Constraint {
            coeffs,
            relation,
            rhs,
        });
    }

    pub fn pop(&mut self) {
        self.constraints.pop();
    }

    pub fn is_feasible(&self) -> ExactResult<bool> {
        let zero = vec![Q::zero(); self.num_vars];
        Ok(!matches!(self.maximize(&zero)?, LpOutcome::Infeasible))
    }

    /// Maximizes `objective · x`.
    pub fn maximize(&self, objective: &[Q]) -> ExactResult<LpOutcome> {
        Tableau::build(self)?.run(objective, self.num_vars)
    }

    pub fn minimize(&self, objective: &[Q]) -> ExactResult<LpOutcome> {
        let negated: Vec<Q> = objective.iter().map(|c| -*c).collect();
        Ok(match self.maximize(&negated)? {
            LpOutcome::Optimal { value, point } => LpOutcome::Optimal {
                value: -value,
                point,
            },
            other => other,
        })
    }
}

/// Standard-form tableau: `A y = b`, `y >= 0`, `b >= 0`.
///
/// Column layout: `x+` (n), `x-` (n), slacks, artificials.
struct Tableau {
    rows: Vec<Vec<Q>>,
    rhs: Vec<Q>,
    basis: Vec<usize>,
    num_structural: usize,
    num_artificial: usize,
}

impl Tableau {
    fn build(lp: &LinearProgram) -> ExactResult<Self> {
        let n = lp.num_vars;
        let num_slack = lp
            .constraints
            .iter()
            .filter(|c| c.relation != Relation::Eq)
            .count();
        let m = lp.constraints.len();
        let num_structural = 2 * n + num_slack;
        let width = num_structural + m;
        let mut rows = Vec::with_capacity(m);
        let mut rhs = Vec::with_capacity(m);
        let mut slack = 2 * n;
        for (k, c) in lp.constraints.iter().enumerate() {
            let mut row = vec![Q::zero(); width];
            for (j, a) in c.coeffs.iter().enumerate() {
                row[j] = *a;
                row[n + j] = -*a;
            }
            match c.relation {
                Relation::Le => {
                    row[slack] = Q::one();
                    slack += 1;
                }
                Relation::Ge => {
                    row[slack] = -Q::one();
                    slack += 1;
                }
                Relation::Eq => {}
            }
            let mut b = c.rhs;
            if b.is_negative() {
                for v in row.iter_mut().take(num_structural) {
                    *v = -*v;
                }
                b = -b;
            }
            row[num_structural + k] = Q::one();
            rows.push(row);
            rhs.push(b);
        }
        Ok(Self {
            rows,
            rhs,
            basis: (num_structural..num_structural + m).collect(),
            num_structural,
            num_artificial: m,
        })
    }

    fn width(&self) -> usize {
        self.num_structural + self.num_artificial
    }

    fn pivot(&mut self, r: usize, c: usize) -> ExactResult<()> {
        let p = self.rows[r][c];
        for v in self.rows[r].iter_mut() {
            *v = v.over(&p)?;
        }
        self.rhs[r] = self.rhs[r].over(&p)?;
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][c].is_zero() {
                continue;
            }
            let f = self.rows[i][c];
            for j in 0..self.width() {
                let delta = f.times(&self.rows[r][j])?;
                self.rows[i][j] = self.rows[i][j].minus(&delta)?;
            }
            let delta = f.times(&self.rhs[r])?;
            self.rhs[i] = self.rhs[i].minus(&delta)?;
        }
        self.basis[r] = c;
        Ok(())
    }

    /// Primal simplex with Bland's rule over columns `< allowed`.
    /// Returns `false` if the objective is unbounded.
    fn optimize(&mut self, cost: &[Q], allowed: usize) -> ExactResult<bool> {
        loop {
            // reduced cost of column j: cost_j - cost_B · column_j
            let mut entering = None;
            for j in 0..allowed {
                if self.basis.contains(&j) {
                    continue;
                }
                let mut reduced = cost[j];
                for (i, &b) in self.basis.iter().enumerate() {
                    if !self.rows[i][j].is_zero() && !cost[b].is_zero() {
                        reduced = reduced.minus(&cost[b].times(&self.rows[i][j])?)?;
                    }
                }
                if reduced.is_positive() {
                    entering = Some(j);
                    break;
                }
            }
            let Some(c) = entering else {
                return Ok(true);
            };
            let mut leaving: Option<(usize, Q)> = None;
            for i in 0..self.rows.len() {
                let a = self.rows[i][c];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs[i].over(&a)?;
                let better = match &leaving {
                    None => true,
                    Some((li, lr)) => {
                        ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li])
                    }
                };
                if better {
                    leaving = Some((i, ratio));
                }
            }
            let Some((r, _)) = leaving else {
                return Ok(false);
            };
            self.pivot(r, c)?;
        }
    }

    fn run(mut self, objective: &[Q], n: usize) -> ExactResult<LpOutcome> {
        let width = self.width();
        // phase 1: maximize -sum(artificials)
        let mut phase1 = vec![Q::zero(); width];
        for v in phase1.iter_mut().skip(self.num_structural) {
            *v = -Q::one();
        }
        self.optimize(&phase1, width)?;
        let infeasibility = self
            .basis
            .iter()
            .zip(&self.rhs)
            .filter(|(b, _)| **b >= self.num_structural)
            .try_fold(Q::zero(), |acc, (_, v)| acc.plus(v))?;
        if infeasibility.is_positive() {
            return Ok(LpOutcome::Infeasible);
        }
        // drive zero-level artificials out of the basis where possible
        for r in 0..self.rows.len() {
            if self.basis[r] < self.num_structural {
                continue;
            }
            if let Some(c) = (0..self.num_structural).find(|&j| !self.rows[r][j].is_zero()) {
                self.pivot(r, c)?;
            }
        }
        let mut cost = vec![Q::zero(); width];
        for j in 0..n {
            cost[j] = objective[j];
            cost[n + j] = -objective[j];
        }
        if !self.optimize(&cost, self.num_structural)? {
            return Ok(LpOutcome::Unbounded);
        }
        let mut values = vec![Q::zero(); width];
        for (i, &b) in self.basis.iter().enumerate() {
            values[b] = self.rhs[i];
        }
        let point: Vec<Q> = (0..n)
            .map(|j| values[j].minus(&values[n + j]))
            .collect::<ExactResult<_>>()?;
        let value = point
            .iter()
            .zip(objective)
            .try_fold(Q::zero(), |acc, (x, c)| acc.plus(&x.times(c)?))?;
        Ok(LpOutcome::Optimal { value, point })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qv(v: &[i64]) -> Vec<Q> {
        v.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(rank_int(&[vec![1, 2], vec![2, 4]]).unwrap(), 1);
        assert_eq!(
            rank_int(&[vec![1, 0, 1], vec![0, 1, 1], vec![1, 1, 2]]).unwrap(),
            2
        );
        assert_eq!(rank_int(&[]).unwrap(), 0);
        assert_eq!(rank_int(&[vec![0, 0]]).unwrap(), 0);
    }

    #[test]
    fn determinant_sign_and_zero() {
        assert_eq!(determinant(&[vec![1, 0], vec![1, 2]]).unwrap(), q(2));
        assert_eq!(determinant(&[vec![0, 1], vec![1, 0]]).unwrap(), q(-1));
        assert_eq!(determinant(&[vec![1, 2], vec![2, 4]]).unwrap(), q(0));
    }

    #[test]
    fn solve_square_system() {
        let a = vec![qv(&[2, 1]), qv(&[1, 3])];
        let x = solve(&a, &qv(&[3, 5])).unwrap().unwrap();
        assert_eq!(x, vec![Q::new(4, 5), Q::new(7, 5)]);
        let singular = vec![qv(&[1, 1]), qv(&[2, 2])];
        assert!(solve(&singular, &qv(&[1, 2])).unwrap().is_none());
    }

    #[test]
    fn lp_bounded_interval() {
        // -2 <= x <= 0
        let mut lp = LinearProgram::new(1);
        lp.push(qv(&[1]), Relation::Ge, q(-2));
        lp.push(qv(&[-1]), Relation::Ge, q(0));
        assert_eq!(
            lp.maximize(&qv(&[1])).unwrap(),
            LpOutcome::Optimal {
                value: q(0),
                point: qv(&[0])
            }
        );
        match lp.minimize(&qv(&[1])).unwrap() {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, q(-2)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn lp_detects_infeasible_and_unbounded() {
        let mut lp = LinearProgram::new(2);
        lp.push(qv(&[1, 1]), Relation::Le, q(1));
        lp.push(qv(&[1, 1]), Relation::Ge, q(2));
        assert_eq!(lp.maximize(&qv(&[0, 0])).unwrap(), LpOutcome::Infeasible);

        let mut lp = LinearProgram::new(2);
        lp.push(qv(&[1, 0]), Relation::Ge, q(1));
        assert_eq!(lp.maximize(&qv(&[1, 0])).unwrap(), LpOutcome::Unbounded);
        assert!(matches!(
            lp.maximize(&qv(&[-1, 0])).unwrap(),
            LpOutcome::Optimal { .. }
        ));
    }

    #[test]
    fn lp_triangle_vertex() {
        // x >= 0, y >= 0, x + y <= 3, maximize 2x + y
        let mut lp = LinearProgram::new(2);
        lp.push(qv(&[1, 0]), Relation::Ge, q(0));
        lp.push(qv(&[0, 1]), Relation::Ge, q(0));
        lp.push(qv(&[1, 1]), Relation::Le, q(3));
        lp.push(qv(&[1, -1]), Relation::Eq, q(1));
        match lp.maximize(&qv(&[2, 1])).unwrap() {
            LpOutcome::Optimal { value, point } => {
                assert_eq!(value, q(5));
                assert_eq!(point, qv(&[2, 1]));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn overflow_is_an_error() {
        let big = Q::from_integer(i128::MAX / 2);
        assert_eq!(big.times(&q(4)), Err(Overflow));
        assert_eq!(i64::MAX.plus(&1), Err(Overflow));
    }
}
