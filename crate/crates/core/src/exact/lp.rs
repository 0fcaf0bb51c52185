//! Exact feasibility of linear systems via phase-one simplex with Bland's
//! rule.

use super::Scalar;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

/// `coeffs · x (relation) rhs`
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint<T> {
    pub coeffs: Vec<T>,
    pub relation: Relation,
    pub rhs: T,
}

impl<T> Constraint<T> {
    pub fn le(coeffs: Vec<T>, rhs: T) -> Self {
        Constraint {
            coeffs,
            relation: Relation::Le,
            rhs,
        }
    }

    pub fn ge(coeffs: Vec<T>, rhs: T) -> Self {
        Constraint {
            coeffs,
            relation: Relation::Ge,
            rhs,
        }
    }

    pub fn eq(coeffs: Vec<T>, rhs: T) -> Self {
        Constraint {
            coeffs,
            relation: Relation::Eq,
            rhs,
        }
    }
}

impl<T: Scalar> Constraint<T> {
    pub fn is_satisfied_by(&self, x: &[T]) -> bool {
        let lhs = super::linalg::dot(&self.coeffs, x);
        match self.relation {
            Relation::Le => lhs <= self.rhs,
            Relation::Ge => lhs >= self.rhs,
            Relation::Eq => lhs == self.rhs,
        }
    }
}

fn check_dims<T>(dim: usize, constraints: &[Constraint<T>]) -> Result<()> {
    match constraints.iter().find(|c| c.coeffs.len() != dim) {
        Some(c) => Err(Error::DimensionMismatch {
            expected: dim,
            found: c.coeffs.len(),
        }),
        None => Ok(()),
    }
}

/// Decides whether `{x ∈ Q^dim : constraints}` is nonempty; returns a witness
/// satisfying every constraint exactly.
pub fn feasible<T: Scalar>(dim: usize, constraints: &[Constraint<T>]) -> Result<Option<Vec<T>>> {
    check_dims(dim, constraints)?;
    // x = u - v with u, v >= 0
    let split: Vec<Constraint<T>> = constraints
        .iter()
        .map(|c| Constraint {
            coeffs: c
                .coeffs
                .iter()
                .cloned()
                .chain(c.coeffs.iter().map(|a| -a.clone()))
                .collect(),
            relation: c.relation,
            rhs: c.rhs.clone(),
        })
        .collect();
    Ok(phase_one(2 * dim, &split).map(|uv| {
        (0..dim)
            .map(|j| uv[j].clone() - &uv[dim + j])
            .collect()
    }))
}

/// As [`feasible`], restricted to `x >= 0`.
pub fn feasible_nonnegative<T: Scalar>(
    dim: usize,
    constraints: &[Constraint<T>],
) -> Result<Option<Vec<T>>> {
    check_dims(dim, constraints)?;
    Ok(phase_one(dim, constraints))
}

fn phase_one<T: Scalar>(nvars: usize, constraints: &[Constraint<T>]) -> Option<Vec<T>> {
    let m = constraints.len();
    if m == 0 {
        return Some(vec![T::zero(); nvars]);
    }
    // Normalize to nonnegative right-hand sides.
    let rows: Vec<(Vec<T>, Relation, T)> = constraints
        .iter()
        .map(|c| {
            if c.rhs.is_negative() {
                let flipped = match c.relation {
                    Relation::Le => Relation::Ge,
                    Relation::Ge => Relation::Le,
                    Relation::Eq => Relation::Eq,
                };
                (
                    c.coeffs.iter().map(|a| -a.clone()).collect(),
                    flipped,
                    -c.rhs.clone(),
                )
            } else {
                (c.coeffs.clone(), c.relation, c.rhs.clone())
            }
        })
        .collect();

    let nslack = rows.iter().filter(|r| r.1 != Relation::Eq).count();
    let nart = rows.iter().filter(|r| r.1 != Relation::Le).count();
    let ncols = nvars + nslack + nart;
    let art_start = nvars + nslack;

    let mut tableau: Vec<Vec<T>> = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    let (mut slack, mut art) = (nvars, art_start);
    for (coeffs, relation, rhs) in rows {
        let mut row = coeffs;
        row.resize(ncols + 1, T::zero());
        row[ncols] = rhs;
        match relation {
            Relation::Le => {
                row[slack] = T::one();
                basis.push(slack);
                slack += 1;
            }
            Relation::Ge => {
                row[slack] = -T::one();
                slack += 1;
                row[art] = T::one();
                basis.push(art);
                art += 1;
            }
            Relation::Eq => {
                row[art] = T::one();
                basis.push(art);
                art += 1;
            }
        }
        tableau.push(row);
    }

    // Reduced costs of the phase-one objective (sum of artificials).
    let mut cost = vec![T::zero(); ncols + 1];
    for (row, &b) in tableau.iter().zip(&basis) {
        if b >= art_start {
            for (c, a) in cost.iter_mut().zip(row) {
                *c -= a;
            }
        }
    }
    for c in cost.iter_mut().take(ncols).skip(art_start) {
        *c += T::one();
    }

    while let Some(enter) = (0..ncols).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, T)> = None;
        for i in 0..m {
            if !tableau[i][enter].is_positive() {
                continue;
            }
            let ratio = tableau[i][ncols].clone() / &tableau[i][enter];
            let better = match &leave {
                None => true,
                Some((l, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*l]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        // The phase-one objective is bounded below by zero.
        let (pivot_row, _) = leave.expect("phase-one objective is bounded");
        pivot(&mut tableau, &mut cost, pivot_row, enter);
        basis[pivot_row] = enter;
    }

    let infeasibility = tableau
        .iter()
        .zip(&basis)
        .filter(|(_, &b)| b >= art_start)
        .fold(T::zero(), |acc, (row, _)| acc + &row[ncols]);
    if !infeasibility.is_zero() {
        return None;
    }
    let mut x = vec![T::zero(); nvars];
    for (row, &b) in tableau.iter().zip(&basis) {
        if b < nvars {
            x[b] = row[ncols].clone();
        }
    }
    Some(x)
}

fn pivot<T: Scalar>(tableau: &mut [Vec<T>], cost: &mut [T], r: usize, c: usize) {
    let inv = T::one() / &tableau[r][c];
    for v in tableau[r].iter_mut() {
        *v *= &inv;
    }
    let pivot_row = tableau[r].clone();
    let eliminate = |row: &mut [T]| {
        if row[c].is_zero() {
            return;
        }
        let factor = row[c].clone();
        for (v, p) in row.iter_mut().zip(&pivot_row) {
            if !p.is_zero() {
                let delta = factor.clone() * p;
                *v -= &delta;
            }
        }
    };
    for (i, row) in tableau.iter_mut().enumerate() {
        if i != r {
            eliminate(row);
        }
    }
    eliminate(cost);
}
