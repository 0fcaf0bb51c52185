//! Integer lattice utilities: kernel lattices of primitive covectors and
//! simplex volumes.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::linalg::determinant;
use super::{IntVector, Scalar};
use crate::error::{Error, Result};

/// A unimodular change of coordinates adapted to a primitive covector `γ`.
///
/// `basis()` spans the lattice `{x ∈ Z^n : γ·x = 0}` and `coordinates(x)`
/// expresses `x` in that basis, dropping the `γ`-level component. On any
/// level set `γ·x = c` this is an affine isomorphism onto `Z^{n-1}`, so
/// lattice volumes transport without scaling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelChart {
    covector: IntVector,
    basis: Vec<IntVector>,
    coordinate_rows: Vec<IntVector>,
}

impl KernelChart {
    pub fn new(covector: &IntVector) -> Result<Self> {
        if covector.is_zero() {
            return Err(Error::ZeroVector);
        }
        if !covector.gcd().is_one() {
            return Err(Error::NotPrimitive(covector.clone()));
        }
        let n = covector.dim();
        let mut a: Vec<BigInt> = covector.coords().to_vec();
        // Columns of U and rows of U⁻¹, with γ·U = (±1, 0, …, 0) at the end.
        let mut cols: Vec<Vec<BigInt>> = identity(n);
        let mut inv_rows: Vec<Vec<BigInt>> = identity(n);
        loop {
            let nonzero: Vec<usize> = (0..n).filter(|&j| !a[j].is_zero()).collect();
            if nonzero.len() <= 1 {
                break;
            }
            let k = *nonzero
                .iter()
                .min_by(|&&x, &&y| a[x].abs().cmp(&a[y].abs()).then(x.cmp(&y)))
                .expect("nonempty");
            for &j in &nonzero {
                if j == k {
                    continue;
                }
                let q = a[j].div_floor(&a[k]);
                if q.is_zero() {
                    continue;
                }
                let ak = a[k].clone();
                a[j] -= &q * ak;
                let col_k = cols[k].clone();
                for (x, y) in cols[j].iter_mut().zip(&col_k) {
                    *x -= &q * y;
                }
                let row_j = inv_rows[j].clone();
                for (x, y) in inv_rows[k].iter_mut().zip(&row_j) {
                    *x += &q * y;
                }
            }
        }
        let k = (0..n).find(|&j| !a[j].is_zero()).expect("covector is nonzero");
        debug_assert!(a[k].abs().is_one());
        cols.swap(0, k);
        inv_rows.swap(0, k);
        Ok(KernelChart {
            covector: covector.clone(),
            basis: cols.into_iter().skip(1).map(IntVector::new).collect(),
            coordinate_rows: inv_rows.into_iter().skip(1).map(IntVector::new).collect(),
        })
    }

    pub fn covector(&self) -> &IntVector {
        &self.covector
    }

    pub fn basis(&self) -> &[IntVector] {
        &self.basis
    }

    /// Coordinates of `x` in `Z^{n-1}`.
    pub fn coordinates(&self, x: &IntVector) -> IntVector {
        IntVector::new(self.coordinate_rows.iter().map(|r| r.dot(x)).collect())
    }
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect()
}

/// A basis of the rank-(n−1) lattice `{x ∈ Z^n : γ·x = 0}`.
pub fn kernel_lattice_basis(covector: &IntVector) -> Result<Vec<IntVector>> {
    Ok(KernelChart::new(covector)?.basis)
}

/// Lattice-normalized volume of a simplex: |det| of its edge matrix.
pub fn simplex_volume<T: Scalar>(vertices: &[Vec<T>]) -> Result<T> {
    let n = vertices.first().ok_or(Error::Empty)?.len();
    if vertices.len() != n + 1 {
        return Err(Error::DimensionMismatch {
            expected: n + 1,
            found: vertices.len(),
        });
    }
    if let Some(v) = vertices.iter().find(|v| v.len() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: v.len(),
        });
    }
    let base = &vertices[0];
    let edges: Vec<Vec<T>> = vertices[1..]
        .iter()
        .map(|v| v.iter().zip(base).map(|(x, y)| x.clone() - y).collect())
        .collect();
    Ok(determinant(&edges).abs())
}
