use std::fmt;
use std::ops::{Add, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::Scalar;
use crate::error::{Error, Result};

/// A lattice point or integer covector. Ordering is lexicographic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct IntVector(Vec<BigInt>);

impl IntVector {
    pub fn new(coords: Vec<BigInt>) -> Self {
        IntVector(coords)
    }

    pub fn zero(dim: usize) -> Self {
        IntVector(vec![BigInt::zero(); dim])
    }

    /// The `axis`-th unit vector scaled by `scale`.
    pub fn axis(dim: usize, axis: usize, scale: impl Into<BigInt>) -> Self {
        let mut v = Self::zero(dim);
        v.0[axis] = scale.into();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<BigInt> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &IntVector) -> BigInt {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn coordinate_sum(&self) -> BigInt {
        self.0.iter().sum()
    }

    pub fn scale(&self, factor: &BigInt) -> IntVector {
        IntVector(self.0.iter().map(|c| c * factor).collect())
    }

    /// Applies a coordinate permutation: coordinate `i` moves to `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> IntVector {
        let mut out = Self::zero(self.dim());
        for (i, c) in self.0.iter().enumerate() {
            out.0[perm[i]] = c.clone();
        }
        out
    }

    pub fn gcd(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides by the gcd of the entries.
    pub fn primitive(&self) -> Result<IntVector> {
        if self.is_zero() {
            return Err(Error::ZeroVector);
        }
        let g = self.gcd();
        Ok(IntVector(self.0.iter().map(|c| c / &g).collect()))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|c| !c.is_negative())
    }

    pub fn to_scalars<T: Scalar>(&self) -> Vec<T> {
        self.0.iter().map(T::from_int).collect()
    }

    /// Converts an integral scalar vector back; `None` if any entry is fractional.
    pub fn from_scalars<T: Scalar>(values: &[T]) -> Option<IntVector> {
        values.iter().map(Scalar::to_int).collect::<Option<_>>().map(IntVector)
    }

    pub fn to_i64s(&self) -> Vec<i64> {
        use num_traits::ToPrimitive;
        self.0
            .iter()
            .map(|c| c.to_i64().expect("coordinate exceeds i64"))
            .collect()
    }
}

/// Scales a rational vector by the lcm of denominators and divides by the gcd
/// of the resulting numerators, giving the primitive integer vector with the
/// same direction.
pub fn primitive_from_scalars<T: Scalar>(values: &[T]) -> Result<IntVector> {
    let fractions: Vec<_> = values.iter().map(Scalar::to_fraction).collect();
    let lcm = fractions
        .iter()
        .fold(BigInt::from(1), |acc, (_, d)| acc.lcm(d));
    IntVector(fractions.into_iter().map(|(n, d)| n * (&lcm / d)).collect()).primitive()
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<i64>> for IntVector {
    fn from(v: Vec<i64>) -> Self {
        IntVector(v.into_iter().map(BigInt::from).collect())
    }
}

impl From<&[i64]> for IntVector {
    fn from(v: &[i64]) -> Self {
        IntVector(v.iter().copied().map(BigInt::from).collect())
    }
}

impl<const N: usize> From<[i64; N]> for IntVector {
    fn from(v: [i64; N]) -> Self {
        IntVector(v.into_iter().map(BigInt::from).collect())
    }
}

impl Add for &IntVector {
    type Output = IntVector;

    fn add(self, rhs: &IntVector) -> IntVector {
        debug_assert_eq!(self.dim(), rhs.dim());
        IntVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &IntVector {
    type Output = IntVector;

    fn sub(self, rhs: &IntVector) -> IntVector {
        debug_assert_eq!(self.dim(), rhs.dim());
        IntVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

/// Entry gcd division. Fails on the zero vector.
pub fn primitive(v: &IntVector) -> Result<IntVector> {
    v.primitive()
}
