//! Bounded lattice polytopes: lattice volume, Minkowski sums and mixed
//! volumes, including polytopes parallel to a rational hyperplane.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::exact::{convex_hull_int, KernelChart};
use crate::{Error, IntVector, Rat, Result};

/// A bounded lattice polytope, stored as its lexicographically sorted vertex
/// set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Polytope {
    vertices: Vec<IntVector>,
    affine_dim: usize,
    volume: BigInt,
}

impl Polytope {
    /// Convex hull of `points`.
    pub fn new(points: &[IntVector]) -> Result<Self> {
        let hull = convex_hull_int::<Rat>(points)?;
        let volume = if hull.is_full_dimensional() {
            hull.volume.to_integer()
        } else {
            BigInt::zero()
        };
        let vertices = hull
            .vertices
            .iter()
            .map(|v| IntVector::from_scalars(v).expect("hull of lattice points"))
            .collect();
        Ok(Polytope {
            vertices,
            affine_dim: hull.dim,
            volume,
        })
    }

    pub fn point(p: IntVector) -> Self {
        Polytope {
            affine_dim: 0,
            volume: if p.dim() == 0 { BigInt::one() } else { BigInt::zero() },
            vertices: vec![p],
        }
    }

    pub fn vertices(&self) -> &[IntVector] {
        &self.vertices
    }

    pub fn ambient_dim(&self) -> usize {
        self.vertices[0].dim()
    }

    pub fn affine_dim(&self) -> usize {
        self.affine_dim
    }

    /// Lattice volume in the ambient lattice, or, given a covector `γ` with
    /// the polytope on a level set of `γ`, in the lattice of `ker γ`.
    pub fn lattice_volume(&self, hyperplane: Option<&IntVector>) -> Result<BigInt> {
        match hyperplane {
            None => Ok(self.volume.clone()),
            Some(gamma) => {
                let chart = KernelChart::new(&gamma.primitive()?)?;
                Ok(self.transport(&chart)?.volume)
            }
        }
    }

    /// Re-expresses the polytope in the coordinates of `chart`; fails unless
    /// every vertex lies on one level set of the chart's covector.
    pub fn transport(&self, chart: &KernelChart) -> Result<Polytope> {
        let gamma = chart.covector();
        if gamma.dim() != self.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim(),
                found: gamma.dim(),
            });
        }
        let level = gamma.dot(&self.vertices[0]);
        if self.vertices.iter().any(|v| gamma.dot(v) != level) {
            return Err(Error::NotParallel(gamma.clone()));
        }
        let coords: Vec<IntVector> = self.vertices.iter().map(|v| chart.coordinates(v)).collect();
        if coords[0].dim() == 0 {
            return Ok(Polytope::point(coords[0].clone()));
        }
        Polytope::new(&coords)
    }

    pub fn translate(&self, by: &IntVector) -> Polytope {
        Polytope {
            vertices: self.vertices.iter().map(|v| v + by).collect(),
            affine_dim: self.affine_dim,
            volume: self.volume.clone(),
        }
    }

    /// Dilation by a nonnegative integer factor.
    pub fn dilate(&self, factor: u32) -> Result<Polytope> {
        let f = BigInt::from(factor);
        Polytope::new(&self.vertices.iter().map(|v| v.scale(&f)).collect::<Vec<_>>())
    }
}

pub fn minkowski_sum_polytopes(k: &Polytope, l: &Polytope) -> Result<Polytope> {
    if k.ambient_dim() != l.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: k.ambient_dim(),
            found: l.ambient_dim(),
        });
    }
    let sums: Vec<IntVector> = k
        .vertices
        .iter()
        .flat_map(|x| l.vertices.iter().map(move |y| x + y))
        .collect();
    Polytope::new(&sums)
}

pub(crate) fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Mixed volume normalized so that `mixed_volume(K, …, K)` is the lattice
/// volume of `K`.
///
/// Without a hyperplane, expects `n` polytopes in `Z^n`. With a covector `γ`,
/// expects `n − 1` polytopes each lying on some level set of `γ`; each is
/// transported into the lattice of `ker γ` first. With no arguments left
/// (`n = 1` in the hyperplane case) the result is 1.
pub fn mixed_volume(polytopes: &[Polytope], hyperplane: Option<&IntVector>) -> Result<BigInt> {
    match hyperplane {
        None => {
            let n = polytopes.first().map_or(0, Polytope::ambient_dim);
            if let Some(p) = polytopes.iter().find(|p| p.ambient_dim() != n) {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: p.ambient_dim(),
                });
            }
            if polytopes.len() != n {
                return Err(Error::ArityMismatch {
                    expected: n,
                    found: polytopes.len(),
                });
            }
            mixed_volume_full(polytopes)
        }
        Some(gamma) => {
            let n = gamma.dim();
            if polytopes.len() + 1 != n {
                return Err(Error::ArityMismatch {
                    expected: n.saturating_sub(1),
                    found: polytopes.len(),
                });
            }
            if polytopes.is_empty() {
                return Ok(BigInt::one());
            }
            let chart = KernelChart::new(&gamma.primitive()?)?;
            let moved = polytopes
                .iter()
                .map(|p| p.transport(&chart))
                .collect::<Result<Vec<_>>>()?;
            mixed_volume_full(&moved)
        }
    }
}

/// Inclusion–exclusion over all nonempty index sets, divided by `n!`.
fn mixed_volume_full(polytopes: &[Polytope]) -> Result<BigInt> {
    let n = polytopes.len();
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut sums: Vec<Option<Polytope>> = vec![None; 1 << n];
    let mut total = BigInt::zero();
    for mask in 1usize..1 << n {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        let sum = match &sums[rest] {
            None => polytopes[low].clone(),
            Some(partial) => minkowski_sum_polytopes(partial, &polytopes[low])?,
        };
        let term = sum.lattice_volume(None)?;
        if (n - mask.count_ones() as usize).is_multiple_of(2) {
            total += term;
        } else {
            total -= term;
        }
        sums[mask] = Some(sum);
    }
    let (q, r) = total.div_rem(&factorial(n));
    debug_assert!(r.is_zero(), "mixed volume of lattice polytopes is integral");
    Ok(q)
}
