//! Lattice polyhedra `B = conv(G) + C` whose recession cone is the positive
//! orthant `C` and whose complement `C ∖ B` is bounded.
//!
//! Everything that needs facet data goes through the clipped polytope
//! `conv(G ∪ {M·e_i})`, which equals `B ∩ {Σx ≤ M}` whenever `M` is at least
//! the largest generator coordinate sum.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed, Zero};

use crate::exact::{convex_hull_int, feasible_nonnegative, Constraint, HullResult};
use crate::polytope::Polytope;
use crate::{Error, IntVector, Rat, Result};

/// A primitive integer covector with strictly positive coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Covector(IntVector);

impl Covector {
    /// Normalizes to primitive form; rejects vectors with a non-positive entry.
    pub fn new(coords: IntVector) -> Result<Self> {
        let p = coords.primitive()?;
        if p.coords().iter().any(|c| !c.is_positive()) {
            return Err(Error::NonPositiveCovector(coords));
        }
        Ok(Covector(p))
    }

    pub fn ones(dim: usize) -> Self {
        Covector(IntVector::from(vec![1; dim]))
    }

    pub fn as_vector(&self) -> &IntVector {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }
}

impl TryFrom<IntVector> for Covector {
    type Error = Error;

    fn try_from(v: IntVector) -> Result<Self> {
        Covector::new(v)
    }
}

impl fmt::Display for Covector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A bounded face of an orthant polyhedron.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct BoundedFace {
    pub dimension: usize,
    pub face: Polytope,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrthantPolyhedron {
    dim: usize,
    generators: Vec<IntVector>,
}

impl OrthantPolyhedron {
    /// Builds `conv(generators) + C`, reducing the generators to the vertex
    /// set.
    pub fn new(dim: usize, generators: Vec<IntVector>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::Empty);
        }
        for g in &generators {
            if g.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: g.dim(),
                });
            }
            if !g.is_nonnegative() {
                return Err(Error::NegativeCoordinate(g.clone()));
            }
        }
        let gens = canonical_generators(dim, generators);
        for axis in 0..dim {
            let on_axis = gens.iter().any(|g| {
                g.coords()
                    .iter()
                    .enumerate()
                    .all(|(i, c)| i == axis || c.is_zero())
            });
            if !on_axis {
                return Err(Error::UnboundedComplement { axis });
            }
        }
        Ok(OrthantPolyhedron {
            dim,
            generators: gens,
        })
    }

    pub fn from_points<P: Into<IntVector>>(
        dim: usize,
        points: impl IntoIterator<Item = P>,
    ) -> Result<Self> {
        Self::new(dim, points.into_iter().map(Into::into).collect())
    }

    /// The orthant `C` itself.
    pub fn orthant(dim: usize) -> Self {
        OrthantPolyhedron {
            dim,
            generators: vec![IntVector::zero(dim)],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Vertices of the polyhedron, lexicographically sorted.
    pub fn generators(&self) -> &[IntVector] {
        &self.generators
    }

    pub fn max_coordinate_sum(&self) -> BigInt {
        self.generators
            .iter()
            .map(IntVector::coordinate_sum)
            .max()
            .expect("nonempty")
    }

    fn check_dim(&self, dim: usize) -> Result<()> {
        if dim == self.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim,
                found: dim,
            })
        }
    }

    pub fn minkowski_sum(&self, other: &OrthantPolyhedron) -> Result<Self> {
        self.check_dim(other.dim)?;
        let sums = self
            .generators
            .iter()
            .flat_map(|x| other.generators.iter().map(move |y| x + y))
            .collect();
        Ok(OrthantPolyhedron {
            dim: self.dim,
            generators: canonical_generators(self.dim, sums),
        })
    }

    /// `min over B of γ·x`, attained at a generator.
    pub fn support_value(&self, gamma: &Covector) -> Result<BigInt> {
        self.check_dim(gamma.dim())?;
        Ok(self
            .generators
            .iter()
            .map(|g| gamma.0.dot(g))
            .min()
            .expect("nonempty"))
    }

    /// The face of `B` on which `γ` attains its minimum.
    pub fn support_face(&self, gamma: &Covector) -> Result<Polytope> {
        let h = self.support_value(gamma)?;
        let face: Vec<IntVector> = self
            .generators
            .iter()
            .filter(|g| gamma.0.dot(g) == h)
            .cloned()
            .collect();
        Polytope::new(&face)
    }

    /// Membership: some convex combination of generators is `<= p`.
    pub fn contains(&self, p: &IntVector) -> Result<bool> {
        self.check_dim(p.dim())?;
        if !p.is_nonnegative() {
            return Ok(false);
        }
        let dominated = |g: &IntVector| g.coords().iter().zip(p.coords()).all(|(a, b)| a <= b);
        if self.generators.iter().any(dominated) {
            return Ok(true);
        }
        let k = self.generators.len();
        let mut constraints = vec![Constraint::eq(vec![Rat::one(); k], Rat::one())];
        for c in 0..self.dim {
            let row = self
                .generators
                .iter()
                .map(|g| Rat::from_integer(g.coords()[c].clone()))
                .collect();
            constraints.push(Constraint::le(row, Rat::from_integer(p.coords()[c].clone())));
        }
        Ok(feasible_nonnegative(k, &constraints)?.is_some())
    }

    fn clip_points(&self, clip: &BigInt) -> Vec<IntVector> {
        let mut pts = self.generators.clone();
        pts.extend((0..self.dim).map(|i| IntVector::axis(self.dim, i, clip.clone())));
        pts
    }

    /// Hull of `B ∩ {Σx ≤ clip}`.
    pub fn clipped_hull(&self, clip: &BigInt) -> Result<HullResult<Rat>> {
        let required = self.max_coordinate_sum();
        if *clip < required {
            return Err(Error::ClipTooSmall {
                clip: clip.clone(),
                required,
            });
        }
        convex_hull_int(&self.clip_points(clip))
    }

    /// Lattice volume of `C ∖ B`.
    pub fn complement_volume(&self) -> BigInt {
        self.complement_volume_with_clip(&self.max_coordinate_sum())
            .expect("clip equals the maximal coordinate sum")
    }

    /// Lattice volume of `C ∖ B` computed as `clip^n − Vol(B ∩ {Σx ≤ clip})`.
    pub fn complement_volume_with_clip(&self, clip: &BigInt) -> Result<BigInt> {
        if clip.is_zero() && self.max_coordinate_sum().is_zero() {
            return Ok(BigInt::zero());
        }
        let hull = self.clipped_hull(clip)?;
        let inside = if hull.is_full_dimensional() {
            hull.volume.to_integer()
        } else {
            BigInt::zero()
        };
        Ok(Pow::pow(clip, self.dim as u32) - inside)
    }

    fn separated_hull(&self) -> (HullResult<Rat>, Vec<bool>) {
        let clip = self.max_coordinate_sum() + BigInt::one();
        let hull = self.clipped_hull(&clip).expect("clip exceeds every generator");
        let clip_rat = Rat::from_integer(clip);
        let is_clip = hull
            .vertices
            .iter()
            .map(|v| v.iter().fold(Rat::zero(), |a, x| a + x) == clip_rat)
            .collect();
        (hull, is_clip)
    }

    /// Primitive inner normals of the bounded facets.
    pub fn positive_facet_normals(&self) -> Vec<Covector> {
        let (hull, is_clip) = self.separated_hull();
        let mut normals: Vec<Covector> = hull
            .facets
            .iter()
            .filter(|f| !f.vertices.iter().any(|&v| is_clip[v]))
            .filter_map(|f| Covector::new(f.normal.clone()).ok())
            .collect();
        normals.sort();
        normals.dedup();
        normals
    }

    /// All bounded faces, vertices first, each reported once.
    pub fn bounded_faces(&self) -> Vec<BoundedFace> {
        let (hull, is_clip) = self.separated_hull();
        let facets: Vec<BTreeSet<usize>> = hull
            .facets
            .iter()
            .map(|f| f.vertices.iter().copied().collect())
            .collect();
        let mut faces: BTreeSet<BTreeSet<usize>> = facets.iter().cloned().collect();
        let mut frontier: Vec<BTreeSet<usize>> = facets.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for f in &frontier {
                for g in &facets {
                    let meet: BTreeSet<usize> = f.intersection(g).copied().collect();
                    if !meet.is_empty() && faces.insert(meet.clone()) {
                        next.push(meet);
                    }
                }
            }
            frontier = next;
        }
        let mut out: Vec<BoundedFace> = faces
            .into_iter()
            .filter(|f| !f.iter().any(|&v| is_clip[v]))
            .map(|f| {
                let pts: Vec<IntVector> = f
                    .iter()
                    .map(|&v| IntVector::from_scalars(&hull.vertices[v]).expect("lattice vertex"))
                    .collect();
                let face = Polytope::new(&pts).expect("nonempty face");
                BoundedFace {
                    dimension: face.affine_dim(),
                    face,
                }
            })
            .collect();
        out.sort();
        out
    }

    /// `conv(B ∪ {δ})`.
    pub fn extend(&self, delta: &IntVector) -> Result<Self> {
        self.check_dim(delta.dim())?;
        if !delta.is_nonnegative() {
            return Err(Error::NegativeCoordinate(delta.clone()));
        }
        let mut gens = self.generators.clone();
        gens.push(delta.clone());
        Ok(OrthantPolyhedron {
            dim: self.dim,
            generators: canonical_generators(self.dim, gens),
        })
    }

    /// Moves coordinate `i` to position `perm[i]`.
    pub fn permute_coordinates(&self, perm: &[usize]) -> Self {
        let mut gens: Vec<IntVector> = self.generators.iter().map(|g| g.permute(perm)).collect();
        gens.sort();
        OrthantPolyhedron {
            dim: self.dim,
            generators: gens,
        }
    }

    /// Dilation `k·B` for a positive integer `k`.
    pub fn scale(&self, factor: u32) -> Self {
        let f = BigInt::from(factor);
        OrthantPolyhedron {
            dim: self.dim,
            generators: self.generators.iter().map(|g| g.scale(&f)).collect(),
        }
    }
}

impl fmt::Display for OrthantPolyhedron {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "conv{{")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "}}+C")
    }
}

/// Vertex set of `conv(points) + C` for nonnegative lattice points.
fn canonical_generators(dim: usize, mut points: Vec<IntVector>) -> Vec<IntVector> {
    points.sort();
    points.dedup();
    let leq = |a: &IntVector, b: &IntVector| a.coords().iter().zip(b.coords()).all(|(x, y)| x <= y);
    let undominated: Vec<IntVector> = points
        .iter()
        .filter(|p| !points.iter().any(|q| q != *p && leq(q, p)))
        .cloned()
        .collect();
    if undominated.len() <= dim.max(1) {
        return undominated;
    }
    let clip = undominated
        .iter()
        .map(IntVector::coordinate_sum)
        .max()
        .expect("nonempty")
        + BigInt::one();
    let mut pts = undominated;
    pts.extend((0..dim).map(|i| IntVector::axis(dim, i, clip.clone())));
    let hull = convex_hull_int::<Rat>(&pts).expect("nonempty point set");
    let clip = Rat::from_integer(clip);
    hull.vertices
        .iter()
        .filter(|v| v.iter().fold(Rat::zero(), |a, x| a + x) != clip)
        .map(|v| IntVector::from_scalars(v).expect("lattice vertex"))
        .collect()
}

/// `C_{a_1,…,a_n} = conv{a_i·e_i} + C`.
pub fn c_simplex(legs: &[i64]) -> Result<OrthantPolyhedron> {
    if let Some(&a) = legs.iter().find(|&&a| a < 1) {
        return Err(Error::NonPositiveLeg(a));
    }
    let n = legs.len();
    OrthantPolyhedron::new(
        n,
        legs.iter()
            .enumerate()
            .map(|(i, &a)| IntVector::axis(n, i, a))
            .collect(),
    )
}
