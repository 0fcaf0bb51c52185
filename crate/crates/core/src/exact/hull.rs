//! Exact convex hulls of finite point sets in any dimension.
//!
//! Points are deduplicated, sorted lexicographically and projected onto the
//! pivot coordinates of their affine hull, so lower-dimensional inputs are
//! handled by the same full-dimensional beneath-beyond pass. The placing
//! triangulation produced along the way gives the volume.

use std::collections::{BTreeSet, HashMap};

use super::linalg::{determinant, dot, normal_vector, rref, IncrementalSpan};
use super::vector::primitive_from_scalars;
use super::{IntVector, Scalar};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facet<T> {
    /// Primitive inner normal: `normal · x >= offset` on the hull.
    pub normal: IntVector,
    pub offset: T,
    /// Indices into [`HullResult::vertices`], ascending.
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HullResult<T> {
    pub ambient: usize,
    /// Affine dimension of the hull.
    pub dim: usize,
    /// Extreme points, lexicographically sorted.
    pub vertices: Vec<Vec<T>>,
    /// Facets relative to the affine hull, sorted by vertex set.
    ///
    /// For lower-dimensional hulls the normals are supported on
    /// [`HullResult::chart`] and vanish elsewhere.
    pub facets: Vec<Facet<T>>,
    /// Coordinates onto which the affine hull projects isomorphically.
    pub chart: Vec<usize>,
    /// `dim!` times the metric volume of the projection onto `chart`. For a
    /// full-dimensional hull of lattice points this is the lattice volume.
    pub volume: T,
}

impl<T: Scalar> HullResult<T> {
    pub fn is_full_dimensional(&self) -> bool {
        self.dim == self.ambient
    }

    /// `incidence()[f][v]` is true when vertex `v` lies on facet `f`.
    pub fn incidence(&self) -> Vec<Vec<bool>> {
        self.facets
            .iter()
            .map(|f| {
                let mut row = vec![false; self.vertices.len()];
                for &v in &f.vertices {
                    row[v] = true;
                }
                row
            })
            .collect()
    }
}

struct Working<T> {
    vertices: Vec<usize>,
    normal: Vec<T>,
    offset: T,
}

fn sub<T: Scalar>(a: &[T], b: &[T]) -> Vec<T> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y).collect()
}

/// Exact convex hull. Output ordering is lexicographic and independent of the
/// input order or of duplicated points.
pub fn convex_hull<T: Scalar>(points: &[Vec<T>]) -> Result<HullResult<T>> {
    let ambient = points.first().ok_or(Error::Empty)?.len();
    if let Some(p) = points.iter().find(|p| p.len() != ambient) {
        return Err(Error::DimensionMismatch {
            expected: ambient,
            found: p.len(),
        });
    }
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();

    let mut span = IncrementalSpan::new(ambient);
    let mut basis = vec![0];
    let mut diffs = Vec::new();
    for (i, p) in pts.iter().enumerate().skip(1) {
        if span.is_full() {
            break;
        }
        let d = sub(p, &pts[0]);
        if span.insert(&d) {
            basis.push(i);
            diffs.push(d);
        }
    }
    let dim = basis.len() - 1;
    let chart = if dim == 0 { Vec::new() } else { rref(&mut diffs) };

    if dim == 0 {
        return Ok(HullResult {
            ambient,
            dim,
            vertices: vec![pts[0].clone()],
            facets: Vec::new(),
            chart,
            volume: T::one(),
        });
    }

    let proj: Vec<Vec<T>> = pts
        .iter()
        .map(|p| chart.iter().map(|&c| p[c].clone()).collect())
        .collect();

    // (d+1) times an interior point of the initial simplex.
    let interior: Vec<T> = (0..dim)
        .map(|c| basis.iter().fold(T::zero(), |acc, &i| acc + &proj[i][c]))
        .collect();
    let scale = T::from_i64(dim as i64 + 1);

    let make_facet = |vertices: Vec<usize>| -> Working<T> {
        let base = &proj[vertices[0]];
        let edges: Vec<Vec<T>> = vertices[1..].iter().map(|&v| sub(&proj[v], base)).collect();
        let mut normal = normal_vector(&edges, dim).expect("facet simplex is nondegenerate");
        let mut offset = dot(&normal, base);
        if dot(&normal, &interior) < offset.clone() * &scale {
            normal = normal.into_iter().map(|x| -x).collect();
            offset = -offset;
        }
        Working {
            vertices,
            normal,
            offset,
        }
    };

    let simplex_volume = |apex: &[T], face: &[usize]| -> T {
        let rows: Vec<Vec<T>> = face.iter().map(|&v| sub(&proj[v], apex)).collect();
        determinant(&rows).abs()
    };

    let mut facets: Vec<Working<T>> = (0..=dim)
        .map(|skip| {
            let vs: Vec<usize> = basis
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != skip)
                .map(|(_, &i)| i)
                .collect();
            make_facet(vs)
        })
        .collect();
    let mut volume = simplex_volume(&proj[basis[0]], &basis[1..]);

    let in_basis: BTreeSet<usize> = basis.iter().copied().collect();
    for (i, q) in proj.iter().enumerate() {
        if in_basis.contains(&i) {
            continue;
        }
        let (visible, hidden): (Vec<_>, Vec<_>) = facets
            .into_iter()
            .partition(|f| dot(&f.normal, q) < f.offset);
        facets = hidden;
        if visible.is_empty() {
            continue;
        }
        let mut ridges: HashMap<Vec<usize>, usize> = HashMap::new();
        for f in &visible {
            volume += simplex_volume(q, &f.vertices);
            for skip in 0..f.vertices.len() {
                let mut ridge = f.vertices.clone();
                ridge.remove(skip);
                *ridges.entry(ridge).or_default() += 1;
            }
        }
        let mut horizon: Vec<Vec<usize>> = ridges
            .into_iter()
            .filter(|(_, count)| *count == 1)
            .map(|(r, _)| r)
            .collect();
        horizon.sort();
        for mut ridge in horizon {
            ridge.push(i);
            ridge.sort_unstable();
            facets.push(make_facet(ridge));
        }
    }

    // Merge coplanar simplices into facets of the polytope.
    let planes: BTreeSet<IntVector> = facets
        .iter()
        .map(|f| primitive_from_scalars(&f.normal).expect("facet normal is nonzero"))
        .collect();
    let planes: Vec<(IntVector, T)> = planes
        .into_iter()
        .map(|n| {
            let ns: Vec<T> = n.to_scalars();
            let offset = proj.iter().map(|q| dot(&ns, q)).min().expect("nonempty");
            (n, offset)
        })
        .collect();

    let on_plane: Vec<Vec<usize>> = planes
        .iter()
        .map(|(n, offset)| {
            let ns: Vec<T> = n.to_scalars();
            (0..proj.len())
                .filter(|&i| dot(&ns, &proj[i]) == *offset)
                .collect()
        })
        .collect();

    let mut vertex_of = vec![None; pts.len()];
    let mut vertices = Vec::new();
    for i in 0..pts.len() {
        let mut normals = IncrementalSpan::<T>::new(dim);
        for (plane, members) in planes.iter().zip(&on_plane) {
            if members.binary_search(&i).is_ok() {
                normals.insert(&plane.0.to_scalars::<T>());
            }
        }
        if normals.is_full() {
            vertex_of[i] = Some(vertices.len());
            vertices.push(pts[i].clone());
        }
    }

    let mut out_facets: Vec<Facet<T>> = planes
        .into_iter()
        .zip(on_plane)
        .map(|((normal, offset), members)| {
            let mut lifted = IntVector::zero(ambient).into_coords();
            for (k, &c) in chart.iter().enumerate() {
                lifted[c] = normal.coords()[k].clone();
            }
            Facet {
                normal: IntVector::new(lifted),
                offset,
                vertices: members.iter().filter_map(|&i| vertex_of[i]).collect(),
            }
        })
        .collect();
    out_facets.sort_by(|a, b| a.vertices.cmp(&b.vertices).then(a.normal.cmp(&b.normal)));

    Ok(HullResult {
        ambient,
        dim,
        vertices,
        facets: out_facets,
        chart,
        volume,
    })
}

/// Convex hull of lattice points.
pub fn convex_hull_int<T: Scalar>(points: &[IntVector]) -> Result<HullResult<T>> {
    let scalars: Vec<Vec<T>> = points.iter().map(IntVector::to_scalars).collect();
    convex_hull(&scalars)
}
