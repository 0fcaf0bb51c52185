//! Interlaced tuples and the comparison of the relative mixed volume with the
//! complement volume of the hull of the union.

use num_bigint::BigInt;
use num_traits::One;

use crate::exact::{feasible_nonnegative, Constraint};
use crate::orthant::{BoundedFace, OrthantPolyhedron};
use crate::polytope::Polytope;
use crate::relmv::{rmv, Method, PolyTuple};
use crate::{Error, Rat, Result};

/// `conv(B_1 ∪ … ∪ B_n)`.
pub fn hull_union(tuple: &PolyTuple) -> OrthantPolyhedron {
    let gens = tuple
        .members()
        .iter()
        .flat_map(|b| b.generators().iter().cloned())
        .collect();
    OrthantPolyhedron::new(tuple.dim(), gens).expect("union of valid members is valid")
}

/// Whether the bounded polytope `face` meets `member`.
pub fn face_meets(face: &Polytope, member: &OrthantPolyhedron) -> bool {
    let verts = face.vertices();
    if verts.iter().any(|v| member.generators().contains(v)) {
        return true;
    }
    // μ ≥ 0 over face vertices, λ ≥ 0 over generators:
    // Σμ = 1, Σλ = 1, Σλ·g − Σμ·v ≤ 0 coordinatewise.
    let (k, m) = (verts.len(), member.generators().len());
    let mut ones_mu = vec![Rat::one(); k];
    ones_mu.resize(k + m, Rat::from_integer(BigInt::from(0)));
    let mut ones_lambda = vec![Rat::from_integer(BigInt::from(0)); k];
    ones_lambda.resize(k + m, Rat::one());
    let mut constraints = vec![
        Constraint::eq(ones_mu, Rat::one()),
        Constraint::eq(ones_lambda, Rat::one()),
    ];
    for c in 0..member.dim() {
        let row = verts
            .iter()
            .map(|v| -Rat::from_integer(v.coords()[c].clone()))
            .chain(
                member
                    .generators()
                    .iter()
                    .map(|g| Rat::from_integer(g.coords()[c].clone())),
            )
            .collect();
        constraints.push(Constraint::le(row, Rat::from_integer(BigInt::from(0))));
    }
    feasible_nonnegative(k + m, &constraints)
        .expect("consistent dimensions")
        .is_some()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interlacing {
    pub interlaced: bool,
    /// First bounded face meeting fewer than `dim + 1` members, with the
    /// number of members it meets.
    pub witness: Option<(BoundedFace, usize)>,
}

/// Every `k`-dimensional bounded face of the hull of the union meets at least
/// `k + 1` members.
pub fn is_interlaced(tuple: &PolyTuple) -> Interlacing {
    for face in hull_union(tuple).bounded_faces() {
        let meets = tuple
            .members()
            .iter()
            .filter(|b| face_meets(&face.face, b))
            .count();
        if meets < face.dimension + 1 {
            return Interlacing {
                interlaced: false,
                witness: Some((face, meets)),
            };
        }
    }
    Interlacing {
        interlaced: true,
        witness: None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntVerdict {
    pub mv: BigInt,
    pub hull_complement: BigInt,
    pub interlaced: bool,
}

/// Computes the relative mixed volume (both routes), the complement volume of
/// the hull of the union and the interlacing predicate, and checks that the
/// volume equals the complement volume exactly for interlaced tuples and
/// exceeds it otherwise.
pub fn theorem_int_verdict(tuple: &PolyTuple) -> Result<IntVerdict> {
    let mv = rmv(tuple, Method::Both)?;
    let hull_complement = hull_union(tuple).complement_volume();
    let interlaced = is_interlaced(tuple).interlaced;
    let holds = if interlaced {
        mv == hull_complement
    } else {
        mv > hull_complement
    };
    if !holds {
        return Err(Error::TheoremViolation(format!(
            "{tuple}: mv {mv}, hull complement {hull_complement}, interlaced {interlaced}"
        )));
    }
    Ok(IntVerdict {
        mv,
        hull_complement,
        interlaced,
    })
}
