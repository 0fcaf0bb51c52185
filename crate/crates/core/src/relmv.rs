//! Relative mixed volume of tuples of pairs `(C, B_1), …, (C, B_n)`.
//!
//! Two independent routes are provided: inclusion–exclusion over complement
//! volumes of Minkowski sums, and the support-function expansion over the
//! positive facet normals of `B_2 + … + B_n`. [`rmv`] with [`Method::Both`]
//! runs both and refuses to answer when they disagree.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::orthant::{Covector, OrthantPolyhedron};
use crate::polytope::{factorial, mixed_volume};
use crate::{Error, Result};

/// `n` orthant polyhedra in dimension `n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PolyTuple {
    members: Vec<OrthantPolyhedron>,
}

impl PolyTuple {
    pub fn new(members: Vec<OrthantPolyhedron>) -> Result<Self> {
        let n = members.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        if let Some(b) = members.iter().find(|b| b.dim() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: b.dim(),
            });
        }
        Ok(PolyTuple { members })
    }

    pub fn dim(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[OrthantPolyhedron] {
        &self.members
    }

    pub fn into_members(self) -> Vec<OrthantPolyhedron> {
        self.members
    }

    /// Copy with member `index` replaced.
    pub fn with_member(&self, index: usize, member: OrthantPolyhedron) -> Result<Self> {
        let mut members = self.members.clone();
        members[index] = member;
        PolyTuple::new(members)
    }
}

impl fmt::Display for PolyTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, b) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, "]")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    InclusionExclusion,
    SupportFormula,
    Both,
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ie" => Ok(Method::InclusionExclusion),
            "support" => Ok(Method::SupportFormula),
            "both" => Ok(Method::Both),
            other => Err(Error::Parse(format!("unknown method `{other}`"))),
        }
    }
}

/// `Σ_I (−1)^{n−|I|} Vol(C ∖ Σ_{i∈I} B_i) / n!`; the empty index set
/// contributes the pair `(C, C)` of volume zero.
pub fn rmv_inclusion_exclusion(tuple: &PolyTuple) -> BigInt {
    let members = tuple.members();
    let n = members.len();
    let mut sums: Vec<Option<OrthantPolyhedron>> = vec![None; 1 << n];
    let mut total = BigInt::zero();
    for mask in 1usize..1 << n {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        let sum = match &sums[rest] {
            None => members[low].clone(),
            Some(partial) => partial
                .minkowski_sum(&members[low])
                .expect("members share the dimension"),
        };
        let term = sum.complement_volume();
        if (n - mask.count_ones() as usize).is_multiple_of(2) {
            total += term;
        } else {
            total -= term;
        }
        sums[mask] = Some(sum);
    }
    let (q, r) = total.div_rem(&factorial(n));
    debug_assert!(r.is_zero(), "relative mixed volume of lattice pairs is integral");
    q
}

/// `Σ_γ B_1(γ) · MV(B_2^γ, …, B_n^γ)` over the positive facet normals `γ` of
/// `B_2 + … + B_n`, with mixed volumes taken in the lattice of `ker γ`.
pub fn rmv_support_formula(tuple: &PolyTuple) -> BigInt {
    let members = tuple.members();
    let n = members.len();
    let first = &members[0];
    if n == 1 {
        return first
            .support_value(&Covector::ones(1))
            .expect("dimension one");
    }
    let rest = &members[1..];
    let sum = rest[1..].iter().fold(rest[0].clone(), |acc, b| {
        acc.minkowski_sum(b).expect("members share the dimension")
    });
    let mut total = BigInt::zero();
    for gamma in sum.positive_facet_normals() {
        let height = first.support_value(&gamma).expect("dimension checked");
        if height.is_zero() {
            continue;
        }
        let faces: Vec<_> = rest
            .iter()
            .map(|b| b.support_face(&gamma).expect("dimension checked"))
            .collect();
        let mv = mixed_volume(&faces, Some(gamma.as_vector()))
            .expect("support faces lie on level sets of γ");
        total += height * mv;
    }
    total
}

pub fn rmv(tuple: &PolyTuple, method: Method) -> Result<BigInt> {
    match method {
        Method::InclusionExclusion => Ok(rmv_inclusion_exclusion(tuple)),
        Method::SupportFormula => Ok(rmv_support_formula(tuple)),
        Method::Both => {
            let ie = rmv_inclusion_exclusion(tuple);
            let support = rmv_support_formula(tuple);
            if ie == support {
                Ok(ie)
            } else {
                Err(Error::OracleMismatch {
                    ie,
                    support,
                    tuple: tuple.to_string(),
                })
            }
        }
    }
}
