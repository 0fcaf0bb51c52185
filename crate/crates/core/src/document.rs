//! JSON file formats for polyhedra and tuples.
//!
//! ```text
//! {"dim": 2, "generators": [[3,0],[1,1],[0,3]]}
//! {"dim": 2, "polyhedra": [{"generators": [[2,0],[0,2]]}, {"generators": [[3,0],[1,1],[0,3]]}]}
//! ```
//!
//! Unknown fields are rejected and coordinates are decimal integers.
//! [`PolyhedronDocument::render`] and [`TupleDocument::render`] emit exactly
//! the layout above, so documents built from polyhedra round-trip byte for
//! byte.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::orthant::OrthantPolyhedron;
use crate::relmv::PolyTuple;
use crate::{Error, IntVector, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyhedronDocument {
    pub dim: usize,
    pub generators: Vec<Vec<i64>>,
}

/// A tuple member: the generators only, the dimension is the tuple's.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MemberDocument {
    pub generators: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TupleDocument {
    pub dim: usize,
    pub polyhedra: Vec<MemberDocument>,
}

fn parse_json<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn build(dim: usize, generators: &[Vec<i64>], field: &str) -> Result<OrthantPolyhedron> {
    let mut points = Vec::with_capacity(generators.len());
    for (k, g) in generators.iter().enumerate() {
        if g.len() != dim {
            return Err(Error::Parse(format!(
                "{field}generators[{k}]: expected {dim} coordinates, found {}",
                g.len()
            )));
        }
        points.push(IntVector::from(&g[..]));
    }
    OrthantPolyhedron::new(dim, points).map_err(|e| Error::Parse(format!("{field}generators: {e}")))
}

fn render_points(points: &[Vec<i64>]) -> String {
    let inner: Vec<String> = points
        .iter()
        .map(|p| {
            let coords: Vec<String> = p.iter().map(i64::to_string).collect();
            format!("[{}]", coords.join(","))
        })
        .collect();
    format!("[{}]", inner.join(","))
}

/// Generators in decreasing lexicographic order, i.e. walking the staircase
/// from the first axis to the last.
fn generator_rows(b: &OrthantPolyhedron) -> Vec<Vec<i64>> {
    b.generators().iter().rev().map(IntVector::to_i64s).collect()
}

impl PolyhedronDocument {
    pub fn parse(text: &str) -> Result<Self> {
        parse_json(text)
    }

    pub fn from_polyhedron(b: &OrthantPolyhedron) -> Self {
        PolyhedronDocument {
            dim: b.dim(),
            generators: generator_rows(b),
        }
    }

    pub fn to_polyhedron(&self) -> Result<OrthantPolyhedron> {
        build(self.dim, &self.generators, "")
    }

    pub fn render(&self) -> String {
        format!(
            "{{\"dim\": {}, \"generators\": {}}}",
            self.dim,
            render_points(&self.generators)
        )
    }
}

impl TupleDocument {
    pub fn parse(text: &str) -> Result<Self> {
        parse_json(text)
    }

    pub fn from_tuple(t: &PolyTuple) -> Self {
        TupleDocument {
            dim: t.dim(),
            polyhedra: t
                .members()
                .iter()
                .map(|b| MemberDocument {
                    generators: generator_rows(b),
                })
                .collect(),
        }
    }

    pub fn to_tuple(&self) -> Result<PolyTuple> {
        if self.polyhedra.len() != self.dim {
            return Err(Error::Parse(format!(
                "polyhedra: expected {} members, found {}",
                self.dim,
                self.polyhedra.len()
            )));
        }
        let members = self
            .polyhedra
            .iter()
            .enumerate()
            .map(|(k, m)| build(self.dim, &m.generators, &format!("polyhedra[{k}].")))
            .collect::<Result<Vec<_>>>()?;
        PolyTuple::new(members)
    }

    pub fn render(&self) -> String {
        let members: Vec<String> = self
            .polyhedra
            .iter()
            .map(|m| format!("{{\"generators\": {}}}", render_points(&m.generators)))
            .collect();
        format!(
            "{{\"dim\": {}, \"polyhedra\": [{}]}}",
            self.dim,
            members.join(", ")
        )
    }
}

/// SHA-256 (lowercase hex) of the rendered tuple document.
pub fn tuple_hash(t: &PolyTuple) -> String {
    hex::encode(Sha256::digest(TupleDocument::from_tuple(t).render().as_bytes()))
}
