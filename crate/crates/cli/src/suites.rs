//! Property suites over every tuple whose members are generated by subsets of
//! `{p ≥ 0, p ≠ 0, Σp ≤ bound}` (distinct polyhedra only).

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_bigint::BigInt;
use rayon::prelude::*;
use relmix::classify::{lattice_points, lemma3_check, subset_family, theorem_v1_check};
use relmix::document::{PolyhedronDocument, TupleDocument};
use relmix::interlace::theorem_int_verdict;
use relmix::orthant::OrthantPolyhedron;
use relmix::relmv::PolyTuple;
use relmix::{Error, Result};

use crate::{CmdResult, Failure, Suite};

/// Largest point set whose subsets are enumerated.
const MAX_POINTS: usize = 16;

fn check_tuple(suite: Suite, t: &PolyTuple) -> Result<()> {
    match suite {
        Suite::V1 => theorem_v1_check(t).map(drop),
        Suite::Int => theorem_int_verdict(t).map(drop),
        Suite::Lemma3 => (0..t.dim()).try_for_each(|axis| lemma3_check(t, axis).map(drop)),
        Suite::Stability => unreachable!("stability runs on single polyhedra"),
    }
}

fn check_stability(b: &OrthantPolyhedron) -> Result<()> {
    let m = b.max_coordinate_sum();
    let base = b.complement_volume_with_clip(&m)?;
    for extra in [1, 5] {
        let clip = &m + BigInt::from(extra);
        let v = b.complement_volume_with_clip(&clip)?;
        if v != base {
            return Err(Error::TheoremViolation(format!(
                "complement volume {base} at clip {m} but {v} at clip {clip}"
            )));
        }
    }
    Ok(())
}

/// The `k`-th ordered `n`-tuple over `polys`, in lexicographic index order.
fn tuple_at(polys: &[OrthantPolyhedron], n: usize, mut k: usize) -> PolyTuple {
    let mut members = vec![polys[0].clone(); n];
    for slot in members.iter_mut().rev() {
        *slot = polys[k % polys.len()].clone();
        k /= polys.len();
    }
    PolyTuple::new(members).expect("uniform dimension")
}

fn name(suite: Suite) -> &'static str {
    match suite {
        Suite::V1 => "v1",
        Suite::Int => "int",
        Suite::Lemma3 => "lemma3",
        Suite::Stability => "stability",
    }
}

pub fn run(suite: Suite, n: usize, bound: i64) -> CmdResult {
    if n == 0 || bound < 1 {
        return Err(Failure::Input("dimension and bound must be positive".into()));
    }
    let points = lattice_points(n, bound).len();
    if points > MAX_POINTS {
        return Err(Failure::Input(format!(
            "{points} candidate generators for n = {n}, bound = {bound}; at most {MAX_POINTS} supported"
        )));
    }
    let raw = subset_family(n, bound);
    let generator_sets = raw.len();
    let polys: Vec<OrthantPolyhedron> = raw.into_iter().collect::<BTreeSet<_>>().into_iter().collect();

    let (total, results): (usize, Vec<Result<()>>) = match suite {
        Suite::Stability => (polys.len(), polys.par_iter().map(check_stability).collect()),
        _ => {
            let total = polys
                .len()
                .checked_pow(n as u32)
                .ok_or_else(|| Failure::Input("tuple count overflows".into()))?;
            let results = (0..total)
                .into_par_iter()
                .map(|k| check_tuple(suite, &tuple_at(&polys, n, k)))
                .collect();
            (total, results)
        }
    };
    let failed = results.iter().filter(|r| r.is_err()).count();

    let mut report = String::new();
    writeln!(report, "suite: {}", name(suite)).unwrap();
    writeln!(report, "generator_sets: {generator_sets}").unwrap();
    writeln!(report, "distinct_polyhedra: {}", polys.len()).unwrap();
    writeln!(report, "checked: {total}").unwrap();
    writeln!(report, "passed: {}", total - failed).unwrap();
    writeln!(report, "failed: {failed}").unwrap();
    let Some((first, Err(err))) = results.iter().enumerate().find(|(_, r)| r.is_err()) else {
        return Ok(report);
    };
    let offender = match suite {
        Suite::Stability => PolyhedronDocument::from_polyhedron(&polys[first]).render(),
        _ => TupleDocument::from_tuple(&tuple_at(&polys, n, first)).render(),
    };
    writeln!(report, "offender: {offender}").unwrap();
    write!(report, "reason: {err}").unwrap();
    Err(match Failure::from(err.clone()) {
        Failure::Mismatch(_) => Failure::Mismatch(report),
        _ => Failure::Violation(report),
    })
}
