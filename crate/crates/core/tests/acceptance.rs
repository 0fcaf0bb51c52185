//! Acceptance criteria: one line per criterion, exact checks, wall-clock
//! budgets. Exits nonzero if anything fails.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rayon::prelude::*;
use relmix::classify::{
    canonical_form, enumerate_minimal, lemma3_check, subset_family, theorem_v1_check,
    DEFAULT_SEARCH_CAP,
};
use relmix::interlace::{is_interlaced, theorem_int_verdict};
use relmix::orthant::{c_simplex, OrthantPolyhedron};
use relmix::polytope::{mixed_volume, Polytope};
use relmix::relmv::{rmv, rmv_inclusion_exclusion, rmv_support_formula, Method, PolyTuple};
use relmix::IntVector;

use common::{random_polyhedron, random_tuple, rng};

type Check = Result<String, String>;

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn err(e: relmix::Error) -> String {
    e.to_string()
}

fn poly(points: &[[i64; 2]]) -> OrthantPolyhedron {
    OrthantPolyhedron::from_points(2, points.iter().copied()).unwrap()
}

fn c(legs: &[i64]) -> OrthantPolyhedron {
    c_simplex(legs).unwrap()
}

fn staircase_pair() -> Check {
    let a = poly(&[[2, 0], [0, 2]]);
    let b = poly(&[[3, 0], [1, 1], [0, 3]]);
    let t = PolyTuple::new(vec![a.clone(), b.clone()]).map_err(err)?;
    let ie = rmv_inclusion_exclusion(&t);
    let sf = rmv_support_formula(&t);
    ensure(ie == 4.into() && sf == 4.into(), || format!("rmv ie {ie}, support {sf}"))?;

    let normals: Vec<IntVector> = b.positive_facet_normals().iter().map(|c| c.as_vector().clone()).collect();
    let expected = vec![IntVector::from([1, 2]), IntVector::from([2, 1])];
    ensure(normals == expected, || format!("facet normals {normals:?}"))?;

    for gamma in b.positive_facet_normals() {
        let h = a.support_value(&gamma).map_err(err)?;
        ensure(h == 2.into(), || format!("support of A at {gamma}: {h}"))?;
        let face = b.support_face(&gamma).map_err(err)?;
        let edge = mixed_volume(&[face], Some(gamma.as_vector())).map_err(err)?;
        ensure(edge == 1.into(), || format!("edge mixed volume at {gamma}: {edge}"))?;
    }

    let sum = a.minkowski_sum(&b).map_err(err)?;
    let want: BTreeSet<IntVector> = [[5, 0], [3, 1], [1, 3], [0, 5]].into_iter().map(IntVector::from).collect();
    let got: BTreeSet<IntVector> = sum.generators().iter().cloned().collect();
    ensure(got == want, || format!("A+B = {sum}"))?;
    ensure(is_interlaced(&t).interlaced, || "not interlaced".into())?;
    Ok("rmv 4 by both routes, normals {(1,2),(2,1)}, unit edges, interlaced".into())
}

fn lattice_volumes() -> Check {
    let segment = Polytope::new(&[IntVector::from([-1, 1]), IntVector::from([1, -1])]).map_err(err)?;
    let v = segment.lattice_volume(Some(&IntVector::from([1, 1]))).map_err(err)?;
    ensure(v == 2.into(), || format!("segment {v}"))?;

    let hexagon: Vec<IntVector> = [[1, -1, 0], [1, 0, -1], [0, 1, -1], [-1, 1, 0], [-1, 0, 1], [0, -1, 1]]
        .into_iter()
        .map(IntVector::from)
        .collect();
    let v = Polytope::new(&hexagon).map_err(err)?.lattice_volume(Some(&IntVector::from([1, 1, 1]))).map_err(err)?;
    ensure(v == 6.into(), || format!("hexagon {v}"))?;

    for n in 1..=5 {
        let mut pts = vec![IntVector::zero(n)];
        pts.extend((0..n).map(|i| IntVector::axis(n, i, 1)));
        let v = Polytope::new(&pts).map_err(err)?.lattice_volume(None).map_err(err)?;
        ensure(v == 1.into(), || format!("standard simplex in dimension {n}: {v}"))?;
    }
    Ok("segment 2, hexagon 6, standard simplices 1 (n = 1..5)".into())
}

fn oracle_equivalence() -> Check {
    let mut total = 0;
    for n in [2usize, 3] {
        let mut g = rng(1000 + n as u64);
        let tuples: Vec<PolyTuple> = (0..1000).map(|_| random_tuple(&mut g, n, 5, 4)).collect();
        let bad: Vec<&PolyTuple> = tuples
            .par_iter()
            .filter(|t| rmv_inclusion_exclusion(t) != rmv_support_formula(t))
            .collect();
        ensure(bad.is_empty(), || format!("{} disagreements, first {}", bad.len(), bad[0]))?;
        total += tuples.len();
    }
    Ok(format!("{total} tuples, 0 disagreements"))
}

fn plane_family_pairs() -> Vec<PolyTuple> {
    let family = subset_family(2, 2);
    family
        .iter()
        .flat_map(|a| family.iter().map(move |b| PolyTuple::new(vec![a.clone(), b.clone()]).unwrap()))
        .collect()
}

fn volume_one_exhaustive() -> Check {
    let tuples = plane_family_pairs();
    let failures: Vec<String> = tuples
        .par_iter()
        .filter_map(|t| theorem_v1_check(t).err().map(err))
        .collect();
    ensure(failures.is_empty(), || format!("{} violations: {}", failures.len(), failures[0]))?;
    let units = tuples.iter().filter(|t| theorem_v1_check(t).unwrap()).count();
    Ok(format!("{} tuples, {units} of volume one, 0 violations", tuples.len()))
}

fn hull_bound_exhaustive() -> Check {
    let tuples = plane_family_pairs();
    let verdicts: Vec<Result<relmix::interlace::IntVerdict, String>> =
        tuples.par_iter().map(|t| theorem_int_verdict(t).map_err(err)).collect();
    let failures: Vec<&String> = verdicts.iter().filter_map(|v| v.as_ref().err()).collect();
    ensure(failures.is_empty(), || format!("{} violations: {}", failures.len(), failures[0]))?;
    let interlaced = verdicts.iter().filter(|v| v.as_ref().unwrap().interlaced).count();
    Ok(format!("{} tuples, {interlaced} interlaced, 0 violations", tuples.len()))
}

fn classes(n: usize, v: u32) -> Result<BTreeSet<PolyTuple>, String> {
    Ok(enumerate_minimal(n, v, DEFAULT_SEARCH_CAP)
        .map_err(err)?
        .into_iter()
        .map(|cl| cl.representative)
        .collect())
}

fn canonical(tuples: Vec<Vec<OrthantPolyhedron>>) -> BTreeSet<PolyTuple> {
    tuples
        .into_iter()
        .map(|m| canonical_form(&PolyTuple::new(m).unwrap()).representative)
        .collect()
}

fn minimal_volume_two() -> Check {
    let plane = classes(2, 2)?;
    let want = canonical(vec![vec![c(&[2, 2]), c(&[1, 1])], vec![c(&[1, 2]), c(&[1, 2])]]);
    ensure(plane == want, || format!("n = 2: {} classes", plane.len()))?;
    let space = classes(3, 2)?;
    let want = canonical(vec![
        vec![c(&[2, 2, 2]), c(&[1, 1, 1]), c(&[1, 1, 1])],
        vec![c(&[1, 2, 2]), c(&[1, 2, 2]), c(&[1, 1, 1])],
        vec![c(&[1, 1, 2]), c(&[1, 1, 2]), c(&[1, 1, 2])],
    ]);
    ensure(space == want, || format!("n = 3: {} classes", space.len()))?;
    Ok("n = 2: 2 classes, n = 3: 3 classes, as expected".into())
}

fn corners_and_tightness() -> Check {
    let mut checked = 0;
    for (n, v) in [(2usize, 1u32), (2, 2), (2, 3), (3, 1), (3, 2)] {
        for t in classes(n, v)? {
            for b in t.members() {
                for j in 0..n {
                    let corner = IntVector::axis(n, j, v);
                    ensure(b.contains(&corner).map_err(err)?, || format!("{t} misses {corner}"))?;
                }
            }
            checked += 1;
        }
    }
    for n in [2usize, 3] {
        for v in 1..=4i64 {
            let mut members = vec![c(&vec![v; n])];
            members.extend((1..n).map(|_| c(&vec![1; n])));
            let t = PolyTuple::new(members).map_err(err)?;
            let got = rmv(&t, Method::Both).map_err(err)?;
            ensure(got == BigInt::from(v), || format!("{t}: {got}"))?;
        }
    }
    Ok(format!("{checked} minimal classes contain every V·e_j; tight family exact"))
}

fn corner_extension() -> Check {
    let mut g = rng(3003);
    let tuples: Vec<PolyTuple> = (0..240)
        .map(|k| random_tuple(&mut g, 1 + k % 3, 4, 3))
        .collect();
    let failures: Vec<String> = tuples
        .par_iter()
        .flat_map(|t| (0..t.dim()).map(move |axis| (t, axis)).collect::<Vec<_>>())
        .filter_map(|(t, axis)| lemma3_check(t, axis).err().map(err))
        .collect();
    ensure(failures.is_empty(), || format!("{} violations: {}", failures.len(), failures[0]))?;
    Ok(format!("{} tuples (n = 1, 2, 3), every axis", tuples.len()))
}

fn clipping_stability() -> Check {
    let mut g = rng(9009);
    let polys: Vec<OrthantPolyhedron> = (0..300)
        .map(|k| random_polyhedron(&mut g, 1 + k % 3, 5, 5))
        .collect();
    for b in &polys {
        let m = b.max_coordinate_sum();
        let vols: Vec<BigInt> = [0, 1, 5]
            .iter()
            .map(|&extra| b.complement_volume_with_clip(&(&m + extra)).map_err(err))
            .collect::<Result<_, _>>()?;
        ensure(vols.iter().all(|v| *v == vols[0]), || format!("{b}: {vols:?}"))?;
    }
    Ok(format!("{} polyhedra, clips M, M+1, M+5 agree", polys.len()))
}

fn one_dimensional() -> Check {
    for b in 1..=10i64 {
        let t = PolyTuple::new(vec![c(&[b])]).map_err(err)?;
        let (ie, sf) = (rmv_inclusion_exclusion(&t), rmv_support_formula(&t));
        ensure(ie == b.into() && sf == b.into(), || format!("b = {b}: ie {ie}, support {sf}"))?;
    }
    Ok("rmv([b,∞)) = b for b = 1..10 by both routes".into())
}

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Duration,
    run: fn() -> Check,
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, name: "staircase pair reproduction", budget: Duration::from_secs(1), run: staircase_pair },
        Criterion { id: 2, name: "lattice volume examples", budget: Duration::from_secs(1), run: lattice_volumes },
        Criterion { id: 3, name: "oracle equivalence", budget: Duration::from_secs(120), run: oracle_equivalence },
        Criterion { id: 4, name: "volume one iff matching (exhaustive)", budget: Duration::from_secs(60), run: volume_one_exhaustive },
        Criterion { id: 5, name: "hull bound and interlacing (exhaustive)", budget: Duration::from_secs(120), run: hull_bound_exhaustive },
        Criterion { id: 6, name: "minimal tuples of volume two", budget: Duration::from_secs(300), run: minimal_volume_two },
        Criterion { id: 7, name: "corner containment and tightness", budget: Duration::from_secs(60), run: corners_and_tightness },
        Criterion { id: 8, name: "corner extension keeps the volume", budget: Duration::from_secs(120), run: corner_extension },
        Criterion { id: 9, name: "clipping stability", budget: Duration::from_secs(30), run: clipping_stability },
        Criterion { id: 10, name: "one-dimensional sanity", budget: Duration::from_secs(1), run: one_dimensional },
    ];
    let mut failed = 0;
    for cr in &criteria {
        let start = Instant::now();
        let outcome = (cr.run)();
        let elapsed = start.elapsed();
        let (status, detail) = match outcome {
            Ok(d) if elapsed <= cr.budget => ("PASS", d),
            Ok(d) => ("FAIL", format!("{d}; over budget {:?}", cr.budget)),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!(
            "{status} criterion {:>2} {} [{:.3}s / {}s] {detail}",
            cr.id,
            cr.name,
            elapsed.as_secs_f64(),
            cr.budget.as_secs()
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
