#![allow(dead_code)]

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use relmix::orthant::OrthantPolyhedron;
use relmix::relmv::PolyTuple;
use relmix::IntVector;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// One generator per axis with leg in `1..=max`, plus up to `extra` random
/// points with coordinates in `0..=max` (never the origin).
pub fn random_polyhedron(rng: &mut impl Rng, n: usize, max: i64, extra: usize) -> OrthantPolyhedron {
    let mut gens: Vec<IntVector> = (0..n)
        .map(|i| IntVector::axis(n, i, rng.random_range(1..=max)))
        .collect();
    for _ in 0..rng.random_range(0..=extra) {
        let p: Vec<i64> = (0..n).map(|_| rng.random_range(0..=max)).collect();
        if p.iter().any(|&c| c > 0) {
            gens.push(p.into());
        }
    }
    OrthantPolyhedron::new(n, gens).expect("axis generators present")
}

pub fn random_tuple(rng: &mut impl Rng, n: usize, max: i64, extra: usize) -> PolyTuple {
    PolyTuple::new((0..n).map(|_| random_polyhedron(rng, n, max, extra)).collect()).unwrap()
}

/// `{p ∈ Z^n_{≥0} ∖ {0} : Σp ≤ bound}` in lexicographic order.
pub fn small_points(n: usize, bound: i64) -> Vec<IntVector> {
    let mut out = Vec::new();
    let mut cur = vec![0i64; n];
    fn rec(i: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<IntVector>) {
        if i == cur.len() {
            if cur.iter().any(|&c| c > 0) {
                out.push(cur.clone().into());
            }
            return;
        }
        for v in 0..=left {
            cur[i] = v;
            rec(i + 1, left - v, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, bound, &mut cur, &mut out);
    out.sort();
    out
}
