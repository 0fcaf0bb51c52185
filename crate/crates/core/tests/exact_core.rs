mod common;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use relmix::exact::linalg::determinant;
use relmix::exact::{
    convex_hull, convex_hull_int, feasible, kernel_lattice_basis, simplex_volume, Constraint,
    KernelChart, Relation,
};
use relmix::{IntVector, Rat, Rat64};

use common::rng;

fn r(v: i64) -> Rat {
    Rat::from_integer(v.into())
}

/// Fourier–Motzkin elimination on `a·x <= b` rows.
fn fm_feasible(dim: usize, rows: &[(Vec<Rat>, Rat)]) -> bool {
    let mut rows = rows.to_vec();
    for k in 0..dim {
        let (mut pos, mut neg, mut keep) = (Vec::new(), Vec::new(), Vec::new());
        for row in rows {
            if row.0[k].is_positive() {
                pos.push(row);
            } else if row.0[k].is_negative() {
                neg.push(row);
            } else {
                keep.push(row);
            }
        }
        for (ap, bp) in &pos {
            for (an, bn) in &neg {
                let (sp, sn) = (-an[k].clone(), ap[k].clone());
                let a = ap.iter().zip(an).map(|(x, y)| x * &sp + y * &sn).collect();
                keep.push((a, bp * &sp + bn * &sn));
            }
        }
        rows = keep;
    }
    rows.iter().all(|(_, b)| !b.is_negative())
}

fn as_le(c: &Constraint<Rat>) -> Vec<(Vec<Rat>, Rat)> {
    let neg = || (c.coeffs.iter().map(|x| -x).collect::<Vec<_>>(), -c.rhs.clone());
    match c.relation {
        Relation::Le => vec![(c.coeffs.clone(), c.rhs.clone())],
        Relation::Ge => vec![neg()],
        Relation::Eq => vec![(c.coeffs.clone(), c.rhs.clone()), neg()],
    }
}

fn lattice_witness(dim: usize, cs: &[Constraint<Rat>]) -> bool {
    let side = 9i64;
    (0..side.pow(dim as u32)).any(|mut k| {
        let x: Vec<Rat> = (0..dim)
            .map(|_| {
                let v = k % side - 4;
                k /= side;
                r(v)
            })
            .collect();
        cs.iter().all(|c| c.is_satisfied_by(&x))
    })
}

#[test]
fn feasibility_matches_elimination_oracle() {
    let mut g = rng(101);
    let mut feasible_count = 0;
    for _ in 0..600 {
        let dim = g.random_range(1..=3);
        let m = g.random_range(1..=6);
        let cs: Vec<Constraint<Rat>> = (0..m)
            .map(|_| {
                let coeffs = (0..dim).map(|_| r(g.random_range(-3..=3))).collect();
                let rhs = r(g.random_range(-4..=4));
                match g.random_range(0..5) {
                    0 => Constraint::eq(coeffs, rhs),
                    1 | 2 => Constraint::le(coeffs, rhs),
                    _ => Constraint::ge(coeffs, rhs),
                }
            })
            .collect();
        let rows: Vec<_> = cs.iter().flat_map(as_le).collect();
        let expected = fm_feasible(dim, &rows);
        let got = feasible(dim, &cs).unwrap();
        assert_eq!(got.is_some(), expected, "{cs:?}");
        if let Some(x) = got {
            feasible_count += 1;
            assert!(cs.iter().all(|c| c.is_satisfied_by(&x)));
        } else {
            assert!(!lattice_witness(dim, &cs), "{cs:?}");
        }
    }
    assert!(feasible_count > 100 && feasible_count < 550);
}

fn random_points(g: &mut impl Rng, dim: usize, count: usize, max: i64) -> Vec<IntVector> {
    (0..count)
        .map(|_| (0..dim).map(|_| g.random_range(0..=max)).collect::<Vec<i64>>().into())
        .collect()
}

fn cross(o: &[i64], a: &[i64], b: &[i64]) -> i64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

/// Andrew's monotone chain: strict vertices in counterclockwise order.
fn monotone_chain(points: &[IntVector]) -> Vec<Vec<i64>> {
    let mut pts: Vec<Vec<i64>> = points.iter().map(IntVector::to_i64s).collect();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut hull: Vec<Vec<i64>> = Vec::new();
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &Vec<i64>>> =
            if pass == 0 { Box::new(pts.iter()) } else { Box::new(pts.iter().rev()) };
        for p in iter {
            while hull.len() >= start + 2 && cross(&hull[hull.len() - 2], &hull[hull.len() - 1], p) <= 0 {
                hull.pop();
            }
            hull.push(p.clone());
        }
        hull.pop();
    }
    hull
}

#[test]
fn planar_hulls_match_monotone_chain() {
    let mut g = rng(103);
    for _ in 0..300 {
        let count = g.random_range(1..=12);
        let pts = random_points(&mut g, 2, count, 6);
        let h = convex_hull_int::<Rat>(&pts).unwrap();
        let mut chain = monotone_chain(&pts);
        if h.dim < 2 {
            continue;
        }
        let area2: i64 = (0..chain.len())
            .map(|i| {
                let (a, b) = (&chain[i], &chain[(i + 1) % chain.len()]);
                a[0] * b[1] - a[1] * b[0]
            })
            .sum();
        assert_eq!(h.volume, r(area2.abs()));
        chain.sort();
        let verts: Vec<Vec<i64>> = h
            .vertices
            .iter()
            .map(|v| v.iter().map(|c| c.to_integer().try_into().unwrap()).collect())
            .collect();
        assert_eq!(verts, chain);
        assert_eq!(h.facets.len(), chain.len());
    }
}

#[test]
fn hull_facets_describe_the_hull() {
    let mut g = rng(107);
    for _ in 0..80 {
        let dim = g.random_range(2..=4);
        let count = g.random_range(dim + 1..=dim + 8);
        let pts = random_points(&mut g, dim, count, 4);
        let h = convex_hull_int::<Rat>(&pts).unwrap();
        if !h.is_full_dimensional() {
            continue;
        }
        for f in &h.facets {
            let normal: Vec<Rat> = f.normal.to_scalars();
            assert!(f.normal.gcd().is_one());
            for p in &pts {
                let v: Rat = p.to_scalars::<Rat>().iter().zip(&normal).map(|(a, b)| a * b).sum();
                assert!(v >= f.offset);
            }
            for &k in &f.vertices {
                let v: Rat = h.vertices[k].iter().zip(&normal).map(|(a, b)| a * b).sum();
                assert_eq!(v, f.offset);
            }
            assert!(f.vertices.len() >= dim);
        }
        // Idempotent: the hull of the vertices is the same hull.
        let again = convex_hull(&h.vertices).unwrap();
        assert_eq!(again, h);

        // Facet membership agrees with an LP on convex combinations.
        for _ in 0..10 {
            let q: Vec<i64> = (0..dim).map(|_| g.random_range(-1..=5)).collect();
            let inside_facets = h.facets.iter().all(|f| {
                let v: BigInt = f.normal.coords().iter().zip(&q).map(|(a, b)| a * b).sum();
                Rat::from_integer(v) >= f.offset
            });
            let m = h.vertices.len();
            let mut cs: Vec<Constraint<Rat>> = (0..dim)
                .map(|i| Constraint::eq(h.vertices.iter().map(|v| v[i].clone()).collect(), r(q[i])))
                .collect();
            cs.push(Constraint::eq(vec![r(1); m], r(1)));
            let in_lp = relmix::exact::feasible_nonnegative(m, &cs).unwrap().is_some();
            assert_eq!(inside_facets, in_lp, "{q:?}");
        }
    }
}

#[test]
fn hull_is_order_independent_and_generic() {
    let mut g = rng(109);
    for _ in 0..40 {
        let mut pts = random_points(&mut g, 3, 9, 3);
        let a = convex_hull_int::<Rat>(&pts).unwrap();
        pts.reverse();
        pts.push(pts[0].clone());
        let b = convex_hull_int::<Rat>(&pts).unwrap();
        assert_eq!(a, b);
        let c = convex_hull_int::<Rat64>(&pts).unwrap();
        assert_eq!(a.volume, Rat::from_integer(BigInt::from(*c.volume.numer())));
        assert_eq!(a.facets.len(), c.facets.len());
    }
}

fn maximal_minor_gcd(rows: &[IntVector]) -> BigInt {
    let n = rows[0].dim();
    (0..n)
        .map(|skip| {
            let m: Vec<Vec<Rat>> = rows
                .iter()
                .map(|v| {
                    v.coords()
                        .iter()
                        .enumerate()
                        .filter(|(j, _)| *j != skip)
                        .map(|(_, c)| Rat::from_integer(c.clone()))
                        .collect()
                })
                .collect();
            determinant(&m).to_integer()
        })
        .fold(BigInt::zero(), |acc, d| acc.gcd(&d))
}

#[test]
fn kernel_bases_are_saturated() {
    let mut g = rng(113);
    let mut tried = 0;
    while tried < 300 {
        let n = g.random_range(2..=4);
        let gamma: IntVector = (0..n).map(|_| g.random_range(-9..=9)).collect::<Vec<i64>>().into();
        if gamma.is_zero() || !gamma.gcd().is_one() {
            continue;
        }
        tried += 1;
        let basis = kernel_lattice_basis(&gamma).unwrap();
        assert_eq!(basis.len(), n - 1);
        for b in &basis {
            assert!(gamma.dot(b).is_zero());
        }
        if n == 2 {
            assert_eq!(basis[0].gcd(), BigInt::one());
        } else {
            assert_eq!(maximal_minor_gcd(&basis), BigInt::one(), "{gamma}");
        }
        let chart = KernelChart::new(&gamma).unwrap();
        let coeffs: Vec<i64> = (0..n - 1).map(|_| g.random_range(-5..=5)).collect();
        let x = basis.iter().zip(&coeffs).fold(IntVector::zero(n), |acc, (b, &c)| {
            &acc + &b.scale(&BigInt::from(c))
        });
        assert_eq!(chart.coordinates(&x), IntVector::from(coeffs));
    }
}

fn random_unimodular(g: &mut impl Rng, n: usize) -> Vec<Vec<i64>> {
    let mut m: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    for _ in 0..6 {
        let (i, j) = (g.random_range(0..n), g.random_range(0..n));
        if i == j {
            continue;
        }
        let c = g.random_range(-2..=2);
        for k in 0..n {
            m[i][k] += c * m[j][k];
        }
    }
    if g.random_bool(0.5) {
        m.swap(0, n - 1);
    }
    m
}

#[test]
fn simplex_volume_is_unimodular_invariant() {
    let mut g = rng(127);
    for _ in 0..200 {
        let n = g.random_range(1..=4);
        let verts: Vec<Vec<i64>> = (0..=n).map(|_| (0..n).map(|_| g.random_range(-4..=4)).collect()).collect();
        let u = random_unimodular(&mut g, n);
        let shift: Vec<i64> = (0..n).map(|_| g.random_range(-3..=3)).collect();
        let mapped: Vec<Vec<i64>> = verts
            .iter()
            .map(|v| (0..n).map(|i| (0..n).map(|j| u[i][j] * v[j]).sum::<i64>() + shift[i]).collect())
            .collect();
        let to_rat = |vs: &[Vec<i64>]| -> Vec<Vec<Rat>> { vs.iter().map(|v| v.iter().map(|&c| r(c)).collect()).collect() };
        let a = simplex_volume(&to_rat(&verts)).unwrap();
        let b = simplex_volume(&to_rat(&mapped)).unwrap();
        assert_eq!(a, b);
        assert!(!a.is_negative());
        let ints: Vec<IntVector> = verts.iter().map(|v| IntVector::from(&v[..])).collect();
        let h = convex_hull_int::<Rat>(&ints).unwrap();
        if h.is_full_dimensional() {
            assert_eq!(h.volume, a);
        } else {
            assert!(a.is_zero());
        }
    }
}
