//! Classification of tuples of small relative mixed volume: the volume-one
//! matching certificate, minimality (by inclusion) and exhaustive enumeration
//! of minimal tuples.
//!
//! "Minimal" follows the established usage: a tuple is minimal with volume
//! `V` when adjoining any lattice point of `C ∖ B_i` to any member drops the
//! volume. Such tuples are maximal as sets.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;

use crate::orthant::OrthantPolyhedron;
use crate::relmv::{rmv, Method, PolyTuple};
use crate::{Error, IntVector, Result};

/// Default bound on the raw candidate count of [`enumerate_minimal`].
pub const DEFAULT_SEARCH_CAP: u128 = 1_000_000;

/// Entry `(i, j)` records whether `e_i ∈ B_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    entries: Vec<Vec<bool>>,
}

impl IncidenceMatrix {
    pub fn of(tuple: &PolyTuple) -> Self {
        let n = tuple.dim();
        let entries = (0..n)
            .map(|i| {
                let e = IntVector::axis(n, i, 1);
                tuple
                    .members()
                    .iter()
                    .map(|b| b.contains(&e).expect("dimension checked"))
                    .collect()
            })
            .collect();
        IncidenceMatrix { entries }
    }

    pub fn from_entries(entries: Vec<Vec<bool>>) -> Self {
        IncidenceMatrix { entries }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        self.entries[row][col]
    }
}

/// Either an assignment of unit points to members or a zero block proving
/// none exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatchingCertificate {
    /// `sigma[j] = i` with `e_i ∈ B_j`; 0-based.
    Permutation(Vec<usize>),
    /// An all-zero `rows × columns` block with `|rows| + |columns| = n + 1`.
    Obstruction { rows: Vec<usize>, columns: Vec<usize> },
}

impl MatchingCertificate {
    pub fn is_permutation(&self) -> bool {
        matches!(self, MatchingCertificate::Permutation(_))
    }
}

/// Perfect matching of columns to rows by augmenting paths, or the
/// Frobenius–König zero block when there is none.
pub fn perfect_matching(matrix: &IncidenceMatrix) -> MatchingCertificate {
    let n = matrix.size();
    let mut row_match: Vec<Option<usize>> = vec![None; n];

    fn augment(
        m: &IncidenceMatrix,
        col: usize,
        seen: &mut [bool],
        row_match: &mut [Option<usize>],
    ) -> bool {
        // Free rows first, so an identity matching is kept when available.
        if let Some(row) = (0..m.size()).find(|&r| m.get(r, col) && row_match[r].is_none()) {
            row_match[row] = Some(col);
            return true;
        }
        for row in 0..m.size() {
            if m.get(row, col) && !seen[row] {
                seen[row] = true;
                if row_match[row].is_none_or(|c| augment(m, c, seen, row_match)) {
                    row_match[row] = Some(col);
                    return true;
                }
            }
        }
        false
    }

    let mut unmatched = None;
    for col in 0..n {
        let mut seen = vec![false; n];
        if !augment(matrix, col, &mut seen, &mut row_match) && unmatched.is_none() {
            unmatched = Some(col);
        }
    }

    match unmatched {
        None => {
            let mut sigma = vec![0; n];
            for (row, col) in row_match.iter().enumerate() {
                sigma[col.expect("perfect matching")] = row;
            }
            MatchingCertificate::Permutation(sigma)
        }
        Some(start) => {
            // Columns reachable from `start` by alternating paths have too
            // few neighbouring rows; the remaining rows are zero on them.
            let mut cols = BTreeSet::from([start]);
            let mut rows = BTreeSet::new();
            let mut stack = vec![start];
            while let Some(col) = stack.pop() {
                for row in 0..n {
                    if matrix.get(row, col) && rows.insert(row) {
                        let next = row_match[row].expect("no augmenting path exists");
                        if cols.insert(next) {
                            stack.push(next);
                        }
                    }
                }
            }
            MatchingCertificate::Obstruction {
                rows: (0..n).filter(|r| !rows.contains(r)).collect(),
                columns: cols.into_iter().collect(),
            }
        }
    }
}

pub fn volume_one_certificate(tuple: &PolyTuple) -> MatchingCertificate {
    perfect_matching(&IncidenceMatrix::of(tuple))
}

/// Checks that the volume is 1 exactly when some ordering puts `e_m` in
/// `B_m`; returns whether the volume is 1.
pub fn theorem_v1_check(tuple: &PolyTuple) -> Result<bool> {
    let unit = rmv(tuple, Method::Both)?.is_one();
    let matched = volume_one_certificate(tuple).is_permutation();
    if unit != matched {
        return Err(Error::TheoremViolation(format!(
            "{tuple}: volume one {unit}, perfect matching {matched}"
        )));
    }
    Ok(unit)
}

/// Memoized relative mixed volume keyed by the member multiset.
#[derive(Debug, Default)]
pub struct RmvCache {
    map: Mutex<HashMap<Vec<OrthantPolyhedron>, BigInt>>,
}

impl RmvCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rmv(&self, tuple: &PolyTuple) -> Result<BigInt> {
        let mut key = tuple.members().to_vec();
        key.sort();
        if let Some(v) = self.map.lock().expect("poisoned").get(&key) {
            return Ok(v.clone());
        }
        let v = rmv(tuple, Method::Both)?;
        self.map.lock().expect("poisoned").insert(key, v.clone());
        Ok(v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalityVerdict {
    pub minimal: bool,
    /// `(member index, point)` whose adjunction keeps the volume.
    pub witness: Option<(usize, IntVector)>,
}

pub fn is_minimal(tuple: &PolyTuple, volume: &BigInt) -> Result<MinimalityVerdict> {
    is_minimal_cached(tuple, volume, &RmvCache::new())
}

/// Minimality test. First every `V·e_j` must lie in every member (adjoining a
/// missing one never changes the volume, which is re-verified here); then
/// every lattice point of `C ∖ B_i` below the hyperplane `Σx = V` is tried.
pub fn is_minimal_cached(
    tuple: &PolyTuple,
    volume: &BigInt,
    cache: &RmvCache,
) -> Result<MinimalityVerdict> {
    let found = cache.rmv(tuple)?;
    if found != *volume {
        return Err(Error::VolumeMismatch {
            expected: volume.clone(),
            found,
        });
    }
    let n = tuple.dim();
    for (i, b) in tuple.members().iter().enumerate() {
        for j in 0..n {
            let corner = IntVector::axis(n, j, volume.clone());
            if !b.contains(&corner)? {
                let grown = tuple.with_member(i, b.extend(&corner)?)?;
                let after = cache.rmv(&grown)?;
                if after != *volume {
                    return Err(Error::TheoremViolation(format!(
                        "{tuple}: adjoining {corner} to member {} changed the volume to {after}",
                        i + 1
                    )));
                }
                return Ok(MinimalityVerdict {
                    minimal: false,
                    witness: Some((i, corner)),
                });
            }
        }
    }
    let below = volume - BigInt::one();
    let mut deltas = vec![IntVector::zero(n)];
    deltas.extend(lattice_points(n, below.to_i64().expect("volume fits i64")));
    for (i, b) in tuple.members().iter().enumerate() {
        for delta in &deltas {
            if b.contains(delta)? {
                continue;
            }
            let grown = tuple.with_member(i, b.extend(delta)?)?;
            if cache.rmv(&grown)? >= *volume {
                return Ok(MinimalityVerdict {
                    minimal: false,
                    witness: Some((i, delta.clone())),
                });
            }
        }
    }
    Ok(MinimalityVerdict {
        minimal: true,
        witness: None,
    })
}

/// `{p ∈ Z^n_{≥0} ∖ {0} : Σp ≤ bound}`, lexicographically sorted.
pub fn lattice_points(n: usize, bound: i64) -> Vec<IntVector> {
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
    let mut out = Vec::new();
    if bound >= 0 {
        rec(0, bound, &mut vec![0; n], &mut out);
    }
    out.sort();
    out
}

/// Every polyhedron generated by a nonempty subset of
/// [`lattice_points`]`(n, bound)` that has a generator on each axis, one per
/// subset (duplicates as polyhedra are kept).
pub fn subset_family(n: usize, bound: i64) -> Vec<OrthantPolyhedron> {
    let points = lattice_points(n, bound);
    assert!(points.len() < 24, "subset family too large");
    (1u32..1 << points.len())
        .filter_map(|mask| {
            let gens = points
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, p)| p.clone())
                .collect();
            OrthantPolyhedron::new(n, gens).ok()
        })
        .collect()
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Orbit representative under simultaneous coordinate permutations and
/// reorderings of the tuple.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct TupleClass {
    pub representative: PolyTuple,
    /// Coordinate `i` of the input moves to `coordinate_permutation[i]`.
    pub coordinate_permutation: Vec<usize>,
    /// Member `k` of the representative is member `order[k]` of the input.
    pub order: Vec<usize>,
}

pub fn canonical_form(tuple: &PolyTuple) -> TupleClass {
    let n = tuple.dim();
    permutations(n)
        .into_iter()
        .map(|perm| {
            let moved: Vec<OrthantPolyhedron> = tuple
                .members()
                .iter()
                .map(|b| b.permute_coordinates(&perm))
                .collect();
            let mut order: Vec<usize> = (0..n).collect();
            order.sort_by(|&a, &b| moved[a].cmp(&moved[b]).then(a.cmp(&b)));
            let sorted = order.iter().map(|&k| moved[k].clone()).collect();
            TupleClass {
                representative: PolyTuple::new(sorted).expect("same shape"),
                coordinate_permutation: perm,
                order,
            }
        })
        .min()
        .expect("at least the identity")
}

/// Nondecreasing index sequences of length `n` over `0..m`.
fn multisets(m: usize, n: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, m: usize, cur: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            rec(i, m, cur, n, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, m, &mut Vec::new(), n, &mut out);
    out
}

/// All minimal tuples of relative mixed volume `volume` in dimension `n`, up
/// to coordinate permutations and reordering.
///
/// Every member of a minimal tuple contains `C_{V,…,V}`, so members are
/// `conv({V·e_j} ∪ S) + C` with `S` a set of lattice points of coordinate sum
/// below `V`; the search is exhaustive over those.
pub fn enumerate_minimal(n: usize, volume: u32, cap: u128) -> Result<Vec<TupleClass>> {
    assert!(n >= 1 && volume >= 1);
    let points = lattice_points(n, i64::from(volume) - 1);
    let per_member = 1u128.checked_shl(points.len() as u32);
    let candidates = per_member
        .and_then(|p| p.checked_pow(n as u32))
        .unwrap_or(u128::MAX);
    if candidates > cap {
        return Err(Error::SearchTooLarge { candidates, cap });
    }
    let corners: Vec<IntVector> = (0..n).map(|j| IntVector::axis(n, j, volume)).collect();
    let members: BTreeSet<OrthantPolyhedron> = (0u64..1 << points.len())
        .map(|mask| {
            let mut gens = corners.clone();
            gens.extend(
                points
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, p)| p.clone()),
            );
            OrthantPolyhedron::new(n, gens).expect("corners on every axis")
        })
        .collect();
    let members: Vec<OrthantPolyhedron> = members.into_iter().collect();
    let target = BigInt::from(volume);
    let cache = RmvCache::new();

    let found: Vec<TupleClass> = multisets(members.len(), n)
        .into_par_iter()
        .map(|idx| -> Result<Option<TupleClass>> {
            let tuple = PolyTuple::new(idx.iter().map(|&i| members[i].clone()).collect())?;
            if cache.rmv(&tuple)? != target {
                return Ok(None);
            }
            if !is_minimal_cached(&tuple, &target, &cache)?.minimal {
                return Ok(None);
            }
            Ok(Some(canonical_form(&tuple)))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();

    let mut classes: BTreeMap<PolyTuple, TupleClass> = BTreeMap::new();
    for class in found {
        classes.entry(class.representative.clone()).or_insert(class);
    }
    Ok(classes.into_values().collect())
}

/// Adjoining `V·e_axis` to the first member leaves the volume `V` unchanged.
pub fn lemma3_check(tuple: &PolyTuple, axis: usize) -> Result<bool> {
    let volume = rmv(tuple, Method::Both)?;
    let corner = IntVector::axis(tuple.dim(), axis, volume.clone());
    let grown = tuple.with_member(0, tuple.members()[0].extend(&corner)?)?;
    let after = rmv(&grown, Method::Both)?;
    if after != volume {
        return Err(Error::TheoremViolation(format!(
            "{tuple}: adjoining {corner} to the first member changed the volume from {volume} to {after}"
        )));
    }
    Ok(true)
}

/// Whether every member contains `V·e_j` for every axis `j`.
pub fn contains_corner_simplex(tuple: &PolyTuple, volume: &BigInt) -> Result<bool> {
    let n = tuple.dim();
    for b in tuple.members() {
        for j in 0..n {
            if !b.contains(&IntVector::axis(n, j, volume.clone()))? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
