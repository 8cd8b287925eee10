//! Exhaustive search for `w^e + x^e = y^e + z^e` inside the box
//! `|re| ≤ B, |im| ≤ B`.
//!
//! Every unordered pair `{p, q}` of box points (with `p ≤ q`) is keyed by the
//! exact value `p^e + q^e`. Pairs sharing a key collide, and each collision of
//! two distinct pairs is a solution. Solutions are reported once per orbit
//! under the symmetry group described at [`solution_orbit`].
//!
//! The outer loop over `p` is split round-robin across `shards` threads. Each
//! shard emits `(key, p, q)` triples; the merged list is sorted, so grouping
//! and everything downstream is independent of the shard count.

use std::collections::BTreeSet;
use std::thread;

use serde::Serialize;

use crate::error::{SearchError, SolutionError};
use crate::gaussint::GaussInt;
use crate::solution::{verify_solution, Quadruple};

/// Largest accepted box bound; the pair list is quadratic in the box area,
/// so anything near this is already far beyond available memory.
pub const MAX_BOUND: u64 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub bound: u64,
    pub exponent: u32,
    pub shards: usize,
    pub include_zero: bool,
}

impl SearchConfig {
    pub fn new(bound: u64) -> Self {
        SearchConfig {
            bound,
            ..SearchConfig::default()
        }
    }

    pub fn validate(&self) -> Result<(), SearchError> {
        if self.bound == 0 {
            return Err(SearchError::ZeroBound);
        }
        if self.bound > MAX_BOUND {
            return Err(SearchError::BoundTooLarge(self.bound));
        }
        if self.shards == 0 {
            return Err(SearchError::ZeroShards);
        }
        if self.exponent == 0 {
            return Err(SearchError::ZeroExponent);
        }
        Ok(())
    }
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            bound: 1,
            exponent: 5,
            shards: 1,
            include_zero: false,
        }
    }
}

/// One orbit of solutions, represented by its minimal element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionClass {
    pub representative: Quadruple,
    /// Number of distinct quadruples in the orbit.
    pub orbit_size: usize,
    /// `w^e + x^e` of the representative.
    pub sum: GaussInt,
}

/// JSON-lines record: `{"w":…,"x":…,"y":…,"z":…,"sum":…,"orbit_size":N}`.
#[derive(Serialize)]
pub struct SolutionRecord<'a> {
    pub w: &'a GaussInt,
    pub x: &'a GaussInt,
    pub y: &'a GaussInt,
    pub z: &'a GaussInt,
    pub sum: &'a GaussInt,
    pub orbit_size: usize,
}

impl SolutionClass {
    pub fn record(&self) -> SolutionRecord<'_> {
        let q = &self.representative;
        SolutionRecord {
            w: &q.w,
            x: &q.x,
            y: &q.y,
            z: &q.z,
            sum: &self.sum,
            orbit_size: self.orbit_size,
        }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(&self.record()).expect("solution records always serialize")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchReport {
    pub classes: Vec<SolutionClass>,
    /// Number of box points taking part.
    pub points: usize,
    pub pairs_enumerated: u64,
    /// Distinct sums hit by two or more pairs.
    pub collision_groups: u64,
}

/// All images of `q` under the 64 combinations of: swapping `w ↔ x`,
/// swapping `y ↔ z`, exchanging the two sides, conjugating every entry, and
/// multiplying every entry by `i^k`. Returned sorted and deduplicated.
///
/// Each of these maps solutions to solutions: a global unit `u` scales both
/// sides by `u^e`, and conjugation commutes with powers.
pub fn solution_orbit(q: &Quadruple) -> Vec<Quadruple> {
    let mut images = BTreeSet::new();
    for conj in [false, true] {
        for k in 0..4 {
            let f = |z: &GaussInt| {
                if conj {
                    z.conj().mul_unit(k)
                } else {
                    z.mul_unit(k)
                }
            };
            let [w, x, y, z] = q.entries().map(f);
            for (l, r) in [((&w, &x), (&y, &z)), ((&y, &z), (&w, &x))] {
                for (a, b) in [(l.0, l.1), (l.1, l.0)] {
                    for (c, d) in [(r.0, r.1), (r.1, r.0)] {
                        images.insert(Quadruple::new(
                            a.clone(),
                            b.clone(),
                            c.clone(),
                            d.clone(),
                            q.exponent,
                        ));
                    }
                }
            }
        }
    }
    images.into_iter().collect()
}

/// The minimal element of `q`'s orbit (see [`solution_orbit`]), comparing
/// quadruples lexicographically on `(w.re, w.im, x.re, x.im, …, z.im)`.
pub fn canonicalize_solution(q: &Quadruple) -> Result<Quadruple, SolutionError> {
    if !verify_solution(q) {
        return Err(SolutionError::NotASolution);
    }
    Ok(solution_orbit(q)
        .into_iter()
        .next()
        .expect("an orbit contains at least its generator"))
}

pub fn run_search(cfg: &SearchConfig) -> Result<Vec<SolutionClass>, SearchError> {
    run_search_report(cfg).map(|r| r.classes)
}

pub fn run_search_report(cfg: &SearchConfig) -> Result<SearchReport, SearchError> {
    cfg.validate()?;
    let points = box_points(cfg.bound as i64, cfg.include_zero);
    let exact_small = points
        .iter()
        .map(|&p| small_pow(p, cfg.exponent))
        .collect::<Option<Vec<_>>>();

    let (found, collision_groups) = match exact_small {
        Some(powers) => {
            let keyed = collect_pairs(&powers, cfg.shards, |a, b| (a.0 + b.0, a.1 + b.1));
            extract_collisions(&keyed, &points)
        }
        None => {
            let powers: Vec<GaussInt> = points
                .iter()
                .map(|&(re, im)| GaussInt::new(re, im).pow(cfg.exponent))
                .collect();
            let keyed = collect_pairs(&powers, cfg.shards, |a, b| a + b);
            extract_collisions(&keyed, &points)
        }
    };

    let to_gauss = |(re, im): Point| GaussInt::new(re, im);
    let mut classes: Vec<SolutionClass> = found
        .into_iter()
        .map(|(canon, orbit_size)| {
            let representative = Quadruple::new(
                to_gauss(canon[0]),
                to_gauss(canon[1]),
                to_gauss(canon[2]),
                to_gauss(canon[3]),
                cfg.exponent,
            );
            let sum = representative.left_sum();
            SolutionClass {
                representative,
                orbit_size,
                sum,
            }
        })
        .collect();
    classes.sort_by_cached_key(|c| (c.sum.norm(), c.representative.clone()));

    let n = points.len() as u64;
    Ok(SearchReport {
        classes,
        points: points.len(),
        pairs_enumerated: n * (n + 1) / 2,
        collision_groups,
    })
}

type Point = (i64, i64);
type SmallQuad = [Point; 4];

/// Box points in ascending `(re, im)` order.
fn box_points(bound: i64, include_zero: bool) -> Vec<Point> {
    let mut pts = Vec::with_capacity(((2 * bound + 1) * (2 * bound + 1)) as usize);
    for re in -bound..=bound {
        for im in -bound..=bound {
            if include_zero || re != 0 || im != 0 {
                pts.push((re, im));
            }
        }
    }
    pts
}

/// `p^e` in `i128` when every intermediate fits and the result leaves room
/// for one addition; `None` sends the whole search down the `BigInt` path.
fn small_pow((re, im): Point, exp: u32) -> Option<(i128, i128)> {
    const LIMIT: i128 = 1 << 125;
    let (re, im) = (re as i128, im as i128);
    let mut acc = (1i128, 0i128);
    for _ in 0..exp {
        let r = acc.0.checked_mul(re)?.checked_sub(acc.1.checked_mul(im)?)?;
        let i = acc.0.checked_mul(im)?.checked_add(acc.1.checked_mul(re)?)?;
        acc = (r, i);
    }
    (acc.0.abs() < LIMIT && acc.1.abs() < LIMIT).then_some(acc)
}

/// Every `(p^e + q^e, i, j)` with `i ≤ j`, sorted. Shard `s` handles the
/// outer indices `i ≡ s (mod shards)`.
fn collect_pairs<K, F>(powers: &[K], shards: usize, add: F) -> Vec<(K, u32, u32)>
where
    K: Ord + Send + Sync,
    F: Fn(&K, &K) -> K + Sync,
{
    let n = powers.len();
    let shard = |s: usize| {
        let mut out = Vec::new();
        for i in (s..n).step_by(shards) {
            for j in i..n {
                out.push((add(&powers[i], &powers[j]), i as u32, j as u32));
            }
        }
        out
    };
    let mut keyed: Vec<(K, u32, u32)> = if shards == 1 {
        shard(0)
    } else {
        thread::scope(|scope| {
            let handles: Vec<_> = (0..shards).map(|s| scope.spawn(move || shard(s))).collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("search shard panicked"))
                .collect()
        })
    };
    // Entries are pairwise distinct, so the unstable sort is deterministic.
    keyed.sort_unstable();
    keyed
}

/// Canonical classes with orbit sizes, plus the number of colliding keys.
fn extract_collisions<K: Eq>(
    keyed: &[(K, u32, u32)],
    points: &[Point],
) -> (BTreeSet<(SmallQuad, usize)>, u64) {
    let mut classes = BTreeSet::new();
    let mut groups = 0;
    for run in keyed.chunk_by(|a, b| a.0 == b.0) {
        if run.len() < 2 {
            continue;
        }
        groups += 1;
        for (n, left) in run.iter().enumerate() {
            for right in &run[n + 1..] {
                let quad = [
                    points[left.1 as usize],
                    points[left.2 as usize],
                    points[right.1 as usize],
                    points[right.2 as usize],
                ];
                classes.insert(small_orbit_min(&quad));
            }
        }
    }
    (classes, groups)
}

fn small_unit((re, im): Point, k: u32) -> Point {
    match k {
        0 => (re, im),
        1 => (-im, re),
        2 => (-re, -im),
        _ => (im, -re),
    }
}

/// Minimum and size of the orbit of a box quadruple. The box is closed under
/// every symmetry, so this stays in `i64`.
fn small_orbit_min(q: &SmallQuad) -> (SmallQuad, usize) {
    let mut images = Vec::with_capacity(64);
    for conj in [false, true] {
        for k in 0..4 {
            let [w, x, y, z] = q.map(|(re, im)| small_unit((re, if conj { -im } else { im }), k));
            for (l, r) in [((w, x), (y, z)), ((y, z), (w, x))] {
                for (a, b) in [(l.0, l.1), (l.1, l.0)] {
                    for (c, d) in [(r.0, r.1), (r.1, r.0)] {
                        images.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    images.sort_unstable();
    images.dedup();
    (images[0], images.len())
}
