#![allow(dead_code)]

use std::collections::BTreeSet;

use taxicab5::{canonicalize_solution, GaussInt, Quadruple};

/// Schoolbook complex product on machine integers, independent of `GaussInt`.
pub fn cmul(a: (i128, i128), b: (i128, i128)) -> (i128, i128) {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

pub fn cpow(z: (i128, i128), e: u32) -> (i128, i128) {
    (0..e).fold((1, 0), |acc, _| cmul(acc, z))
}

/// Canonical classes of all solutions in the box, found by looping over every
/// ordered quadruple `(w, x, y, z)`.
pub fn brute_force_classes(bound: i64, include_zero: bool, exponent: u32) -> BTreeSet<Quadruple> {
    let mut pts = Vec::new();
    for re in -bound..=bound {
        for im in -bound..=bound {
            if include_zero || (re, im) != (0, 0) {
                pts.push((re, im));
            }
        }
    }
    let pw: Vec<(i64, i64)> = pts
        .iter()
        .map(|&(re, im)| {
            let (a, b) = cpow((re as i128, im as i128), exponent);
            (i64::try_from(a).unwrap(), i64::try_from(b).unwrap())
        })
        .collect();
    let n = pts.len();
    let mut hits = Vec::new();
    for w in 0..n {
        for x in 0..n {
            let s = (pw[w].0 + pw[x].0, pw[w].1 + pw[x].1);
            for y in 0..n {
                let t = (s.0 - pw[y].0, s.1 - pw[y].1);
                for (z, &pz) in pw.iter().enumerate() {
                    if pz == t && !((w == y && x == z) || (w == z && x == y)) {
                        hits.push([w, x, y, z]);
                    }
                }
            }
        }
    }
    let g = |i: usize| GaussInt::new(pts[i].0, pts[i].1);
    hits.into_iter()
        // Pair swaps and side exchange are in the orbit; one ordering suffices.
        .filter(|h| h[0] <= h[1] && h[2] <= h[3] && (h[0], h[1]) < (h[2], h[3]))
        .map(|h| {
            let q = Quadruple::new(g(h[0]), g(h[1]), g(h[2]), g(h[3]), exponent);
            canonicalize_solution(&q).expect("brute-force hit is a solution")
        })
        .collect()
}

pub fn g(re: i64, im: i64) -> GaussInt {
    GaussInt::new(re, im)
}
