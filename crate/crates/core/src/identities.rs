//! The quadruple identity behind the Pythagorean solution family.
//!
//! For all integers `a, b, c`:
//!
//! ```text
//! (a+b+ci)^5 + (a-b-ci)^5 - (a-b+ci)^5 - (a+b-ci)^5 = 80·a·b·c·(a² + b² - c²)·i
//! ```
//!
//! so every Pythagorean triple gives
//! `(a+b+ci)^5 + (a-b-ci)^5 = (a+b-ci)^5 + (a-b+ci)^5`.

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::SolutionError;
use crate::gaussint::GaussInt;
use crate::solution::Quadruple;

/// Positive integers with `a² + b² = c²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PythTriple {
    pub a: u64,
    pub b: u64,
    pub c: u64,
}

impl PythTriple {
    pub fn new(a: u64, b: u64, c: u64) -> Result<Self, SolutionError> {
        let t = PythTriple { a, b, c };
        if t.is_pythagorean() {
            Ok(t)
        } else {
            Err(SolutionError::NotPythagorean { a, b, c })
        }
    }

    pub fn is_pythagorean(&self) -> bool {
        let (a, b, c) = (self.a as u128, self.b as u128, self.c as u128);
        a > 0 && b > 0 && a * a + b * b == c * c
    }

    pub fn is_primitive(&self) -> bool {
        self.a.gcd(&self.b) == 1
    }
}

/// `(a+b+ci)^5 + (a-b-ci)^5 - (a-b+ci)^5 - (a+b-ci)^5`.
pub fn lemma_lhs(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>) -> GaussInt {
    let (a, b, c) = (a.into(), b.into(), c.into());
    let sum = GaussInt::new(&a + &b, c.clone());
    let diff = GaussInt::new(&a - &b, c);
    sum.pow(5) + diff.conj().pow(5) - diff.pow(5) - sum.conj().pow(5)
}

/// `80·a·b·c·(a² + b² - c²)·i`, the closed form of [`lemma_lhs`].
pub fn lemma_rhs(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>) -> GaussInt {
    let (a, b, c) = (a.into(), b.into(), c.into());
    let defect = &a * &a + &b * &b - &c * &c;
    GaussInt::new(0, BigInt::from(80) * a * b * c * defect)
}

/// All primitive triples with hypotenuse at most `max_c`, larger leg first,
/// sorted by `(c, a)`.
pub fn enumerate_primitive_triples(max_c: u64) -> Vec<PythTriple> {
    let mut out = Vec::new();
    let max_c = max_c as u128;
    let mut m: u128 = 2;
    while m * m < max_c {
        for n in 1..m {
            let c = m * m + n * n;
            if c > max_c {
                break;
            }
            if (m - n) % 2 == 0 || m.gcd(&n) != 1 {
                continue;
            }
            let odd = (m * m - n * n) as u64;
            let even = (2 * m * n) as u64;
            out.push(PythTriple {
                a: odd.max(even),
                b: odd.min(even),
                c: c as u64,
            });
        }
        m += 1;
    }
    out.sort_by_key(|t| (t.c, t.a));
    out
}

/// `(a+b+ci, a-b-ci, a+b-ci, a-b+ci)` at exponent 5.
pub fn th2_solution(t: &PythTriple) -> Result<Quadruple, SolutionError> {
    if !t.is_pythagorean() {
        return Err(SolutionError::NotPythagorean {
            a: t.a,
            b: t.b,
            c: t.c,
        });
    }
    let (a, b, c) = (BigInt::from(t.a), BigInt::from(t.b), BigInt::from(t.c));
    let sum = GaussInt::new(&a + &b, c.clone());
    let diff = GaussInt::new(&a - &b, c);
    Ok(Quadruple::fifth(sum.clone(), diff.conj(), sum.conj(), diff))
}
