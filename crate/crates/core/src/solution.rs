//! Solution candidates for `w^e + x^e = y^e + z^e` and their verification.

use serde::{Deserialize, Serialize};

use crate::gaussint::GaussInt;

/// An ordered candidate `(w, x, y, z)` for `w^e + x^e = y^e + z^e`.
///
/// Constructing one asserts nothing; [`verify_solution`] decides validity.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Quadruple {
    pub w: GaussInt,
    pub x: GaussInt,
    pub y: GaussInt,
    pub z: GaussInt,
    pub exponent: u32,
}

impl Quadruple {
    pub fn new(w: GaussInt, x: GaussInt, y: GaussInt, z: GaussInt, exponent: u32) -> Self {
        Quadruple {
            w,
            x,
            y,
            z,
            exponent,
        }
    }

    pub fn fifth(w: GaussInt, x: GaussInt, y: GaussInt, z: GaussInt) -> Self {
        Quadruple::new(w, x, y, z, 5)
    }

    pub fn left_sum(&self) -> GaussInt {
        self.w.pow(self.exponent) + self.x.pow(self.exponent)
    }

    pub fn right_sum(&self) -> GaussInt {
        self.y.pow(self.exponent) + self.z.pow(self.exponent)
    }

    pub fn entries(&self) -> [&GaussInt; 4] {
        [&self.w, &self.x, &self.y, &self.z]
    }

    /// True when `{w, x} = {y, z}` as unordered pairs.
    pub fn is_trivial(&self) -> bool {
        (self.w == self.y && self.x == self.z) || (self.w == self.z && self.x == self.y)
    }
}

/// Exact check of `w^e + x^e = y^e + z^e`.
pub fn verify_solution(q: &Quadruple) -> bool {
    q.left_sum() == q.right_sum()
}
