//! Pell numbers and the integer/Gaussian solution family built on them.
//!
//! For `k ≥ 1` let `P = pell(2k)` and `Q = pell(2k) + pell(2k - 1)`, so that
//! `Q² - 2P² = 1`. Then
//!
//! ```text
//! (P + 1)^5 + (P - 1)^5 = (P + Q·i)^5 + (P - Q·i)^5
//! ```
//!
//! The difference of the two sides, as a function of free integers
//! `(a, b, c)`, is [`th1_gap`]; it expands to
//! `10·a·(b² + c²)·(2a² + b² - c²)`, which vanishes on `c² - 2a² = b²`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::gaussint::GaussInt;
use crate::solution::Quadruple;

/// Consecutive Pell numbers `(P_{n-1}, P_n)` at index `n`.
///
/// At `n = 0` the predecessor is taken as `P_{-1} = 1`, which keeps the
/// recurrence `P_{n+1} = 2P_n + P_{n-1}` valid from the start.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PellState {
    pub index: u64,
    pub prev: BigInt,
    pub curr: BigInt,
}

impl PellState {
    pub fn start() -> Self {
        PellState {
            index: 0,
            prev: BigInt::one(),
            curr: BigInt::zero(),
        }
    }

    pub fn advance(&mut self) {
        let next = &self.curr * 2u32 + &self.prev;
        self.prev = std::mem::replace(&mut self.curr, next);
        self.index += 1;
    }
}

impl Default for PellState {
    fn default() -> Self {
        PellState::start()
    }
}

/// Infinite iterator over `P_0, P_1, P_2, ...`.
#[derive(Clone, Debug, Default)]
pub struct PellNumbers {
    state: PellState,
}

impl Iterator for PellNumbers {
    type Item = BigInt;

    fn next(&mut self) -> Option<BigInt> {
        let out = self.state.curr.clone();
        self.state.advance();
        Some(out)
    }
}

pub fn pell_numbers() -> PellNumbers {
    PellNumbers::default()
}

/// State holding `(P_{n-1}, P_n)`, computed iteratively.
pub fn pell_state(n: u64) -> PellState {
    let mut state = PellState::start();
    while state.index < n {
        state.advance();
    }
    state
}

/// The `n`-th Pell number with `P_0 = 0`, `P_1 = 1`.
pub fn pell(n: u64) -> BigInt {
    pell_state(n).curr
}

/// `Q_k = P_{2k} + P_{2k-1}`, the companion of `P_{2k}` in `Q² - 2P² = 1`.
///
/// Panics if `k == 0`.
pub fn half_companion(k: u64) -> BigInt {
    assert!(k >= 1, "half_companion is defined for k >= 1");
    let state = pell_state(2 * k);
    state.curr + state.prev
}

/// The `k`-th member (`k ≥ 1`) of the Pell solution family:
/// `(P+1, P-1, P+Qi, P-Qi)` with `P = P_{2k}`, `Q = Q_k`, exponent 5.
///
/// Panics if `k == 0`.
pub fn th1_family(k: u64) -> Quadruple {
    assert!(k >= 1, "the Pell family is indexed from k = 1");
    let state = pell_state(2 * k);
    let q = &state.curr + &state.prev;
    let p = state.curr;
    let y = GaussInt::new(p.clone(), q);
    let z = y.conj();
    Quadruple::fifth(GaussInt::real(&p + 1), GaussInt::real(&p - 1), y, z)
}

/// `(a+b)^5 + (a-b)^5 - (a+ci)^5 - (a-ci)^5`, evaluated with Gaussian arithmetic.
pub fn th1_gap(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>) -> GaussInt {
    let (a, b, c) = (a.into(), b.into(), c.into());
    let plus = GaussInt::real(&a + &b);
    let minus = GaussInt::real(&a - &b);
    let up = GaussInt::new(a.clone(), c.clone());
    let down = up.conj();
    plus.pow(5) + minus.pow(5) - up.pow(5) - down.pow(5)
}

/// Closed form of [`th1_gap`]: `10·a·(b² + c²)·(2a² + b² - c²)`.
pub fn th1_gap_closed_form(
    a: impl Into<BigInt>,
    b: impl Into<BigInt>,
    c: impl Into<BigInt>,
) -> BigInt {
    let (a, b, c) = (a.into(), b.into(), c.into());
    let (a2, b2, c2) = (&a * &a, &b * &b, &c * &c);
    BigInt::from(10) * &a * (&b2 + &c2) * (a2 * 2 + b2 - c2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solution::verify_solution;

    fn g(re: i64, im: i64) -> GaussInt {
        GaussInt::new(re, im)
    }

    #[test]
    fn pell_examples() {
        assert_eq!(pell(0), BigInt::from(0));
        assert_eq!(pell(6), BigInt::from(70));
        assert_eq!(pell(10), BigInt::from(2378));
        let first: Vec<BigInt> = pell_numbers().take(11).collect();
        let expected: Vec<BigInt> = [0, 1, 2, 5, 12, 29, 70, 169, 408, 985, 2378]
            .into_iter()
            .map(BigInt::from)
            .collect();
        assert_eq!(first, expected);
    }

    #[test]
    fn pell_recurrence_to_200() {
        let seq: Vec<BigInt> = pell_numbers().take(201).collect();
        for n in 2..=200 {
            assert_eq!(seq[n], &seq[n - 1] * 2 + &seq[n - 2], "n = {n}");
            assert!(seq[n] > seq[n - 1]);
            assert_eq!(pell(n as u64), seq[n]);
        }
        let s = pell_state(200);
        assert_eq!((s.index, &s.prev, &s.curr), (200, &seq[199], &seq[200]));
    }

    #[test]
    fn half_companion_examples() {
        assert_eq!(half_companion(1), BigInt::from(3));
        assert_eq!(half_companion(2), BigInt::from(17));
        assert_eq!(half_companion(5), BigInt::from(3363));
    }

    #[test]
    fn half_companion_solves_pell_equation() {
        for k in 1..=100 {
            let q = half_companion(k);
            let p = pell(2 * k);
            assert_eq!(
                &q * &q - BigInt::from(2) * &p * &p,
                BigInt::one(),
                "k = {k}"
            );
        }
    }

    #[test]
    #[should_panic]
    fn half_companion_rejects_zero() {
        half_companion(0);
    }

    #[test]
    fn family_examples() {
        assert_eq!(
            th1_family(1),
            Quadruple::fifth(g(3, 0), g(1, 0), g(2, 3), g(2, -3))
        );
        assert_eq!(
            th1_family(4),
            Quadruple::fifth(g(409, 0), g(407, 0), g(408, 577), g(408, -577))
        );
        assert_eq!(
            th1_family(5),
            Quadruple::fifth(g(2379, 0), g(2377, 0), g(2378, 3363), g(2378, -3363))
        );
    }

    #[test]
    fn family_verifies_with_real_sums() {
        for k in 1..=50 {
            let q = th1_family(k);
            assert!(verify_solution(&q), "k = {k}");
            assert!(q.right_sum().is_real(), "k = {k}");
        }
    }

    #[test]
    fn odd_index_pell_numbers_do_not_work() {
        // P_3 = 5 with companion 7: 6^5 + 4^5 = 8800 but 2·Re((5+7i)^5) = 3800.
        let q = Quadruple::fifth(g(6, 0), g(4, 0), g(5, 7), g(5, -7));
        assert_eq!(q.left_sum(), g(8800, 0));
        assert_eq!(q.right_sum(), g(3800, 0));
        assert!(!verify_solution(&q));
    }

    #[test]
    fn gap_examples() {
        assert_eq!(th1_gap(2, 1, 3), GaussInt::zero());
        for (b, c) in [(0, 0), (3, -4), (-7, 11)] {
            assert_eq!(th1_gap(0, b, c), GaussInt::zero());
        }
        assert_eq!(th1_gap(5, 1, 7), g(5000, 0));
        assert_eq!(th1_gap_closed_form(5, 1, 7), BigInt::from(5000));
    }

    #[test]
    fn gap_matches_closed_form_on_cube() {
        for a in -12i64..=12 {
            for b in -12i64..=12 {
                for c in -12i64..=12 {
                    let gap = th1_gap(a, b, c);
                    assert_eq!(
                        gap,
                        GaussInt::real(th1_gap_closed_form(a, b, c)),
                        "{a} {b} {c}"
                    );
                }
            }
        }
    }
}
