//! Exact Gaussian-integer solutions of the fifth-power equation
//! `w^5 + x^5 = y^5 + z^5`.
//!
//! - [`gaussint`]: arbitrary-precision Gaussian integers.
//! - [`pell`]: Pell numbers and the family `(P+1, P-1, P+Qi, P-Qi)`.
//! - [`identities`]: the quadruple identity and the Pythagorean-triple family.
//! - [`search`]: exhaustive, sharded, deterministic box search.
//! - [`cli`]: the `taxicab5` command-line front end.

pub mod cli;
pub mod error;
pub mod gaussint;
pub mod identities;
pub mod pell;
pub mod search;
pub mod solution;

pub use error::{GaussIntError, SearchError, SolutionError};
pub use gaussint::GaussInt;
pub use identities::{enumerate_primitive_triples, lemma_lhs, lemma_rhs, th2_solution, PythTriple};
pub use pell::{half_companion, pell, th1_family, th1_gap, th1_gap_closed_form, PellState};
pub use search::{
    canonicalize_solution, run_search, run_search_report, solution_orbit, SearchConfig,
    SearchReport, SolutionClass,
};
pub use solution::{verify_solution, Quadruple};
