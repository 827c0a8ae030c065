//! Van der Waerden numbers `w(2; t0, t1)` and their palindromic variants
//! via SAT: progression hypergraphs, CNF encodings, a DPLL solver with
//! Jeroslow-Wang branching and cube splitting, stochastic local search,
//! certificate verification and pattern statistics.

pub mod certificate;
pub mod cnf;
pub mod dpll;
pub mod error;
pub mod hypergraph;
pub mod local_search;
pub mod numbers;
pub mod oracle;

pub use certificate::PartitionCertificate;
pub use cnf::{CnfFormula, Literal};
pub use error::{Error, Result};
pub use hypergraph::Hypergraph;

/// The solver with exact fixed-point branching weights.
pub type DpllSolver = dpll::Solver<dpll::Dyadic>;
/// The solver with `f64` branching weights.
pub type DpllSolverF64 = dpll::Solver<f64>;
/// The solver with `f32` branching weights (approximate tie-breaking).
pub type DpllSolverF32 = dpll::Solver<f32>;
/// The solver with arbitrary-precision rational weights (reference).
pub type DpllSolverExact = dpll::Solver<num_rational::BigRational>;
