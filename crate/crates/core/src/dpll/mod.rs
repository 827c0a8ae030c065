//! Complete search: DPLL with unit propagation and two-sided
//! Jeroslow-Wang branching, model enumeration and counting, cube
//! splitting, and resumable checkpoints.

mod checkpoint;
mod residual;
mod solver;
mod split;
mod weight;

use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::cnf::CnfFormula;
use crate::error::Result;

pub use checkpoint::{checkpoint_load, checkpoint_save, formula_hash, Checkpoint, SearchState};
pub use residual::{choose_branch, jw_weight, residual, unit_propagate, Propagation};
pub use solver::{Limits, Solver};
pub use split::{
    count_models_per_cube, emit_cubes, parse_cubes, solve_cubes, split, split_with, Cube,
    CubeReport, CubeResult, CubeStyle,
};
pub use weight::{BranchWeight, Dyadic};

/// `assignment[v - 1]` is the value of variable `v`, `None` if unassigned.
pub type Assignment = Vec<Option<bool>>;

/// Search statistics.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveStats {
    /// Branching nodes (decisions, first and second branches).
    pub nodes: u64,
    /// Literals assigned by unit propagation.
    pub propagations: u64,
    pub max_depth: usize,
    pub wall_time: Duration,
}

/// Three-valued verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Sat,
    Unsat,
    Unknown,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Sat => "SAT",
            Verdict::Unsat => "UNSAT",
            Verdict::Unknown => "UNKNOWN",
        })
    }
}

/// Result of a (possibly budgeted) search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    /// A partial assignment satisfying every clause.
    Sat(Assignment),
    Unsat,
    /// Limits reached; the state allows resuming.
    Indeterminate(SearchState),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub outcome: Outcome,
    pub stats: SolveStats,
}

impl SolveResult {
    pub fn verdict(&self) -> Verdict {
        match self.outcome {
            Outcome::Sat(_) => Verdict::Sat,
            Outcome::Unsat => Verdict::Unsat,
            Outcome::Indeterminate(_) => Verdict::Unknown,
        }
    }

    pub fn is_sat(&self) -> bool {
        matches!(self.outcome, Outcome::Sat(_))
    }

    pub fn is_unsat(&self) -> bool {
        matches!(self.outcome, Outcome::Unsat)
    }

    pub fn witness(&self) -> Option<&Assignment> {
        match &self.outcome {
            Outcome::Sat(a) => Some(a),
            _ => None,
        }
    }
}

/// Solves `formula` with the default exact weights.
pub fn dpll(formula: &CnfFormula, max_nodes: Option<u64>) -> Result<SolveResult> {
    let mut s: Solver<Dyadic> = Solver::new(formula)?;
    Ok(s.solve(&Limits { max_nodes, ..Limits::default() }))
}

/// All satisfying total assignments, sorted.
pub fn dpll_enumerate(formula: &CnfFormula) -> Result<Vec<Vec<bool>>> {
    Solver::<Dyadic>::new(formula)?.enumerate(&Limits::none())
}

/// Number of satisfying total assignments.
pub fn count_models(formula: &CnfFormula) -> Result<u128> {
    Solver::<Dyadic>::new(formula)?.count_models(&Limits::none())
}
