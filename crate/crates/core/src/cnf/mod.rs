//! Clause sets over signed integer literals, the two van der Waerden
//! encodings, and DIMACS input/output.

mod dimacs;
mod encode;

use std::fmt;
use std::num::NonZeroI32;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use dimacs::{emit_dimacs, parse_dimacs};
pub use encode::{
    assignment_to_partition, cnf_file_name, encode_pd, encode_vdw, pd_middle_unit, Kind,
};

/// A propositional literal: variable index `>= 1` with a polarity.
///
/// Variable `i` true encodes "vertex `i` is in block 1".
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "i32", into = "i32")]
pub struct Literal(NonZeroI32);

impl Literal {
    /// Panics on `0`; use `TryFrom<i32>` for fallible construction.
    pub fn new(dimacs: i32) -> Self {
        Literal(NonZeroI32::new(dimacs).expect("literal must be nonzero"))
    }

    pub fn positive(var: usize) -> Self {
        Literal::new(var as i32)
    }

    pub fn negative(var: usize) -> Self {
        Literal::new(-(var as i32))
    }

    pub fn from_var(var: usize, value: bool) -> Self {
        if value {
            Self::positive(var)
        } else {
            Self::negative(var)
        }
    }

    pub fn var(self) -> usize {
        self.0.get().unsigned_abs() as usize
    }

    pub fn is_positive(self) -> bool {
        self.0.get() > 0
    }

    pub fn to_dimacs(self) -> i32 {
        self.0.get()
    }

    /// Dense index `2 * (var - 1) + negative`, used for per-literal arrays.
    #[inline]
    pub fn code(self) -> usize {
        2 * (self.var() - 1) + usize::from(!self.is_positive())
    }
}

impl std::ops::Not for Literal {
    type Output = Literal;
    fn not(self) -> Literal {
        Literal(-self.0)
    }
}

impl TryFrom<i32> for Literal {
    type Error = Error;
    fn try_from(v: i32) -> Result<Self> {
        NonZeroI32::new(v)
            .map(Literal)
            .ok_or_else(|| Error::input("literal 0 is not a literal"))
    }
}

impl From<Literal> for i32 {
    fn from(l: Literal) -> i32 {
        l.to_dimacs()
    }
}

impl fmt::Debug for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub type Clause = Vec<Literal>;

/// A CNF formula with its declared variable count and comment lines.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CnfFormula {
    pub num_vars: usize,
    pub clauses: Vec<Clause>,
    pub comments: Vec<String>,
}

impl CnfFormula {
    pub fn new(num_vars: usize) -> Self {
        CnfFormula { num_vars, ..Default::default() }
    }

    pub fn with_clauses(num_vars: usize, clauses: Vec<Clause>) -> Self {
        CnfFormula { num_vars, clauses, comments: Vec::new() }
    }

    /// Convenience constructor from DIMACS-style integer clauses.
    pub fn from_ints(num_vars: usize, clauses: &[&[i32]]) -> Self {
        let clauses = clauses
            .iter()
            .map(|c| c.iter().map(|&l| Literal::new(l)).collect())
            .collect();
        Self::with_clauses(num_vars, clauses)
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    /// Checks the literal-range invariant.
    pub fn validate(&self) -> Result<()> {
        for (i, c) in self.clauses.iter().enumerate() {
            if let Some(l) = c.iter().find(|l| l.var() > self.num_vars) {
                return Err(Error::input(format!(
                    "clause {} mentions variable {} beyond declared {}",
                    i + 1,
                    l.var(),
                    self.num_vars
                )));
            }
        }
        Ok(())
    }

    /// True iff no clause repeats a literal or contains a complementary pair.
    pub fn is_normal(&self) -> bool {
        self.clauses.iter().all(|c| {
            let mut vars: Vec<usize> = c.iter().map(|l| l.var()).collect();
            vars.sort_unstable();
            vars.windows(2).all(|w| w[0] != w[1])
        })
    }

    /// Evaluates the formula under a total assignment (`assignment[v - 1]`
    /// is the value of variable `v`).
    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| {
            c.iter().any(|l| {
                assignment
                    .get(l.var() - 1)
                    .is_some_and(|&v| v == l.is_positive())
            })
        })
    }

    pub fn push(&mut self, clause: Clause) {
        self.clauses.push(clause);
    }
}
