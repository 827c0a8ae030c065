//! Search states and their text format.
//!
//! A state is the decision stack: one `(literal, flag)` pair per level,
//! flag 1 meaning the opposite branch at that level has been refuted. The
//! document is one `<literal> <flag>` line per pair. A [`Checkpoint`] adds
//! `c` header lines binding it to a formula (SHA-256 of its clause body)
//! and optional assumption literals.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::cnf::{CnfFormula, Literal};
use crate::error::{Error, Result};

/// Ordered `(literal, explored)` pairs of the decision stack.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchState {
    pairs: Vec<(Literal, bool)>,
}

impl SearchState {
    pub fn new(pairs: Vec<(Literal, bool)>) -> Self {
        SearchState { pairs }
    }

    pub fn pairs(&self) -> &[(Literal, bool)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Literals have distinct variables.
    pub fn is_consistent(&self) -> bool {
        let mut vars: Vec<usize> = self.pairs.iter().map(|(l, _)| l.var()).collect();
        vars.sort_unstable();
        vars.windows(2).all(|w| w[0] != w[1])
    }
}

/// Serialises a state: one `<literal> <flag>` line per pair.
pub fn checkpoint_save(state: &SearchState) -> String {
    let mut out = String::new();
    for (l, f) in &state.pairs {
        let _ = writeln!(out, "{l} {}", u8::from(*f));
    }
    out
}

/// Parses the body written by [`checkpoint_save`]; `c` lines are skipped.
pub fn checkpoint_load(text: &str) -> Result<SearchState> {
    Ok(Checkpoint::parse(text)?.state)
}

/// SHA-256 over the DIMACS clause body (header and clauses, no comments).
pub fn formula_hash(formula: &CnfFormula) -> String {
    let mut h = Sha256::new();
    h.update(format!("p cnf {} {}\n", formula.num_vars, formula.num_clauses()));
    for c in &formula.clauses {
        for l in c {
            h.update(format!("{l} "));
        }
        h.update("0\n");
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

/// A state bound to a formula and assumptions.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub formula_hash: Option<String>,
    pub assumptions: Vec<Literal>,
    pub state: SearchState,
}

impl Checkpoint {
    pub fn new(formula: &CnfFormula, assumptions: Vec<Literal>, state: SearchState) -> Self {
        Checkpoint { formula_hash: Some(formula_hash(formula)), assumptions, state }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(h) = &self.formula_hash {
            let _ = writeln!(out, "c formula-sha256 {h}");
        }
        if !self.assumptions.is_empty() {
            let lits: Vec<String> = self.assumptions.iter().map(|l| l.to_string()).collect();
            let _ = writeln!(out, "c assumptions {}", lits.join(" "));
        }
        out.push_str(&checkpoint_save(&self.state));
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut cp = Checkpoint::default();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix('c') {
                let mut it = rest.split_whitespace();
                match it.next() {
                    Some("formula-sha256") => {
                        cp.formula_hash = it.next().map(str::to_string);
                    }
                    Some("assumptions") => {
                        for tok in it {
                            cp.assumptions.push(parse_lit(tok, line_no)?);
                        }
                    }
                    _ => {}
                }
                continue;
            }
            let mut it = line.split_whitespace();
            let (Some(l), Some(f), None) = (it.next(), it.next(), it.next()) else {
                return Err(Error::parse(line_no, format!("expected \"<literal> <flag>\", got {line:?}")));
            };
            let flag = match f {
                "0" => false,
                "1" => true,
                _ => return Err(Error::parse(line_no, format!("flag must be 0 or 1, got {f:?}"))),
            };
            cp.state.pairs.push((parse_lit(l, line_no)?, flag));
        }
        if !cp.state.is_consistent() {
            return Err(Error::parse(1, "a variable occurs twice in the decision stack"));
        }
        Ok(cp)
    }

    /// Errors if the checkpoint names a different formula.
    pub fn check_formula(&self, formula: &CnfFormula) -> Result<()> {
        match &self.formula_hash {
            Some(h) if *h != formula_hash(formula) => {
                Err(Error::input("checkpoint was written for a different formula"))
            }
            _ => Ok(()),
        }
    }
}

fn parse_lit(tok: &str, line: usize) -> Result<Literal> {
    let v: i32 = tok.parse().map_err(|_| Error::parse(line, format!("bad literal {tok:?}")))?;
    Literal::try_from(v).map_err(|_| Error::parse(line, "literal 0"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_round_trip() {
        let s = SearchState::default();
        assert_eq!(checkpoint_save(&s), "");
        assert_eq!(checkpoint_load("").unwrap(), s);
    }

    #[test]
    fn pairs_round_trip() {
        let s = SearchState::new(vec![(Literal::new(5), true), (Literal::new(-2), false)]);
        let text = checkpoint_save(&s);
        assert_eq!(text, "5 1\n-2 0\n");
        assert_eq!(checkpoint_load(&text).unwrap(), s);
    }

    #[test]
    fn header_round_trip() {
        let f = CnfFormula::from_ints(2, &[&[1, 2]]);
        let cp = Checkpoint::new(
            &f,
            vec![Literal::new(-1)],
            SearchState::new(vec![(Literal::new(2), false)]),
        );
        let back = Checkpoint::parse(&cp.to_text()).unwrap();
        assert_eq!(back, cp);
        assert!(back.check_formula(&f).is_ok());
        assert!(back.check_formula(&CnfFormula::from_ints(2, &[&[1]])).is_err());
    }

    #[test]
    fn malformed() {
        assert!(checkpoint_load("5\n").is_err());
        assert!(checkpoint_load("5 2\n").is_err());
        assert!(checkpoint_load("0 1\n").is_err());
        assert!(checkpoint_load("x 1\n").is_err());
        assert!(checkpoint_load("3 1\n-3 0\n").is_err());
    }
}
