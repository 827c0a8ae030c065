//! Depth-limited splitting of the search tree into cubes, and solving the
//! cubes with independent solver instances.

use std::fmt::Write as _;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use super::solver::{Limits, Solver};
use super::weight::{BranchWeight, Dyadic};
use super::{Assignment, Outcome, Verdict};
use crate::cnf::{CnfFormula, Literal};
use crate::error::{Error, Result};

/// A partial assignment labelling a subtree of the search.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cube {
    pub literals: Vec<Literal>,
}

impl Cube {
    pub fn new(literals: Vec<Literal>) -> Self {
        Cube { literals }
    }

    pub fn depth(&self) -> usize {
        self.literals.len()
    }
}

/// The depth-`level` frontier of the branching tree: every branch not
/// refuted by propagation above `level` yields one cube (shorter if the
/// branch already satisfies the formula). At most `2^level` cubes; the
/// formula is satisfiable iff some cube's residual is.
pub fn split(formula: &CnfFormula, level: usize) -> Result<Vec<Cube>> {
    split_with::<Dyadic>(formula, level)
}

pub fn split_with<W: BranchWeight>(formula: &CnfFormula, level: usize) -> Result<Vec<Cube>> {
    let mut s: Solver<W> = Solver::new(formula)?;
    Ok(s.frontier(level).into_iter().map(Cube::new).collect())
}

/// Output syntax for cube files.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CubeStyle {
    /// One cube per line, literals separated by spaces.
    #[default]
    Plain,
    /// `a <literals> 0` lines.
    Icnf,
}

pub fn emit_cubes(cubes: &[Cube], style: CubeStyle) -> String {
    let mut out = String::new();
    for c in cubes {
        let lits: Vec<String> = c.literals.iter().map(|l| l.to_string()).collect();
        match style {
            CubeStyle::Plain => {
                let _ = writeln!(out, "{}", lits.join(" "));
            }
            CubeStyle::Icnf => {
                let mut line = String::from("a ");
                for l in &lits {
                    line.push_str(l);
                    line.push(' ');
                }
                line.push('0');
                let _ = writeln!(out, "{line}");
            }
        }
    }
    out
}

/// Reads either syntax. Every line is a cube (an empty line is the empty
/// cube); `c` lines are comments.
pub fn parse_cubes(text: &str) -> Result<Vec<Cube>> {
    let mut cubes = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.starts_with('c') || line.starts_with('p') {
            continue;
        }
        let (body, icnf) = match line.strip_prefix('a') {
            Some(rest) => (rest, true),
            None => (line, false),
        };
        let mut lits = Vec::new();
        let mut terminated = false;
        for tok in body.split_whitespace() {
            if terminated {
                return Err(Error::parse(line_no, "literal after terminating 0"));
            }
            let v: i32 =
                tok.parse().map_err(|_| Error::parse(line_no, format!("bad literal {tok:?}")))?;
            if v == 0 {
                terminated = true;
                continue;
            }
            lits.push(Literal::new(v));
        }
        if icnf && !terminated {
            return Err(Error::parse(line_no, "cube line not terminated by 0"));
        }
        let cube = Cube::new(lits);
        let mut vars: Vec<usize> = cube.literals.iter().map(|l| l.var()).collect();
        vars.sort_unstable();
        if vars.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::parse(line_no, "cube repeats a variable"));
        }
        cubes.push(cube);
    }
    Ok(cubes)
}

/// Verdict and effort for one cube.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CubeResult {
    pub index: usize,
    pub verdict: Verdict,
    pub nodes: u64,
    pub wall_time: Duration,
    #[serde(skip)]
    pub witness: Option<Assignment>,
}

/// Aggregate over all cubes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CubeReport {
    /// SAT if any cube is SAT, UNSAT if all are UNSAT, else UNKNOWN.
    pub verdict: Verdict,
    /// In cube order; cubes never started (after a SAT cancellation) are
    /// reported as UNKNOWN with zero nodes.
    pub results: Vec<CubeResult>,
    pub total_nodes: u64,
    pub wall_time: Duration,
}

impl CubeReport {
    pub fn witness(&self) -> Option<&Assignment> {
        self.results.iter().find_map(|r| r.witness.as_ref())
    }
}

/// Solves every cube with its own solver over the shared formula, using
/// `jobs` worker threads. With `stop_on_sat`, the first SAT cube cancels
/// the others. `max_nodes_per_cube` bounds each cube.
pub fn solve_cubes(
    formula: &CnfFormula,
    cubes: &[Cube],
    jobs: usize,
    stop_on_sat: bool,
    max_nodes_per_cube: Option<u64>,
) -> Result<CubeReport> {
    let started = Instant::now();
    let prototype: Solver<Dyadic> = Solver::new(formula)?;
    for c in cubes {
        if let Some(l) = c.literals.iter().find(|l| l.var() > formula.num_vars) {
            return Err(Error::input(format!("cube literal {l} beyond {} variables", formula.num_vars)));
        }
    }
    let next = AtomicUsize::new(0);
    let cancel = AtomicBool::new(false);
    let results: Mutex<Vec<CubeResult>> = Mutex::new(Vec::with_capacity(cubes.len()));
    let jobs = jobs.clamp(1, cubes.len().max(1));

    std::thread::scope(|scope| {
        for _ in 0..jobs {
            scope.spawn(|| {
                let mut solver = prototype.clone();
                loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    if i >= cubes.len() {
                        break;
                    }
                    let result = if cancel.load(Ordering::Relaxed) {
                        CubeResult {
                            index: i,
                            verdict: Verdict::Unknown,
                            nodes: 0,
                            wall_time: Duration::ZERO,
                            witness: None,
                        }
                    } else {
                        let limits = Limits {
                            max_nodes: max_nodes_per_cube,
                            max_time: None,
                            cancel: Some(&cancel),
                        };
                        let r = solver
                            .solve_under(&cubes[i].literals, &limits)
                            .expect("cube literals validated above");
                        let (verdict, witness) = match r.outcome {
                            Outcome::Sat(a) => (Verdict::Sat, Some(a)),
                            Outcome::Unsat => (Verdict::Unsat, None),
                            Outcome::Indeterminate(_) => (Verdict::Unknown, None),
                        };
                        if verdict == Verdict::Sat && stop_on_sat {
                            cancel.store(true, Ordering::Relaxed);
                        }
                        CubeResult {
                            index: i,
                            verdict,
                            nodes: r.stats.nodes,
                            wall_time: r.stats.wall_time,
                            witness,
                        }
                    };
                    results.lock().expect("no worker panics while holding the lock").push(result);
                }
            });
        }
    });

    let mut results = results.into_inner().expect("workers joined");
    results.sort_by_key(|r| r.index);
    let verdict = if results.iter().any(|r| r.verdict == Verdict::Sat) {
        Verdict::Sat
    } else if results.iter().all(|r| r.verdict == Verdict::Unsat) {
        Verdict::Unsat
    } else {
        Verdict::Unknown
    };
    Ok(CubeReport {
        verdict,
        total_nodes: results.iter().map(|r| r.nodes).sum(),
        results,
        wall_time: started.elapsed(),
    })
}

/// Model count of each cube's residual (cube variables fixed).
pub fn count_models_per_cube(formula: &CnfFormula, cubes: &[Cube]) -> Result<Vec<u128>> {
    let mut s: Solver<Dyadic> = Solver::new(formula)?;
    cubes.iter().map(|c| s.count_models_under(&c.literals, &Limits::none())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cnf::encode_vdw;
    use crate::dpll::count_models;

    #[test]
    fn level_zero_is_one_empty_cube() {
        let f = encode_vdw(3, 3, 8).unwrap();
        assert_eq!(split(&f, 0).unwrap(), vec![Cube::default()]);
    }

    #[test]
    fn covering_on_small_instances() {
        for n in [8, 9] {
            let f = encode_vdw(3, 3, n).unwrap();
            let whole = count_models(&f).unwrap();
            for level in 0..=6 {
                let cubes = split(&f, level).unwrap();
                assert!(cubes.len() <= 1 << level);
                let per: u128 = count_models_per_cube(&f, &cubes).unwrap().iter().sum();
                assert_eq!(per, whole, "n={n} level={level}");
                let report = solve_cubes(&f, &cubes, 2, true, None).unwrap();
                let expected = if n == 8 { Verdict::Sat } else { Verdict::Unsat };
                assert_eq!(report.verdict, expected);
            }
        }
    }

    #[test]
    fn deep_level_yields_leaves() {
        let f = encode_vdw(3, 3, 9).unwrap();
        // Unsatisfiable: a level beyond the tree depth leaves nothing.
        assert!(split(&f, 40).unwrap().is_empty());
        let f = encode_vdw(3, 3, 8).unwrap();
        let cubes = split(&f, 40).unwrap();
        assert!(!cubes.is_empty());
        assert!(cubes.iter().all(|c| c.depth() < 40));
    }

    #[test]
    fn cube_text_round_trip() {
        let cubes = vec![
            Cube::default(),
            Cube::new(vec![Literal::new(3), Literal::new(-1)]),
        ];
        for style in [CubeStyle::Plain, CubeStyle::Icnf] {
            assert_eq!(parse_cubes(&emit_cubes(&cubes, style)).unwrap(), cubes);
        }
        assert!(parse_cubes("a 1 2\n").is_err());
        assert!(parse_cubes("1 -1\n").is_err());
        assert!(parse_cubes("1 0 2\n").is_err());
    }
}
