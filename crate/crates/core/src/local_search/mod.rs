//! Stochastic local search for good partitions (lower-bound
//! certificates): GSAT with a tabu list and WalkSAT (SKC), warm starts
//! from solutions of smaller instances, and upward sweeps over `n`.
//!
//! Local search can only ever answer "found"; failing to find a solution
//! says nothing about satisfiability.

mod campaign;
mod state;

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::certificate::PartitionCertificate;
use crate::cnf::CnfFormula;
use crate::error::{Error, Result};
use state::LsState;

pub use campaign::{run_campaign, CampaignBudget, CampaignReport, CampaignRow};

/// Flip-selection scheme.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scheme {
    GsatTabu,
    WalkSat,
}

impl std::fmt::Display for Scheme {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Scheme::GsatTabu => "gsat-tabu",
            Scheme::WalkSat => "walksat",
        })
    }
}

impl std::str::FromStr for Scheme {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gsat-tabu" => Ok(Scheme::GsatTabu),
            "walksat" => Ok(Scheme::WalkSat),
            _ => Err(Error::input(format!("unknown local-search scheme {s:?} (gsat-tabu|walksat)"))),
        }
    }
}

/// Parameters of [`local_search`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LsConfig {
    pub scheme: Scheme,
    pub runs: u64,
    /// Flips per run.
    pub cutoff: u64,
    pub seed: u64,
    pub tabu_tenure: usize,
    /// Random-walk probability for WalkSAT.
    pub noise: f64,
    /// Start for the first run; later runs flip a random 5% of it.
    pub initial: Option<Vec<bool>>,
    /// Worker threads for independent runs. Does not affect the outcome.
    pub jobs: usize,
}

impl Default for LsConfig {
    fn default() -> Self {
        LsConfig {
            scheme: Scheme::GsatTabu,
            runs: 10,
            cutoff: 100_000,
            seed: 0,
            tabu_tenure: 10,
            noise: 0.4,
            initial: None,
            jobs: 1,
        }
    }
}

impl LsConfig {
    pub fn new(scheme: Scheme) -> Self {
        LsConfig { scheme, ..LsConfig::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if self.runs == 0 {
            return Err(Error::input("runs must be at least 1"));
        }
        if self.cutoff == 0 {
            return Err(Error::input("cutoff must be at least 1"));
        }
        if !(0.0..=1.0).contains(&self.noise) {
            return Err(Error::input(format!("noise {} outside [0, 1]", self.noise)));
        }
        Ok(())
    }

    /// Seed of run `run`; distinct runs get decorrelated streams.
    pub fn run_seed(&self, run: u64) -> u64 {
        splitmix64(self.seed ^ splitmix64(run))
    }
}

fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Result of [`local_search`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LsOutcome {
    pub found: bool,
    /// A satisfying total assignment, verified against the formula.
    pub witness: Option<Vec<bool>>,
    /// Fewest falsified clauses seen over all runs performed.
    pub best_unsat: usize,
    pub flips_used: u64,
    pub runs_used: u64,
}

#[derive(Debug, Clone)]
struct RunResult {
    found: bool,
    flips: u64,
    best_unsat: usize,
    assignment: Vec<bool>,
}

/// Runs `config.runs` independent runs of up to `config.cutoff` flips each,
/// stopping at the first run that satisfies the formula.
///
/// Runs are numbered and each has its own seed, so the outcome (the first
/// successful run in numbering order, with the effort of all runs up to
/// it) is the same for any number of worker threads.
pub fn local_search(formula: &CnfFormula, config: &LsConfig) -> Result<LsOutcome> {
    config.validate()?;
    formula.validate()?;
    if let Some(init) = &config.initial {
        if init.len() != formula.num_vars {
            return Err(Error::input(format!(
                "initial assignment has {} values for {} variables",
                init.len(),
                formula.num_vars
            )));
        }
    }
    let prototype = LsState::new(formula);

    let results: Vec<RunResult> = if config.jobs <= 1 {
        let mut st = prototype;
        let mut out = Vec::new();
        for r in 0..config.runs {
            let res = single_run(&mut st, config, r);
            let stop = res.found;
            out.push(res);
            if stop {
                break;
            }
        }
        out
    } else {
        parallel_runs(&prototype, config)
    };

    let found_at = results.iter().position(|r| r.found);
    let considered = &results[..found_at.map_or(results.len(), |i| i + 1)];
    let outcome = LsOutcome {
        found: found_at.is_some(),
        witness: found_at.map(|i| results[i].assignment.clone()),
        best_unsat: considered.iter().map(|r| r.best_unsat).min().unwrap_or(usize::MAX),
        flips_used: considered.iter().map(|r| r.flips).sum(),
        runs_used: considered.len() as u64,
    };
    if let Some(w) = &outcome.witness {
        if !formula.is_satisfied_by(w) {
            return Err(Error::Soundness("local search returned a non-satisfying assignment".into()));
        }
    }
    Ok(outcome)
}

/// Runs in index order across threads; runs beyond the first success are
/// abandoned (their results are discarded either way).
fn parallel_runs(prototype: &LsState, config: &LsConfig) -> Vec<RunResult> {
    let next = AtomicUsize::new(0);
    let first_found = AtomicUsize::new(usize::MAX);
    let slots: Mutex<Vec<Option<RunResult>>> = Mutex::new(vec![None; config.runs as usize]);
    std::thread::scope(|scope| {
        for _ in 0..config.jobs.min(config.runs as usize) {
            scope.spawn(|| {
                let mut st = prototype.clone();
                loop {
                    let r = next.fetch_add(1, Ordering::Relaxed);
                    if r >= config.runs as usize || r > first_found.load(Ordering::Relaxed) {
                        break;
                    }
                    let res = single_run(&mut st, config, r as u64);
                    if res.found {
                        first_found.fetch_min(r, Ordering::Relaxed);
                    }
                    slots.lock().expect("lock not poisoned")[r] = Some(res);
                }
            });
        }
    });
    // Every run up to the first success was executed.
    slots.into_inner().expect("workers joined").into_iter().map_while(|s| s).collect()
}

fn initial_assignment(config: &LsConfig, run: u64, n: usize, rng: &mut ChaCha8Rng) -> Vec<bool> {
    match &config.initial {
        Some(init) if run == 0 => init.clone(),
        Some(init) => {
            let mut a = init.clone();
            if n > 0 {
                let k = n.div_ceil(20);
                for i in sample(rng, n, k) {
                    a[i] = !a[i];
                }
            }
            a
        }
        None => (0..n).map(|_| rng.gen()).collect(),
    }
}

fn single_run(st: &mut LsState, config: &LsConfig, run: u64) -> RunResult {
    let mut rng = ChaCha8Rng::seed_from_u64(config.run_seed(run));
    let init = initial_assignment(config, run, st.num_vars, &mut rng);
    st.load(&init);
    let mut best = st.num_falsified();
    let mut flips = 0u64;
    if best > 0 && st.num_vars > 0 && !st.has_empty_clause() {
        match config.scheme {
            Scheme::GsatTabu => gsat_tabu(st, config, &mut rng, &mut flips, &mut best),
            Scheme::WalkSat => walksat(st, config, &mut rng, &mut flips, &mut best),
        }
    }
    RunResult { found: st.num_falsified() == 0, flips, best_unsat: best, assignment: st.assignment.clone() }
}

fn gsat_tabu(st: &mut LsState, config: &LsConfig, rng: &mut ChaCha8Rng, flips: &mut u64, best: &mut usize) {
    let n = st.num_vars;
    // Step at which each variable was last flipped (offset by tenure so
    // nothing starts tabu).
    let tenure = config.tabu_tenure as u64;
    let mut last_flip = vec![0u64; n];
    let mut candidates = Vec::with_capacity(n);
    while *flips < config.cutoff {
        let step = *flips + tenure + 1;
        let falsified = st.num_falsified() as i64;
        let mut best_score = i64::MIN;
        candidates.clear();
        for v in 0..n {
            let s = st.score(v);
            let tabu = last_flip[v] != 0 && last_flip[v] + tenure >= step;
            // Aspiration: a tabu flip is allowed if it satisfies everything.
            if tabu && s != falsified {
                continue;
            }
            if s > best_score {
                best_score = s;
                candidates.clear();
            }
            if s == best_score {
                candidates.push(v);
            }
        }
        if candidates.is_empty() {
            // Everything tabu (tenure >= n): fall back to all variables.
            best_score = (0..n).map(|v| st.score(v)).max().expect("n > 0");
            candidates.extend((0..n).filter(|&v| st.score(v) == best_score));
        }
        let v = candidates[rng.gen_range(0..candidates.len())];
        st.flip(v);
        last_flip[v] = step;
        *flips += 1;
        *best = (*best).min(st.num_falsified());
        if st.num_falsified() == 0 {
            break;
        }
    }
}

fn walksat(st: &mut LsState, config: &LsConfig, rng: &mut ChaCha8Rng, flips: &mut u64, best: &mut usize) {
    let mut candidates = Vec::new();
    while *flips < config.cutoff {
        let c = st.falsified[rng.gen_range(0..st.falsified.len())];
        let clause = st.clause(c);
        let min_break = clause.iter().map(|&(v, _)| st.brk[v as usize]).min().expect("clause not empty");
        candidates.clear();
        if min_break > 0 && rng.gen_bool(config.noise) {
            candidates.extend(clause.iter().map(|&(v, _)| v as usize));
        } else {
            candidates.extend(
                clause.iter().filter(|&&(v, _)| st.brk[v as usize] == min_break).map(|&(v, _)| v as usize),
            );
        }
        let v = candidates[rng.gen_range(0..candidates.len())];
        st.flip(v);
        *flips += 1;
        *best = (*best).min(st.num_falsified());
        if st.num_falsified() == 0 {
            break;
        }
    }
}

/// Start for `n` from a good partition of `{1..n-1}`: the same bits with
/// vertex `n` in block 0.
pub fn warm_start_vdw(solution: &PartitionCertificate) -> Vec<bool> {
    let mut a = solution.bits().to_vec();
    a.push(false);
    a
}

/// Start for the palindromic problem at `n` from a half-assignment for
/// `n - 2`: every vertex moves one step inwards and the new border
/// vertex 1 goes to block 0.
pub fn warm_start_pd(half: &[bool]) -> Vec<bool> {
    let mut a = Vec::with_capacity(half.len() + 1);
    a.push(false);
    a.extend_from_slice(half);
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::verify_good;
    use crate::cnf::{encode_pd, encode_vdw};

    fn cfg(scheme: Scheme, runs: u64, cutoff: u64, seed: u64) -> LsConfig {
        LsConfig { runs, cutoff, seed, ..LsConfig::new(scheme) }
    }

    #[test]
    fn finds_vdw_3_3_8() {
        let f = encode_vdw(3, 3, 8).unwrap();
        for scheme in [Scheme::GsatTabu, Scheme::WalkSat] {
            let out = local_search(&f, &cfg(scheme, 10, 10_000, 1)).unwrap();
            assert!(out.found, "{scheme}");
            assert_eq!(out.best_unsat, 0);
            let cert = PartitionCertificate::from_bits(out.witness.unwrap());
            assert!(verify_good(&cert, 3, 3).is_ok());
        }
    }

    #[test]
    fn never_finds_unsat_instance() {
        let f = encode_vdw(3, 3, 9).unwrap();
        for scheme in [Scheme::GsatTabu, Scheme::WalkSat] {
            let out = local_search(&f, &cfg(scheme, 3, 2_000, 5)).unwrap();
            assert!(!out.found);
            assert!(out.best_unsat >= 1);
            assert_eq!(out.runs_used, 3);
            assert_eq!(out.flips_used, 6_000);
        }
    }

    #[test]
    fn deterministic_and_thread_independent() {
        let f = encode_vdw(3, 6, 30).unwrap();
        for scheme in [Scheme::GsatTabu, Scheme::WalkSat] {
            let c = cfg(scheme, 8, 300, 42);
            let a = local_search(&f, &c).unwrap();
            assert_eq!(a, local_search(&f, &c).unwrap());
            assert_eq!(a, local_search(&f, &LsConfig { jobs: 3, ..c.clone() }).unwrap());
        }
    }

    #[test]
    fn invalid_configs_rejected() {
        let f = encode_vdw(3, 3, 5).unwrap();
        assert!(local_search(&f, &LsConfig { runs: 0, ..LsConfig::default() }).is_err());
        assert!(local_search(&f, &LsConfig { cutoff: 0, ..LsConfig::default() }).is_err());
        assert!(local_search(&f, &LsConfig { noise: 1.5, ..LsConfig::default() }).is_err());
        let wrong = LsConfig { initial: Some(vec![false; 4]), ..LsConfig::default() };
        assert!(local_search(&f, &wrong).is_err());
    }

    #[test]
    fn solved_start_costs_no_flips() {
        let f = encode_vdw(3, 3, 8).unwrap();
        let start = PartitionCertificate::from_bitstring("01100110").unwrap().into_bits();
        let out = local_search(&f, &LsConfig { initial: Some(start), ..LsConfig::default() }).unwrap();
        assert!(out.found);
        assert_eq!(out.flips_used, 0);
        assert_eq!(out.runs_used, 1);
    }

    #[test]
    fn warm_start_rules() {
        let c = PartitionCertificate::from_bitstring("01100110").unwrap();
        let w = PartitionCertificate::from_bits(warm_start_vdw(&c));
        assert_eq!(w.to_string(), "011001100");
        assert_eq!(warm_start_vdw(&PartitionCertificate::from_bits(vec![])), vec![false]);
        let bits = |s: &str| s.chars().map(|c| c == '1').collect::<Vec<_>>();
        assert_eq!(warm_start_pd(&bits("0110")), bits("00110"));
        assert_eq!(warm_start_pd(&bits("0")), bits("00"));
    }

    #[test]
    fn pd_search() {
        let f = encode_pd(3, 5, 20).unwrap();
        let out = local_search(&f, &cfg(Scheme::GsatTabu, 10, 10_000, 3)).unwrap();
        assert!(out.found);
        let cert = PartitionCertificate::expand_half(&out.witness.unwrap(), 20).unwrap();
        assert!(verify_good(&cert, 3, 5).is_ok());
        assert!(cert.is_palindrome());
    }
}
