//! Scans over `n` that turn per-instance verdicts into `w(2;t0,t1)` and
//! `vdw_pd(2;t0,t1) = (p, q)`.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use super::known::{known_values, Derived, Qualifier, Status};
use crate::certificate::{verify_good, PartitionCertificate};
use crate::cnf::{assignment_to_partition, encode_pd, encode_vdw, pd_middle_unit, CnfFormula, Kind};
use crate::dpll::{solve_cubes, split, Limits, Outcome, Solver, Verdict};
use crate::error::{Error, Result};
use crate::local_search::{local_search, LsConfig};

/// How each instance is decided.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    /// DPLL only.
    Dpll,
    /// Local search first; DPLL when it fails.
    #[default]
    Hybrid,
}

impl std::fmt::Display for Strategy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Strategy::Dpll => "dpll",
            Strategy::Hybrid => "hybrid",
        })
    }
}

impl std::str::FromStr for Strategy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dpll" => Ok(Strategy::Dpll),
            "hybrid" => Ok(Strategy::Hybrid),
            _ => Err(Error::input(format!("unknown strategy {s:?} (dpll|hybrid)"))),
        }
    }
}

/// Budget and scan parameters of the drivers.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComputeLimits {
    /// Node budget of each DPLL call.
    pub max_nodes: Option<u64>,
    /// Wall-clock budget of the whole scan.
    pub max_time: Option<Duration>,
    /// First `n` to solve; defaults to a little below the tabulated value
    /// when there is one, else 1.
    pub n_start: Option<usize>,
    /// Local-search settings under [`Strategy::Hybrid`].
    pub local_search: LsConfig,
    /// With more than one job, each DPLL call is split into cubes solved
    /// in parallel (the time budget is then only checked between calls).
    pub jobs: usize,
}

impl Default for ComputeLimits {
    fn default() -> Self {
        ComputeLimits {
            max_nodes: None,
            max_time: None,
            n_start: None,
            local_search: LsConfig { runs: 4, cutoff: 50_000, ..LsConfig::default() },
            jobs: 1,
        }
    }
}

/// Below the tabulated value, to confirm the SAT side too.
const START_SLACK: usize = 3;

/// Which engine produced a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Engine {
    Dpll,
    LocalSearch,
    /// Not solved: follows from other verdicts.
    Inferred,
}

/// Verdict for one `n` with the effort spent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceRecord {
    pub n: usize,
    pub verdict: Verdict,
    pub engine: Engine,
    pub nodes: u64,
    pub flips: u64,
    pub wall_time: Duration,
}

/// `w(2; t0, t1)`, or a verified lower bound when limits ran out.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VdwResult {
    pub t0: usize,
    pub t1: usize,
    /// The exact value, if established.
    pub value: Option<usize>,
    /// `w >= lower`, witnessed by `witness` on `lower - 1` vertices.
    pub lower: usize,
    pub witness: Option<PartitionCertificate>,
    /// The UNSAT verdict at `value`.
    pub unsat_evidence: Option<InstanceRecord>,
    /// All solved instances in solving order.
    pub records: Vec<InstanceRecord>,
    pub wall_time: Duration,
}

/// Verdicts of the palindromic problem per `n`.
pub type SatProfile = BTreeMap<usize, Verdict>;

/// `vdw_pd(2; t0, t1) = (p, q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PdNumber {
    pub p: usize,
    pub q: usize,
    /// `w - q` from the tabulated `w`, when available.
    pub gap: Option<Derived>,
}

impl PdNumber {
    pub fn span(&self) -> usize {
        self.q - self.p
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PdResult {
    pub t0: usize,
    pub t1: usize,
    /// `None` if some needed verdict is UNKNOWN.
    pub number: Option<PdNumber>,
    /// Solved and inferred verdicts over the scanned range.
    pub profile: SatProfile,
    /// Verified good palindromic partitions by `n`.
    pub witnesses: BTreeMap<usize, PartitionCertificate>,
    pub records: Vec<InstanceRecord>,
    pub wall_time: Duration,
}

impl PdResult {
    /// `q - p` odd, every `n <= p` SAT, `(p, q)` strictly alternating, and
    /// everything from `q` on (as far as the profile goes) UNSAT.
    pub fn check_alternation(&self) -> bool {
        let Some(num) = self.number else { return false };
        let v = |n: usize| if n == 0 { Some(Verdict::Sat) } else { self.profile.get(&n).copied() };
        let max_n = self.profile.keys().next_back().copied().unwrap_or(0);
        num.span() % 2 == 1
            && (1..=num.p).all(|n| v(n) == Some(Verdict::Sat))
            && (num.p + 1..num.q).all(|n| {
                let expect = if (n - num.p) % 2 == 1 { Verdict::Unsat } else { Verdict::Sat };
                v(n) == Some(expect)
            })
            && (num.q..=max_n).all(|n| v(n) == Some(Verdict::Unsat))
    }
}

/// One instance solved, with the certificate when SAT.
struct Solved {
    record: InstanceRecord,
    certificate: Option<PartitionCertificate>,
}

struct Ctx<'a> {
    kind: Kind,
    t0: usize,
    t1: usize,
    strategy: Strategy,
    limits: &'a ComputeLimits,
    started: Instant,
}

impl Ctx<'_> {
    fn time_left(&self) -> Option<Duration> {
        self.limits.max_time.map(|m| m.saturating_sub(self.started.elapsed()))
    }

    fn out_of_time(&self) -> bool {
        self.time_left().is_some_and(|d| d.is_zero())
    }

    fn certificate(&self, n: usize, bits: &[Option<bool>]) -> Result<PartitionCertificate> {
        let cert = assignment_to_partition(bits, n, self.kind == Kind::Pd);
        if verify_good(&cert, self.t0, self.t1).is_err() || (self.kind == Kind::Pd && !cert.is_palindrome()) {
            return Err(Error::Soundness(format!("{} witness for n = {n} does not verify", self.kind)));
        }
        Ok(cert)
    }

    fn solve(&self, n: usize) -> Result<Solved> {
        let started = Instant::now();
        if n == 0 {
            let record = InstanceRecord {
                n,
                verdict: Verdict::Sat,
                engine: Engine::Inferred,
                nodes: 0,
                flips: 0,
                wall_time: Duration::ZERO,
            };
            return Ok(Solved { record, certificate: Some(PartitionCertificate::from_bits(vec![])) });
        }
        let formula = match self.kind {
            Kind::Vdw => encode_vdw(self.t0, self.t1, n)?,
            Kind::Pd => encode_pd(self.t0, self.t1, n)?,
        };
        let mut flips = 0;
        if self.strategy == Strategy::Hybrid {
            let out = local_search(&formula, &self.limits.local_search)?;
            flips = out.flips_used;
            if let Some(w) = out.witness {
                let bits: Vec<Option<bool>> = w.into_iter().map(Some).collect();
                let record = InstanceRecord {
                    n,
                    verdict: Verdict::Sat,
                    engine: Engine::LocalSearch,
                    nodes: 0,
                    flips,
                    wall_time: started.elapsed(),
                };
                return Ok(Solved { record, certificate: Some(self.certificate(n, &bits)?) });
            }
        }
        let formula = match self.kind {
            Kind::Vdw => formula,
            Kind::Pd => pd_middle_unit(formula, self.t0, self.t1, n),
        };
        let (verdict, nodes, witness) = self.dpll(&formula)?;
        let certificate = witness.map(|w| self.certificate(n, &w)).transpose()?;
        let record =
            InstanceRecord { n, verdict, engine: Engine::Dpll, nodes, flips, wall_time: started.elapsed() };
        Ok(Solved { record, certificate })
    }

    fn dpll(&self, formula: &CnfFormula) -> Result<(Verdict, u64, Option<Vec<Option<bool>>>)> {
        if self.limits.jobs > 1 {
            let level = (usize::BITS - self.limits.jobs.leading_zeros()) as usize + 3;
            let cubes = split(formula, level)?;
            let report = solve_cubes(formula, &cubes, self.limits.jobs, true, self.limits.max_nodes)?;
            let witness = report.witness().cloned();
            return Ok((report.verdict, report.total_nodes, witness));
        }
        let mut solver: Solver = Solver::new(formula)?;
        let limits = Limits { max_nodes: self.limits.max_nodes, max_time: self.time_left(), cancel: None };
        let r = solver.solve(&limits);
        let verdict = r.verdict();
        let nodes = r.stats.nodes;
        let witness = match r.outcome {
            Outcome::Sat(a) => Some(a),
            _ => None,
        };
        Ok((verdict, nodes, witness))
    }
}

fn default_start(kind: Kind, t0: usize, t1: usize) -> usize {
    let k = known_values();
    let anchor = match kind {
        Kind::Vdw => k.vdw(t0, t1).map(|e| e.value),
        Kind::Pd => k.pd(t0, t1).map(|e| e.p),
    };
    anchor.map_or(1, |a| a.saturating_sub(START_SLACK).max(1))
}

fn check_params(t0: usize, t1: usize) -> Result<()> {
    if t0 < 2 || t1 < t0 {
        return Err(Error::input(format!("expected 2 <= t0 <= t1, got t0 = {t0}, t1 = {t1}")));
    }
    Ok(())
}

/// Computes `w(2; t0, t1)`: the first `n` without a good partition, given
/// a good partition at `n - 1`.
///
/// Starts at `n_start` and walks up while instances are SAT, or down
/// while they are UNSAT, so only the boundary needs both verdicts. When a
/// budget runs out the result carries the best verified lower bound.
pub fn compute_vdw(t0: usize, t1: usize, strategy: Strategy, limits: &ComputeLimits) -> Result<VdwResult> {
    check_params(t0, t1)?;
    let ctx = Ctx { kind: Kind::Vdw, t0, t1, strategy, limits, started: Instant::now() };
    let mut result = VdwResult {
        t0,
        t1,
        value: None,
        lower: 1,
        witness: None,
        unsat_evidence: None,
        records: Vec::new(),
        wall_time: Duration::ZERO,
    };
    // Largest SAT n and smallest UNSAT n seen so far.
    let mut sat: Option<(usize, PartitionCertificate)> = None;
    let mut unsat: Option<InstanceRecord> = None;
    let mut n = limits.n_start.unwrap_or_else(|| default_start(Kind::Vdw, t0, t1));

    loop {
        if ctx.out_of_time() {
            break;
        }
        let solved = ctx.solve(n)?;
        let record = solved.record.clone();
        if n > 0 {
            result.records.push(record.clone());
        }
        match record.verdict {
            Verdict::Sat => {
                if let Some(u) = &unsat {
                    if n >= u.n {
                        return Err(Error::Soundness(format!("SAT at n = {n} above UNSAT at n = {}", u.n)));
                    }
                }
                sat = Some((n, solved.certificate.expect("SAT carries a certificate")));
            }
            Verdict::Unsat => {
                if let Some((s, _)) = &sat {
                    if n <= *s {
                        return Err(Error::Soundness(format!("UNSAT at n = {n} below SAT at n = {s}")));
                    }
                }
                unsat = Some(record.clone());
            }
            Verdict::Unknown => break,
        }
        match (&sat, &unsat) {
            (Some((s, _)), Some(u)) if s + 1 == u.n => break,
            (_, Some(u)) => n = u.n - 1,
            (Some((s, _)), None) => n = s + 1,
            (None, None) => unreachable!("a verdict was recorded"),
        }
    }

    if let Some((s, cert)) = sat {
        result.lower = s + 1;
        result.witness = Some(cert);
        if let Some(u) = unsat.filter(|u| u.n == s + 1) {
            result.value = Some(u.n);
            result.unsat_evidence = Some(u);
        }
    }
    result.wall_time = ctx.started.elapsed();
    Ok(result)
}

/// Computes `vdw_pd(2; t0, t1) = (p, q)`.
///
/// Palindromic satisfiability is monotone within each parity class (an
/// UNSAT `n` makes `n + 2` UNSAT), so each class is scanned for its first
/// UNSAT `u`; with `u_min < u_max`, `p = u_min - 1` and `q = u_max - 1`.
/// Odd sizes are solved first; `n` above `u` in the same class is recorded
/// as inferred UNSAT and never solved.
pub fn compute_pd(t0: usize, t1: usize, strategy: Strategy, limits: &ComputeLimits) -> Result<PdResult> {
    check_params(t0, t1)?;
    let ctx = Ctx { kind: Kind::Pd, t0, t1, strategy, limits, started: Instant::now() };
    let mut result = PdResult {
        t0,
        t1,
        number: None,
        profile: SatProfile::new(),
        witnesses: BTreeMap::new(),
        records: Vec::new(),
        wall_time: Duration::ZERO,
    };
    let start = limits.n_start.unwrap_or_else(|| default_start(Kind::Pd, t0, t1));
    let mut first_unsat = [None::<usize>; 2];

    for parity in [1usize, 0] {
        let mut n = if start % 2 == parity { start } else { start + 1 };
        let mut best_sat: Option<usize> = None;
        loop {
            if ctx.out_of_time() {
                break;
            }
            let solved = ctx.solve(n)?;
            let verdict = solved.record.verdict;
            if n > 0 {
                result.profile.insert(n, verdict);
                result.records.push(solved.record);
            }
            match verdict {
                Verdict::Sat => {
                    result.witnesses.insert(n, solved.certificate.expect("SAT carries a certificate"));
                    best_sat = Some(n);
                }
                Verdict::Unsat => {
                    if best_sat.is_some_and(|s| s > n) {
                        return Err(Error::Soundness(format!("pd UNSAT at n = {n} below a SAT n + 2i")));
                    }
                    let u = first_unsat[parity].map_or(n, |u: usize| u.min(n));
                    first_unsat[parity] = Some(u);
                }
                Verdict::Unknown => break,
            }
            match (best_sat, first_unsat[parity]) {
                (Some(s), Some(u)) if s + 2 == u => break,
                (_, Some(u)) if u < 2 => break,
                (_, Some(u)) => n = u - 2,
                (Some(s), None) => n = s + 2,
                (None, None) => unreachable!("a verdict was recorded"),
            }
        }
        let confirmed = match (best_sat, first_unsat[parity]) {
            (Some(s), Some(u)) => s + 2 == u,
            (None, Some(u)) => u < 2,
            _ => false,
        };
        if !confirmed {
            first_unsat[parity] = None;
        }
    }

    if let [Some(ue), Some(uo)] = first_unsat {
        let (lo, hi) = (ue.min(uo), ue.max(uo));
        let (p, q) = (lo - 1, hi - 1);
        // Unsolved sizes follow within their parity class: SAT below the
        // class's first UNSAT, UNSAT from it on.
        for n in 1..=hi {
            let u = if n % 2 == lo % 2 { lo } else { hi };
            result.profile.entry(n).or_insert(if n < u { Verdict::Sat } else { Verdict::Unsat });
        }
        let k = known_values();
        let gap = k.vdw(t0, t1).map(|w| Derived {
            value: w.value as i64 - q as i64,
            qualifier: match w.status {
                Status::Exact => Qualifier::Exact,
                Status::LowerBound => Qualifier::AtLeast,
            },
        });
        result.number = Some(PdNumber { p, q, gap });
        if !result.check_alternation() {
            return Err(Error::Soundness(format!("profile of vdw_pd(2;{t0},{t1}) does not alternate")));
        }
    }
    result.wall_time = ctx.started.elapsed();
    Ok(result)
}

/// What establishes `vdw_pd = (p, q)`: good palindromic partitions of
/// `p - 1` and `q - 1` vertices and UNSAT verdicts at `p + 1` and `q + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PdCertificateBundle {
    pub t0: usize,
    pub t1: usize,
    pub number: PdNumber,
    pub partitions: Vec<(usize, PartitionCertificate)>,
    pub unsat: Vec<InstanceRecord>,
}

/// Collects and re-verifies the pieces from a [`PdResult`].
pub fn certify_pd(result: &PdResult, t0: usize, t1: usize) -> Result<PdCertificateBundle> {
    let number = result.number.ok_or_else(|| Error::Incomplete("no (p, q) was established".into()))?;
    let mut partitions = Vec::new();
    for n in [number.p.checked_sub(1), number.q.checked_sub(1)].into_iter().flatten() {
        let cert = if n == 0 {
            PartitionCertificate::from_bits(vec![])
        } else {
            result
                .witnesses
                .get(&n)
                .cloned()
                .ok_or_else(|| Error::Incomplete(format!("no good palindromic partition for n = {n}")))?
        };
        if cert.len() != n || verify_good(&cert, t0, t1).is_err() || !cert.is_palindrome() {
            return Err(Error::Soundness(format!("stored partition for n = {n} does not verify")));
        }
        partitions.push((n, cert));
    }
    let mut unsat = Vec::new();
    for n in [number.p + 1, number.q + 1] {
        let rec = result
            .records
            .iter()
            .find(|r| r.n == n && r.verdict == Verdict::Unsat && r.engine == Engine::Dpll)
            .cloned()
            .ok_or_else(|| Error::Incomplete(format!("no UNSAT verdict recorded for n = {n}")))?;
        unsat.push(rec);
    }
    Ok(PdCertificateBundle { t0, t1, number, partitions, unsat })
}
