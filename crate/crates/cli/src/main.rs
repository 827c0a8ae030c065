//! `vdw`: generate, solve, split, verify and analyse van der Waerden
//! instances and certificates, and compute the numbers.
//!
//! Exit codes: 10 SAT, 20 UNSAT, 30 UNKNOWN (incomplete result),
//! 3 certificate rejected, 1 usage or input error, 2 soundness failure.

mod output;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant, SystemTime, UNIX_EPOCH};

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};

use output::Record;
use vdw_core::certificate::{conjecture_checks, parse_compact, stats, verify_good};
use vdw_core::cnf::{
    assignment_to_partition, cnf_file_name, emit_dimacs, encode_pd, encode_vdw, parse_dimacs, pd_middle_unit,
    Kind,
};
use vdw_core::dpll::{
    emit_cubes, parse_cubes, solve_cubes, split, Checkpoint, Limits, Outcome, SearchState, Verdict,
};
use vdw_core::local_search::{local_search, run_campaign, CampaignBudget, LsConfig, Scheme};
use vdw_core::numbers::{
    certify_pd, check_growth_bounds, compute_pd, compute_vdw, known_values, ComputeLimits, Strategy,
};
use vdw_core::{CnfFormula, DpllSolver, Error, PartitionCertificate};

const EXIT_SAT: u8 = 10;
const EXIT_UNSAT: u8 = 20;
const EXIT_UNKNOWN: u8 = 30;
const EXIT_REJECTED: u8 = 3;
const EXIT_USAGE: u8 = 1;
const EXIT_SOUNDNESS: u8 = 2;

#[derive(Parser)]
#[command(name = "vdw", version, about = "Van der Waerden numbers w(2;t0,t1) via SAT")]
struct Cli {
    /// Print one JSON object instead of key=value lines.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

/// An instance given by its parameters.
#[derive(Args, Clone, Copy)]
struct Instance {
    /// vdw (ordinary) or pd (palindromic).
    kind: Kind,
    t0: usize,
    t1: usize,
    n: usize,
}

impl Instance {
    fn encode(&self, middle_unit: bool) -> vdw_core::Result<CnfFormula> {
        Ok(match self.kind {
            Kind::Vdw => encode_vdw(self.t0, self.t1, self.n)?,
            Kind::Pd if middle_unit => pd_middle_unit(encode_pd(self.t0, self.t1, self.n)?, self.t0, self.t1, self.n),
            Kind::Pd => encode_pd(self.t0, self.t1, self.n)?,
        })
    }

    /// Recovers the parameters from the generator comment of a DIMACS file.
    fn from_comments(formula: &CnfFormula) -> Option<Instance> {
        formula.comments.iter().find_map(|c| {
            let rest = c.strip_prefix("generator=")?;
            let mut it = rest.split_whitespace();
            let kind = match it.next()? {
                "encode_vdw" => Kind::Vdw,
                "encode_pd" => Kind::Pd,
                _ => return None,
            };
            let mut get = |key: &str| it.next()?.strip_prefix(key)?.parse().ok();
            Some(Instance { kind, t0: get("t0=")?, t1: get("t1=")?, n: get("n=")? })
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum EngineArg {
    Dpll,
    GsatTabu,
    Walksat,
}

#[derive(Args)]
struct LsArgs {
    /// Independent local-search runs.
    #[arg(long, default_value_t = 10)]
    runs: u64,
    /// Flips per run.
    #[arg(long, default_value_t = 100_000)]
    cutoff: u64,
    /// Random seed; a fresh one is drawn and printed if omitted.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value_t = 10)]
    tabu_tenure: usize,
    #[arg(long, default_value_t = 0.4)]
    noise: f64,
}

impl LsArgs {
    fn config(&self, scheme: Scheme, jobs: usize) -> LsConfig {
        LsConfig {
            scheme,
            runs: self.runs,
            cutoff: self.cutoff,
            seed: self.seed.unwrap_or_else(fresh_seed),
            tabu_tenure: self.tabu_tenure,
            noise: self.noise,
            initial: None,
            jobs,
        }
    }
}

fn fresh_seed() -> u64 {
    SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_nanos() as u64)
}

#[derive(Subcommand)]
enum Command {
    /// Write the DIMACS encoding of an instance.
    Generate {
        #[command(flatten)]
        instance: Instance,
        /// Output path; `-` for stdout. Defaults to the conventional name.
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Add the middle-vertex unit clause (palindromic, odd n, t0 = 3).
        #[arg(long)]
        middle_unit: bool,
    },
    /// Decide an instance given by parameters or a DIMACS file.
    Solve {
        #[arg(required_unless_present = "file", num_args = 4, value_names = ["KIND", "T0", "T1", "N"])]
        params: Vec<String>,
        #[arg(long, conflicts_with = "params")]
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "dpll")]
        engine: EngineArg,
        #[arg(long)]
        max_nodes: Option<u64>,
        /// Seconds.
        #[arg(long)]
        time_limit: Option<f64>,
        /// Solve every cube of this file (DPLL).
        #[arg(long)]
        cubes: Option<PathBuf>,
        /// Where to save the search state when the limits are hit (DPLL).
        #[arg(long, conflicts_with = "cubes")]
        checkpoint: Option<PathBuf>,
        /// Continue from a saved state (DPLL).
        #[arg(long, conflicts_with = "cubes")]
        resume: Option<PathBuf>,
        /// Skip the middle-vertex unit clause for palindromic instances.
        #[arg(long)]
        no_middle_unit: bool,
        #[command(flatten)]
        ls: LsArgs,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Split an instance into the cubes of the depth-`level` frontier.
    Split {
        #[command(flatten)]
        instance: Instance,
        #[arg(long)]
        level: usize,
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Write `a <lits> 0` lines.
        #[arg(long)]
        icnf: bool,
    },
    /// Check a certificate file (compact notation or plain 01 string).
    Verify {
        file: PathBuf,
        t0: usize,
        t1: usize,
        /// The file holds the first ceil(n/2) bits of a palindrome.
        #[arg(long, requires = "n")]
        half: bool,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        expect_palindrome: bool,
    },
    /// Pattern statistics of a certificate.
    Stats {
        file: PathBuf,
        #[arg(long, requires = "n")]
        half: bool,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Compute w(2;t0,t1) or vdw_pd(2;t0,t1).
    Compute {
        kind: Kind,
        t0: usize,
        t1: usize,
        #[arg(long, default_value = "hybrid")]
        strategy: Strategy,
        /// Node budget per DPLL call.
        #[arg(long)]
        max_nodes: Option<u64>,
        /// Seconds for the whole scan.
        #[arg(long)]
        time_limit: Option<f64>,
        #[arg(long)]
        n_start: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Sweep n upwards with warm-started local search.
    Campaign {
        kind: Kind,
        t0: usize,
        t1: usize,
        #[arg(long, default_value_t = 1)]
        n_start: usize,
        #[arg(long, value_enum, default_value = "gsat-tabu")]
        engine: EngineArg,
        #[arg(long, default_value_t = 10_000_000)]
        max_flips: u64,
        #[arg(long, default_value_t = 3)]
        max_failures: usize,
        #[arg(long)]
        n_max: Option<usize>,
        #[command(flatten)]
        ls: LsArgs,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Print the reference values.
    Known {
        /// Restrict to one t.
        t: Option<usize>,
    },
    /// Check the reference values against the growth bounds.
    Growth,
    /// Pattern checks over all good partitions of {1..w(2;3,t)-1}.
    Patterns { t: usize },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            let soundness = e.chain().any(|c| matches!(c.downcast_ref::<Error>(), Some(Error::Soundness(_))));
            ExitCode::from(if soundness { EXIT_SOUNDNESS } else { EXIT_USAGE })
        }
    }
}

fn verdict_code(v: Verdict) -> u8 {
    match v {
        Verdict::Sat => EXIT_SAT,
        Verdict::Unsat => EXIT_UNSAT,
        Verdict::Unknown => EXIT_UNKNOWN,
    }
}

fn seconds(s: Option<f64>) -> anyhow::Result<Option<Duration>> {
    s.map(|x| Duration::try_from_secs_f64(x).context("time limit must be a non-negative number of seconds"))
        .transpose()
}

fn read(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn write_out(path: &Path, text: &str) -> anyhow::Result<()> {
    if path == Path::new("-") {
        print!("{text}");
        Ok(())
    } else {
        std::fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
    }
}

fn load_certificate(file: &Path, half: bool, n: Option<usize>) -> anyhow::Result<PartitionCertificate> {
    let cert = parse_compact(&read(file)?).with_context(|| format!("in {}", file.display()))?;
    match (half, n) {
        (true, Some(n)) => Ok(PartitionCertificate::expand_half(cert.bits(), n)?),
        (false, Some(n)) if n != cert.len() => {
            bail!("certificate has {} bits, expected n = {n}", cert.len())
        }
        _ => Ok(cert),
    }
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    let json = cli.json;
    match cli.command {
        Command::Generate { instance, out, middle_unit } => {
            let f = instance.encode(middle_unit)?;
            let path = out.unwrap_or_else(|| {
                PathBuf::from(cnf_file_name(instance.kind, instance.t0, instance.t1, instance.n))
            });
            write_out(&path, &emit_dimacs(&f))?;
            if path != Path::new("-") {
                let mut r = Record::new("generate");
                r.put("kind", instance.kind.to_string())
                    .put("t0", instance.t0)
                    .put("t1", instance.t1)
                    .put("n", instance.n)
                    .put("variables", f.num_vars)
                    .put("clauses", f.num_clauses())
                    .put("file", path.display().to_string());
                r.print(json);
            }
            Ok(0)
        }
        Command::Solve {
            params,
            file,
            engine,
            max_nodes,
            time_limit,
            cubes,
            checkpoint,
            resume,
            no_middle_unit,
            ls,
            jobs,
        } => {
            let (formula, instance) = match file {
                Some(path) => {
                    let f = parse_dimacs(&read(&path)?).with_context(|| format!("in {}", path.display()))?;
                    let inst = Instance::from_comments(&f);
                    (f, inst)
                }
                None => {
                    let kind: Kind = params[0].parse()?;
                    let num = |s: &str| s.parse::<usize>().with_context(|| format!("bad number {s:?}"));
                    let inst = Instance { kind, t0: num(&params[1])?, t1: num(&params[2])?, n: num(&params[3])? };
                    (inst.encode(!no_middle_unit)?, Some(inst))
                }
            };
            let mut r = Record::new("solve");
            if let Some(i) = instance {
                r.put("kind", i.kind.to_string()).put("t0", i.t0).put("t1", i.t1).put("n", i.n);
            }
            r.put("variables", formula.num_vars).put("clauses", formula.num_clauses());
            let time = seconds(time_limit)?;
            let started = Instant::now();

            let (verdict, witness): (Verdict, Option<Vec<Option<bool>>>) = match engine {
                EngineArg::GsatTabu | EngineArg::Walksat => {
                    let scheme = if engine == EngineArg::GsatTabu { Scheme::GsatTabu } else { Scheme::WalkSat };
                    let cfg = ls.config(scheme, jobs);
                    r.put("engine", scheme.to_string()).put("seed", cfg.seed).put("runs", cfg.runs).put("cutoff", cfg.cutoff);
                    let out = local_search(&formula, &cfg)?;
                    r.put("flips", out.flips_used).put("runs_used", out.runs_used).put("best_unsat", out.best_unsat);
                    match out.witness {
                        Some(w) => (Verdict::Sat, Some(w.into_iter().map(Some).collect())),
                        None => (Verdict::Unknown, None),
                    }
                }
                EngineArg::Dpll => {
                    r.put("engine", "dpll");
                    if let Some(path) = cubes {
                        let cs = parse_cubes(&read(&path)?).with_context(|| format!("in {}", path.display()))?;
                        let report = solve_cubes(&formula, &cs, jobs, true, max_nodes)?;
                        r.put("cubes", cs.len()).put("nodes", report.total_nodes);
                        let per: Vec<String> = report.results.iter().map(|c| c.verdict.to_string()).collect();
                        r.put("cube_verdicts", per.join(","));
                        let nodes: Vec<String> = report.results.iter().map(|c| c.nodes.to_string()).collect();
                        r.put("cube_nodes", nodes.join(","));
                        (report.verdict, report.witness().cloned())
                    } else {
                        let mut solver = DpllSolver::new(&formula)?;
                        let limits = Limits { max_nodes, max_time: time, cancel: None };
                        let result = match &resume {
                            Some(path) => {
                                let cp = Checkpoint::parse(&read(path)?)?;
                                cp.check_formula(&formula)?;
                                r.put("resumed_from", path.display().to_string());
                                solver.resume_under(&cp.assumptions, &cp.state, &limits)?
                            }
                            None => solver.solve(&limits),
                        };
                        r.put("nodes", result.stats.nodes)
                            .put("propagations", result.stats.propagations)
                            .put("max_depth", result.stats.max_depth);
                        match result.outcome {
                            Outcome::Sat(a) => (Verdict::Sat, Some(a)),
                            Outcome::Unsat => (Verdict::Unsat, None),
                            Outcome::Indeterminate(state) => {
                                if let Some(path) = &checkpoint {
                                    save_checkpoint(path, &formula, state)?;
                                    r.put("checkpoint", path.display().to_string());
                                }
                                (Verdict::Unknown, None)
                            }
                        }
                    }
                }
            };
            r.put("verdict", verdict.to_string()).put("wall_time_s", started.elapsed().as_secs_f64());
            if let Some(w) = &witness {
                let total: Vec<bool> = w.iter().map(|b| b.unwrap_or(false)).collect();
                if !formula.is_satisfied_by(&total) {
                    return Err(Error::Soundness("reported model does not satisfy the formula".into()).into());
                }
                match instance {
                    Some(i) => {
                        let cert = assignment_to_partition(w, i.n, i.kind == Kind::Pd);
                        if verify_good(&cert, i.t0, i.t1).is_err() {
                            return Err(Error::Soundness("certificate from the model does not verify".into()).into());
                        }
                        r.put("certificate", cert.to_compact());
                    }
                    None => {
                        let lits: Vec<String> = total
                            .iter()
                            .enumerate()
                            .map(|(i, &b)| if b { format!("{}", i + 1) } else { format!("-{}", i + 1) })
                            .collect();
                        r.put("model", lits.join(" "));
                    }
                }
            }
            r.print(json);
            Ok(verdict_code(verdict))
        }
        Command::Split { instance, level, out, icnf } => {
            let f = instance.encode(true)?;
            let cubes = split(&f, level)?;
            let style = if icnf { vdw_core::dpll::CubeStyle::Icnf } else { vdw_core::dpll::CubeStyle::Plain };
            let text = emit_cubes(&cubes, style);
            let mut r = Record::new("split");
            r.put("kind", instance.kind.to_string())
                .put("t0", instance.t0)
                .put("t1", instance.t1)
                .put("n", instance.n)
                .put("level", level)
                .put("cubes", cubes.len());
            match out {
                Some(path) if path != Path::new("-") => {
                    write_out(&path, &text)?;
                    r.put("file", path.display().to_string());
                    r.print(json);
                }
                _ => print!("{text}"),
            }
            Ok(0)
        }
        Command::Verify { file, t0, t1, half, n, expect_palindrome } => {
            let cert = load_certificate(&file, half, n)?;
            let mut r = Record::new("verify");
            r.put("file", file.display().to_string()).put("t0", t0).put("t1", t1).put("n", cert.len());
            let palindrome = cert.is_palindrome();
            r.put("palindrome", palindrome);
            let mut ok = true;
            match verify_good(&cert, t0, t1) {
                Ok(()) => {
                    r.put("good", true);
                }
                Err(v) => {
                    ok = false;
                    r.put("good", false)
                        .put("violation_block", v.block)
                        .put("violation_start", v.start)
                        .put("violation_difference", v.difference)
                        .put("violation_length", v.length);
                }
            }
            if expect_palindrome && !palindrome {
                ok = false;
            }
            r.put("result", if ok { "OK" } else { "REJECTED" });
            r.print(json);
            Ok(if ok { 0 } else { EXIT_REJECTED })
        }
        Command::Stats { file, half, n } => {
            let cert = load_certificate(&file, half, n)?;
            let s = stats(&cert);
            let mut r = Record::new("stats");
            r.put("file", file.display().to_string())
                .put("n", s.n)
                .put("n0", s.n0)
                .put("n1", s.n1)
                .put("n00", s.n00)
                .put("runs0", s.runs0)
                .put("runs1", s.runs1)
                .put("long_runs0", s.long_runs0)
                .put("long_runs1", s.long_runs1)
                .put("peaks_valleys0", s.peaks_valleys0())
                .put("peaks_valleys1", s.peaks_valleys1())
                .put("max_plateau0", s.max_plateau0)
                .put("max_plateau1", s.max_plateau1)
                .put("quintuple", s.quintuple());
            r.print(json);
            Ok(0)
        }
        Command::Compute { kind, t0, t1, strategy, max_nodes, time_limit, n_start, seed, jobs } => {
            let mut limits = ComputeLimits { max_nodes, max_time: seconds(time_limit)?, n_start, jobs, ..Default::default() };
            limits.local_search.seed = seed.unwrap_or_else(fresh_seed);
            let mut r = Record::new("compute");
            r.put("kind", kind.to_string())
                .put("t0", t0)
                .put("t1", t1)
                .put("strategy", strategy.to_string())
                .put("seed", limits.local_search.seed);
            let code = match kind {
                Kind::Vdw => {
                    let res = compute_vdw(t0, t1, strategy, &limits)?;
                    match res.value {
                        Some(w) => r.put("value", w).put("result", w.to_string()),
                        None => r.put("lower", res.lower).put("result", format!("[{},?]", res.lower)),
                    };
                    if let Some(c) = &res.witness {
                        r.put("witness_n", c.len()).put("witness", c.to_compact());
                    }
                    let nodes: u64 = res.records.iter().map(|x| x.nodes).sum();
                    let flips: u64 = res.records.iter().map(|x| x.flips).sum();
                    r.put("instances", res.records.len()).put("nodes", nodes).put("flips", flips);
                    r.put("wall_time_s", res.wall_time.as_secs_f64());
                    if res.value.is_some() { 0 } else { EXIT_UNKNOWN }
                }
                Kind::Pd => {
                    let res = compute_pd(t0, t1, strategy, &limits)?;
                    let profile: Vec<String> = res
                        .profile
                        .iter()
                        .map(|(n, v)| format!("{n}:{}", if *v == Verdict::Sat { 1 } else if *v == Verdict::Unsat { 0 } else { 2 }))
                        .collect();
                    match res.number {
                        Some(num) => {
                            r.put("p", num.p)
                                .put("q", num.q)
                                .put("result", format!("({},{})", num.p, num.q))
                                .put("span", num.span())
                                .put("gap", num.gap.map(|g| g.to_string()))
                                .put("alternation", res.check_alternation());
                            let bundle = certify_pd(&res, t0, t1)?;
                            for (n, c) in &bundle.partitions {
                                r.put(&format!("certificate_{n}"), c.to_compact());
                            }
                        }
                        None => {
                            r.put("result", "UNKNOWN");
                        }
                    }
                    r.put("profile", profile.join(" ")).put("wall_time_s", res.wall_time.as_secs_f64());
                    if res.number.is_some() { 0 } else { EXIT_UNKNOWN }
                }
            };
            r.print(json);
            Ok(code)
        }
        Command::Campaign { kind, t0, t1, n_start, engine, max_flips, max_failures, n_max, ls, jobs } => {
            let scheme = match engine {
                EngineArg::Walksat => Scheme::WalkSat,
                EngineArg::GsatTabu => Scheme::GsatTabu,
                EngineArg::Dpll => bail!("campaigns use local search (gsat-tabu or walksat)"),
            };
            let cfg = ls.config(scheme, jobs);
            let budget = CampaignBudget { max_total_flips: max_flips, max_consecutive_failures: max_failures, n_max };
            let report = run_campaign(kind, t0, t1, n_start, &cfg, &budget)?;
            if !json {
                for row in &report.rows {
                    let cert = row.certificate.as_ref().map_or_else(|| "-".to_string(), |c| c.to_compact());
                    let verdict = if row.found { "SAT" } else { "UNKNOWN" };
                    println!("n={} verdict={verdict} flips={} certificate={cert}", row.n, row.flips);
                }
            }
            let mut r = Record::new("campaign");
            r.put("kind", kind.to_string())
                .put("t0", t0)
                .put("t1", t1)
                .put("engine", scheme.to_string())
                .put("seed", cfg.seed)
                .put("attempts", report.rows.len())
                .put("total_flips", report.total_flips)
                .put("best_n", report.best.as_ref().map(|b| b.0))
                .put("lower_bound", report.lower_bound())
                .put("certificate", report.best.as_ref().map(|b| b.1.to_compact()));
            r.print(json);
            Ok(0)
        }
        Command::Known { t } => {
            let k = known_values();
            let ts: Vec<usize> = match t {
                Some(t) => vec![t],
                None => k.vdw.iter().map(|e| e.t).collect(),
            };
            let mut rows = Vec::new();
            for t in ts {
                let w = k.vdw(3, t);
                let pd = k.pd(3, t);
                if w.is_none() && pd.is_none() {
                    bail!("no reference value for t = {t}");
                }
                let mut r = Record::new("known");
                r.put("t", t)
                    .put("w", w.map(|e| e.value))
                    .put("w_status", w.map(|e| e.status))
                    .put("p", pd.map(|e| e.p))
                    .put("q", pd.map(|e| e.q))
                    .put("pd_status", pd.map(|e| e.status))
                    .put("span", k.span(3, t).map(|d| d.to_string()))
                    .put("gap", k.gap(3, t).map(|d| d.to_string()));
                rows.push(r);
            }
            for r in rows {
                r.print(json);
            }
            Ok(0)
        }
        Command::Growth => {
            let report = check_growth_bounds(&known_values().vdw);
            for row in &report.rows {
                let mut r = Record::new("growth");
                r.put("t", row.t)
                    .put("w", row.w)
                    .put("status", row.status)
                    .put("exceeds_t_squared", row.exceeds_t_squared)
                    .put("within_bound", row.within_bound)
                    .put("difference", row.difference);
                r.print(json);
            }
            let mut r = Record::new("growth-summary");
            r.put("square_bound_violations", report.square_bound_violations())
                .put("all_within_bound", report.all_within_bound());
            r.print(json);
            Ok(0)
        }
        Command::Patterns { t } => {
            let w = known_values()
                .vdw_exact(3, t)
                .with_context(|| format!("w(2;3,{t}) is not known exactly"))?;
            let f = encode_vdw(3, t, w - 1)?;
            let certs: Vec<PartitionCertificate> = vdw_core::dpll::dpll_enumerate(&f)?
                .into_iter()
                .map(PartitionCertificate::from_bits)
                .collect();
            let c = conjecture_checks(&certs, t);
            let mut r = Record::new("patterns");
            r.put("t", t)
                .put("n", w - 1)
                .put("count", c.count)
                .put("min_n0", c.min_n0)
                .put("max_n0", c.max_n0)
                .put("max_n00", c.max_n00)
                .put("min_n1", c.min_n1)
                .put("max_n1", c.max_n1)
                .put("min_peaks_valleys", c.min_peaks_valleys)
                .put("zeros_spread_within_t", c.zeros_spread_within_t)
                .put("n00_below_t", c.n00_below_t)
                .put("n1_within_bound", c.n1_within_bound)
                .put("has_triple_plateau", c.has_triple_plateau);
            r.print(json);
            Ok(0)
        }
    }
}

fn save_checkpoint(path: &Path, formula: &CnfFormula, state: SearchState) -> anyhow::Result<()> {
    let cp = Checkpoint::new(formula, Vec::new(), state);
    std::fs::write(path, cp.to_text()).with_context(|| format!("cannot write {}", path.display()))
}
