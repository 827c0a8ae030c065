//! Upward sweeps over `n`, each instance warm-started from the last
//! solution found.

use serde::{Deserialize, Serialize};

use super::{local_search, warm_start_pd, warm_start_vdw, LsConfig};
use crate::certificate::{verify_good, PartitionCertificate};
use crate::cnf::{encode_pd, encode_vdw, Kind};
use crate::error::{Error, Result};

/// When a campaign stops.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignBudget {
    /// Checked before each attempt; one attempt may overshoot by at most
    /// `runs * cutoff` flips.
    pub max_total_flips: u64,
    /// Attempts in a row without a solution.
    pub max_consecutive_failures: usize,
    pub n_max: Option<usize>,
}

impl Default for CampaignBudget {
    fn default() -> Self {
        CampaignBudget { max_total_flips: 10_000_000, max_consecutive_failures: 3, n_max: None }
    }
}

/// One attempt of a campaign.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignRow {
    pub n: usize,
    pub found: bool,
    pub flips: u64,
    /// Flips of the whole campaign up to and including this attempt.
    pub cumulative_flips: u64,
    pub seed: u64,
    pub certificate: Option<PartitionCertificate>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub kind: Kind,
    pub t0: usize,
    pub t1: usize,
    pub rows: Vec<CampaignRow>,
    /// Largest `n` with a good partition found, and that partition.
    pub best: Option<(usize, PartitionCertificate)>,
    pub total_flips: u64,
}

impl CampaignReport {
    /// `n_max + 1`: a good partition of `{1..n_max}` shows `w > n_max`
    /// (palindromic ones included).
    pub fn lower_bound(&self) -> Option<usize> {
        self.best.as_ref().map(|(n, _)| n + 1)
    }

    /// Campaign flips spent until `n` was first solved.
    pub fn flips_to_reach(&self, n: usize) -> Option<u64> {
        self.rows.iter().find(|r| r.found && r.n >= n).map(|r| r.cumulative_flips)
    }
}

/// Sweeps `n = n_start, n_start+1, ...` with local search.
///
/// Ordinary problems warm-start from the solution at `n - 1` and retry the
/// same `n` after a failure (with fresh seeds): a solution at `n + 1` would
/// restrict to one at `n`. Palindromic problems warm-start from the latest
/// solution of the same parity and move on after a failure, since the
/// other parity may still be solvable. The campaign stops after
/// `max_consecutive_failures` failed attempts, at `n_max`, or when the
/// flip budget is spent. `config.initial` is ignored.
pub fn run_campaign(
    kind: Kind,
    t0: usize,
    t1: usize,
    n_start: usize,
    config: &LsConfig,
    budget: &CampaignBudget,
) -> Result<CampaignReport> {
    config.validate()?;
    let mut report =
        CampaignReport { kind, t0, t1, rows: Vec::new(), best: None, total_flips: 0 };
    let mut n = n_start;
    let mut failures = 0usize;
    let mut attempt = 0u64;
    // Latest solution per parity of n (palindromic) or overall (ordinary).
    let mut last: [Option<(usize, PartitionCertificate)>; 2] = [None, None];

    while report.total_flips < budget.max_total_flips
        && failures < budget.max_consecutive_failures.max(1)
        && budget.n_max.is_none_or(|m| n <= m)
    {
        let (formula, initial) = match kind {
            Kind::Vdw => {
                let init = last[0].as_ref().filter(|(m, _)| m + 1 == n).map(|(_, c)| warm_start_vdw(c));
                (encode_vdw(t0, t1, n)?, init)
            }
            Kind::Pd => {
                let init = last[n % 2].as_ref().filter(|(m, _)| *m < n).map(|(m, c)| {
                    let mut half = c.half().to_vec();
                    for _ in 0..(n - m) / 2 {
                        half = warm_start_pd(&half);
                    }
                    half
                });
                (encode_pd(t0, t1, n)?, init)
            }
        };
        let seed = config.run_seed(u64::MAX - attempt);
        attempt += 1;
        let ls = LsConfig { initial, seed, ..config.clone() };
        let out = local_search(&formula, &ls)?;
        report.total_flips += out.flips_used;

        let certificate = match out.witness {
            Some(w) => {
                let cert = match kind {
                    Kind::Vdw => PartitionCertificate::from_bits(w),
                    Kind::Pd => PartitionCertificate::expand_half(&w, n)?,
                };
                if verify_good(&cert, t0, t1).is_err() || (kind == Kind::Pd && !cert.is_palindrome()) {
                    return Err(Error::Soundness(format!("campaign certificate for n = {n} does not verify")));
                }
                Some(cert)
            }
            None => None,
        };
        report.rows.push(CampaignRow {
            n,
            found: out.found,
            flips: out.flips_used,
            cumulative_flips: report.total_flips,
            seed,
            certificate: certificate.clone(),
        });
        match certificate {
            Some(cert) => {
                failures = 0;
                if report.best.as_ref().is_none_or(|(m, _)| n > *m) {
                    report.best = Some((n, cert.clone()));
                }
                let slot = if kind == Kind::Pd { n % 2 } else { 0 };
                last[slot] = Some((n, cert));
                n += 1;
            }
            None => {
                failures += 1;
                if kind == Kind::Pd {
                    n += 1;
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::local_search::Scheme;

    fn small() -> LsConfig {
        LsConfig { runs: 5, cutoff: 20_000, seed: 11, ..LsConfig::new(Scheme::GsatTabu) }
    }

    #[test]
    fn vdw_3_3_and_3_4() {
        let budget = CampaignBudget { max_total_flips: 1_000_000, max_consecutive_failures: 2, n_max: None };
        let r = run_campaign(Kind::Vdw, 3, 3, 1, &small(), &budget).unwrap();
        assert_eq!(r.lower_bound(), Some(9));
        assert_eq!(r.best.as_ref().unwrap().0, 8);
        let r = run_campaign(Kind::Vdw, 3, 4, 1, &small(), &budget).unwrap();
        assert_eq!(r.lower_bound(), Some(18));
        assert!(r.rows.iter().filter(|row| !row.found).all(|row| row.n == 18));
    }

    #[test]
    fn pd_3_5_alternation_reached() {
        let budget = CampaignBudget { max_total_flips: 2_000_000, max_consecutive_failures: 3, n_max: None };
        let r = run_campaign(Kind::Pd, 3, 5, 1, &small(), &budget).unwrap();
        // vdw_pd(2;3,5) = (16,21): 18 and 20 are the last solvable sizes.
        assert_eq!(r.best.as_ref().unwrap().0, 20);
        assert!(r.rows.iter().any(|row| row.n == 18 && row.found));
    }

    #[test]
    fn n_max_and_budget_stop() {
        let budget = CampaignBudget { max_total_flips: u64::MAX, max_consecutive_failures: 1, n_max: Some(5) };
        let r = run_campaign(Kind::Vdw, 3, 4, 1, &small(), &budget).unwrap();
        assert_eq!(r.rows.last().unwrap().n, 5);
        let budget = CampaignBudget { max_total_flips: 0, ..CampaignBudget::default() };
        assert!(run_campaign(Kind::Vdw, 3, 4, 1, &small(), &budget).unwrap().rows.is_empty());
    }
}
