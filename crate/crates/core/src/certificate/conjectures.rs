//! Empirical checks of the pattern conjectures over a set of good
//! partitions (typically all of them at `n = w(2;3,t) - 1`).

use serde::{Deserialize, Serialize};

use super::{stats, PartitionCertificate};
use crate::numbers::known_values;

/// Summary of the pattern quantities over a certificate set.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub t: usize,
    pub count: usize,
    pub min_n0: usize,
    pub max_n0: usize,
    /// `max |n0(B) - n0(B')| <= t`.
    pub zeros_spread_within_t: bool,
    pub max_n00: usize,
    /// `n00(B) < t` for every `B`.
    pub n00_below_t: bool,
    pub min_n1: usize,
    pub max_n1: usize,
    /// `w(2;3,t-1) + 2t`, when `w(2;3,t-1)` is in the reference table.
    pub n1_bound: Option<usize>,
    pub n1_within_bound: Option<bool>,
    /// Minimum over the set of peaks + valleys of the 1-exponent sequence.
    pub min_peaks_valleys: usize,
    /// A certificate attaining `min_peaks_valleys`.
    pub min_peaks_valleys_witness: Option<PartitionCertificate>,
    /// `min_peaks_valleys / t`.
    pub peaks_valleys_ratio: f64,
    /// Some 1-exponent sequence has at least 3 consecutive equal entries.
    pub has_triple_plateau: bool,
    pub longest_plateau: usize,
}

/// Evaluates the pattern quantities over `certs` for progression length `t`.
/// An empty set yields zeros and vacuously true checks.
pub fn conjecture_checks(certs: &[PartitionCertificate], t: usize) -> ConjectureReport {
    let all: Vec<_> = certs.iter().map(stats).collect();
    let min_n0 = all.iter().map(|s| s.n0).min().unwrap_or(0);
    let max_n0 = all.iter().map(|s| s.n0).max().unwrap_or(0);
    let max_n00 = all.iter().map(|s| s.n00).max().unwrap_or(0);
    let min_n1 = all.iter().map(|s| s.n1).min().unwrap_or(0);
    let max_n1 = all.iter().map(|s| s.n1).max().unwrap_or(0);
    let best = all.iter().enumerate().min_by_key(|(_, s)| s.peaks_valleys1());
    let min_pv = best.map(|(_, s)| s.peaks_valleys1()).unwrap_or(0);
    let longest_plateau = all.iter().map(|s| s.max_plateau1).max().unwrap_or(0);
    let n1_bound = t
        .checked_sub(1)
        .and_then(|prev| known_values().vdw_exact(3, prev))
        .map(|w| w + 2 * t);
    ConjectureReport {
        t,
        count: certs.len(),
        min_n0,
        max_n0,
        zeros_spread_within_t: max_n0 - min_n0 <= t,
        max_n00,
        n00_below_t: all.is_empty() || max_n00 < t,
        min_n1,
        max_n1,
        n1_bound,
        n1_within_bound: n1_bound.map(|b| max_n1 <= b),
        min_peaks_valleys: min_pv,
        min_peaks_valleys_witness: best.map(|(i, _)| certs[i].clone()),
        peaks_valleys_ratio: if t == 0 { 0.0 } else { min_pv as f64 / t as f64 },
        has_triple_plateau: longest_plateau >= 3,
        longest_plateau,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::parse_compact;

    #[test]
    fn four_equal_exponents_detected() {
        let c = parse_compact("1^101^1001^101^1").unwrap();
        let r = conjecture_checks(&[c], 3);
        assert!(r.has_triple_plateau);
        assert_eq!(r.longest_plateau, 4);
    }

    #[test]
    fn empty_set() {
        let r = conjecture_checks(&[], 5);
        assert_eq!(r.count, 0);
        assert!(r.zeros_spread_within_t && r.n00_below_t);
        assert_eq!(r.min_peaks_valleys_witness, None);
    }

    #[test]
    fn bound_uses_reference_value() {
        let c = parse_compact("1^2001^200").unwrap();
        let r = conjecture_checks(&[c], 4);
        // w(2;3,3) = 9.
        assert_eq!(r.n1_bound, Some(17));
        assert_eq!(r.n1_within_bound, Some(true));
    }
}
