//! Pattern statistics of a partition bitstring.

use serde::{Deserialize, Serialize};

use super::compact::runs;
use super::PartitionCertificate;

/// Counts and run-exponent sequences of a certificate.
///
/// `n00` counts adjacent `00` pairs lying strictly inside the string (the
/// pair touches neither the first nor the last position). `long_runs0` and
/// `long_runs1` count maximal runs of length at least 2, ends included.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateStats {
    pub n: usize,
    pub n0: usize,
    pub n1: usize,
    pub n00: usize,
    /// Lengths of the maximal 0-runs, left to right.
    pub epos0: Vec<usize>,
    /// Lengths of the maximal 1-runs, left to right.
    pub epos1: Vec<usize>,
    pub runs0: usize,
    pub runs1: usize,
    pub long_runs0: usize,
    pub long_runs1: usize,
    pub peaks0: usize,
    pub valleys0: usize,
    pub peaks1: usize,
    pub valleys1: usize,
    pub max_plateau0: usize,
    pub max_plateau1: usize,
}

impl CertificateStats {
    pub fn peaks_valleys0(&self) -> usize {
        self.peaks0 + self.valleys0
    }

    pub fn peaks_valleys1(&self) -> usize {
        self.peaks1 + self.valleys1
    }

    /// The five pairs `[n0, n1]`, `[runs0, runs1]`,
    /// `[long_runs0, long_runs1]`, `[pv0, pv1]`, `[plateau0, plateau1]`.
    pub fn quintuple(&self) -> [[usize; 2]; 5] {
        [
            [self.n0, self.n1],
            [self.runs0, self.runs1],
            [self.long_runs0, self.long_runs1],
            [self.peaks_valleys0(), self.peaks_valleys1()],
            [self.max_plateau0, self.max_plateau1],
        ]
    }
}

/// Computes all statistics of `cert`.
pub fn stats(cert: &PartitionCertificate) -> CertificateStats {
    let bits = cert.bits();
    let n = bits.len();
    let n1 = bits.iter().filter(|&&b| b).count();
    let n00 = if n >= 4 {
        bits[1..n - 1].windows(2).filter(|w| !w[0] && !w[1]).count()
    } else {
        0
    };
    let r = runs(bits);
    let epos0: Vec<usize> = r.iter().filter(|(b, _)| !b).map(|&(_, l)| l).collect();
    let epos1: Vec<usize> = r.iter().filter(|(b, _)| *b).map(|&(_, l)| l).collect();
    let (peaks0, valleys0) = peaks_valleys(&epos0);
    let (peaks1, valleys1) = peaks_valleys(&epos1);
    CertificateStats {
        n,
        n0: n - n1,
        n1,
        n00,
        runs0: epos0.len(),
        runs1: epos1.len(),
        long_runs0: epos0.iter().filter(|&&l| l >= 2).count(),
        long_runs1: epos1.iter().filter(|&&l| l >= 2).count(),
        peaks0,
        valleys0,
        peaks1,
        valleys1,
        max_plateau0: max_plateau(&epos0),
        max_plateau1: max_plateau(&epos1),
        epos0,
        epos1,
    }
}

/// `(peaks, valleys)` of a sequence after collapsing plateaus (runs of equal
/// adjacent values) to single entries. Interior entries count when strictly
/// above or below both neighbours; an end entry is a peak when above its
/// neighbour and a valley otherwise. A constant non-empty sequence has one
/// peak and no valley.
pub fn peaks_valleys(seq: &[usize]) -> (usize, usize) {
    let mut c: Vec<usize> = seq.to_vec();
    c.dedup();
    match c.len() {
        0 => return (0, 0),
        1 => return (1, 0),
        _ => {}
    }
    let (mut peaks, mut valleys) = (0, 0);
    let mut tally = |peak: bool| if peak { peaks += 1 } else { valleys += 1 };
    let m = c.len();
    tally(c[0] > c[1]);
    for w in c.windows(3) {
        if w[1] > w[0] && w[1] > w[2] {
            tally(true);
        } else if w[1] < w[0] && w[1] < w[2] {
            tally(false);
        }
    }
    tally(c[m - 1] > c[m - 2]);
    (peaks, valleys)
}

/// Length of the longest run of equal adjacent values.
fn max_plateau(seq: &[usize]) -> usize {
    let mut best = 0;
    let mut cur = 0;
    for (i, &x) in seq.iter().enumerate() {
        cur = if i > 0 && seq[i - 1] == x { cur + 1 } else { 1 };
        best = best.max(cur);
    }
    best
}
