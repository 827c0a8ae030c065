//! Exhaustive ground truth for tests: every 2-colouring of `{1..n}` is
//! checked against every progression with plain bit masks. Deliberately
//! shares no code with the hypergraph, encoding or solver modules.

use serde::{Deserialize, Serialize};

use crate::certificate::PartitionCertificate;
use crate::error::{Error, Result};

/// Largest number of free bits enumerated (2^26 colourings).
pub const MAX_FREE_BITS: usize = 26;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleVerdict {
    pub satisfiable: bool,
    /// Number of good partitions (palindromic ones for [`enumerate_pd`]).
    pub count: u64,
    /// All good partitions in increasing bitstring order, if requested.
    pub witnesses: Option<Vec<PartitionCertificate>>,
}

/// Masks (bit `i` = vertex `i + 1`) of all `t`-term progressions in `1..=n`.
fn progression_masks(t: usize, n: usize) -> Vec<u64> {
    let mut masks = Vec::new();
    if t == 0 {
        return masks;
    }
    for a in 1..=n {
        if t == 1 {
            masks.push(1 << (a - 1));
            continue;
        }
        let mut d = 1;
        while a + (t - 1) * d <= n {
            let mut m = 0u64;
            for i in 0..t {
                m |= 1 << (a + i * d - 1);
            }
            masks.push(m);
            d += 1;
        }
    }
    masks
}

struct Scanner {
    zeros: Vec<u64>,
    ones: Vec<u64>,
}

impl Scanner {
    fn new(t0: usize, t1: usize, n: usize) -> Self {
        Scanner { zeros: progression_masks(t0, n), ones: progression_masks(t1, n) }
    }

    /// `x` has bit set for vertices in block 1.
    fn is_good(&self, x: u64) -> bool {
        self.ones.iter().all(|&m| x & m != m) && self.zeros.iter().all(|&m| !x & m != m)
    }
}

fn to_certificate(x: u64, n: usize) -> PartitionCertificate {
    PartitionCertificate::from_bits((0..n).map(|i| x >> i & 1 == 1).collect())
}

fn finish(mut found: Vec<PartitionCertificate>, count: u64, want: bool) -> OracleVerdict {
    found.sort_by(|a, b| a.bits().cmp(b.bits()));
    OracleVerdict { satisfiable: count > 0, count, witnesses: want.then_some(found) }
}

/// All good partitions of `{1..n}` with no `t0`-progression in block 0
/// and no `t1`-progression in block 1.
pub fn enumerate_partitions(t0: usize, t1: usize, n: usize, want_witnesses: bool) -> Result<OracleVerdict> {
    if n > MAX_FREE_BITS {
        return Err(Error::input(format!("oracle refuses n = {n} > {MAX_FREE_BITS}")));
    }
    let scanner = Scanner::new(t0, t1, n);
    let mut count = 0;
    let mut found = Vec::new();
    for x in 0..1u64 << n {
        if scanner.is_good(x) {
            count += 1;
            if want_witnesses {
                found.push(to_certificate(x, n));
            }
        }
    }
    Ok(finish(found, count, want_witnesses))
}

/// Good partitions of `{1..n}` invariant under `v -> n + 1 - v`, by
/// enumerating the first `ceil(n/2)` bits and mirroring them.
pub fn enumerate_pd(t0: usize, t1: usize, n: usize, want_witnesses: bool) -> Result<OracleVerdict> {
    let half = n.div_ceil(2);
    if half > MAX_FREE_BITS || n > 64 {
        return Err(Error::input(format!("oracle refuses palindromic n = {n}")));
    }
    let scanner = Scanner::new(t0, t1, n);
    let mut count = 0;
    let mut found = Vec::new();
    for h in 0..1u64 << half {
        let mut x = h;
        for i in 0..half {
            if h >> i & 1 == 1 {
                x |= 1 << (n - 1 - i);
            }
        }
        if scanner.is_good(x) {
            count += 1;
            if want_witnesses {
                found.push(to_certificate(x, n));
            }
        }
    }
    Ok(finish(found, count, want_witnesses))
}
