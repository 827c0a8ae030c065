//! Partition certificates: bitstrings over `{0,1}` where position `i`
//! (1-based) carries 1 iff vertex `i` lies in block 1.
//!
//! Includes the compact run-length notation (`01^20^21^20`), goodness and
//! palindromicity checks, and pattern statistics.

mod compact;
pub mod conjectures;
pub mod fixtures;
mod stats;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use compact::{emit_compact, parse_compact};
pub use conjectures::{conjecture_checks, ConjectureReport};
pub use stats::{peaks_valleys, stats, CertificateStats};

/// A two-block partition of `1..=n` stored as its bitstring.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PartitionCertificate {
    bits: Vec<bool>,
}

impl PartitionCertificate {
    pub fn from_bits(bits: Vec<bool>) -> Self {
        PartitionCertificate { bits }
    }

    /// Parses a plain `0`/`1` string (whitespace ignored).
    pub fn from_bitstring(s: &str) -> Result<Self> {
        let mut bits = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '0' => bits.push(false),
                '1' => bits.push(true),
                c if c.is_whitespace() => {}
                c => return Err(Error::input(format!("unexpected character {c:?} in bitstring"))),
            }
        }
        Ok(PartitionCertificate { bits })
    }

    /// Palindromic expansion of the first `ceil(n/2)` bits.
    pub fn expand_half(half: &[bool], n: usize) -> Result<Self> {
        if half.len() != n.div_ceil(2) {
            return Err(Error::input(format!(
                "half of length {} does not match n = {n} (expected {})",
                half.len(),
                n.div_ceil(2)
            )));
        }
        let mut bits = half.to_vec();
        let mirrored = if n % 2 == 1 { &half[..half.len() - 1] } else { half };
        bits.extend(mirrored.iter().rev());
        Ok(PartitionCertificate { bits })
    }

    /// The first `ceil(n/2)` bits; inverse of [`Self::expand_half`] on
    /// palindromes.
    pub fn half(&self) -> &[bool] {
        &self.bits[..self.bits.len().div_ceil(2)]
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn into_bits(self) -> Vec<bool> {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Bit of vertex `v` (1-based).
    pub fn bit(&self, v: usize) -> bool {
        self.bits[v - 1]
    }

    pub fn prefix(&self, n: usize) -> Self {
        PartitionCertificate { bits: self.bits[..n.min(self.bits.len())].to_vec() }
    }

    /// Flips the bit of vertex `v` (1-based).
    pub fn flip(&mut self, v: usize) {
        self.bits[v - 1] = !self.bits[v - 1];
    }

    pub fn is_palindrome(&self) -> bool {
        is_palindrome(self)
    }

    pub fn to_compact(&self) -> String {
        emit_compact(self)
    }
}

impl fmt::Display for PartitionCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for PartitionCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PartitionCertificate({self})")
    }
}

impl std::str::FromStr for PartitionCertificate {
    type Err = Error;
    /// Accepts both plain bitstrings and compact notation.
    fn from_str(s: &str) -> Result<Self> {
        parse_compact(s)
    }
}

/// An arithmetic progression lying inside one block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub block: u8,
    pub start: usize,
    pub difference: usize,
    pub length: usize,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "block {} contains the progression a={} d={} of length {} (last vertex {})",
            self.block,
            self.start,
            self.difference,
            self.length,
            self.start + (self.length - 1) * self.difference
        )
    }
}

/// `Ok` iff block 0 has no progression of length `t0` and block 1 none of
/// length `t1`. Otherwise the violation with smallest `(start, difference)`.
pub fn verify_good(cert: &PartitionCertificate, t0: usize, t1: usize) -> Result<(), Violation> {
    let bits = cert.bits();
    let n = bits.len();
    for a in 1..=n {
        let b = bits[a - 1];
        let t = if b { t1 } else { t0 };
        if t == 0 {
            return Err(Violation { block: b as u8, start: a, difference: 1, length: 0 });
        }
        if t == 1 {
            return Err(Violation { block: b as u8, start: a, difference: 1, length: 1 });
        }
        let max_d = (n - a) / (t - 1);
        for d in 1..=max_d {
            if (1..t).all(|i| bits[a + i * d - 1] == b) {
                return Err(Violation { block: b as u8, start: a, difference: d, length: t });
            }
        }
    }
    Ok(())
}

/// True iff bit `i` equals bit `n + 1 - i` for all `i`.
pub fn is_palindrome(cert: &PartitionCertificate) -> bool {
    let b = cert.bits();
    b.iter().eq(b.iter().rev())
}
