//! Reference certificates shipped with the crate (see `data/manifest.txt`).

use super::{parse_compact, PartitionCertificate};
use crate::cnf::Kind;
use crate::error::{Error, Result};

macro_rules! data_files {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../../data/", $name)))),*]
    };
}

static MANIFEST: &str = include_str!("../../data/manifest.txt");

static FILES: &[(&str, &str)] = data_files![
    "vdw_3-19.txt",
    "vdw_3-20.txt",
    "vdw_3-21.txt",
    "vdw_3-22.txt",
    "vdw_3-23.txt",
    "vdw_3-24.txt",
    "vdw_3-25.txt",
    "vdw_3-26.txt",
    "vdw_3-27.txt",
    "vdw_3-28.txt",
    "vdw_3-29.txt",
    "vdw_3-30.txt",
    "vdw_3-31.txt",
    "vdw_3-32.txt",
    "vdw_3-33.txt",
    "vdw_3-34.txt",
    "vdw_3-35.txt",
    "vdw_3-36.txt",
    "vdw_3-37.txt",
    "vdw_3-38.txt",
    "vdw_3-39.txt",
    "pd_3-34_1053_half.zeros",
    "pd_3-34_1080_half.txt",
    "pd_3-3_5_half.txt",
    "pd_3-3_8_half.txt",
    "pd_3-4_14_half.txt",
    "pd_3-4_15_half.txt",
    "pd_3-5_15_half.txt",
    "pd_3-5_20_half.txt",
    "pd_3-6_29_half.txt",
    "pd_3-6_30_half.txt",
    "pd_3-7_40_half.txt",
    "pd_3-7_43_half.txt",
    "pd_3-8_51_half.txt",
    "pd_3-8_56_half.txt",
    "pd_3-9_61_half.txt",
    "pd_3-9_76_half.txt",
    "pd_3-10_92_half.txt",
    "pd_3-10_93_half.txt",
];

/// How a fixture file encodes its partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixtureForm {
    /// Compact notation of the whole bitstring.
    Compact,
    /// Compact notation of the first `ceil(n/2)` bits of a palindrome.
    CompactHalf,
    /// Comma-separated 0-positions within the first `ceil(n/2)` bits.
    ZerosHalf,
}

/// One manifest entry together with its file contents.
#[derive(Debug, Clone)]
pub struct Fixture {
    pub file: &'static str,
    pub kind: Kind,
    pub t0: usize,
    pub t1: usize,
    /// Length the certificate is claimed to certify.
    pub n: usize,
    pub form: FixtureForm,
    /// The printed string carries one bit beyond `n`.
    pub extra_bit: bool,
    /// Produced by this crate rather than transcribed.
    pub generated: bool,
    pub text: &'static str,
}

impl Fixture {
    /// The certificate exactly as printed (for halves: expanded with `n`).
    pub fn verbatim(&self) -> Result<PartitionCertificate> {
        match self.form {
            FixtureForm::Compact => parse_compact(self.text),
            FixtureForm::CompactHalf => {
                let half = parse_compact(self.text)?;
                PartitionCertificate::expand_half(half.bits(), self.n)
            }
            FixtureForm::ZerosHalf => {
                let mut half = vec![true; self.n.div_ceil(2)];
                for (line_idx, line) in self.text.lines().enumerate() {
                    for tok in line.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                        let p: usize = tok.parse().map_err(|_| {
                            Error::parse(line_idx + 1, format!("bad position {tok:?}"))
                        })?;
                        if p == 0 || p > half.len() {
                            return Err(Error::parse(
                                line_idx + 1,
                                format!("position {p} outside 1..={}", half.len()),
                            ));
                        }
                        half[p - 1] = false;
                    }
                }
                PartitionCertificate::expand_half(&half, self.n)
            }
        }
    }

    /// The certificate for `n`: the verbatim string, cut to `n` bits when
    /// flagged with an extra bit.
    pub fn certificate(&self) -> Result<PartitionCertificate> {
        let v = self.verbatim()?;
        Ok(if self.extra_bit { v.prefix(self.n) } else { v })
    }

    pub fn is_palindromic(&self) -> bool {
        self.kind == Kind::Pd
    }
}

/// All fixtures in manifest order.
pub fn all() -> Vec<Fixture> {
    parse_manifest(MANIFEST).expect("embedded manifest is well-formed")
}

/// The ordinary fixture for `w(2; 3, t)`, if shipped.
pub fn vdw(t: usize) -> Option<Fixture> {
    all().into_iter().find(|f| f.kind == Kind::Vdw && f.t0 == 3 && f.t1 == t)
}

/// Palindromic fixtures for `t`.
pub fn pd(t: usize) -> Vec<Fixture> {
    all().into_iter().filter(|f| f.kind == Kind::Pd && f.t0 == 3 && f.t1 == t).collect()
}

fn parse_manifest(text: &str) -> Result<Vec<Fixture>> {
    let mut out = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let f: Vec<&str> = line.split_whitespace().collect();
        if f.len() < 6 {
            return Err(Error::parse(line_no, "expected: file kind t0 t1 n form [flags]"));
        }
        let num = |s: &str| -> Result<usize> {
            s.parse().map_err(|_| Error::parse(line_no, format!("bad number {s:?}")))
        };
        let (file, text) = FILES
            .iter()
            .find(|(name, _)| *name == f[0])
            .copied()
            .ok_or_else(|| Error::parse(line_no, format!("unknown data file {}", f[0])))?;
        let form = match f[5] {
            "compact" => FixtureForm::Compact,
            "compact-half" => FixtureForm::CompactHalf,
            "zeros-half" => FixtureForm::ZerosHalf,
            other => return Err(Error::parse(line_no, format!("unknown form {other:?}"))),
        };
        let flags = &f[6..];
        out.push(Fixture {
            file,
            kind: f[1].parse().map_err(|_| Error::parse(line_no, "bad kind"))?,
            t0: num(f[2])?,
            t1: num(f[3])?,
            n: num(f[4])?,
            form,
            extra_bit: flags.contains(&"extra-bit"),
            generated: flags.contains(&"generated"),
            text,
        });
    }
    Ok(out)
}
