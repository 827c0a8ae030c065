//! Compact run-length notation: `0`, `1`, `0^k`, `1^k`, `0^{k}`, `1^{k}`.
//!
//! An exponent without braces is a single digit, so `1^101` is
//! `1 0 1`, as in TeX. Whitespace is ignored anywhere.

use std::fmt::Write as _;

use super::PartitionCertificate;
use crate::error::{Error, Result};

/// Expands compact notation into a certificate. Errors report the 1-based
/// line of the offending character.
pub fn parse_compact(text: &str) -> Result<PartitionCertificate> {
    let mut chars = text
        .char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .map(|(i, c)| (line_of(text, i), c))
        .peekable();
    let mut bits = Vec::new();
    while let Some((line, c)) = chars.next() {
        let bit = match c {
            '0' => false,
            '1' => true,
            other => return Err(Error::parse(line, format!("unexpected character {other:?}"))),
        };
        let mut count = 1usize;
        if chars.next_if(|&(_, c)| c == '^').is_some() {
            let Some((line, c)) = chars.next() else {
                return Err(Error::parse(line, "missing exponent after '^'"));
            };
            count = if c == '{' {
                let mut digits = String::new();
                loop {
                    match chars.next() {
                        Some((_, '}')) => break,
                        Some((_, d)) if d.is_ascii_digit() => digits.push(d),
                        Some((l, d)) => {
                            return Err(Error::parse(l, format!("unexpected {d:?} in exponent")))
                        }
                        None => return Err(Error::parse(line, "unterminated exponent")),
                    }
                }
                digits
                    .parse()
                    .map_err(|_| Error::parse(line, format!("malformed exponent {{{digits}}}")))?
            } else if let Some(d) = c.to_digit(10) {
                d as usize
            } else {
                return Err(Error::parse(line, format!("malformed exponent {c:?}")));
            };
            if count == 0 {
                return Err(Error::parse(line, "zero exponent"));
            }
        }
        bits.extend(std::iter::repeat_n(bit, count));
    }
    Ok(PartitionCertificate::from_bits(bits))
}

fn line_of(text: &str, byte: usize) -> usize {
    text[..byte].bytes().filter(|&b| b == b'\n').count() + 1
}

/// Maximal-run encoding; exponent 1 omitted, multi-digit exponents braced.
pub fn emit_compact(cert: &PartitionCertificate) -> String {
    let mut out = String::new();
    for (bit, len) in runs(cert.bits()) {
        let c = if bit { '1' } else { '0' };
        match len {
            1 => out.push(c),
            2..=9 => {
                let _ = write!(out, "{c}^{len}");
            }
            _ => {
                let _ = write!(out, "{c}^{{{len}}}");
            }
        }
    }
    out
}

/// Maximal runs as `(bit, length)`.
pub(crate) fn runs(bits: &[bool]) -> Vec<(bool, usize)> {
    let mut out: Vec<(bool, usize)> = Vec::new();
    for &b in bits {
        match out.last_mut() {
            Some((last, len)) if *last == b => *len += 1,
            _ => out.push((b, 1)),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> String {
        parse_compact(text).unwrap().to_string()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(s("01^20^21^20"), "01100110");
        assert_eq!(s("1^{4}01^{6}0"), "111101111110");
        assert_eq!(s("1^101^1001^101^1"), "10100101");
        assert_eq!(s("1^{12}"), "1".repeat(12));
        assert_eq!(s(" 0 1^{1 0}\n0"), format!("0{}0", "1".repeat(10)));
        assert_eq!(s(""), "");
    }

    #[test]
    fn parse_errors() {
        assert!(parse_compact("0^0").is_err());
        assert!(parse_compact("0^{0}").is_err());
        assert!(parse_compact("0^").is_err());
        assert!(parse_compact("0^{12").is_err());
        assert!(parse_compact("0^{x}").is_err());
        assert!(parse_compact("0^a").is_err());
        assert!(parse_compact("2").is_err());
        let e = parse_compact("01\n0^x").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }), "{e}");
    }

    #[test]
    fn emit_examples() {
        let c = |b: &str| PartitionCertificate::from_bitstring(b).unwrap();
        assert_eq!(emit_compact(&c("01100110")), "01^20^21^20");
        assert_eq!(emit_compact(&c("")), "");
        assert_eq!(emit_compact(&c("000")), "0^3");
        assert_eq!(emit_compact(&c(&"1".repeat(10))), "1^{10}");
    }
}
