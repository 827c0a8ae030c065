//! DIMACS CNF text format.

use std::fmt::Write as _;

use super::{CnfFormula, Literal};
use crate::error::{Error, Result};

/// Renders `formula` as DIMACS: `c ` comment lines, the `p cnf` header,
/// then one clause per line terminated by ` 0`.
pub fn emit_dimacs(formula: &CnfFormula) -> String {
    let mut out = String::new();
    for c in &formula.comments {
        if c.is_empty() {
            out.push_str("c\n");
        } else {
            let _ = writeln!(out, "c {c}");
        }
    }
    let _ = writeln!(out, "p cnf {} {}", formula.num_vars, formula.num_clauses());
    for clause in &formula.clauses {
        for l in clause {
            let _ = write!(out, "{l} ");
        }
        out.push_str("0\n");
    }
    out
}

/// Parses DIMACS CNF text. Comments (lines starting with `c`) are kept, a
/// single space after the `c` being stripped. Clauses may span lines.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula> {
    let mut comments = Vec::new();
    let mut header: Option<(usize, usize, usize)> = None; // (vars, clauses, line)
    let mut clauses = Vec::new();
    let mut current: Vec<Literal> = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('c') {
            if header.is_none() || rest.is_empty() || rest.starts_with(' ') {
                comments.push(rest.strip_prefix(' ').unwrap_or(rest).to_string());
                continue;
            }
        }
        if line.starts_with('%') {
            // Some generators terminate the file with "%".
            break;
        }
        if line.starts_with('p') {
            if header.is_some() {
                return Err(Error::parse(line_no, "duplicate problem line"));
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 4 || fields[0] != "p" || fields[1] != "cnf" {
                return Err(Error::parse(line_no, format!("malformed header {line:?}")));
            }
            let vars = fields[2]
                .parse()
                .map_err(|_| Error::parse(line_no, format!("bad variable count {:?}", fields[2])))?;
            let ncl = fields[3]
                .parse()
                .map_err(|_| Error::parse(line_no, format!("bad clause count {:?}", fields[3])))?;
            header = Some((vars, ncl, line_no));
            continue;
        }
        let Some((num_vars, _, _)) = header else {
            return Err(Error::parse(line_no, "clause before the \"p cnf\" header"));
        };
        for tok in line.split_whitespace() {
            let v: i64 = tok
                .parse()
                .map_err(|_| Error::parse(line_no, format!("bad literal {tok:?}")))?;
            if v == 0 {
                clauses.push(std::mem::take(&mut current));
                continue;
            }
            if v.unsigned_abs() as usize > num_vars || v.unsigned_abs() > i32::MAX as u64 {
                return Err(Error::parse(
                    line_no,
                    format!("literal {v} outside the declared {num_vars} variables"),
                ));
            }
            current.push(Literal::new(v as i32));
        }
    }

    let Some((num_vars, num_clauses, header_line)) = header else {
        return Err(Error::parse(last_line.max(1), "missing \"p cnf\" header"));
    };
    if !current.is_empty() {
        return Err(Error::parse(last_line, "last clause not terminated by 0"));
    }
    if clauses.len() != num_clauses {
        return Err(Error::parse(
            header_line,
            format!("header declares {num_clauses} clauses, found {}", clauses.len()),
        ));
    }
    Ok(CnfFormula { num_vars, clauses, comments })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cnf::encode_vdw;

    const APPENDIX_VDW: &str = "c comment\np cnf 6 9\n1 2 3 0\n2 3 4 0\n1 3 5 0\n3 4 5 0\n2 4 6 0\n4 5 6 0\n-1 -2 -3 -4 0\n-2 -3 -4 -5 0\n-3 -4 -5 -6 0\n";

    #[test]
    fn emit_vdw_3_4_6_body() {
        let text = emit_dimacs(&encode_vdw(3, 4, 6).unwrap());
        let body = &text[text.find("p cnf").unwrap()..];
        assert_eq!(body, &APPENDIX_VDW[APPENDIX_VDW.find("p cnf").unwrap()..]);
    }

    #[test]
    fn parse_appendix_text() {
        let f = parse_dimacs(APPENDIX_VDW).unwrap();
        assert_eq!(f.num_vars, 6);
        assert_eq!(f.num_clauses(), 9);
        assert_eq!(f.comments, vec!["comment".to_string()]);
        assert_eq!(f.clauses, encode_vdw(3, 4, 6).unwrap().clauses);
    }

    #[test]
    fn empty_formula() {
        let f = CnfFormula::new(0);
        assert_eq!(emit_dimacs(&f), "p cnf 0 0\n");
        assert_eq!(parse_dimacs("p cnf 0 0\n").unwrap(), f);
    }

    #[test]
    fn unit_clause() {
        let f = parse_dimacs("p cnf 1 1\n1 0\n").unwrap();
        assert_eq!(f, CnfFormula::from_ints(1, &[&[1]]));
    }

    #[test]
    fn errors_name_lines() {
        let e = parse_dimacs("p cnf 4 5\n1 0\n2 0\n3 0\n4 0\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, .. }), "{e}");
        let e = parse_dimacs("p cnf 2 1\n1 3 0\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }), "{e}");
        let e = parse_dimacs("c x\np dnf 2 1\n1 0\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }), "{e}");
        assert!(parse_dimacs("1 0\n").is_err());
        assert!(parse_dimacs("p cnf 2 1\n1 x 0\n").is_err());
        assert!(parse_dimacs("p cnf 2 1\n1 2\n").is_err());
    }

    #[test]
    fn multi_line_clause() {
        let f = parse_dimacs("p cnf 3 1\n1 2\n 3 0\n").unwrap();
        assert_eq!(f.clauses, CnfFormula::from_ints(3, &[&[1, 2, 3]]).clauses);
    }
}
