use serde::{Deserialize, Serialize};

use super::{CnfFormula, Literal};
use crate::certificate::PartitionCertificate;
use crate::error::{Error, Result};
use crate::hypergraph::{arithp, half_len, pdarithp, progressions, Hypergraph};

/// Ordinary or palindromic problem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Vdw,
    Pd,
}

impl std::fmt::Display for Kind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Kind::Vdw => "vdw",
            Kind::Pd => "pd",
        })
    }
}

impl std::str::FromStr for Kind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "vdw" => Ok(Kind::Vdw),
            "pd" => Ok(Kind::Pd),
            _ => Err(Error::input(format!("unknown problem kind {s:?} (vdw|pd)"))),
        }
    }
}

fn check_lengths(t0: usize, t1: usize) -> Result<()> {
    if t0 < 2 {
        return Err(Error::input(format!("t0 = {t0} < 2 degenerates the encoding")));
    }
    if t1 < t0 {
        return Err(Error::input(format!("expected t0 <= t1, got t0 = {t0}, t1 = {t1}")));
    }
    Ok(())
}

fn from_hypergraphs(
    num_vars: usize,
    positive: &Hypergraph,
    negative: &Hypergraph,
    comments: Vec<String>,
) -> CnfFormula {
    let mut f = CnfFormula::new(num_vars);
    f.comments = comments;
    f.clauses.reserve(positive.num_edges() + negative.num_edges());
    for e in positive.edges() {
        f.push(e.iter().map(|&v| Literal::positive(v)).collect());
    }
    for e in negative.edges() {
        f.push(e.iter().map(|&v| Literal::negative(v)).collect());
    }
    f
}

/// Clause set satisfiable iff `n < w(2; t0, t1)`: positive clauses forbid a
/// `t0`-progression in block 0, negative clauses a `t1`-progression in
/// block 1. Both blocks are listed in colexicographic order.
pub fn encode_vdw(t0: usize, t1: usize, n: usize) -> Result<CnfFormula> {
    check_lengths(t0, t1)?;
    let comments = vec![
        format!("{}: van der Waerden problem, 2 parts", cnf_file_name(Kind::Vdw, t0, t1, n)),
        format!("generator=encode_vdw t0={t0} t1={t1} n={n}"),
        "progressions in colexicographic order".to_string(),
    ];
    Ok(from_hypergraphs(n, &arithp(t0, n)?, &arithp(t1, n)?, comments))
}

/// Clause set over `ceil(n/2)` variables whose models are exactly the
/// good palindromic partitions of `1..=n`.
pub fn encode_pd(t0: usize, t1: usize, n: usize) -> Result<CnfFormula> {
    check_lengths(t0, t1)?;
    let comments = vec![
        format!(
            "{}: palindromic van der Waerden problem, 2 parts, {} variables",
            cnf_file_name(Kind::Pd, t0, t1, n),
            half_len(n)
        ),
        format!("generator=encode_pd t0={t0} t1={t1} n={n}"),
    ];
    Ok(from_hypergraphs(half_len(n), &pdarithp(t0, n)?, &pdarithp(t1, n)?, comments))
}

/// For odd `n` and `t0 = 3` the middle vertex cannot lie in block 0 (with
/// any other block-0 vertex `v`, `v`, middle, mirror of `v` would be a
/// 3-progression; alone in block 0 it leaves block 1 = everything else).
/// Adds the unit clause putting the middle vertex into block 1.
///
/// The unit is only added when block 1 = `{1..n} \ {middle}` contains a
/// `t1`-progression; otherwise the middle-in-block-0 partition is good and
/// the unit would not preserve satisfiability. Even `n` or `t0 != 3` leave
/// the formula unchanged.
pub fn pd_middle_unit(mut formula: CnfFormula, t0: usize, t1: usize, n: usize) -> CnfFormula {
    if n.is_multiple_of(2) || t0 != 3 {
        return formula;
    }
    let mid = half_len(n);
    let avoids_mid = progressions(t1, n).any(|(a, d)| (0..t1).all(|i| a + i * d != mid));
    if avoids_mid {
        formula.push(vec![Literal::positive(mid)]);
    }
    formula
}

/// `vdw_2-<t0>-<t1>_<n>.cnf` or `vdw_pd_2-<t0>-<t1>_<n>.cnf`.
pub fn cnf_file_name(kind: Kind, t0: usize, t1: usize, n: usize) -> String {
    match kind {
        Kind::Vdw => format!("vdw_2-{t0}-{t1}_{n}.cnf"),
        Kind::Pd => format!("vdw_pd_2-{t0}-{t1}_{n}.cnf"),
    }
}

/// Turns a (possibly partial) assignment into a partition bitstring of
/// length `n`. Unassigned variables go to block 0. With `palindromic` the
/// assignment covers `1..=ceil(n/2)` and is reflected.
///
/// Callers are expected to re-verify the result; see
/// [`crate::certificate::verify_good`].
pub fn assignment_to_partition(
    assignment: &[Option<bool>],
    n: usize,
    palindromic: bool,
) -> PartitionCertificate {
    let len = if palindromic { half_len(n) } else { n };
    let bits: Vec<bool> = (0..len)
        .map(|i| assignment.get(i).copied().flatten().unwrap_or(false))
        .collect();
    if palindromic {
        PartitionCertificate::expand_half(&bits, n).expect("half length matches by construction")
    } else {
        PartitionCertificate::from_bits(bits)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::verify_good;

    fn ints(f: &CnfFormula) -> Vec<Vec<i32>> {
        f.clauses.iter().map(|c| c.iter().map(|l| l.to_dimacs()).collect()).collect()
    }

    #[test]
    fn vdw_3_4_6_clause_listing() {
        let f = encode_vdw(3, 4, 6).unwrap();
        assert_eq!(f.num_vars, 6);
        assert_eq!(
            ints(&f),
            vec![
                vec![1, 2, 3],
                vec![2, 3, 4],
                vec![1, 3, 5],
                vec![3, 4, 5],
                vec![2, 4, 6],
                vec![4, 5, 6],
                vec![-1, -2, -3, -4],
                vec![-2, -3, -4, -5],
                vec![-3, -4, -5, -6],
            ]
        );
        assert!(f.is_normal());
    }

    #[test]
    fn pd_3_4_9_clause_listing() {
        let f = encode_pd(3, 4, 9).unwrap();
        assert_eq!(f.num_vars, 5);
        assert_eq!(
            ints(&f),
            vec![
                vec![1, 2, 3],
                vec![2, 4],
                vec![1, 3, 4],
                vec![1, 5],
                vec![2, 5],
                vec![3, 5],
                vec![4, 5],
                vec![-2, -4],
                vec![-1, -3, -5],
                vec![-3, -4, -5],
            ]
        );
    }

    #[test]
    fn small_lengths_rejected() {
        assert!(encode_vdw(1, 3, 5).is_err());
        assert!(encode_pd(1, 3, 5).is_err());
        assert!(encode_vdw(4, 3, 5).is_err());
    }

    #[test]
    fn known_partition_satisfies_vdw_3_3_8() {
        let f = encode_vdw(3, 3, 8).unwrap();
        let bits: Vec<bool> = "01100110".chars().map(|c| c == '1').collect();
        assert!(f.is_satisfied_by(&bits));
    }

    #[test]
    fn half_partition_satisfies_pd_3_3_8() {
        let f = encode_pd(3, 3, 8).unwrap();
        let bits: Vec<bool> = "0110".chars().map(|c| c == '1').collect();
        assert!(f.is_satisfied_by(&bits));
    }

    #[test]
    fn middle_unit() {
        let f = encode_pd(3, 9, 9).unwrap();
        let g = pd_middle_unit(f.clone(), 3, 9, 9);
        // 9 vertices minus the middle hold no 9-progression: unchanged.
        assert_eq!(g, f);

        let f = encode_pd(3, 3, 9).unwrap();
        let g = pd_middle_unit(f.clone(), 3, 3, 9);
        assert_eq!(g.num_clauses(), f.num_clauses() + 1);
        assert_eq!(g.clauses.last().unwrap(), &vec![Literal::positive(5)]);

        let f = encode_pd(3, 9, 8).unwrap();
        assert_eq!(pd_middle_unit(f.clone(), 3, 9, 8), f);
    }

    #[test]
    fn partition_from_assignment() {
        let half = [Some(false), Some(true), Some(true), Some(false)];
        let p = assignment_to_partition(&half, 8, true);
        assert_eq!(p.to_string(), "01100110");
        let half = [Some(false), Some(true), None];
        assert_eq!(assignment_to_partition(&half, 5, true).to_string(), "01010");
        let half = [Some(false), Some(true), Some(true)];
        assert_eq!(assignment_to_partition(&half, 5, true).to_string(), "01110");
        let full = [Some(true), None, Some(true)];
        let p = assignment_to_partition(&full, 3, false);
        assert_eq!(p.to_string(), "101");
        assert!(verify_good(&p, 3, 3).is_ok());
    }

    #[test]
    fn file_names() {
        assert_eq!(cnf_file_name(Kind::Vdw, 3, 4, 6), "vdw_2-3-4_6.cnf");
        assert_eq!(cnf_file_name(Kind::Pd, 3, 4, 9), "vdw_pd_2-3-4_9.cnf");
    }
}
