//! Reference (non-incremental) versions of the search primitives, working
//! directly on clause lists. The engine in `solver.rs` must agree with
//! them; they are also handy for small experiments.

use std::collections::BTreeSet;

use super::weight::{cmp_weight, BranchWeight};
use crate::cnf::{CnfFormula, Literal};

/// `F|u`: clauses containing `u` removed, `-u` deleted from the rest.
/// An empty clause in the result signals a conflict.
pub fn residual(formula: &CnfFormula, u: Literal) -> CnfFormula {
    let clauses = formula
        .clauses
        .iter()
        .filter(|c| !c.contains(&u))
        .map(|c| c.iter().copied().filter(|&l| l != !u).collect())
        .collect();
    CnfFormula { num_vars: formula.num_vars, clauses, comments: Vec::new() }
}

/// Result of [`unit_propagate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Propagation {
    pub formula: CnfFormula,
    pub conflict: bool,
    /// Implied literals in the order they were set.
    pub implied: Vec<Literal>,
}

/// Applies the first unit clause (in clause order) until none is left or
/// an empty clause appears.
pub fn unit_propagate(formula: &CnfFormula) -> Propagation {
    let mut f = formula.clone();
    let mut implied = Vec::new();
    loop {
        if f.clauses.iter().any(|c| c.is_empty()) {
            return Propagation { formula: f, conflict: true, implied };
        }
        let Some(u) = f.clauses.iter().find(|c| c.len() == 1).map(|c| c[0]) else {
            return Propagation { formula: f, conflict: false, implied };
        };
        implied.push(u);
        f = residual(&f, u);
    }
}

/// `w(u) = sum over clauses C containing u of 2^-|C|`.
pub fn jw_weight<W: BranchWeight>(formula: &CnfFormula, u: Literal) -> W {
    let mut w = W::zero();
    for c in formula.clauses.iter().filter(|c| c.contains(&u)) {
        w.add_to(&W::pow2_neg(c.len() as u32));
    }
    w
}

/// Two-sided Jeroslow-Wang: among variables occurring in the formula, the
/// one maximising `w(x) + w(-x)` (smallest index on ties); returns `x` if
/// `w(x) >= w(-x)`, else `-x`. `None` if no variable occurs.
pub fn choose_branch<W: BranchWeight>(formula: &CnfFormula) -> Option<Literal> {
    let vars: BTreeSet<usize> =
        formula.clauses.iter().flat_map(|c| c.iter().map(|l| l.var())).collect();
    let mut best: Option<(usize, W, W, W)> = None;
    for v in vars {
        let pos: W = jw_weight(formula, Literal::positive(v));
        let neg: W = jw_weight(formula, Literal::negative(v));
        let mut sum = pos.clone();
        sum.add_to(&neg);
        if best.as_ref().is_none_or(|(_, s, _, _)| cmp_weight(&sum, s).is_gt()) {
            best = Some((v, sum, pos, neg));
        }
    }
    best.map(|(v, _, pos, neg)| Literal::from_var(v, cmp_weight(&pos, &neg).is_ge()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cnf::encode_vdw;
    use num_rational::BigRational;

    fn f(n: usize, cls: &[&[i32]]) -> CnfFormula {
        CnfFormula::from_ints(n, cls)
    }

    #[test]
    fn residual_examples() {
        let r = residual(&f(3, &[&[1, 2], &[-1, 3]]), Literal::new(1));
        assert_eq!(r.clauses, f(3, &[&[3]]).clauses);
        let r = residual(&f(1, &[&[-1]]), Literal::new(1));
        assert_eq!(r.clauses, vec![vec![]]);
    }

    fn completions(r: &CnfFormula, first: bool) -> Vec<u32> {
        (0u32..128)
            .filter(|m| {
                let a: Vec<bool> =
                    std::iter::once(first).chain((0..7).map(|i| m >> (6 - i) & 1 == 1)).collect();
                r.is_satisfied_by(&a)
            })
            .collect()
    }

    #[test]
    fn residual_of_vdw_3_3_8() {
        let f8 = encode_vdw(3, 3, 8).unwrap();
        // Vertex 1 in block 0 is the literal -1; 0 + 1100110 is good.
        let c = completions(&residual(&f8, Literal::new(-1)), false);
        assert!(c.contains(&0b1100110));
        // With vertex 1 in block 1 the complement pattern is needed.
        let c = completions(&residual(&f8, Literal::new(1)), true);
        assert!(!c.contains(&0b1100110));
        assert!(c.contains(&0b0011001));
    }

    #[test]
    fn propagation_examples() {
        let p = unit_propagate(&f(1, &[&[1], &[-1]]));
        assert!(p.conflict);
        let p = unit_propagate(&f(3, &[&[1], &[-1, 2], &[-2, 3]]));
        assert!(!p.conflict);
        assert_eq!(p.implied, vec![Literal::new(1), Literal::new(2), Literal::new(3)]);
        let p = unit_propagate(&f(0, &[]));
        assert!(!p.conflict && p.implied.is_empty());
    }

    #[test]
    fn weights_and_branch() {
        let g = f(3, &[&[1, 2], &[1, 2, 3], &[-1]]);
        assert_eq!(jw_weight::<f64>(&g, Literal::new(1)), 0.375);
        assert_eq!(jw_weight::<f64>(&g, Literal::new(-1)), 0.5);
        assert_eq!(jw_weight::<f64>(&g, Literal::new(-3)), 0.0);
        assert_eq!(
            jw_weight::<BigRational>(&g, Literal::new(1)),
            BigRational::new(3.into(), 8.into())
        );
        assert_eq!(choose_branch::<f64>(&g), Some(Literal::new(-1)));
        assert_eq!(choose_branch::<f64>(&f(2, &[&[1, 2], &[-1, -2]])), Some(Literal::new(1)));
        assert_eq!(choose_branch::<f64>(&f(2, &[])), None);
    }
}
