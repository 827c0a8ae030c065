//! Randomised invariants.

use num_rational::BigRational;
use proptest::prelude::*;

use vdw_core::certificate::{emit_compact, parse_compact, verify_good};
use vdw_core::cnf::{emit_dimacs, encode_pd, encode_vdw, parse_dimacs};
use vdw_core::dpll::{
    checkpoint_load, checkpoint_save, choose_branch, count_models, count_models_per_cube, dpll, residual, split,
    unit_propagate, SearchState,
};
use vdw_core::hypergraph::pdarithp;
use vdw_core::local_search::{local_search, warm_start_pd, LsConfig, Scheme};
use vdw_core::{CnfFormula, DpllSolverExact, Literal, PartitionCertificate};

/// Clauses over distinct variables.
fn formula(max_vars: usize, max_clauses: usize) -> impl Strategy<Value = CnfFormula> {
    (1..=max_vars).prop_flat_map(move |n| {
        let clause = proptest::sample::subsequence((1..=n).collect::<Vec<_>>(), 1..=n.min(4))
            .prop_flat_map(|vars| {
                let k = vars.len();
                (Just(vars), proptest::collection::vec(any::<bool>(), k))
            })
            .prop_map(|(vars, signs)| {
                vars.into_iter().zip(signs).map(|(v, s)| Literal::from_var(v, s)).collect::<Vec<_>>()
            });
        proptest::collection::vec(clause, 0..=max_clauses)
            .prop_map(move |clauses| CnfFormula::with_clauses(n, clauses))
    })
}

fn bits(max: usize) -> impl Strategy<Value = Vec<bool>> {
    proptest::collection::vec(any::<bool>(), 0..=max)
}

/// Every progression checked directly, for comparison.
fn naive_good(b: &[bool], t0: usize, t1: usize) -> bool {
    let n = b.len();
    for a in 1..=n {
        for d in 1..=n {
            for (block, t) in [(false, t0), (true, t1)] {
                if a + (t - 1) * d <= n && (0..t).all(|i| b[a + i * d - 1] == block) {
                    return false;
                }
            }
        }
    }
    true
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn dimacs_round_trip(f in formula(12, 20)) {
        let back = parse_dimacs(&emit_dimacs(&f)).unwrap();
        prop_assert_eq!(back.num_vars, f.num_vars);
        prop_assert_eq!(back.clauses, f.clauses);
    }

    #[test]
    fn compact_round_trip(b in bits(200)) {
        let c = PartitionCertificate::from_bits(b);
        prop_assert_eq!(parse_compact(&emit_compact(&c)).unwrap(), c);
    }

    #[test]
    fn verify_good_matches_naive(b in bits(30), t0 in 2usize..6, t1 in 2usize..6) {
        let c = PartitionCertificate::from_bits(b.clone());
        let r = verify_good(&c, t0, t1);
        prop_assert_eq!(r.is_ok(), naive_good(&b, t0, t1));
        if let Err(v) = r {
            // The reported progression is real.
            let block = v.block == 1;
            prop_assert!((0..v.length).all(|i| b[v.start + i * v.difference - 1] == block));
        }
    }

    #[test]
    fn engine_branch_matches_reference(f in formula(8, 14), assume in proptest::collection::vec(any::<(u8, bool)>(), 0..3)) {
        let mut lits: Vec<Literal> = Vec::new();
        for (v, s) in assume {
            let v = v as usize % f.num_vars + 1;
            if lits.iter().all(|l| l.var() != v) {
                lits.push(Literal::from_var(v, s));
            }
        }
        let mut g = f.clone();
        for &l in &lits {
            g = residual(&g, l);
        }
        let p = unit_propagate(&g);
        let expected = if p.conflict { None } else { choose_branch::<BigRational>(&p.formula) };
        let mut s = DpllSolverExact::new(&f).unwrap();
        prop_assert_eq!(s.branch_literal(&lits).unwrap(), expected);
    }

    #[test]
    fn cubes_cover_models(f in formula(10, 25), level in 0usize..5) {
        let whole = count_models(&f).unwrap();
        let cubes = split(&f, level).unwrap();
        prop_assert!(cubes.len() <= 1 << level);
        let per: u128 = count_models_per_cube(&f, &cubes).unwrap().iter().sum();
        prop_assert_eq!(per, whole);
    }

    #[test]
    fn checkpoint_round_trip(pairs in proptest::collection::vec((1i32..50, any::<bool>(), any::<bool>()), 0..20)) {
        let mut seen = std::collections::HashSet::new();
        let pairs: Vec<(Literal, bool)> = pairs
            .into_iter()
            .filter(|(v, _, _)| seen.insert(*v))
            .map(|(v, s, f)| (Literal::new(if s { v } else { -v }), f))
            .collect();
        let st = SearchState::new(pairs);
        prop_assert_eq!(checkpoint_load(&checkpoint_save(&st)).unwrap(), st);
    }

    #[test]
    fn local_search_witnesses_satisfy(f in formula(10, 20), seed in any::<u64>(), walk in any::<bool>()) {
        let scheme = if walk { Scheme::WalkSat } else { Scheme::GsatTabu };
        let cfg = LsConfig { runs: 3, cutoff: 500, seed, ..LsConfig::new(scheme) };
        let out = local_search(&f, &cfg).unwrap();
        if let Some(w) = &out.witness {
            prop_assert!(f.is_satisfied_by(w));
        }
        // Never claims more than the complete solver.
        if out.found {
            prop_assert!(dpll(&f, None).unwrap().is_sat());
        }
        prop_assert_eq!(out.found, out.best_unsat == 0);
    }

    #[test]
    fn pd_warm_start_satisfies_shifted_clauses(t1 in 3usize..7, n in 1usize..40, seed in any::<u64>()) {
        let f = encode_pd(3, t1, n).unwrap();
        let cfg = LsConfig { runs: 4, cutoff: 5_000, seed, ..LsConfig::default() };
        if let Some(half) = local_search(&f, &cfg).unwrap().witness {
            let start = warm_start_pd(&half);
            let g = encode_pd(3, t1, n + 2).unwrap();
            for c in g.clauses.iter().filter(|c| c.iter().all(|l| l.var() != 1)) {
                prop_assert!(c.iter().any(|l| start[l.var() - 1] == l.is_positive()));
            }
        }
    }
}

/// `v -> v + 1` maps the edges of `pdarithp(t, n)` one-to-one onto the
/// edges of `pdarithp(t, n + 2)` avoiding vertex 1.
#[test]
fn embedding_into_n_plus_2() {
    for t in 1..=6 {
        for n in 0..=60 {
            let small = pdarithp(t, n).unwrap();
            let big = pdarithp(t, n + 2).unwrap();
            assert_eq!(big.num_vertices(), small.num_vertices() + 1, "t={t} n={n}");
            let mut shifted: Vec<Vec<usize>> =
                small.edges().iter().map(|e| e.iter().map(|v| v + 1).collect()).collect();
            let mut avoiding: Vec<Vec<usize>> =
                big.edges().iter().filter(|e| !e.contains(&1)).cloned().collect();
            shifted.sort();
            avoiding.sort();
            assert_eq!(shifted, avoiding, "t={t} n={n}");
        }
    }
}

#[test]
fn vdw_encoding_satisfiable_iff_good_partition_exists() {
    // Direct clause semantics for one instance: the models are the good
    // partitions.
    let f = encode_vdw(3, 3, 8).unwrap();
    for m in 0u32..256 {
        let b: Vec<bool> = (0..8).map(|i| m >> i & 1 == 1).collect();
        assert_eq!(f.is_satisfied_by(&b), naive_good(&b, 3, 3));
    }
}
