//! The solver against exhaustive enumeration.

use vdw_core::cnf::{encode_pd, encode_vdw, pd_middle_unit};
use vdw_core::dpll::{count_models, dpll, dpll_enumerate};
use vdw_core::oracle::{enumerate_partitions, enumerate_pd};
use vdw_core::PartitionCertificate;

#[test]
fn vdw_verdicts_and_counts() {
    for t1 in 3..=5 {
        for n in 0..=24 {
            let oracle = enumerate_partitions(3, t1, n, n <= 14).unwrap();
            let f = encode_vdw(3, t1, n).unwrap();
            let r = dpll(&f, None).unwrap();
            assert_eq!(r.is_sat(), oracle.satisfiable, "t1={t1} n={n}");
            assert_eq!(count_models(&f).unwrap(), oracle.count as u128, "t1={t1} n={n}");
            if let Some(ws) = oracle.witnesses {
                let models: Vec<PartitionCertificate> =
                    dpll_enumerate(&f).unwrap().into_iter().map(PartitionCertificate::from_bits).collect();
                let mut models = models;
                models.sort_by(|a, b| a.bits().cmp(b.bits()));
                assert_eq!(models, ws, "t1={t1} n={n}");
            }
        }
    }
}

#[test]
fn pd_verdicts_and_counts() {
    for t1 in 3..=6 {
        for n in 0..=40 {
            let oracle = enumerate_pd(3, t1, n, false).unwrap();
            let f = encode_pd(3, t1, n).unwrap();
            assert_eq!(dpll(&f, None).unwrap().is_sat(), oracle.satisfiable, "t1={t1} n={n}");
            assert_eq!(count_models(&f).unwrap(), oracle.count as u128, "t1={t1} n={n}");
            assert_eq!(dpll_enumerate(&f).unwrap().len() as u64, oracle.count);
            // The middle-vertex unit keeps the verdict.
            let g = pd_middle_unit(f, 3, t1, n);
            assert_eq!(dpll(&g, None).unwrap().is_sat(), oracle.satisfiable, "unit t1={t1} n={n}");
        }
    }
}

#[test]
fn vdw_3_4_flips_at_18() {
    let sat: Vec<bool> = (15..=20).map(|n| enumerate_partitions(3, 4, n, false).unwrap().satisfiable).collect();
    assert_eq!(sat, vec![true, true, true, false, false, false]);
}
