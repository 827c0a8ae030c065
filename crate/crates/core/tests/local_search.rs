//! Local-search experiments on mid-size instances.

use vdw_core::cnf::{encode_pd, encode_vdw};
use vdw_core::dpll::{dpll, Outcome};
use vdw_core::local_search::{local_search, warm_start_pd, warm_start_vdw, LsConfig};
use vdw_core::PartitionCertificate;

const CUTOFF: u64 = 2_000_000;

/// Paired experiment: for each seed, a solution at n = 75 found by local
/// search (as in a campaign) warm-starts n = 76; the cold run uses the
/// same seed from a random start. Failed runs count with their cutoff.
#[test]
fn warm_start_beats_cold_start_on_3_9_76() {
    let f75 = encode_vdw(3, 9, 75).unwrap();
    let f76 = encode_vdw(3, 9, 76).unwrap();
    let (mut warm, mut cold) = (0u64, 0u64);
    for seed in 0..25u64 {
        let prev = local_search(&f75, &LsConfig { runs: 10, cutoff: CUTOFF, seed: seed + 1000, ..LsConfig::default() })
            .unwrap()
            .witness
            .expect("n = 75 is solvable");
        let prev = PartitionCertificate::from_bits(prev);
        let one = |initial| LsConfig { runs: 1, cutoff: CUTOFF, seed, initial, ..LsConfig::default() };
        warm += local_search(&f76, &one(Some(warm_start_vdw(&prev)))).unwrap().flips_used;
        cold += local_search(&f76, &one(None)).unwrap().flips_used;
    }
    eprintln!("mean flips over 25 seeds: warm {}, cold {}", warm / 25, cold / 25);
    assert!(warm < cold, "warm {warm} vs cold {cold}");
}

#[test]
fn pd_shift_keeps_non_border_clauses_satisfied() {
    let half = match dpll(&encode_pd(3, 9, 59).unwrap(), None).unwrap().outcome {
        Outcome::Sat(a) => a.into_iter().map(|b| b.unwrap_or(false)).collect::<Vec<_>>(),
        other => panic!("expected SAT at n = 59, got {other:?}"),
    };
    assert!(encode_pd(3, 9, 59).unwrap().is_satisfied_by(&half));
    let start = warm_start_pd(&half);
    let f = encode_pd(3, 9, 61).unwrap();
    assert_eq!(start.len(), f.num_vars);
    for c in f.clauses.iter().filter(|c| c.iter().all(|l| l.var() != 1)) {
        assert!(c.iter().any(|l| start[l.var() - 1] == l.is_positive()), "clause {c:?}");
    }
}
