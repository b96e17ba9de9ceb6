mod common;

use std::path::PathBuf;

use common::l;
use uninorm_core::certify::{golden_file_name, golden_text, FIXTURES_ENV};
use uninorm_core::{certify, CertifyOptions, Error, TheoremCase};

fn fixtures_dir() -> PathBuf {
    std::env::var_os(FIXTURES_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures"))
}

fn opts(workers: usize) -> CertifyOptions {
    CertifyOptions { workers, ..CertifyOptions::default() }
}

#[test]
fn trivial_chain() {
    let r = certify(l(1), &opts(1)).unwrap();
    assert_eq!(r.uninorm_counts, vec![1, 1]);
    assert!(r.consistent() && r.complete);
    assert_eq!(r.pairs_checked, 4);
    assert_eq!(r.by_case[&TheoremCase::GreaterNeutral].pairs, 1);
    assert_eq!(r.by_case[&TheoremCase::LessNeutral].pairs, 1);
}

#[test]
fn small_chains_have_no_divergences() {
    for n in 2..=3 {
        let r = certify(l(n), &opts(0)).unwrap();
        assert!(r.consistent(), "{:?}", r.divergences);
        assert_eq!(r.pairs_checked, r.expected_pairs());
        let by_case: u64 = r.by_case.values().map(|c| c.pairs).sum();
        assert_eq!(by_case, r.pairs_checked);
    }
}

#[test]
fn l4_per_neutral_counts() {
    let r = certify(l(4), &opts(0)).unwrap();
    assert!(r.consistent());
    assert_eq!(r.uninorm_counts, vec![22, 17, 14, 17, 22]);
    // Counts from an independent script.
    let want = [
        [22, 6, 4, 6, 22],
        [45, 16, 9, 12, 42],
        [42, 15, 14, 15, 42],
        [42, 12, 9, 16, 45],
        [22, 6, 4, 6, 22],
    ];
    for c in &r.by_neutrals {
        assert_eq!(c.counts.distributive, want[c.e1][c.e2], "e1={} e2={}", c.e1, c.e2);
    }
}

#[test]
fn matches_golden_reports() {
    for n in 2..=3 {
        let r = certify(l(n), &opts(2)).unwrap();
        let path = fixtures_dir().join(golden_file_name(l(n)));
        let text = golden_text(&r);
        if std::env::var_os("UNINORM_BLESS").is_some() {
            std::fs::write(&path, &text).unwrap();
        }
        let golden = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(text, golden, "certification of L_{n} drifted from {}", path.display());
    }
}

#[test]
fn budget_marks_partial() {
    let r = certify(l(3), &CertifyOptions { pair_budget: Some(10), ..opts(1) }).unwrap();
    assert!(!r.complete);
    assert!(r.pairs_checked <= 10);
}

#[test]
fn refuses_beyond_limit() {
    assert!(matches!(certify(l(5), &opts(1)), Err(Error::ScaleLimit { n: 5, limit: 4 })));
}
