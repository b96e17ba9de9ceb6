mod common;

use common::*;
use uninorm_core::search::{enumerate_parallel, enumerate_with, EnumerationTask, Pruning, SearchLimits};
use uninorm_core::validate_uninorm;

#[test]
fn matches_naive_oracle_exactly() {
    for n in 1..=3 {
        for e in 0..=n {
            let fast: Vec<Vec<Vec<usize>>> = all(n, e).iter().map(|u| u.rows()).collect();
            let mut sorted = fast.clone();
            sorted.sort();
            assert_eq!(sorted, fast, "L_{n} e={e}: output is not in lexicographic order");
            assert_eq!(fast, naive_uninorms(n, e), "L_{n} e={e}");
        }
    }
}

#[test]
fn frozen_counts() {
    // Counts cross-checked against a separate brute-force script.
    let expected: &[(usize, &[usize])] = &[
        (1, &[1, 1]),
        (2, &[2, 2, 2]),
        (3, &[6, 5, 5, 6]),
        (4, &[22, 17, 14, 17, 22]),
        (5, &[94, 68, 51, 51, 68, 94]),
    ];
    for &(n, counts) in expected {
        let got: Vec<usize> = (0..=n).map(|e| all(n, e).len()).collect();
        assert_eq!(got, counts, "L_{n}");
    }
}

#[test]
fn every_output_validates() {
    for n in 1..=4 {
        for e in 0..=n {
            for u in all(n, e) {
                assert!(validate_uninorm(u.table(), e).verdict());
            }
        }
    }
}

#[test]
fn each_pruning_rule_is_safe() {
    let variants = [
        Pruning::NONE,
        Pruning { monotone_bounds: true, ..Pruning::NONE },
        Pruning { neutral_bounds: true, ..Pruning::NONE },
        Pruning { incremental_associativity: true, ..Pruning::NONE },
        Pruning { monotone_bounds: false, ..Pruning::ALL },
        Pruning { neutral_bounds: false, ..Pruning::ALL },
        Pruning { incremental_associativity: false, ..Pruning::ALL },
    ];
    for n in 2..=3 {
        for e in 0..=n {
            let reference = all(n, e);
            for p in variants {
                let got: Vec<_> =
                    enumerate_with(&EnumerationTask::new(l(n), e), &SearchLimits::default(), p)
                        .unwrap()
                        .collect();
                assert_eq!(got, reference, "L_{n} e={e} {p:?}");
            }
        }
    }
}

#[test]
fn pruning_reduces_work() {
    let task = EnumerationTask::new(l(3), 1);
    let mut full = enumerate_with(&task, &SearchLimits::default(), Pruning::ALL).unwrap();
    full.by_ref().count();
    let mut none = enumerate_with(&task, &SearchLimits::default(), Pruning::NONE).unwrap();
    none.by_ref().count();
    assert!(full.stats().nodes < none.stats().nodes);
    assert_eq!(none.stats().leaves, 4u64.pow(6));
}

#[test]
fn partitioned_equals_single_worker() {
    for e in 0..=5 {
        let task = EnumerationTask::new(l(5), e);
        let seq: Vec<_> = enumerate_with(&task, &SearchLimits::default(), Pruning::ALL).unwrap().collect();
        for workers in [1, 2, 4] {
            let (par, _) = enumerate_parallel(&task, &SearchLimits::default(), workers).unwrap();
            assert_eq!(par, seq, "e={e} workers={workers}");
        }
    }
}
