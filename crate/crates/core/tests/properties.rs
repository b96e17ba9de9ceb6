mod common;

use common::*;
use proptest::prelude::*;
use uninorm_core::catalog::{idem_max, idem_min, lukasiewicz_tnorm, max_tconorm, min_tnorm};
use uninorm_core::distributivity::distributivity_witness_reproduces;
use uninorm_core::format::{parse_table, write_uninorm};
use uninorm_core::report::WitnessPolicy;
use uninorm_core::uninorm::{validate_uninorm_with, witness_reproduces};
use uninorm_core::{
    check_distributivity, make, validate_uninorm, ChainScale, Family, FamilySpec, OpTable, Uninorm,
};

#[test]
fn catalog_grid_validates() {
    for n in 1..=6 {
        for (name, u) in catalog(n) {
            assert!(validate_uninorm(u.table(), u.neutral()).verdict(), "{name} on L_{n}");
            assert!(naive_is_uninorm(&u.rows(), u.neutral()), "{name} on L_{n}");
        }
    }
}

#[test]
fn idempotent_families_are_locally_internal() {
    for n in 2..=6 {
        for e in 1..n {
            for u in [idem_min(l(n), e).unwrap(), idem_max(l(n), e).unwrap()] {
                assert!(u.is_idempotent() && u.is_locally_internal());
            }
        }
    }
}

#[test]
fn dual_of_umin_of_is_umax_of() {
    for n in 2..=6 {
        for e in 1..n {
            let t = lukasiewicz_tnorm(l(e));
            let s = make(&FamilySpec::tconorm(Family::DrasticTConorm, l(n - e))).unwrap();
            let lhs = make(&FamilySpec::umin_of(t.clone(), s.clone(), l(n), e)).unwrap().dual();
            let rhs = make(&FamilySpec::umax_of(s.dual(), t.dual(), l(n), n - e)).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn single_cell_mutations_are_caught() {
    for n in 1..=4 {
        for (name, u) in catalog(n) {
            let e = u.neutral();
            for x in 0..=n {
                for y in x..=n {
                    for v in 0..=n {
                        if v == u.get(x, y) {
                            continue;
                        }
                        let mut rows = u.rows();
                        rows[x][y] = v;
                        rows[y][x] = v;
                        let t = OpTable::from_rows(l(n), &rows).unwrap();
                        let report = validate_uninorm_with(&t, e, WitnessPolicy::All);
                        assert_eq!(report.verdict(), naive_is_uninorm(&rows, e), "{name} ({x},{y})={v}");
                        for w in report.violations() {
                            assert!(witness_reproduces(&t, e, w), "{name} ({x},{y})={v}: {w}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn internal_on_the_off_diagonal_region() {
    for n in 3..=4 {
        for e in 0..=n {
            for u in all(n, e) {
                for x in 0..=n {
                    for y in 0..=n {
                        if (x < e && y > e) || (x > e && y < e) {
                            let v = u.get(x, y);
                            assert!(x.min(y) <= v && v <= x.max(y));
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn dual_and_underlying_operations_validate() {
    for n in 1..=4 {
        for e in 0..=n {
            for u in all(n, e) {
                let d = u.dual();
                assert!(validate_uninorm(d.table(), d.neutral()).verdict());
                assert_eq!(d.dual(), u);
                if e >= 1 {
                    let t = u.underlying_tnorm().unwrap();
                    assert!(validate_uninorm(t.table(), e).verdict() && t.n() == e);
                }
                if e < n {
                    let s = u.underlying_tconorm().unwrap();
                    assert!(validate_uninorm(s.table(), 0).verdict() && s.n() == n - e);
                }
            }
        }
    }
}

#[test]
fn distributivity_witnesses_replay() {
    for n in 2..=3 {
        let fams = every_neutral(n);
        for us1 in &fams {
            for us2 in &fams {
                for u1 in us1 {
                    for u2 in us2 {
                        let r = uninorm_core::distributivity::check_distributivity_with(u1, u2, WitnessPolicy::All)
                            .unwrap();
                        assert_eq!(r.verdict(), naive_distributes(&u1.rows(), &u2.rows()));
                        for w in r.violations() {
                            assert!(distributivity_witness_reproduces(u1, u2, w));
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn tnorms_and_tconorms_in_the_catalog() {
    let min = min_tnorm(l(3));
    let max = max_tconorm(l(3));
    assert!(min.is_tnorm() && max.is_tconorm());
    assert_eq!(min.dual(), max);
}

fn l4_uninorms() -> Vec<Uninorm> {
    every_neutral(4).into_iter().flatten().collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn table_text_round_trips(i in 0usize..92) {
        let all = l4_uninorms();
        let u = &all[i];
        let text = write_uninorm(u);
        let back = parse_table(&text).unwrap().into_uninorm().unwrap();
        prop_assert_eq!(&back, u);
        prop_assert_eq!(write_uninorm(&back), text);
    }

    #[test]
    fn distributivity_is_symmetric_in_y_z(i in 0usize..92, j in 0usize..92, x in 0usize..5, y in 0usize..5, z in 0usize..5) {
        let all = l4_uninorms();
        let (u1, u2) = (&all[i], &all[j]);
        let holds = |y: usize, z: usize| u1.get(x, u2.get(y, z)) == u2.get(u1.get(x, y), u1.get(x, z));
        prop_assert_eq!(holds(y, z), holds(z, y));
    }

    #[test]
    fn duality_preserves_distributivity(i in 0usize..92, j in 0usize..92) {
        let all = l4_uninorms();
        let (u1, u2) = (&all[i], &all[j]);
        prop_assert_eq!(
            check_distributivity(u1, u2).unwrap().verdict(),
            check_distributivity(&u1.dual(), &u2.dual()).unwrap().verdict()
        );
    }

    #[test]
    fn random_tables_agree_with_naive_validation(n in 1usize..4, e_seed in 0usize..4, cells in proptest::collection::vec(0usize..4, 16)) {
        let e = e_seed % (n + 1);
        let scale = ChainScale::new(n).unwrap();
        let t = OpTable::from_fn(scale, |x, y| cells[x * 4 + y] % (n + 1)).unwrap();
        prop_assert_eq!(validate_uninorm(&t, e).verdict(), naive_is_uninorm(&t.rows(), e));
    }
}
