mod common;

use common::p;
use invec::{
    choose_beta, enumerate_partitions, exception_cases, exceptions_at, find_witness, is_persistent, main_admits,
    multiplicity, non_admitting, swanson_admits, verify_main_theorem, Engine, Engine64, Error, Partition,
};

#[test]
fn single_cycle_is_the_long_cycle_case_of_the_closed_form() {
    for n in 1..=15 {
        let cycle = Partition::row(n);
        for lambda in enumerate_partitions(n, 30).unwrap() {
            assert_eq!(
                main_admits(&lambda, &cycle).unwrap(),
                swanson_admits(&lambda),
                "{lambda:?}"
            );
        }
    }
}

#[test]
fn single_cycle_oracle_matches_fixed_space() {
    let e = Engine::new();
    for n in 1..=15 {
        let cycle = Partition::row(n);
        for lambda in enumerate_partitions(n, 30).unwrap() {
            let m = multiplicity(&e, &lambda, &cycle).unwrap();
            assert_eq!(m != 0.into(), swanson_admits(&lambda), "{lambda:?}");
        }
    }
}

#[test]
fn closed_form_matches_brute_force() {
    let e = Engine64::new();
    for n in 1..=11 {
        let parts = enumerate_partitions(n, 30).unwrap();
        for mu in &parts {
            for lambda in &parts {
                let brute = multiplicity(&e, lambda, mu).unwrap() > 0;
                assert_eq!(main_admits(lambda, mu).unwrap(), brute, "{lambda:?} {mu:?}");
            }
        }
    }
}

#[test]
fn conjugation_preserves_answer_for_even_permutations() {
    for n in 1..=10 {
        let parts = enumerate_partitions(n, 30).unwrap();
        for mu in parts.iter().filter(|m| m.is_even_permutation()) {
            for lambda in &parts {
                assert_eq!(
                    main_admits(lambda, mu).unwrap(),
                    main_admits(&lambda.conjugate(), mu).unwrap(),
                    "{lambda:?} {mu:?}"
                );
            }
        }
    }
}

#[test]
fn overlapping_families() {
    assert_eq!(exception_cases(&p(&[1, 1]), &p(&[2])).unwrap(), vec![1, 2]);
    assert_eq!(exception_cases(&p(&[2, 1]), &p(&[3])).unwrap(), vec![2, 3]);
    assert_eq!(exception_cases(&p(&[2, 2, 2]), &p(&[3, 2, 1])).unwrap(), vec![6]);
    assert!(exception_cases(&p(&[2, 2, 2]), &p(&[3, 2, 1])).is_ok());
    assert!(matches!(exception_cases(&p(&[2, 2]), &p(&[3])), Err(Error::Domain(_))));
}

#[test]
fn exceptions_at_lists_exactly_the_non_admitting_pairs() {
    let e = Engine64::new();
    for n in 1..=9 {
        let listed: Vec<(Partition, Partition)> = exceptions_at(n, 30)
            .unwrap()
            .into_iter()
            .map(|r| (r.lambda, r.mu))
            .collect();
        let mut brute = Vec::new();
        for lambda in enumerate_partitions(n, 30).unwrap() {
            for mu in enumerate_partitions(n, 30).unwrap() {
                if multiplicity(&e, &lambda, &mu).unwrap() == 0 {
                    brute.push((lambda.clone(), mu));
                }
            }
        }
        assert_eq!(listed, brute, "n = {n}");
    }
}

#[test]
fn non_admitting_and_persistence() {
    let e = Engine64::new();
    assert_eq!(non_admitting(&e, &p(&[3, 1])).unwrap(), vec![p(&[2, 2])]);
    assert!(!is_persistent(&e, &p(&[3, 1])).unwrap());
    assert!(is_persistent(&e, &p(&[4, 1])).unwrap());
    // the even class (5,3) misses (4,4) and (2,2,2,2)
    assert_eq!(
        non_admitting(&e, &p(&[5, 3])).unwrap(),
        vec![p(&[4, 4]), p(&[2, 2, 2, 2])]
    );
}

#[test]
fn choose_beta_postcondition() {
    for n in 3..=12 {
        for lambda in enumerate_partitions(n, 30).unwrap() {
            for q in 1..=n - 2 {
                let r = choose_beta(&lambda, q);
                if lambda == Partition::column(n) {
                    assert!(matches!(r, Err(Error::Domain(_))));
                    continue;
                }
                let beta = r.unwrap();
                assert_eq!(beta.size(), q);
                assert!(lambda.contains(&beta));
                assert!(swanson_admits(&beta));
            }
        }
    }
    assert!(choose_beta(&p(&[3, 1]), 3).is_err());
    assert!(choose_beta(&p(&[3, 1]), 0).is_err());
}

#[test]
fn witnesses_are_sound() {
    let e = Engine64::new();
    for n in 2..=9 {
        for q in 1..n {
            let pp = n - q;
            let mu = Partition::from_unsorted([pp, q]);
            for lambda in enumerate_partitions(n, 30).unwrap() {
                if let Some(w) = find_witness(&lambda, pp, q).unwrap() {
                    w.validate(&lambda).unwrap();
                    assert!(multiplicity(&e, &lambda, &mu).unwrap() >= 1, "{lambda:?} ({pp},{q})");
                }
            }
        }
    }
}

#[test]
fn witnesses_exist_for_two_long_cycles() {
    for n in 8..=10 {
        for q in 4..=n / 2 {
            let pp = n - q;
            for lambda in enumerate_partitions(n, 30).unwrap() {
                if lambda == Partition::column(n) || lambda == Partition::with_ones(&[2], n - 2).unwrap() {
                    continue;
                }
                assert!(find_witness(&lambda, pp, q).unwrap().is_some(), "{lambda:?} ({pp},{q})");
            }
        }
    }
}

#[test]
fn no_witness_for_the_two_cycle_family() {
    for pp in [5, 7] {
        let lambda = Partition::with_ones(&[2, 2], pp - 2).unwrap();
        assert!(find_witness(&lambda, pp, 2).unwrap().is_none(), "{lambda:?}");
    }
}

#[test]
fn witness_rejects_wrong_size() {
    assert!(matches!(find_witness(&p(&[3, 2]), 3, 3), Err(Error::Domain(_))));
}

#[test]
fn verification_does_not_depend_on_thread_count() {
    let run = |threads| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| verify_main_theorem(&Engine::new(), 9).unwrap())
    };
    let one = run(1);
    let four = run(4);
    assert!(one.is_consistent());
    assert_eq!(one.to_tsv(), four.to_tsv());
    assert_eq!(one.rows, four.rows);
}
