mod common;

use common::{cycle_type, p, permutation_of_type, power};
use invec::{
    dimension, eigenvalue_profile, enumerate_partitions, expansion_product, frobenius_f, multiplicity, BigInt, Engine,
    Engine64, Expansion64, Partition,
};
use proptest::prelude::*;

fn factorial(n: usize) -> i64 {
    (1..=n as i64).product()
}

/// `(1/m) Σ_j χ_λ(w^j)` with `w^j` built as an explicit permutation.
fn fixed_dim_by_powers(e: &Engine64, lambda: &Partition, mu: &Partition) -> i64 {
    let w = permutation_of_type(mu.parts());
    let n = mu.size();
    let identity: Vec<usize> = (0..n).collect();
    let mut m = 1;
    while power(&w, m) != identity {
        m += 1;
    }
    let total: i64 = (0..m)
        .map(|j| {
            let t = Partition::new(cycle_type(&power(&w, j))).unwrap();
            e.character(lambda, &t).unwrap()
        })
        .sum();
    assert_eq!(total % m as i64, 0);
    total / m as i64
}

#[test]
fn averaged_expansion_matches_divisor_formula() {
    let e = Engine::new();
    for n in 1..=11 {
        for mu in enumerate_partitions(n, 30).unwrap() {
            let f = frobenius_f(&e, &mu).unwrap();
            for lambda in enumerate_partitions(n, 30).unwrap() {
                assert_eq!(
                    f.coefficient(&lambda),
                    multiplicity(&e, &lambda, &mu).unwrap(),
                    "{lambda:?} {mu:?}"
                );
            }
        }
    }
}

#[test]
fn multiplicity_matches_explicit_powers() {
    let e = Engine64::new();
    for n in 1..=8 {
        for mu in enumerate_partitions(n, 30).unwrap() {
            for lambda in enumerate_partitions(n, 30).unwrap() {
                assert_eq!(
                    multiplicity(&e, &lambda, &mu).unwrap(),
                    fixed_dim_by_powers(&e, &lambda, &mu)
                );
            }
        }
    }
}

#[test]
fn weighted_dimension_is_index_of_cyclic_subgroup() {
    let e = Engine64::new();
    for n in 1..=10 {
        for mu in enumerate_partitions(n, 30).unwrap() {
            let f = frobenius_f(&e, &mu).unwrap();
            let total: i64 = f.iter().map(|(l, c)| c * dimension::<i64>(l).unwrap()).sum();
            assert_eq!(total, factorial(n) / mu.order().unwrap() as i64, "{mu:?}");
        }
    }
}

#[test]
fn conjugate_coefficient_follows_sign_of_permutation() {
    let e = Engine64::new();
    for n in 1..=9 {
        for mu in enumerate_partitions(n, 30).unwrap() {
            let f = frobenius_f(&e, &mu).unwrap();
            for lambda in enumerate_partitions(n, 30).unwrap() {
                let conj = f.coefficient(&lambda.conjugate());
                if mu.is_even_permutation() {
                    assert_eq!(conj, f.coefficient(&lambda));
                } else {
                    // odd w: sign(w^j) = (-1)^j, so this counts the eigenvalue -1 in V_λ
                    let prof = eigenvalue_profile(&e, &lambda, &mu).unwrap();
                    let m = prof.order() as usize;
                    assert_eq!(conj, prof.multiplicities()[m / 2], "{lambda:?} {mu:?}");
                }
            }
        }
    }
}

#[test]
fn cyclic_product_bounds_from_below() {
    let e = Engine64::new();
    for n in 1..=10 {
        for mu in enumerate_partitions(n, 30).unwrap() {
            let f = frobenius_f(&e, &mu).unwrap();
            let mut prod = Expansion64::schur(Partition::empty());
            for &part in mu.parts() {
                prod = expansion_product(&prod, &frobenius_f(&e, &Partition::row(part)).unwrap()).unwrap();
            }
            assert_eq!(prod.degree(), n);
            assert!(f.dominates(&prod).unwrap(), "{mu:?}");
        }
    }
}

#[test]
fn trivial_coefficient_is_one() {
    let e = Engine::new();
    for n in 1..=12 {
        for mu in enumerate_partitions(n, 30).unwrap() {
            let f = frobenius_f(&e, &mu).unwrap();
            assert_eq!(f.coefficient(&Partition::row(n)), BigInt::from(1));
        }
    }
}

fn golden(f: &Expansion64, expected: &[(&str, i64)]) {
    let nonzero: Vec<(String, i64)> = f.iter().map(|(l, c)| (l.to_string(), *c)).collect();
    let mut want: Vec<(String, i64)> = expected.iter().map(|(l, c)| (l.to_string(), *c)).collect();
    want.sort_by_key(|(l, _)| l.parse::<Partition>().unwrap());
    let mut got = nonzero;
    got.sort_by_key(|(l, _)| l.parse::<Partition>().unwrap());
    assert_eq!(got, want);
}

#[test]
fn small_golden_expansions() {
    let e = Engine64::new();
    // the identity of S_2: p_{11} = s_2 + s_11
    golden(&frobenius_f(&e, &p(&[1, 1])).unwrap(), &[("2", 1), ("1,1", 1)]);
    // half of p_{1111} + p_{22}, read off the S_4 character table
    golden(
        &frobenius_f(&e, &p(&[2, 2])).unwrap(),
        &[("4", 1), ("3,1", 1), ("2,2", 2), ("2,1,1", 1), ("1,1,1,1", 1)],
    );
    golden(
        &frobenius_f(&e, &p(&[3, 3])).unwrap(),
        &[
            ("6", 1),
            ("5,1", 1),
            ("4,2", 3),
            ("4,1,1", 4),
            ("3,3", 3),
            ("3,2,1", 4),
            ("3,1,1,1", 4),
            ("2,2,2", 3),
            ("2,2,1,1", 3),
            ("2,1,1,1,1", 1),
            ("1,1,1,1,1,1", 1),
        ],
    );
}

#[test]
fn f_of_single_cycle_matches_s3_table() {
    // w = 3-cycle: (p_111 + 2 p_3)/3 = s_3 + s_111
    let e = Engine64::new();
    golden(&frobenius_f(&e, &p(&[3])).unwrap(), &[("3", 1), ("1,1,1", 1)]);
}

proptest! {
    #[test]
    fn tsv_round_trip(n in 1usize..9, idx in 0usize..1000) {
        let e = Engine64::new();
        let all = enumerate_partitions(n, 30).unwrap();
        let mu = &all[idx % all.len()];
        let f = frobenius_f(&e, mu).unwrap();
        let back = Expansion64::from_tsv(n, &f.to_tsv()).unwrap();
        prop_assert_eq!(back, f);
    }
}
