//! Eigenvalue multiplicities of `ρ_λ(w_μ)` and the immersion order.
//!
//! Every eigenvalue of `ρ_λ(w_μ)` is an `m`-th root of unity, `m` the order
//! of `w_μ`, so a profile is indexed by `k` in `0..m` standing for
//! `exp(2πik/m)`. Multiplicities come from Ramanujan sums and stay integral.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::arith::{divisors, ramanujan_sum};
use crate::characters::{dimension, CharacterEngine};
use crate::error::{domain, Error, Result};
use crate::partitions::{enumerate_partitions, Partition};
use crate::scalar::Scalar;
use crate::symfunc::multiplicity;
use crate::theorem::exceptions_at;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenvalueProfile<T> {
    order: u64,
    multiplicities: Vec<T>,
}

impl<T: Scalar> EigenvalueProfile<T> {
    /// Order `m` of the group element.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// `multiplicities()[k]` is the multiplicity of `exp(2πik/m)`.
    pub fn multiplicities(&self) -> &[T] {
        &self.multiplicities
    }

    /// Multiplicity of the eigenvalue 1: the dimension of the fixed space.
    pub fn fixed(&self) -> &T {
        &self.multiplicities[0]
    }

    /// Sum of all multiplicities; equals the dimension of the representation.
    pub fn total(&self) -> Result<T> {
        self.multiplicities
            .iter()
            .try_fold(T::zero(), |acc, x| acc.add_exact(x))
    }

    /// `k:mult` pairs separated by spaces, zeros suppressed.
    pub fn to_compact(&self) -> String {
        let mut s = String::new();
        for (k, x) in self.multiplicities.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            if !s.is_empty() {
                s.push(' ');
            }
            let _ = write!(s, "{k}:{x}");
        }
        s
    }

    pub fn to_json(&self) -> Value {
        let m: Vec<String> = self.multiplicities.iter().map(|x| x.to_string()).collect();
        json!({ "order": self.order, "multiplicities": m })
    }
}

/// Eigenvalue multiplicities of `ρ_λ(w_μ)`:
/// `mult[k] = (1/m) Σ_{d | m} χ_λ(type(w_μ^d)) c_{m/d}(k)`.
pub fn eigenvalue_profile<T: Scalar>(
    engine: &CharacterEngine<T>,
    lambda: &Partition,
    mu: &Partition,
) -> Result<EigenvalueProfile<T>> {
    if lambda.size() != mu.size() {
        return Err(domain(format!(
            "eigenvalue profile needs partitions of equal size, got ({lambda}) and ({mu})"
        )));
    }
    let m = mu.order()?;
    let terms: Vec<(u64, T)> = divisors(m)
        .into_iter()
        .map(|d| Ok((m / d, engine.character(lambda, &mu.power_cycle_type(d))?)))
        .collect::<Result<_>>()?;
    let order = T::from_u64_exact(m)?;
    let mut multiplicities = Vec::with_capacity(m as usize);
    for k in 0..m {
        let mut sum = T::zero();
        for (q, chi) in &terms {
            let c = T::from_i64_exact(ramanujan_sum(*q, k))?;
            sum = sum.add_exact(&chi.mul_exact(&c)?)?;
        }
        let x = sum.div_exact(&order, "eigenvalue multiplicity")?;
        if x.is_negative() {
            return Err(Error::Internal(format!(
                "negative multiplicity {x} at k = {k} for ({lambda}), ({mu})"
            )));
        }
        multiplicities.push(x);
    }
    Ok(EigenvalueProfile {
        order: m,
        multiplicities,
    })
}

/// `V_λ ⊑ V_κ`: for every cycle type, each eigenvalue occurs in `ρ_λ` at
/// most as often as in `ρ_κ`.
pub fn immersed<T: Scalar>(engine: &CharacterEngine<T>, lambda: &Partition, kappa: &Partition) -> Result<bool> {
    if lambda.size() != kappa.size() {
        return Err(domain(format!(
            "immersion compares partitions of equal size, got ({lambda}) and ({kappa})"
        )));
    }
    for mu in enumerate_partitions(lambda.size(), engine.bound())? {
        let a = eigenvalue_profile(engine, lambda, &mu)?;
        let b = eigenvalue_profile(engine, kappa, &mu)?;
        if a.multiplicities.iter().zip(&b.multiplicities).any(|(x, y)| x > y) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Result of checking which `V_λ` the trivial and sign representations
/// immerse into.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImmersionReport {
    pub n: usize,
    /// `λ` with `V_(n)` not immersed in `V_λ`, from eigenvalue profiles.
    pub trivial_failures: Vec<Partition>,
    /// The `λ` appearing in some exceptional pair of size `n`.
    pub trivial_expected: Vec<Partition>,
    /// `λ` with `V_(1^n)` not immersed in `V_λ`, from eigenvalue profiles.
    pub sign_failures: Vec<Partition>,
    /// Conjugates of `trivial_expected`.
    pub sign_expected: Vec<Partition>,
    pub profiles_checked: usize,
    /// `(λ, μ)` whose profile does not sum to `dim V_λ`.
    pub dimension_mismatches: Vec<(Partition, Partition)>,
    /// `(λ, μ)` whose eigenvalue-1 multiplicity differs from the fixed-space
    /// dimension computed by the divisor formula.
    pub fixed_space_mismatches: Vec<(Partition, Partition)>,
}

impl ImmersionReport {
    pub fn is_consistent(&self) -> bool {
        self.trivial_failures == self.trivial_expected
            && self.sign_failures == self.sign_expected
            && self.dimension_mismatches.is_empty()
            && self.fixed_space_mismatches.is_empty()
    }

    pub fn to_json(&self) -> Value {
        let names = |v: &[Partition]| v.iter().map(|p| p.to_string()).collect::<Vec<_>>();
        let pairs = |v: &[(Partition, Partition)]| {
            v.iter()
                .map(|(l, m)| json!({ "lambda": l.to_string(), "mu": m.to_string() }))
                .collect::<Vec<_>>()
        };
        json!({
            "n": self.n,
            "consistent": self.is_consistent(),
            "trivial_not_immersed": names(&self.trivial_failures),
            "trivial_expected": names(&self.trivial_expected),
            "sign_not_immersed": names(&self.sign_failures),
            "sign_expected": names(&self.sign_expected),
            "profiles_checked": self.profiles_checked,
            "dimension_mismatches": pairs(&self.dimension_mismatches),
            "fixed_space_mismatches": pairs(&self.fixed_space_mismatches),
        })
    }

    pub fn to_tsv(&self) -> String {
        let mut s = String::from("direction\tlambda\tnot_immersed\texpected\n");
        let all: Vec<&Partition> = {
            let mut v: Vec<&Partition> = self.trivial_failures.iter().chain(&self.trivial_expected).collect();
            v.sort();
            v.dedup();
            v
        };
        for l in all {
            let _ = writeln!(
                s,
                "trivial\t{l}\t{}\t{}",
                self.trivial_failures.contains(l),
                self.trivial_expected.contains(l)
            );
        }
        let mut sign: Vec<&Partition> = self.sign_failures.iter().chain(&self.sign_expected).collect();
        sign.sort();
        sign.dedup();
        for l in sign {
            let _ = writeln!(
                s,
                "sign\t{l}\t{}\t{}",
                self.sign_failures.contains(l),
                self.sign_expected.contains(l)
            );
        }
        s
    }
}

/// Computes every profile at size `n` and compares the immersion of the
/// trivial and sign representations with the exception families.
pub fn verify_immersion_theorem<T: Scalar>(engine: &CharacterEngine<T>, n: usize) -> Result<ImmersionReport> {
    let parts = enumerate_partitions(n, engine.bound())?;
    // profiles[mu][lambda]
    let profiles: Vec<Vec<EigenvalueProfile<T>>> = parts
        .par_iter()
        .map(|mu| {
            parts
                .iter()
                .map(|lambda| eigenvalue_profile(engine, lambda, mu))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;

    let mut dimension_mismatches = Vec::new();
    let mut fixed_space_mismatches = Vec::new();
    for (mi, mu) in parts.iter().enumerate() {
        for (li, lambda) in parts.iter().enumerate() {
            let profile = &profiles[mi][li];
            if profile.total()? != dimension::<T>(lambda)? {
                dimension_mismatches.push((lambda.clone(), mu.clone()));
            }
            if *profile.fixed() != multiplicity(engine, lambda, mu)? {
                fixed_space_mismatches.push((lambda.clone(), mu.clone()));
            }
        }
    }

    let index_of = |p: &Partition| parts.iter().position(|q| q == p).expect("partition of n");
    let not_immersed_in = |source: usize| -> Vec<Partition> {
        parts
            .iter()
            .enumerate()
            .filter(|&(li, _)| {
                profiles.iter().any(|row| {
                    row[source]
                        .multiplicities
                        .iter()
                        .zip(&row[li].multiplicities)
                        .any(|(a, b)| a > b)
                })
            })
            .map(|(_, l)| l.clone())
            .collect()
    };
    let trivial_failures = not_immersed_in(index_of(&Partition::row(n)));
    let sign_failures = not_immersed_in(index_of(&Partition::column(n)));

    let mut trivial_expected: Vec<Partition> = exceptions_at(n, engine.bound())?
        .into_iter()
        .map(|r| r.lambda)
        .collect();
    trivial_expected.sort();
    trivial_expected.dedup();
    let mut sign_expected: Vec<Partition> = trivial_expected.iter().map(Partition::conjugate).collect();
    sign_expected.sort();

    Ok(ImmersionReport {
        n,
        trivial_failures,
        trivial_expected,
        sign_failures,
        sign_expected,
        profiles_checked: parts.len() * parts.len(),
        dimension_mismatches,
        fixed_space_mismatches,
    })
}
