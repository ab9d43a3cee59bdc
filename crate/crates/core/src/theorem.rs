//! The classification of pairs `(λ, μ)` for which `w_μ` fixes no nonzero
//! vector of `V_λ`, the single-cycle case, persistence, and the
//! Littlewood–Richardson witnesses used to certify invariant vectors.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::characters::CharacterEngine;
use crate::error::{domain, Error, Result};
use crate::lr::{canonical_column_tableau, first_lr_tableau, LrTableau};
use crate::partitions::{enumerate_partitions, Partition, SkewShape};
use crate::scalar::Scalar;
use crate::symfunc::multiplicity;

/// A pair `(λ, μ)` without invariant vectors, with every exception family
/// (numbered 1 to 9) it belongs to.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ExceptionRecord {
    pub lambda: Partition,
    pub mu: Partition,
    pub case_ids: Vec<u8>,
}

/// Whether an `n`-cycle fixes a nonzero vector of `V_λ`.
pub fn swanson_admits(lambda: &Partition) -> bool {
    let n = lambda.size();
    if n >= 2 && lambda.parts() == [n - 1, 1] {
        return false;
    }
    if n.is_multiple_of(2) && n > 0 && *lambda == Partition::column(n) {
        return false;
    }
    if n >= 3 && n % 2 == 1 && is_two_then_ones(lambda, 1) {
        return false;
    }
    true
}

/// `λ = (2^twos, 1^rest)` with at least one 1.
fn is_two_then_ones(lambda: &Partition, twos: usize) -> bool {
    let p = lambda.parts();
    p.len() > twos && p[..twos].iter().all(|&x| x == 2) && p[twos..].iter().all(|&x| x == 1)
}

/// Every exception family the pair belongs to; empty when `w_μ` admits an
/// invariant vector in `V_λ`.
pub fn exception_cases(lambda: &Partition, mu: &Partition) -> Result<Vec<u8>> {
    if lambda.size() != mu.size() {
        return Err(domain(format!(
            "({lambda}) and ({mu}) are partitions of different sizes"
        )));
    }
    let n = lambda.size();
    let l = lambda.parts();
    let m = mu.parts();
    let odd = n % 2 == 1;
    let mut cases = Vec::new();
    if n >= 1 && *lambda == Partition::column(n) && !mu.is_even_permutation() {
        cases.push(1);
    }
    if n >= 2 && l == [n - 1, 1] && m == [n] {
        cases.push(2);
    }
    if n >= 3 && odd && is_two_then_ones(lambda, 1) && m == [n] {
        cases.push(3);
    }
    if n >= 5 && odd && is_two_then_ones(lambda, 2) && m == [n - 2, 2] {
        cases.push(4);
    }
    let sporadic: [(&[usize], &[usize], u8); 5] = [
        (&[2, 2], &[3, 1], 5),
        (&[2, 2, 2], &[3, 2, 1], 6),
        (&[2, 2, 2, 2], &[5, 3], 7),
        (&[4, 4], &[5, 3], 8),
        (&[2, 2, 2, 2, 2], &[5, 3, 2], 9),
    ];
    for (sl, sm, id) in sporadic {
        if l == sl && m == sm {
            cases.push(id);
        }
    }
    Ok(cases)
}

/// Whether `w_μ` admits a nonzero invariant vector in `V_λ`, by the closed form.
pub fn main_admits(lambda: &Partition, mu: &Partition) -> Result<bool> {
    Ok(exception_cases(lambda, mu)?.is_empty())
}

/// All exceptional pairs of size `n`, sorted by `(λ, μ)`.
pub fn exceptions_at(n: usize, bound: usize) -> Result<Vec<ExceptionRecord>> {
    let parts = enumerate_partitions(n, bound)?;
    let mut out = Vec::new();
    for lambda in &parts {
        for mu in &parts {
            let case_ids = exception_cases(lambda, mu)?;
            if !case_ids.is_empty() {
                out.push(ExceptionRecord {
                    lambda: lambda.clone(),
                    mu: mu.clone(),
                    case_ids,
                });
            }
        }
    }
    Ok(out)
}

/// The `λ ⊢ n` other than `(1^n)` whose fixed space under `w_μ` is zero,
/// together with `(1^n)` when it also fails. Computed from multiplicities.
pub fn non_admitting<T: Scalar>(engine: &CharacterEngine<T>, mu: &Partition) -> Result<Vec<Partition>> {
    let mut out = Vec::new();
    for lambda in enumerate_partitions(mu.size(), engine.bound())? {
        if multiplicity(engine, &lambda, mu)?.is_zero() {
            out.push(lambda);
        }
    }
    Ok(out)
}

/// `μ` is persistent when every `V_λ` except possibly the sign
/// representation has a nonzero `w_μ`-fixed vector. Brute force.
pub fn is_persistent<T: Scalar>(engine: &CharacterEngine<T>, mu: &Partition) -> Result<bool> {
    let sign = Partition::column(mu.size());
    Ok(non_admitting(engine, mu)?.iter().all(|l| *l == sign))
}

/// A `β ⊢ q` contained in `λ` for which a `q`-cycle has invariant vectors in
/// `V_β`, chosen by the case split on which small shape `λ` contains.
pub fn choose_beta(lambda: &Partition, q: usize) -> Result<Partition> {
    let n = lambda.size();
    if q == 0 || n < q + 2 {
        return Err(domain(format!(
            "choose_beta needs q >= 1 and |λ| >= q + 2, got q = {q}, λ = ({lambda})"
        )));
    }
    if *lambda == Partition::column(n) {
        return Err(domain("choose_beta is undefined for the one-column partition"));
    }
    let width = lambda.part(0);
    let height = lambda.len();
    let beta = if q >= 2 && lambda.contains(&Partition::from_unsorted([q - 1, 1])) {
        if width >= q {
            Partition::row(q)
        } else if height >= 3 {
            Partition::from_unsorted([q - 2, 1, 1])
        } else {
            Partition::from_unsorted([q - 2, 2])
        }
    } else if q.is_multiple_of(2) && lambda.contains(&Partition::column(q)) {
        Partition::with_ones(&[2], q - 2)?
    } else if q >= 3 && q % 2 == 1 && lambda.contains(&Partition::with_ones(&[2], q - 2)?) {
        if width >= 3 {
            Partition::with_ones(&[3], q - 3)?
        } else if height >= q {
            Partition::column(q)
        } else {
            Partition::with_ones(&[2, 2], q.saturating_sub(4))?
        }
    } else {
        enumerate_partitions(q, usize::MAX)?
            .into_iter()
            .find(|b| lambda.contains(b) && swanson_admits(b))
            .ok_or_else(|| Error::Internal(format!("no admissible β ⊢ {q} inside ({lambda})")))?
    };
    if !lambda.contains(&beta) || !swanson_admits(&beta) || beta.size() != q {
        return Err(Error::Internal(format!(
            "choose_beta picked ({beta}) for ({lambda}), q = {q}"
        )));
    }
    Ok(beta)
}

/// Certificate that `f_(p) f_(q) ≥ s_λ`: partitions `α ⊢ p`, `β ⊢ q` on which
/// the single-cycle classes have invariant vectors, and an LR tableau of shape
/// `λ/α` and weight `β`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessPair {
    pub alpha: Partition,
    pub beta: Partition,
    pub certificate: LrTableau,
}

impl WitnessPair {
    /// Re-checks every claim of the certificate against `λ`.
    pub fn validate(&self, lambda: &Partition) -> Result<()> {
        if !swanson_admits(&self.alpha) || !swanson_admits(&self.beta) {
            return Err(domain(format!(
                "({}) or ({}) has no invariant vector for its long cycle",
                self.alpha, self.beta
            )));
        }
        let shape = self.certificate.shape();
        if shape.outer() != lambda || shape.inner() != &self.alpha {
            return Err(domain(format!(
                "certificate shape {shape} is not ({lambda})/({})",
                self.alpha
            )));
        }
        if self.certificate.weight() != &self.beta {
            return Err(domain("certificate weight differs from β"));
        }
        self.certificate.validate()
    }
}

/// Searches for a [`WitnessPair`] with `α ⊢ p`, `β ⊢ q`.
///
/// First tries the constructive choice (β from [`choose_beta`], α the weight
/// of the column tableau of `λ/β`); otherwise searches all contained pairs.
pub fn find_witness(lambda: &Partition, p: usize, q: usize) -> Result<Option<WitnessPair>> {
    if lambda.size() != p + q {
        return Err(domain(format!("({lambda}) is not a partition of {p} + {q}")));
    }
    if let Ok(beta) = choose_beta(lambda, q) {
        let alpha = canonical_column_tableau(lambda, &beta)?.weight().clone();
        if let Some(w) = certify(lambda, &alpha, &beta)? {
            return Ok(Some(w));
        }
    }
    let alphas: Vec<Partition> = enumerate_partitions(p, usize::MAX)?
        .into_iter()
        .filter(|a| lambda.contains(a) && swanson_admits(a))
        .collect();
    let betas: Vec<Partition> = enumerate_partitions(q, usize::MAX)?
        .into_iter()
        .filter(|b| lambda.contains(b) && swanson_admits(b))
        .collect();
    for alpha in &alphas {
        for beta in &betas {
            if let Some(w) = certify(lambda, alpha, beta)? {
                return Ok(Some(w));
            }
        }
    }
    Ok(None)
}

fn certify(lambda: &Partition, alpha: &Partition, beta: &Partition) -> Result<Option<WitnessPair>> {
    if !swanson_admits(alpha) || !swanson_admits(beta) || !lambda.contains(alpha) {
        return Ok(None);
    }
    let shape = SkewShape::new(lambda.clone(), alpha.clone())?;
    Ok(first_lr_tableau(&shape, beta)?.map(|certificate| WitnessPair {
        alpha: alpha.clone(),
        beta: beta.clone(),
        certificate,
    }))
}

/// A pair found by brute force or by the closed form to have no invariant vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportRow<T> {
    pub n: usize,
    pub lambda: Partition,
    pub mu: Partition,
    pub case_ids: Vec<u8>,
    pub multiplicity: T,
}

impl<T> ReportRow<T> {
    /// Closed form and brute force agree on this pair.
    pub fn agrees(&self) -> bool
    where
        T: Scalar,
    {
        self.case_ids.is_empty() != self.multiplicity.is_zero()
    }
}

/// Result of checking the closed form against brute force for all `n <= n_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport<T> {
    pub n_max: usize,
    /// `(n, pairs checked, exceptions found)` for each size.
    pub per_size: Vec<(usize, usize, usize)>,
    pub pairs_checked: usize,
    /// Every pair that is exceptional by either route, sorted by `(n, λ, μ)`.
    pub rows: Vec<ReportRow<T>>,
}

impl<T: Scalar> VerifyReport<T> {
    pub fn disagreements(&self) -> impl Iterator<Item = &ReportRow<T>> {
        self.rows.iter().filter(|r| !r.agrees())
    }

    pub fn is_consistent(&self) -> bool {
        self.disagreements().next().is_none()
    }

    /// Header plus one line per row: `n lambda mu case_ids multiplicity`.
    pub fn to_tsv(&self) -> String {
        let mut s = String::from("n\tlambda\tmu\tcase_ids\tmultiplicity\n");
        for r in &self.rows {
            let _ = writeln!(
                s,
                "{}\t{}\t{}\t{}\t{}",
                r.n,
                r.lambda,
                r.mu,
                case_list(&r.case_ids),
                r.multiplicity
            );
        }
        s
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                json!({
                    "n": r.n,
                    "lambda": r.lambda.to_string(),
                    "mu": r.mu.to_string(),
                    "case_ids": r.case_ids,
                    "multiplicity": r.multiplicity.to_string(),
                    "agree": r.agrees(),
                })
            })
            .collect();
        let per_size: Vec<Value> = self
            .per_size
            .iter()
            .map(|&(n, pairs, exc)| json!({ "n": n, "pairs": pairs, "exceptions": exc }))
            .collect();
        json!({
            "n_max": self.n_max,
            "pairs_checked": self.pairs_checked,
            "consistent": self.is_consistent(),
            "disagreements": self.disagreements().count(),
            "per_size": per_size,
            "exceptions": rows,
        })
    }
}

pub(crate) fn case_list(ids: &[u8]) -> String {
    if ids.is_empty() {
        "-".into()
    } else {
        ids.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// Checks the closed form against fixed-space dimensions for every pair of
/// partitions of every `n` in `1..=n_max`. Work is spread over the current
/// rayon pool; the report does not depend on the number of threads.
pub fn verify_main_theorem<T: Scalar>(engine: &CharacterEngine<T>, n_max: usize) -> Result<VerifyReport<T>> {
    let mut tasks = Vec::new();
    let mut sizes = Vec::new();
    for n in 1..=n_max {
        let parts = enumerate_partitions(n, engine.bound())?;
        sizes.push((n, parts.len()));
        for mu in &parts {
            tasks.push((n, mu.clone(), parts.clone()));
        }
    }
    let chunks: Vec<Vec<ReportRow<T>>> = tasks
        .par_iter()
        .map(|(n, mu, lambdas)| {
            let mut rows = Vec::new();
            for lambda in lambdas {
                let case_ids = exception_cases(lambda, mu)?;
                let mult = multiplicity(engine, lambda, mu)?;
                if !case_ids.is_empty() || mult.is_zero() {
                    rows.push(ReportRow {
                        n: *n,
                        lambda: lambda.clone(),
                        mu: mu.clone(),
                        case_ids,
                        multiplicity: mult,
                    });
                }
            }
            Ok(rows)
        })
        .collect::<Result<_>>()?;
    let mut rows: Vec<ReportRow<T>> = chunks.into_iter().flatten().collect();
    rows.sort_by(|a, b| (a.n, &a.lambda, &a.mu).cmp(&(b.n, &b.lambda, &b.mu)));
    let per_size = sizes
        .iter()
        .map(|&(n, p)| (n, p * p, rows.iter().filter(|r| r.n == n).count()))
        .collect::<Vec<_>>();
    Ok(VerifyReport {
        n_max,
        pairs_checked: per_size.iter().map(|s| s.1).sum(),
        per_size,
        rows,
    })
}
