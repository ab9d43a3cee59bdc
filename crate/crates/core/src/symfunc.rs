//! Degree-n symmetric functions in the Schur basis, and the Frobenius
//! characteristic `f_μ` of the permutation representation of `S_n` on the
//! cosets of the cyclic group generated by `w_μ`.
//!
//! Two independent routes are provided: [`frobenius_f`] averages power-sum
//! expansions over all powers of `w_μ`, while [`multiplicity`] reads off a
//! single Schur coefficient from characters grouped by divisors of the order.

use std::collections::btree_map::{self, BTreeMap};
use std::collections::HashMap;
use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::arith::{divisors, totient};
use crate::characters::{class_size, CharacterEngine};
use crate::error::{domain, Error, Result};
use crate::lr::schur_product;
use crate::partitions::{enumerate_partitions, Partition};
use crate::scalar::{factorial, Scalar};

/// A sparse integer combination of Schur functions of one degree.
///
/// Zero coefficients are never stored; terms iterate in partition order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurExpansion<T> {
    degree: usize,
    terms: BTreeMap<Partition, T>,
}

impl<T: Scalar> SchurExpansion<T> {
    pub fn zero(degree: usize) -> Self {
        SchurExpansion {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// The single Schur function `s_λ`.
    pub fn schur(lambda: Partition) -> Self {
        let mut e = Self::zero(lambda.size());
        e.terms.insert(lambda, T::one());
        e
    }

    pub fn from_terms(degree: usize, terms: impl IntoIterator<Item = (Partition, T)>) -> Result<Self> {
        let mut e = Self::zero(degree);
        for (p, c) in terms {
            e.add_term(p, &c)?;
        }
        Ok(e)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// Coefficient of `s_λ` (zero when absent).
    pub fn coefficient(&self, lambda: &Partition) -> T {
        self.terms.get(lambda).cloned().unwrap_or_else(T::zero)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, Partition, T> {
        self.terms.iter()
    }

    /// Adds `coeff * s_λ`.
    pub fn add_term(&mut self, lambda: Partition, coeff: &T) -> Result<()> {
        if lambda.size() != self.degree {
            return Err(domain(format!("term ({lambda}) does not have degree {}", self.degree)));
        }
        if coeff.is_zero() {
            return Ok(());
        }
        match self.terms.entry(lambda) {
            btree_map::Entry::Vacant(v) => {
                v.insert(coeff.clone());
            }
            btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().add_exact(coeff)?;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    /// Adds `scale * other` in place.
    pub fn add_scaled(&mut self, other: &Self, scale: &T) -> Result<()> {
        self.check_degree(other)?;
        for (p, c) in &other.terms {
            self.add_term(p.clone(), &c.mul_exact(scale)?)?;
        }
        Ok(())
    }

    /// Divides every coefficient by `d`, failing on any remainder.
    pub fn div_exact(&self, d: &T, context: &str) -> Result<Self> {
        let terms = self
            .terms
            .iter()
            .map(|(p, c)| Ok((p.clone(), c.div_exact(d, context)?)))
            .collect::<Result<_>>()?;
        Ok(SchurExpansion {
            degree: self.degree,
            terms,
        })
    }

    /// `self ≥ other`: `self - other` has no negative Schur coefficient.
    pub fn dominates(&self, other: &Self) -> Result<bool> {
        self.check_degree(other)?;
        let keys = self.terms.keys().chain(other.terms.keys());
        Ok(keys.into_iter().all(|p| other.coefficient(p) <= self.coefficient(p)))
    }

    /// Product in the ring of symmetric functions, via Littlewood–Richardson.
    pub fn product(&self, other: &Self) -> Result<Self> {
        let mut out = Self::zero(self.degree + other.degree);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let scale = ca.mul_exact(cb)?;
                out.add_scaled(&schur_product::<T>(a, b)?, &scale)?;
            }
        }
        Ok(out)
    }

    fn check_degree(&self, other: &Self) -> Result<()> {
        if self.degree != other.degree {
            return Err(domain(format!(
                "expansions have different degrees {} and {}",
                self.degree, other.degree
            )));
        }
        Ok(())
    }

    /// One term per line: `<coeff>\t<partition>`.
    pub fn to_tsv(&self) -> String {
        let mut s = String::new();
        for (p, c) in &self.terms {
            let _ = writeln!(s, "{c}\t{p}");
        }
        s
    }

    /// Inverse of [`to_tsv`](Self::to_tsv). The degree is needed for the
    /// zero expansion, which has no lines.
    pub fn from_tsv(degree: usize, text: &str) -> Result<Self> {
        let mut e = Self::zero(degree);
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            let (c, p) = line.split_once('\t').ok_or_else(|| Error::Parse {
                token: line.to_string(),
                reason: "expected `<coeff>\\t<partition>`".into(),
            })?;
            let coeff = T::parse_decimal(c.trim()).ok_or_else(|| Error::Parse {
                token: c.to_string(),
                reason: "expected an integer coefficient".into(),
            })?;
            e.add_term(p.parse()?, &coeff)?;
        }
        Ok(e)
    }

    /// JSON form; coefficients are decimal strings so any precision survives.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(p, c)| json!({ "partition": p.to_string(), "coeff": c.to_string() }))
            .collect();
        json!({ "degree": self.degree, "terms": terms })
    }

    /// Human-readable form such as `s(4) + s(3,1) + 2 s(2,2)`.
    pub fn pretty(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (p, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if !abs.is_one() {
                let _ = write!(s, "{abs} ");
            }
            let _ = write!(s, "s({p})");
        }
        s
    }
}

/// `p_μ = Σ_λ χ_λ(μ) s_λ`.
pub fn power_sum_to_schur<T: Scalar>(engine: &CharacterEngine<T>, mu: &Partition) -> Result<SchurExpansion<T>> {
    let n = mu.size();
    let mut e = SchurExpansion::zero(n);
    for lambda in enumerate_partitions(n, engine.bound())? {
        let c = engine.character(&lambda, mu)?;
        e.add_term(lambda, &c)?;
    }
    Ok(e)
}

/// `f_μ = (1/m) Σ_{j<m} p_{type(w_μ^j)}` with `m` the order of `w_μ`.
///
/// The sum is accumulated over every power `j`, grouping equal cycle types
/// only to avoid recomputing the same power-sum expansion, then divided
/// exactly by `m`.
pub fn frobenius_f<T: Scalar>(engine: &CharacterEngine<T>, mu: &Partition) -> Result<SchurExpansion<T>> {
    let m = mu.order()?;
    let mut counts: HashMap<Partition, u64> = HashMap::new();
    for j in 0..m {
        *counts.entry(mu.power_cycle_type(j)).or_default() += 1;
    }
    let mut types: Vec<_> = counts.into_iter().collect();
    types.sort();
    let mut total = SchurExpansion::zero(mu.size());
    for (nu, count) in types {
        total.add_scaled(&power_sum_to_schur(engine, &nu)?, &T::from_u64_exact(count)?)?;
    }
    let f = total.div_exact(&T::from_u64_exact(m)?, "averaging over the cyclic group")?;
    if let Some((p, c)) = f.iter().find(|(_, c)| c.is_negative()) {
        return Err(Error::Internal(format!("negative coefficient {c} on s({p})")));
    }
    Ok(f)
}

/// Multiplicity of `V_λ` in the induced representation, i.e. the dimension
/// of the `w_μ`-fixed subspace of `V_λ`:
/// `(1/m) Σ_{d | m} φ(m/d) χ_λ(type(w_μ^d))`.
pub fn multiplicity<T: Scalar>(engine: &CharacterEngine<T>, lambda: &Partition, mu: &Partition) -> Result<T> {
    if lambda.size() != mu.size() {
        return Err(domain(format!(
            "multiplicity needs partitions of equal size, got ({lambda}) and ({mu})"
        )));
    }
    let m = mu.order()?;
    let mut sum = T::zero();
    for d in divisors(m) {
        let chi = engine.character(lambda, &mu.power_cycle_type(d))?;
        sum = sum.add_exact(&chi.mul_exact(&T::from_u64_exact(totient(m / d))?)?)?;
    }
    sum.div_exact(&T::from_u64_exact(m)?, "fixed-space dimension")
}

/// `f ≥ g` in the Schur-positivity order.
pub fn dominates_expansion<T: Scalar>(f: &SchurExpansion<T>, g: &SchurExpansion<T>) -> Result<bool> {
    f.dominates(g)
}

/// Product of two expansions; degrees add.
pub fn expansion_product<T: Scalar>(f: &SchurExpansion<T>, g: &SchurExpansion<T>) -> Result<SchurExpansion<T>> {
    f.product(g)
}

/// `s_α s_β` computed through the power-sum basis:
/// `c^λ = (1 / (a! b!)) Σ_{ρ ⊢ a, σ ⊢ b} |C_ρ| |C_σ| χ_α(ρ) χ_β(σ) χ_λ(ρ ∪ σ)`.
///
/// Shares nothing with the tableau-counting route except the characters.
pub fn schur_product_via_power_sums<T: Scalar>(
    engine: &CharacterEngine<T>,
    alpha: &Partition,
    beta: &Partition,
) -> Result<SchurExpansion<T>> {
    let (a, b) = (alpha.size(), beta.size());
    let mut total = SchurExpansion::zero(a + b);
    for rho in enumerate_partitions(a, engine.bound())? {
        let x = class_size::<T>(&rho)?.mul_exact(&engine.character(alpha, &rho)?)?;
        if x.is_zero() {
            continue;
        }
        for sigma in enumerate_partitions(b, engine.bound())? {
            let y = class_size::<T>(&sigma)?.mul_exact(&engine.character(beta, &sigma)?)?;
            if y.is_zero() {
                continue;
            }
            let union = Partition::from_unsorted(rho.parts().iter().chain(sigma.parts()).copied());
            total.add_scaled(&power_sum_to_schur(engine, &union)?, &x.mul_exact(&y)?)?;
        }
    }
    let denom = factorial::<T>(a)?.mul_exact(&factorial::<T>(b)?)?;
    total.div_exact(&denom, "power-sum product")
}
