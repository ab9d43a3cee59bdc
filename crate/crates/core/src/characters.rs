//! Irreducible characters of `S_n` by the Murnaghan–Nakayama rule.

use std::collections::HashMap;
use std::sync::RwLock;

use crate::error::{domain, Result};
use crate::partitions::{Partition, DEFAULT_PARTITION_BOUND};
use crate::scalar::{factorial, Scalar};

/// A border strip removed from a partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BorderStrip {
    /// Top row of the strip (0-based).
    pub start_row: usize,
    /// Number of rows the strip spans, minus one.
    pub height: usize,
    /// What is left after removing the strip.
    pub remainder: Partition,
}

/// All border strips of length `len` in `shape`, by starting row ascending.
///
/// Works on beta-numbers `b_i = λ_i + (ℓ - 1 - i)`: a strip of length `len`
/// starting in row `i` exists iff `b_i - len >= 0` is not already a
/// beta-number, and its height is the number of beta-numbers strictly between.
pub fn border_strips(shape: &Partition, len: usize) -> Vec<BorderStrip> {
    let l = shape.len();
    let beta: Vec<usize> = (0..l).map(|i| shape.part(i) + (l - 1 - i)).collect();
    let mut out = Vec::new();
    if len == 0 {
        return out;
    }
    for (i, &b) in beta.iter().enumerate() {
        if b < len {
            continue;
        }
        let target = b - len;
        if beta.contains(&target) {
            continue;
        }
        let height = beta.iter().filter(|&&x| target < x && x < b).count();
        let mut moved = beta.clone();
        moved[i] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let remainder = Partition::from_unsorted(moved.iter().enumerate().map(|(j, &x)| x - (l - 1 - j)));
        out.push(BorderStrip {
            start_row: i,
            height,
            remainder,
        });
    }
    out
}

/// Character evaluator with a shared memo table.
///
/// The cache is keyed by `(λ, μ)` and guarded by a read-write lock; entries
/// are inserted only once fully computed, so the engine can be shared across
/// threads.
pub struct CharacterEngine<T> {
    bound: usize,
    cache: RwLock<HashMap<(Partition, Partition), T>>,
}

impl<T: Scalar> Default for CharacterEngine<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Scalar> CharacterEngine<T> {
    pub fn new() -> Self {
        Self::with_bound(DEFAULT_PARTITION_BOUND)
    }

    /// An engine whose enumerations refuse sizes above `bound`.
    pub fn with_bound(bound: usize) -> Self {
        CharacterEngine {
            bound,
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn cached_entries(&self) -> usize {
        self.cache.read().expect("character cache poisoned").len()
    }

    /// `χ_λ(μ)`.
    pub fn character(&self, lambda: &Partition, mu: &Partition) -> Result<T> {
        if lambda.size() != mu.size() {
            return Err(domain(format!(
                "character needs partitions of equal size, got ({lambda}) and ({mu})"
            )));
        }
        self.evaluate(lambda, mu)
    }

    fn evaluate(&self, lambda: &Partition, mu: &Partition) -> Result<T> {
        if mu.is_empty() {
            return Ok(T::one());
        }
        let key = (lambda.clone(), mu.clone());
        if let Some(v) = self.cache.read().expect("character cache poisoned").get(&key) {
            return Ok(v.clone());
        }
        // Peel the largest cycle first.
        let rest = Partition::new(mu.parts()[1..].to_vec())?;
        let mut total = T::zero();
        for strip in border_strips(lambda, mu.part(0)) {
            let v = self.evaluate(&strip.remainder, &rest)?;
            total = if strip.height % 2 == 0 {
                total.add_exact(&v)?
            } else {
                total.sub_exact(&v)?
            };
        }
        self.cache
            .write()
            .expect("character cache poisoned")
            .insert(key, total.clone());
        Ok(total)
    }
}

/// Dimension of `V_λ` by the hook length formula.
pub fn dimension<T: Scalar>(lambda: &Partition) -> Result<T> {
    let hooks = lambda.cells().try_fold(T::one(), |acc, (r, c)| {
        acc.mul_exact(&T::from_u64_exact(lambda.hook_length(r, c) as u64)?)
    })?;
    factorial::<T>(lambda.size())?.div_exact(&hooks, "hook length formula")
}

/// `z_μ = Π i^{m_i} m_i!`, the order of the centraliser of `w_μ`.
pub fn centralizer_order<T: Scalar>(mu: &Partition) -> Result<T> {
    let mut z = T::one();
    for (i, &m) in mu.multiplicities().iter().enumerate().skip(1) {
        for _ in 0..m {
            z = z.mul_exact(&T::from_u64_exact(i as u64)?)?;
        }
        z = z.mul_exact(&factorial::<T>(m)?)?;
    }
    Ok(z)
}

/// Number of permutations in `S_n` of cycle type `μ`.
pub fn class_size<T: Scalar>(mu: &Partition) -> Result<T> {
    factorial::<T>(mu.size())?.div_exact(&centralizer_order::<T>(mu)?, "class size")
}
