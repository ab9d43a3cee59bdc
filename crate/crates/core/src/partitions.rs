//! Integer partitions, skew shapes and cycle-type arithmetic.
//!
//! A [`Partition`] doubles as the label of an irreducible representation of
//! `S_n` and as the cycle type of a permutation.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::arith::{gcd, lcm};
use crate::error::{domain, Error, Result};

/// Largest `n` enumerated unless a caller raises it. p(30) = 5604.
pub const DEFAULT_PARTITION_BOUND: usize = 30;

/// A weakly decreasing sequence of positive integers.
///
/// Ordered first by size, then reverse-lexicographically, so that within a
/// fixed size `(n)` comes first and `(1^n)` last.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
    size: usize,
}

/// Builds a partition from a literal list of parts, panicking on invalid input.
#[macro_export]
macro_rules! partition {
    () => { $crate::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::Partition::new(vec![$($p),+]).expect("valid partition literal")
    };
}

impl Partition {
    /// Validates `parts`: every part positive, weakly decreasing.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if let Some(i) = parts.iter().position(|&p| p == 0) {
            return Err(domain(format!("part {} is zero", i + 1)));
        }
        if let Some(w) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(domain(format!(
                "parts must be weakly decreasing, but {} < {}",
                parts[w],
                parts[w + 1]
            )));
        }
        let size = parts.iter().sum();
        Ok(Partition { parts, size })
    }

    /// Sorts and drops zero parts.
    pub fn from_unsorted(parts: impl IntoIterator<Item = usize>) -> Self {
        let mut parts: Vec<usize> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let size = parts.iter().sum();
        Partition { parts, size }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        Partition::from_unsorted([n])
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition::from_unsorted(std::iter::repeat_n(1, n))
    }

    /// `head` followed by `ones` parts equal to 1, e.g. `(2,2,1^k)`.
    pub fn with_ones(head: &[usize], ones: usize) -> Result<Self> {
        let mut parts = head.to_vec();
        parts.extend(std::iter::repeat_n(1, ones));
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn size(&self) -> usize {
        self.size
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part (0-based), with zero padding.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width)
            .map(|i| self.parts.iter().take_while(|&&p| p > i).count())
            .collect();
        Partition { parts, size: self.size }
    }

    /// Young-diagram containment: `inner.part(i) <= self.part(i)` for all `i`.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Dominance order on partitions of the same size.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        if self.size != other.size {
            return Err(domain(format!(
                "dominance compares partitions of equal size, got {} and {}",
                self.size, other.size
            )));
        }
        let (mut a, mut b) = (0, 0);
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether a permutation of this cycle type is even.
    pub fn is_even_permutation(&self) -> bool {
        self.parts.iter().map(|p| p - 1).sum::<usize>() % 2 == 0
    }

    /// Order of a permutation of this cycle type: the lcm of the parts.
    pub fn order(&self) -> Result<u64> {
        if self.is_empty() {
            return Err(domain("the empty cycle type has no order"));
        }
        Ok(self.parts.iter().fold(1u64, |acc, &p| lcm(acc, p as u64)))
    }

    /// Cycle type of the `j`-th power of a permutation of this cycle type.
    ///
    /// An `m`-cycle raised to the `j`-th power splits into `gcd(m, j)` cycles
    /// of length `m / gcd(m, j)`; `gcd(m, 0) = m` gives the identity.
    pub fn power_cycle_type(&self, j: u64) -> Partition {
        Partition::from_unsorted(self.parts.iter().flat_map(|&m| {
            let g = gcd(m as u64, j) as usize;
            std::iter::repeat_n(m / g, g)
        }))
    }

    /// Multiplicity of each part value: `result[i]` counts parts equal to `i`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.part(0) + 1];
        for &p in &self.parts {
            m[p] += 1;
        }
        m
    }

    /// Hook length of the cell in row `r`, column `c` (both 0-based).
    pub fn hook_length(&self, r: usize, c: usize) -> usize {
        let arm = self.part(r) - c - 1;
        let leg = self.parts[r + 1..].iter().take_while(|&&p| p > c).count();
        arm + leg + 1
    }

    /// Cells of the Young diagram in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size.cmp(&other.size).then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("-");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `5,3,2`; the empty partition is `-`. Unsorted input is rejected.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for token in s.split(',') {
            let token = token.trim();
            let p: usize = token.parse().map_err(|_| Error::Parse {
                token: token.to_string(),
                reason: "expected a positive integer".into(),
            })?;
            if p == 0 {
                return Err(Error::Parse {
                    token: token.to_string(),
                    reason: "parts must be positive".into(),
                });
            }
            if let Some(&prev) = parts.last() {
                if p > prev {
                    return Err(Error::Parse {
                        token: token.to_string(),
                        reason: format!("parts must be weakly decreasing, {p} follows {prev}"),
                    });
                }
            }
            parts.push(p);
        }
        Partition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

/// All partitions of `n` in reverse-lexicographic order.
pub fn enumerate_partitions(n: usize, bound: usize) -> Result<Vec<Partition>> {
    if n > bound {
        return Err(Error::SizeBound { size: n, bound });
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill_partitions(n, n, &mut current, &mut out);
    Ok(out)
}

fn fill_partitions(rest: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition {
            parts: current.clone(),
            size: current.iter().sum(),
        });
        return;
    }
    for p in (1..=max.min(rest)).rev() {
        current.push(p);
        fill_partitions(rest - p, p, current, out);
        current.pop();
    }
}

/// Partitions `λ` of `n` with `inner ⊆ λ`, `λ_i <= inner_i + row_cap` and at
/// most `max_len` parts, in reverse-lexicographic order.
pub fn partitions_above(inner: &Partition, n: usize, row_cap: usize, max_len: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    if inner.size() > n || inner.len() > max_len {
        return out;
    }
    let mut current = Vec::new();
    fill_above(
        inner,
        n - inner.size(),
        row_cap,
        max_len,
        usize::MAX,
        &mut current,
        &mut out,
    );
    out
}

fn fill_above(
    inner: &Partition,
    extra: usize,
    row_cap: usize,
    max_len: usize,
    prev: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    let r = current.len();
    let base = inner.part(r);
    if extra == 0 && base == 0 {
        out.push(Partition::new(current.clone()).expect("weakly decreasing by construction"));
        return;
    }
    if r == max_len {
        return;
    }
    let hi = (base + row_cap.min(extra)).min(prev);
    if hi < base.max(1) {
        return;
    }
    for p in (base.max(1)..=hi).rev() {
        current.push(p);
        fill_above(inner, extra - (p - base), row_cap, max_len, p, current, out);
        current.pop();
    }
}

/// A skew shape `outer / inner` with `inner ⊆ outer`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(domain(format!("({inner}) is not contained in ({outer})")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn cell_count(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    /// Column range `[start, end)` of the skew cells in row `r`.
    pub fn row_span(&self, r: usize) -> (usize, usize) {
        (self.inner.part(r), self.outer.part(r))
    }

    pub fn is_cell(&self, r: usize, c: usize) -> bool {
        self.inner.part(r) <= c && c < self.outer.part(r)
    }

    /// Skew cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.rows()).flat_map(move |r| {
            let (a, b) = self.row_span(r);
            (a..b).map(move |c| (r, c))
        })
    }

    /// Number of skew cells in each column, indexed by column.
    pub fn column_lengths(&self) -> Vec<usize> {
        let outer = self.outer.conjugate();
        let inner = self.inner.conjugate();
        (0..outer.len()).map(|c| outer.part(c) - inner.part(c)).collect()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.outer, self.inner)
    }
}
