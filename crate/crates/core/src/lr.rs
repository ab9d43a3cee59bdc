//! Littlewood–Richardson coefficients by enumerating LR tableaux.
//!
//! An LR tableau of shape `λ/α` and weight `β` is a semistandard filling whose
//! reverse row reading word (rows top to bottom, each read right to left) is
//! a lattice word. `c^λ_{αβ}` counts them.

use std::fmt;

use crate::error::{domain, Result};
use crate::partitions::{partitions_above, Partition, SkewShape};
use crate::scalar::Scalar;
use crate::symfunc::SchurExpansion;

/// A validated LR tableau.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LrTableau {
    shape: SkewShape,
    /// Entries of the skew cells of each row, left to right.
    rows: Vec<Vec<usize>>,
    weight: Partition,
}

impl LrTableau {
    /// Builds and validates a tableau. Each row lists the entries of that
    /// row's skew cells from left to right.
    pub fn new(shape: SkewShape, rows: Vec<Vec<usize>>) -> Result<Self> {
        let mut counts: Vec<usize> = Vec::new();
        for (r, row) in rows.iter().enumerate() {
            let (a, b) = shape.row_span(r);
            if row.len() != b - a {
                return Err(domain(format!(
                    "row {} has {} entries but the shape has {} cells there",
                    r + 1,
                    row.len(),
                    b - a
                )));
            }
            for &x in row {
                if x == 0 {
                    return Err(domain("entries must be positive"));
                }
                if counts.len() < x {
                    counts.resize(x, 0);
                }
                counts[x - 1] += 1;
            }
        }
        if rows.len() < shape.rows() && (rows.len()..shape.rows()).any(|r| shape.row_span(r).0 < shape.row_span(r).1) {
            return Err(domain("missing rows for the shape"));
        }
        let weight = Partition::new(counts).map_err(|_| domain("weight is not a partition"))?;
        let t = LrTableau { shape, rows, weight };
        t.validate()?;
        Ok(t)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn weight(&self) -> &Partition {
        &self.weight
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Entry at row `r`, column `c` of the outer diagram, if it is a skew cell.
    pub fn entry(&self, r: usize, c: usize) -> Option<usize> {
        if !self.shape.is_cell(r, c) {
            return None;
        }
        Some(self.rows[r][c - self.shape.row_span(r).0])
    }

    /// Rows top to bottom, each read right to left.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flat_map(|row| row.iter().rev().copied()).collect()
    }

    /// Checks the semistandard and lattice conditions and the weight.
    pub fn validate(&self) -> Result<()> {
        for (r, c) in self.shape.cells() {
            let x = self.entry(r, c).expect("skew cell");
            if let Some(right) = self.entry(r, c + 1) {
                if x > right {
                    return Err(domain(format!("row {} decreases at column {}", r + 1, c + 1)));
                }
            }
            if r > 0 {
                if let Some(above) = self.entry(r - 1, c) {
                    if above >= x {
                        return Err(domain(format!(
                            "column {} is not strictly increasing at row {}",
                            c + 1,
                            r + 1
                        )));
                    }
                }
            }
        }
        let mut counts = vec![0usize; self.weight.len() + 1];
        for x in self.reading_word() {
            if x > self.weight.len() {
                return Err(domain(format!("entry {x} exceeds the weight length")));
            }
            counts[x - 1] += 1;
            if x > 1 && counts[x - 1] > counts[x - 2] {
                return Err(domain("reverse reading word is not a lattice word"));
            }
        }
        if counts[..self.weight.len()] != *self.weight.parts() {
            return Err(domain("entry counts differ from the weight"));
        }
        Ok(())
    }
}

impl fmt::Display for LrTableau {
    /// One line per row; cells of the inner shape print as `.`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.shape.rows() {
            if r > 0 {
                f.write_str("/")?;
            }
            let (a, _) = self.shape.row_span(r);
            for _ in 0..a {
                f.write_str(".")?;
            }
            for x in &self.rows[r] {
                if *x < 10 {
                    write!(f, "{x}")?;
                } else {
                    write!(f, "[{x}]")?;
                }
            }
        }
        Ok(())
    }
}

/// Backtracking filler. Cells are visited rows top to bottom and, within a
/// row, right to left, so the fill order is the reading order and the lattice
/// condition is checked incrementally. Smaller entries are tried first.
struct Filler<'a> {
    shape: &'a SkewShape,
    weight: &'a [usize],
    cells: Vec<(usize, usize)>,
    grid: Vec<Vec<usize>>,
    counts: Vec<usize>,
}

impl<'a> Filler<'a> {
    fn new(shape: &'a SkewShape, weight: &'a Partition) -> Self {
        let mut cells = Vec::with_capacity(shape.cell_count());
        for r in 0..shape.rows() {
            let (a, b) = shape.row_span(r);
            cells.extend((a..b).rev().map(|c| (r, c)));
        }
        let grid = (0..shape.rows()).map(|r| vec![0; shape.outer().part(r)]).collect();
        Filler {
            shape,
            weight: weight.parts(),
            cells,
            grid,
            counts: vec![0; weight.len()],
        }
    }

    /// Calls `visit` on each complete filling until it returns `false`.
    /// Returns `false` if stopped early.
    fn run(&mut self, idx: usize, visit: &mut dyn FnMut(&Self) -> bool) -> bool {
        if idx == self.cells.len() {
            return visit(self);
        }
        let (r, c) = self.cells[idx];
        let mut lo = 1;
        if r > 0 && self.shape.is_cell(r - 1, c) {
            lo = self.grid[r - 1][c] + 1;
        }
        let mut hi = self.weight.len().min(r + 1);
        if c + 1 < self.shape.outer().part(r) {
            hi = hi.min(self.grid[r][c + 1]);
        }
        for x in lo..=hi {
            if self.counts[x - 1] >= self.weight[x - 1] {
                continue;
            }
            if x > 1 && self.counts[x - 1] >= self.counts[x - 2] {
                continue;
            }
            self.counts[x - 1] += 1;
            self.grid[r][c] = x;
            let go_on = self.run(idx + 1, visit);
            self.grid[r][c] = 0;
            self.counts[x - 1] -= 1;
            if !go_on {
                return false;
            }
        }
        true
    }

    fn snapshot(&self) -> LrTableau {
        let rows = (0..self.shape.rows())
            .map(|r| {
                let (a, b) = self.shape.row_span(r);
                self.grid[r][a..b].to_vec()
            })
            .collect();
        LrTableau {
            shape: self.shape.clone(),
            rows,
            weight: Partition::new(self.weight.to_vec()).expect("weight is a partition"),
        }
    }
}

fn check_sizes(shape: &SkewShape, weight: &Partition) -> Result<()> {
    if shape.cell_count() != weight.size() {
        return Err(domain(format!(
            "shape {shape} has {} cells but the weight ({weight}) has size {}",
            shape.cell_count(),
            weight.size()
        )));
    }
    Ok(())
}

/// All LR tableaux of the given shape and weight, in fill order.
pub fn enumerate_lr_tableaux(shape: &SkewShape, weight: &Partition) -> Result<Vec<LrTableau>> {
    check_sizes(shape, weight)?;
    let mut out = Vec::new();
    Filler::new(shape, weight).run(0, &mut |f| {
        out.push(f.snapshot());
        true
    });
    Ok(out)
}

/// The first LR tableau of the given shape and weight, if any.
pub fn first_lr_tableau(shape: &SkewShape, weight: &Partition) -> Result<Option<LrTableau>> {
    check_sizes(shape, weight)?;
    let mut found = None;
    Filler::new(shape, weight).run(0, &mut |f| {
        found = Some(f.snapshot());
        false
    });
    Ok(found)
}

/// `c^λ_{αβ}`; zero whenever `α ⊄ λ` or the sizes do not add up.
pub fn lr_coefficient(lambda: &Partition, alpha: &Partition, beta: &Partition) -> u64 {
    if !lambda.contains(alpha) || lambda.size() != alpha.size() + beta.size() {
        return 0;
    }
    let shape = SkewShape::new(lambda.clone(), alpha.clone()).expect("containment checked");
    let mut count = 0u64;
    Filler::new(&shape, beta).run(0, &mut |_| {
        count += 1;
        true
    });
    count
}

/// The tableau that numbers the cells of each column of `λ/α` as 1, 2, 3, …
/// from top to bottom. Its weight is the dominance-largest `β` with
/// `c^λ_{αβ} > 0`.
pub fn canonical_column_tableau(lambda: &Partition, alpha: &Partition) -> Result<LrTableau> {
    let shape = SkewShape::new(lambda.clone(), alpha.clone())?;
    let inner_cols = alpha.conjugate();
    let rows = (0..shape.rows())
        .map(|r| {
            let (a, b) = shape.row_span(r);
            (a..b).map(|c| r - inner_cols.part(c) + 1).collect()
        })
        .collect();
    LrTableau::new(shape, rows)
}

/// `s_α s_β = Σ_λ c^λ_{αβ} s_λ`.
pub fn schur_product<T: Scalar>(alpha: &Partition, beta: &Partition) -> Result<SchurExpansion<T>> {
    let n = alpha.size() + beta.size();
    let mut out = SchurExpansion::zero(n);
    for lambda in partitions_above(alpha, n, beta.part(0), alpha.len() + beta.len()) {
        let c = lr_coefficient(&lambda, alpha, beta);
        out.add_term(lambda, &T::from_u64_exact(c)?)?;
    }
    Ok(out)
}
