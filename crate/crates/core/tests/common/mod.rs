//! Brute-force oracles shared by the integration tests. None of these call
//! into the library's algorithms; they only build `Partition` values.
#![allow(dead_code)]

use std::collections::BTreeSet;

use invec::Partition;

/// p(n) by Euler's pentagonal number recurrence.
pub fn partition_count(n: usize) -> u64 {
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut total = 0i64;
        for k in 1.. {
            let k = k as i64;
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > m {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            total += sign * p[m - g1];
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= m {
                total += sign * p[m - g2];
            }
        }
        p[m] = total;
    }
    p[n] as u64
}

/// Partitions of `n` by sorting every composition (2^(n-1) of them).
pub fn partitions_from_compositions(n: usize) -> BTreeSet<Vec<usize>> {
    let mut out = BTreeSet::new();
    if n == 0 {
        out.insert(Vec::new());
        return out;
    }
    for mask in 0u32..(1 << (n - 1)) {
        let mut parts = Vec::new();
        let mut run = 1;
        for bit in 0..n - 1 {
            if mask & (1 << bit) != 0 {
                parts.push(run);
                run = 1;
            } else {
                run += 1;
            }
        }
        parts.push(run);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        out.insert(parts);
    }
    out
}

/// A permutation of `0..n` whose cycles are consecutive blocks of lengths `mu`.
pub fn permutation_of_type(mu: &[usize]) -> Vec<usize> {
    let mut perm = Vec::new();
    let mut start = 0;
    for &len in mu {
        for i in 0..len {
            perm.push(start + (i + 1) % len);
        }
        start += len;
    }
    perm
}

pub fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&x| a[x]).collect()
}

pub fn power(perm: &[usize], j: u64) -> Vec<usize> {
    let mut out: Vec<usize> = (0..perm.len()).collect();
    for _ in 0..j {
        out = compose(perm, &out);
    }
    out
}

pub fn cycle_type(perm: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for s in 0..perm.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = perm[x];
            len += 1;
        }
        out.push(len);
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Every permutation of `0..n` (Heap's algorithm).
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, a, out);
            if k.is_multiple_of(2) {
                a.swap(i, k - 1);
            } else {
                a.swap(0, k - 1);
            }
        }
    }
    let mut a: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    heap(n, &mut a, &mut out);
    out
}

/// All semistandard fillings of the skew shape `outer/inner` with entries
/// `1..=max_entry`, as row-major grids (0 marks inner cells).
pub fn semistandard_fillings(outer: &[usize], inner: &[usize], max_entry: usize) -> Vec<Vec<Vec<usize>>> {
    let inner_at = |r: usize| inner.get(r).copied().unwrap_or(0);
    let cells: Vec<(usize, usize)> = (0..outer.len())
        .flat_map(|r| (inner_at(r)..outer[r]).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<usize>> = outer.iter().map(|&l| vec![0; l]).collect();
    let mut out = Vec::new();
    fn go(
        idx: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        inner: &dyn Fn(usize) -> usize,
        max_entry: usize,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if idx == cells.len() {
            out.push(grid.clone());
            return;
        }
        let (r, c) = cells[idx];
        for x in 1..=max_entry {
            if c > inner(r) && grid[r][c - 1] > x {
                continue;
            }
            if r > 0 && c >= inner(r - 1) && grid[r - 1][c] >= x {
                continue;
            }
            grid[r][c] = x;
            go(idx + 1, cells, grid, inner, max_entry, out);
            grid[r][c] = 0;
        }
    }
    go(0, &cells, &mut grid, &inner_at, max_entry, &mut out);
    out
}

fn content_of(grid: &[Vec<usize>], inner: &[usize], len: usize) -> Vec<usize> {
    let mut counts = vec![0; len];
    for (r, row) in grid.iter().enumerate() {
        for &x in &row[inner.get(r).copied().unwrap_or(0)..] {
            counts[x - 1] += 1;
        }
    }
    counts
}

/// Kostka number: SSYT of shape `lambda` and content `gamma`.
pub fn kostka(lambda: &[usize], gamma: &[usize]) -> i64 {
    semistandard_fillings(lambda, &[], gamma.len())
        .iter()
        .filter(|g| content_of(g, &[], gamma.len()) == gamma)
        .count() as i64
}

/// Littlewood–Richardson coefficient by filtering every semistandard filling
/// of `lambda/alpha` for content `beta` and a lattice reverse reading word.
pub fn lr_brute_force(lambda: &[usize], alpha: &[usize], beta: &[usize]) -> u64 {
    if alpha.len() > lambda.len() || alpha.iter().zip(lambda).any(|(a, l)| a > l) {
        return 0;
    }
    if beta.is_empty() {
        return (lambda.iter().sum::<usize>() == alpha.iter().sum::<usize>()) as u64;
    }
    semistandard_fillings(lambda, alpha, beta.len())
        .iter()
        .filter(|g| content_of(g, alpha, beta.len()) == beta)
        .filter(|g| {
            let mut counts = vec![0usize; beta.len() + 1];
            for (r, row) in g.iter().enumerate() {
                for &x in row[alpha.get(r).copied().unwrap_or(0)..].iter().rev() {
                    counts[x] += 1;
                    if x > 1 && counts[x] > counts[x - 1] {
                        return false;
                    }
                }
            }
            true
        })
        .count() as u64
}

/// Character of the Young permutation module `M^gamma` at cycle type `mu`:
/// the number of ways to place whole cycles into blocks of sizes `gamma`.
pub fn permutation_module_character(gamma: &[usize], mu: &[usize]) -> i64 {
    fn go(cycles: &[usize], room: &mut Vec<usize>) -> i64 {
        match cycles.split_first() {
            None => room.iter().all(|&r| r == 0) as i64,
            Some((&c, rest)) => {
                let mut total = 0;
                for b in 0..room.len() {
                    if room[b] >= c {
                        room[b] -= c;
                        total += go(rest, room);
                        room[b] += c;
                    }
                }
                total
            }
        }
    }
    go(mu, &mut gamma.to_vec())
}

/// Eigenvalue multiplicities (indexed by k for exp(2πik/m)) of the natural
/// permutation representation of `w_mu` on n points, minus the trivial part.
/// This is the profile of `V_(n-1,1)`.
pub fn standard_rep_profile(mu: &[usize]) -> Vec<i64> {
    let m = mu.iter().fold(1u64, |a, &p| num_integer::lcm(a, p as u64)) as usize;
    let mut out = vec![0i64; m];
    for &c in mu {
        for j in 0..c {
            out[j * m / c] += 1;
        }
    }
    out[0] -= 1;
    out
}

pub fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}
