//! Small number-theory helpers on orders of cyclic groups.

pub use num_integer::{gcd, lcm};

/// Divisors of `m` in increasing order.
pub fn divisors(m: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= m {
        if m.is_multiple_of(d) {
            small.push(d);
            if d != m / d {
                large.push(m / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Prime factorisation by trial division, as `(prime, exponent)` pairs.
pub fn factorize(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

/// Euler's totient.
pub fn totient(m: u64) -> u64 {
    factorize(m).into_iter().fold(m, |acc, (p, _)| acc / p * (p - 1))
}

/// The Möbius function.
pub fn mobius(m: u64) -> i64 {
    let f = factorize(m);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Ramanujan's sum `c_q(k)`: the sum of the k-th powers of the primitive
/// q-th roots of unity, via `sum over d | gcd(q, k) of d * mobius(q / d)`.
pub fn ramanujan_sum(q: u64, k: u64) -> i64 {
    let g = gcd(q, k);
    divisors(g).into_iter().map(|d| d as i64 * mobius(q / d)).sum()
}
