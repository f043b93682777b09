//! Integer primitives for the enumerators.
//!
//! Everything works on `u64`. Factorization is trial division against a
//! small cached prime table, which is ample for the index sizes that occur
//! (moduli up to a few hundred).

use std::sync::OnceLock;

use crate::error::{Error, Result};

const PRIME_TABLE_LIMIT: u64 = 1 << 16;

fn small_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let mut primes: Vec<u64> = Vec::new();
        'outer: for n in 2..PRIME_TABLE_LIMIT {
            for &p in &primes {
                if p * p > n {
                    break;
                }
                if n % p == 0 {
                    continue 'outer;
                }
            }
            primes.push(n);
        }
        primes
    })
}

/// Prime factorization as ascending `(prime, exponent)` pairs.
///
/// # Panics
///
/// Panics if `n == 0`.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n >= 1, "factorize requires n >= 1");
    let mut out = Vec::new();
    let mut push = |n: &mut u64, p: u64| {
        let mut e = 0;
        while (*n).is_multiple_of(p) {
            *n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    };
    for &p in small_primes() {
        if p * p > n {
            break;
        }
        push(&mut n, p);
    }
    // Past the table: continue with odd candidates.
    let mut p = PRIME_TABLE_LIMIT | 1;
    while p.checked_mul(p).is_some_and(|sq| sq <= n) {
        push(&mut n, p);
        p += 2;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Möbius function `μ(n)`.
pub fn mobius(n: u64) -> i64 {
    let factors = factorize(n);
    if factors.iter().any(|&(_, e)| e > 1) {
        0
    } else if factors.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Euler totient `φ(n)`.
pub fn totient(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

/// All positive divisors of `n`, strictly increasing.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut divs = vec![1u64];
    for (p, e) in factorize(n) {
        let current = divs.len();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            for i in 0..current {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    divs
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Greatest common divisor of a nonempty list.
pub fn gcd_all(values: &[u64]) -> Result<u64> {
    match values.split_first() {
        None => Err(Error::Usage("gcd_all of an empty list".into())),
        Some((&first, rest)) => Ok(rest.iter().fold(first, |acc, &v| gcd(acc, v))),
    }
}

/// `n!` as a `u64`, with overflow detection.
pub fn factorial(n: u64) -> Result<u64> {
    (1..=n).try_fold(1u64, |acc, k| {
        acc.checked_mul(k).ok_or(Error::Overflow("factorial"))
    })
}
