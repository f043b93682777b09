//! Seeded random instances for the property suites.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::plaurent::{ExpKey, PLaurent};
use crate::symfunc::{PowerMonomial, TruncatedSymFunc};
use crate::Rational;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn small_rational<R: Rng>(rng: &mut R) -> Rational {
    let mut num: i64 = rng.gen_range(1..=5);
    if rng.gen_bool(0.5) {
        num = -num;
    }
    Rational::new(num.into(), rng.gen_range(1i64..=4).into())
}

/// Random partition of `n` as a power-sum monomial.
fn random_monomial<R: Rng>(rng: &mut R, n: u32) -> PowerMonomial {
    let mut parts = Vec::new();
    let mut rest = n;
    while rest > 0 {
        let part = rng.gen_range(1..=rest);
        parts.push(part);
        rest -= part;
    }
    PowerMonomial::from_partition(&parts).expect("parts are positive")
}

/// Sparse element of `Λ̂₊` (zero constant term) with 1 to `max_terms` terms
/// of degree between 1 and `degree`.
pub fn random_symfunc<R: Rng>(rng: &mut R, degree: u32, max_terms: usize) -> TruncatedSymFunc {
    assert!(degree >= 1, "need room for a positive-degree term");
    let count = rng.gen_range(1..=max_terms);
    let terms: Vec<_> = (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=degree);
            (random_monomial(rng, n), small_rational(rng))
        })
        .collect();
    let f = TruncatedSymFunc::from_terms(degree, terms);
    if f.is_zero() {
        TruncatedSymFunc::power_sum(degree, 1)
    } else {
        f
    }
}

/// Sparse Laurent polynomial in `P_1 … P_{max_var}` with exponents in
/// `-max_exp ..= max_exp`.
pub fn random_plaurent<R: Rng>(
    rng: &mut R,
    max_var: u32,
    max_exp: i32,
    max_terms: usize,
) -> PLaurent {
    let count = rng.gen_range(0..=max_terms);
    PLaurent::from_terms((0..count).map(|_| {
        let vars = rng.gen_range(0..=3);
        let key = ExpKey::new(
            (0..vars).map(|_| (rng.gen_range(1..=max_var), rng.gen_range(-max_exp..=max_exp))),
        )
        .expect("indices are positive");
        (key, small_rational(rng))
    }))
}
