//! Closed-formula enumerators for the weight-zero generating function `𝒥_g^0`
//! and the topological generating function `𝒥_g^top` of the universal Picard
//! stack, and their scalar and series specializations.
//!
//! # Weight zero
//!
//! `𝒥_g^0 = Σ (−1)^k m^{k−1} (k−1)! P_m^{−k} ∏_i μ(m/d_i)^{a_i} P_{d_i}^{a_i} / (d_i^{a_i} a_i!)`
//! over `k, m, s > 0`, `0 < d_1 < ⋯ < d_s < m` with `d_i | m`,
//! `gcd(d_1, …, d_s) = 1`, `Σ a_i = k + 1` and `Σ a_i d_i = km + 1 − g`.
//!
//! The sum is finite but no bounds come with it. They are derived here from
//! `d_i ≤ m/2` for a proper divisor:
//!
//! - `k ≥ 2`: `km + 1 − g = Σ a_i d_i ≤ (k+1)m/2` gives `m(k−1) ≤ 2(g−1)`,
//!   hence `m ≤ 2(g−1)` and, since `m ≥ 2`, `k ≤ g`.
//! - `k = 1, s = 1`: `a_1 = 2` and the gcd condition forces `d_1 = 1`, so
//!   `m = g + 1`.
//! - `k = 1, s = 2`: `a = (1, 1)`, `d_2 ≤ m/2` and `d_1 ≤ m/3` (second largest
//!   proper divisor) give `m + 1 − g ≤ 5m/6`, i.e. `m ≤ 6(g−1)`.
//!
//! So `m ≤ max(g+1, 6(g−1))` and `k ≤ g`. [`weight_zero_jacobian_with_bounds`]
//! exists so the bound can be checked by enumerating with doubled limits.
//!
//! # Topological
//!
//! `𝒥_g^top = Σ_{r=2}^{4g+2} Σ_{s=3}^{2g+2} Σ_k (−1)^{s−3}(s−3)! N(r; k) r^{s−3} / ∏ i^{k_i} k_i! · P_r^{2−s} ∏ P_i^{k_i}`
//! over `k_1 + ⋯ + k_{r−1} = s`, `Σ i k_i + r(2−s) = 2 − 2g`, `i | r` when
//! `k_i > 0` and `gcd{i : k_i > 0} = 1`. `N(r; k)` counts tuples in `(ℤ/r)^s`
//! summing to zero whose entries have prescribed gcd with `r`; it has a
//! closed form ([`n_count_closed`]) and a direct dynamic-programming count
//! ([`n_count_oracle`]).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::numtheory::{divisors, gcd, gcd_all, mobius, totient};
use crate::plaurent::{ExpKey, PLaurent};
use crate::symfunc::TruncatedSymFunc;
use crate::Rational;

/// Which Euler characteristic a generating function packages.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    WeightZero,
    Topological,
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "wt0" | "weight0" => Ok(Self::WeightZero),
            "top" => Ok(Self::Topological),
            _ => Err(Error::Usage(format!(
                "unknown kind `{s}` (expected wt0 or top)"
            ))),
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::WeightZero => "wt0",
            Self::Topological => "top",
        })
    }
}

impl Kind {
    /// Exponent sum carried by every monomial (the order of the `x → 1` pole).
    pub fn exponent_sum(self) -> i64 {
        match self {
            Self::WeightZero => 1,
            Self::Topological => 2,
        }
    }

    /// Laurent degree of the generating function in genus `g`.
    pub fn laurent_degree(self, g: u32) -> i64 {
        match self {
            Self::WeightZero => 1 - i64::from(g),
            Self::Topological => 2 - 2 * i64::from(g),
        }
    }
}

fn require_genus(g: u32) -> Result<()> {
    if g < 2 {
        return Err(Error::Domain(format!(
            "genus must satisfy g >= 2 (got g = {g}); genus 0 and 1 formulas are not provided"
        )));
    }
    Ok(())
}

fn int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

fn factorial_big(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Visits every multiplicity vector `c` over `parts` (ascending, positive)
/// with `Σ c_i = count` and `Σ c_i·parts_i = weight`.
fn for_each_composition(parts: &[u64], count: u64, weight: u64, visit: &mut dyn FnMut(&[u64])) {
    fn go(
        parts: &[u64],
        idx: usize,
        count: u64,
        weight: u64,
        acc: &mut Vec<u64>,
        visit: &mut dyn FnMut(&[u64]),
    ) {
        if count == 0 {
            if weight == 0 {
                acc.resize(parts.len(), 0);
                visit(acc);
                acc.truncate(idx);
            }
            return;
        }
        if idx == parts.len() {
            return;
        }
        let lo = parts[idx];
        let hi = *parts.last().expect("nonempty");
        if count * lo > weight || count * hi < weight {
            return;
        }
        let max_here = count.min(weight / lo);
        for c in 0..=max_here {
            acc.push(c);
            go(parts, idx + 1, count - c, weight - c * lo, acc, visit);
            acc.pop();
        }
    }
    if parts.is_empty() {
        if count == 0 && weight == 0 {
            visit(&[]);
        }
        return;
    }
    let mut acc = Vec::with_capacity(parts.len());
    go(parts, 0, count, weight, &mut acc, visit);
}

/// One summand of the weight-zero formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightZeroTerm {
    pub k: u64,
    pub m: u64,
    /// Multiplicities `a_1 … a_s`, all positive.
    pub a: Vec<u64>,
    /// Strictly increasing proper divisors `d_1 < ⋯ < d_s` of `m`.
    pub d: Vec<u64>,
}

impl WeightZeroTerm {
    pub fn s(&self) -> usize {
        self.d.len()
    }

    /// `(−1)^k m^{k−1} (k−1)! ∏ μ(m/d_i)^{a_i} / (d_i^{a_i} a_i!)`.
    pub fn coefficient(&self) -> Rational {
        let sign = if self.k.is_multiple_of(2) { 1 } else { -1 };
        let mut c = int(BigInt::from(sign)
            * num_traits::pow(BigInt::from(self.m), (self.k - 1) as usize)
            * factorial_big(self.k - 1));
        for (&a, &d) in self.a.iter().zip(&self.d) {
            let mu = mobius(self.m / d);
            let num = num_traits::pow(BigInt::from(mu), a as usize);
            let den = num_traits::pow(BigInt::from(d), a as usize) * factorial_big(a);
            c *= Rational::new(num, den);
        }
        c
    }

    /// `P_m^{−k} ∏ P_{d_i}^{a_i}`.
    pub fn key(&self) -> Result<ExpKey> {
        let exp = |v: u64| i32::try_from(v).map_err(|_| Error::Overflow("Laurent exponent"));
        let mut pairs = vec![(to_index(self.m)?, -exp(self.k)?)];
        for (&a, &d) in self.a.iter().zip(&self.d) {
            pairs.push((to_index(d)?, exp(a)?));
        }
        ExpKey::new(pairs)
    }
}

fn to_index(v: u64) -> Result<u32> {
    u32::try_from(v).map_err(|_| Error::Overflow("variable index"))
}

/// Enumeration limits `(m_max, k_max) = (max(g+1, 6(g−1)), g)`.
pub fn wz_enumeration_bounds(g: u32) -> Result<(u64, u64)> {
    require_genus(g)?;
    let g = u64::from(g);
    Ok(((g + 1).max(6 * (g - 1)), g))
}

/// All nonzero summands of the weight-zero formula with `m ≤ m_max`, `k ≤ k_max`.
pub fn weight_zero_terms(g: u32, m_max: u64, k_max: u64) -> Result<Vec<WeightZeroTerm>> {
    require_genus(g)?;
    let g = u64::from(g);
    let mut out = Vec::new();
    for m in 2..=m_max {
        // Divisors with μ(m/d) = 0 only produce zero coefficients.
        let divs: Vec<u64> = divisors(m)
            .into_iter()
            .filter(|&d| d < m && mobius(m / d) != 0)
            .collect();
        for k in 1..=k_max {
            let weight = k
                .checked_mul(m)
                .and_then(|km| km.checked_add(1))
                .ok_or(Error::Overflow("weight-zero enumeration"))?;
            if weight <= g {
                continue;
            }
            for_each_composition(&divs, k + 1, weight - g, &mut |mult| {
                let (a, d): (Vec<u64>, Vec<u64>) = mult
                    .iter()
                    .zip(&divs)
                    .filter(|(&c, _)| c > 0)
                    .map(|(&c, &d)| (c, d))
                    .unzip();
                if gcd_all(&d) == Ok(1) {
                    out.push(WeightZeroTerm { k, m, a, d });
                }
            });
        }
    }
    Ok(out)
}

pub fn weight_zero_jacobian_with_bounds(g: u32, m_max: u64, k_max: u64) -> Result<PLaurent> {
    let mut out = PLaurent::zero();
    for term in weight_zero_terms(g, m_max, k_max)? {
        out.add_term(term.key()?, term.coefficient());
    }
    Ok(out)
}

/// `𝒥_g^0` for `g ≥ 2`.
pub fn weight_zero_jacobian(g: u32) -> Result<PLaurent> {
    let (m_max, k_max) = wz_enumeration_bounds(g)?;
    weight_zero_jacobian_with_bounds(g, m_max, k_max)
}

fn check_cycle_counts(r: u64, k: &[u32]) -> Result<()> {
    if r == 0 {
        return Err(Error::Usage("N(r; k) requires r >= 1".into()));
    }
    if k.len() as u64 != r - 1 {
        return Err(Error::Usage(format!(
            "N(r; k) expects r - 1 = {} multiplicities, got {}",
            r - 1,
            k.len()
        )));
    }
    for (idx, &ki) in k.iter().enumerate() {
        let i = idx as u64 + 1;
        if ki > 0 && !r.is_multiple_of(i) {
            return Err(Error::Domain(format!(
                "k_{i} = {ki} > 0 but {i} does not divide r = {r}"
            )));
        }
    }
    Ok(())
}

/// `N(r; k_1, …, k_{r−1})` by the closed character-sum formula
/// `(1/r) Σ_{d|r} φ(d) ∏_i (μ(d/(d,i)) φ(r/i) / φ(d/(d,i)))^{k_i}`.
///
/// `k[i − 1]` holds `k_i`.
pub fn n_count_closed(r: u64, k: &[u32]) -> Result<u64> {
    check_cycle_counts(r, k)?;
    let mut total = Rational::zero();
    for d in divisors(r) {
        let mut prod = int(totient(d));
        for (idx, &ki) in k.iter().enumerate() {
            if ki == 0 {
                continue;
            }
            let i = idx as u64 + 1;
            let dd = d / gcd(d, i);
            let c = Rational::new(
                BigInt::from(mobius(dd)) * BigInt::from(totient(r / i)),
                BigInt::from(totient(dd)),
            );
            prod *= num_traits::pow(c, ki as usize);
        }
        total += prod;
    }
    let n = total / int(r);
    if !n.is_integer() || n.is_negative() {
        return Err(Error::Internal(format!(
            "N({r}; {k:?}) evaluated to non-integral or negative {n}"
        )));
    }
    n.to_integer()
        .to_u64()
        .ok_or(Error::Overflow("N(r; k)"))
}

/// `N(r; k)` by direct counting: for every coordinate with prescribed
/// `gcd(r, x) = i`, convolve the residue distribution over `ℤ/r` and read
/// the mass at zero. Cost `O(s·r²)`.
pub fn n_count_oracle(r: u64, k: &[u32]) -> Result<u64> {
    check_cycle_counts(r, k)?;
    let n = r as usize;
    let mut dist = vec![0u128; n];
    dist[0] = 1;
    for (idx, &ki) in k.iter().enumerate() {
        let i = idx as u64 + 1;
        let allowed: Vec<usize> = (0..r)
            .filter(|&x| gcd(r, x) == i)
            .map(|x| x as usize)
            .collect();
        for _ in 0..ki {
            let mut next = vec![0u128; n];
            for (acc, &mass) in dist.iter().enumerate() {
                if mass == 0 {
                    continue;
                }
                for &x in &allowed {
                    let slot = &mut next[(acc + x) % n];
                    *slot = slot
                        .checked_add(mass)
                        .ok_or(Error::Overflow("N(r; k) oracle"))?;
                }
            }
            dist = next;
        }
    }
    u64::try_from(dist[0]).map_err(|_| Error::Overflow("N(r; k) oracle"))
}

/// All `k = (k_1, …, k_{r−1})` with `Σ k_i = s` supported on proper divisors
/// of `r` (the admissible arguments of `N(r; k)` of total size `s`).
pub fn cycle_count_vectors(r: u64, s: u64) -> Vec<Vec<u32>> {
    let parts: Vec<u64> = divisors(r).into_iter().filter(|&i| i < r).collect();
    let mut out = Vec::new();
    let max_weight = s * parts.last().copied().unwrap_or(0);
    for weight in 0..=max_weight {
        for_each_composition(&parts, s, weight, &mut |mult| {
            let mut k = vec![0u32; (r - 1) as usize];
            for (&c, &i) in mult.iter().zip(&parts) {
                k[(i - 1) as usize] = c as u32;
            }
            out.push(k);
        });
    }
    out
}

/// One summand of the topological formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopTerm {
    pub r: u64,
    pub s: u64,
    /// `k[i − 1] = k_i` for `i = 1 … r−1`.
    pub k: Vec<u32>,
}

impl TopTerm {
    /// `(−1)^{s−3} (s−3)! · N(r; k) · r^{s−3} / ∏ i^{k_i} k_i!`, with `N`
    /// supplied by the caller.
    pub fn coefficient_with(&self, n_count: u64) -> Rational {
        let sign = if (self.s - 3).is_multiple_of(2) { 1 } else { -1 };
        let num = BigInt::from(sign)
            * factorial_big(self.s - 3)
            * BigInt::from(n_count)
            * num_traits::pow(BigInt::from(self.r), (self.s - 3) as usize);
        let mut den = BigInt::one();
        for (idx, &ki) in self.k.iter().enumerate() {
            if ki > 0 {
                den *= num_traits::pow(BigInt::from(idx as u64 + 1), ki as usize)
                    * factorial_big(u64::from(ki));
            }
        }
        Rational::new(num, den)
    }

    pub fn coefficient(&self) -> Result<Rational> {
        Ok(self.coefficient_with(n_count_closed(self.r, &self.k)?))
    }

    /// `P_r^{2−s} ∏ P_i^{k_i}`.
    pub fn key(&self) -> Result<ExpKey> {
        let exp = |v: i64| i32::try_from(v).map_err(|_| Error::Overflow("Laurent exponent"));
        let mut pairs = vec![(to_index(self.r)?, exp(2 - self.s as i64)?)];
        for (idx, &ki) in self.k.iter().enumerate() {
            if ki > 0 {
                pairs.push((to_index(idx as u64 + 1)?, exp(i64::from(ki))?));
            }
        }
        ExpKey::new(pairs)
    }
}

/// Every index cell `(r, s, k)` admitted by the topological sum.
pub fn topological_terms(g: u32) -> Result<Vec<TopTerm>> {
    require_genus(g)?;
    let g = u64::from(g);
    let mut out = Vec::new();
    for r in 2..=4 * g + 2 {
        let parts: Vec<u64> = divisors(r).into_iter().filter(|&i| i < r).collect();
        let largest = *parts.last().expect("r >= 2 has the divisor 1");
        for s in 3..=2 * g + 2 {
            // Σ i k_i = 2 − 2g − r(2 − s) = r(s − 2) + 2 − 2g.
            let weight = r * (s - 2) + 2;
            if weight < 2 * g {
                continue;
            }
            let weight = weight - 2 * g;
            if weight < s || weight > s * largest {
                continue;
            }
            for_each_composition(&parts, s, weight, &mut |mult| {
                let support: Vec<u64> = mult
                    .iter()
                    .zip(&parts)
                    .filter(|(&c, _)| c > 0)
                    .map(|(_, &i)| i)
                    .collect();
                if gcd_all(&support) != Ok(1) {
                    return;
                }
                let mut k = vec![0u32; (r - 1) as usize];
                for (&c, &i) in mult.iter().zip(&parts) {
                    k[(i - 1) as usize] = c as u32;
                }
                out.push(TopTerm { r, s, k });
            });
        }
    }
    Ok(out)
}

fn assemble_topological(g: u32, cross_check: bool) -> Result<PLaurent> {
    let mut out = PLaurent::zero();
    for term in topological_terms(g)? {
        let n = n_count_closed(term.r, &term.k)?;
        if cross_check {
            let oracle = n_count_oracle(term.r, &term.k)?;
            if oracle != n {
                return Err(Error::Internal(format!(
                    "N({}; {:?}): closed form {n} != direct count {oracle}",
                    term.r, term.k
                )));
            }
        }
        out.add_term(term.key()?, term.coefficient_with(n));
    }
    Ok(out)
}

/// `𝒥_g^top` for `g ≥ 2`, with `N` from the closed form.
pub fn topological_jacobian(g: u32) -> Result<PLaurent> {
    assemble_topological(g, false)
}

/// As [`topological_jacobian`], additionally checking every `N` against
/// the direct count.
pub fn topological_jacobian_verified(g: u32) -> Result<PLaurent> {
    assemble_topological(g, true)
}

pub fn generating_function(g: u32, kind: Kind) -> Result<PLaurent> {
    match kind {
        Kind::WeightZero => weight_zero_jacobian(g),
        Kind::Topological => topological_jacobian(g),
    }
}

/// Scalar Euler characteristic of `Pic_g`: every `P_j ↦ 1`.
pub fn chi_pic(g: u32, kind: Kind) -> Result<Rational> {
    generating_function(g, kind)?.substitute_scalar(&BTreeMap::new(), &Rational::one())
}

/// `χ(Pic_{g,n})` for `n = 0 … max_n`: `n!` times the `tⁿ` coefficient after
/// `P_1 ↦ 1 + t`, `P_{j>1} ↦ 1`.
pub fn chi_series(g: u32, kind: Kind, max_n: u32) -> Result<Vec<Rational>> {
    let series = generating_function(g, kind)?.substitute_p1_series(max_n)?;
    let mut fact = BigInt::one();
    Ok(series
        .into_iter()
        .enumerate()
        .map(|(n, c)| {
            if n > 0 {
                fact *= n;
            }
            c * &fact
        })
        .collect())
}

/// Frobenius characteristic of the `𝕊_n`-equivariant Euler characteristic of
/// `Pic_{g,n}`: the degree-`n` part of the generating function with
/// `P_j = 1 + p_j` expanded.
pub fn equivariant_chi(g: u32, kind: Kind, n: u32) -> Result<TruncatedSymFunc> {
    Ok(generating_function(g, kind)?
        .expand_to_symfunc(n)
        .homogeneous_part(n))
}
