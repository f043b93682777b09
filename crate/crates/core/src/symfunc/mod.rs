//! Completed symmetric functions `Λ̂ = ℚ[[p_1, p_2, …]]` truncated at a
//! total degree, and the marked ring `Λ̂[[x]]`.
//!
//! Elements are sparse maps from power-sum monomials to exact rationals.
//! Degree of `p_i` is `i`; every stored monomial has degree at most the
//! truncation degree and no stored coefficient is zero, so `==` is
//! mathematical equality at that truncation.

mod algebra;
mod marked;
mod monomial;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::numtheory;
use crate::Rational;

use algebra::{insert_term, PowerCache, TruncatedAlgebra};
pub use marked::MarkedSymFunc;
pub use monomial::PowerMonomial;

/// Truncated element of `Λ̂`: all terms of degree `≤ trunc_degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSymFunc {
    degree: u32,
    terms: BTreeMap<PowerMonomial, Rational>,
}

impl TruncatedSymFunc {
    pub fn zero(degree: u32) -> Self {
        Self {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(degree: u32) -> Self {
        Self::constant(degree, Rational::one())
    }

    pub fn constant(degree: u32, c: Rational) -> Self {
        Self::monomial(degree, PowerMonomial::one(), c)
    }

    /// `p_i`, or zero if `i` exceeds the truncation degree.
    pub fn power_sum(degree: u32, i: u32) -> Self {
        Self::monomial(degree, PowerMonomial::power_sum(i), Rational::one())
    }

    pub fn monomial(degree: u32, mono: PowerMonomial, c: Rational) -> Self {
        Self::from_terms(degree, [(mono, c)])
    }

    /// Sums the given terms, dropping those beyond the truncation degree.
    pub fn from_terms(
        degree: u32,
        terms: impl IntoIterator<Item = (PowerMonomial, Rational)>,
    ) -> Self {
        let mut map = BTreeMap::new();
        for (mono, c) in terms {
            if mono.degree() <= u64::from(degree) {
                insert_term(&mut map, mono, c);
            }
        }
        Self { degree, terms: map }
    }

    pub fn trunc_degree(&self) -> u32 {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PowerMonomial, &Rational)> {
        self.terms.iter()
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

    pub fn coeff(&self, mono: &PowerMonomial) -> Rational {
        self.terms.get(mono).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&PowerMonomial::one())
    }

    /// Terms of degree exactly `n`, kept at the same truncation degree.
    pub fn homogeneous_part(&self, n: u32) -> Self {
        Self {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == u64::from(n))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Same element viewed at another truncation degree. Raising the degree
    /// treats the stored terms as an exact polynomial.
    pub fn with_degree(&self, degree: u32) -> Self {
        Self::from_terms(
            degree,
            self.terms.iter().map(|(m, c)| (m.clone(), c.clone())),
        )
    }

    fn check_degree(&self, other: &Self) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::TruncationMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        Ok(())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &Rational::one());
        Ok(out)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        Ok(out)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        Ok(self.times(other))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.degree);
        }
        Self {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a * c))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one(self.degree);
        for _ in 0..n {
            out = out.times(self);
        }
        out
    }

    /// The Adams operation `p_k ∘ f`: every `p_i` becomes `p_{k·i}`.
    pub fn adams(&self, k: u32) -> Self {
        assert!(k >= 1, "Adams operation index must be positive");
        Self::from_terms(
            self.degree,
            self.terms
                .iter()
                .filter(|(m, _)| m.degree() * u64::from(k) <= u64::from(self.degree))
                .map(|(m, c)| (m.scale_indices(k), c.clone())),
        )
    }

    fn require_no_constant(&self, what: &str) -> Result<()> {
        if !self.constant_term().is_zero() {
            return Err(Error::Domain(format!(
                "{what} requires an argument with zero constant term, got {}",
                self.constant_term()
            )));
        }
        Ok(())
    }

    /// Plethysm `self ∘ inner`; `inner` must have zero constant term.
    pub fn plethysm(&self, inner: &Self) -> Result<Self> {
        self.check_degree(inner)?;
        inner.require_no_constant("plethysm")?;
        let mut cache = PowerCache::new(|k| inner.adams(k));
        Ok(cache.evaluate(&Self::zero(self.degree), self.terms.iter()))
    }

    /// Ordinary `exp(h) = Σ hⁿ/n!` for `h` with zero constant term.
    pub fn exp_series(&self) -> Result<Self> {
        self.require_no_constant("exp")?;
        let mut out = Self::one(self.degree);
        let mut term = Self::one(self.degree);
        for n in 1..=self.degree {
            term = term
                .times(self)
                .scale(&Rational::new(BigInt::one(), BigInt::from(n)));
            if term.is_zero() {
                break;
            }
            out.add_scaled(&term, &Rational::one());
        }
        Ok(out)
    }

    /// Ordinary `log(1 + h) = Σ (-1)^{n+1} hⁿ/n` for `h` with zero constant term.
    pub fn log_one_plus(&self) -> Result<Self> {
        self.require_no_constant("log")?;
        let mut out = Self::zero(self.degree);
        let mut power = Self::one(self.degree);
        for n in 1..=self.degree {
            power = power.times(self);
            if power.is_zero() {
                break;
            }
            let sign = if n % 2 == 1 { 1 } else { -1 };
            out.add_scaled(&power, &Rational::new(BigInt::from(sign), BigInt::from(n)));
        }
        Ok(out)
    }

    /// Plethystic exponential `Exp(f) = Σ_{n>0} h_n ∘ f`, computed as
    /// `exp(Σ_{n>0} (p_n ∘ f)/n) − 1`. The result has zero constant term.
    pub fn exp_plethystic(&self) -> Result<Self> {
        self.require_no_constant("Exp")?;
        let mut arg = Self::zero(self.degree);
        for n in 1..=self.degree {
            arg.add_scaled(
                &self.adams(n),
                &Rational::new(BigInt::one(), BigInt::from(n)),
            );
        }
        let mut out = arg.exp_series()?;
        out.add_scaled(&Self::one(self.degree), &-Rational::one());
        Ok(out)
    }

    /// Plethystic logarithm: given `f`, returns
    /// `Log(1 + f) = Σ_{n≥1} (μ(n)/n) log(1 + p_n ∘ f)`.
    pub fn log_plethystic(&self) -> Result<Self> {
        self.require_no_constant("Log")?;
        let mut out = Self::zero(self.degree);
        for n in 1..=self.degree {
            let mu = numtheory::mobius(u64::from(n));
            if mu == 0 {
                continue;
            }
            let log = self.adams(n).log_one_plus()?;
            out.add_scaled(&log, &Rational::new(BigInt::from(mu), BigInt::from(n)));
        }
        Ok(out)
    }

    /// Rank specialization `p_1 ↦ x`, `p_k ↦ 0` for `k > 1`; returns the
    /// coefficients of `x^0 … x^D`.
    pub fn specialize_rk(&self) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.degree as usize + 1];
        for (mono, c) in &self.terms {
            match mono.parts() {
                [] => out[0] += c,
                [(1, m)] => out[*m as usize] += c,
                _ => {}
            }
        }
        out
    }

    /// Invariants specialization `p_k ↦ x^k`; returns the coefficients of
    /// `x^0 … x^D`.
    pub fn specialize_inv(&self) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.degree as usize + 1];
        for (mono, c) in &self.terms {
            out[mono.degree() as usize] += c;
        }
        out
    }

    /// `inv∆`, the algebra homomorphism `p_j ↦ p_j + x^j`, truncated at
    /// `(trunc_degree, marker_order)`.
    pub fn inv_delta(&self, marker_order: u32) -> MarkedSymFunc {
        let d = self.degree;
        let mut cache = PowerCache::new(|j| {
            MarkedSymFunc::from_terms(
                d,
                marker_order,
                [
                    ((PowerMonomial::power_sum(j), 0), Rational::one()),
                    ((PowerMonomial::one(), j), Rational::one()),
                ],
            )
        });
        cache.evaluate(&MarkedSymFunc::zero(d, marker_order), self.terms.iter())
    }

    /// The transform `𝒯: p_n ↦ (p_n + xⁿ)/(1 − xⁿ)`, truncated at
    /// `(trunc_degree, marker_order)`.
    pub fn transform_t(&self, marker_order: u32) -> MarkedSymFunc {
        let d = self.degree;
        let mut cache = PowerCache::new(|n| {
            let mut terms = Vec::new();
            let mut e = 0;
            while e <= marker_order {
                terms.push(((PowerMonomial::power_sum(n), e), Rational::one()));
                if e + n <= marker_order {
                    terms.push(((PowerMonomial::one(), e + n), Rational::one()));
                }
                e += n;
            }
            MarkedSymFunc::from_terms(d, marker_order, terms)
        });
        cache.evaluate(&MarkedSymFunc::zero(d, marker_order), self.terms.iter())
    }

    /// Terms ordered by `(degree, monomial)`.
    pub fn sorted_terms(&self) -> Vec<(&PowerMonomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.degree().cmp(&b.0.degree()).then_with(|| a.0.cmp(b.0)));
        v
    }

    /// JSON form `{"degree": D, "terms": [{"coeff": "p/q", "powers": {"i": m}}]}`.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .sorted_terms()
            .into_iter()
            .map(|(mono, c)| {
                let mut powers = Map::new();
                for &(i, m) in mono.parts() {
                    powers.insert(i.to_string(), json!(m));
                }
                json!({ "coeff": c.to_string(), "powers": powers })
            })
            .collect();
        json!({ "degree": self.degree, "terms": terms })
    }

    /// LaTeX rendering in the power-sum basis.
    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (n, (mono, c)) in self.sorted_terms().into_iter().enumerate() {
            let body: Vec<String> = mono
                .parts()
                .iter()
                .map(|&(i, m)| {
                    if m == 1 {
                        format!("p_{{{i}}}")
                    } else {
                        format!("p_{{{i}}}^{{{m}}}")
                    }
                })
                .collect();
            crate::plaurent::push_latex_coeff(&mut s, c, n == 0, body.is_empty());
            s.push_str(&body.join(" "));
        }
        s
    }
}

/// `h_n = ch_n(triv) = Σ_{λ ⊢ n} p_λ / z_λ`, summed directly over partitions.
pub fn complete_homogeneous(degree: u32, n: u32) -> TruncatedSymFunc {
    fn partitions(n: u32, max_part: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(acc.clone());
            return;
        }
        for part in (1..=n.min(max_part)).rev() {
            acc.push(part);
            partitions(n - part, part, acc, out);
            acc.pop();
        }
    }
    let mut parts = Vec::new();
    partitions(n, n, &mut Vec::new(), &mut parts);
    TruncatedSymFunc::from_terms(
        degree,
        parts.into_iter().map(|lambda| {
            let mono = PowerMonomial::from_partition(&lambda).expect("positive parts");
            // z_λ = ∏ i^{m_i} m_i!
            let z = mono.parts().iter().fold(BigInt::one(), |acc, &(i, m)| {
                let fact = (1..=m).fold(BigInt::one(), |f, k| f * k);
                acc * num_traits::pow(BigInt::from(i), m as usize) * fact
            });
            (mono, Rational::new(BigInt::one(), z))
        }),
    )
}

/// The composite `inv∆(f ∘ Exp(p_1)) ∘ Log(1 + p_1)`, truncated at
/// `(trunc_degree, marker_order)`; it agrees with [`TruncatedSymFunc::transform_t`].
///
/// `f` is treated as the polynomial it stores. The inner plethysm runs at
/// degree `D + X` because `inv∆` moves degree from `p` into `x`.
pub fn transform_via_plethysm(f: &TruncatedSymFunc, marker_order: u32) -> Result<MarkedSymFunc> {
    let d = f.trunc_degree();
    let wide = d + marker_order;
    let exp_p1 = TruncatedSymFunc::power_sum(wide, 1).exp_plethystic()?;
    let composed = f.with_degree(wide).plethysm(&exp_p1)?;
    let marked = composed.inv_delta(marker_order).truncate(d, marker_order);
    let log = TruncatedSymFunc::power_sum(d, 1).log_plethystic()?;
    marked.plethysm(&MarkedSymFunc::from_symfunc(&log, marker_order))
}

impl fmt::Display for TruncatedSymFunc {
    /// Text form, e.g. `1/2 * p1^2 + 1/2 * p2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (mono, c)) in self.sorted_terms().into_iter().enumerate() {
            let body = (!mono.is_one()).then(|| mono.to_string());
            crate::plaurent::write_text_term(f, c, body.as_deref(), n == 0)?;
        }
        Ok(())
    }
}

impl TruncatedAlgebra for TruncatedSymFunc {
    fn unit_like(&self) -> Self {
        Self::one(self.degree)
    }

    fn zero_like(&self) -> Self {
        Self::zero(self.degree)
    }

    fn times(&self, other: &Self) -> Self {
        let degree = self.degree.min(other.degree);
        let limit = u64::from(degree);
        let mut right: Vec<(u64, &PowerMonomial, &Rational)> = other
            .terms
            .iter()
            .map(|(m, c)| (m.degree(), m, c))
            .collect();
        right.sort_by_key(|t| t.0);
        let mut terms = BTreeMap::new();
        for (a, ca) in &self.terms {
            let da = a.degree();
            for &(db, b, cb) in &right {
                if da + db > limit {
                    break;
                }
                insert_term(&mut terms, a.mul(b), ca * cb);
            }
        }
        Self { degree, terms }
    }

    fn add_scaled(&mut self, other: &Self, c: &Rational) {
        for (m, a) in &other.terms {
            if m.degree() <= u64::from(self.degree) {
                insert_term(&mut self.terms, m.clone(), a * c);
            }
        }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn p(d: u32, i: u32) -> TruncatedSymFunc {
        TruncatedSymFunc::power_sum(d, i)
    }

    fn mono(parts: &[u32]) -> PowerMonomial {
        PowerMonomial::from_partition(parts).unwrap()
    }

    fn sf(d: u32, terms: &[(&[u32], Rational)]) -> TruncatedSymFunc {
        TruncatedSymFunc::from_terms(d, terms.iter().map(|(m, c)| (mono(m), c.clone())))
    }

    #[test]
    fn ring_examples() {
        let d = 4;
        assert_eq!(p(d, 1).add(&p(d, 1)).unwrap(), p(d, 1).scale(&q(2, 1)));
        assert_eq!(p(d, 1).mul(&p(d, 1)).unwrap(), sf(d, &[(&[1, 1], q(1, 1))]));
        assert!(p(d, 2).mul(&p(d, 3)).unwrap().is_zero());
        assert_eq!(
            p(4, 1).add(&p(5, 1)),
            Err(Error::TruncationMismatch { left: 4, right: 5 })
        );
        assert!(p(4, 1).mul(&p(3, 1)).is_err());
    }

    #[test]
    fn plethysm_examples() {
        let d = 6;
        assert_eq!(p(d, 2).plethysm(&p(d, 3)).unwrap(), p(d, 6));
        let f = sf(d, &[(&[1, 1], q(1, 1))]);
        let g = p(d, 1).add(&p(d, 2)).unwrap();
        let expected = sf(
            d,
            &[(&[1, 1], q(1, 1)), (&[1, 2], q(2, 1)), (&[2, 2], q(1, 1))],
        );
        assert_eq!(f.plethysm(&g).unwrap(), expected);
        let g = sf(d, &[(&[1], q(1, 1)), (&[2], q(1, 2))]);
        assert_eq!(
            p(d, 2).plethysm(&g).unwrap(),
            sf(d, &[(&[2], q(1, 1)), (&[4], q(1, 2))])
        );
    }

    #[test]
    fn plethysm_rejects_constant_term() {
        let g = TruncatedSymFunc::one(3).add(&p(3, 1)).unwrap();
        assert!(matches!(p(3, 1).plethysm(&g), Err(Error::Domain(_))));
    }

    #[test]
    fn plethysm_keeps_outer_constant() {
        let f = TruncatedSymFunc::constant(3, q(5, 2)).add(&p(3, 1)).unwrap();
        let g = p(3, 2);
        let expected = TruncatedSymFunc::constant(3, q(5, 2)).add(&p(3, 2)).unwrap();
        assert_eq!(f.plethysm(&g).unwrap(), expected);
    }

    #[test]
    fn exp_examples() {
        let e = p(4, 1).exp_plethystic().unwrap();
        assert_eq!(e.homogeneous_part(1), p(4, 1));
        assert_eq!(
            e.homogeneous_part(2),
            sf(4, &[(&[1, 1], q(1, 2)), (&[2], q(1, 2))])
        );
        assert!(e.constant_term().is_zero());
        let e2 = p(4, 2).exp_plethystic().unwrap();
        assert_eq!(
            e2.homogeneous_part(4),
            sf(4, &[(&[2, 2], q(1, 2)), (&[4], q(1, 2))])
        );
        assert_eq!(e2.homogeneous_part(2), p(4, 2));
        assert!(e2.homogeneous_part(3).is_zero());
    }

    #[test]
    fn exp_of_p1_is_sum_of_complete_homogeneous() {
        // h_3 = (p1^3 + 3 p1 p2 + 2 p3)/6 from averaging over S_3 cycle types.
        let e = p(3, 1).exp_plethystic().unwrap();
        assert_eq!(
            e.homogeneous_part(3),
            sf(
                3,
                &[(&[1, 1, 1], q(1, 6)), (&[1, 2], q(1, 2)), (&[3], q(1, 3))]
            )
        );
    }

    #[test]
    fn log_examples() {
        let d = 6;
        let one_plus_exp = p(d, 1).exp_plethystic().unwrap();
        assert_eq!(one_plus_exp.log_plethystic().unwrap(), p(d, 1));
        let l = p(d, 1).log_plethystic().unwrap();
        assert_eq!(
            l.homogeneous_part(2),
            sf(d, &[(&[1, 1], q(-1, 2)), (&[2], q(-1, 2))])
        );
        let f = p(d, 1).add(&p(d, 2)).unwrap();
        assert_eq!(f.log_plethystic().unwrap().exp_plethystic().unwrap(), f);
    }

    #[test]
    fn exp_log_domain_errors() {
        let c = TruncatedSymFunc::one(3);
        assert!(matches!(c.exp_plethystic(), Err(Error::Domain(_))));
        assert!(matches!(c.log_plethystic(), Err(Error::Domain(_))));
    }

    #[test]
    fn specialization_examples() {
        let d = 3;
        let h2 = sf(d, &[(&[1, 1], q(1, 2)), (&[2], q(1, 2))]);
        assert_eq!(sf(d, &[(&[1, 1], q(1, 1))]).specialize_rk()[2], q(1, 1));
        assert!(p(d, 2).specialize_rk().iter().all(Zero::is_zero));
        assert_eq!(h2.specialize_rk(), vec![q(0, 1), q(0, 1), q(1, 2), q(0, 1)]);
        assert_eq!(p(d, 3).specialize_inv(), vec![q(0, 1), q(0, 1), q(0, 1), q(1, 1)]);
        assert_eq!(h2.specialize_inv()[2], q(1, 1));
        assert_eq!(sf(d, &[(&[1, 2], q(1, 1))]).specialize_inv()[3], q(1, 1));
    }

    #[test]
    fn inv_of_exp_p1_is_geometric() {
        let d = 7;
        let inv = p(d, 1).exp_plethystic().unwrap().specialize_inv();
        assert!(inv[0].is_zero());
        assert!(inv[1..].iter().all(One::is_one));
    }

    #[test]
    fn inv_delta_examples() {
        let m = |parts: &[u32], e: u32, c: Rational| ((mono(parts), e), c);
        let x = 4;
        assert_eq!(
            p(4, 3).inv_delta(x),
            MarkedSymFunc::from_terms(4, x, [m(&[3], 0, q(1, 1)), m(&[], 3, q(1, 1))])
        );
        assert_eq!(
            sf(4, &[(&[1, 1], q(1, 1))]).inv_delta(x),
            MarkedSymFunc::from_terms(
                4,
                x,
                [m(&[1, 1], 0, q(1, 1)), m(&[1], 1, q(2, 1)), m(&[], 2, q(1, 1))]
            )
        );
        assert_eq!(TruncatedSymFunc::one(4).inv_delta(x), MarkedSymFunc::one(4, x));
    }

    #[test]
    fn transform_examples() {
        let m = |parts: &[u32], e: u32| ((mono(parts), e), q(1, 1));
        assert_eq!(TruncatedSymFunc::one(4).transform_t(3), MarkedSymFunc::one(4, 3));
        assert_eq!(
            p(4, 1).transform_t(2),
            MarkedSymFunc::from_terms(
                4,
                2,
                [m(&[1], 0), m(&[], 1), m(&[1], 1), m(&[], 2), m(&[1], 2)]
            )
        );
        assert_eq!(
            p(4, 2).transform_t(4),
            MarkedSymFunc::from_terms(
                4,
                4,
                [m(&[2], 0), m(&[], 2), m(&[2], 2), m(&[], 4), m(&[2], 4)]
            )
        );
    }

    #[test]
    fn frobenius_h_matches_exp() {
        let d = 6;
        let e = p(d, 1).exp_plethystic().unwrap();
        for n in 1..=d {
            assert_eq!(e.homogeneous_part(n), complete_homogeneous(d, n), "n = {n}");
        }
        assert_eq!(complete_homogeneous(3, 0), TruncatedSymFunc::one(3));
    }

    #[test]
    fn transform_identity_on_power_sums() {
        for i in 1..=3 {
            let f = p(4, i);
            assert_eq!(transform_via_plethysm(&f, 4).unwrap(), f.transform_t(4));
        }
    }

    #[test]
    fn rendering() {
        let h2 = sf(3, &[(&[1, 1], q(1, 2)), (&[2], q(-1, 2)), (&[], q(-1, 1))]);
        assert_eq!(h2.to_string(), "-1 + 1/2 * p1^2 - 1/2 * p2");
        assert_eq!(TruncatedSymFunc::zero(2).to_string(), "0");
        assert_eq!(
            serde_json::to_string(&TruncatedSymFunc::constant(0, q(-1, 1)).to_json()).unwrap(),
            r#"{"degree":0,"terms":[{"coeff":"-1","powers":{}}]}"#
        );
        assert_eq!(h2.to_latex(), r"-1 + \frac{1}{2} p_{1}^{2} - \frac{1}{2} p_{2}");
    }
}
