use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::algebra::{insert_term, PowerCache, TruncatedAlgebra};
use super::{PowerMonomial, TruncatedSymFunc};
use crate::error::{Error, Result};
use crate::Rational;

type MarkedKey = (PowerMonomial, u32);

/// Truncated element of `Λ̂[[x]]`: power-sum degree `≤ trunc_degree` and
/// marker exponent `≤ marker_order`, truncated independently.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedSymFunc {
    degree: u32,
    marker_order: u32,
    terms: BTreeMap<MarkedKey, Rational>,
}

impl MarkedSymFunc {
    pub fn zero(degree: u32, marker_order: u32) -> Self {
        Self {
            degree,
            marker_order,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(degree: u32, marker_order: u32) -> Self {
        Self::from_terms(
            degree,
            marker_order,
            [((PowerMonomial::one(), 0), Rational::one())],
        )
    }

    /// The marker `x` itself.
    pub fn marker(degree: u32, marker_order: u32) -> Self {
        Self::from_terms(
            degree,
            marker_order,
            [((PowerMonomial::one(), 1), Rational::one())],
        )
    }

    pub fn from_terms(
        degree: u32,
        marker_order: u32,
        terms: impl IntoIterator<Item = (MarkedKey, Rational)>,
    ) -> Self {
        let mut map = BTreeMap::new();
        for ((mono, e), c) in terms {
            if mono.degree() <= u64::from(degree) && e <= marker_order {
                insert_term(&mut map, (mono, e), c);
            }
        }
        Self {
            degree,
            marker_order,
            terms: map,
        }
    }

    /// Embeds an unmarked element (no `x` dependence).
    pub fn from_symfunc(f: &TruncatedSymFunc, marker_order: u32) -> Self {
        Self::from_terms(
            f.trunc_degree(),
            marker_order,
            f.terms().map(|(m, c)| ((m.clone(), 0), c.clone())),
        )
    }

    pub fn trunc_degree(&self) -> u32 {
        self.degree
    }

    pub fn marker_order(&self) -> u32 {
        self.marker_order
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(PowerMonomial, u32), &Rational)> {
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

    pub fn coeff(&self, mono: &PowerMonomial, marker_exp: u32) -> Rational {
        self.terms
            .get(&(mono.clone(), marker_exp))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// The symmetric function multiplying `x^e`.
    pub fn marker_coefficient(&self, e: u32) -> TruncatedSymFunc {
        TruncatedSymFunc::from_terms(
            self.degree,
            self.terms
                .iter()
                .filter(|((_, x), _)| *x == e)
                .map(|((m, _), c)| (m.clone(), c.clone())),
        )
    }

    /// Re-truncates to a smaller (or equal) bidegree window.
    pub fn truncate(&self, degree: u32, marker_order: u32) -> Self {
        Self::from_terms(
            degree,
            marker_order,
            self.terms.iter().map(|(k, c)| (k.clone(), c.clone())),
        )
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::TruncationMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        if self.marker_order != other.marker_order {
            return Err(Error::TruncationMismatch {
                left: self.marker_order,
                right: other.marker_order,
            });
        }
        Ok(())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &Rational::one());
        Ok(out)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        Ok(out)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        Ok(self.times(other))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.degree, self.marker_order);
        out.add_scaled(self, c);
        out
    }

    /// `p_k ∘ F`: `p_i ↦ p_{k·i}` and `x ↦ x^k`.
    pub fn adams(&self, k: u32) -> Self {
        assert!(k >= 1, "Adams operation index must be positive");
        Self::from_terms(
            self.degree,
            self.marker_order,
            self.terms
                .iter()
                .filter(|((m, e), _)| {
                    m.degree() * u64::from(k) <= u64::from(self.degree)
                        && u64::from(*e) * u64::from(k) <= u64::from(self.marker_order)
                })
                .map(|((m, e), c)| ((m.scale_indices(k), e * k), c.clone())),
        )
    }

    fn shift_marker(&self, e: u32) -> Self {
        Self::from_terms(
            self.degree,
            self.marker_order,
            self.terms
                .iter()
                .map(|((m, x), c)| ((m.clone(), x + e), c.clone())),
        )
    }

    /// Plethysm `self ∘ inner` with `x` inert (`x ∘ g = x`, `p_n ∘ x = xⁿ`).
    /// `inner` must have vanishing bidegree-(0, 0) term.
    pub fn plethysm(&self, inner: &Self) -> Result<Self> {
        self.check_shape(inner)?;
        if !inner.coeff(&PowerMonomial::one(), 0).is_zero() {
            return Err(Error::Domain(
                "plethysm requires an argument with zero (0, 0) term".into(),
            ));
        }
        let mut by_marker: BTreeMap<u32, Vec<(&PowerMonomial, &Rational)>> = BTreeMap::new();
        for ((m, e), c) in &self.terms {
            by_marker.entry(*e).or_default().push((m, c));
        }
        let mut cache = PowerCache::new(|k| inner.adams(k));
        let template = Self::zero(self.degree, self.marker_order);
        let mut out = template.clone();
        for (e, terms) in by_marker {
            let part = cache.evaluate(&template, terms);
            out.add_scaled(&part.shift_marker(e), &Rational::one());
        }
        Ok(out)
    }
}

impl fmt::Display for MarkedSymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| {
            (a.0 .1, a.0 .0.degree(), &a.0 .0).cmp(&(b.0 .1, b.0 .0.degree(), &b.0 .0))
        });
        for (n, ((mono, e), c)) in terms.into_iter().enumerate() {
            let mut factors = Vec::new();
            if !mono.is_one() {
                factors.push(mono.to_string());
            }
            match e {
                0 => {}
                1 => factors.push("x".into()),
                _ => factors.push(format!("x^{e}")),
            }
            let body = (!factors.is_empty()).then(|| factors.join("*"));
            crate::plaurent::write_text_term(f, c, body.as_deref(), n == 0)?;
        }
        Ok(())
    }
}

impl TruncatedAlgebra for MarkedSymFunc {
    fn unit_like(&self) -> Self {
        Self::one(self.degree, self.marker_order)
    }

    fn zero_like(&self) -> Self {
        Self::zero(self.degree, self.marker_order)
    }

    fn times(&self, other: &Self) -> Self {
        let degree = self.degree.min(other.degree);
        let marker_order = self.marker_order.min(other.marker_order);
        let mut right: Vec<(u64, u32, &PowerMonomial, &Rational)> = other
            .terms
            .iter()
            .map(|((m, e), c)| (m.degree(), *e, m, c))
            .collect();
        right.sort_by_key(|t| t.0);
        let mut terms = BTreeMap::new();
        for ((a, ea), ca) in &self.terms {
            let da = a.degree();
            for &(db, eb, b, cb) in &right {
                if da + db > u64::from(degree) {
                    break;
                }
                if ea + eb <= marker_order {
                    insert_term(&mut terms, (a.mul(b), ea + eb), ca * cb);
                }
            }
        }
        Self {
            degree,
            marker_order,
            terms,
        }
    }

    fn add_scaled(&mut self, other: &Self, c: &Rational) {
        for ((m, e), a) in &other.terms {
            if m.degree() <= u64::from(self.degree) && *e <= self.marker_order {
                insert_term(&mut self.terms, (m.clone(), *e), a * c);
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

    #[test]
    fn marker_is_inert_under_plethysm() {
        let x = MarkedSymFunc::marker(4, 4);
        let g = MarkedSymFunc::from_symfunc(&TruncatedSymFunc::power_sum(4, 2), 4);
        assert_eq!(x.plethysm(&g).unwrap(), x);
    }

    #[test]
    fn power_sum_of_marker() {
        let p3 = MarkedSymFunc::from_symfunc(&TruncatedSymFunc::power_sum(4, 3), 6);
        let x = MarkedSymFunc::marker(4, 6);
        let expected =
            MarkedSymFunc::from_terms(4, 6, [((PowerMonomial::one(), 3), q(1, 1))]);
        assert_eq!(p3.plethysm(&x).unwrap(), expected);
    }

    #[test]
    fn bidegree_truncation() {
        let x = MarkedSymFunc::marker(2, 2);
        assert!(x.times(&x).times(&x).is_zero());
        let p1 = MarkedSymFunc::from_symfunc(&TruncatedSymFunc::power_sum(2, 1), 2);
        let prod = p1.mul(&x).unwrap();
        assert_eq!(prod.coeff(&PowerMonomial::power_sum(1), 1), q(1, 1));
        assert!(p1.mul(&MarkedSymFunc::marker(2, 3)).is_err());
    }

    #[test]
    fn plethysm_rejects_unit_term() {
        let one = MarkedSymFunc::one(3, 3);
        assert!(matches!(one.plethysm(&one), Err(Error::Domain(_))));
    }

    #[test]
    fn display() {
        let f = TruncatedSymFunc::power_sum(2, 1).transform_t(2);
        assert_eq!(f.to_string(), "p1 + x + p1*x + x^2 + p1*x^2");
    }
}
