//! Shared evaluation of algebra homomorphisms out of the power-sum ring.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use super::monomial::PowerMonomial;
use crate::Rational;

/// A truncated commutative `ℚ`-algebra that a power-sum monomial can be
/// evaluated in.
pub(crate) trait TruncatedAlgebra: Clone {
    fn unit_like(&self) -> Self;
    fn zero_like(&self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn add_scaled(&mut self, other: &Self, c: &Rational);
    fn is_zero(&self) -> bool;
}

/// Lazily computed powers `image(i)^m`.
pub(crate) struct PowerCache<A, F> {
    image: F,
    powers: HashMap<u32, Vec<A>>,
}

impl<A: TruncatedAlgebra, F: FnMut(u32) -> A> PowerCache<A, F> {
    pub(crate) fn new(image: F) -> Self {
        Self {
            image,
            powers: HashMap::new(),
        }
    }

    fn power(&mut self, i: u32, m: u32) -> &A {
        let m = m as usize;
        if !self.powers.contains_key(&i) {
            let base = (self.image)(i);
            self.powers.insert(i, vec![base.unit_like(), base]);
        }
        let pows = self.powers.get_mut(&i).expect("inserted above");
        while pows.len() <= m {
            let next = pows[pows.len() - 1].times(&pows[1]);
            pows.push(next);
        }
        &pows[m]
    }

    /// Evaluates `Σ c_λ ∏ image(i)^{m_i}` over the given terms.
    pub(crate) fn evaluate<'a>(
        &mut self,
        template: &A,
        terms: impl IntoIterator<Item = (&'a PowerMonomial, &'a Rational)>,
    ) -> A {
        let mut acc = template.zero_like();
        for (mono, c) in terms {
            if c.is_zero() {
                continue;
            }
            let mut prod = template.unit_like();
            for &(i, m) in mono.parts() {
                prod = prod.times(self.power(i, m));
                if prod.is_zero() {
                    break;
                }
            }
            if !prod.is_zero() {
                acc.add_scaled(&prod, c);
            }
        }
        acc
    }
}

pub(crate) fn insert_term<K: Ord>(map: &mut BTreeMap<K, Rational>, key: K, c: Rational) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}
