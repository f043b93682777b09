use std::fmt;

use crate::error::{Error, Result};

/// A power-sum monomial `∏ p_i^{m_i}`, stored as ascending `(i, m_i)` pairs
/// with every `m_i > 0`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PowerMonomial(Vec<(u32, u32)>);

impl PowerMonomial {
    pub fn one() -> Self {
        Self(Vec::new())
    }

    /// The single power sum `p_i`.
    pub fn power_sum(i: u32) -> Self {
        assert!(i >= 1, "power sums are indexed from 1");
        Self(vec![(i, 1)])
    }

    /// Builds a monomial from `(index, multiplicity)` pairs in any order;
    /// repeated indices are merged and zero multiplicities dropped.
    pub fn from_parts(parts: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let mut v: Vec<(u32, u32)> = Vec::new();
        for (i, m) in parts {
            if i == 0 {
                return Err(Error::Usage("power-sum index 0 is not allowed".into()));
            }
            if m > 0 {
                v.push((i, m));
            }
        }
        v.sort_unstable();
        let mut merged: Vec<(u32, u32)> = Vec::with_capacity(v.len());
        for (i, m) in v {
            match merged.last_mut() {
                Some((j, n)) if *j == i => *n += m,
                _ => merged.push((i, m)),
            }
        }
        Ok(Self(merged))
    }

    /// Monomial `p_{λ_1} p_{λ_2} ⋯` of a partition (parts in any order).
    pub fn from_partition(parts: &[u32]) -> Result<Self> {
        Self::from_parts(parts.iter().map(|&i| (i, 1)))
    }

    pub fn parts(&self) -> &[(u32, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Total degree `Σ i·m_i`.
    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&(i, m)| u64::from(i) * u64::from(m)).sum()
    }

    pub fn multiplicity(&self, i: u32) -> u32 {
        self.0
            .binary_search_by_key(&i, |&(j, _)| j)
            .map(|pos| self.0[pos].1)
            .unwrap_or(0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut x, mut y) = (0, 0);
        while x < a.len() && y < b.len() {
            match a[x].0.cmp(&b[y].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[x]);
                    x += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[y]);
                    y += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a[x].0, a[x].1 + b[y].1));
                    x += 1;
                    y += 1;
                }
            }
        }
        out.extend_from_slice(&a[x..]);
        out.extend_from_slice(&b[y..]);
        Self(out)
    }

    /// Replaces every `p_i` by `p_{k·i}`.
    pub fn scale_indices(&self, k: u32) -> Self {
        Self(self.0.iter().map(|&(i, m)| (i * k, m)).collect())
    }
}

impl fmt::Display for PowerMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (n, &(i, m)) in self.0.iter().enumerate() {
            if n > 0 {
                f.write_str("*")?;
            }
            if m == 1 {
                write!(f, "p{i}")?;
            } else {
                write!(f, "p{i}^{m}")?;
            }
        }
        Ok(())
    }
}
