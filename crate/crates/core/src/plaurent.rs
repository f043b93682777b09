//! Sparse Laurent polynomials in the variables `P_j = 1 + p_j`.
//!
//! A monomial `∏ P_j^{e_j}` has *exponent sum* `Σ e_j` and *Laurent degree*
//! `Σ j·e_j`. Terms are kept in canonical order: by Laurent degree, then by
//! the ascending `(j, e_j)` pair list compared lexicographically.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::symfunc::{PowerMonomial, TruncatedSymFunc};
use crate::Rational;

/// Exponent vector of a Laurent monomial: ascending `(j, e_j)` with `e_j ≠ 0`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ExpKey(Vec<(u32, i32)>);

impl ExpKey {
    pub fn one() -> Self {
        Self(Vec::new())
    }

    /// Builds a key from `(j, e)` pairs; repeated indices are summed and
    /// zero exponents dropped.
    pub fn new(exps: impl IntoIterator<Item = (u32, i32)>) -> Result<Self> {
        let mut map: BTreeMap<u32, i32> = BTreeMap::new();
        for (j, e) in exps {
            if j == 0 {
                return Err(Error::Usage("P_0 is not a variable".into()));
            }
            let slot = map.entry(j).or_insert(0);
            *slot = slot
                .checked_add(e)
                .ok_or(Error::Overflow("Laurent exponent"))?;
        }
        Ok(Self(map.into_iter().filter(|&(_, e)| e != 0).collect()))
    }

    pub fn exps(&self) -> &[(u32, i32)] {
        &self.0
    }

    pub fn exponent(&self, j: u32) -> i32 {
        self.0
            .binary_search_by_key(&j, |&(i, _)| i)
            .map(|pos| self.0[pos].1)
            .unwrap_or(0)
    }

    pub fn exponent_sum(&self) -> i64 {
        self.0.iter().map(|&(_, e)| i64::from(e)).sum()
    }

    pub fn laurent_degree(&self) -> i64 {
        self.0.iter().map(|&(j, e)| i64::from(j) * i64::from(e)).sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(self.0.iter().chain(other.0.iter()).copied())
            .expect("indices of existing keys are positive")
    }

    /// Text form without coefficient, e.g. `P2*P3/P6` or `1/(P2*P6^2)`.
    fn text_body(&self) -> String {
        let fmt_part = |&(j, e): &(u32, i32)| {
            let e = e.unsigned_abs();
            if e == 1 {
                format!("P{j}")
            } else {
                format!("P{j}^{e}")
            }
        };
        let num: Vec<String> = self.0.iter().filter(|p| p.1 > 0).map(fmt_part).collect();
        let den: Vec<String> = self.0.iter().filter(|p| p.1 < 0).map(fmt_part).collect();
        let num = if num.is_empty() {
            "1".to_string()
        } else {
            num.join("*")
        };
        match den.len() {
            0 => num,
            1 => format!("{num}/{}", den[0]),
            _ => format!("{num}/({})", den.join("*")),
        }
    }

    fn latex_body(&self) -> String {
        let fmt_part = |&(j, e): &(u32, i32)| {
            let e = e.unsigned_abs();
            if e == 1 {
                format!("P_{{{j}}}")
            } else {
                format!("P_{{{j}}}^{{{e}}}")
            }
        };
        let num: Vec<String> = self.0.iter().filter(|p| p.1 > 0).map(fmt_part).collect();
        let den: Vec<String> = self.0.iter().filter(|p| p.1 < 0).map(fmt_part).collect();
        let num = if num.is_empty() {
            "1".to_string()
        } else {
            num.join(" ")
        };
        if den.is_empty() {
            num
        } else {
            format!("\\frac{{{num}}}{{{}}}", den.join(" "))
        }
    }
}

impl Ord for ExpKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.laurent_degree()
            .cmp(&other.laurent_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ExpKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExpKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text_body())
    }
}

/// Output formats shared by the Laurent polynomial and symmetric function
/// renderers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Latex,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Self::Text),
            "latex" => Ok(Self::Latex),
            "json" => Ok(Self::Json),
            _ => Err(Error::Usage(format!(
                "unknown format `{s}` (expected text, latex or json)"
            ))),
        }
    }
}

/// Sparse Laurent polynomial in the `P_j` with exact rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PLaurent {
    terms: BTreeMap<ExpKey, Rational>,
}

impl PLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(ExpKey::one(), Rational::one())
    }

    /// The variable `P_j`.
    pub fn var(j: u32) -> Self {
        Self::var_pow(j, 1)
    }

    /// `P_j^e` for any integer `e`.
    pub fn var_pow(j: u32, e: i32) -> Self {
        Self::monomial(
            ExpKey::new([(j, e)]).expect("variable index must be positive"),
            Rational::one(),
        )
    }

    pub fn monomial(key: ExpKey, c: Rational) -> Self {
        Self::from_terms([(key, c)])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (ExpKey, Rational)>) -> Self {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    pub(crate) fn add_term(&mut self, key: ExpKey, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExpKey, &Rational)> {
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

    pub fn coeff(&self, key: &ExpKey) -> Rational {
        self.terms.get(key).cloned().unwrap_or_else(Rational::zero)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    #[allow(clippy::should_implement_trait)]
    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.mul(b), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(k, a)| (k.clone(), a * c))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Substitutes `P_j ↦ factor(j)·P_j` in every monomial.
    pub fn rescale_variables(&self, factor: impl Fn(u32) -> Rational) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, c)| {
            let mut c = c.clone();
            for &(j, e) in k.exps() {
                c *= pow_rational(&factor(j), e);
            }
            (k.clone(), c)
        }))
    }

    /// True iff every monomial has Laurent degree `deg`.
    pub fn is_homogeneous(&self, deg: i64) -> bool {
        self.terms.keys().all(|k| k.laurent_degree() == deg)
    }

    /// Exact value of `lim_{x→1} (1−x)^{order} · F|_{P_k ↦ P_k/(1−x^k)}`.
    ///
    /// Monomials with exponent sum below `order` vanish in the limit; those
    /// with exponent sum equal to `order` pick up the factor `∏ j^{−e_j}`
    /// from `1 − x^j = (1 − x)(1 + ⋯ + x^{j−1})`. A larger exponent sum
    /// makes the limit diverge and is reported as an error.
    pub fn limit_transform(&self, order: i64) -> Result<Self> {
        let mut out = Self::zero();
        for (k, c) in &self.terms {
            let sum = k.exponent_sum();
            match sum.cmp(&order) {
                Ordering::Greater => {
                    return Err(Error::Divergence {
                        key: k.to_string(),
                        exponent_sum: sum,
                        order,
                    })
                }
                Ordering::Less => {}
                Ordering::Equal => {
                    let mut c = c.clone();
                    for &(j, e) in k.exps() {
                        c *= pow_rational(&Rational::from_integer(BigInt::from(j)), -e);
                    }
                    out.add_term(k.clone(), c);
                }
            }
        }
        Ok(out)
    }

    /// Evaluates at `P_j = assignment[j]`, or `default` for unassigned `j`.
    pub fn substitute_scalar(
        &self,
        assignment: &BTreeMap<u32, Rational>,
        default: &Rational,
    ) -> Result<Rational> {
        let mut total = Rational::zero();
        for (k, c) in &self.terms {
            let mut term = c.clone();
            for &(j, e) in k.exps() {
                let v = assignment.get(&j).unwrap_or(default);
                if v.is_zero() && e < 0 {
                    return Err(Error::Evaluation(format!(
                        "P{j} = 0 raised to negative power {e}"
                    )));
                }
                term *= pow_rational(v, e);
            }
            total += term;
        }
        Ok(total)
    }

    /// Sends `P_1 ↦ 1 + t` and every other `P_j ↦ 1`; returns the
    /// coefficients of `t^0 … t^{max_n}`.
    pub fn substitute_p1_series(&self, max_n: u32) -> Result<Vec<Rational>> {
        let mut out = vec![Rational::zero(); max_n as usize + 1];
        for (k, c) in &self.terms {
            let e = k.exponent(1);
            if e < 0 {
                return Err(Error::Domain(format!(
                    "negative power of P1 in monomial {k}"
                )));
            }
            // Binomial coefficients of (1 + t)^e.
            let mut binom = BigInt::one();
            for n in 0..=(e as u32).min(max_n) {
                out[n as usize] += c * &binom;
                binom = binom * BigInt::from(e as u32 - n) / BigInt::from(n + 1);
            }
        }
        Ok(out)
    }

    /// Expands `P_j = 1 + p_j` into a symmetric function truncated at
    /// degree `degree`; negative powers become binomial series.
    pub fn expand_to_symfunc(&self, degree: u32) -> TruncatedSymFunc {
        let mut factors: HashMap<(u32, i32), TruncatedSymFunc> = HashMap::new();
        let mut out = TruncatedSymFunc::zero(degree);
        for (k, c) in &self.terms {
            let mut prod = TruncatedSymFunc::constant(degree, c.clone());
            for &(j, e) in k.exps() {
                let factor = factors
                    .entry((j, e))
                    .or_insert_with(|| binomial_series(degree, j, e));
                prod = prod.mul(factor).expect("same truncation degree");
            }
            out = out.add(&prod).expect("same truncation degree");
        }
        out
    }

    /// JSON form `{"terms": [{"coeff": "p/q", "exps": {"j": e}}]}` with terms in
    /// canonical order and exponent keys ascending.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(k, c)| {
                let mut exps = Map::new();
                for &(j, e) in k.exps() {
                    exps.insert(j.to_string(), json!(e));
                }
                json!({ "coeff": c.to_string(), "exps": exps })
            })
            .collect();
        json!({ "terms": terms })
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json_value(&v)
    }

    pub fn from_json_value(v: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("invalid Laurent polynomial JSON: {what}"));
        let terms = v
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing `terms` array"))?;
        let mut out = Self::zero();
        for t in terms {
            let coeff = t
                .get("coeff")
                .and_then(Value::as_str)
                .ok_or_else(|| bad("missing `coeff` string"))?;
            let coeff = parse_rational(coeff)?;
            let exps = t
                .get("exps")
                .and_then(Value::as_object)
                .ok_or_else(|| bad("missing `exps` object"))?;
            let mut pairs = Vec::with_capacity(exps.len());
            for (j, e) in exps {
                let j: u32 = j.parse().map_err(|_| bad("non-integer variable index"))?;
                let e = e
                    .as_i64()
                    .and_then(|e| i32::try_from(e).ok())
                    .ok_or_else(|| bad("non-integer exponent"))?;
                pairs.push((j, e));
            }
            out.add_term(ExpKey::new(pairs)?, coeff);
        }
        Ok(out)
    }

    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (n, (k, c)) in self.terms.iter().enumerate() {
            let bare = k.exps().is_empty();
            push_latex_coeff(&mut s, c, n == 0, bare);
            if !bare {
                s.push_str(&k.latex_body());
            }
        }
        s
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_string(),
            Format::Latex => self.to_latex(),
            Format::Json => self.to_json().to_string(),
        }
    }
}

impl fmt::Display for PLaurent {
    /// Text form, e.g. `1/3 * P1*P3/P6 - 1/3 * P1^4/P2^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (k, c)) in self.terms.iter().enumerate() {
            let body = (!k.exps().is_empty()).then(|| k.text_body());
            write_text_term(f, c, body.as_deref(), n == 0)?;
        }
        Ok(())
    }
}

pub(crate) fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let parsed = match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().map_err(|_| Error::Parse(format!("bad rational `{s}`")))?;
            let d: BigInt = d.parse().map_err(|_| Error::Parse(format!("bad rational `{s}`")))?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{s}`")));
            }
            Rational::new(n, d)
        }
        None => Rational::from_integer(
            s.parse()
                .map_err(|_| Error::Parse(format!("bad rational `{s}`")))?,
        ),
    };
    Ok(parsed)
}

fn pow_rational(base: &Rational, e: i32) -> Rational {
    let p = num_traits::pow(base.clone(), e.unsigned_abs() as usize);
    if e < 0 {
        p.recip()
    } else {
        p
    }
}

/// `(1 + p_j)^e` truncated at `degree`, via the generalized binomial theorem.
fn binomial_series(degree: u32, j: u32, e: i32) -> TruncatedSymFunc {
    let mut terms = Vec::new();
    let mut binom = Rational::one();
    let mut i: u32 = 0;
    while u64::from(i) * u64::from(j) <= u64::from(degree) {
        if binom.is_zero() {
            break;
        }
        let mono = PowerMonomial::from_parts([(j, i)]).expect("positive index");
        terms.push((mono, binom.clone()));
        binom = binom * Rational::from_integer(BigInt::from(i64::from(e) - i64::from(i)))
            / Rational::from_integer(BigInt::from(i + 1));
        i += 1;
    }
    TruncatedSymFunc::from_terms(degree, terms)
}

/// Writes one term of a `+`/`-` separated sum. `body` is `None` for a
/// constant term.
pub(crate) fn write_text_term(
    f: &mut fmt::Formatter<'_>,
    c: &Rational,
    body: Option<&str>,
    first: bool,
) -> fmt::Result {
    let negative = c.is_negative();
    match (first, negative) {
        (true, true) => f.write_str("-")?,
        (true, false) => {}
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
    }
    let abs = c.abs();
    match body {
        None => write!(f, "{abs}"),
        Some(b) if abs.is_one() => f.write_str(b),
        Some(b) => write!(f, "{abs} * {b}"),
    }
}

pub(crate) fn push_latex_coeff(s: &mut String, c: &Rational, first: bool, bare: bool) {
    let negative = c.is_negative();
    s.push_str(match (first, negative) {
        (true, true) => "-",
        (true, false) => "",
        (false, true) => " - ",
        (false, false) => " + ",
    });
    let abs = c.abs();
    if abs.is_one() && !bare {
        return;
    }
    if abs.is_integer() {
        s.push_str(&abs.numer().to_string());
    } else {
        s.push_str(&format!("\\frac{{{}}}{{{}}}", abs.numer(), abs.denom()));
    }
    if !bare {
        s.push(' ');
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn mono(exps: &[(u32, i32)], c: Rational) -> PLaurent {
        PLaurent::monomial(ExpKey::new(exps.iter().copied()).unwrap(), c)
    }

    fn table1_g2() -> PLaurent {
        mono(&[(2, 1), (3, 1), (6, -1)], q(-1, 6))
            .add(&mono(&[(1, 2), (3, -1)], q(-1, 2)))
            .add(&mono(&[(1, 3), (2, -2)], q(-1, 3)))
    }

    #[test]
    fn key_invariants() {
        let k = ExpKey::new([(6, -1), (2, 1), (3, 1), (5, 0)]).unwrap();
        assert_eq!(k.exps(), &[(2, 1), (3, 1), (6, -1)]);
        assert_eq!(k.exponent_sum(), 1);
        assert_eq!(k.laurent_degree(), -1);
        assert_eq!(ExpKey::new([(2, 1), (2, -1)]).unwrap(), ExpKey::one());
        assert!(ExpKey::new([(0, 1)]).is_err());
    }

    #[test]
    fn ring_examples() {
        assert_eq!(PLaurent::var(1).mul(&PLaurent::var_pow(1, -1)), PLaurent::one());
        let half = PLaurent::var(2).scale(&q(1, 2));
        assert_eq!(half.add(&half), PLaurent::var(2));
        assert_eq!(
            PLaurent::var(2).mul(&PLaurent::var(3)).mul(&PLaurent::var_pow(6, -1)),
            mono(&[(2, 1), (3, 1), (6, -1)], q(1, 1))
        );
        assert!(half.sub(&half).is_zero());
    }

    #[test]
    fn homogeneity() {
        assert!(mono(&[(2, 1), (3, 1), (6, -1)], q(1, 1)).is_homogeneous(-1));
        assert!(PLaurent::zero().is_homogeneous(17));
        assert!(!PLaurent::var(1).add(&PLaurent::var(2)).is_homogeneous(1));
        assert!(table1_g2().is_homogeneous(-1));
    }

    #[test]
    fn limit_transform_examples() {
        let f = mono(&[(2, 1), (3, 1), (6, -1)], q(1, 1));
        assert_eq!(f.limit_transform(1).unwrap(), f);
        assert!(matches!(
            mono(&[(1, 1), (2, 1)], q(1, 1)).limit_transform(1),
            Err(Error::Divergence { exponent_sum: 2, order: 1, .. })
        ));
        assert_eq!(
            mono(&[(1, 4), (3, -2)], q(1, 1)).limit_transform(2).unwrap(),
            mono(&[(1, 4), (3, -2)], q(9, 1))
        );
        let f = mono(&[(1, 2), (3, -1)], q(1, 1)).add(&mono(&[(6, -1)], q(1, 1)));
        assert_eq!(
            f.limit_transform(1).unwrap(),
            mono(&[(1, 2), (3, -1)], q(3, 1))
        );
    }

    #[test]
    fn scalar_substitution() {
        let ones = BTreeMap::new();
        assert_eq!(table1_g2().substitute_scalar(&ones, &q(1, 1)).unwrap(), q(-1, 1));
        let f = mono(&[(1, 1), (2, -1)], q(1, 1));
        let assign: BTreeMap<u32, Rational> = [(1, q(2, 1)), (2, q(4, 1))].into();
        assert_eq!(f.substitute_scalar(&assign, &q(1, 1)).unwrap(), q(1, 2));
        assert!(PLaurent::zero().substitute_scalar(&assign, &q(7, 1)).unwrap().is_zero());
        assert!(matches!(
            f.substitute_scalar(&ones, &q(0, 1)),
            Err(Error::Evaluation(_))
        ));
        // zero is fine under a positive exponent
        assert!(PLaurent::var(3).substitute_scalar(&ones, &q(0, 1)).unwrap().is_zero());
    }

    #[test]
    fn p1_series() {
        assert_eq!(
            PLaurent::var_pow(1, 2).substitute_p1_series(4).unwrap(),
            vec![q(1, 1), q(2, 1), q(1, 1), q(0, 1), q(0, 1)]
        );
        assert_eq!(
            mono(&[(1, 3), (2, -2)], q(1, 1)).substitute_p1_series(3).unwrap(),
            vec![q(1, 1), q(3, 1), q(3, 1), q(1, 1)]
        );
        assert_eq!(
            PLaurent::var_pow(1, 5).substitute_p1_series(2).unwrap(),
            vec![q(1, 1), q(5, 1), q(10, 1)]
        );
        assert!(matches!(
            PLaurent::var_pow(1, -1).substitute_p1_series(2),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn expand_examples() {
        let p = |i| TruncatedSymFunc::power_sum(4, i);
        let one = TruncatedSymFunc::one(4);
        assert_eq!(PLaurent::var(3).expand_to_symfunc(4), one.add(&p(3)).unwrap());
        let p2sq = p(2).mul(&p(2)).unwrap();
        assert_eq!(
            PLaurent::var_pow(2, -1).expand_to_symfunc(4),
            one.sub(&p(2)).unwrap().add(&p2sq).unwrap()
        );
        let e = table1_g2().expand_to_symfunc(3);
        assert_eq!(e.constant_term(), q(-1, 1));
    }

    #[test]
    fn rendering() {
        let f = mono(&[(2, 1), (3, 1), (6, -1)], q(-1, 6));
        assert_eq!(f.render(Format::Text), "-1/6 * P2*P3/P6");
        assert_eq!(
            f.render(Format::Json),
            r#"{"terms":[{"coeff":"-1/6","exps":{"2":1,"3":1,"6":-1}}]}"#
        );
        assert_eq!(f.render(Format::Latex), r"-\frac{1}{6} \frac{P_{2} P_{3}}{P_{6}}");
        assert_eq!(PLaurent::zero().render(Format::Text), "0");
        assert_eq!(PLaurent::zero().render(Format::Json), r#"{"terms":[]}"#);
        let g = mono(&[(2, -1), (6, -2)], q(1, 1)).add(&PLaurent::one().scale(&q(-3, 1)));
        assert_eq!(g.to_string(), "1/(P2*P6^2) - 3");
    }

    #[test]
    fn json_exps_sorted_numerically() {
        let f = mono(&[(2, 1), (5, 1), (10, -1)], q(2, 5));
        assert_eq!(
            f.render(Format::Json),
            r#"{"terms":[{"coeff":"2/5","exps":{"2":1,"5":1,"10":-1}}]}"#
        );
        assert_eq!(PLaurent::from_json(&f.render(Format::Json)).unwrap(), f);
    }

    #[test]
    fn json_parse_errors() {
        assert!(PLaurent::from_json("{}").is_err());
        assert!(PLaurent::from_json(r#"{"terms":[{"coeff":"1/0","exps":{}}]}"#).is_err());
        assert!(PLaurent::from_json(r#"{"terms":[{"coeff":"x","exps":{}}]}"#).is_err());
        assert!(PLaurent::from_json(r#"{"terms":[{"coeff":"1","exps":{"0":1}}]}"#).is_err());
        assert_eq!(
            PLaurent::from_json(r#"{"terms":[{"coeff":"2/4","exps":{"3":1}}]}"#).unwrap(),
            PLaurent::var(3).scale(&q(1, 2))
        );
    }
}
