//! Named verification suites.
//!
//! Each suite returns a [`VerificationReport`]; a failing computation is
//! recorded as a failed check rather than propagated as an error.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::formulas::{
    cycle_count_vectors, n_count_closed, n_count_oracle, topological_terms, weight_zero_jacobian,
    weight_zero_jacobian_with_bounds, wz_enumeration_bounds, Kind,
};
use crate::golden;
use crate::plaurent::{Format, PLaurent};
use crate::random::{random_plaurent, random_symfunc, rng_from_seed};
use crate::symfunc::{complete_homogeneous, transform_via_plethysm, TruncatedSymFunc};
use crate::Rational;

/// Random instances per property check.
pub const PROPERTY_INSTANCES: usize = 50;

/// Largest total size `Σ k_i` covered by the `ncount` sweep.
pub const NCOUNT_MAX_SIZE: u64 = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub id: String,
    /// What the check is tied to (a table row, an identity, an invariant).
    pub anchor: String,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records a check.
    ///
    /// # Panics
    ///
    /// Panics if `id` was already recorded.
    pub fn record(&mut self, id: impl Into<String>, anchor: impl Into<String>, outcome: Result<String>) {
        let id = id.into();
        assert!(
            self.checks.iter().all(|c| c.id != id),
            "duplicate check id `{id}`"
        );
        let (status, detail) = match outcome {
            Ok(detail) => (CheckStatus::Pass, detail),
            Err(e) => (CheckStatus::Fail, e.to_string()),
        };
        self.checks.push(Check {
            id,
            anchor: anchor.into(),
            status,
            detail,
        });
    }

    pub fn extend(&mut self, other: VerificationReport) {
        for c in other.checks {
            let outcome = match c.status {
                CheckStatus::Pass => Ok(c.detail),
                CheckStatus::Fail => Err(Error::Internal(c.detail)),
            };
            self.record(c.id, c.anchor, outcome);
        }
    }

    pub fn checks(&self) -> &[Check] {
        &self.checks
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == CheckStatus::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = match c.status {
                CheckStatus::Pass => "PASS",
                CheckStatus::Fail => "FAIL",
            };
            writeln!(f, "{status} {} [{}] {}", c.id, c.anchor, c.detail)?;
        }
        let failed = self.failures().count();
        write!(
            f,
            "{} checks, {} passed, {} failed",
            self.checks.len(),
            self.checks.len() - failed,
            failed
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Tables,
    Properties,
    Ncount,
    Bounds,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tables" => Ok(Self::Tables),
            "properties" => Ok(Self::Properties),
            "ncount" => Ok(Self::Ncount),
            "bounds" => Ok(Self::Bounds),
            _ => Err(Error::Usage(format!(
                "unknown suite `{s}` (expected tables, properties, ncount or bounds)"
            ))),
        }
    }
}

pub fn run_suite(suite: Suite, seed: u64, depth: u32) -> VerificationReport {
    match suite {
        Suite::Tables => verify_tables(),
        Suite::Properties => verify_properties(seed, depth),
        Suite::Ncount => verify_ncount(u64::from(depth)),
        Suite::Bounds => verify_bounds(2..=12),
    }
}

fn compare(computed: &PLaurent, expected: &PLaurent) -> Result<String> {
    if computed == expected {
        return Ok(format!("{} terms match", expected.len()));
    }
    let diff = computed.sub(expected);
    Err(Error::Internal(format!(
        "computed minus reference = {}",
        diff.render(Format::Text)
    )))
}

/// Computed generating functions against the transcribed reference rows.
pub fn verify_tables() -> VerificationReport {
    let mut report = VerificationReport::new();
    for kind in [Kind::WeightZero, Kind::Topological] {
        let label = match kind {
            Kind::WeightZero => "weight-zero table",
            Kind::Topological => "topological table",
        };
        for g in golden::genera(kind) {
            let outcome = (|| {
                let expected = golden::golden(kind, g).expect("listed genus")?;
                let computed = match kind {
                    Kind::WeightZero => weight_zero_jacobian(g)?,
                    Kind::Topological => crate::formulas::topological_jacobian_verified(g)?,
                };
                compare(&computed, &expected)
            })();
            report.record(format!("tables/{kind}/g={g}"), format!("{label}, g = {g}"), outcome);
        }
    }
    report
}

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Internal(what()))
    }
}

fn instances(n: usize, mut check: impl FnMut(usize) -> Result<()>) -> Result<String> {
    for i in 0..n {
        check(i).map_err(|e| Error::Internal(format!("instance {i}: {e}")))?;
    }
    Ok(format!("{n} instances"))
}

/// Randomized algebraic identities of the symmetric-function and Laurent
/// polynomial layers, at truncation degree `depth`.
pub fn verify_properties(seed: u64, depth: u32) -> VerificationReport {
    let d = depth.max(1);
    let mut report = VerificationReport::new();
    let mut rng = rng_from_seed(seed);
    let n = PROPERTY_INSTANCES;

    report.record(
        "properties/plethysm-associativity",
        "(f ∘ g) ∘ h = f ∘ (g ∘ h)",
        instances(n, |_| {
            let f = random_symfunc(&mut rng, d, 3);
            let g = random_symfunc(&mut rng, d, 3);
            let h = random_symfunc(&mut rng, d, 3);
            let lhs = f.plethysm(&g)?.plethysm(&h)?;
            let rhs = f.plethysm(&g.plethysm(&h)?)?;
            ensure(lhs == rhs, || format!("f = {f}, g = {g}, h = {h}"))
        }),
    );

    report.record(
        "properties/plethysm-unit",
        "f ∘ p1 = p1 ∘ f = f",
        instances(n, |_| {
            let f = random_symfunc(&mut rng, d, 4);
            let p1 = TruncatedSymFunc::power_sum(d, 1);
            ensure(
                f.plethysm(&p1)? == f && p1.plethysm(&f)? == f,
                || format!("f = {f}"),
            )
        }),
    );

    report.record(
        "properties/exp-log-inversion",
        "Exp(Log(1 + f)) = Log(1 + Exp(f)) = f",
        instances(n, |_| {
            let f = random_symfunc(&mut rng, d, 4);
            let a = f.log_plethystic()?.exp_plethystic()?;
            let b = f.exp_plethystic()?.log_plethystic()?;
            ensure(a == f && b == f, || format!("f = {f}"))
        }),
    );

    report.record(
        "properties/exp-additivity",
        "1 + Exp(f + g) = (1 + Exp f)(1 + Exp g)",
        instances(n, |_| {
            let f = random_symfunc(&mut rng, d, 3);
            let g = random_symfunc(&mut rng, d, 3);
            let one = TruncatedSymFunc::one(d);
            let lhs = one.add(&f.add(&g)?.exp_plethystic()?)?;
            let rhs = one
                .add(&f.exp_plethystic()?)?
                .mul(&one.add(&g.exp_plethystic()?)?)?;
            ensure(lhs == rhs, || format!("f = {f}, g = {g}"))
        }),
    );

    report.record(
        "properties/exp-p1-frobenius",
        "Exp(p1) = Σ_{n>0} h_n with h_n = Σ p_λ / z_λ",
        (|| {
            let e = TruncatedSymFunc::power_sum(d, 1).exp_plethystic()?;
            for k in 0..=d {
                let expected = if k == 0 {
                    TruncatedSymFunc::zero(d)
                } else {
                    complete_homogeneous(d, k)
                };
                ensure(e.homogeneous_part(k) == expected, || format!("degree {k}"))?;
            }
            let inv = e.specialize_inv();
            ensure(
                inv[0].is_zero() && inv[1..].iter().all(One::is_one),
                || "inv(Exp(p1)) is not Σ xⁿ".into(),
            )?;
            Ok(format!("degrees 0..={d}"))
        })(),
    );

    report.record(
        "properties/transform-identity",
        "𝒯(f) = inv∆(f ∘ Exp(p1)) ∘ Log(1 + p1)",
        instances(n, |_| {
            let f = random_symfunc(&mut rng, d, 3);
            ensure(
                transform_via_plethysm(&f, d)? == f.transform_t(d),
                || format!("f = {f}"),
            )
        }),
    );

    report.record(
        "properties/limit-linearity",
        "L(aF + bG) = aL(F) + bL(G)",
        instances(n, |_| {
            let order = 1 + i64::from(rng_bit(&mut rng));
            let cap = |f: PLaurent| {
                PLaurent::from_terms(
                    f.terms()
                        .filter(|(k, _)| k.exponent_sum() <= order)
                        .map(|(k, c)| (k.clone(), c.clone())),
                )
            };
            let f = cap(random_plaurent(&mut rng, 6, 3, 5));
            let g = cap(random_plaurent(&mut rng, 6, 3, 5));
            let (a, b) = (Rational::new(3.into(), 2.into()), Rational::new((-2).into(), 5.into()));
            let lhs = f.scale(&a).add(&g.scale(&b)).limit_transform(order)?;
            let rhs = f
                .limit_transform(order)?
                .scale(&a)
                .add(&g.limit_transform(order)?.scale(&b));
            ensure(lhs == rhs, || format!("F = {f}, G = {g}"))
        }),
    );

    report.record(
        "properties/expand-homomorphism",
        "expand(FG) = expand(F) expand(G)",
        instances(n, |_| {
            let f = random_plaurent(&mut rng, 4, 2, 3);
            let g = random_plaurent(&mut rng, 4, 2, 3);
            let lhs = f.mul(&g).expand_to_symfunc(d);
            let rhs = f.expand_to_symfunc(d).mul(&g.expand_to_symfunc(d))?;
            ensure(lhs == rhs, || format!("F = {f}, G = {g}"))
        }),
    );

    report.record(
        "properties/scalar-sum",
        "F(1, 1, …) = sum of coefficients",
        instances(n, |_| {
            let f = random_plaurent(&mut rng, 8, 4, 6);
            let sum: Rational = f.terms().map(|(_, c)| c.clone()).sum();
            ensure(
                f.substitute_scalar(&BTreeMap::new(), &Rational::one())? == sum,
                || format!("F = {f}"),
            )
        }),
    );

    report.record(
        "properties/json-roundtrip",
        "parse(render(F, json)) = F",
        instances(n, |_| {
            let f = random_plaurent(&mut rng, 20, 5, 8);
            ensure(
                PLaurent::from_json(&f.render(Format::Json))? == f,
                || format!("F = {f}"),
            )
        }),
    );

    report
}

fn rng_bit(rng: &mut impl rand::Rng) -> u8 {
    rng.gen_range(0..=1)
}

/// Closed-form `N(r; k)` against the direct count, for every `r ≤ max_r`
/// and `Σ k_i ≤ 6`, and for every cell of the topological sum in genus 2–6.
pub fn verify_ncount(max_r: u64) -> VerificationReport {
    let mut report = VerificationReport::new();
    for r in 2..=max_r {
        let outcome = (|| {
            let mut count = 0;
            for s in 0..=NCOUNT_MAX_SIZE {
                for k in cycle_count_vectors(r, s) {
                    let (closed, oracle) = (n_count_closed(r, &k)?, n_count_oracle(r, &k)?);
                    ensure(closed == oracle, || {
                        format!("N({r}; {k:?}): closed {closed} != direct {oracle}")
                    })?;
                    count += 1;
                }
            }
            Ok(format!("{count} argument vectors agree"))
        })();
        report.record(
            format!("ncount/r={r}"),
            format!("N(r; k) closed form vs direct count, r = {r}"),
            outcome,
        );
    }
    report.extend(verify_topological_cells(2..=6));
    report
}

/// `N(r; k)` agreement on every cell visited by the topological enumerator.
pub fn verify_topological_cells(genera: impl IntoIterator<Item = u32>) -> VerificationReport {
    let mut report = VerificationReport::new();
    for g in genera {
        let outcome = (|| {
            let mut seen = HashSet::new();
            for t in topological_terms(g)? {
                let (closed, oracle) = (n_count_closed(t.r, &t.k)?, n_count_oracle(t.r, &t.k)?);
                ensure(closed == oracle, || {
                    format!("N({}; {:?}): closed {closed} != direct {oracle}", t.r, t.k)
                })?;
                seen.insert((t.r, t.k));
            }
            Ok(format!("{} cells agree", seen.len()))
        })();
        report.record(
            format!("ncount/top-cells/g={g}"),
            format!("N(r; k) on topological cells, g = {g}"),
            outcome,
        );
    }
    report
}

/// Doubling the weight-zero enumeration bounds leaves the result unchanged.
pub fn verify_bounds(genera: impl IntoIterator<Item = u32>) -> VerificationReport {
    let mut report = VerificationReport::new();
    for g in genera {
        let outcome = (|| {
            let (m_max, k_max) = wz_enumeration_bounds(g)?;
            let base = weight_zero_jacobian_with_bounds(g, m_max, k_max)?;
            let doubled = weight_zero_jacobian_with_bounds(g, 2 * m_max, 2 * k_max)?;
            compare(&doubled, &base).map(|_| {
                format!("m <= {m_max}, k <= {k_max}: {} terms, unchanged when doubled", base.len())
            })
        })();
        report.record(
            format!("bounds/g={g}"),
            format!("weight-zero enumeration bounds, g = {g}"),
            outcome,
        );
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_bookkeeping() {
        let mut r = VerificationReport::new();
        r.record("a", "x", Ok("fine".into()));
        assert!(r.all_passed());
        r.record("b", "y", Err(Error::Internal("broken".into())));
        assert!(!r.all_passed());
        assert_eq!(r.failures().count(), 1);
        let text = r.to_string();
        assert!(text.contains("PASS a [x] fine"));
        assert!(text.contains("FAIL b [y]"));
        assert!(text.ends_with("2 checks, 1 passed, 1 failed"));
    }

    #[test]
    #[should_panic(expected = "duplicate check id")]
    fn duplicate_ids_rejected() {
        let mut r = VerificationReport::new();
        r.record("a", "x", Ok(String::new()));
        r.record("a", "x", Ok(String::new()));
    }

    #[test]
    fn suite_names() {
        assert_eq!("tables".parse::<Suite>(), Ok(Suite::Tables));
        assert_eq!("ncount".parse::<Suite>(), Ok(Suite::Ncount));
        assert!("everything".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        assert!(verify_tables().all_passed());
        assert!(verify_bounds(2..=4).all_passed());
        let r = verify_properties(7, 4);
        assert!(r.all_passed(), "{r}");
    }
}
