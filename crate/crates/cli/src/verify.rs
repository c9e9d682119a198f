//! The `verify` suite: every structural identity checked over a conductor
//! range, plus the fixed power-substitution and quadratic instances.

use std::fmt::{self, Write};

use rayon::prelude::*;
use specdist::embedding::{
    cyclotomic_vandermonde, gram_oracle, gram_oracle_cyclotomic, polynomial_root_set, vandermonde,
};
use specdist::gramform::{
    gram_cyclotomic, gram_entry_table, gram_power_substitution, quadratic_eigenvalues,
    quadratic_eigenvalues_alt_radicand, quadratic_gram, sign_flip, toeplitz_generator,
};
use specdist::linalg::{jacobi_eigenvalues, IntSymMatrix, Spectrum};
use specdist::numtheory::{abs_disc_cyclotomic, factorize, IntPolynomial};
use specdist::spectral::{
    hong_pan_ln_sigma_min_bound, hong_pan_sd_bound, sd_cyclotomic, sd_cyclotomic_via_radical,
    sd_power_substitution, sd_prime_closed, yu_gu_ln_sigma_min_bound, yu_gu_sd_bound, SdReport,
};

use crate::range::{ConductorRange, MAX_VERIFY_CONDUCTOR};
use crate::render::fixed;
use crate::CliError;

/// Slack allowed when an SD value meets one of its upper bounds.
pub const BOUND_RATIO_SLACK: f64 = 1e-12;
/// Slack allowed when a σ_min lower bound meets the true σ_min.
pub const SIGMA_BOUND_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Closed-form Gram against the embedding oracle, and spectra.
    pub gram: f64,
    /// Relative agreement between SD values.
    pub sd: f64,
    /// Relative agreement of the eigenvalue product with `|Disc|`.
    pub disc: f64,
    /// Power-substitution closed form against the root-finder oracle.
    pub power: f64,
    /// Quadratic eigenvalue formula against Jacobi.
    pub quadratic: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            gram: 1e-9,
            sd: 1e-9,
            disc: 1e-6,
            power: 1e-8,
            quadratic: 1e-10,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Less,
    AtMost,
    AtLeast,
}

impl Relation {
    fn holds(self, value: f64, limit: f64) -> bool {
        match self {
            Relation::Less => value < limit,
            Relation::AtMost => value <= limit,
            Relation::AtLeast => value >= limit,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Relation::Less => "<",
            Relation::AtMost => "<=",
            Relation::AtLeast => ">=",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    Measured {
        stat: &'static str,
        value: f64,
        relation: Relation,
        limit: f64,
    },
    Skipped(&'static str),
    Errored(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub name: &'static str,
    pub scope: String,
    pub outcome: Outcome,
}

impl CheckResult {
    fn measured(
        name: &'static str,
        scope: String,
        stat: &'static str,
        value: f64,
        relation: Relation,
        limit: f64,
    ) -> Self {
        Self {
            name,
            scope,
            outcome: Outcome::Measured {
                stat,
                value,
                relation,
                limit,
            },
        }
    }

    fn skipped(name: &'static str, scope: String) -> Self {
        Self {
            name,
            scope,
            outcome: Outcome::Skipped("no applicable conductors"),
        }
    }

    pub fn passed(&self) -> bool {
        match &self.outcome {
            Outcome::Measured {
                value,
                relation,
                limit,
                ..
            } => relation.holds(*value, *limit),
            Outcome::Skipped(_) => true,
            Outcome::Errored(_) => false,
        }
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.outcome {
            Outcome::Measured {
                stat,
                value,
                relation,
                limit,
            } => {
                let verdict = if self.passed() { "PASS" } else { "FAIL" };
                let (value, limit) = if *stat == "mismatches" {
                    (format!("{value}"), format!("{limit}"))
                } else {
                    (format!("{value:.3e}"), format!("{limit:e}"))
                };
                write!(
                    f,
                    "{verdict} {} {} {stat}={value} {} {limit}",
                    self.name,
                    self.scope,
                    relation.symbol()
                )
            }
            Outcome::Skipped(why) => write!(f, "SKIP {} {} ({why})", self.name, self.scope),
            Outcome::Errored(e) => write!(f, "FAIL {} {} error: {e}", self.name, self.scope),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed()).count()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        let total = self.checks.len();
        write!(f, "{} of {total} checks passed", total - self.failures())
    }
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

fn mismatches(a: &IntSymMatrix, b: &IntSymMatrix) -> usize {
    if a.dim() != b.dim() {
        return usize::MAX;
    }
    let n = a.dim();
    (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| a.get(i, j) != b.get(i, j))
        .count()
}

fn spectrum_of(m: &IntSymMatrix) -> specdist::Result<Spectrum> {
    jacobi_eigenvalues(&m.to_real())
}

fn ln_biguint(x: &num_bigint::BigUint) -> f64 {
    let shift = x.bits().saturating_sub(60);
    let top = u64::try_from(x >> shift).expect("60-bit prefix fits");
    (top as f64).ln() + shift as f64 * std::f64::consts::LN_2
}

/// Worst ratio `sd / bound` over both bounds, and worst excess of a σ_min
/// lower bound over the true σ_min.
fn bound_stats(r: &SdReport, v: &specdist::linalg::ComplexMatrix) -> specdist::Result<(f64, f64)> {
    let ratio = (r.sd / r.hong_pan_bound).max(r.sd / r.yu_gu_bound);
    let mut excess = hong_pan_ln_sigma_min_bound(v, r.ln_abs_det)?.exp() - r.sigma_min;
    if r.degree > 1 {
        excess = excess.max(yu_gu_ln_sigma_min_bound(v, r.ln_abs_det)?.exp() - r.sigma_min);
    }
    Ok((ratio, excess))
}

/// Everything measured for one conductor. `None` marks a check that does
/// not apply to this `n`.
#[derive(Debug, Clone)]
struct ConductorFacts {
    oracle_err: f64,
    entry_mismatches: usize,
    toeplitz_mismatches: Option<usize>,
    kronecker_mismatches: Option<usize>,
    kronecker_spectrum_err: Option<f64>,
    prime_spectrum_err: Option<f64>,
    prime_sd_rel: Option<f64>,
    radical_rel: Option<f64>,
    flip_mismatches: Option<usize>,
    flip_sd_rel: Option<f64>,
    disc_rel: f64,
    bound_ratio: f64,
    sigma_excess: f64,
    sd: f64,
}

fn conductor_facts(n: u64) -> specdist::Result<ConductorFacts> {
    let fac = factorize(n)?;
    let rad = fac.radical();
    let g = gram_cyclotomic(n)?;
    let closed = &g.matrix;
    let report = sd_cyclotomic(n)?;

    let toeplitz_mismatches = match &g.generator {
        Some(generator) => {
            let expected = toeplitz_generator(n)?;
            let extra = usize::from(*generator != expected);
            Some(mismatches(closed, &IntSymMatrix::toeplitz(&expected)?) + extra)
        }
        None => None,
    };

    let (kronecker_mismatches, kronecker_spectrum_err) = if fac.is_squarefree() {
        (None, None)
    } else {
        let m = n / rad;
        let base = gram_cyclotomic(rad)?.matrix;
        let want = base
            .scale(m as i64)?
            .kron(&IntSymMatrix::identity(m as usize))?;
        let scaled = spectrum_of(&base)?.scaled_repeated(m as f64, m as usize);
        (
            Some(mismatches(closed, &want)),
            Some(report.eigenvalues.max_abs_diff(&scaled)),
        )
    };

    let (prime_spectrum_err, prime_sd_rel) = if fac.is_prime() {
        let mut want = vec![n as f64; (n - 1) as usize];
        want[0] = 1.0;
        (
            Some(report.eigenvalues.max_abs_diff(&Spectrum::new(want))),
            Some(rel(report.sd, sd_prime_closed(n)?)),
        )
    } else {
        (None, None)
    };

    // for squarefree n the comparison would repeat the same computation
    let radical_rel = if n >= 3 && rad != n {
        let direct = rel(report.sd, sd_cyclotomic(rad)?.sd);
        Some(direct.max(rel(report.sd, sd_cyclotomic_via_radical(n)?.sd)))
    } else {
        None
    };

    let (flip_mismatches, flip_sd_rel) = if n >= 3 && n % 2 == 1 {
        let doubled = gram_cyclotomic(2 * n)?.matrix;
        (
            Some(mismatches(&doubled, &sign_flip(closed))),
            Some(rel(sd_cyclotomic(2 * n)?.sd, report.sd)),
        )
    } else {
        (None, None)
    };

    let ln_disc = ln_biguint(&abs_disc_cyclotomic(n)?);
    let disc_rel = (report.eigenvalues.ln_abs_product() - ln_disc)
        .exp_m1()
        .abs();
    let (bound_ratio, sigma_excess) = bound_stats(&report, &cyclotomic_vandermonde(n)?)?;

    Ok(ConductorFacts {
        oracle_err: closed.to_real().max_abs_diff(&gram_oracle_cyclotomic(n)?),
        entry_mismatches: mismatches(closed, &gram_entry_table(n)?),
        toeplitz_mismatches,
        kronecker_mismatches,
        kronecker_spectrum_err,
        prime_spectrum_err,
        prime_sd_rel,
        radical_rel,
        flip_mismatches,
        flip_sd_rel,
        disc_rel,
        bound_ratio,
        sigma_excess,
        sd: report.sd,
    })
}

/// One line per check; `pick` extracts the per-conductor statistic.
struct Aggregator<'a> {
    facts: &'a [ConductorFacts],
    scope: String,
}

impl Aggregator<'_> {
    fn max(&self, pick: impl Fn(&ConductorFacts) -> Option<f64>) -> Option<f64> {
        self.facts
            .iter()
            .filter_map(pick)
            .fold(None, |acc: Option<f64>, v| {
                // a NaN anywhere must survive the fold and fail the check
                Some(acc.map_or(v, |a| {
                    if a.is_nan() || v.is_nan() {
                        f64::NAN
                    } else {
                        a.max(v)
                    }
                }))
            })
    }

    fn check(
        &self,
        name: &'static str,
        stat: &'static str,
        relation: Relation,
        limit: f64,
        pick: impl Fn(&ConductorFacts) -> Option<f64>,
    ) -> CheckResult {
        match self.max(pick) {
            Some(value) => {
                CheckResult::measured(name, self.scope.clone(), stat, value, relation, limit)
            }
            None => CheckResult::skipped(name, self.scope.clone()),
        }
    }

    /// Total count of mismatching entries; passes only at zero.
    fn exact(
        &self,
        name: &'static str,
        pick: impl Fn(&ConductorFacts) -> Option<usize>,
    ) -> CheckResult {
        let mut total: Option<usize> = None;
        for v in self.facts.iter().filter_map(pick) {
            total = Some(total.unwrap_or(0).saturating_add(v));
        }
        match total {
            Some(t) => CheckResult::measured(
                name,
                self.scope.clone(),
                "mismatches",
                t as f64,
                Relation::AtMost,
                0.0,
            ),
            None => CheckResult::skipped(name, self.scope.clone()),
        }
    }
}

fn conductor_checks(range: ConductorRange, tol: &Tolerances) -> Vec<CheckResult> {
    let scope = range.to_string();
    let conductors: Vec<u64> = range.iter().collect();
    let evaluated: Vec<(u64, specdist::Result<ConductorFacts>)> = conductors
        .par_iter()
        .map(|&n| (n, conductor_facts(n)))
        .collect();

    let mut out = Vec::new();
    let mut facts = Vec::with_capacity(evaluated.len());
    for (n, r) in evaluated {
        match r {
            Ok(f) => facts.push(f),
            Err(e) => out.push(CheckResult {
                name: "evaluation",
                scope: format!("n={n}"),
                outcome: Outcome::Errored(e.to_string()),
            }),
        }
    }

    let agg = Aggregator {
        facts: &facts,
        scope,
    };
    let some = |v: f64| Some(v);
    out.extend([
        agg.check(
            "theorem1-vs-oracle",
            "max_err",
            Relation::Less,
            tol.gram,
            |f| some(f.oracle_err),
        ),
        agg.exact("entry-formula-vs-kronecker", |f| Some(f.entry_mismatches)),
        agg.exact("toeplitz-generator", |f| f.toeplitz_mismatches),
        agg.exact("kronecker-structure", |f| f.kronecker_mismatches),
        agg.check(
            "kronecker-spectrum",
            "max_err",
            Relation::Less,
            tol.gram,
            |f| f.kronecker_spectrum_err,
        ),
        agg.check("prime-spectrum", "max_err", Relation::Less, tol.gram, |f| {
            f.prime_spectrum_err
        }),
        agg.check(
            "sd-prime-closed-form",
            "max_rel_err",
            Relation::Less,
            tol.sd,
            |f| f.prime_sd_rel,
        ),
        agg.check(
            "sd-radical-invariance",
            "max_rel_err",
            Relation::Less,
            tol.sd,
            |f| f.radical_rel,
        ),
        agg.exact("sign-flip-2n", |f| f.flip_mismatches),
        agg.check(
            "sd-2n-invariance",
            "max_rel_err",
            Relation::Less,
            tol.sd,
            |f| f.flip_sd_rel,
        ),
        agg.check(
            "discriminant-identity",
            "max_rel_err",
            Relation::Less,
            tol.disc,
            |f| some(f.disc_rel),
        ),
        agg.check(
            "sd-bound-soundness",
            "max_sd_over_bound",
            Relation::AtMost,
            1.0 + BOUND_RATIO_SLACK,
            |f| some(f.bound_ratio),
        ),
        agg.check(
            "sigma-min-bound-soundness",
            "max_excess",
            Relation::AtMost,
            SIGMA_BOUND_SLACK,
            |f| some(f.sigma_excess),
        ),
    ]);
    // smallest SD, so negate through the max fold
    let min_sd = agg.max(|f| some(-f.sd)).map(|v| -v);
    out.push(match min_sd {
        Some(v) => CheckResult::measured(
            "sd-at-least-one",
            agg.scope.clone(),
            "min_sd",
            v,
            Relation::AtLeast,
            1.0 - BOUND_RATIO_SLACK,
        ),
        None => CheckResult::skipped("sd-at-least-one", agg.scope.clone()),
    });
    out
}

/// `(h, k)` pairs with a closed-form power-substitution Gram matrix under test.
pub fn power_substitution_instances() -> Vec<(IntPolynomial, usize)> {
    let mut out: Vec<_> = (1..=4)
        .map(|k| (IntPolynomial::quadratic(0, 1), k))
        .collect();
    out.extend((1..=3).map(|k| (IntPolynomial::quadratic(-1, 1), k)));
    out
}

fn power_substitution_checks(tol: &Tolerances) -> Vec<CheckResult> {
    let scope = "instances=7".to_string();
    let run = || -> specdist::Result<(f64, usize, f64, f64)> {
        let (mut err, mut nonzero, mut ratio, mut excess) = (0f64, 0usize, 0f64, f64::NEG_INFINITY);
        for (h, k) in power_substitution_instances() {
            let f = h.substitute_power(k);
            let closed = gram_power_substitution(&h, k)?.matrix;
            let oracle = gram_oracle(&f)?;
            err = err.max(closed.max_abs_diff(&oracle));
            let dim = closed.dim();
            for i in 0..dim {
                for j in 0..dim {
                    if i.abs_diff(j) % k != 0
                        && (closed.get(i, j) != 0.0 || oracle.get(i, j).abs() > tol.power)
                    {
                        nonzero += 1;
                    }
                }
            }
            let r = sd_power_substitution(&h, k)?;
            let (rt, ex) = bound_stats(&r, &vandermonde(&polynomial_root_set(&f)?))?;
            ratio = ratio.max(rt);
            excess = excess.max(ex);
        }
        Ok((err, nonzero, ratio, excess))
    };
    let mut out = match run() {
        Ok((err, nonzero, ratio, excess)) => vec![
            CheckResult::measured(
                "power-substitution-vs-oracle",
                scope.clone(),
                "max_err",
                err,
                Relation::Less,
                tol.power,
            ),
            CheckResult::measured(
                "power-substitution-sparsity",
                scope.clone(),
                "mismatches",
                nonzero as f64,
                Relation::AtMost,
                0.0,
            ),
            CheckResult::measured(
                "power-substitution-sd-bounds",
                scope.clone(),
                "max_sd_over_bound",
                ratio,
                Relation::AtMost,
                1.0 + BOUND_RATIO_SLACK,
            ),
            CheckResult::measured(
                "power-substitution-sigma-bounds",
                scope.clone(),
                "max_excess",
                excess,
                Relation::AtMost,
                SIGMA_BOUND_SLACK,
            ),
        ],
        Err(e) => vec![CheckResult {
            name: "power-substitution",
            scope: scope.clone(),
            outcome: Outcome::Errored(e.to_string()),
        }],
    };

    // x^2 + 1 at x^2 is x^4 + 1 = Φ_8, whose Gram matrix is 4·I_4.
    let phi8 = gram_power_substitution(&IntPolynomial::quadratic(0, 1), 2).map(|g| {
        g.matrix
            .max_abs_diff(&specdist::linalg::SymMatrix::identity(4).scale(4.0))
    });
    out.push(match phi8 {
        Ok(err) => CheckResult::measured(
            "power-substitution-phi8",
            "h=x^2+1 k=2".into(),
            "max_err",
            err,
            Relation::Less,
            tol.power,
        ),
        Err(e) => CheckResult {
            name: "power-substitution-phi8",
            scope: "h=x^2+1 k=2".into(),
            outcome: Outcome::Errored(e.to_string()),
        },
    });
    out
}

/// The 21×21 admissible grid: `b ∈ [−3, 3]` in steps of 0.3 and
/// `c ∈ (b²/4, 5]` in 21 equal steps above the lower end.
pub fn quadratic_grid() -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(441);
    for bi in 0..21 {
        let b = -3.0 + 0.3 * bi as f64;
        let lo = b * b / 4.0;
        for ci in 1..=21 {
            out.push((b, lo + (5.0 - lo) * ci as f64 / 21.0));
        }
    }
    out
}

struct QuadraticPoint {
    b: f64,
    c: f64,
    jacobi: (f64, f64),
    corrected: (f64, f64),
    alt: (f64, f64),
}

impl QuadraticPoint {
    fn corrected_err(&self) -> f64 {
        (self.corrected.0 - self.jacobi.0)
            .abs()
            .max((self.corrected.1 - self.jacobi.1).abs())
    }

    fn alt_err(&self) -> f64 {
        (self.alt.0 - self.jacobi.0)
            .abs()
            .max((self.alt.1 - self.jacobi.1).abs())
    }
}

fn quadratic_point(b: f64, c: f64) -> specdist::Result<QuadraticPoint> {
    let s = jacobi_eigenvalues(&quadratic_gram(b, c)?)?;
    Ok(QuadraticPoint {
        b,
        c,
        jacobi: (s.min(), s.max()),
        corrected: quadratic_eigenvalues(b, c)?,
        alt: quadratic_eigenvalues_alt_radicand(b, c)?,
    })
}

fn quadratic_checks(tol: &Tolerances) -> Vec<CheckResult> {
    let scope = "grid=21x21".to_string();
    let points: specdist::Result<Vec<QuadraticPoint>> = quadratic_grid()
        .into_iter()
        .map(|(b, c)| quadratic_point(b, c))
        .collect();
    match points {
        Ok(points) => {
            let err = points
                .iter()
                .map(QuadraticPoint::corrected_err)
                .fold(0.0, f64::max);
            let alt_min = points
                .iter()
                .map(QuadraticPoint::alt_err)
                .fold(f64::INFINITY, f64::min);
            vec![
                CheckResult::measured(
                    "quadratic-eigenvalues",
                    scope.clone(),
                    "max_err",
                    err,
                    Relation::Less,
                    tol.quadratic,
                ),
                // the radicand b^2 + (c + 1)^2 must disagree with Jacobi everywhere on the grid
                CheckResult::measured(
                    "quadratic-alt-radicand-discrepancy",
                    scope,
                    "min_err",
                    alt_min,
                    Relation::AtLeast,
                    tol.quadratic,
                ),
            ]
        }
        Err(e) => vec![CheckResult {
            name: "quadratic-eigenvalues",
            scope,
            outcome: Outcome::Errored(e.to_string()),
        }],
    }
}

/// Both SD upper bounds at `Φ_3` equal `2·3^{−1/4}`.
fn phi3_bound_check() -> CheckResult {
    let want = 2.0 * 3f64.powf(-0.25);
    let scope = "n=3".to_string();
    let got =
        cyclotomic_vandermonde(3).and_then(|v| Ok((hong_pan_sd_bound(&v)?, yu_gu_sd_bound(&v)?)));
    match got {
        Ok((hp, yg)) => {
            let err = (hp - want).abs().max((yg - want).abs());
            CheckResult::measured(
                "bound-values-phi3",
                scope,
                "max_err",
                err,
                Relation::Less,
                1e-9,
            )
        }
        Err(e) => CheckResult {
            name: "bound-values-phi3",
            scope,
            outcome: Outcome::Errored(e.to_string()),
        },
    }
}

pub fn check_range(range: ConductorRange) -> Result<(), CliError> {
    if !range.is_empty() && range.end > MAX_VERIFY_CONDUCTOR {
        return Err(CliError::Usage(format!(
            "verify range must lie within [1, {MAX_VERIFY_CONDUCTOR}]"
        )));
    }
    Ok(())
}

pub fn run_verify(range: ConductorRange, tol: &Tolerances) -> Result<VerifyReport, CliError> {
    check_range(range)?;
    let mut checks = conductor_checks(range, tol);
    checks.extend(power_substitution_checks(tol));
    checks.extend(quadratic_checks(tol));
    checks.push(phi3_bound_check());
    Ok(VerifyReport { checks })
}

/// Side-by-side comparison of the two radicands against Jacobi on a sample
/// of the grid, followed by a summary over the whole grid.
pub fn quadratic_typo_report() -> Result<String, CliError> {
    let mut out = String::new();
    writeln!(out, "quadratic eigenvalues of [[2, -b], [-b, 2c]]").unwrap();
    writeln!(out, "corrected: 1 + c -/+ sqrt(b^2 + (c - 1)^2)").unwrap();
    writeln!(out, "alt:       1 + c -/+ sqrt(b^2 + c^2 + 2c + 1)").unwrap();
    writeln!(
        out,
        "{:>9} {:>9} {:>10} {:>10} {:>10} {:>10} {:>10} {:>10}",
        "b", "c", "jacobi-", "jacobi+", "corr-", "corr+", "alt-", "alt+"
    )
    .unwrap();
    for b in [-2.0, -1.0, 0.0, 1.0, 2.0] {
        for c in [1.5, 2.0, 3.0, 5.0] {
            let p = quadratic_point(b, c)?;
            writeln!(
                out,
                "{:>9} {:>9} {:>10} {:>10} {:>10} {:>10} {:>10} {:>10}",
                fixed(p.b),
                fixed(p.c),
                fixed(p.jacobi.0),
                fixed(p.jacobi.1),
                fixed(p.corrected.0),
                fixed(p.corrected.1),
                fixed(p.alt.0),
                fixed(p.alt.1)
            )
            .unwrap();
        }
    }
    let points = quadratic_grid()
        .into_iter()
        .map(|(b, c)| quadratic_point(b, c))
        .collect::<specdist::Result<Vec<_>>>()?;
    let total = points.len();
    let corrected_max = points
        .iter()
        .map(QuadraticPoint::corrected_err)
        .fold(0.0, f64::max);
    let alt_bad = points.iter().filter(|p| p.alt_err() > 1e-10).count();
    let alt_min = points
        .iter()
        .map(QuadraticPoint::alt_err)
        .fold(f64::INFINITY, f64::min);
    writeln!(
        out,
        "corrected radicand: max_err={corrected_max:.3e} over {total} grid points"
    )
    .unwrap();
    writeln!(
        out,
        "alternative radicand: {alt_bad}/{total} grid points off by more than 1e-10 (min_err={alt_min:.3e})"
    )
    .unwrap();
    Ok(out)
}
