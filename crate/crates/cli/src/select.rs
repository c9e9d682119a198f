//! The `gram` and `sd` commands: choose a polynomial, compute, render.

use std::fmt::Write;

use specdist::embedding::{
    gram_oracle, gram_oracle_cyclotomic, polynomial_root_set, EmbeddingMatrix,
};
use specdist::gramform::{gram_cyclotomic, gram_power_substitution};
use specdist::linalg::SymMatrix;
use specdist::numtheory::{cyclotomic_coeffs, factorize, IntPolynomial};
use specdist::spectral::{
    sd_cyclotomic, sd_cyclotomic_via_radical, sd_from_gram, sd_polynomial, sd_power_substitution,
    sd_prime_closed, SdReport,
};

use crate::render::{fixed, int_matrix, real_matrix};
use crate::CliError;

/// Tolerance for `--check` cross-validation.
pub const CHECK_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolySelector {
    /// `Φ_n`.
    Cyclotomic(u64),
    /// `h(x^k)` with `h = x² + bx + c`.
    Quadratic { b: i64, c: i64, k: usize },
    /// Monic integer polynomial, coefficients in ascending degree.
    Poly(Vec<i64>),
}

/// Rendered command output plus the outcome of `--check`, if requested.
#[derive(Debug, Clone)]
pub struct CommandOutput {
    pub text: String,
    pub check_failure: Option<String>,
}

impl CommandOutput {
    pub fn into_result(self) -> Result<String, (String, CliError)> {
        match self.check_failure {
            None => Ok(self.text),
            Some(msg) => Err((self.text, CliError::CheckFailed(msg))),
        }
    }
}

impl PolySelector {
    pub fn polynomial(&self) -> Result<IntPolynomial, CliError> {
        match self {
            PolySelector::Cyclotomic(n) => Ok(cyclotomic_coeffs(*n)?),
            PolySelector::Quadratic { b, c, k } => {
                check_k(*k)?;
                Ok(IntPolynomial::quadratic(*b, *c).substitute_power(*k))
            }
            PolySelector::Poly(coeffs) => Ok(IntPolynomial::monic_from_i64s(coeffs)?),
        }
    }

    fn header(&self, out: &mut String) -> Result<(), CliError> {
        let f = self.polynomial()?;
        match self {
            PolySelector::Cyclotomic(n) => {
                let fac = factorize(*n)?;
                writeln!(out, "polynomial: Phi_{n} = {f}").unwrap();
                writeln!(out, "n: {n}").unwrap();
                writeln!(out, "phi(n): {}", fac.phi()).unwrap();
                writeln!(out, "rad(n): {}", fac.radical()).unwrap();
            }
            PolySelector::Quadratic { b, c, k } => {
                let h = IntPolynomial::quadratic(*b, *c);
                writeln!(out, "polynomial: h(x^{k}) = {f}").unwrap();
                writeln!(out, "h: {h}").unwrap();
                writeln!(out, "k: {k}").unwrap();
            }
            PolySelector::Poly(_) => {
                writeln!(out, "polynomial: {f}").unwrap();
            }
        }
        writeln!(out, "degree: {}", f.degree()).unwrap();
        Ok(())
    }
}

fn check_k(k: usize) -> Result<(), CliError> {
    if k == 0 {
        Err(CliError::Usage("--k must be at least 1".into()))
    } else {
        Ok(())
    }
}

fn record_check(out: &mut String, what: &str, err: f64, tol: f64) -> Option<String> {
    let ok = err <= tol;
    let verdict = if ok { "PASS" } else { "FAIL" };
    writeln!(out, "check: {verdict} {what} max_err={err:.3e} tol={tol:e}").unwrap();
    (!ok).then(|| format!("{what}: max_err={err:.3e} exceeds {tol:e}"))
}

/// Gram of `f` through the realified embedding `B†M`, independent of the
/// complex Gram product used by the oracle.
fn realified_gram(f: &IntPolynomial) -> Result<SymMatrix, CliError> {
    let emb = EmbeddingMatrix::new(&polynomial_root_set(f)?)?;
    Ok(emb.real_form.gram())
}

pub fn gram_command(sel: &PolySelector, check: bool) -> Result<CommandOutput, CliError> {
    let mut out = String::new();
    sel.header(&mut out)?;
    let mut check_failure = None;
    match sel {
        PolySelector::Cyclotomic(n) => {
            let g = gram_cyclotomic(*n)?;
            if let Some(generator) = &g.generator {
                let parts: Vec<String> = generator.iter().map(i64::to_string).collect();
                writeln!(out, "toeplitz generator: [{}]", parts.join(", ")).unwrap();
            }
            writeln!(out, "gram ({0}x{0}):", g.matrix.dim()).unwrap();
            out.push_str(&int_matrix(&g.matrix));
            if check {
                let err = g
                    .matrix
                    .to_real()
                    .max_abs_diff(&gram_oracle_cyclotomic(*n)?);
                check_failure =
                    record_check(&mut out, "closed-form-vs-oracle", err, CHECK_TOLERANCE);
            }
        }
        PolySelector::Quadratic { b, c, k } => {
            check_k(*k)?;
            let h = IntPolynomial::quadratic(*b, *c);
            let g = gram_power_substitution(&h, *k)?.matrix;
            writeln!(out, "gram ({0}x{0}):", g.dim()).unwrap();
            out.push_str(&real_matrix(&g));
            if check {
                let err = g.max_abs_diff(&gram_oracle(&sel.polynomial()?)?);
                check_failure =
                    record_check(&mut out, "closed-form-vs-oracle", err, CHECK_TOLERANCE);
            }
        }
        PolySelector::Poly(_) => {
            let f = sel.polynomial()?;
            let g = gram_oracle(&f)?;
            writeln!(out, "gram ({0}x{0}):", g.dim()).unwrap();
            out.push_str(&real_matrix(&g));
            if check {
                let err = g.max_abs_diff(&realified_gram(&f)?);
                check_failure =
                    record_check(&mut out, "complex-vs-realified", err, CHECK_TOLERANCE);
            }
        }
    }
    Ok(CommandOutput {
        text: out,
        check_failure,
    })
}

fn rel_err(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

fn report_lines(out: &mut String, r: &SdReport) {
    writeln!(out, "|det M|: {}", fixed(r.abs_det())).unwrap();
    writeln!(out, "|det M|^(1/n): {}", fixed(r.det_root)).unwrap();
    if let Some(disc) = &r.abs_disc {
        writeln!(out, "|Disc|: {disc}").unwrap();
    }
    writeln!(out, "lambda_min: {}", fixed(r.eigenvalues.min())).unwrap();
    writeln!(out, "lambda_max: {}", fixed(r.eigenvalues.max())).unwrap();
    writeln!(out, "sigma_min: {}", fixed(r.sigma_min)).unwrap();
    writeln!(out, "sd: {}", fixed(r.sd)).unwrap();
    writeln!(out, "hong-pan bound: {}", fixed(r.hong_pan_bound)).unwrap();
    writeln!(out, "yu-gu bound: {}", fixed(r.yu_gu_bound)).unwrap();
}

pub fn sd_command(sel: &PolySelector, check: bool) -> Result<CommandOutput, CliError> {
    let mut out = String::new();
    sel.header(&mut out)?;
    let mut check_failure = None;
    match sel {
        PolySelector::Cyclotomic(n) => {
            let r = sd_cyclotomic(*n)?;
            report_lines(&mut out, &r);
            if factorize(*n)?.is_prime() {
                writeln!(
                    out,
                    "closed form p^((p-2)/(2(p-1))): {}",
                    fixed(sd_prime_closed(*n)?)
                )
                .unwrap();
            }
            if check {
                let oracle = sd_from_gram(&gram_oracle_cyclotomic(*n)?, r.abs_det())?;
                let via_rad = sd_cyclotomic_via_radical(*n)?.sd;
                let err = rel_err(oracle, r.sd).max(rel_err(via_rad, r.sd));
                check_failure =
                    record_check(&mut out, "sd-vs-oracle-and-radical", err, CHECK_TOLERANCE);
            }
        }
        PolySelector::Quadratic { b, c, k } => {
            check_k(*k)?;
            let r = sd_power_substitution(&IntPolynomial::quadratic(*b, *c), *k)?;
            report_lines(&mut out, &r);
            if check {
                let err = rel_err(sd_polynomial(&sel.polynomial()?)?.sd, r.sd);
                check_failure = record_check(&mut out, "sd-vs-oracle", err, CHECK_TOLERANCE);
            }
        }
        PolySelector::Poly(_) => {
            let f = sel.polynomial()?;
            let r = sd_polynomial(&f)?;
            report_lines(&mut out, &r);
            if check {
                let err = rel_err(sd_from_gram(&realified_gram(&f)?, r.abs_det())?, r.sd);
                check_failure =
                    record_check(&mut out, "complex-vs-realified", err, CHECK_TOLERANCE);
            }
        }
    }
    Ok(CommandOutput {
        text: out,
        check_failure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line<'a>(text: &'a str, key: &str) -> &'a str {
        text.lines()
            .find_map(|l| l.strip_prefix(key))
            .unwrap_or_else(|| panic!("no '{key}' in\n{text}"))
            .trim()
    }

    #[test]
    fn gram_phi2_is_one_by_one() {
        let o = gram_command(&PolySelector::Cyclotomic(2), true).unwrap();
        assert!(o.check_failure.is_none());
        assert!(o.text.contains("gram (1x1):\n1\n"), "{}", o.text);
    }

    #[test]
    fn gram_phi15_has_generator() {
        let o = gram_command(&PolySelector::Cyclotomic(15), true).unwrap();
        assert_eq!(
            line(&o.text, "toeplitz generator:"),
            "[8, 1, 1, -2, 1, -4, -2, 1]"
        );
        assert!(o.check_failure.is_none());
    }

    #[test]
    fn sd_values() {
        let sd = |n| {
            let o = sd_command(&PolySelector::Cyclotomic(n), false).unwrap();
            line(&o.text, "sd:").to_string()
        };
        assert_eq!(sd(3), "1.316074");
        assert_eq!(sd(4), "1.000000");
        assert_eq!(sd(30), sd(15));
    }

    #[test]
    fn quadratic_and_poly_checks_pass() {
        let q = PolySelector::Quadratic { b: 1, c: 1, k: 2 };
        assert!(gram_command(&q, true).unwrap().check_failure.is_none());
        assert!(sd_command(&q, true).unwrap().check_failure.is_none());
        let p = PolySelector::Poly(vec![1, 0, 0, 1]);
        assert!(gram_command(&p, true).unwrap().check_failure.is_none());
        assert!(sd_command(&p, true).unwrap().check_failure.is_none());
    }

    #[test]
    fn invalid_selectors_are_errors() {
        assert!(gram_command(&PolySelector::Poly(vec![1, 2, 1]), false).is_err());
        assert!(gram_command(&PolySelector::Poly(vec![1, 2]), false).is_err());
        assert!(gram_command(&PolySelector::Cyclotomic(0), false).is_err());
        assert!(gram_command(&PolySelector::Quadratic { b: 1, c: 1, k: 0 }, false).is_err());
    }
}
