//! Spectral distortion `SD(f) = |det M_f|^{1/n} / σ_min(M_f)` and two upper
//! bounds on it obtained from lower bounds on `σ_min`:
//!
//! * row/column-norm bound:
//!   `σ_min ≥ ((n−1)/n)^{(n−1)/2} |det A| · max{r_min/∏r_i, c_min/∏c_i}`
//! * Frobenius bound: `σ_min ≥ |det A| · ((n−1)/‖A‖_F²)^{(n−1)/2}`
//!
//! Everything is evaluated in log space so that degrees in the hundreds do
//! not overflow. `σ_min` always comes from the Jacobi spectrum of the Gram
//! matrix.

use num_bigint::BigUint;

use crate::embedding::{cyclotomic_vandermonde, polynomial_root_set, vandermonde};
use crate::error::{Error, Result};
use crate::gramform::{gram_cyclotomic, gram_power_substitution};
use crate::linalg::{jacobi_eigenvalues, ComplexMatrix, Spectrum, SymMatrix};
use crate::numtheory::{
    abs_disc_cyclotomic, factorize, is_prime, ln_abs_disc_cyclotomic, IntPolynomial,
};

/// Spectral distortion of one polynomial together with its ingredients.
#[derive(Debug, Clone, PartialEq)]
pub struct SdReport {
    pub label: String,
    pub degree: usize,
    /// `ln |det M_f|`.
    pub ln_abs_det: f64,
    /// `|det M_f|^{1/degree}`.
    pub det_root: f64,
    /// `|Disc(f)| = |det M_f|²`, exact; only for cyclotomic input.
    pub abs_disc: Option<BigUint>,
    pub sigma_min: f64,
    pub sd: f64,
    pub hong_pan_bound: f64,
    pub yu_gu_bound: f64,
    pub eigenvalues: Spectrum,
}

impl SdReport {
    pub fn abs_det(&self) -> f64 {
        self.ln_abs_det.exp()
    }
}

// Comparisons are written `!(x > 0.0)` so that NaN is rejected too.
#[allow(clippy::neg_cmp_op_on_partial_ord)]
fn sigma_min_of(spectrum: &Spectrum) -> Result<f64> {
    let lambda_min = spectrum.min();
    if !(lambda_min > 0.0) {
        return Err(Error::NotPositiveDefinite(lambda_min));
    }
    Ok(lambda_min.sqrt())
}

/// `|det M|^{1/dim} / √λ_min(gram)`.
#[allow(clippy::neg_cmp_op_on_partial_ord)]
pub fn sd_from_gram(gram: &SymMatrix, abs_det_m: f64) -> Result<f64> {
    if !(abs_det_m > 0.0) {
        return Err(Error::Singular);
    }
    let sigma = sigma_min_of(&jacobi_eigenvalues(gram)?)?;
    Ok((abs_det_m.ln() / gram.dim() as f64).exp() / sigma)
}

fn checked_ln_det(ln_abs_det: f64) -> Result<f64> {
    if ln_abs_det.is_finite() {
        Ok(ln_abs_det)
    } else {
        Err(Error::Singular)
    }
}

#[allow(clippy::neg_cmp_op_on_partial_ord)]
fn ln_norms(norms: &[f64]) -> Result<(f64, f64)> {
    let min = norms.iter().copied().fold(f64::INFINITY, f64::min);
    if !(min > 0.0) {
        return Err(Error::Singular);
    }
    Ok((min.ln(), norms.iter().map(|r| r.ln()).sum()))
}

fn square(m: &ComplexMatrix) -> Result<usize> {
    if !m.is_square() || m.rows() == 0 {
        return Err(Error::DimensionMismatch(
            "expected a nonempty square matrix".into(),
        ));
    }
    Ok(m.rows())
}

/// `ln` of the row/column-norm lower bound on `σ_min`, given `ln |det M|`.
pub fn hong_pan_ln_sigma_min_bound(m: &ComplexMatrix, ln_abs_det: f64) -> Result<f64> {
    let n = square(m)? as f64;
    let ln_det = checked_ln_det(ln_abs_det)?;
    let (ln_rmin, ln_rprod) = ln_norms(&m.row_norms())?;
    let (ln_cmin, ln_cprod) = ln_norms(&m.col_norms())?;
    let ln_factor = if n > 1.0 {
        0.5 * (n - 1.0) * ((n - 1.0) / n).ln()
    } else {
        0.0
    };
    Ok(ln_factor + ln_det + (ln_rmin - ln_rprod).max(ln_cmin - ln_cprod))
}

/// `ln` of the Frobenius lower bound on `σ_min`, given `ln |det M|`.
pub fn yu_gu_ln_sigma_min_bound(m: &ComplexMatrix, ln_abs_det: f64) -> Result<f64> {
    let n = square(m)?;
    if n == 1 {
        return Err(Error::DegreeTooSmall { degree: 1, min: 2 });
    }
    let ln_det = checked_ln_det(ln_abs_det)?;
    let frob_sq = m.frobenius_norm().powi(2);
    let n = n as f64;
    Ok(ln_det + 0.5 * (n - 1.0) * ((n - 1.0).ln() - frob_sq.ln()))
}

/// Row/column-norm bound on `SD`:
/// `(n/(n−1))^{(n−1)/2} |det M|^{(1−n)/n} · min{∏r_i/r_min, ∏c_i/c_min}`.
pub fn hong_pan_sd_bound_with_det(m: &ComplexMatrix, ln_abs_det: f64) -> Result<f64> {
    let n = square(m)? as f64;
    Ok((ln_abs_det / n - hong_pan_ln_sigma_min_bound(m, ln_abs_det)?).exp())
}

/// Frobenius bound on `SD`: `(‖M‖_F²/(n−1))^{(n−1)/2} |det M|^{(1−n)/n}`.
/// A 1×1 matrix has `SD = 1` and the bound is defined as 1.
pub fn yu_gu_sd_bound_with_det(m: &ComplexMatrix, ln_abs_det: f64) -> Result<f64> {
    let n = square(m)?;
    if n == 1 {
        checked_ln_det(ln_abs_det)?;
        return Ok(1.0);
    }
    Ok((ln_abs_det / n as f64 - yu_gu_ln_sigma_min_bound(m, ln_abs_det)?).exp())
}

pub fn hong_pan_sigma_min_bound(m: &ComplexMatrix) -> Result<f64> {
    Ok(hong_pan_ln_sigma_min_bound(m, m.ln_abs_det()?)?.exp())
}

pub fn hong_pan_sd_bound(m: &ComplexMatrix) -> Result<f64> {
    hong_pan_sd_bound_with_det(m, m.ln_abs_det()?)
}

pub fn yu_gu_sigma_min_bound(m: &ComplexMatrix) -> Result<f64> {
    Ok(yu_gu_ln_sigma_min_bound(m, m.ln_abs_det()?)?.exp())
}

pub fn yu_gu_sd_bound(m: &ComplexMatrix) -> Result<f64> {
    yu_gu_sd_bound_with_det(m, m.ln_abs_det()?)
}

/// `SD(Φ_p) = p^{(p−2)/(2(p−1))}`.
pub fn sd_prime_closed(p: u64) -> Result<f64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let pf = p as f64;
    Ok(pf.powf((pf - 2.0) / (2.0 * (pf - 1.0))))
}

/// `|det M_{Φ_n}|^{1/φ(n)} = √(n / ∏_{p | n} p^{1/(p−1)})`.
pub fn cyclotomic_det_root(n: u64) -> Result<f64> {
    let fac = factorize(n)?;
    let ln: f64 = (n as f64).ln()
        - fac
            .primes()
            .map(|p| (p as f64).ln() / (p - 1) as f64)
            .sum::<f64>();
    Ok((0.5 * ln).exp())
}

fn cyclotomic_report(n: u64, spectrum: Spectrum) -> Result<SdReport> {
    let degree = spectrum.dim();
    let ln_abs_det = 0.5 * ln_abs_disc_cyclotomic(n)?;
    let det_root = cyclotomic_det_root(n)?;
    let sigma_min = sigma_min_of(&spectrum)?;
    let v = cyclotomic_vandermonde(n)?;
    Ok(SdReport {
        label: format!("Phi_{n}"),
        degree,
        ln_abs_det,
        det_root,
        abs_disc: Some(abs_disc_cyclotomic(n)?),
        sigma_min,
        sd: det_root / sigma_min,
        hong_pan_bound: hong_pan_sd_bound_with_det(&v, ln_abs_det)?,
        yu_gu_bound: yu_gu_sd_bound_with_det(&v, ln_abs_det)?,
        eigenvalues: spectrum,
    })
}

/// `SD(Φ_n)` with `|det M|` from the exact discriminant and `σ_min` from
/// the Jacobi spectrum of the full closed-form Gram matrix.
pub fn sd_cyclotomic(n: u64) -> Result<SdReport> {
    let gram = gram_cyclotomic(n)?.matrix.to_real();
    cyclotomic_report(n, jacobi_eigenvalues(&gram)?)
}

/// As [`sd_cyclotomic`], but the spectrum is obtained from `Φ_{rad n}`:
/// every eigenvalue scaled by `n / rad n` and repeated `n / rad n` times.
pub fn sd_cyclotomic_via_radical(n: u64) -> Result<SdReport> {
    let fac = factorize(n)?;
    let rad = fac.radical();
    let m = n / rad;
    let base = jacobi_eigenvalues(&gram_cyclotomic(rad)?.matrix.to_real())?;
    cyclotomic_report(n, base.scaled_repeated(m as f64, m as usize))
}

fn general_report(label: String, gram: &SymMatrix, v: &ComplexMatrix) -> Result<SdReport> {
    let degree = gram.dim();
    let ln_abs_det = checked_ln_det(v.ln_abs_det()?)?;
    let spectrum = jacobi_eigenvalues(gram)?;
    let sigma_min = sigma_min_of(&spectrum)?;
    let det_root = (ln_abs_det / degree as f64).exp();
    Ok(SdReport {
        label,
        degree,
        ln_abs_det,
        det_root,
        abs_disc: None,
        sigma_min,
        sd: det_root / sigma_min,
        hong_pan_bound: hong_pan_sd_bound_with_det(v, ln_abs_det)?,
        yu_gu_bound: yu_gu_sd_bound_with_det(v, ln_abs_det)?,
        eigenvalues: spectrum,
    })
}

/// `SD(h(x^k))` with the Gram matrix from the power-substitution closed
/// form and `|det M|` from LU on the Vandermonde matrix of `h(x^k)`.
pub fn sd_power_substitution(h: &IntPolynomial, k: usize) -> Result<SdReport> {
    let gram = gram_power_substitution(h, k)?.matrix;
    let f = h.substitute_power(k);
    let v = vandermonde(&polynomial_root_set(&f)?);
    let label = if k == 1 {
        h.to_string()
    } else {
        format!("({h}) at x^{k}")
    };
    general_report(label, &gram, &v)
}

/// `SD(f)` for an arbitrary squarefree monic polynomial, entirely from its
/// numerically computed roots.
pub fn sd_polynomial(f: &IntPolynomial) -> Result<SdReport> {
    let gram = crate::embedding::gram_oracle(f)?;
    let v = vandermonde(&polynomial_root_set(f)?);
    general_report(f.to_string(), &gram, &v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtheory::cyclotomic_coeffs;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn sd_from_gram_examples() {
        assert_eq!(sd_from_gram(&SymMatrix::identity(1), 1.0).unwrap(), 1.0);
        let g4 = SymMatrix::identity(2).scale(2.0);
        assert!((sd_from_gram(&g4, 2.0).unwrap() - 1.0).abs() < 1e-15);
        let g3 = SymMatrix::from_rows(&[vec![2.0, -1.0], vec![-1.0, 2.0]]).unwrap();
        let sd3 = sd_from_gram(&g3, 3f64.sqrt()).unwrap();
        assert!((sd3 - 3f64.powf(0.25)).abs() < 1e-14);
        assert!((sd3 - 1.316074).abs() < 1e-6);
        assert_eq!(sd_from_gram(&g3, 0.0), Err(Error::Singular));
        let indefinite = SymMatrix::from_rows(&[vec![1.0, 2.0], vec![2.0, 1.0]]).unwrap();
        assert!(matches!(
            sd_from_gram(&indefinite, 1.0),
            Err(Error::NotPositiveDefinite(_))
        ));
    }

    #[test]
    fn prime_closed_form() {
        assert_eq!(sd_prime_closed(2).unwrap(), 1.0);
        assert!((sd_prime_closed(3).unwrap() - 1.316074).abs() < 1e-6);
        assert_eq!(sd_prime_closed(9), Err(Error::NotPrime(9)));
        assert_eq!(sd_prime_closed(1), Err(Error::NotPrime(1)));
        let sd97 = sd_cyclotomic(97).unwrap().sd;
        assert!(rel(sd97, 97f64.powf(95.0 / 192.0)) < 1e-9);
        assert!(rel(sd_prime_closed(97).unwrap(), 97f64.powf(95.0 / 192.0)) < 1e-15);
    }

    #[test]
    fn cyclotomic_reductions() {
        assert!(rel(sd_cyclotomic(12).unwrap().sd, sd_cyclotomic(6).unwrap().sd) < 1e-9);
        assert!(rel(sd_cyclotomic(30).unwrap().sd, sd_cyclotomic(15).unwrap().sd) < 1e-9);
        assert!((sd_cyclotomic(4).unwrap().sd - 1.0).abs() < 1e-12);
        assert_eq!(sd_cyclotomic(1).unwrap().sd, 1.0);
        for n in [8u64, 9, 12, 18, 50, 72] {
            let direct = sd_cyclotomic(n).unwrap();
            let reduced = sd_cyclotomic_via_radical(n).unwrap();
            assert!(direct.eigenvalues.max_abs_diff(&reduced.eigenvalues) < 1e-9);
            assert!(rel(direct.sd, reduced.sd) < 1e-12);
        }
    }

    #[test]
    fn det_root_matches_discriminant() {
        for n in 1..=60u64 {
            let r = sd_cyclotomic(n).unwrap();
            assert!(rel(r.det_root, (r.ln_abs_det / r.degree as f64).exp()) < 1e-12);
            let lu = cyclotomic_vandermonde(n).unwrap().ln_abs_det().unwrap();
            assert!(
                (lu - r.ln_abs_det).abs() <= 1e-6 * r.ln_abs_det.abs().max(1.0),
                "n={n}"
            );
        }
    }

    #[test]
    fn bounds_at_phi3() {
        let v = cyclotomic_vandermonde(3).unwrap();
        let want = 2.0 * 3f64.powf(-0.25);
        assert!((hong_pan_sd_bound(&v).unwrap() - want).abs() < 1e-9);
        assert!((yu_gu_sd_bound(&v).unwrap() - want).abs() < 1e-9);
        assert!(want >= 3f64.powf(0.25));
    }

    #[test]
    fn sigma_bounds_on_simple_matrices() {
        for n in 1..6 {
            let id = ComplexMatrix::identity(n);
            let hp = hong_pan_sigma_min_bound(&id).unwrap();
            let nf = n as f64;
            let want = if n == 1 {
                1.0
            } else {
                ((nf - 1.0) / nf).powf((nf - 1.0) / 2.0)
            };
            assert!((hp - want).abs() < 1e-14 && hp <= 1.0);
        }
        let diag = ComplexMatrix::from_real(&[vec![1.0, 0.0], vec![0.0, 2.0]]);
        let hp = hong_pan_sigma_min_bound(&diag).unwrap();
        assert!((hp - 2f64.sqrt() / 2.0).abs() < 1e-15);
        let yg = yu_gu_sigma_min_bound(&ComplexMatrix::identity(2)).unwrap();
        assert!((yg - 0.5f64.sqrt()).abs() < 1e-15);
        assert!(yu_gu_sigma_min_bound(&ComplexMatrix::identity(1)).is_err());
        assert_eq!(yu_gu_sd_bound(&ComplexMatrix::identity(1)).unwrap(), 1.0);
        let zero_row = ComplexMatrix::from_real(&[vec![1.0, 1.0], vec![0.0, 0.0]]);
        assert_eq!(hong_pan_sd_bound(&zero_row), Err(Error::Singular));
    }

    #[test]
    fn phi5_bounds_dominate() {
        let r = sd_cyclotomic(5).unwrap();
        assert!(rel(r.sd, 5f64.powf(3.0 / 8.0)) < 1e-12);
        assert!(r.yu_gu_bound >= r.sd && r.hong_pan_bound >= r.sd);
    }

    #[test]
    fn general_paths_agree_with_cyclotomic() {
        for n in [3u64, 5, 8, 12, 15] {
            let exact = sd_cyclotomic(n).unwrap();
            let numeric = sd_polynomial(&cyclotomic_coeffs(n).unwrap()).unwrap();
            assert!(rel(numeric.sd, exact.sd) < 1e-8, "n={n}");
        }
        let via_power = sd_power_substitution(&IntPolynomial::quadratic(-1, 1), 2).unwrap();
        assert!(rel(via_power.sd, sd_cyclotomic(12).unwrap().sd) < 1e-8);
    }
}
