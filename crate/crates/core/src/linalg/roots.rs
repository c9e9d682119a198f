use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numtheory::IntPolynomial;

const MAX_ITERATIONS: usize = 1000;
const STEP_TOLERANCE: f64 = 1e-12;
/// Angle offset of the starting circle; irrational in turns so that no
/// starting point lands on a symmetry axis of the polynomial.
const START_ANGLE: f64 = 0.618_033_988_749_894_8;
/// Relative residual bound accepted after convergence.
const RESIDUAL_TOLERANCE: f64 = 1e-8;

/// All complex roots of a monic integer polynomial by Durand–Kerner
/// (Weierstrass) simultaneous iteration.
///
/// Conjugate symmetry is restored afterwards: near-real roots are snapped to
/// the real axis and each upper-half-plane root is averaged with its nearest
/// lower-half-plane partner. The result lists real roots ascending, then the
/// upper-half-plane roots by ascending argument, then their conjugates in
/// the same order.
pub fn polynomial_roots(p: &IntPolynomial) -> Result<Vec<Complex64>> {
    if !p.is_monic() {
        return Err(Error::NotMonic);
    }
    let degree = p.degree();
    if degree < 1 {
        return Err(Error::DegreeTooSmall { degree, min: 1 });
    }
    let coeffs = p.coeffs_f64();
    let eval = |z: Complex64| {
        coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    };

    let radius = 1.0 + p.max_abs_coeff();
    let mut z: Vec<Complex64> = (0..degree)
        .map(|k| {
            let angle = std::f64::consts::TAU * k as f64 / degree as f64 + START_ANGLE;
            Complex64::from_polar(radius, angle)
        })
        .collect();

    let mut converged = false;
    for _ in 0..MAX_ITERATIONS {
        let mut max_step: f64 = 0.0;
        for i in 0..degree {
            let zi = z[i];
            let denom: Complex64 = z
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &zj)| zi - zj)
                .product();
            if denom == Complex64::new(0.0, 0.0) {
                continue;
            }
            let step = eval(zi) / denom;
            z[i] = zi - step;
            max_step = max_step.max(step.norm() / zi.norm().max(1.0));
        }
        if max_step <= STEP_TOLERANCE {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NoConvergence {
            algorithm: "Durand-Kerner",
            iterations: MAX_ITERATIONS,
        });
    }

    let roots = pair_conjugates(&z)?;
    let bound = RESIDUAL_TOLERANCE * radius;
    if roots.iter().any(|&r| eval(r).norm() > bound) {
        return Err(Error::NoConvergence {
            algorithm: "Durand-Kerner",
            iterations: MAX_ITERATIONS,
        });
    }
    Ok(roots)
}

/// Enforces exact conjugate closure on a root multiset of a real polynomial.
fn pair_conjugates(z: &[Complex64]) -> Result<Vec<Complex64>> {
    let scale = z.iter().map(|r| r.norm()).fold(1.0, f64::max);
    let real_tol = 1e-7 * scale;

    let mut reals: Vec<f64> = Vec::new();
    let mut upper: Vec<Complex64> = Vec::new();
    let mut lower: Vec<Complex64> = Vec::new();
    for &r in z {
        if r.im.abs() <= real_tol {
            reals.push(r.re);
        } else if r.im > 0.0 {
            upper.push(r);
        } else {
            lower.push(r);
        }
    }
    if upper.len() != lower.len() {
        return Err(Error::NoConvergence {
            algorithm: "conjugate pairing",
            iterations: 0,
        });
    }

    let mut paired: Vec<Complex64> = Vec::with_capacity(upper.len());
    for u in upper {
        let target = u.conj();
        let (idx, _) = lower
            .iter()
            .enumerate()
            .map(|(k, l)| (k, (l - target).norm()))
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .expect("counts match");
        let l = lower.swap_remove(idx);
        paired.push((u + l.conj()) * 0.5);
    }

    reals.sort_by(f64::total_cmp);
    paired.sort_by(|a, b| a.arg().total_cmp(&b.arg()));
    let mut out: Vec<Complex64> = reals.into_iter().map(|x| Complex64::new(x, 0.0)).collect();
    out.extend(paired.iter().copied());
    out.extend(paired.iter().map(Complex64::conj));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtheory::{coprime_residues, cyclotomic_coeffs};

    fn assert_multiset_close(got: &[Complex64], want: &[Complex64], tol: f64) {
        assert_eq!(got.len(), want.len());
        let mut pool = want.to_vec();
        for g in got {
            let (idx, d) = pool
                .iter()
                .enumerate()
                .map(|(k, w)| (k, (w - g).norm()))
                .min_by(|a, b| a.1.total_cmp(&b.1))
                .unwrap();
            assert!(d <= tol, "root {g} off by {d}");
            pool.swap_remove(idx);
        }
    }

    #[test]
    fn simple_roots() {
        let r = polynomial_roots(&IntPolynomial::quadratic(0, 1)).unwrap();
        assert_multiset_close(&r, &[Complex64::i(), -Complex64::i()], 1e-12);
        let r = polynomial_roots(&IntPolynomial::from_i64s(&[-1, 1])).unwrap();
        assert_multiset_close(&r, &[Complex64::new(1.0, 0.0)], 1e-12);
    }

    #[test]
    fn cyclotomic_roots_of_unity() {
        for n in 1..=100u64 {
            let roots = polynomial_roots(&cyclotomic_coeffs(n).unwrap()).unwrap();
            let want: Vec<Complex64> = coprime_residues(n)
                .unwrap()
                .into_iter()
                .map(|c| Complex64::from_polar(1.0, std::f64::consts::TAU * c as f64 / n as f64))
                .collect();
            assert_multiset_close(&roots, &want, 1e-8);
        }
    }

    #[test]
    fn ordering_convention() {
        // (x - 2)(x + 1)(x^2 + 1)
        let p = IntPolynomial::from_i64s(&[-2, -1, -1, -1, 1]);
        let r = polynomial_roots(&p).unwrap();
        assert!((r[0].re + 1.0).abs() < 1e-10 && r[0].im == 0.0);
        assert!((r[1].re - 2.0).abs() < 1e-10 && r[1].im == 0.0);
        assert!(r[2].im > 0.0);
        assert_eq!(r[3], r[2].conj());
    }

    #[test]
    fn rejects_non_monic() {
        assert_eq!(
            polynomial_roots(&IntPolynomial::from_i64s(&[1, 2])),
            Err(Error::NotMonic)
        );
    }
}
