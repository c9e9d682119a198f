//! The cyclotomic discriminant closed form against an independent route:
//! the resultant `Res(f, f')` as a Sylvester determinant, evaluated exactly
//! with fraction-free (Bareiss) elimination.

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};
use specdist::embedding::cyclotomic_vandermonde;
use specdist::numtheory::{abs_disc_cyclotomic, cyclotomic_coeffs, IntPolynomial};

fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut sign = BigInt::from(1);
    let mut prev = BigInt::from(1);
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// `|Disc f| = |Res(f, f')|` for monic `f`.
fn abs_disc_by_resultant(f: &IntPolynomial) -> BigUint {
    let g = f.derivative();
    let (m, n) = (f.degree(), g.degree());
    if m == 1 {
        return BigUint::from(1u32);
    }
    let size = m + n;
    let mut rows = vec![vec![BigInt::zero(); size]; size];
    let fd: Vec<BigInt> = f.coeffs().iter().rev().cloned().collect();
    let gd: Vec<BigInt> = g.coeffs().iter().rev().cloned().collect();
    for r in 0..n {
        for (k, c) in fd.iter().enumerate() {
            rows[r][r + k] = c.clone();
        }
    }
    for r in 0..m {
        for (k, c) in gd.iter().enumerate() {
            rows[n + r][r + k] = c.clone();
        }
    }
    bareiss_det(rows).abs().to_biguint().unwrap()
}

#[test]
fn known_small_discriminants() {
    // x^2 + x + 1, x^2 + 1, and x^2 - 2 (= 8)
    assert_eq!(
        abs_disc_by_resultant(&IntPolynomial::quadratic(1, 1)),
        BigUint::from(3u32)
    );
    assert_eq!(
        abs_disc_by_resultant(&IntPolynomial::quadratic(0, 1)),
        BigUint::from(4u32)
    );
    assert_eq!(
        abs_disc_by_resultant(&IntPolynomial::quadratic(0, -2)),
        BigUint::from(8u32)
    );
}

#[test]
fn closed_form_matches_resultant() {
    for n in 1..=60u64 {
        let f = cyclotomic_coeffs(n).unwrap();
        assert_eq!(
            abs_disc_cyclotomic(n).unwrap(),
            abs_disc_by_resultant(&f),
            "n={n}"
        );
    }
}

#[test]
fn squared_vandermonde_determinant_is_discriminant() {
    for n in 3..=200u64 {
        let exact = abs_disc_cyclotomic(n).unwrap();
        let shift = exact.bits().saturating_sub(60);
        let top = u64::try_from(&exact >> shift).unwrap() as f64;
        let ln_exact = top.ln() + shift as f64 * std::f64::consts::LN_2;
        let ln_lu = 2.0 * cyclotomic_vandermonde(n).unwrap().ln_abs_det().unwrap();
        // relative 1e-6 on the value itself
        assert!(
            (ln_lu - ln_exact).abs() <= 1e-6,
            "n={n}: {ln_lu} vs {ln_exact}"
        );
    }
}
