use specdist::embedding::{cyclotomic_vandermonde, gram_oracle, polynomial_root_set, vandermonde};
use specdist::gramform::{
    gram_cyclotomic, gram_power_substitution, quadratic_eigenvalues, quadratic_gram,
};
use specdist::linalg::{jacobi_eigenvalues, IntSymMatrix, Spectrum};
use specdist::numtheory::{abs_disc_cyclotomic, factorize, is_prime, IntPolynomial};
use specdist::spectral::{
    hong_pan_ln_sigma_min_bound, sd_cyclotomic, sd_power_substitution, sd_prime_closed,
    yu_gu_ln_sigma_min_bound,
};

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

fn substitution_cases() -> Vec<(IntPolynomial, usize)> {
    let mut out = Vec::new();
    for k in 1..=4 {
        out.push((IntPolynomial::quadratic(0, 1), k));
    }
    for k in 1..=3 {
        out.push((IntPolynomial::quadratic(-1, 1), k));
    }
    out
}

#[test]
fn prime_spectrum_is_one_and_p() {
    for p in (2..=97u64).filter(|&p| is_prime(p)) {
        let s = jacobi_eigenvalues(&gram_cyclotomic(p).unwrap().matrix.to_real()).unwrap();
        let mut want = vec![p as f64; (p - 1) as usize];
        want[0] = 1.0;
        assert!(s.max_abs_diff(&Spectrum::new(want)) <= 1e-9, "p={p}");
    }
}

#[test]
fn kronecker_reduction_and_scaled_spectrum() {
    for n in (1..=200u64).filter(|&n| !factorize(n).unwrap().is_squarefree()) {
        let rad = factorize(n).unwrap().radical();
        let m = n / rad;
        let base = gram_cyclotomic(rad).unwrap().matrix;
        let want = base
            .scale(m as i64)
            .unwrap()
            .kron(&IntSymMatrix::identity(m as usize))
            .unwrap();
        let got = gram_cyclotomic(n).unwrap().matrix;
        assert_eq!(got, want, "n={n}");
        let s_full = jacobi_eigenvalues(&got.to_real()).unwrap();
        let s_rad = jacobi_eigenvalues(&base.to_real()).unwrap();
        assert!(s_full.max_abs_diff(&s_rad.scaled_repeated(m as f64, m as usize)) <= 1e-9);
    }
}

#[test]
fn sd_invariances() {
    for p in (2..=97u64).filter(|&p| is_prime(p)) {
        assert!(rel(sd_cyclotomic(p).unwrap().sd, sd_prime_closed(p).unwrap()) <= 1e-9);
    }
    for n in 3..=200u64 {
        let rad = factorize(n).unwrap().radical();
        let sd = sd_cyclotomic(n).unwrap().sd;
        assert!(rel(sd, sd_cyclotomic(rad).unwrap().sd) <= 1e-9, "n={n}");
        assert!(sd >= 1.0 - 1e-12);
    }
    for n in (3..=199u64).step_by(2) {
        assert!(
            rel(
                sd_cyclotomic(2 * n).unwrap().sd,
                sd_cyclotomic(n).unwrap().sd
            ) <= 1e-9
        );
    }
}

#[test]
fn eigenvalue_product_is_discriminant() {
    for n in 1..=200u64 {
        let r = sd_cyclotomic(n).unwrap();
        let disc = abs_disc_cyclotomic(n).unwrap();
        let shift = disc.bits().saturating_sub(60);
        let ln_disc = (u64::try_from(&disc >> shift).unwrap() as f64).ln()
            + shift as f64 * std::f64::consts::LN_2;
        assert!(
            (r.eigenvalues.ln_abs_product() - ln_disc).abs() <= 1e-6,
            "n={n}"
        );
    }
}

#[test]
fn bounds_are_sound_for_cyclotomics() {
    for n in 1..=100u64 {
        let r = sd_cyclotomic(n).unwrap();
        assert!(r.sd <= r.hong_pan_bound * (1.0 + 1e-12), "n={n}");
        assert!(r.sd <= r.yu_gu_bound * (1.0 + 1e-12), "n={n}");
        let v = cyclotomic_vandermonde(n).unwrap();
        let hp = hong_pan_ln_sigma_min_bound(&v, r.ln_abs_det).unwrap().exp();
        assert!(hp <= r.sigma_min + 1e-9, "n={n}");
        if r.degree > 1 {
            let yg = yu_gu_ln_sigma_min_bound(&v, r.ln_abs_det).unwrap().exp();
            assert!(yg <= r.sigma_min + 1e-9, "n={n}");
        }
    }
}

#[test]
fn power_substitution_instances() {
    for (h, k) in substitution_cases() {
        let closed = gram_power_substitution(&h, k).unwrap().matrix;
        let oracle = gram_oracle(&h.substitute_power(k)).unwrap();
        assert!(closed.max_abs_diff(&oracle) <= 1e-8, "{h} k={k}");
        for i in 0..closed.dim() {
            for j in 0..closed.dim() {
                if i.abs_diff(j) % k != 0 {
                    assert_eq!(closed.get(i, j), 0.0);
                    assert!(oracle.get(i, j).abs() <= 1e-8);
                }
            }
        }
        let r = sd_power_substitution(&h, k).unwrap();
        assert!(r.sd >= 1.0 - 1e-12);
        assert!(r.sd <= r.hong_pan_bound * (1.0 + 1e-12));
        assert!(r.sd <= r.yu_gu_bound * (1.0 + 1e-12));
        let v = vandermonde(&polynomial_root_set(&h.substitute_power(k)).unwrap());
        assert!(hong_pan_ln_sigma_min_bound(&v, r.ln_abs_det).unwrap().exp() <= r.sigma_min + 1e-9);
        if r.degree > 1 {
            assert!(
                yu_gu_ln_sigma_min_bound(&v, r.ln_abs_det).unwrap().exp() <= r.sigma_min + 1e-9
            );
        }
    }
}

#[test]
fn quadratic_eigenvalues_over_grid() {
    for bi in 0..21 {
        let b = -3.0 + 0.3 * bi as f64;
        let lo = b * b / 4.0;
        for ci in 1..=21 {
            let c = lo + (5.0 - lo) * ci as f64 / 21.0;
            let (l1, l2) = quadratic_eigenvalues(b, c).unwrap();
            let s = jacobi_eigenvalues(&quadratic_gram(b, c).unwrap()).unwrap();
            assert!((s.min() - l1).abs() <= 1e-10 && (s.max() - l2).abs() <= 1e-10);
        }
    }
}
