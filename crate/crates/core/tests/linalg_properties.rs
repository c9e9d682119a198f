use num_complex::Complex64;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use specdist::gramform::sign_flip;
use specdist::linalg::{jacobi_eigen, jacobi_eigenvalues, ComplexMatrix, SymMatrix};

fn random_symmetric(rng: &mut StdRng, dim: usize) -> SymMatrix {
    SymMatrix::from_fn(dim, |_, _| rng.gen_range(-10.0..10.0))
}

fn lu_det(a: &SymMatrix) -> f64 {
    let rows = a.to_rows();
    ComplexMatrix::from_real(&rows).det().unwrap().re
}

#[test]
fn eigenvalues_reproduce_trace_and_determinant() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..200 {
        let dim = rng.gen_range(1..=30);
        let a = random_symmetric(&mut rng, dim);
        let dec = jacobi_eigen(&a).unwrap();
        let s = &dec.spectrum;
        assert!(s.eigenvalues().windows(2).all(|w| w[0] <= w[1]));

        let trace = a.trace();
        assert!((s.sum() - trace).abs() <= 1e-8 * trace.abs().max(a.frobenius_norm()));

        let det = lu_det(&a);
        let prod: f64 = s.eigenvalues().iter().product();
        assert!(
            (prod - det).abs() <= 1e-6 * det.abs(),
            "dim={dim}: {prod} vs {det}"
        );

        assert!(dec.max_residual(&a) <= 1e-9 * a.frobenius_norm());
    }
}

#[test]
fn sign_flip_preserves_spectrum() {
    let mut rng = StdRng::seed_from_u64(17);
    for _ in 0..100 {
        let dim = rng.gen_range(1..=20);
        let a = random_symmetric(&mut rng, dim);
        let s1 = jacobi_eigenvalues(&a).unwrap();
        let s2 = jacobi_eigenvalues(&sign_flip(&a)).unwrap();
        assert!(s1.max_abs_diff(&s2) <= 1e-9);
    }
}

proptest! {
    #[test]
    fn kron_with_identity_repeats_spectrum(
        entries in prop::collection::vec(-5.0f64..5.0, 1..=36),
        k in 1usize..=4,
    ) {
        let dim = ((entries.len() as f64).sqrt() as usize).max(1);
        let a = SymMatrix::from_fn(dim, |i, j| entries[i * dim + j]);
        let big = a.kron(&SymMatrix::identity(k)).unwrap();
        let want = jacobi_eigenvalues(&a).unwrap().scaled_repeated(1.0, k);
        let got = jacobi_eigenvalues(&big).unwrap();
        prop_assert!(got.max_abs_diff(&want) <= 1e-9);
    }

    #[test]
    fn toeplitz_is_symmetric_and_diagonal_constant(v in prop::collection::vec(-100.0f64..100.0, 1..20)) {
        let t = SymMatrix::toeplitz(&v).unwrap();
        for i in 0..v.len() {
            for j in 0..v.len() {
                prop_assert_eq!(t.get(i, j), t.get(j, i));
                prop_assert_eq!(t.get(i, j), v[i.abs_diff(j)]);
            }
        }
    }

    #[test]
    fn frobenius_is_sum_of_row_norms(entries in prop::collection::vec((-3.0f64..3.0, -3.0f64..3.0), 1..30)) {
        let cols = 1 + entries.len() % 5;
        let rows = entries.len() / cols;
        prop_assume!(rows > 0);
        let m = ComplexMatrix::from_fn(rows, cols, |i, j| {
            let (re, im) = entries[i * cols + j];
            Complex64::new(re, im)
        });
        let f2 = m.frobenius_norm().powi(2);
        let r2: f64 = m.row_norms().iter().map(|r| r * r).sum();
        let c2: f64 = m.col_norms().iter().map(|c| c * c).sum();
        prop_assert!((f2 - r2).abs() <= 1e-12 * f2.max(1.0));
        prop_assert!((f2 - c2).abs() <= 1e-12 * f2.max(1.0));
    }
}
