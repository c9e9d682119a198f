use super::symmetric::SymMatrix;
use crate::error::{Error, Result};

/// Off-diagonal Frobenius norm at which a sweep sequence stops, relative to
/// the Frobenius norm of the input.
pub const JACOBI_TOLERANCE: f64 = 1e-12;
/// Maximum number of cyclic sweeps.
pub const JACOBI_MAX_SWEEPS: usize = 100;

/// Eigenvalues of a symmetric matrix in ascending order.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
}

impl Spectrum {
    /// Sorts the given values ascending.
    pub fn new(mut eigenvalues: Vec<f64>) -> Self {
        eigenvalues.sort_by(f64::total_cmp);
        Self { eigenvalues }
    }

    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn min(&self) -> f64 {
        self.eigenvalues.first().copied().unwrap_or(f64::NAN)
    }

    pub fn max(&self) -> f64 {
        self.eigenvalues.last().copied().unwrap_or(f64::NAN)
    }

    pub fn sum(&self) -> f64 {
        self.eigenvalues.iter().sum()
    }

    /// Sum of logs of absolute values; `ln |∏ λ|`.
    pub fn ln_abs_product(&self) -> f64 {
        self.eigenvalues.iter().map(|x| x.abs().ln()).sum()
    }

    /// Each eigenvalue multiplied by `factor` and repeated `multiplicity`
    /// times; the spectrum of `factor·A ⊗ I_multiplicity`.
    pub fn scaled_repeated(&self, factor: f64, multiplicity: usize) -> Self {
        Self::new(
            self.eigenvalues
                .iter()
                .flat_map(|&x| std::iter::repeat_n(factor * x, multiplicity))
                .collect(),
        )
    }

    /// Largest elementwise distance to another spectrum of equal size.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        if self.dim() != other.dim() {
            return f64::INFINITY;
        }
        self.eigenvalues
            .iter()
            .zip(&other.eigenvalues)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// Eigenvalues with unit eigenvectors; `vectors[k]` belongs to
/// `spectrum.eigenvalues()[k]`.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub spectrum: Spectrum,
    pub vectors: Vec<Vec<f64>>,
}

impl EigenDecomposition {
    /// `max_k ‖A v_k − λ_k v_k‖₂`.
    pub fn max_residual(&self, a: &SymMatrix) -> f64 {
        self.spectrum
            .eigenvalues()
            .iter()
            .zip(&self.vectors)
            .map(|(&lambda, v)| {
                a.apply(v)
                    .iter()
                    .zip(v)
                    .map(|(av, x)| (av - lambda * x).powi(2))
                    .sum::<f64>()
                    .sqrt()
            })
            .fold(0.0, f64::max)
    }
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j] * a[i * n + j];
            }
        }
    }
    s.sqrt()
}

/// Cyclic Jacobi iteration on a working copy. When `vectors` is provided it
/// accumulates the rotations column-wise (row-major `n×n`, starts as I).
fn jacobi_core(a: &SymMatrix, mut vectors: Option<&mut Vec<f64>>) -> Result<Vec<f64>> {
    let n = a.dim();
    let mut w = a.as_slice().to_vec();
    let threshold = JACOBI_TOLERANCE * a.frobenius_norm();

    for sweep in 0..=JACOBI_MAX_SWEEPS {
        if off_diagonal_norm(&w, n) <= threshold {
            return Ok((0..n).map(|i| w[i * n + i]).collect());
        }
        if sweep == JACOBI_MAX_SWEEPS {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = w[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = w[p * n + p];
                let aqq = w[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + theta.hypot(1.0));
                let c = 1.0 / t.hypot(1.0);
                let s = t * c;

                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = w[k * n + p];
                    let akq = w[k * n + q];
                    let nkp = c * akp - s * akq;
                    let nkq = s * akp + c * akq;
                    w[k * n + p] = nkp;
                    w[p * n + k] = nkp;
                    w[k * n + q] = nkq;
                    w[q * n + k] = nkq;
                }
                w[p * n + p] = app - t * apq;
                w[q * n + q] = aqq + t * apq;
                w[p * n + q] = 0.0;
                w[q * n + p] = 0.0;

                if let Some(v) = vectors.as_deref_mut() {
                    for k in 0..n {
                        let vkp = v[k * n + p];
                        let vkq = v[k * n + q];
                        v[k * n + p] = c * vkp - s * vkq;
                        v[k * n + q] = s * vkp + c * vkq;
                    }
                }
            }
        }
    }
    Err(Error::NoConvergence {
        algorithm: "cyclic Jacobi",
        iterations: JACOBI_MAX_SWEEPS,
    })
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
pub fn jacobi_eigenvalues(a: &SymMatrix) -> Result<Spectrum> {
    Ok(Spectrum::new(jacobi_core(a, None)?))
}

/// Eigenvalues and orthonormal eigenvectors by cyclic Jacobi rotations.
pub fn jacobi_eigen(a: &SymMatrix) -> Result<EigenDecomposition> {
    let n = a.dim();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let diag = jacobi_core(a, Some(&mut v))?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| diag[x].total_cmp(&diag[y]));
    let vectors = order
        .iter()
        .map(|&col| (0..n).map(|row| v[row * n + col]).collect())
        .collect();
    Ok(EigenDecomposition {
        spectrum: Spectrum::new(diag),
        vectors,
    })
}
