use num_complex::Complex64;

use super::symmetric::SymMatrix;
use crate::error::{Error, Result};

/// Dense complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| {
            if i == j {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
    }

    pub fn from_real(rows: &[Vec<f64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_fn(rows.len(), cols, |i, j| Complex64::new(rows[i][j], 0.0))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.cols + j]
    }

    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Self::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols)
                .map(|k| self.get(i, k) * other.get(k, j))
                .sum()
        }))
    }

    /// `A†A`, the Hermitian Gram matrix of the columns.
    pub fn gram(&self) -> Self {
        Self::from_fn(self.cols, self.cols, |i, j| {
            (0..self.rows)
                .map(|k| self.get(k, i).conj() * self.get(k, j))
                .sum()
        })
    }

    /// Largest imaginary part in absolute value.
    pub fn max_imag(&self) -> f64 {
        self.data.iter().map(|z| z.im.abs()).fold(0.0, f64::max)
    }

    /// Real part of a Hermitian matrix that is real up to `tol`, averaged
    /// into an exactly symmetric matrix.
    pub fn real_symmetric_part(&self, tol: f64) -> Result<SymMatrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("expected a square matrix".into()));
        }
        let residue = self.max_imag();
        if residue > tol {
            return Err(Error::OrderingViolation { residue });
        }
        Ok(SymMatrix::symmetrized(self.rows, |i, j| self.get(i, j).re))
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data
            .iter()
            .map(Complex64::norm_sqr)
            .sum::<f64>()
            .sqrt()
    }

    /// Euclidean norm of every row.
    pub fn row_norms(&self) -> Vec<f64> {
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self.get(i, j).norm_sqr())
                    .sum::<f64>()
                    .sqrt()
            })
            .collect()
    }

    /// Euclidean norm of every column.
    pub fn col_norms(&self) -> Vec<f64> {
        (0..self.cols)
            .map(|j| {
                (0..self.rows)
                    .map(|i| self.get(i, j).norm_sqr())
                    .sum::<f64>()
                    .sqrt()
            })
            .collect()
    }

    /// LU factorization with partial pivoting. Returns the pivot diagonal and
    /// the permutation parity, or `None` on an exactly zero pivot.
    fn lu_pivots(&self) -> Result<Option<(Vec<Complex64>, bool)>> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(
                "determinant of a non-square matrix".into(),
            ));
        }
        let n = self.rows;
        let mut a = self.data.clone();
        let mut odd = false;
        let mut pivots = Vec::with_capacity(n);
        for col in 0..n {
            let (pr, pmag) =
                (col..n)
                    .map(|r| (r, a[r * n + col].norm()))
                    .fold(
                        (col, -1.0),
                        |best, cur| if cur.1 > best.1 { cur } else { best },
                    );
            if pmag == 0.0 {
                return Ok(None);
            }
            if pr != col {
                for k in 0..n {
                    a.swap(col * n + k, pr * n + k);
                }
                odd = !odd;
            }
            let pivot = a[col * n + col];
            pivots.push(pivot);
            for r in col + 1..n {
                let factor = a[r * n + col] / pivot;
                if factor == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for k in col + 1..n {
                    let upd = factor * a[col * n + k];
                    a[r * n + k] -= upd;
                }
            }
        }
        Ok(Some((pivots, odd)))
    }

    /// Determinant via LU with partial pivoting; a singular matrix gives 0.
    pub fn det(&self) -> Result<Complex64> {
        Ok(match self.lu_pivots()? {
            None => Complex64::new(0.0, 0.0),
            Some((pivots, odd)) => {
                let prod: Complex64 = pivots.iter().product();
                if odd {
                    -prod
                } else {
                    prod
                }
            }
        })
    }

    /// `ln |det A|`, accumulated per pivot so large dimensions do not
    /// overflow. A singular matrix gives `-inf`.
    pub fn ln_abs_det(&self) -> Result<f64> {
        Ok(match self.lu_pivots()? {
            None => f64::NEG_INFINITY,
            Some((pivots, _)) => pivots.iter().map(|p| p.norm().ln()).sum(),
        })
    }
}
