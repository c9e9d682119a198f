use std::fmt;

use crate::error::{Error, Result};

/// Dense real symmetric matrix, row-major. Construction mirrors the upper
/// triangle so `get(i, j) == get(j, i)` holds bit-for-bit.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    dim: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    /// Builds from a closure evaluated on the upper triangle `i <= j`.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = vec![0.0; dim * dim];
        for i in 0..dim {
            for j in i..dim {
                let v = f(i, j);
                data[i * dim + j] = v;
                data[j * dim + i] = v;
            }
        }
        Self { dim, data }
    }

    /// Builds from explicit rows; rejects input that is not exactly symmetric.
    #[allow(clippy::needless_range_loop)]
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch(
                "rows must form a square matrix".into(),
            ));
        }
        for i in 0..dim {
            for j in i + 1..dim {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::NotSymmetric { i, j });
                }
            }
        }
        Ok(Self::from_fn(dim, |i, j| rows[i][j]))
    }

    /// Averages a nearly symmetric square array into a symmetric matrix.
    pub fn symmetrized(dim: usize, f: impl Fn(usize, usize) -> f64) -> Self {
        Self::from_fn(dim, |i, j| 0.5 * (f(i, j) + f(j, i)))
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| if i == j { 1.0 } else { 0.0 })
    }

    /// Symmetric Toeplitz matrix with `out[i][j] = v[|i - j|]`.
    pub fn toeplitz(v: &[f64]) -> Result<Self> {
        if v.is_empty() {
            return Err(Error::InvalidArgument(
                "Toeplitz generator must be nonempty".into(),
            ));
        }
        Ok(Self::from_fn(v.len(), |i, j| v[j - i]))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.dim + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.dim).map(|i| self.row(i).to_vec()).collect()
    }

    pub(crate) fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|x| x * factor).collect(),
        }
    }

    pub fn map(&self, f: impl Fn(usize, usize, f64) -> f64) -> Self {
        Self::from_fn(self.dim, |i, j| f(i, j, self.get(i, j)))
    }

    /// Kronecker product: `(A ⊗ B)[i·dimB + k][j·dimB + l] = A[i][j]·B[k][l]`.
    pub fn kron(&self, other: &Self) -> Result<Self> {
        let dim = self
            .dim
            .checked_mul(other.dim)
            .ok_or(Error::Overflow("forming a Kronecker product dimension"))?;
        let bd = other.dim;
        Ok(Self::from_fn(dim, |r, c| {
            self.get(r / bd, c / bd) * other.get(r % bd, c % bd)
        }))
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[f64]) -> Vec<f64> {
        (0..self.dim)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// Distance of the farthest entry from its nearest integer.
    pub fn max_integrality_gap(&self) -> f64 {
        self.data
            .iter()
            .map(|x| (x - x.round()).abs())
            .fold(0.0, f64::max)
    }
}

/// Dense symmetric matrix of exact integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntSymMatrix {
    dim: usize,
    data: Vec<i64>,
}

impl IntSymMatrix {
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let mut data = vec![0; dim * dim];
        for i in 0..dim {
            for j in i..dim {
                let v = f(i, j);
                data[i * dim + j] = v;
                data[j * dim + i] = v;
            }
        }
        Self { dim, data }
    }

    pub fn try_from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Result<i64>) -> Result<Self> {
        let mut data = vec![0; dim * dim];
        for i in 0..dim {
            for j in i..dim {
                let v = f(i, j)?;
                data[i * dim + j] = v;
                data[j * dim + i] = v;
            }
        }
        Ok(Self { dim, data })
    }

    #[allow(clippy::needless_range_loop)]
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch(
                "rows must form a square matrix".into(),
            ));
        }
        for i in 0..dim {
            for j in i + 1..dim {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::NotSymmetric { i, j });
                }
            }
        }
        Ok(Self::from_fn(dim, |i, j| rows[i][j]))
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| i64::from(i == j))
    }

    pub fn toeplitz(v: &[i64]) -> Result<Self> {
        if v.is_empty() {
            return Err(Error::InvalidArgument(
                "Toeplitz generator must be nonempty".into(),
            ));
        }
        Ok(Self::from_fn(v.len(), |i, j| v[j - i]))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.dim + j]
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.dim).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn scale(&self, factor: i64) -> Result<Self> {
        let data = self
            .data
            .iter()
            .map(|x| x.checked_mul(factor))
            .collect::<Option<Vec<_>>>()
            .ok_or(Error::Overflow("scaling an integer matrix"))?;
        Ok(Self {
            dim: self.dim,
            data,
        })
    }

    pub fn map(&self, f: impl Fn(usize, usize, i64) -> i64) -> Self {
        Self::from_fn(self.dim, |i, j| f(i, j, self.get(i, j)))
    }

    pub fn kron(&self, other: &Self) -> Result<Self> {
        let dim = self
            .dim
            .checked_mul(other.dim)
            .ok_or(Error::Overflow("forming a Kronecker product dimension"))?;
        let bd = other.dim;
        Self::try_from_fn(dim, |r, c| {
            self.get(r / bd, c / bd)
                .checked_mul(other.get(r % bd, c % bd))
                .ok_or(Error::Overflow("forming a Kronecker product entry"))
        })
    }

    /// True when every diagonal is constant.
    pub fn is_toeplitz(&self) -> bool {
        (1..self.dim).all(|i| (1..self.dim).all(|j| self.get(i, j) == self.get(i - 1, j - 1)))
    }

    pub fn to_real(&self) -> SymMatrix {
        SymMatrix::from_fn(self.dim, |i, j| self.get(i, j) as f64)
    }
}

impl fmt::Display for IntSymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .data
            .iter()
            .map(|x| x.to_string().len())
            .max()
            .unwrap_or(1);
        for i in 0..self.dim {
            let row: Vec<String> = self.row(i).iter().map(|x| format!("{x:>width$}")).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Display for SymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(|x| format!("{x:.6}")).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.dim {
            let row: Vec<String> = cells[i * self.dim..(i + 1) * self.dim]
                .iter()
                .map(|c| format!("{c:>width$}"))
                .collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Dense real rectangular matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct RealMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl RealMatrix {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    /// `AᵀA`, symmetrized.
    pub fn gram(&self) -> SymMatrix {
        SymMatrix::from_fn(self.cols, |i, j| {
            (0..self.rows)
                .map(|k| self.get(k, i) * self.get(k, j))
                .sum()
        })
    }
}
