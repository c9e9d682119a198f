//! Brute-force Minkowski embedding: Vandermonde matrices built from explicit
//! roots, their realification under the unitary change of basis `B`, and
//! Gram matrices obtained by direct multiplication. Every closed form in
//! [`crate::gramform`] is checked against these.

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{polynomial_roots, ComplexMatrix, RealMatrix, SymMatrix};
use crate::numtheory::{coprime_residues, IntPolynomial};

/// Imaginary residue above which realification reports a broken ordering.
pub const REALIFY_TOLERANCE: f64 = 1e-8;
/// Imaginary residue tolerated in a Gram product before it is discarded.
pub const GRAM_IMAG_TOLERANCE: f64 = 1e-9;

/// Roots of a real polynomial ordered as: real roots ascending, then one
/// representative per conjugate pair (ascending argument in `(0, π)`), then
/// the conjugates in the same order as their representatives.
#[derive(Debug, Clone, PartialEq)]
pub struct RootSet {
    roots: Vec<Complex64>,
    r1: usize,
    r2: usize,
}

impl RootSet {
    /// Validates an already ordered root list. Roots with an exactly zero
    /// imaginary part count as real.
    pub fn from_ordered(roots: Vec<Complex64>) -> Result<Self> {
        let r1 = roots.iter().take_while(|z| z.im == 0.0).count();
        let rest = roots.len() - r1;
        if !rest.is_multiple_of(2) {
            return Err(Error::InvalidArgument(
                "non-real roots must come in conjugate pairs".into(),
            ));
        }
        let r2 = rest / 2;
        let scale = roots.iter().map(|z| z.norm()).fold(1.0, f64::max);
        for k in 0..r2 {
            let rep = roots[r1 + k];
            let conj = roots[r1 + r2 + k];
            if rep.im <= 0.0 || (rep.conj() - conj).norm() > 1e-10 * scale {
                return Err(Error::OrderingViolation {
                    residue: (rep.conj() - conj).norm(),
                });
            }
        }
        if roots[..r1].windows(2).any(|w| w[0].re > w[1].re) {
            return Err(Error::InvalidArgument(
                "real roots must be ascending".into(),
            ));
        }
        Ok(Self { roots, r1, r2 })
    }

    pub fn roots(&self) -> &[Complex64] {
        &self.roots
    }

    pub fn r1(&self) -> usize {
        self.r1
    }

    pub fn r2(&self) -> usize {
        self.r2
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Smallest distance between two roots; `inf` for a single root.
    pub fn min_separation(&self) -> f64 {
        let mut best = f64::INFINITY;
        for (i, a) in self.roots.iter().enumerate() {
            for b in &self.roots[i + 1..] {
                best = best.min((a - b).norm());
            }
        }
        best
    }
}

/// `e^{2πi·c/n}` with the exponent reduced mod `n` first.
fn root_of_unity(c: u64, n: u64) -> Complex64 {
    Complex64::from_polar(1.0, TAU * (c % n) as f64 / n as f64)
}

/// The primitive `n`-th roots of unity `ζ_n^c`, `gcd(c, n) = 1`, in the
/// [`RootSet`] order.
pub fn cyclotomic_roots(n: u64) -> Result<RootSet> {
    let residues = coprime_residues(n)?;
    if n <= 2 {
        let x = if n == 1 { 1.0 } else { -1.0 };
        return Ok(RootSet {
            roots: vec![Complex64::new(x, 0.0)],
            r1: 1,
            r2: 0,
        });
    }
    let reps: Vec<u64> = residues.into_iter().filter(|&c| 2 * c < n).collect();
    let mut roots: Vec<Complex64> = reps.iter().map(|&c| root_of_unity(c, n)).collect();
    roots.extend(reps.iter().map(|&c| root_of_unity(n - c, n)));
    let r2 = reps.len();
    Ok(RootSet { roots, r1: 0, r2 })
}

/// Roots of an arbitrary monic integer polynomial in [`RootSet`] order.
pub fn polynomial_root_set(f: &IntPolynomial) -> Result<RootSet> {
    RootSet::from_ordered(polynomial_roots(f)?)
}

/// The Vandermonde matrix `(α_i^j)`, rows indexed by roots and columns by
/// powers `0..deg`.
pub fn vandermonde(rs: &RootSet) -> ComplexMatrix {
    let n = rs.len();
    let mut powers: Vec<Vec<Complex64>> = Vec::with_capacity(n);
    for &alpha in rs.roots() {
        let mut row = Vec::with_capacity(n);
        let mut acc = Complex64::new(1.0, 0.0);
        for _ in 0..n {
            row.push(acc);
            acc *= alpha;
        }
        powers.push(row);
    }
    ComplexMatrix::from_fn(n, n, |i, j| powers[i][j])
}

/// Vandermonde matrix of `Φ_n` with every entry `ζ_n^{c·j mod n}` evaluated
/// directly, avoiding accumulated rounding from repeated multiplication.
pub fn cyclotomic_vandermonde(n: u64) -> Result<ComplexMatrix> {
    let rs = cyclotomic_roots(n)?;
    if n <= 2 {
        return Ok(vandermonde(&rs));
    }
    let reps: Vec<u64> = coprime_residues(n)?
        .into_iter()
        .filter(|&c| 2 * c < n)
        .collect();
    let exps: Vec<u64> = reps
        .iter()
        .copied()
        .chain(reps.iter().map(|&c| n - c))
        .collect();
    let dim = exps.len();
    Ok(ComplexMatrix::from_fn(dim, dim, |i, j| {
        root_of_unity(exps[i] * j as u64, n)
    }))
}

/// The unitary change of basis
/// `[[I, 0, 0], [0, I/√2, iI/√2], [0, I/√2, −iI/√2]]` for `r1` real roots
/// and `r2` conjugate pairs.
pub fn b_matrix(r1: usize, r2: usize) -> ComplexMatrix {
    let n = r1 + 2 * r2;
    let h = std::f64::consts::FRAC_1_SQRT_2;
    ComplexMatrix::from_fn(n, n, |i, j| {
        let zero = Complex64::new(0.0, 0.0);
        if i < r1 || j < r1 {
            return if i == j {
                Complex64::new(1.0, 0.0)
            } else {
                zero
            };
        }
        let (bi, oi) = ((i - r1) / r2, (i - r1) % r2);
        let (bj, oj) = ((j - r1) / r2, (j - r1) % r2);
        if oi != oj {
            return zero;
        }
        match (bi, bj) {
            (0, 0) | (1, 0) => Complex64::new(h, 0.0),
            (0, 1) => Complex64::new(0.0, h),
            _ => Complex64::new(0.0, -h),
        }
    })
}

/// `B†M`, which is real when the rows of `M` follow the [`RootSet`] order.
/// The real-root rows pass through; each pair contributes `√2·Re` and
/// `√2·Im` rows.
pub fn realify(m: &ComplexMatrix, rs: &RootSet) -> Result<RealMatrix> {
    if m.rows() != rs.len() {
        return Err(Error::DimensionMismatch(format!(
            "matrix has {} rows but the root set has {} roots",
            m.rows(),
            rs.len()
        )));
    }
    let prod = b_matrix(rs.r1(), rs.r2()).conj_transpose().matmul(m)?;
    let residue = prod.max_imag();
    if residue > REALIFY_TOLERANCE {
        return Err(Error::OrderingViolation { residue });
    }
    Ok(RealMatrix::from_fn(prod.rows(), prod.cols(), |i, j| {
        prod.get(i, j).re
    }))
}

/// Both forms of the embedding for one root set.
#[derive(Debug, Clone)]
pub struct EmbeddingMatrix {
    pub complex_form: ComplexMatrix,
    pub real_form: RealMatrix,
}

impl EmbeddingMatrix {
    pub fn new(rs: &RootSet) -> Result<Self> {
        let complex_form = vandermonde(rs);
        let real_form = realify(&complex_form, rs)?;
        Ok(Self {
            complex_form,
            real_form,
        })
    }
}

fn gram_of(m: &ComplexMatrix) -> Result<SymMatrix> {
    let g = m.gram();
    let scale = (0..g.rows())
        .map(|i| g.get(i, i).norm())
        .fold(1.0, f64::max);
    g.real_symmetric_part(GRAM_IMAG_TOLERANCE * scale)
}

/// `M_f†M_f` from the numerically computed roots of `f`.
pub fn gram_oracle(f: &IntPolynomial) -> Result<SymMatrix> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    if f.degree() < 1 {
        return Err(Error::DegreeTooSmall {
            degree: f.degree(),
            min: 1,
        });
    }
    if !f.is_squarefree() {
        return Err(Error::RepeatedRoot);
    }
    gram_of(&vandermonde(&polynomial_root_set(f)?))
}

/// `M†M` for `Φ_n` from the exact roots of unity.
pub fn gram_oracle_cyclotomic(n: u64) -> Result<SymMatrix> {
    if n == 0 {
        return Err(Error::NonPositive(0));
    }
    if n <= 2 {
        return Ok(SymMatrix::identity(1));
    }
    gram_of(&cyclotomic_vandermonde(n)?)
}
