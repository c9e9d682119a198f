//! Closed-form Gram matrices `M_f†M_f`.
//!
//! For `f = Φ_n` with `n = ∏ p_i^{k_i}`, writing `m = n / rad(n)`:
//!
//! ```text
//! G[i][j] = φ(n)                                  if i = j
//!         = 0                                     if m ∤ (i − j)
//!         = (−1)^{ω(n)+ω(d)} · m · φ(rad d)       otherwise,
//!           with d = gcd((i − j)/m, n)
//! ```
//!
//! which factors as `G(Φ_n) = m · G(Φ_rad n) ⊗ I_m`, and for squarefree
//! `t` the matrix is the symmetric Toeplitz matrix of an explicit generator.
//! For `f(x) = h(x^k)` the Gram matrix vanishes off the diagonals where
//! `k | (i − j)`.

use num_complex::Complex64;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{polynomial_roots, IntSymMatrix, SymMatrix};
use crate::numtheory::{factorize, Factorization, IntPolynomial};

/// Closed-form Gram matrix of `Φ_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct CyclotomicGram {
    pub n: u64,
    pub matrix: IntSymMatrix,
    /// First row of the Toeplitz form; present when `n` is squarefree.
    pub generator: Option<Vec<i64>>,
}

/// Gram matrix of `h(x^k)` assembled from the roots of `h`.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSubstitutionGram {
    pub h: IntPolynomial,
    pub k: usize,
    pub matrix: SymMatrix,
}

fn signed(odd: bool, value: i64) -> i64 {
    if odd {
        -value
    } else {
        value
    }
}

/// Entry at offset `diff = |i − j|` for the factorization of `n`.
fn entry_at_offset(fac: &Factorization, diff: u64) -> Result<i64> {
    let phi = fac.phi();
    if diff == 0 {
        return i64::try_from(phi).map_err(|_| Error::Overflow("storing φ(n)"));
    }
    let m = fac.n() / fac.radical();
    if !diff.is_multiple_of(m) {
        return Ok(0);
    }
    let d = (diff / m).gcd(&fac.n());
    let dfac = factorize(d)?;
    let magnitude = m
        .checked_mul(dfac.primes().map(|p| p - 1).product::<u64>())
        .and_then(|v| i64::try_from(v).ok())
        .ok_or(Error::Overflow("forming a Gram entry"))?;
    Ok(signed((fac.omega() + dfac.omega()) % 2 == 1, magnitude))
}

/// Entry `(i, j)` of the Gram matrix of `Φ_n`, zero-based.
pub fn gram_entry(n: u64, i: usize, j: usize) -> Result<i64> {
    let fac = factorize(n)?;
    let dim = fac.phi() as usize;
    if i >= dim || j >= dim {
        return Err(Error::IndexOutOfRange { i, j, dim });
    }
    entry_at_offset(&fac, i.abs_diff(j) as u64)
}

/// The full matrix of [`gram_entry`] values.
pub fn gram_entry_table(n: u64) -> Result<IntSymMatrix> {
    let fac = factorize(n)?;
    let dim = fac.phi() as usize;
    let row: Vec<i64> = (0..dim as u64)
        .map(|diff| entry_at_offset(&fac, diff))
        .collect::<Result<_>>()?;
    Ok(IntSymMatrix::from_fn(dim, |i, j| row[j - i]))
}

/// First row of the Toeplitz Gram matrix of `Φ_t` for squarefree `t`.
///
/// Start from the constant `(−1)^ω(t)`, multiply position `i` by `−φ(p)`
/// for every prime `p | i`, then set position 0 to `φ(t)`.
pub fn toeplitz_generator(t: u64) -> Result<Vec<i64>> {
    let fac = factorize(t)?;
    if !fac.is_squarefree() {
        return Err(Error::NotSquarefree(t));
    }
    let len = fac.phi() as usize;
    let base = signed(fac.omega() % 2 == 1, 1);
    let mut v = vec![base; len];
    for p in fac.primes() {
        let factor = -((p - 1) as i64);
        for slot in v.iter_mut().step_by(p as usize) {
            *slot = slot
                .checked_mul(factor)
                .ok_or(Error::Overflow("building a Toeplitz generator"))?;
        }
    }
    v[0] = fac.phi() as i64;
    Ok(v)
}

/// `G(Φ_n) = (n / rad n) · Toeplitz(rad n) ⊗ I_{n / rad n}`.
pub fn gram_cyclotomic(n: u64) -> Result<CyclotomicGram> {
    let fac = factorize(n)?;
    if fac.phi() == 1 {
        return Ok(CyclotomicGram {
            n,
            matrix: IntSymMatrix::identity(1),
            generator: Some(vec![1]),
        });
    }
    let rad = fac.radical();
    let m = n / rad;
    let generator = toeplitz_generator(rad)?;
    let base = IntSymMatrix::toeplitz(&generator)?;
    let mult = i64::try_from(m).map_err(|_| Error::Overflow("scaling by n / rad n"))?;
    let matrix = base
        .scale(mult)?
        .kron(&IntSymMatrix::identity(m as usize))?;
    Ok(CyclotomicGram {
        n,
        matrix,
        generator: fac.is_squarefree().then_some(generator),
    })
}

/// `A ↦ ((−1)^{i+j} A_ij)`, an involution that preserves the spectrum.
pub trait SignFlip {
    fn sign_flip(&self) -> Self;
}

impl SignFlip for IntSymMatrix {
    fn sign_flip(&self) -> Self {
        self.map(|i, j, x| if (i + j) % 2 == 0 { x } else { -x })
    }
}

impl SignFlip for SymMatrix {
    fn sign_flip(&self) -> Self {
        self.map(|i, j, x| if (i + j) % 2 == 0 { x } else { -x })
    }
}

pub fn sign_flip<M: SignFlip>(a: &M) -> M {
    a.sign_flip()
}

fn validate_power_substitution(h: &IntPolynomial, k: usize) -> Result<()> {
    if !h.is_monic() {
        return Err(Error::NotMonic);
    }
    if h.degree() < 1 {
        return Err(Error::DegreeTooSmall {
            degree: h.degree(),
            min: 1,
        });
    }
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    // x = 0 is a k-fold root of h(x^k) whenever h(0) = 0 and k > 1.
    if !h.is_squarefree() || (k > 1 && h.constant_term().is_zero()) {
        return Err(Error::RepeatedRoot);
    }
    Ok(())
}

/// Gram matrix of `h(x^k)` from the roots `α_t` of `h`:
/// `k·Σ_t conj(β_t)^i β_t^j` when `k | (i − j)` and exactly 0 otherwise,
/// where `β_t` is the principal `k`-th root of `α_t`.
pub fn gram_power_substitution(h: &IntPolynomial, k: usize) -> Result<PowerSubstitutionGram> {
    power_substitution_with_branch(h, k, 0)
}

/// As [`gram_power_substitution`] but with every `β_t` multiplied by
/// `ζ_k^branch`. The result does not depend on `branch`.
pub fn power_substitution_with_branch(
    h: &IntPolynomial,
    k: usize,
    branch: usize,
) -> Result<PowerSubstitutionGram> {
    validate_power_substitution(h, k)?;
    let twist = Complex64::from_polar(1.0, std::f64::consts::TAU * branch as f64 / k as f64);
    let betas: Vec<Complex64> = polynomial_roots(h)?
        .into_iter()
        .map(|alpha| {
            Complex64::from_polar(alpha.norm().powf(1.0 / k as f64), alpha.arg() / k as f64) * twist
        })
        .collect();
    let dim = k * h.degree();
    let powers: Vec<Vec<Complex64>> = betas
        .iter()
        .map(|&beta| {
            let mut row = Vec::with_capacity(dim);
            let mut acc = Complex64::new(1.0, 0.0);
            for _ in 0..dim {
                row.push(acc);
                acc *= beta;
            }
            row
        })
        .collect();
    let kf = k as f64;
    let matrix = SymMatrix::from_fn(dim, |i, j| {
        if (j - i) % k != 0 {
            return 0.0;
        }
        let sum: Complex64 = powers.iter().map(|row| row[i].conj() * row[j]).sum();
        kf * sum.re
    });
    Ok(PowerSubstitutionGram {
        h: h.clone(),
        k,
        matrix,
    })
}

fn check_negative_discriminant(b: f64, c: f64) -> Result<()> {
    if b * b - 4.0 * c < 0.0 {
        Ok(())
    } else {
        Err(Error::NonNegativeDiscriminant { b, c })
    }
}

/// Gram matrix `[[2, −b], [−b, 2c]]` of `x² + bx + c` with complex roots.
pub fn quadratic_gram(b: f64, c: f64) -> Result<SymMatrix> {
    check_negative_discriminant(b, c)?;
    Ok(SymMatrix::from_fn(2, |i, j| match (i, j) {
        (0, 0) => 2.0,
        (1, 1) => 2.0 * c,
        _ => -b,
    }))
}

/// Eigenvalues `1 + c ∓ √(b² + (c − 1)²)` of [`quadratic_gram`], ascending.
pub fn quadratic_eigenvalues(b: f64, c: f64) -> Result<(f64, f64)> {
    check_negative_discriminant(b, c)?;
    let r = b.hypot(c - 1.0);
    Ok((1.0 + c - r, 1.0 + c + r))
}

/// `1 + c ∓ √(b² + c² + 2c + 1)`, the same expression with radicand
/// `b² + (c + 1)²`. It disagrees with the spectrum of [`quadratic_gram`]
/// for every `c > 0` and is kept only to report that mismatch.
pub fn quadratic_eigenvalues_alt_radicand(b: f64, c: f64) -> Result<(f64, f64)> {
    check_negative_discriminant(b, c)?;
    let r = (b * b + c * c + 2.0 * c + 1.0).sqrt();
    Ok((1.0 + c - r, 1.0 + c + r))
}

/// Gram matrix of `h(x^k)` for `h = x² + bx + c` with negative
/// discriminant, in Kronecker form `k · G_h ⊗ diag(c^{s/k})_{s<k}`.
pub fn quadratic_power_gram(b: i64, c: i64, k: usize) -> Result<SymMatrix> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let gh = quadratic_gram(b as f64, c as f64)?;
    let scales = SymMatrix::from_fn(k, |s, t| {
        if s == t {
            (c as f64).powf(s as f64 / k as f64)
        } else {
            0.0
        }
    });
    Ok(gh.kron(&scales)?.scale(k as f64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::{gram_oracle, gram_oracle_cyclotomic};
    use crate::linalg::jacobi_eigenvalues;

    const GOLDEN_15: [i64; 8] = [8, 1, 1, -2, 1, -4, -2, 1];

    #[test]
    fn entry_examples() {
        assert_eq!(gram_entry(15, 5, 0).unwrap(), -4);
        assert_eq!(gram_entry(15, 0, 5).unwrap(), -4);
        for p in [3u64, 5, 7, 11] {
            assert_eq!(gram_entry(p, 1, 1).unwrap(), (p - 1) as i64);
        }
        assert_eq!(gram_entry(4, 0, 1).unwrap(), 0);
        assert_eq!(
            gram_entry(15, 8, 0),
            Err(Error::IndexOutOfRange { i: 8, j: 0, dim: 8 })
        );
    }

    #[test]
    fn generator_examples() {
        assert_eq!(toeplitz_generator(15).unwrap(), GOLDEN_15);
        assert_eq!(toeplitz_generator(3).unwrap(), vec![2, -1]);
        assert_eq!(toeplitz_generator(1).unwrap(), vec![1]);
        assert_eq!(toeplitz_generator(12), Err(Error::NotSquarefree(12)));
    }

    #[test]
    fn generator_matches_entry_table() {
        for t in (1..=500u64).filter(|&t| factorize(t).unwrap().is_squarefree()) {
            let from_gen = IntSymMatrix::toeplitz(&toeplitz_generator(t).unwrap()).unwrap();
            assert_eq!(from_gen, gram_entry_table(t).unwrap(), "t={t}");
        }
    }

    #[test]
    fn cyclotomic_examples() {
        let g15 = gram_cyclotomic(15).unwrap();
        assert_eq!(g15.matrix, IntSymMatrix::toeplitz(&GOLDEN_15).unwrap());
        assert_eq!(g15.generator.as_deref(), Some(&GOLDEN_15[..]));

        let g9 = gram_cyclotomic(9).unwrap();
        let want = IntSymMatrix::from_rows(&[vec![6, -3], vec![-3, 6]])
            .unwrap()
            .kron(&IntSymMatrix::identity(3))
            .unwrap();
        assert_eq!(g9.matrix, want);
        assert!(g9.generator.is_none());
        assert!(
            gram_oracle_cyclotomic(9)
                .unwrap()
                .max_abs_diff(&want.to_real())
                <= 1e-9
        );

        assert_eq!(
            gram_cyclotomic(2).unwrap().matrix,
            IntSymMatrix::identity(1)
        );
        assert_eq!(
            gram_cyclotomic(1).unwrap().matrix,
            IntSymMatrix::identity(1)
        );
    }

    #[test]
    fn closed_form_matches_table_and_oracle() {
        for n in 1..=200u64 {
            let g = gram_cyclotomic(n).unwrap().matrix;
            assert_eq!(g, gram_entry_table(n).unwrap(), "n={n}");
            let err = g
                .to_real()
                .max_abs_diff(&gram_oracle_cyclotomic(n).unwrap());
            assert!(err <= 1e-9, "n={n} err={err}");
            if factorize(n).unwrap().is_squarefree() {
                assert!(g.is_toeplitz());
            }
        }
    }

    #[test]
    fn sign_flip_examples() {
        let g3 = gram_cyclotomic(3).unwrap().matrix;
        let flipped = sign_flip(&g3);
        assert_eq!(flipped.to_rows(), vec![vec![2, 1], vec![1, 2]]);
        assert!(
            gram_oracle_cyclotomic(6)
                .unwrap()
                .max_abs_diff(&flipped.to_real())
                <= 1e-12
        );
        assert_eq!(
            sign_flip(&IntSymMatrix::identity(5)),
            IntSymMatrix::identity(5)
        );
        assert_eq!(sign_flip(&sign_flip(&g3)), g3);
    }

    #[test]
    fn twice_odd_is_sign_flip() {
        for n in (3..=99u64).step_by(2) {
            assert_eq!(
                gram_cyclotomic(2 * n).unwrap().matrix,
                sign_flip(&gram_cyclotomic(n).unwrap().matrix),
                "n={n}"
            );
        }
    }

    #[test]
    fn power_substitution_examples() {
        let h = IntPolynomial::quadratic(0, 1);
        let g = gram_power_substitution(&h, 2).unwrap();
        assert!(g.matrix.max_abs_diff(&SymMatrix::identity(4).scale(4.0)) <= 1e-12);

        let g1 = gram_power_substitution(&h, 1).unwrap();
        assert!(g1.matrix.max_abs_diff(&gram_oracle(&h).unwrap()) <= 1e-12);

        let phi6 = IntPolynomial::quadratic(-1, 1);
        let g12 = gram_power_substitution(&phi6, 2).unwrap();
        let closed = gram_cyclotomic(12).unwrap().matrix.to_real();
        assert!(g12.matrix.max_abs_diff(&closed) <= 1e-9);
        assert!(
            g12.matrix
                .max_abs_diff(&gram_oracle(&phi6.substitute_power(2)).unwrap())
                <= 1e-8
        );
    }

    #[test]
    fn power_substitution_is_branch_independent() {
        let h = IntPolynomial::from_i64s(&[3, 1, 0, 1]);
        let base = gram_power_substitution(&h, 3).unwrap().matrix;
        for branch in 1..3 {
            let other = power_substitution_with_branch(&h, 3, branch)
                .unwrap()
                .matrix;
            assert!(base.max_abs_diff(&other) <= 1e-9);
        }
        assert!(base.max_abs_diff(&gram_oracle(&h.substitute_power(3)).unwrap()) <= 1e-8);
    }

    #[test]
    fn power_substitution_zero_pattern() {
        let h = IntPolynomial::from_i64s(&[2, -1, 1]);
        let g = gram_power_substitution(&h, 3).unwrap().matrix;
        for i in 0..g.dim() {
            for j in 0..g.dim() {
                if (i as i64 - j as i64) % 3 != 0 {
                    assert_eq!(g.get(i, j), 0.0);
                }
            }
        }
    }

    #[test]
    fn power_substitution_rejects_repeated_roots() {
        assert_eq!(
            gram_power_substitution(&IntPolynomial::from_i64s(&[1, 2, 1]), 2),
            Err(Error::RepeatedRoot)
        );
        assert_eq!(
            gram_power_substitution(&IntPolynomial::from_i64s(&[0, 1, 1]), 2),
            Err(Error::RepeatedRoot)
        );
        assert!(gram_power_substitution(&IntPolynomial::from_i64s(&[0, 1, 1]), 1).is_ok());
    }

    #[test]
    fn quadratic_kronecker_form_matches_direct_sum() {
        for (b, c) in [(0i64, 1i64), (1, 1), (-1, 1), (1, 2), (-2, 5), (3, 3)] {
            for k in 1..=4 {
                let h = IntPolynomial::quadratic(b, c);
                let direct = gram_power_substitution(&h, k).unwrap().matrix;
                let kron = quadratic_power_gram(b, c, k).unwrap();
                assert!(direct.max_abs_diff(&kron) <= 1e-9, "b={b} c={c} k={k}");
            }
        }
    }

    #[test]
    fn quadratic_examples() {
        assert_eq!(
            quadratic_gram(0.0, 1.0).unwrap(),
            SymMatrix::identity(2).scale(2.0)
        );
        assert_eq!(quadratic_eigenvalues(0.0, 1.0).unwrap(), (2.0, 2.0));
        assert_eq!(quadratic_eigenvalues(1.0, 1.0).unwrap(), (1.0, 3.0));
        assert_eq!(quadratic_eigenvalues(-1.0, 1.0).unwrap(), (1.0, 3.0));
        let jac = jacobi_eigenvalues(&quadratic_gram(-1.0, 1.0).unwrap()).unwrap();
        assert!((jac.min() - 1.0).abs() < 1e-12 && (jac.max() - 3.0).abs() < 1e-12);
        assert!(quadratic_gram(2.0, 1.0).is_err());
        assert!(quadratic_eigenvalues(3.0, 2.0).is_err());
    }
}
