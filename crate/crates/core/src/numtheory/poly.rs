use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Dense polynomial with arbitrary-precision integer coefficients, stored in
/// ascending degree order. The zero polynomial has an empty coefficient list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Monic polynomial from integer coefficients; rejects non-monic input.
    pub fn monic_from_i64s(coeffs: &[i64]) -> Result<Self> {
        let p = Self::from_i64s(coeffs);
        if !p.is_monic() {
            return Err(Error::NotMonic);
        }
        Ok(p)
    }

    pub fn one() -> Self {
        Self::new(vec![BigInt::one()])
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = BigInt::from(-1);
        coeffs[n] += 1;
        Self::new(coeffs)
    }

    /// `x^2 + bx + c`.
    pub fn quadratic(b: i64, c: i64) -> Self {
        Self::from_i64s(&[c, b, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeffs.first().cloned().unwrap_or_default()
    }

    /// `h(x^k)`.
    pub fn substitute_power(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); self.degree() * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Self::new(coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::new(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Quotient and remainder of division by a monic divisor. Exact in the
    /// integers because the divisor's leading coefficient is 1.
    pub fn div_rem_monic(&self, divisor: &Self) -> Result<(Self, Self)> {
        if !divisor.is_monic() {
            return Err(Error::NotMonic);
        }
        if self.coeffs.len() < divisor.coeffs.len() {
            return Ok((Self::new(Vec::new()), self.clone()));
        }
        let dd = divisor.degree();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for shift in (0..quot.len()).rev() {
            let lead = rem[shift + dd].clone();
            if lead.is_zero() {
                continue;
            }
            for (k, d) in divisor.coeffs.iter().enumerate() {
                rem[shift + k] -= &lead * d;
            }
            quot[shift] = lead;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// True when the polynomial has no repeated complex root, i.e.
    /// `gcd(f, f')` over the rationals is a constant.
    pub fn is_squarefree(&self) -> bool {
        if self.degree() == 0 {
            return !self.is_zero();
        }
        let to_q = |p: &Self| -> Vec<BigRational> {
            p.coeffs
                .iter()
                .cloned()
                .map(BigRational::from_integer)
                .collect()
        };
        rational_gcd_degree(to_q(self), to_q(&self.derivative())) == 0
    }

    pub fn coeffs_f64(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::INFINITY))
            .collect()
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs
            .iter()
            .map(|c| c.abs().to_f64().unwrap_or(f64::INFINITY))
            .fold(0.0, f64::max)
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs_f64()
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }
}

fn trim_q(p: &mut Vec<BigRational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

/// Degree of the monic gcd of two rational polynomials.
fn rational_gcd_degree(mut a: Vec<BigRational>, mut b: Vec<BigRational>) -> usize {
    trim_q(&mut a);
    trim_q(&mut b);
    while !b.is_empty() {
        // a <- a mod b
        while a.len() >= b.len() && !a.is_empty() {
            let shift = a.len() - b.len();
            let factor = a.last().unwrap() / b.last().unwrap();
            for (k, bk) in b.iter().enumerate() {
                a[shift + k] -= &factor * bk;
            }
            trim_q(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_mag = i == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}
