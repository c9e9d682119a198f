//! Integer foundations: factorization, the multiplicative functions used in
//! the Gram closed forms, cyclotomic polynomials and their discriminants.

mod poly;

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

pub use poly::IntPolynomial;

use crate::error::{Error, Result};

/// Prime-power decomposition of a positive integer.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn n(&self) -> u64 {
        self.n
    }

    /// `(prime, exponent)` pairs with strictly increasing primes.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn phi(&self) -> u64 {
        self.factors
            .iter()
            .map(|&(p, k)| (p - 1) * p.pow(k - 1))
            .product()
    }

    pub fn radical(&self) -> u64 {
        self.primes().product()
    }

    pub fn omega(&self) -> u32 {
        self.factors.len() as u32
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, k)| k == 1)
    }

    pub fn is_prime(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }
}

/// Trial-division factorization.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::NonPositive(0));
    }
    let mut factors = Vec::new();
    let mut rest = n;
    let mut p = 2u64;
    while p.saturating_mul(p) <= rest {
        if rest.is_multiple_of(p) {
            let mut k = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                k += 1;
            }
            factors.push((p, k));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { n, factors })
}

pub fn euler_phi(n: u64) -> Result<u64> {
    Ok(factorize(n)?.phi())
}

pub fn radical(n: u64) -> Result<u64> {
    Ok(factorize(n)?.radical())
}

pub fn omega(n: u64) -> Result<u32> {
    Ok(factorize(n)?.omega())
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n).is_ok_and(|f| f.is_prime())
}

/// Ascending divisors of `n`.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    let fac = factorize(n)?;
    let mut divs = vec![1u64];
    for &(p, k) in fac.factors() {
        let len = divs.len();
        let mut pk = 1;
        for _ in 0..k {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    Ok(divs)
}

/// The integers in `[1, n]` coprime to `n`, ascending. For `n = 1` this is
/// `[1]`.
pub fn coprime_residues(n: u64) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::NonPositive(0));
    }
    Ok((1..=n).filter(|c| c.gcd(&n) == 1).collect())
}

type CyclotomicTable = RwLock<HashMap<u64, Arc<IntPolynomial>>>;

fn cyclotomic_table() -> &'static CyclotomicTable {
    static TABLE: OnceLock<CyclotomicTable> = OnceLock::new();
    TABLE.get_or_init(Default::default)
}

fn cyclotomic_memo(n: u64) -> Result<Arc<IntPolynomial>> {
    if let Some(p) = cyclotomic_table().read().unwrap().get(&n) {
        return Ok(Arc::clone(p));
    }
    let n_usize = usize::try_from(n).map_err(|_| Error::Overflow("building x^n - 1"))?;
    let mut quotient = IntPolynomial::x_pow_minus_one(n_usize);
    for d in divisors(n)? {
        if d == n {
            break;
        }
        let (q, r) = quotient.div_rem_monic(cyclotomic_memo(d)?.as_ref())?;
        debug_assert!(r.is_zero());
        quotient = q;
    }
    let poly = Arc::new(quotient);
    cyclotomic_table()
        .write()
        .unwrap()
        .entry(n)
        .or_insert_with(|| Arc::clone(&poly));
    Ok(poly)
}

/// The `n`-th cyclotomic polynomial, obtained by dividing `x^n - 1` by every
/// `Φ_d` with `d | n, d < n`. Results are memoized process-wide.
pub fn cyclotomic_coeffs(n: u64) -> Result<IntPolynomial> {
    if n == 0 {
        return Err(Error::NonPositive(0));
    }
    Ok((*cyclotomic_memo(n)?).clone())
}

/// `|Disc(Φ_n)| = n^φ(n) / ∏_{p | n} p^{φ(n)/(p-1)}`, computed exactly.
/// The quotient is always an integer since `p - 1` divides `φ(n)`.
pub fn abs_disc_cyclotomic(n: u64) -> Result<BigUint> {
    let fac = factorize(n)?;
    let phi = fac.phi();
    let exp = u32::try_from(phi).map_err(|_| Error::Overflow("raising n to φ(n)"))?;
    let numerator = BigUint::from(n).pow(exp);
    let denominator = fac.primes().fold(BigUint::one(), |acc, p| {
        acc * BigUint::from(p).pow((phi / (p - 1)) as u32)
    });
    let (q, r) = numerator.div_rem(&denominator);
    debug_assert!(r == BigUint::ZERO);
    Ok(q)
}

/// Natural log of `|Disc(Φ_n)|` from the same closed form, without forming
/// the integer.
pub fn ln_abs_disc_cyclotomic(n: u64) -> Result<f64> {
    let fac = factorize(n)?;
    let phi = fac.phi() as f64;
    let correction: f64 = fac
        .primes()
        .map(|p| phi / (p - 1) as f64 * (p as f64).ln())
        .sum();
    Ok(phi * (n as f64).ln() - correction)
}
