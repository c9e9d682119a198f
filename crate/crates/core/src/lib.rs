//! Gram matrices of the Minkowski embedding, their spectra, and the spectral
//! distortion `SD(f) = |det M_f|^{1/n} / σ_min(M_f)` for cyclotomic
//! polynomials and power substitutions `h(x^k)`.
//!
//! Closed forms live in [`gramform`] and [`spectral`]; [`embedding`] builds
//! the same matrices by brute force from explicit roots and serves as the
//! reference they are checked against.

pub mod embedding;
pub mod error;
pub mod gramform;
pub mod linalg;
pub mod numtheory;
pub mod spectral;

pub use error::{Error, Result};
