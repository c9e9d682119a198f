//! Dense linear algebra used throughout: real symmetric and complex
//! matrices, a cyclic Jacobi eigensolver and a simultaneous-iteration root
//! finder.

mod complex;
mod eigen;
mod roots;
mod symmetric;

pub use complex::ComplexMatrix;
pub use eigen::{
    jacobi_eigen, jacobi_eigenvalues, EigenDecomposition, Spectrum, JACOBI_MAX_SWEEPS,
    JACOBI_TOLERANCE,
};
pub use roots::polynomial_roots;
pub use symmetric::{IntSymMatrix, RealMatrix, SymMatrix};
