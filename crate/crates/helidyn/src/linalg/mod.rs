//! Dense linear-algebra kernel: LU solves, rank via pivoted QR,
//! real nonsymmetric eigenvalues, and Lyapunov equations.
//!
//! Everything here targets small matrices (n <= 26 for spectra, up to
//! 169x169 for the linearized Lyapunov operator); algorithms are chosen
//! for robustness and simplicity, not asymptotics.

mod eig;
mod lu;
mod lyap;
mod qr;

pub use eig::{eigen, eigenvalues, EigenDecomposition};
pub use lu::{solve_linear, Lu};
pub use lyap::solve_lyapunov;
pub use qr::{least_squares, matrix_rank};
