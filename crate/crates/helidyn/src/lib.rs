//! Flight-dynamics toolkit for a 13-state small-scale helicopter.
//!
//! The crate is organised around the path from a parameter file to a
//! closed-loop simulation:
//!
//! * [`model`] — parameter ingestion and assembly of the 13x13 / 13x4
//!   state-space matrices from the linearised fuselage, rotor-flapping,
//!   stabilizer-bar and yaw-filter equations.
//! * [`analysis`] — eigenvalue-based stability classification and the
//!   Kalman controllability rank test.
//! * [`lqr`] — continuous algebraic Riccati solver (Hamiltonian subspace
//!   extraction plus Newton polish) and state-feedback gain synthesis.
//! * [`sim`] — fixed-step RK4 integration of open- and closed-loop
//!   scenarios with seeded measurement noise, and CSV trajectory output.
//! * [`linalg`] — the dense real-matrix kernel (LU, QR rank, eigenvalues,
//!   Lyapunov) everything above is built on.

pub mod analysis;
pub mod error;
pub mod linalg;
pub mod lqr;
pub mod matrix;
pub mod model;
pub mod rng;
pub mod sim;
pub mod tol;

pub use error::Error;
pub use matrix::{ComplexScalar, Matrix};
pub use model::{ParameterSet, StateSpace};

/// Convenience alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;
