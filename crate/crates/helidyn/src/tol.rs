//! Numerical tolerances used across the crate.
//!
//! All values are chosen for double precision at the problem sizes this
//! crate handles (n <= 26 after Hamiltonian doubling).

/// Eigenvalue residual bound: each returned eigenvalue admits a unit
/// eigenvector v with ||A v - lambda v|| <= TOL_EIG * ||A||.
pub const TOL_EIG: f64 = 1e-9;

/// Linear-solve residual bound: ||A X - B|| <= TOL_SOLVE * ||A|| ||X||.
pub const TOL_SOLVE: f64 = 1e-10;

/// Lyapunov residual bound: ||A' X + X A + C|| <= TOL_LYAP * ||C||.
pub const TOL_LYAP: f64 = 1e-9;

/// Default rank threshold, relative to the largest column norm.
pub const TOL_RANK: f64 = 1e-8;

/// Real parts within this band classify an eigenvalue as marginal
/// rather than stable or unstable (rad/s scale).
pub const TOL_MARGINAL: f64 = 1e-6;

/// Relative residual demanded of the Riccati solution:
/// ||A'P + PA - PBR^-1B'P + Q|| / max(1, ||Q||) <= TOL_CARE.
pub const TOL_CARE: f64 = 1e-8;

/// Band around the imaginary axis (relative to ||H||) inside which a
/// Hamiltonian eigenvalue means no stabilizing Riccati solution exists.
pub const TOL_HAMILTONIAN_AXIS: f64 = 1e-8;

/// Symmetrized outputs must be symmetric to this absolute slack.
pub const TOL_SYMMETRY: f64 = 1e-12;

/// Positive-semidefinite check slack: min eigenvalue >= -TOL_PSD * ||P||.
pub const TOL_PSD: f64 = 1e-8;

/// Maximum Newton refinement steps for the Riccati solver.
pub const CARE_NEWTON_MAX_STEPS: usize = 10;

/// State magnitude cap; a trajectory exceeding this inf-norm has diverged.
pub const DIVERGENCE_CAP: f64 = 1e9;
