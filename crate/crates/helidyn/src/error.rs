use thiserror::Error;

/// Unified error type for the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("non-finite value encountered in {0}")]
    NonFinite(&'static str),

    #[error("singular matrix: {0}")]
    Singular(String),

    #[error("matrix is not Hurwitz: eigenvalue {re}{im:+}i has nonnegative real part")]
    NotStable { re: f64, im: f64 },

    #[error("degenerate spectrum: linearized Lyapunov system is singular")]
    DegenerateSpectrum,

    #[error("eigenvalue iteration failed to converge within {max_iterations} iterations")]
    Convergence { max_iterations: usize },

    #[error("Riccati Newton refinement stalled at relative residual {residual:.3e}")]
    CareConvergence { residual: f64 },

    #[error("no stabilizing Riccati solution: Hamiltonian eigenvalue {re}{im:+}i lies on the imaginary axis")]
    NoStabilizingSolution { re: f64, im: f64 },

    #[error("stable-subspace extraction failed: basis block is singular")]
    SubspaceExtraction,

    #[error("closed loop is not Hurwitz: eigenvalue {re}{im:+}i")]
    ClosedLoopUnstable { re: f64, im: f64 },

    #[error("schema error: {0}")]
    Schema(String),

    #[error("validation error: {0}")]
    Validation(String),

    #[error("unknown state label `{0}`")]
    UnknownLabel(String),

    #[error("state diverged at t = {time:.3} s")]
    Divergence { time: f64 },
}

impl Error {
    /// True for errors caused by malformed input (files, flags, shapes)
    /// rather than by a numerical computation.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Dimension(_)
                | Error::NonFinite(_)
                | Error::Schema(_)
                | Error::Validation(_)
                | Error::UnknownLabel(_)
        )
    }
}
