//! Stability classification and controllability of the linear model.

use serde::Serialize;

use crate::linalg::{eigenvalues, matrix_rank};
use crate::matrix::{ComplexScalar, Matrix};
use crate::model::StateSpace;
use crate::tol::TOL_MARGINAL;
use crate::Result;

/// Classification of a single eigenvalue by its real part, with the
/// marginal band [`TOL_MARGINAL`] separating the three classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ModeClass {
    Stable,
    Marginal,
    Unstable,
}

/// One eigenvalue with its second-order-equivalent characteristics.
#[derive(Debug, Clone, Serialize)]
pub struct Mode {
    pub eigenvalue: ComplexScalar,
    /// omega_n = |lambda| (rad/s).
    pub natural_frequency: f64,
    /// zeta = -Re(lambda)/|lambda|; undefined (null) for lambda = 0.
    pub damping_ratio: Option<f64>,
    pub class: ModeClass,
}

/// Spectrum classification of a system matrix.
#[derive(Debug, Clone, Serialize)]
pub struct ModeReport {
    pub modes: Vec<Mode>,
    pub rhp_count: usize,
    pub marginal_count: usize,
    pub is_stable: bool,
}

fn classify(lambda: ComplexScalar) -> Mode {
    let class = if lambda.re > TOL_MARGINAL {
        ModeClass::Unstable
    } else if lambda.re.abs() <= TOL_MARGINAL {
        ModeClass::Marginal
    } else {
        ModeClass::Stable
    };
    let omega_n = lambda.norm();
    let damping_ratio = if omega_n > 0.0 {
        Some(-lambda.re / omega_n)
    } else {
        None
    };
    Mode {
        eigenvalue: lambda,
        natural_frequency: omega_n,
        damping_ratio,
        class,
    }
}

/// Classify every eigenvalue of `a`; the system counts as stable only
/// with no unstable and no marginal modes.
pub fn stability_report(a: &Matrix) -> Result<ModeReport> {
    let modes: Vec<Mode> = eigenvalues(a)?.into_iter().map(classify).collect();
    let rhp_count = modes.iter().filter(|m| m.class == ModeClass::Unstable).count();
    let marginal_count = modes.iter().filter(|m| m.class == ModeClass::Marginal).count();
    Ok(ModeReport {
        is_stable: rhp_count == 0 && marginal_count == 0,
        modes,
        rhp_count,
        marginal_count,
    })
}

/// Result of the Kalman rank test.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ControllabilityReport {
    pub rank: usize,
    pub controllable: bool,
}

/// Rank of [B, AB, ..., A^(n-1)B]. Each power block has its columns
/// rescaled to unit max-norm before the next multiply so that ||A^k||
/// growth cannot overflow or drown out the weaker directions; rescaling
/// leaves the column space, hence the rank, unchanged.
pub fn controllability_rank(ss: &StateSpace, tol: f64) -> Result<ControllabilityReport> {
    let n = ss.a.rows();
    let m = ss.b.cols();
    let mut ctrb = Matrix::zeros(n, n * m);
    let mut block = ss.b.clone();
    for k in 0..n {
        if k > 0 {
            block = ss.a.matmul(&block);
            for j in 0..m {
                let scale = (0..n).map(|i| block[(i, j)].abs()).fold(0.0, f64::max);
                if scale > 0.0 {
                    for i in 0..n {
                        block[(i, j)] /= scale;
                    }
                }
            }
        }
        ctrb.set_block(0, k * m, &block);
    }
    let rank = matrix_rank(&ctrb, tol)?;
    Ok(ControllabilityReport {
        rank,
        controllable: rank == n,
    })
}
