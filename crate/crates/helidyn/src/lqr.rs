//! LQR synthesis: continuous algebraic Riccati equation and the
//! stabilizing state-feedback gain.
//!
//! The Riccati solution is extracted from the stable invariant subspace
//! of the 2n x 2n Hamiltonian [[A, -BR^-1B'], [-Q, -A']] and then
//! polished with Kleinman-Newton steps, each one a Lyapunov solve on the
//! current closed loop. The eigenvector route alone can lose digits when
//! the Hamiltonian spectrum clusters; one or two Newton steps recover
//! them.

use serde::Serialize;

use crate::error::Error;
use crate::linalg::{eigen, eigenvalues, solve_linear, solve_lyapunov};
use crate::matrix::{ComplexScalar, Matrix};
use crate::model::StateSpace;
use crate::tol::{CARE_NEWTON_MAX_STEPS, TOL_CARE, TOL_HAMILTONIAN_AXIS, TOL_PSD};
use crate::Result;

/// State and input weighting of the quadratic cost. Q must be symmetric
/// positive semidefinite, R symmetric positive definite (its inverse
/// appears in the gain formula).
#[derive(Debug, Clone)]
pub struct LqrWeights {
    q: Matrix,
    r: Matrix,
}

impl LqrWeights {
    pub fn new(q: Matrix, r: Matrix) -> Result<Self> {
        q.require_square("Q weight")?;
        r.require_square("R weight")?;
        let q_tol = 1e-9 * q.max_abs().max(1.0);
        if !q.is_symmetric(q_tol) {
            return Err(Error::Validation("Q must be symmetric".into()));
        }
        let r_tol = 1e-9 * r.max_abs().max(1.0);
        if !r.is_symmetric(r_tol) {
            return Err(Error::Validation("R must be symmetric".into()));
        }
        cholesky(&r).ok_or_else(|| {
            Error::Validation("R must be positive definite".into())
        })?;
        let q_norm = q.frobenius_norm();
        let min_eig = eigenvalues(&q.symmetrize())?
            .iter()
            .map(|c| c.re)
            .fold(f64::INFINITY, f64::min);
        if min_eig < -TOL_PSD * q_norm.max(1.0) {
            return Err(Error::Validation(format!(
                "Q must be positive semidefinite (min eigenvalue {min_eig:.3e})"
            )));
        }
        Ok(Self { q, r })
    }

    /// Diagonal weights; every R entry must be positive, Q entries
    /// nonnegative.
    pub fn from_diagonals(q_diag: &[f64], r_diag: &[f64]) -> Result<Self> {
        if let Some(bad) = q_diag.iter().find(|x| !(**x >= 0.0)) {
            return Err(Error::Validation(format!(
                "Q diagonal entries must be nonnegative, got {bad}"
            )));
        }
        if let Some(bad) = r_diag.iter().find(|x| !(**x > 0.0)) {
            return Err(Error::Validation(format!(
                "R diagonal entries must be positive, got {bad}"
            )));
        }
        Ok(Self {
            q: Matrix::diagonal(q_diag),
            r: Matrix::diagonal(r_diag),
        })
    }

    pub fn q(&self) -> &Matrix {
        &self.q
    }

    pub fn r(&self) -> &Matrix {
        &self.r
    }

    fn check_shapes(&self, a: &Matrix, b: &Matrix) -> Result<()> {
        if self.q.rows() != a.rows() {
            return Err(Error::Dimension(format!(
                "Q is {}x{} but the state dimension is {}",
                self.q.rows(),
                self.q.cols(),
                a.rows()
            )));
        }
        if self.r.rows() != b.cols() {
            return Err(Error::Dimension(format!(
                "R is {}x{} but the input dimension is {}",
                self.r.rows(),
                self.r.cols(),
                b.cols()
            )));
        }
        Ok(())
    }
}

/// Identity weights sized from the output and input maps: Q = C'C with
/// C the full-state selector (hence the identity), R the identity on
/// the input space.
pub fn default_weights(ss: &StateSpace) -> LqrWeights {
    let c = Matrix::identity(ss.a.rows());
    LqrWeights {
        q: c.transpose().matmul(&c),
        r: Matrix::identity(ss.b.cols()),
    }
}

/// Riccati solution packaged with the gain and closed-loop spectrum.
#[derive(Debug, Clone, Serialize)]
pub struct LqrSolution {
    #[serde(rename = "K")]
    pub k: Matrix,
    #[serde(rename = "P")]
    pub p: Matrix,
    #[serde(rename = "residual")]
    pub care_residual: f64,
    pub closed_loop_eigenvalues: Vec<ComplexScalar>,
}

/// Relative Riccati residual ||A'P + PA - PBR^-1B'P + Q|| / max(1, ||Q||).
pub fn care_residual(a: &Matrix, b: &Matrix, w: &LqrWeights, p: &Matrix) -> f64 {
    let k = gain_from(b, w, p);
    let atp = a.transpose().matmul(p);
    let pa = p.matmul(a);
    let pbk = p.matmul(&b.matmul(&k));
    let res = atp.add(&pa).sub(&pbk).add(&w.q);
    res.frobenius_norm() / w.q.frobenius_norm().max(1.0)
}

/// K = R^-1 B' P.
fn gain_from(b: &Matrix, w: &LqrWeights, p: &Matrix) -> Matrix {
    let bt_p = b.transpose().matmul(p);
    // R is PD and tiny (m x m); LU is exact enough here.
    solve_linear(&w.r, &bt_p).expect("positive-definite R cannot be singular")
}

/// Solve the continuous algebraic Riccati equation
/// A'P + PA - PBR^-1B'P + Q = 0 for the stabilizing P.
pub fn solve_care(a: &Matrix, b: &Matrix, w: &LqrWeights) -> Result<Matrix> {
    Ok(solve_care_traced(a, b, w)?.0)
}

/// As [`solve_care`], additionally returning the residual after each
/// accepted Newton iterate (first entry is the subspace seed).
pub(crate) fn solve_care_traced(
    a: &Matrix,
    b: &Matrix,
    w: &LqrWeights,
) -> Result<(Matrix, Vec<f64>)> {
    a.require_square("CARE")?;
    if b.rows() != a.rows() {
        return Err(Error::Dimension(format!(
            "B has {} rows but A is {}x{}",
            b.rows(),
            a.rows(),
            a.cols()
        )));
    }
    w.check_shapes(a, b)?;
    let n = a.rows();

    // S = B R^-1 B'
    let r_inv_bt = solve_linear(&w.r, &b.transpose())?;
    let s = b.matmul(&r_inv_bt).symmetrize();

    // Hamiltonian H = [[A, -S], [-Q, -A']]
    let mut ham = Matrix::zeros(2 * n, 2 * n);
    ham.set_block(0, 0, a);
    ham.set_block(0, n, &s.neg());
    ham.set_block(n, 0, &w.q.neg());
    ham.set_block(n, n, &a.transpose().neg());

    let dec = eigen(&ham)?;
    let axis_band = TOL_HAMILTONIAN_AXIS * ham.inf_norm().max(1.0);
    for lam in dec.values() {
        if lam.re.abs() <= axis_band {
            return Err(Error::NoStabilizingSolution {
                re: lam.re,
                im: lam.im,
            });
        }
    }

    // Real basis of the stable invariant subspace: the eigenvector
    // column for each stable real eigenvalue, and the (real, imaginary)
    // column pair for each stable complex pair.
    let mut basis = Matrix::zeros(2 * n, n);
    let mut col = 0usize;
    let mut k = 0usize;
    while k < 2 * n {
        if dec.e[k] == 0.0 {
            if dec.d[k] < 0.0 {
                if col >= n {
                    return Err(Error::SubspaceExtraction);
                }
                for i in 0..2 * n {
                    basis[(i, col)] = dec.v[(i, k)];
                }
                col += 1;
            }
            k += 1;
        } else {
            if dec.d[k] < 0.0 {
                if col + 2 > n {
                    return Err(Error::SubspaceExtraction);
                }
                for i in 0..2 * n {
                    basis[(i, col)] = dec.v[(i, k)];
                    basis[(i, col + 1)] = dec.v[(i, k + 1)];
                }
                col += 2;
            }
            k += 2; // skip the conjugate partner
        }
    }
    if col != n {
        return Err(Error::SubspaceExtraction);
    }

    // P = U2 U1^-1, computed as the solution of U1' P' = U2'.
    let u1 = basis.block(0, 0, n, n);
    let u2 = basis.block(n, 0, n, n);
    let p_t = solve_linear(&u1.transpose(), &u2.transpose())
        .map_err(|_| Error::SubspaceExtraction)?;
    let mut p = p_t.transpose().symmetrize();

    // Kleinman-Newton polish; iterates are accepted only while the
    // residual decreases.
    let mut residuals = vec![care_residual(a, b, w, &p)];
    for _ in 0..CARE_NEWTON_MAX_STEPS {
        let best = *residuals.last().unwrap();
        if best <= TOL_CARE {
            break;
        }
        let k_gain = gain_from(b, w, &p);
        let a_cl = a.sub(&b.matmul(&k_gain));
        let rk = w.r.matmul(&k_gain);
        let c = w.q.add(&k_gain.transpose().matmul(&rk)).symmetrize();
        let p_next = solve_lyapunov(&a_cl, &c)?;
        let res_next = care_residual(a, b, w, &p_next);
        if res_next < best {
            p = p_next;
            residuals.push(res_next);
        } else {
            break;
        }
    }
    let final_res = *residuals.last().unwrap();
    if final_res > TOL_CARE {
        return Err(Error::CareConvergence {
            residual: final_res,
        });
    }
    Ok((p, residuals))
}

/// Full LQR synthesis: P, the gain K = R^-1 B'P, the residual, and the
/// closed-loop spectrum. Fails if any closed-loop eigenvalue has a
/// nonnegative real part.
pub fn lqr_gain(ss: &StateSpace, w: &LqrWeights) -> Result<LqrSolution> {
    let p = solve_care(&ss.a, &ss.b, w)?;
    let k = gain_from(&ss.b, w, &p);
    let residual = care_residual(&ss.a, &ss.b, w, &p);

    let min_p_eig = eigenvalues(&p)?.iter().map(|c| c.re).fold(f64::INFINITY, f64::min);
    if min_p_eig < -TOL_PSD * p.frobenius_norm().max(1.0) {
        return Err(Error::CareConvergence { residual });
    }

    let closed = ss.a.sub(&ss.b.matmul(&k));
    let spectrum = eigenvalues(&closed)?;
    if let Some(bad) = spectrum.iter().find(|c| c.re >= 0.0) {
        return Err(Error::ClosedLoopUnstable {
            re: bad.re,
            im: bad.im,
        });
    }
    Ok(LqrSolution {
        k,
        p,
        care_residual: residual,
        closed_loop_eigenvalues: spectrum,
    })
}

/// A - B K for a gain of matching shape.
pub fn closed_loop_matrix(ss: &StateSpace, k: &Matrix) -> Result<Matrix> {
    if k.rows() != ss.b.cols() || k.cols() != ss.a.rows() {
        return Err(Error::Dimension(format!(
            "gain must be {}x{}, got {}x{}",
            ss.b.cols(),
            ss.a.rows(),
            k.rows(),
            k.cols()
        )));
    }
    Ok(ss.a.sub(&ss.b.matmul(k)))
}

/// Cholesky factor of a symmetric matrix; `None` when not positive
/// definite.
fn cholesky(m: &Matrix) -> Option<Matrix> {
    let n = m.rows();
    let mut l = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..=i {
            let mut sum = m[(i, j)];
            for k in 0..j {
                sum -= l[(i, k)] * l[(j, k)];
            }
            if i == j {
                if sum <= 0.0 {
                    return None;
                }
                l[(i, j)] = sum.sqrt();
            } else {
                l[(i, j)] = sum / l[(j, j)];
            }
        }
    }
    Some(l)
}
