//! Continuous Lyapunov equation A'X + XA + C = 0.

use crate::error::Error;
use crate::linalg::{eigenvalues, Lu};
use crate::matrix::Matrix;
use crate::Result;

/// Solve A'X + XA + C = 0 for symmetric X, given Hurwitz `a` and
/// symmetric `c`.
///
/// The equation is solved directly through its n^2-dimensional
/// linearization (I (x) A' + A' (x) I) vec(X) = -vec(C); at n <= 13 the
/// 169x169 LU solve is trivial, and no Schur machinery is needed.
/// The result is explicitly symmetrized before return.
pub fn solve_lyapunov(a: &Matrix, c: &Matrix) -> Result<Matrix> {
    a.require_square("Lyapunov solve")?;
    c.require_square("Lyapunov solve")?;
    let n = a.rows();
    if c.rows() != n {
        return Err(Error::Dimension(format!(
            "A is {n}x{n} but C is {}x{}",
            c.rows(),
            c.cols()
        )));
    }
    let sym_tol = 1e-10 * c.max_abs().max(1.0);
    if !c.is_symmetric(sym_tol) {
        return Err(Error::Validation("Lyapunov right-hand side must be symmetric".into()));
    }

    // The linearized operator is singular iff lambda_i + lambda_j = 0 for
    // some eigenvalue pair; requiring Hurwitz A rules that out and gives
    // a sharper diagnostic than a failed LU pivot.
    for lam in eigenvalues(a)? {
        if lam.re >= 0.0 {
            return Err(Error::NotStable {
                re: lam.re,
                im: lam.im,
            });
        }
    }

    let cs = c.symmetrize();
    let n2 = n * n;
    let mut op = Matrix::zeros(n2, n2);
    // Column-stacked vec: entry X[r, col] lives at index col*n + r.
    for col in 0..n {
        for r in 0..n {
            let row_idx = col * n + r;
            // (I (x) A') block: within column `col`, A'[r, s] = A[s, r].
            for s in 0..n {
                op[(row_idx, col * n + s)] += a[(s, r)];
            }
            // (A' (x) I) block: couples column k with weight A'[col, k].
            for k in 0..n {
                op[(row_idx, k * n + r)] += a[(k, col)];
            }
        }
    }
    let mut rhs = Matrix::zeros(n2, 1);
    for col in 0..n {
        for r in 0..n {
            rhs[(col * n + r, 0)] = -cs[(r, col)];
        }
    }

    let lu = Lu::factor(&op).map_err(|e| match e {
        Error::Singular(_) => Error::DegenerateSpectrum,
        other => other,
    })?;
    let sol = lu.solve_matrix(&rhs)?;
    let mut x = Matrix::zeros(n, n);
    for col in 0..n {
        for r in 0..n {
            x[(r, col)] = sol[(col * n + r, 0)];
        }
    }
    Ok(x.symmetrize())
}
