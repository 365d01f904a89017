//! LU factorization with partial pivoting.

use crate::error::Error;
use crate::matrix::Matrix;
use crate::Result;

/// Packed LU factors of a square matrix with row pivoting.
#[derive(Debug, Clone)]
pub struct Lu {
    lu: Matrix,
    perm: Vec<usize>,
    sign: f64,
}

impl Lu {
    /// Factor a square matrix. Fails with a singular-matrix error when a
    /// pivot falls below the scaled singularity threshold.
    pub fn factor(a: &Matrix) -> Result<Self> {
        a.require_square("LU factorization")?;
        let n = a.rows();
        let mut lu = a.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut sign = 1.0;
        let threshold = (n as f64 * f64::EPSILON * a.max_abs()).max(f64::MIN_POSITIVE);

        for k in 0..n {
            let mut pivot_row = k;
            let mut pivot_abs = lu[(k, k)].abs();
            for i in (k + 1)..n {
                let v = lu[(i, k)].abs();
                if v > pivot_abs {
                    pivot_abs = v;
                    pivot_row = i;
                }
            }
            if pivot_abs <= threshold {
                return Err(Error::Singular(format!(
                    "pivot {:.3e} at column {k} below threshold {:.3e}",
                    pivot_abs, threshold
                )));
            }
            if pivot_row != k {
                for j in 0..n {
                    let tmp = lu[(k, j)];
                    lu[(k, j)] = lu[(pivot_row, j)];
                    lu[(pivot_row, j)] = tmp;
                }
                perm.swap(k, pivot_row);
                sign = -sign;
            }
            let pivot = lu[(k, k)];
            for i in (k + 1)..n {
                let factor = lu[(i, k)] / pivot;
                lu[(i, k)] = factor;
                for j in (k + 1)..n {
                    lu[(i, j)] -= factor * lu[(k, j)];
                }
            }
        }
        Ok(Self { lu, perm, sign })
    }

    /// Solve A X = RHS column by column.
    pub fn solve_matrix(&self, rhs: &Matrix) -> Result<Matrix> {
        let n = self.lu.rows();
        if rhs.rows() != n {
            return Err(Error::Dimension(format!(
                "rhs has {} rows, matrix is {n}x{n}",
                rhs.rows()
            )));
        }
        let mut x = Matrix::zeros(n, rhs.cols());
        let mut col = vec![0.0; n];
        for j in 0..rhs.cols() {
            for i in 0..n {
                col[i] = rhs[(self.perm[i], j)];
            }
            // Forward substitution (unit lower triangle).
            for i in 1..n {
                for k in 0..i {
                    col[i] -= self.lu[(i, k)] * col[k];
                }
            }
            // Back substitution.
            for i in (0..n).rev() {
                for k in (i + 1)..n {
                    col[i] -= self.lu[(i, k)] * col[k];
                }
                col[i] /= self.lu[(i, i)];
            }
            for i in 0..n {
                x[(i, j)] = col[i];
            }
        }
        Ok(x)
    }

    pub fn det(&self) -> f64 {
        let n = self.lu.rows();
        (0..n).fold(self.sign, |acc, i| acc * self.lu[(i, i)])
    }
}

/// Solve A X = RHS with row pivoting for stability.
///
/// `a` must be square with `rhs.rows() == a.rows()`; a near-zero pivot
/// reports the matrix as singular.
pub fn solve_linear(a: &Matrix, rhs: &Matrix) -> Result<Matrix> {
    if !rhs.is_finite() {
        return Err(Error::NonFinite("rhs entries"));
    }
    Lu::factor(a)?.solve_matrix(rhs)
}
