//! Householder QR: numerical rank via column pivoting, and a plain
//! least-squares solve for overdetermined systems.

use crate::error::Error;
use crate::matrix::Matrix;
use crate::Result;

/// Numerical rank of `m`: the number of pivoted column norms that stay
/// above `tol` times the largest column norm (Businger-Golub QR).
pub fn matrix_rank(m: &Matrix, tol: f64) -> Result<usize> {
    if !(tol > 0.0) {
        return Err(Error::Validation(format!(
            "rank tolerance must be positive, got {tol}"
        )));
    }
    if !m.is_finite() {
        return Err(Error::NonFinite("matrix entries"));
    }
    let rows = m.rows();
    let cols = m.cols();
    let steps = rows.min(cols);
    let mut r = m.clone();
    let mut first_pivot = 0.0_f64;
    let mut rank = 0;

    for k in 0..steps {
        // Recomputing the remaining column norms each step trades a few
        // flops for immunity to downdating cancellation.
        let mut best_col = k;
        let mut best_norm = 0.0;
        for j in k..cols {
            let norm = (k..rows).map(|i| r[(i, j)] * r[(i, j)]).sum::<f64>().sqrt();
            if norm > best_norm {
                best_norm = norm;
                best_col = j;
            }
        }
        if k == 0 {
            first_pivot = best_norm;
        }
        if best_norm <= tol * first_pivot || best_norm == 0.0 {
            break;
        }
        rank += 1;
        if best_col != k {
            for i in 0..rows {
                let tmp = r[(i, k)];
                r[(i, k)] = r[(i, best_col)];
                r[(i, best_col)] = tmp;
            }
        }
        apply_householder(&mut r, k, None);
    }
    Ok(rank)
}

/// Minimum-norm residual solution of the overdetermined system
/// `a x = b` (`a.rows() >= a.cols()`), via Householder QR without
/// pivoting. Fails if `a` is rank deficient.
pub fn least_squares(a: &Matrix, b: &[f64]) -> Result<Vec<f64>> {
    let rows = a.rows();
    let cols = a.cols();
    if rows < cols {
        return Err(Error::Dimension(format!(
            "least squares needs rows >= cols, got {rows}x{cols}"
        )));
    }
    if b.len() != rows {
        return Err(Error::Dimension(format!(
            "rhs length {} does not match {rows} rows",
            b.len()
        )));
    }
    let mut r = a.clone();
    let mut rhs = b.to_vec();
    let threshold = (rows as f64 * f64::EPSILON * a.max_abs()).max(f64::MIN_POSITIVE);

    for k in 0..cols {
        apply_householder(&mut r, k, Some(&mut rhs));
        if r[(k, k)].abs() <= threshold {
            return Err(Error::Singular(format!(
                "least-squares matrix is rank deficient at column {k}"
            )));
        }
    }
    // Back substitution on the upper-triangular factor.
    let mut x = vec![0.0; cols];
    for i in (0..cols).rev() {
        let mut acc = rhs[i];
        for j in (i + 1)..cols {
            acc -= r[(i, j)] * x[j];
        }
        x[i] = acc / r[(i, i)];
    }
    Ok(x)
}

/// Form the Householder reflector for column `k` (rows k..end) and apply
/// it to the trailing matrix, and to `rhs` when given.
fn apply_householder(r: &mut Matrix, k: usize, rhs: Option<&mut Vec<f64>>) {
    let rows = r.rows();
    let cols = r.cols();
    let norm = (k..rows).map(|i| r[(i, k)] * r[(i, k)]).sum::<f64>().sqrt();
    if norm == 0.0 {
        return;
    }
    let alpha = if r[(k, k)] > 0.0 { -norm } else { norm };
    let mut v = vec![0.0; rows - k];
    v[0] = r[(k, k)] - alpha;
    for i in (k + 1)..rows {
        v[i - k] = r[(i, k)];
    }
    let vtv = v.iter().map(|x| x * x).sum::<f64>();
    if vtv == 0.0 {
        return;
    }
    r[(k, k)] = alpha;
    for i in (k + 1)..rows {
        r[(i, k)] = 0.0;
    }
    for j in (k + 1)..cols {
        let dot = (k..rows).map(|i| v[i - k] * r[(i, j)]).sum::<f64>();
        let f = 2.0 * dot / vtv;
        for i in k..rows {
            r[(i, j)] -= f * v[i - k];
        }
    }
    if let Some(rhs) = rhs {
        let dot = (k..rows).map(|i| v[i - k] * rhs[i]).sum::<f64>();
        let f = 2.0 * dot / vtv;
        for i in k..rows {
            rhs[i] -= f * v[i - k];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tol::TOL_RANK;

    #[test]
    fn zero_matrix_has_rank_zero() {
        assert_eq!(matrix_rank(&Matrix::zeros(3, 3), TOL_RANK).unwrap(), 0);
    }

    #[test]
    fn identity_13_has_rank_13() {
        assert_eq!(matrix_rank(&Matrix::identity(13), TOL_RANK).unwrap(), 13);
    }

    #[test]
    fn dependent_rows_have_rank_one() {
        let m = Matrix::from_rows(&[vec![1.0, 2.0], vec![2.0, 4.0]]).unwrap();
        assert_eq!(matrix_rank(&m, TOL_RANK).unwrap(), 1);
    }

    #[test]
    fn wide_matrix_rank() {
        let m = Matrix::from_rows(&[vec![1.0, 0.0, 3.0], vec![0.0, 1.0, 3.0]]).unwrap();
        assert_eq!(matrix_rank(&m, TOL_RANK).unwrap(), 2);
    }

    #[test]
    fn invalid_tolerance_rejected() {
        let m = Matrix::identity(2);
        assert!(matrix_rank(&m, 0.0).is_err());
        assert!(matrix_rank(&m, -1.0).is_err());
    }

    #[test]
    fn least_squares_recovers_exact_solution() {
        // Consistent overdetermined system.
        let a = Matrix::from_rows(&[
            vec![1.0, 0.0],
            vec![0.0, 1.0],
            vec![1.0, 1.0],
        ])
        .unwrap();
        let b = [2.0, 3.0, 5.0];
        let x = least_squares(&a, &b).unwrap();
        assert!((x[0] - 2.0).abs() < 1e-12);
        assert!((x[1] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn least_squares_minimizes_residual() {
        // Inconsistent: best fit of [1;1;1] ~ x*[1;1;0] is x = ... check
        // normal equation A'(Ax - b) = 0 instead of a frozen value.
        let a = Matrix::from_rows(&[vec![1.0, 0.0], vec![1.0, 1.0], vec![0.0, 1.0]]).unwrap();
        let b = [1.0, 0.0, 2.0];
        let x = least_squares(&a, &b).unwrap();
        let ax = a.mul_vec(&x);
        let resid: Vec<f64> = ax.iter().zip(b.iter()).map(|(p, q)| p - q).collect();
        let grad = a.transpose().mul_vec(&resid);
        assert!(grad.iter().all(|g| g.abs() < 1e-12), "gradient {grad:?}");
    }
}
