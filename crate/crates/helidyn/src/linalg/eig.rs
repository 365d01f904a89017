//! Real nonsymmetric eigenvalue decomposition.
//!
//! Householder reduction to Hessenberg form followed by the Francis
//! implicit double-shift QR iteration with eigenvector back-substitution,
//! after the Algol procedures `orthes` and `hqr2` (Martin & Wilkinson,
//! Handbook for Automatic Computation Vol. II) as popularized by
//! EISPACK and the public-domain JAMA library.
//!
//! Eigenvalues of a real matrix come back in conjugate pairs stored
//! adjacently (positive imaginary part first), so the returned spectrum
//! is closed under conjugation exactly, not just to round-off.

use crate::error::Error;
use crate::matrix::{ComplexScalar, Matrix};
use crate::Result;

/// Iteration budget per deflated eigenvalue; the classical exceptional
/// shifts fire at 10 and 30, so hitting this means genuine stagnation.
const MAX_QR_ITERS: usize = 50;

/// Eigenvalues and eigenvectors of a real square matrix.
///
/// Storage follows the quasi-triangular convention: `d`/`e` hold real
/// and imaginary parts, and for a complex pair at indices (k, k+1) the
/// eigenvector of `d[k] + i e[k]` (with `e[k] > 0`) is
/// `v[:,k] + i v[:,k+1]`; real eigenvalues own their column directly.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub(crate) d: Vec<f64>,
    pub(crate) e: Vec<f64>,
    pub(crate) v: Matrix,
}

impl EigenDecomposition {
    /// All eigenvalues, with multiplicity, pairs adjacent.
    pub fn values(&self) -> Vec<ComplexScalar> {
        self.d
            .iter()
            .zip(&self.e)
            .map(|(&re, &im)| ComplexScalar::new(re, im))
            .collect()
    }

    /// Complex eigenvector for eigenvalue `k` as (real, imaginary) parts.
    /// Not normalized.
    pub fn eigenvector(&self, k: usize) -> (Vec<f64>, Vec<f64>) {
        let n = self.d.len();
        if self.e[k] == 0.0 {
            (self.v.col_vec(k), vec![0.0; n])
        } else if self.e[k] > 0.0 {
            (self.v.col_vec(k), self.v.col_vec(k + 1))
        } else {
            let im: Vec<f64> = self.v.col_vec(k).iter().map(|x| -x).collect();
            (self.v.col_vec(k - 1), im)
        }
    }
}

/// Eigenvalues of a square matrix, complex pairs adjacent.
pub fn eigenvalues(m: &Matrix) -> Result<Vec<ComplexScalar>> {
    Ok(eigen(m)?.values())
}

/// Full eigenvalue decomposition of a square matrix.
pub fn eigen(m: &Matrix) -> Result<EigenDecomposition> {
    m.require_square("eigenvalue decomposition")?;
    let n = m.rows();
    let mut h = m.clone();
    let mut v = Matrix::identity(n);
    let mut ort = vec![0.0; n];
    orthes(&mut h, &mut v, &mut ort);
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    hqr2(&mut h, &mut v, &mut d, &mut e)?;
    Ok(EigenDecomposition { d, e, v })
}

/// Householder reduction of `h` to upper Hessenberg form, accumulating
/// the orthogonal similarity in `v`.
fn orthes(h: &mut Matrix, v: &mut Matrix, ort: &mut [f64]) {
    let n = h.rows();
    if n < 3 {
        return;
    }
    let low = 0usize;
    let high = n - 1;

    for m in (low + 1)..high {
        let mut scale = 0.0;
        for i in m..=high {
            scale += h[(i, m - 1)].abs();
        }
        if scale == 0.0 {
            continue;
        }
        let mut hh = 0.0;
        for i in (m..=high).rev() {
            ort[i] = h[(i, m - 1)] / scale;
            hh += ort[i] * ort[i];
        }
        let mut g = hh.sqrt();
        if ort[m] > 0.0 {
            g = -g;
        }
        hh -= ort[m] * g;
        ort[m] -= g;

        // H <- (I - u u'/h) H (I - u u'/h)
        for j in m..n {
            let mut f = 0.0;
            for i in (m..=high).rev() {
                f += ort[i] * h[(i, j)];
            }
            f /= hh;
            for i in m..=high {
                h[(i, j)] -= f * ort[i];
            }
        }
        for i in 0..=high {
            let mut f = 0.0;
            for j in (m..=high).rev() {
                f += ort[j] * h[(i, j)];
            }
            f /= hh;
            for j in m..=high {
                h[(i, j)] -= f * ort[j];
            }
        }
        ort[m] *= scale;
        h[(m, m - 1)] = scale * g;
    }

    // Accumulate the transformations (Algol's ortran).
    for m in ((low + 1)..high).rev() {
        if h[(m, m - 1)] == 0.0 {
            continue;
        }
        for i in (m + 1)..=high {
            ort[i] = h[(i, m - 1)];
        }
        for j in m..=high {
            let mut g = 0.0;
            for i in m..=high {
                g += ort[i] * v[(i, j)];
            }
            // Double division avoids possible underflow.
            g = (g / ort[m]) / h[(m, m - 1)];
            for i in m..=high {
                v[(i, j)] += g * ort[i];
            }
        }
    }
}

/// Complex division (xr + i xi) / (yr + i yi) by Smith's algorithm.
fn cdiv(xr: f64, xi: f64, yr: f64, yi: f64) -> (f64, f64) {
    if yr.abs() > yi.abs() {
        let r = yi / yr;
        let d = yr + r * yi;
        ((xr + r * xi) / d, (xi - r * xr) / d)
    } else {
        let r = yr / yi;
        let d = yi + r * yr;
        ((r * xr + xi) / d, (r * xi - xr) / d)
    }
}

/// Francis double-shift QR on the Hessenberg matrix `h`, accumulating
/// Schur vectors into `v` and back-substituting for eigenvectors.
#[allow(clippy::too_many_lines, unused_assignments)]
fn hqr2(h: &mut Matrix, v: &mut Matrix, d: &mut [f64], e: &mut [f64]) -> Result<()> {
    let nn = h.rows();
    let low = 0usize;
    let high = nn - 1;
    let eps = f64::EPSILON / 2.0; // 2^-53, matching the reference code
    let mut exshift = 0.0;
    let (mut p, mut q, mut r, mut s, mut z): (f64, f64, f64, f64, f64) =
        (0.0, 0.0, 0.0, 0.0, 0.0);
    let (mut w, mut x, mut y): (f64, f64, f64);

    let mut norm = 0.0;
    for i in 0..nn {
        for j in i.saturating_sub(1)..nn {
            norm += h[(i, j)].abs();
        }
    }

    let mut n = high;
    let mut iter = 0usize;
    'outer: loop {
        // Look for a single small sub-diagonal element.
        let mut l = n;
        while l > low {
            s = h[(l - 1, l - 1)].abs() + h[(l, l)].abs();
            if s == 0.0 {
                s = norm;
            }
            // <= so that an identically zero block still deflates.
            if h[(l, l - 1)].abs() <= eps * s {
                break;
            }
            l -= 1;
        }

        if l == n {
            // One root found.
            h[(n, n)] += exshift;
            d[n] = h[(n, n)];
            e[n] = 0.0;
            iter = 0;
            if n == low {
                break 'outer;
            }
            n -= 1;
        } else if l + 1 == n {
            // Two roots found.
            w = h[(n, n - 1)] * h[(n - 1, n)];
            p = (h[(n - 1, n - 1)] - h[(n, n)]) / 2.0;
            q = p * p + w;
            z = q.abs().sqrt();
            h[(n, n)] += exshift;
            h[(n - 1, n - 1)] += exshift;
            x = h[(n, n)];

            if q >= 0.0 {
                // Real pair.
                z = if p >= 0.0 { p + z } else { p - z };
                d[n - 1] = x + z;
                d[n] = d[n - 1];
                if z != 0.0 {
                    d[n] = x - w / z;
                }
                e[n - 1] = 0.0;
                e[n] = 0.0;
                x = h[(n, n - 1)];
                s = x.abs() + z.abs();
                p = x / s;
                q = z / s;
                r = (p * p + q * q).sqrt();
                p /= r;
                q /= r;

                for j in (n - 1)..nn {
                    z = h[(n - 1, j)];
                    h[(n - 1, j)] = q * z + p * h[(n, j)];
                    h[(n, j)] = q * h[(n, j)] - p * z;
                }
                for i in 0..=n {
                    z = h[(i, n - 1)];
                    h[(i, n - 1)] = q * z + p * h[(i, n)];
                    h[(i, n)] = q * h[(i, n)] - p * z;
                }
                for i in low..=high {
                    z = v[(i, n - 1)];
                    v[(i, n - 1)] = q * z + p * v[(i, n)];
                    v[(i, n)] = q * v[(i, n)] - p * z;
                }
            } else {
                // Complex pair.
                d[n - 1] = x + p;
                d[n] = x + p;
                e[n - 1] = z;
                e[n] = -z;
            }
            iter = 0;
            if n >= low + 2 {
                n -= 2;
            } else {
                break 'outer;
            }
        } else {
            // No convergence yet; form the shift.
            x = h[(n, n)];
            y = 0.0;
            w = 0.0;
            if l < n {
                y = h[(n - 1, n - 1)];
                w = h[(n, n - 1)] * h[(n - 1, n)];
            }

            // Wilkinson's original ad hoc shift.
            if iter == 10 {
                exshift += x;
                for i in low..=n {
                    h[(i, i)] -= x;
                }
                s = h[(n, n - 1)].abs() + h[(n - 1, n - 2)].abs();
                x = 0.75 * s;
                y = x;
                w = -0.4375 * s * s;
            }

            // MATLAB's ad hoc shift.
            if iter == 30 {
                s = (y - x) / 2.0;
                s = s * s + w;
                if s > 0.0 {
                    s = s.sqrt();
                    if y < x {
                        s = -s;
                    }
                    s = x - w / ((y - x) / 2.0 + s);
                    for i in low..=n {
                        h[(i, i)] -= s;
                    }
                    exshift += s;
                    x = 0.964;
                    y = x;
                    w = x;
                }
            }

            iter += 1;
            if iter > MAX_QR_ITERS {
                return Err(Error::Convergence {
                    max_iterations: MAX_QR_ITERS,
                });
            }

            // Look for two consecutive small sub-diagonal elements.
            let mut m = n - 2;
            loop {
                z = h[(m, m)];
                r = x - z;
                s = y - z;
                p = (r * s - w) / h[(m + 1, m)] + h[(m, m + 1)];
                q = h[(m + 1, m + 1)] - z - r - s;
                r = h[(m + 2, m + 1)];
                s = p.abs() + q.abs() + r.abs();
                p /= s;
                q /= s;
                r /= s;
                if m == l {
                    break;
                }
                if h[(m, m - 1)].abs() * (q.abs() + r.abs())
                    < eps
                        * (p.abs()
                            * (h[(m - 1, m - 1)].abs() + z.abs() + h[(m + 1, m + 1)].abs()))
                {
                    break;
                }
                m -= 1;
            }

            for i in (m + 2)..=n {
                h[(i, i - 2)] = 0.0;
                if i > m + 2 {
                    h[(i, i - 3)] = 0.0;
                }
            }

            // Double QR step over rows l..=n and columns m..=n.
            for k in m..n {
                let notlast = k != n - 1;
                if k != m {
                    p = h[(k, k - 1)];
                    q = h[(k + 1, k - 1)];
                    r = if notlast { h[(k + 2, k - 1)] } else { 0.0 };
                    x = p.abs() + q.abs() + r.abs();
                    if x == 0.0 {
                        continue;
                    }
                    p /= x;
                    q /= x;
                    r /= x;
                }
                s = (p * p + q * q + r * r).sqrt();
                if p < 0.0 {
                    s = -s;
                }
                if s == 0.0 {
                    continue;
                }
                if k != m {
                    h[(k, k - 1)] = -s * x;
                } else if l != m {
                    h[(k, k - 1)] = -h[(k, k - 1)];
                }
                p += s;
                x = p / s;
                y = q / s;
                z = r / s;
                q /= p;
                r /= p;

                // Row modification.
                for j in k..nn {
                    p = h[(k, j)] + q * h[(k + 1, j)];
                    if notlast {
                        p += r * h[(k + 2, j)];
                        h[(k + 2, j)] -= p * z;
                    }
                    h[(k, j)] -= p * x;
                    h[(k + 1, j)] -= p * y;
                }

                // Column modification.
                for i in 0..=n.min(k + 3) {
                    p = x * h[(i, k)] + y * h[(i, k + 1)];
                    if notlast {
                        p += z * h[(i, k + 2)];
                        h[(i, k + 2)] -= p * r;
                    }
                    h[(i, k)] -= p;
                    h[(i, k + 1)] -= p * q;
                }

                // Accumulate transformations.
                for i in low..=high {
                    p = x * v[(i, k)] + y * v[(i, k + 1)];
                    if notlast {
                        p += z * v[(i, k + 2)];
                        v[(i, k + 2)] -= p * r;
                    }
                    v[(i, k)] -= p;
                    v[(i, k + 1)] -= p * q;
                }
            }
        }
    }

    // Backsubstitute to find vectors of the upper quasi-triangular form.
    if norm == 0.0 {
        return Ok(());
    }

    for n in (0..nn).rev() {
        p = d[n];
        q = e[n];

        if q == 0.0 {
            // Real vector.
            let mut l = n;
            h[(n, n)] = 1.0;
            for i in (0..n).rev() {
                w = h[(i, i)] - p;
                r = 0.0;
                for j in l..=n {
                    r += h[(i, j)] * h[(j, n)];
                }
                if e[i] < 0.0 {
                    z = w;
                    s = r;
                } else {
                    l = i;
                    if e[i] == 0.0 {
                        h[(i, n)] = if w != 0.0 { -r / w } else { -r / (eps * norm) };
                    } else {
                        // Solve the 2x2 real block.
                        x = h[(i, i + 1)];
                        y = h[(i + 1, i)];
                        q = (d[i] - p) * (d[i] - p) + e[i] * e[i];
                        let t = (x * s - z * r) / q;
                        h[(i, n)] = t;
                        h[(i + 1, n)] = if x.abs() > z.abs() {
                            (-r - w * t) / x
                        } else {
                            (-s - y * t) / z
                        };
                    }

                    // Overflow control.
                    let t = h[(i, n)].abs();
                    if (eps * t) * t > 1.0 {
                        for j in i..=n {
                            h[(j, n)] /= t;
                        }
                    }
                }
            }
        } else if q < 0.0 {
            // Complex vector, processed at the second index of the pair.
            let mut l = n - 1;

            if h[(n, n - 1)].abs() > h[(n - 1, n)].abs() {
                h[(n - 1, n - 1)] = q / h[(n, n - 1)];
                h[(n - 1, n)] = -(h[(n, n)] - p) / h[(n, n - 1)];
            } else {
                let (re, im) = cdiv(0.0, -h[(n - 1, n)], h[(n - 1, n - 1)] - p, q);
                h[(n - 1, n - 1)] = re;
                h[(n - 1, n)] = im;
            }
            h[(n, n - 1)] = 0.0;
            h[(n, n)] = 1.0;
            for i in (0..n - 1).rev() {
                let mut ra = 0.0;
                let mut sa = 0.0;
                for j in l..=n {
                    ra += h[(i, j)] * h[(j, n - 1)];
                    sa += h[(i, j)] * h[(j, n)];
                }
                w = h[(i, i)] - p;

                if e[i] < 0.0 {
                    z = w;
                    r = ra;
                    s = sa;
                } else {
                    l = i;
                    if e[i] == 0.0 {
                        let (re, im) = cdiv(-ra, -sa, w, q);
                        h[(i, n - 1)] = re;
                        h[(i, n)] = im;
                    } else {
                        // Solve the complex 2x2 block.
                        x = h[(i, i + 1)];
                        y = h[(i + 1, i)];
                        let mut vr = (d[i] - p) * (d[i] - p) + e[i] * e[i] - q * q;
                        let vi = (d[i] - p) * 2.0 * q;
                        if vr == 0.0 && vi == 0.0 {
                            vr = eps
                                * norm
                                * (w.abs() + q.abs() + x.abs() + y.abs() + z.abs());
                        }
                        let (re, im) =
                            cdiv(x * r - z * ra + q * sa, x * s - z * sa - q * ra, vr, vi);
                        h[(i, n - 1)] = re;
                        h[(i, n)] = im;
                        if x.abs() > z.abs() + q.abs() {
                            h[(i + 1, n - 1)] =
                                (-ra - w * h[(i, n - 1)] + q * h[(i, n)]) / x;
                            h[(i + 1, n)] = (-sa - w * h[(i, n)] - q * h[(i, n - 1)]) / x;
                        } else {
                            let (re, im) =
                                cdiv(-r - y * h[(i, n - 1)], -s - y * h[(i, n)], z, q);
                            h[(i + 1, n - 1)] = re;
                            h[(i + 1, n)] = im;
                        }
                    }

                    // Overflow control.
                    let t = h[(i, n - 1)].abs().max(h[(i, n)].abs());
                    if (eps * t) * t > 1.0 {
                        for j in i..=n {
                            h[(j, n - 1)] /= t;
                            h[(j, n)] /= t;
                        }
                    }
                }
            }
        }
    }

    // Back transformation to eigenvectors of the original matrix.
    for j in (low..nn).rev() {
        for i in low..=high {
            z = 0.0;
            for k in low..=j.min(high) {
                z += v[(i, k)] * h[(k, j)];
            }
            v[(i, j)] = z;
        }
    }

    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::Rng;
    use crate::tol::TOL_EIG;

    fn sorted_re_im(vals: &[ComplexScalar]) -> Vec<(f64, f64)> {
        let mut v: Vec<(f64, f64)> = vals.iter().map(|c| (c.re, c.im)).collect();
        v.sort_by(|a, b| a.partial_cmp(b).unwrap());
        v
    }

    /// Max over eigenvalues of ||A v - lambda v|| / ||v||, using the
    /// decomposition's own eigenvectors.
    fn max_residual(a: &Matrix, dec: &EigenDecomposition) -> f64 {
        let n = a.rows();
        let mut worst = 0.0_f64;
        for k in 0..n {
            let lam = ComplexScalar::new(dec.d[k], dec.e[k]);
            let (vre, vim) = dec.eigenvector(k);
            let vnorm = vre
                .iter()
                .zip(&vim)
                .map(|(a, b)| a * a + b * b)
                .sum::<f64>()
                .sqrt();
            if vnorm == 0.0 {
                worst = f64::INFINITY;
                continue;
            }
            let avre = a.mul_vec(&vre);
            let avim = a.mul_vec(&vim);
            let mut resid = 0.0;
            for i in 0..n {
                let rre = avre[i] - (lam.re * vre[i] - lam.im * vim[i]);
                let rim = avim[i] - (lam.re * vim[i] + lam.im * vre[i]);
                resid += rre * rre + rim * rim;
            }
            worst = worst.max(resid.sqrt() / vnorm);
        }
        worst
    }

    #[test]
    fn identity_has_unit_spectrum() {
        let vals = eigenvalues(&Matrix::identity(2)).unwrap();
        assert_eq!(sorted_re_im(&vals), vec![(1.0, 0.0), (1.0, 0.0)]);
    }

    #[test]
    fn rotation_generator_has_pure_imaginary_pair() {
        let m = Matrix::from_rows(&[vec![0.0, 1.0], vec![-1.0, 0.0]]).unwrap();
        let vals = eigenvalues(&m).unwrap();
        let mut ims: Vec<f64> = vals.iter().map(|c| c.im).collect();
        ims.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!(vals.iter().all(|c| c.re.abs() < 1e-14));
        assert!((ims[0] + 1.0).abs() < 1e-14 && (ims[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn companion_of_quadratic() {
        // Characteristic polynomial l^2 - l - 2 = (l - 2)(l + 1).
        let m = Matrix::from_rows(&[vec![0.0, 1.0], vec![2.0, 1.0]]).unwrap();
        let vals = eigenvalues(&m).unwrap();
        let got = sorted_re_im(&vals);
        assert!((got[0].0 + 1.0).abs() < 1e-12 && got[0].1 == 0.0);
        assert!((got[1].0 - 2.0).abs() < 1e-12 && got[1].1 == 0.0);
    }

    #[test]
    fn non_square_rejected() {
        assert!(matches!(
            eigenvalues(&Matrix::zeros(2, 3)),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn jordan_block_double_eigenvalue() {
        let m = Matrix::from_rows(&[vec![1.0, 1.0], vec![0.0, 1.0]]).unwrap();
        let vals = eigenvalues(&m).unwrap();
        for v in vals {
            assert!((v.re - 1.0).abs() < 1e-7 && v.im.abs() < 1e-7);
        }
    }

    #[test]
    fn zero_matrix_spectrum_and_vectors() {
        let dec = eigen(&Matrix::zeros(4, 4)).unwrap();
        assert!(dec.values().iter().all(|c| c.re == 0.0 && c.im == 0.0));
        assert_eq!(max_residual(&Matrix::zeros(4, 4), &dec), 0.0);
    }

    #[test]
    fn known_triangular_spectrum() {
        let m = Matrix::from_rows(&[
            vec![3.0, 1.0, -2.0],
            vec![0.0, -1.5, 4.0],
            vec![0.0, 0.0, 0.25],
        ])
        .unwrap();
        let vals = eigenvalues(&m).unwrap();
        let got = sorted_re_im(&vals);
        assert!((got[0].0 + 1.5).abs() < 1e-12);
        assert!((got[1].0 - 0.25).abs() < 1e-12);
        assert!((got[2].0 - 3.0).abs() < 1e-12);
    }

    #[test]
    fn conjugate_closure_is_exact() {
        let mut rng = Rng::new(0xc10_5ed);
        for trial in 0..50 {
            let n = 2 + trial % 9;
            let mut m = Matrix::zeros(n, n);
            for i in 0..n {
                for j in 0..n {
                    m[(i, j)] = rng.uniform() * 4.0 - 2.0;
                }
            }
            let mut vals = eigenvalues(&m).unwrap();
            // Remove conjugates pairwise; everything must pair off.
            while let Some(v) = vals.pop() {
                if v.im == 0.0 {
                    continue;
                }
                let pos = vals
                    .iter()
                    .position(|u| u.re == v.re && u.im == -v.im)
                    .expect("conjugate partner present bit-for-bit");
                vals.remove(pos);
            }
        }
    }

    #[test]
    fn residual_bound_on_random_matrices_up_to_26() {
        let mut rng = Rng::new(0xe16_e2);
        for &n in &[2usize, 3, 5, 8, 13, 21, 26] {
            for _ in 0..4 {
                let mut m = Matrix::zeros(n, n);
                for i in 0..n {
                    for j in 0..n {
                        m[(i, j)] = rng.uniform() * 10.0 - 5.0;
                    }
                }
                let dec = eigen(&m).unwrap();
                let resid = max_residual(&m, &dec);
                let bound = TOL_EIG * m.frobenius_norm();
                assert!(
                    resid <= bound,
                    "n={n}: residual {resid:.3e} above {bound:.3e}"
                );
            }
        }
    }

    #[test]
    fn trace_and_determinant_consistency() {
        let mut rng = Rng::new(0xdead_beef);
        for trial in 0..100 {
            let n = 2 + trial % 3; // n <= 4 for the determinant check
            let mut m = Matrix::zeros(n, n);
            for i in 0..n {
                for j in 0..n {
                    m[(i, j)] = rng.uniform() * 6.0 - 3.0;
                }
            }
            let vals = eigenvalues(&m).unwrap();
            let trace: f64 = (0..n).map(|i| m[(i, i)]).sum();
            let sum_re: f64 = vals.iter().map(|c| c.re).sum();
            assert!(
                (sum_re - trace).abs() <= 1e-8 * m.frobenius_norm().max(1.0),
                "trace mismatch: {sum_re} vs {trace}"
            );

            // Product of eigenvalues vs LU determinant.
            let (mut prod_re, mut prod_im) = (1.0_f64, 0.0_f64);
            for c in &vals {
                let (re, im) = (prod_re * c.re - prod_im * c.im, prod_re * c.im + prod_im * c.re);
                prod_re = re;
                prod_im = im;
            }
            if let Ok(lu) = crate::linalg::Lu::factor(&m) {
                let det = lu.det();
                let scale = det.abs().max(1.0);
                assert!(
                    (prod_re - det).abs() <= 1e-8 * scale && prod_im.abs() <= 1e-8 * scale,
                    "det mismatch: ({prod_re}, {prod_im}) vs {det}"
                );
            }
        }
    }
}
