//! Small dense linear algebra: complex LU, Hermitian eigenvalues and real
//! least squares with complex right-hand sides.

use alloc::vec;
use alloc::vec::Vec;

use crate::ComplexArg;

/// Row-major square complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    n: usize,
    data: Vec<ComplexArg>,
}

impl ComplexMatrix {
    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![ComplexArg::new(0.0, 0.0); n * n] }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> ComplexArg) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m.data[i * n + j] = f(i, j);
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> ComplexArg {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: ComplexArg) {
        self.data[i * self.n + j] = v;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[ComplexArg]> {
        self.data.chunks(self.n.max(1))
    }

    /// LU factorization with partial pivoting; `None` if a pivot vanishes.
    pub fn lu(&self) -> Option<Lu> {
        let n = self.n;
        let mut a = self.data.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut sign = 1.0;
        let scale = a.iter().fold(0.0f64, |m, v| m.max(v.norm()));
        for k in 0..n {
            let (p, best) =
                (k..n)
                    .map(|i| (i, a[i * n + k].norm()))
                    .fold((k, -1.0), |acc, cur| if cur.1 > acc.1 { cur } else { acc });
            if !(best > 1e-300f64.max(scale * f64::EPSILON * 1e-3)) {
                return None;
            }
            if p != k {
                for j in 0..n {
                    a.swap(k * n + j, p * n + j);
                }
                perm.swap(k, p);
                sign = -sign;
            }
            let pivot = a[k * n + k];
            for i in k + 1..n {
                let factor = a[i * n + k] / pivot;
                a[i * n + k] = factor;
                for j in k + 1..n {
                    let u = a[k * n + j];
                    a[i * n + j] -= factor * u;
                }
            }
        }
        Some(Lu { n, a, perm, sign })
    }

    /// Eigenvalues of the Hermitian part `(M + M†)/2`, ascending.
    pub fn hermitian_eigenvalues(&self) -> Vec<f64> {
        // H = A + iB is unitarily similar to the real symmetric
        // [[A, −B], [B, A]], whose spectrum is that of H doubled.
        let n = self.n;
        let m = 2 * n;
        let mut s = vec![0.0; m * m];
        for i in 0..n {
            for j in 0..n {
                let h = (self.get(i, j) + self.get(j, i).conj()) * 0.5;
                s[i * m + j] = h.re;
                s[(i + n) * m + j + n] = h.re;
                s[(i + n) * m + j] = h.im;
                s[i * m + j + n] = -h.im;
            }
        }
        let mut ev = symmetric_eigenvalues(&mut s, m);
        ev.sort_by(|a, b| a.partial_cmp(b).unwrap_or(core::cmp::Ordering::Equal));
        ev.into_iter().step_by(2).collect()
    }
}

#[derive(Debug, Clone)]
pub struct Lu {
    n: usize,
    a: Vec<ComplexArg>,
    perm: Vec<usize>,
    sign: f64,
}

impl Lu {
    pub fn det(&self) -> ComplexArg {
        (0..self.n).fold(ComplexArg::new(self.sign, 0.0), |d, k| d * self.a[k * self.n + k])
    }

    pub fn solve(&self, b: &[ComplexArg]) -> Vec<ComplexArg> {
        let n = self.n;
        let mut x: Vec<ComplexArg> = self.perm.iter().map(|&p| b[p]).collect();
        for i in 0..n {
            for j in 0..i {
                let l = self.a[i * n + j];
                let xj = x[j];
                x[i] -= l * xj;
            }
        }
        for i in (0..n).rev() {
            for j in i + 1..n {
                let u = self.a[i * n + j];
                let xj = x[j];
                x[i] -= u * xj;
            }
            x[i] /= self.a[i * n + i];
        }
        x
    }
}

/// Eigenvalues of a real symmetric `m × m` matrix (row-major, destroyed) by
/// cyclic Jacobi rotations.
pub fn symmetric_eigenvalues(s: &mut [f64], m: usize) -> Vec<f64> {
    for _sweep in 0..100 {
        let off: f64 = (0..m)
            .flat_map(|i| (0..m).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| s[i * m + j] * s[i * m + j])
            .sum();
        let diag: f64 = (0..m).map(|i| s[i * m + i] * s[i * m + i]).sum();
        if off <= 1e-30 * diag || off == 0.0 {
            break;
        }
        for p in 0..m {
            for q in p + 1..m {
                let apq = s[p * m + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (s[q * m + q] - s[p * m + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let cs = 1.0 / (t * t + 1.0).sqrt();
                let sn = t * cs;
                for k in 0..m {
                    let (akp, akq) = (s[k * m + p], s[k * m + q]);
                    s[k * m + p] = cs * akp - sn * akq;
                    s[k * m + q] = sn * akp + cs * akq;
                }
                for k in 0..m {
                    let (apk, aqk) = (s[p * m + k], s[q * m + k]);
                    s[p * m + k] = cs * apk - sn * aqk;
                    s[q * m + k] = sn * apk + cs * aqk;
                }
            }
        }
    }
    (0..m).map(|i| s[i * m + i]).collect()
}

/// Solution of `min ‖A c − b‖₂` for a real `rows × cols` design matrix (row
/// major) and complex data.
#[derive(Debug, Clone)]
pub struct LeastSquares {
    pub coeffs: Vec<ComplexArg>,
    /// Residual vector `b − A c`.
    pub residuals: Vec<ComplexArg>,
    /// 2-norm condition number of the column-equilibrated design.
    pub condition: f64,
    /// Diagonal of `(AᵀA)⁻¹`, for coefficient error estimates.
    pub covariance_diag: Vec<f64>,
}

/// Householder QR least squares. Columns are scaled to unit norm first, so
/// the reported condition number is insensitive to the units of each basis
/// function. Returns `None` if the design has rank below `cols`.
pub fn least_squares(design: &[f64], rows: usize, cols: usize, b: &[ComplexArg]) -> Option<LeastSquares> {
    if rows < cols || cols == 0 || design.len() != rows * cols || b.len() != rows {
        return None;
    }
    let mut a = design.to_vec();
    let mut colscale = vec![0.0; cols];
    for (j, cs) in colscale.iter_mut().enumerate() {
        let norm = (0..rows).fold(0.0f64, |acc, i| acc.hypot(a[i * cols + j]));
        if norm == 0.0 {
            return None;
        }
        *cs = norm;
        for i in 0..rows {
            a[i * cols + j] /= norm;
        }
    }
    let scaled = a.clone();
    let mut y = b.to_vec();
    for k in 0..cols {
        let norm = (k..rows).fold(0.0f64, |acc, i| acc.hypot(a[i * cols + k]));
        if norm == 0.0 {
            return None;
        }
        let alpha = if a[k * cols + k] > 0.0 { -norm } else { norm };
        let mut v: Vec<f64> = (k..rows).map(|i| a[i * cols + k]).collect();
        v[0] -= alpha;
        let vnorm2: f64 = v.iter().map(|x| x * x).sum();
        if vnorm2 == 0.0 {
            continue;
        }
        for j in k..cols {
            let dot: f64 = (k..rows).map(|i| v[i - k] * a[i * cols + j]).sum();
            let f = 2.0 * dot / vnorm2;
            for i in k..rows {
                a[i * cols + j] -= f * v[i - k];
            }
        }
        let dot: ComplexArg = (k..rows).map(|i| y[i] * v[i - k]).sum();
        let f = dot * (2.0 / vnorm2);
        for i in k..rows {
            y[i] -= f * v[i - k];
        }
    }
    // Back substitution with R.
    let mut c = vec![ComplexArg::new(0.0, 0.0); cols];
    for i in (0..cols).rev() {
        let mut acc = y[i];
        for j in i + 1..cols {
            acc -= c[j] * a[i * cols + j];
        }
        let rii = a[i * cols + i];
        if rii.abs() <= f64::EPSILON * 1e-2 {
            return None;
        }
        c[i] = acc / rii;
    }
    // Singular values of the scaled design from the eigenvalues of RᵀR.
    let mut rtr = vec![0.0; cols * cols];
    for i in 0..cols {
        for j in 0..cols {
            rtr[i * cols + j] = (0..=i.min(j)).map(|k| a[k * cols + i] * a[k * cols + j]).sum();
        }
    }
    let mut gram = rtr.clone();
    let ev = symmetric_eigenvalues(&mut gram, cols);
    let (lo, hi) = ev.iter().fold((f64::INFINITY, 0.0f64), |(lo, hi), &e| (lo.min(e), hi.max(e)));
    let condition = if lo > 0.0 { (hi / lo).sqrt() } else { f64::INFINITY };
    // Diagonal of (RᵀR)⁻¹ via R⁻¹ columns.
    let mut covariance_diag = vec![0.0; cols];
    for j in 0..cols {
        // Solve R z = e_j, then (RᵀR)⁻¹_{ii} = Σ_j (R⁻¹)_{ij}².
        let mut z = vec![0.0; cols];
        for i in (0..=j).rev() {
            let mut acc = if i == j { 1.0 } else { 0.0 };
            for k in i + 1..=j {
                acc -= a[i * cols + k] * z[k];
            }
            z[i] = acc / a[i * cols + i];
        }
        for i in 0..cols {
            covariance_diag[i] += z[i] * z[i];
        }
    }
    let coeffs: Vec<ComplexArg> = c.iter().zip(&colscale).map(|(v, s)| v / s).collect();
    for (d, s) in covariance_diag.iter_mut().zip(&colscale) {
        *d /= s * s;
    }
    let residuals = (0..rows)
        .map(|i| {
            let fit: ComplexArg = (0..cols).map(|j| c[j] * scaled[i * cols + j]).sum();
            b[i] - fit
        })
        .collect();
    Some(LeastSquares { coeffs, residuals, condition, covariance_diag })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{c, cr};

    #[test]
    fn lu_det_and_solve() {
        let m = ComplexMatrix::from_fn(3, |i, j| {
            c((i + 2 * j) as f64 + if i == j { 4.0 } else { 0.0 }, (i as f64) - (j as f64))
        });
        let lu = m.lu().unwrap();
        let x = [c(1.0, -1.0), c(0.5, 2.0), cr(-3.0)];
        let b: Vec<ComplexArg> = (0..3).map(|i| (0..3).map(|j| m.get(i, j) * x[j]).sum()).collect();
        let got = lu.solve(&b);
        for (g, e) in got.iter().zip(x.iter()) {
            assert!((g - e).norm() < 1e-13);
        }
        let two = ComplexMatrix::from_fn(2, |i, j| cr([[1.0, 2.0], [3.0, 4.0]][i][j]));
        assert!((two.lu().unwrap().det() - cr(-2.0)).norm() < 1e-15);
        let singular = ComplexMatrix::from_fn(2, |i, j| cr([[1.0, 2.0], [2.0, 4.0]][i][j]));
        assert!(singular.lu().is_none());
    }

    #[test]
    fn hermitian_spectrum() {
        // [[2, i], [−i, 2]] has eigenvalues 1 and 3.
        let m = ComplexMatrix::from_fn(2, |i, j| match (i, j) {
            (0, 1) => c(0.0, 1.0),
            (1, 0) => c(0.0, -1.0),
            _ => cr(2.0),
        });
        let ev = m.hermitian_eigenvalues();
        assert!((ev[0] - 1.0).abs() < 1e-14 && (ev[1] - 3.0).abs() < 1e-14);
    }

    #[test]
    fn exact_fit() {
        let xs: [f64; 6] = [0.1, 0.2, 0.5, 1.0, 2.0, 4.0];
        let design: Vec<f64> = xs.iter().flat_map(|&x| [1.0 / x, x.ln(), 1.0]).collect();
        let b: Vec<ComplexArg> = xs.iter().map(|&x| c(3.0 / x - 0.5 * x.ln() + 2.0, 1.0)).collect();
        let ls = least_squares(&design, xs.len(), 3, &b).unwrap();
        assert!((ls.coeffs[0] - cr(3.0)).norm() < 1e-12);
        assert!((ls.coeffs[1] - cr(-0.5)).norm() < 1e-12);
        assert!((ls.coeffs[2] - c(2.0, 1.0)).norm() < 1e-12);
        assert!(ls.condition.is_finite() && ls.condition > 1.0);
        assert!(ls.residuals.iter().all(|r| r.norm() < 1e-12));
        let rank_deficient: Vec<f64> = xs.iter().flat_map(|&x| [x, 2.0 * x]).collect();
        assert!(least_squares(&rank_deficient, xs.len(), 2, &b).is_none_or(|l| l.condition > 1e12));
    }
}
