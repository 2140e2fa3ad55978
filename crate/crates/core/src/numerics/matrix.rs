//! Small dense symmetric matrices: storage, Jacobi eigenvalues, inverse,
//! and the trace-scaled PSD test used for information and variance matrices.

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum MatrixError {
    #[error("matrix of dim {dim} is singular (pivot {pivot:e})")]
    Singular { dim: usize, pivot: f64 },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

/// Symmetric p x p matrix. Symmetry is exact by storage: only the lower
/// triangle is kept.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SymMatrix {
    dim: usize,
    // Row-major lower triangle: (i, j) with j <= i at index i*(i+1)/2 + j.
    lower: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(dim: usize) -> Self {
        SymMatrix {
            dim,
            lower: vec![0.0; dim * (dim + 1) / 2],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = SymMatrix::zeros(dim);
        for i in 0..dim {
            m.set(i, i, 1.0);
        }
        m
    }

    /// Build from an entry function; `f(i, j)` is only called for j <= i.
    pub fn from_fn<F: FnMut(usize, usize) -> f64>(dim: usize, mut f: F) -> Self {
        let mut m = SymMatrix::zeros(dim);
        for i in 0..dim {
            for j in 0..=i {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    fn idx(&self, i: usize, j: usize) -> usize {
        let (i, j) = if j <= i { (i, j) } else { (j, i) };
        i * (i + 1) / 2 + j
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.lower[self.idx(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        let k = self.idx(i, j);
        self.lower[k] = v;
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn scaled(&self, s: f64) -> SymMatrix {
        SymMatrix {
            dim: self.dim,
            lower: self.lower.iter().map(|v| v * s).collect(),
        }
    }

    pub fn sub(&self, other: &SymMatrix) -> SymMatrix {
        assert_eq!(self.dim, other.dim);
        SymMatrix {
            dim: self.dim,
            lower: self
                .lower
                .iter()
                .zip(&other.lower)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.get(i, j)).collect())
            .collect()
    }

    pub fn frobenius_norm(&self) -> f64 {
        let mut acc = 0.0;
        for i in 0..self.dim {
            for j in 0..self.dim {
                let v = self.get(i, j);
                acc += v * v;
            }
        }
        acc.sqrt()
    }

    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(v.len(), self.dim);
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }

    /// Eigenvalues in ascending order via cyclic Jacobi rotations.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let n = self.dim;
        if n == 0 {
            return Vec::new();
        }
        if n == 1 {
            return vec![self.get(0, 0)];
        }
        let mut a = vec![vec![0.0; n]; n];
        for i in 0..n {
            for j in 0..n {
                a[i][j] = self.get(i, j);
            }
        }
        for _sweep in 0..100 {
            let mut off = 0.0;
            for i in 0..n {
                for j in (i + 1)..n {
                    off += a[i][j] * a[i][j];
                }
            }
            let scale = self.trace().abs().max(self.frobenius_norm()).max(1e-300);
            if off.sqrt() <= 1e-15 * scale {
                break;
            }
            for p in 0..n {
                for q in (p + 1)..n {
                    if a[p][q].abs() <= 1e-300 {
                        continue;
                    }
                    let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                    let c = 1.0 / (t * t + 1.0).sqrt();
                    let s = t * c;
                    for k in 0..n {
                        let akp = a[k][p];
                        let akq = a[k][q];
                        a[k][p] = c * akp - s * akq;
                        a[k][q] = s * akp + c * akq;
                    }
                    for k in 0..n {
                        let apk = a[p][k];
                        let aqk = a[q][k];
                        a[p][k] = c * apk - s * aqk;
                        a[q][k] = s * apk + c * aqk;
                    }
                }
            }
        }
        let mut eigs: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
        eigs.sort_by(|x, y| x.partial_cmp(y).unwrap());
        eigs
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues().first().copied().unwrap_or(0.0)
    }

    /// PSD test with an eigenvalue floor relative to the trace scale, so the
    /// verdict does not depend on an overall factor (G_W grows like n).
    pub fn is_psd(&self, rel_tol: f64) -> bool {
        let scale = self.trace().abs().max(self.frobenius_norm()).max(1e-300);
        self.min_eigenvalue() >= -rel_tol * scale
    }

    /// Inverse by Gauss-Jordan with partial pivoting.
    pub fn inverse(&self) -> Result<SymMatrix, MatrixError> {
        let n = self.dim;
        let mut a = vec![vec![0.0; 2 * n]; n];
        for i in 0..n {
            for j in 0..n {
                a[i][j] = self.get(i, j);
            }
            a[i][n + i] = 1.0;
        }
        for col in 0..n {
            let (piv, piv_val) = (col..n)
                .map(|r| (r, a[r][col].abs()))
                .max_by(|x, y| x.1.partial_cmp(&y.1).unwrap())
                .unwrap();
            if piv_val < 1e-300 {
                return Err(MatrixError::Singular {
                    dim: n,
                    pivot: piv_val,
                });
            }
            a.swap(col, piv);
            let d = a[col][col];
            for v in a[col].iter_mut() {
                *v /= d;
            }
            for r in 0..n {
                if r != col {
                    let factor = a[r][col];
                    if factor != 0.0 {
                        for c in 0..2 * n {
                            a[r][c] -= factor * a[col][c];
                        }
                    }
                }
            }
        }
        // Re-symmetrize: round-off can break exact symmetry of the result.
        Ok(SymMatrix::from_fn(n, |i, j| {
            0.5 * (a[i][n + j] + a[j][n + i])
        }))
    }
}
