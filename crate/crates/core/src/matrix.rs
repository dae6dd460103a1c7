//! Dense symmetric matrices and the cyclic Jacobi eigensolver that serves as
//! the numeric oracle for every spectral formula in the crate.

use crate::error::{Error, Result};
use crate::graph::{Graph, MatrixKind};

/// Dense square matrix, row-major `f64` storage.
#[derive(Debug, Clone, PartialEq)]
pub struct SquareMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SquareMatrix {
    pub fn zeros(n: usize) -> Self {
        SquareMatrix { n, data: vec![0.0; n * n] }
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Self {
        let n = rows.len();
        let mut m = SquareMatrix::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n, "row {i} has wrong length");
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.n + j] = value;
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn max_asymmetry(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.n {
            for j in i + 1..self.n {
                worst = worst.max((self.get(i, j) - self.get(j, i)).abs());
            }
        }
        worst
    }

    fn off_diagonal_frobenius_sq(&self) -> f64 {
        let mut sum = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j {
                    let x = self.get(i, j);
                    sum += x * x;
                }
            }
        }
        sum
    }
}

/// Builds `L(G) = D - A` or `Q(G) = D + A`.
pub fn graph_matrix(g: &Graph, kind: MatrixKind) -> SquareMatrix {
    let n = g.vertex_count();
    let sign = match kind {
        MatrixKind::Laplacian => -1.0,
        MatrixKind::SignlessLaplacian => 1.0,
    };
    let mut m = SquareMatrix::zeros(n);
    for &(u, v) in g.edges() {
        m.set(u, v, sign);
        m.set(v, u, sign);
        m.set(u, u, m.get(u, u) + 1.0);
        m.set(v, v, m.get(v, v) + 1.0);
    }
    m
}

/// Eigenvalues of a symmetric matrix by the cyclic Jacobi rotation method.
///
/// Sweeps row-by-row over all upper-triangle pairs, annihilating each entry
/// with a plane rotation, until the off-diagonal Frobenius norm drops below
/// `tol`. Returns the eigenvalues sorted ascending. Deterministic for a given
/// input: fixed sweep order, no pivot searching.
///
/// Errors: `NotSymmetric` when the input is asymmetric beyond `tol`;
/// `NoConvergence` past the sweep cap of `100 n^2`.
pub fn jacobi_eigenvalues(matrix: &SquareMatrix, tol: f64) -> Result<Vec<f64>> {
    let n = matrix.size();
    if n == 0 {
        return Ok(Vec::new());
    }
    let asym = matrix.max_asymmetry();
    if asym > tol {
        return Err(Error::NotSymmetric(asym));
    }
    let mut a = matrix.clone();
    if n == 1 {
        return Ok(vec![a.get(0, 0)]);
    }

    let max_sweeps = 100 * n * n;
    let tol_sq = tol * tol;
    for _ in 0..max_sweeps {
        if a.off_diagonal_frobenius_sq() < tol_sq {
            let mut vals: Vec<f64> = (0..n).map(|i| a.get(i, i)).collect();
            vals.sort_unstable_by(f64::total_cmp);
            return Ok(vals);
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a.get(p, q);
                if apq == 0.0 {
                    continue;
                }
                let app = a.get(p, p);
                let aqq = a.get(q, q);
                let theta = 0.5 * (aqq - app) / apq;
                // smaller-magnitude tangent keeps the rotation angle <= pi/4
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    let sign = if theta >= 0.0 { 1.0 } else { -1.0 };
                    sign / (theta.abs() + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);

                a.set(p, p, app - t * apq);
                a.set(q, q, aqq + t * apq);
                a.set(p, q, 0.0);
                a.set(q, p, 0.0);
                for j in 0..n {
                    if j == p || j == q {
                        continue;
                    }
                    let ajp = a.get(j, p);
                    let ajq = a.get(j, q);
                    let new_jp = ajp - s * (ajq + tau * ajp);
                    let new_jq = ajq + s * (ajp - tau * ajq);
                    a.set(j, p, new_jp);
                    a.set(p, j, new_jp);
                    a.set(j, q, new_jq);
                    a.set(q, j, new_jq);
                }
            }
        }
    }
    Err(Error::NoConvergence(max_sweeps))
}
