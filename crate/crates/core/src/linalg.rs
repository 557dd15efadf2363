//! Dense symmetric matrices and a cyclic Jacobi eigensolver.

use std::sync::atomic::{AtomicU64, Ordering};

use serde::Serialize;

use crate::error::{Error, Result};

pub const DEFAULT_TOL: f64 = 1e-12;
const MAX_SWEEPS: usize = 100;

// bit pattern of the process-wide tolerance; 0 means unset
static TOLERANCE: AtomicU64 = AtomicU64::new(0);

/// Eigensolver tolerance used by the high-level routines.
pub fn tolerance() -> f64 {
    match TOLERANCE.load(Ordering::Relaxed) {
        0 => DEFAULT_TOL,
        bits => f64::from_bits(bits),
    }
}

/// Overrides [`tolerance`] for the whole process. Non-positive or
/// non-finite values restore the default.
pub fn set_tolerance(tol: f64) {
    let bits = if tol.is_finite() && tol > 0.0 { tol.to_bits() } else { 0 };
    TOLERANCE.store(bits, Ordering::Relaxed);
}

/// Row-major dense square matrix. Symmetry is checked by the solver, not
/// enforced on construction.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymmetricMatrix {
    pub fn zeros(n: usize) -> Self {
        SymmetricMatrix { n, data: vec![0.0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, 1.0);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Self {
        let n = rows.len();
        let mut m = Self::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n, "row {i} has wrong length");
            m.data[i * n..(i + 1) * n].copy_from_slice(row);
        }
        m
    }

    pub fn diagonal(values: &[f64]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, &v) in values.iter().enumerate() {
            m.set(i, i, v);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
    }

    /// Sets both `(i, j)` and `(j, i)`.
    pub fn set_sym(&mut self, i: usize, j: usize, v: f64) {
        self.set(i, j, v);
        self.set(j, i, v);
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.data.chunks(self.n.max(1)).take(self.n).map(<[f64]>::to_vec).collect()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn max_asymmetry(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                worst = worst.max((self.get(i, j) - self.get(j, i)).abs());
            }
        }
        worst
    }

    pub fn scaled(&self, s: f64) -> Self {
        SymmetricMatrix { n: self.n, data: self.data.iter().map(|x| x * s).collect() }
    }

    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j) * v[j]).sum()).collect()
    }

    fn off_diagonal_norm(&self) -> f64 {
        let mut s = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j {
                    s += self.get(i, j).powi(2);
                }
            }
        }
        s.sqrt()
    }
}

impl Serialize for SymmetricMatrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(serializer)
    }
}

/// Eigenvalues sorted ascending, with the worst relative residual
/// `‖Av − αv‖ / ‖A‖` observed over all eigenpairs.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Spectrum {
    pub values: Vec<f64>,
    pub residual: f64,
}

impl Spectrum {
    /// `values[i - 1]`, i.e. one-based like α₁ ≤ α₂ ≤ …
    pub fn nth(&self, i: usize) -> f64 {
        self.values[i - 1]
    }

    /// Number of eigenvalues within `tol` of zero.
    pub fn zero_count(&self, tol: f64) -> usize {
        self.values.iter().filter(|v| v.abs() <= tol).count()
    }
}

/// Full eigen-decomposition: ascending eigenvalues and matching unit
/// eigenvectors (as columns, `vectors[k]` is the k-th eigenvector).
pub fn eigen_sym(a: &SymmetricMatrix, tol: f64) -> Result<(Vec<f64>, Vec<Vec<f64>>)> {
    let n = a.dim();
    let scale = a.frobenius_norm().max(f64::MIN_POSITIVE);
    let asym = a.max_asymmetry();
    if asym > tol.max(1e-14) * scale {
        return Err(Error::NotSymmetric(asym));
    }
    let mut m = a.clone();
    for i in 0..n {
        for j in i + 1..n {
            let avg = 0.5 * (m.get(i, j) + m.get(j, i));
            m.set_sym(i, j, avg);
        }
    }
    let mut v = SymmetricMatrix::identity(n);
    let mut sweeps = 0;
    while m.off_diagonal_norm() > tol * scale {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence(sweeps));
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut m, &mut v, p, q);
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m.get(i, i).total_cmp(&m.get(j, j)));
    let values = order.iter().map(|&i| m.get(i, i)).collect();
    let vectors = order.iter().map(|&k| (0..n).map(|r| v.get(r, k)).collect()).collect();
    Ok((values, vectors))
}

/// One Jacobi rotation annihilating entry `(p, q)`.
fn rotate(m: &mut SymmetricMatrix, v: &mut SymmetricMatrix, p: usize, q: usize) {
    let apq = m.get(p, q);
    if apq == 0.0 {
        return;
    }
    let app = m.get(p, p);
    let aqq = m.get(q, q);
    let theta = (aqq - app) / (2.0 * apq);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let t = if theta == 0.0 { 1.0 } else { t };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    let n = m.dim();
    for k in 0..n {
        let mkp = m.get(k, p);
        let mkq = m.get(k, q);
        m.set(k, p, c * mkp - s * mkq);
        m.set(k, q, s * mkp + c * mkq);
    }
    for k in 0..n {
        let mpk = m.get(p, k);
        let mqk = m.get(q, k);
        m.set(p, k, c * mpk - s * mqk);
        m.set(q, k, s * mpk + c * mqk);
    }
    m.set_sym(p, q, 0.0);
    for k in 0..n {
        let vkp = v.get(k, p);
        let vkq = v.get(k, q);
        v.set(k, p, c * vkp - s * vkq);
        v.set(k, q, s * vkp + c * vkq);
    }
}

/// All eigenvalues of a symmetric matrix, ascending, with residual check.
pub fn eigenvalues_sym(a: &SymmetricMatrix, tol: f64) -> Result<Spectrum> {
    let (values, vectors) = eigen_sym(a, tol)?;
    let norm = a.frobenius_norm().max(f64::MIN_POSITIVE);
    let mut residual: f64 = 0.0;
    for (lambda, vec) in values.iter().zip(&vectors) {
        let av = a.mul_vec(vec);
        let r = av.iter().zip(vec).map(|(x, y)| (x - lambda * y).powi(2)).sum::<f64>().sqrt();
        residual = residual.max(r / norm);
    }
    Ok(Spectrum { values, residual })
}

/// Cholesky factor `L` (lower triangular, row-major) of an SPD matrix.
pub(crate) fn cholesky(a: &SymmetricMatrix) -> Option<SymmetricMatrix> {
    let n = a.dim();
    let mut l = SymmetricMatrix::zeros(n);
    for j in 0..n {
        let mut d = a.get(j, j);
        for k in 0..j {
            d -= l.get(j, k).powi(2);
        }
        if d <= 0.0 || !d.is_finite() {
            return None;
        }
        let d = d.sqrt();
        l.set(j, j, d);
        for i in j + 1..n {
            let mut s = a.get(i, j);
            for k in 0..j {
                s -= l.get(i, k) * l.get(j, k);
            }
            l.set(i, j, s / d);
        }
    }
    Some(l)
}

/// Solves `L Lᵀ x = b` in place given the Cholesky factor.
pub(crate) fn cholesky_solve(l: &SymmetricMatrix, b: &mut [f64]) {
    let n = l.dim();
    for i in 0..n {
        let mut s = b[i];
        for k in 0..i {
            s -= l.get(i, k) * b[k];
        }
        b[i] = s / l.get(i, i);
    }
    for i in (0..n).rev() {
        let mut s = b[i];
        for k in i + 1..n {
            s -= l.get(k, i) * b[k];
        }
        b[i] = s / l.get(i, i);
    }
}
