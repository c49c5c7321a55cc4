//! Dense complex linear algebra for small matrices.
//!
//! Everything here is sized for matrices of dimension at most ~100. Composite
//! systems use the row-major basis ordering `|ij> = |i> (x) |j>` at index
//! `i * dim_b + j`, and every other module relies on that ordering.

use std::fmt;
use std::ops::{Add, Index, Mul, Sub};

use num_complex::Complex64;
use thiserror::Error;

/// Complex scalar used throughout the crate.
pub type C64 = Complex64;

/// Absolute tolerance for algebraic identities.
pub const DEFAULT_TOL: f64 = 1e-10;
/// Relative tolerance for eigensolver residuals.
pub const EIG_TOL: f64 = 1e-9;

const JACOBI_MAX_SWEEPS: usize = 100;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum NumericsError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: String, got: String },
    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },
    #[error("incompatible factorization: {rows}x{cols} is not ({dim_a}*{dim_b}) square")]
    IncompatibleFactorization {
        rows: usize,
        cols: usize,
        dim_a: usize,
        dim_b: usize,
    },
    #[error("not Hermitian: ||H - H^dagger||_F = {residual:e}")]
    NotHermitian { residual: f64 },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("eigensolver did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
}

/// Shorthand for `C64::new(re, im)`.
#[inline]
pub fn c64(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// The primitive cube root of unity `e^{2 pi i / 3}`.
pub fn omega() -> C64 {
    C64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0)
}

/// Integer power of `omega()` reduced mod 3, so `omega_pow(3) == 1` exactly.
pub fn omega_pow(n: i64) -> C64 {
    match n.rem_euclid(3) {
        0 => c64(1.0, 0.0),
        1 => omega(),
        _ => omega().conj(),
    }
}

/// Dense row-major complex matrix.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<C64>,
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  ")?;
            for c in 0..self.cols {
                let z = self[(r, c)];
                write!(f, "{:>9.5}{:+.5}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl ComplexMatrix {
    /// Builds a matrix from row-major entries, rejecting wrong lengths and non-finite values.
    pub fn new(rows: usize, cols: usize, data: Vec<C64>) -> Result<Self, NumericsError> {
        if rows == 0 || cols == 0 || data.len() != rows * cols {
            return Err(NumericsError::DimensionMismatch {
                expected: format!("{rows}x{cols} positive with {} entries", rows * cols),
                got: format!("{} entries", data.len()),
            });
        }
        if let Some(pos) = data.iter().position(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(NumericsError::NonFinite {
                row: pos / cols,
                col: pos % cols,
            });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_real(rows: usize, cols: usize, data: &[f64]) -> Result<Self, NumericsError> {
        Self::new(rows, cols, data.iter().map(|&x| c64(x, 0.0)).collect())
    }

    /// Panics if `f` produces a non-finite entry.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self::new(rows, cols, data).expect("from_fn produced an invalid matrix")
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| C64::new(0.0, 0.0))
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| if r == c { c64(1.0, 0.0) } else { c64(0.0, 0.0) })
    }

    pub fn diag_real(values: &[f64]) -> Self {
        let n = values.len();
        Self::from_fn(n, n, |r, c| if r == c { c64(values[r], 0.0) } else { c64(0.0, 0.0) })
    }

    /// `|a><b|`
    pub fn outer(a: &[C64], b: &[C64]) -> Self {
        Self::from_fn(a.len(), b.len(), |r, c| a[r] * b[c].conj())
    }

    /// `|v><v|`
    pub fn projector(v: &[C64]) -> Self {
        Self::outer(v, v)
    }

    /// Projector onto a computational basis vector `|k><k|` in dimension `n`.
    pub fn basis_projector(n: usize, k: usize) -> Self {
        Self::from_fn(n, n, |r, c| {
            if r == k && c == k {
                c64(1.0, 0.0)
            } else {
                c64(0.0, 0.0)
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[C64] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> C64 {
        self.data[r * self.cols + c]
    }

    /// Returns a copy with one entry replaced.
    pub fn with_entry(&self, r: usize, c: usize, z: C64) -> Result<Self, NumericsError> {
        let mut data = self.data.clone();
        data[r * self.cols + c] = z;
        Self::new(self.rows, self.cols, data)
    }

    pub fn dagger(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).conj())
    }

    pub fn scale(&self, s: C64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&z| z * s).collect(),
        }
    }

    pub fn scale_real(&self, s: f64) -> Self {
        self.scale(c64(s, 0.0))
    }

    pub fn matmul(&self, other: &Self) -> Result<Self, NumericsError> {
        if self.cols != other.rows {
            return Err(NumericsError::DimensionMismatch {
                expected: format!("{} rows", self.cols),
                got: format!("{} rows", other.rows),
            });
        }
        let mut data = vec![c64(0.0, 0.0); self.rows * other.cols];
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == c64(0.0, 0.0) {
                    continue;
                }
                let row = &other.data[k * other.cols..(k + 1) * other.cols];
                for (c, b) in row.iter().enumerate() {
                    data[r * other.cols + c] += a * b;
                }
            }
        }
        Self::new(self.rows, other.cols, data)
    }

    pub fn apply(&self, v: &[C64]) -> Result<Vec<C64>, NumericsError> {
        if v.len() != self.cols {
            return Err(NumericsError::DimensionMismatch {
                expected: format!("vector of length {}", self.cols),
                got: format!("length {}", v.len()),
            });
        }
        Ok((0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c) * v[c]).sum())
            .collect())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(C64, C64) -> C64) -> Result<Self, NumericsError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(NumericsError::DimensionMismatch {
                expected: format!("{}x{}", self.rows, self.cols),
                got: format!("{}x{}", other.rows, other.cols),
            });
        }
        Self::new(
            self.rows,
            self.cols,
            self.data.iter().zip(&other.data).map(|(&a, &b)| f(a, b)).collect(),
        )
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, NumericsError> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, NumericsError> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn trace(&self) -> C64 {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest entrywise modulus.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest entrywise modulus of `self - other`; `inf` on shape mismatch.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.try_sub(other).map_or(f64::INFINITY, |d| d.max_abs())
    }

    /// Hilbert-Schmidt inner product `Tr(self^dagger other)`.
    pub fn hs_inner(&self, other: &Self) -> C64 {
        self.data.iter().zip(&other.data).map(|(a, b)| a.conj() * b).sum()
    }

    pub fn hermiticity_residual(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let mut s = 0.0;
        for r in 0..self.rows {
            for c in 0..self.cols {
                s += (self.get(r, c) - self.get(c, r).conj()).norm_sqr();
            }
        }
        s.sqrt()
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_residual() <= tol * self.frobenius_norm().max(1.0)
    }

    /// Real vectorization of a Hermitian matrix: diagonal, then `sqrt(2) Re`, `sqrt(2) Im`
    /// of the strict upper triangle. Isometric for the Hilbert-Schmidt inner product.
    pub fn hermitian_coordinates(&self) -> Vec<f64> {
        let n = self.rows;
        let mut out = Vec::with_capacity(n * n);
        for i in 0..n {
            out.push(self.get(i, i).re);
        }
        let s2 = std::f64::consts::SQRT_2;
        for i in 0..n {
            for j in i + 1..n {
                let z = self.get(i, j);
                out.push(s2 * z.re);
                out.push(s2 * z.im);
            }
        }
        out
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = C64;

    fn index(&self, (r, c): (usize, usize)) -> &C64 {
        &self.data[r * self.cols + c]
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.try_add(rhs).expect("shape mismatch in matrix addition")
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.try_sub(rhs).expect("shape mismatch in matrix subtraction")
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.matmul(rhs).expect("shape mismatch in matrix product")
    }
}

/// Kronecker product `a (x) b`.
pub fn tensor_product(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let rows = a.rows * b.rows;
    let cols = a.cols * b.cols;
    ComplexMatrix::from_fn(rows, cols, |r, c| {
        a.get(r / b.rows, c / b.cols) * b.get(r % b.rows, c % b.cols)
    })
}

/// Kronecker product of state vectors.
pub fn tensor_vec(a: &[C64], b: &[C64]) -> Vec<C64> {
    a.iter().flat_map(|&x| b.iter().map(move |&y| x * y)).collect()
}

/// Which factor of a bipartite system to trace out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TracedFactor {
    First,
    Second,
}

/// Partial trace of `m` on `C^dim_a (x) C^dim_b`, discarding `which`.
pub fn partial_trace(
    m: &ComplexMatrix,
    dim_a: usize,
    dim_b: usize,
    which: TracedFactor,
) -> Result<ComplexMatrix, NumericsError> {
    let d = dim_a * dim_b;
    if dim_a == 0 || dim_b == 0 || m.rows != d || m.cols != d {
        return Err(NumericsError::IncompatibleFactorization {
            rows: m.rows,
            cols: m.cols,
            dim_a,
            dim_b,
        });
    }
    Ok(match which {
        TracedFactor::Second => ComplexMatrix::from_fn(dim_a, dim_a, |i, k| {
            (0..dim_b).map(|j| m.get(i * dim_b + j, k * dim_b + j)).sum()
        }),
        TracedFactor::First => ComplexMatrix::from_fn(dim_b, dim_b, |j, l| {
            (0..dim_a).map(|i| m.get(i * dim_b + j, i * dim_b + l)).sum()
        }),
    })
}

/// Permutation matrix reordering tensor factors: factor `k` of the output is factor
/// `perm[k]` of the input. Dimensions are those of the input factors.
pub fn factor_permutation(dims: &[usize], perm: &[usize]) -> Result<ComplexMatrix, NumericsError> {
    let mut seen = vec![false; dims.len()];
    if perm.len() != dims.len() || perm.iter().any(|&p| p >= dims.len() || std::mem::replace(&mut seen[p], true)) {
        return Err(NumericsError::DimensionMismatch {
            expected: format!("a permutation of 0..{}", dims.len()),
            got: format!("{perm:?}"),
        });
    }
    let total: usize = dims.iter().product();
    let out_dims: Vec<usize> = perm.iter().map(|&p| dims[p]).collect();
    let mut data = vec![c64(0.0, 0.0); total * total];
    let mut digits = vec![0usize; dims.len()];
    for input in 0..total {
        // mixed-radix digits of the input index, most significant first
        let mut rem = input;
        for k in (0..dims.len()).rev() {
            digits[k] = rem % dims[k];
            rem /= dims[k];
        }
        let mut output = 0;
        for (k, &p) in perm.iter().enumerate() {
            output = output * out_dims[k] + digits[p];
        }
        data[output * total + input] = c64(1.0, 0.0);
    }
    ComplexMatrix::new(total, total, data)
}

/// Conjugates `m` by the factor permutation: `P m P^dagger`.
pub fn permute_factors(
    m: &ComplexMatrix,
    dims: &[usize],
    perm: &[usize],
) -> Result<ComplexMatrix, NumericsError> {
    let p = factor_permutation(dims, perm)?;
    p.matmul(m)?.matmul(&p.dagger())
}

/// Spectral decomposition of a Hermitian matrix.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    /// Sorted in descending order.
    pub eigenvalues: Vec<f64>,
    /// Unitary; column `k` pairs with `eigenvalues[k]`.
    pub eigenvectors: ComplexMatrix,
}

impl EigenDecomposition {
    pub fn reconstruct(&self) -> ComplexMatrix {
        let v = &self.eigenvectors;
        let lam = ComplexMatrix::diag_real(&self.eigenvalues);
        &(v * &lam) * &v.dagger()
    }

    pub fn max_eigenvalue(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn min_eigenvalue(&self) -> f64 {
        *self.eigenvalues.last().expect("non-empty spectrum")
    }
}

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi rotations.
pub fn eig_hermitian(h: &ComplexMatrix) -> Result<EigenDecomposition, NumericsError> {
    if !h.is_square() {
        return Err(NumericsError::NotSquare {
            rows: h.rows,
            cols: h.cols,
        });
    }
    let scale = h.frobenius_norm().max(1.0);
    let residual = h.hermiticity_residual();
    if residual > 1e-10 * scale {
        return Err(NumericsError::NotHermitian { residual });
    }
    let n = h.rows;
    // work on the exactly Hermitian part
    let mut a: Vec<C64> = (0..n * n)
        .map(|idx| {
            let (r, c) = (idx / n, idx % n);
            (h.get(r, c) + h.get(c, r).conj()) * 0.5
        })
        .collect();
    let mut v: Vec<C64> = ComplexMatrix::identity(n).data;

    let off_norm = |a: &[C64]| -> f64 {
        let mut s = 0.0;
        for r in 0..n {
            for c in 0..n {
                if r != c {
                    s += a[r * n + c].norm_sqr();
                }
            }
        }
        s.sqrt()
    };

    let threshold = f64::EPSILON * scale * 1e-2;
    let mut converged = n < 2;
    for _ in 0..JACOBI_MAX_SWEEPS {
        if off_norm(&a) <= threshold {
            converged = true;
            break;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[p * n + q];
                let r = apq.norm();
                if r <= f64::MIN_POSITIVE {
                    continue;
                }
                let phase = apq / r;
                let app = a[p * n + p].re;
                let aqq = a[q * n + q].re;
                let theta = (aqq - app) / (2.0 * r);
                let t = if theta.is_infinite() {
                    0.0
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let cs = 1.0 / (t * t + 1.0).sqrt();
                let sn = t * cs;
                // plane block W = diag(1, conj(phase)) * [[c, s], [-s, c]]
                let w_pp = c64(cs, 0.0);
                let w_pq = c64(sn, 0.0);
                let w_qp = -phase.conj() * sn;
                let w_qq = phase.conj() * cs;
                // A <- A W
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = akp * w_pp + akq * w_qp;
                    a[k * n + q] = akp * w_pq + akq * w_qq;
                }
                // A <- W^dagger A
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = w_pp.conj() * apk + w_qp.conj() * aqk;
                    a[q * n + k] = w_pq.conj() * apk + w_qq.conj() * aqk;
                }
                a[p * n + q] = c64(0.0, 0.0);
                a[q * n + p] = c64(0.0, 0.0);
                a[p * n + p].im = 0.0;
                a[q * n + q].im = 0.0;
                // V <- V W
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = vkp * w_pp + vkq * w_qp;
                    v[k * n + q] = vkp * w_pq + vkq * w_qq;
                }
            }
        }
    }
    if !converged && off_norm(&a) > threshold {
        return Err(NumericsError::NoConvergence {
            sweeps: JACOBI_MAX_SWEEPS,
        });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| a[y * n + y].re.total_cmp(&a[x * n + x].re));
    let eigenvalues = order.iter().map(|&k| a[k * n + k].re).collect();
    let eigenvectors = ComplexMatrix::from_fn(n, n, |r, c| v[r * n + order[c]]);
    Ok(EigenDecomposition {
        eigenvalues,
        eigenvectors,
    })
}

/// `||U^dagger U - I||_F <= tol`.
pub fn is_unitary(u: &ComplexMatrix, tol: f64) -> bool {
    if !u.is_square() {
        return false;
    }
    let gram = &u.dagger() * u;
    (&gram - &ComplexMatrix::identity(u.rows)).frobenius_norm() <= tol
}

/// Numerical rank of a set of real vectors (rows), by Gaussian elimination with full
/// pivoting. Pivots below `rel_tol` times the largest entry count as zero.
pub fn numerical_rank(rows: &[Vec<f64>], rel_tol: f64) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let width = rows[0].len();
    let mut m: Vec<Vec<f64>> = rows.to_vec();
    let scale = m
        .iter()
        .flat_map(|r| r.iter())
        .fold(0.0f64, |acc, x| acc.max(x.abs()));
    if scale == 0.0 {
        return 0;
    }
    let cutoff = rel_tol * scale;
    let mut rank = 0;
    let mut col_used = vec![false; width];
    for row in 0..m.len() {
        // pivot: largest remaining entry in rows row.. and unused columns
        let mut best = (0.0, row, 0);
        for (r, vals) in m.iter().enumerate().skip(row) {
            for (c, &x) in vals.iter().enumerate() {
                if !col_used[c] && x.abs() > best.0 {
                    best = (x.abs(), r, c);
                }
            }
        }
        if best.0 <= cutoff {
            break;
        }
        let (_, pr, pc) = best;
        m.swap(row, pr);
        col_used[pc] = true;
        let pivot_row = m[row].clone();
        for r in m.iter_mut().skip(row + 1) {
            let f = r[pc] / pivot_row[pc];
            if f != 0.0 {
                for (x, p) in r.iter_mut().zip(&pivot_row) {
                    *x -= f * p;
                }
            }
        }
        rank += 1;
    }
    rank
}
