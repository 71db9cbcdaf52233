//! Dense complex matrices and the Hermitian spectral routines built on them.
//!
//! Eigen-decompositions use cyclic complex Jacobi rotations and singular value
//! decompositions use one-sided (Hestenes) Jacobi. Both are generic over
//! [`Real`] and accurate to working precision for the small dimensions used
//! here (d ≤ 64).

use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{lit, Real};

const MAX_SWEEPS: usize = 100;

/// Row-major dense complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<Complex<T>>,
}

impl<T: Real> ComplexMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Complex::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex<T>) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Builds a matrix from row-major entries, rejecting non-finite values.
    pub fn from_row_major(rows: usize, cols: usize, data: Vec<Complex<T>>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::LengthMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        if let Some(i) = data.iter().position(|z| !(z.re.is_finite() && z.im.is_finite())) {
            return Err(Error::NonFinite(i));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_diagonal(diag: &[T]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, &x) in diag.iter().enumerate() {
            m[(i, i)] = Complex::new(x, T::zero());
        }
        m
    }

    /// `|v⟩⟨v|` for a column vector `v`.
    pub fn outer(v: &[Complex<T>]) -> Self {
        Self::from_fn(v.len(), v.len(), |i, j| v[i] * v[j].conj())
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

    pub fn as_slice(&self) -> &[Complex<T>] {
        &self.data
    }

    pub fn into_vec(self) -> Vec<Complex<T>> {
        self.data
    }

    pub fn row(&self, i: usize) -> &[Complex<T>] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Complex<T>> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn conj(&self) -> Self {
        self.map(|z| z.conj())
    }

    pub fn map(&self, f: impl Fn(Complex<T>) -> Complex<T>) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&z| f(z)).collect(),
        }
    }

    pub fn scale(&self, s: T) -> Self {
        self.map(|z| z * s)
    }

    pub fn trace(&self) -> Complex<T> {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    pub fn diagonal(&self) -> Vec<Complex<T>> {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).collect()
    }

    pub fn frobenius_norm(&self) -> T {
        self.data.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt()
    }

    /// Largest entrywise modulus.
    pub fn max_abs(&self) -> T {
        self.data.iter().fold(T::zero(), |m, z| m.max(z.norm()))
    }

    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "matmul shape mismatch");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                let rrow = rhs.row(k);
                let orow = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
                for (o, &b) in orow.iter_mut().zip(rrow) {
                    *o += a * b;
                }
            }
        }
        out
    }

    pub fn matvec(&self, v: &[Complex<T>]) -> Vec<Complex<T>> {
        assert_eq!(self.cols, v.len(), "matvec shape mismatch");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(&a, &b)| a * b).sum())
            .collect()
    }

    /// Kronecker product `self ⊗ rhs`.
    pub fn kron(&self, rhs: &Self) -> Self {
        Self::from_fn(self.rows * rhs.rows, self.cols * rhs.cols, |i, j| {
            self[(i / rhs.rows, j / rhs.cols)] * rhs[(i % rhs.rows, j % rhs.cols)]
        })
    }

    /// `U A U†`.
    pub fn conjugate_by(&self, u: &Self) -> Self {
        u.matmul(self).matmul(&u.adjoint())
    }

    /// Largest deviation from Hermiticity, `max |a_jk - conj(a_kj)|`.
    pub fn hermiticity_violation(&self) -> T {
        let mut worst = T::zero();
        for i in 0..self.rows {
            for j in i..self.cols {
                worst = worst.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        worst
    }

    /// `(A + A†) / 2`.
    pub fn hermitian_part(&self) -> Self {
        let half = lit::<T>(0.5);
        Self::from_fn(self.rows, self.cols, |i, j| (self[(i, j)] + self[(j, i)].conj()) * half)
    }

    /// Largest deviation of `A†A` from the identity.
    pub fn unitarity_violation(&self) -> T {
        let g = self.adjoint().matmul(self);
        (&g - &Self::identity(self.cols)).max_abs()
    }
}

impl<T> Index<(usize, usize)> for ComplexMatrix<T> {
    type Output = Complex<T>;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Complex<T> {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for ComplexMatrix<T> {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex<T> {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Real> Add for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;
    fn add(self, rhs: Self) -> ComplexMatrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(&a, &b)| a + b).collect(),
        }
    }
}

impl<T: Real> Sub for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;
    fn sub(self, rhs: Self) -> ComplexMatrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(&a, &b)| a - b).collect(),
        }
    }
}

impl<T: Real> Mul for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;
    fn mul(self, rhs: Self) -> ComplexMatrix<T> {
        self.matmul(rhs)
    }
}

/// Spectral decomposition `A = V diag(values) V†` of a Hermitian matrix.
#[derive(Debug, Clone)]
pub struct HermitianEigen<T> {
    /// Eigenvalues in descending order (ties keep their Jacobi index order).
    pub values: Vec<T>,
    /// Eigenvectors as columns, matching `values`.
    pub vectors: ComplexMatrix<T>,
}

impl<T: Real> HermitianEigen<T> {
    /// Rebuilds `V f(Λ) V†` for a function applied to the eigenvalues.
    pub fn reconstruct_with(&self, f: impl Fn(T) -> T) -> ComplexMatrix<T> {
        let n = self.values.len();
        let mapped: Vec<T> = self.values.iter().map(|&x| f(x)).collect();
        let v = &self.vectors;
        ComplexMatrix::from_fn(n, n, |i, j| {
            (0..n).map(|k| v[(i, k)] * v[(j, k)].conj() * mapped[k]).sum()
        })
    }

    pub fn vector(&self, k: usize) -> Vec<Complex<T>> {
        self.vectors.column(k)
    }
}

/// 2×2 unitary `J` (acting on coordinates `p`, `q`) such that `J† G J` is
/// diagonal, where `G = [[app, apq], [conj(apq), aqq]]`.
#[derive(Debug, Clone, Copy)]
struct Rotation<T> {
    pp: Complex<T>,
    pq: Complex<T>,
    qp: Complex<T>,
    qq: Complex<T>,
}

impl<T: Real> Rotation<T> {
    fn diagonalizing(app: T, aqq: T, apq: Complex<T>) -> Self {
        let mag = apq.norm();
        let phase = apq / mag;
        let theta = (aqq - app) / (lit::<T>(2.0) * mag);
        let t = if theta >= T::zero() {
            T::one() / (theta + (T::one() + theta * theta).sqrt())
        } else {
            -T::one() / (-theta + (T::one() + theta * theta).sqrt())
        };
        let c = T::one() / (T::one() + t * t).sqrt();
        let s = t * c;
        let ph = phase.conj();
        Self {
            pp: Complex::new(c, T::zero()),
            pq: Complex::new(s, T::zero()),
            qp: ph * (-s),
            qq: ph * c,
        }
    }

    /// Right-multiplies columns `p`, `q` of `m` by this rotation.
    fn apply_columns(&self, m: &mut ComplexMatrix<T>, p: usize, q: usize) {
        for k in 0..m.rows {
            let a = m[(k, p)];
            let b = m[(k, q)];
            m[(k, p)] = a * self.pp + b * self.qp;
            m[(k, q)] = a * self.pq + b * self.qq;
        }
    }

    /// Left-multiplies rows `p`, `q` of `m` by the adjoint of this rotation.
    fn apply_rows_adjoint(&self, m: &mut ComplexMatrix<T>, p: usize, q: usize) {
        for k in 0..m.cols {
            let a = m[(p, k)];
            let b = m[(q, k)];
            m[(p, k)] = self.pp.conj() * a + self.qp.conj() * b;
            m[(q, k)] = self.pq.conj() * a + self.qq.conj() * b;
        }
    }
}

fn off_diagonal_norm_sqr<T: Real>(a: &ComplexMatrix<T>) -> T {
    let mut s = T::zero();
    for i in 0..a.rows {
        for j in 0..a.cols {
            if i != j {
                s += a[(i, j)].norm_sqr();
            }
        }
    }
    s
}

fn jacobi<T: Real>(a: &ComplexMatrix<T>, want_vectors: bool) -> (Vec<T>, Option<ComplexMatrix<T>>) {
    assert!(a.is_square(), "eigendecomposition needs a square matrix");
    let n = a.rows;
    let mut m = a.hermitian_part();
    let mut v = want_vectors.then(|| ComplexMatrix::identity(n));
    let total = m.frobenius_norm().powi(2);
    let target = total * T::epsilon() * T::epsilon();
    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm_sqr(&m) <= target {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m[(p, q)];
                if apq.norm_sqr() <= target * lit::<T>(1e-4) {
                    continue;
                }
                let rot = Rotation::diagonalizing(m[(p, p)].re, m[(q, q)].re, apq);
                rot.apply_columns(&mut m, p, q);
                rot.apply_rows_adjoint(&mut m, p, q);
                m[(p, q)] = Complex::zero();
                m[(q, p)] = Complex::zero();
                m[(p, p)].im = T::zero();
                m[(q, q)].im = T::zero();
                if let Some(v) = v.as_mut() {
                    rot.apply_columns(v, p, q);
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        m[(j, j)]
            .re
            .partial_cmp(&m[(i, i)].re)
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    let values = order.iter().map(|&i| m[(i, i)].re).collect();
    let vectors = v.map(|v| ComplexMatrix::from_fn(n, n, |i, j| v[(i, order[j])]));
    (values, vectors)
}

/// Eigen-decomposition of the Hermitian part of `a`.
pub fn eigh<T: Real>(a: &ComplexMatrix<T>) -> HermitianEigen<T> {
    let (values, vectors) = jacobi(a, true);
    HermitianEigen {
        values,
        vectors: vectors.expect("vectors requested"),
    }
}

/// Eigenvalues (descending) of the Hermitian part of `a`.
pub fn eigvalsh<T: Real>(a: &ComplexMatrix<T>) -> Vec<T> {
    jacobi(a, false).0
}

/// Thin singular value decomposition `M = Σ_k σ_k u_k v_k†`.
#[derive(Debug, Clone)]
pub struct Svd<T> {
    /// Singular values, descending, length `min(rows, cols)`.
    pub values: Vec<T>,
    /// Left singular vectors (length `rows` each); orthonormal.
    pub left: Vec<Vec<Complex<T>>>,
    /// Right singular vectors (length `cols` each); orthonormal.
    pub right: Vec<Vec<Complex<T>>>,
}

fn dot<T: Real>(a: &[Complex<T>], b: &[Complex<T>]) -> Complex<T> {
    a.iter().zip(b).map(|(&x, &y)| x.conj() * y).sum()
}

fn vec_norm<T: Real>(a: &[Complex<T>]) -> T {
    a.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt()
}

/// Extends `basis` (orthonormal vectors of length `dim`) with unit vectors
/// orthogonal to every existing element, drawing candidates from the
/// standard basis.
fn complete_basis<T: Real>(basis: &mut Vec<Vec<Complex<T>>>, dim: usize, target: usize) {
    let mut candidate = 0;
    while basis.len() < target && candidate < dim {
        let mut v = vec![Complex::zero(); dim];
        v[candidate] = Complex::one();
        candidate += 1;
        for _ in 0..2 {
            for b in basis.iter() {
                let c = dot(b, &v);
                for (x, &y) in v.iter_mut().zip(b) {
                    *x -= c * y;
                }
            }
        }
        let n = vec_norm(&v);
        if n > lit(1e-3) {
            basis.push(v.into_iter().map(|z| z / n).collect());
        }
    }
}

/// One-sided Jacobi SVD.
pub fn svd<T: Real>(m: &ComplexMatrix<T>) -> Svd<T> {
    let rows = m.rows;
    let cols = m.cols;
    let mut x = m.clone();
    let mut v = ComplexMatrix::identity(cols);
    let eps = T::epsilon();
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..cols {
            for q in (p + 1)..cols {
                let (mut alpha, mut beta, mut gamma) = (T::zero(), T::zero(), Complex::zero());
                for k in 0..rows {
                    let a = x[(k, p)];
                    let b = x[(k, q)];
                    alpha += a.norm_sqr();
                    beta += b.norm_sqr();
                    gamma += a.conj() * b;
                }
                if gamma.norm() <= eps * (alpha * beta).sqrt() || gamma.norm_sqr() == T::zero() {
                    continue;
                }
                rotated = true;
                let rot = Rotation::diagonalizing(alpha, beta, gamma);
                rot.apply_columns(&mut x, p, q);
                rot.apply_columns(&mut v, p, q);
            }
        }
        if !rotated {
            break;
        }
    }
    let norms: Vec<T> = (0..cols).map(|j| vec_norm(&x.column(j))).collect();
    let mut order: Vec<usize> = (0..cols).collect();
    order.sort_by(|&i, &j| norms[j].partial_cmp(&norms[i]).unwrap_or(std::cmp::Ordering::Equal));
    order.truncate(rows.min(cols));

    let sigma_max = order.first().map(|&i| norms[i]).unwrap_or_else(T::zero);
    let cutoff = sigma_max * eps * lit::<T>(rows.max(cols) as f64);
    let mut values = Vec::with_capacity(order.len());
    let mut left: Vec<Vec<Complex<T>>> = Vec::with_capacity(order.len());
    let mut right = Vec::with_capacity(order.len());
    let mut deficient = 0;
    for &j in &order {
        let s = norms[j];
        values.push(s);
        right.push(v.column(j));
        if s > cutoff && s > T::zero() {
            left.push(x.column(j).into_iter().map(|z| z / s).collect());
        } else {
            deficient += 1;
        }
    }
    if deficient > 0 {
        let target = left.len() + deficient;
        complete_basis(&mut left, rows, target);
    }
    Svd { values, left, right }
}

/// `exp(A)` for an anti-Hermitian `A`, computed spectrally from the
/// Hermitian matrix `H = -iA` so that the result is unitary to working
/// precision.
pub fn exp_anti_hermitian<T: Real>(a: &ComplexMatrix<T>) -> ComplexMatrix<T> {
    let i = Complex::new(T::zero(), T::one());
    let h = a.map(|z| -(i * z));
    let eig = eigh(&h);
    let n = a.rows;
    let phases: Vec<Complex<T>> = eig.values.iter().map(|&w| Complex::new(w.cos(), w.sin())).collect();
    let v = &eig.vectors;
    ComplexMatrix::from_fn(n, n, |r, c| {
        (0..n).map(|k| v[(r, k)] * phases[k] * v[(c, k)].conj()).sum()
    })
}

/// Maps `dim²` real parameters onto an anti-Hermitian matrix: the first
/// `dim` set the diagonal `i·θ_k`, then each pair `a < b` (row-major)
/// contributes a real and an imaginary part.
pub fn anti_hermitian_from_params<T: Real>(dim: usize, params: &[T]) -> ComplexMatrix<T> {
    assert_eq!(params.len(), dim * dim, "generator needs dim^2 parameters");
    let mut a = ComplexMatrix::zeros(dim, dim);
    for k in 0..dim {
        a[(k, k)] = Complex::new(T::zero(), params[k]);
    }
    let mut idx = dim;
    for r in 0..dim {
        for c in (r + 1)..dim {
            let re = params[idx];
            let im = params[idx + 1];
            idx += 2;
            a[(r, c)] = Complex::new(re, im);
            a[(c, r)] = Complex::new(-re, im);
        }
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    fn sample_hermitian() -> ComplexMatrix<f64> {
        ComplexMatrix::from_row_major(
            3,
            3,
            vec![
                c(2.0, 0.0),
                c(0.5, -0.3),
                c(0.1, 0.2),
                c(0.5, 0.3),
                c(1.0, 0.0),
                c(-0.4, 0.1),
                c(0.1, -0.2),
                c(-0.4, -0.1),
                c(0.3, 0.0),
            ],
        )
        .unwrap()
    }

    #[test]
    fn eigh_reconstructs_and_is_orthonormal() {
        let a = sample_hermitian();
        let e = eigh(&a);
        let back = e.reconstruct_with(|x| x);
        assert!((&back - &a).max_abs() < 1e-13);
        assert!(e.vectors.unitarity_violation() < 1e-13);
        assert!(e.values.windows(2).all(|w| w[0] >= w[1]));
        let tr: f64 = e.values.iter().sum();
        assert!((tr - 3.3).abs() < 1e-13);
    }

    #[test]
    fn eigvalsh_two_by_two_closed_form() {
        let a = ComplexMatrix::from_row_major(2, 2, vec![c(0.5, 0.0), c(0.6, 0.0), c(0.6, 0.0), c(0.5, 0.0)]).unwrap();
        let v = eigvalsh(&a);
        assert!((v[0] - 1.1).abs() < 1e-14);
        assert!((v[1] + 0.1).abs() < 1e-14);
    }

    #[test]
    fn svd_of_rectangular_matrix() {
        let m = ComplexMatrix::from_row_major(
            2,
            3,
            vec![
                c(1.0, 0.5),
                c(0.0, 0.0),
                c(0.3, -0.1),
                c(0.2, 0.0),
                c(0.0, 1.0),
                c(0.0, 0.0),
            ],
        )
        .unwrap();
        let s = svd(&m);
        assert_eq!(s.values.len(), 2);
        let back = ComplexMatrix::from_fn(2, 3, |i, j| {
            (0..2).map(|k| s.left[k][i] * s.right[k][j].conj() * s.values[k]).sum()
        });
        assert!((&back - &m).max_abs() < 1e-13);
        for a in 0..2 {
            for b in 0..2 {
                let expect = if a == b { 1.0 } else { 0.0 };
                assert!((dot(&s.left[a], &s.left[b]) - c(expect, 0.0)).norm() < 1e-13);
                assert!((dot(&s.right[a], &s.right[b]) - c(expect, 0.0)).norm() < 1e-13);
            }
        }
    }

    #[test]
    fn svd_rank_deficient_completes_left_basis() {
        let m = ComplexMatrix::from_row_major(2, 2, vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]).unwrap();
        let s = svd(&m);
        assert_eq!(s.values, vec![1.0, 0.0]);
        assert_eq!(s.left.len(), 2);
        assert!(dot(&s.left[0], &s.left[1]).norm() < 1e-15);
    }

    #[test]
    fn exponential_is_unitary() {
        let params: Vec<f64> = (0..16).map(|k| ((k * 7 % 11) as f64 - 5.0) * 0.3).collect();
        let a = anti_hermitian_from_params(4, &params);
        assert!((&a + &a.adjoint()).max_abs() < 1e-15);
        let u = exp_anti_hermitian(&a);
        assert!(u.unitarity_violation() < 1e-13);
        let zero = exp_anti_hermitian(&ComplexMatrix::<f64>::zeros(3, 3));
        assert!((&zero - &ComplexMatrix::identity(3)).max_abs() < 1e-15);
    }

    #[test]
    fn exponential_of_single_rotation_generator() {
        // real generator on (0, 1) rotates by the parameter angle
        let t = 0.3;
        let mut a = ComplexMatrix::<f64>::zeros(2, 2);
        a[(0, 1)] = c(t, 0.0);
        a[(1, 0)] = c(-t, 0.0);
        let u = exp_anti_hermitian(&a);
        assert!((u[(0, 0)] - c(t.cos(), 0.0)).norm() < 1e-14);
        assert!((u[(0, 1)] - c(t.sin(), 0.0)).norm() < 1e-14);
    }

    #[test]
    fn single_precision_eigh() {
        let a: ComplexMatrix<f32> = ComplexMatrix::from_diagonal(&[0.25, 0.75]);
        let v = eigvalsh(&a);
        assert_eq!(v, vec![0.75, 0.25]);
    }
}
