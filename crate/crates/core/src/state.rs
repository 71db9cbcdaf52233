//! Quantum states: density matrices, pure vectors, bipartite purifications,
//! Schmidt decompositions and probability vectors.

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{eigh, eigvalsh, svd, ComplexMatrix, HermitianEigen};
use crate::scalar::{lit, noise_floor, to_f64, Real, Tolerances};

/// Unit-trace, Hermitian, positive-semidefinite operator on `C^d`.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix<T> {
    matrix: ComplexMatrix<T>,
    correction: T,
}

impl<T: Real> DensityMatrix<T> {
    /// Validates `m` as a density matrix.
    ///
    /// Eigenvalues in `[-τ_psd, 0)` are clamped to zero and the trace is
    /// renormalized; the clamped mass is kept in [`Self::correction`].
    pub fn validate(m: ComplexMatrix<T>, tol: &Tolerances) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        if m.rows() < 2 {
            return Err(Error::DimensionTooSmall(m.rows()));
        }
        if let Some(i) = m
            .as_slice()
            .iter()
            .position(|z| !(z.re.is_finite() && z.im.is_finite()))
        {
            return Err(Error::NonFinite(i));
        }
        let herm = m.hermiticity_violation();
        if herm > lit(tol.hermitian) {
            return Err(Error::NotHermitian {
                violation: to_f64(herm),
            });
        }
        let tr = m.trace();
        let tr_violation = (tr - Complex::one()).norm();
        if tr_violation > lit(tol.trace) {
            return Err(Error::NotUnitTrace {
                violation: to_f64(tr_violation),
            });
        }
        let h = m.hermitian_part();
        let eig = eigh(&h);
        let min = eig.values.last().copied().unwrap_or_else(T::zero);
        if min < -lit::<T>(tol.psd) {
            return Err(Error::NotPositive {
                min_eigenvalue: to_f64(min),
            });
        }
        if min < T::zero() {
            let clamped: T = eig.values.iter().filter(|&&x| x < T::zero()).map(|&x| -x).sum();
            let kept: T = eig.values.iter().filter(|&&x| x > T::zero()).copied().sum();
            let fixed = eig.reconstruct_with(|x| if x > T::zero() { x / kept } else { T::zero() });
            return Ok(Self {
                matrix: fixed.hermitian_part(),
                correction: clamped,
            });
        }
        Ok(Self {
            matrix: h,
            correction: T::zero(),
        })
    }

    /// Validates with the default tolerances for `T`.
    pub fn new(m: ComplexMatrix<T>) -> Result<Self> {
        Self::validate(m, &T::tolerances())
    }

    /// Wraps a matrix already known to be a density matrix (e.g. a convex
    /// combination of validated states). Only the Hermitian part is kept.
    pub fn from_matrix_unchecked(m: ComplexMatrix<T>) -> Self {
        Self {
            matrix: m.hermitian_part(),
            correction: T::zero(),
        }
    }

    pub fn from_diagonal(p: &[T]) -> Result<Self> {
        Self::new(ComplexMatrix::from_diagonal(p))
    }

    pub fn from_pure(psi: &PureStateVector<T>) -> Self {
        Self::from_matrix_unchecked(ComplexMatrix::outer(psi.amplitudes()))
    }

    pub fn maximally_mixed(dim: usize) -> Self {
        let w = T::one() / lit::<T>(dim as f64);
        Self::from_matrix_unchecked(ComplexMatrix::from_diagonal(&vec![w; dim]))
    }

    /// `|j⟩⟨j|` in the reference basis.
    pub fn basis_projector(dim: usize, j: usize) -> Self {
        let mut p = vec![T::zero(); dim];
        p[j] = T::one();
        Self::from_matrix_unchecked(ComplexMatrix::from_diagonal(&p))
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &ComplexMatrix<T> {
        &self.matrix
    }

    /// Total eigenvalue mass clamped away during validation.
    pub fn correction(&self) -> T {
        self.correction
    }

    #[inline]
    pub fn get(&self, j: usize, k: usize) -> Complex<T> {
        self.matrix[(j, k)]
    }

    /// Real diagonal `ρ_jj` (the reference-basis populations).
    pub fn populations(&self) -> Vec<T> {
        (0..self.dim()).map(|j| self.matrix[(j, j)].re).collect()
    }

    /// Eigenvalues, descending.
    pub fn eigenvalues(&self) -> Vec<T> {
        eigvalsh(&self.matrix)
    }

    pub fn eigen(&self) -> HermitianEigen<T> {
        eigh(&self.matrix)
    }

    /// `Tr ρ²`.
    pub fn purity(&self) -> T {
        self.matrix.as_slice().iter().map(|z| z.norm_sqr()).sum()
    }

    /// Number of eigenvalues above `threshold`.
    pub fn rank(&self, threshold: T) -> usize {
        self.eigenvalues().iter().filter(|&&x| x > threshold).count()
    }

    /// `U ρ U†` for a unitary `U`.
    pub fn conjugate_by(&self, u: &ComplexMatrix<T>) -> Self {
        Self::from_matrix_unchecked(self.matrix.conjugate_by(u))
    }

    /// `λ ρ + (1 − λ) σ` for `λ ∈ [0, 1]`.
    pub fn mix(&self, other: &Self, lambda: T) -> Self {
        assert_eq!(self.dim(), other.dim(), "mixing states of different dimension");
        let a = self.matrix.scale(lambda);
        let b = other.matrix.scale(T::one() - lambda);
        Self::from_matrix_unchecked(&a + &b)
    }

    /// Incoherent part `Σ_j ρ_jj |j⟩⟨j|`.
    pub fn dephased(&self) -> Self {
        Self::from_matrix_unchecked(ComplexMatrix::from_diagonal(&self.populations()))
    }
}

/// Normalized vector in `C^d`.
#[derive(Debug, Clone, PartialEq)]
pub struct PureStateVector<T> {
    amplitudes: Vec<Complex<T>>,
}

impl<T: Real> PureStateVector<T> {
    pub fn new(amplitudes: Vec<Complex<T>>, tol: &Tolerances) -> Result<Self> {
        let n = norm(&amplitudes);
        let violation = (n - T::one()).abs();
        if !violation.is_finite() || violation > lit(tol.norm) {
            return Err(Error::NotNormalized {
                violation: to_f64(violation),
            });
        }
        Ok(Self { amplitudes })
    }

    /// Rescales to unit norm; panics on the zero vector.
    pub fn normalized(amplitudes: Vec<Complex<T>>) -> Self {
        let n = norm(&amplitudes);
        assert!(n > T::zero(), "cannot normalize the zero vector");
        Self {
            amplitudes: amplitudes.into_iter().map(|z| z / n).collect(),
        }
    }

    pub fn basis(dim: usize, k: usize) -> Self {
        let mut a = vec![Complex::zero(); dim];
        a[k] = Complex::one();
        Self { amplitudes: a }
    }

    /// `Σ_j |j⟩ / √d`.
    pub fn uniform(dim: usize) -> Self {
        let w = Complex::new(T::one() / lit::<T>(dim as f64).sqrt(), T::zero());
        Self {
            amplitudes: vec![w; dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex<T>] {
        &self.amplitudes
    }

    pub fn inner(&self, other: &Self) -> Complex<T> {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(&a, &b)| a.conj() * b)
            .sum()
    }
}

fn norm<T: Real>(v: &[Complex<T>]) -> T {
    v.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt()
}

/// Normalized vector in `C^{d_A} ⊗ C^{d_B}`, amplitude index `a·d_B + b`.
#[derive(Debug, Clone, PartialEq)]
pub struct BipartitePureState<T> {
    dim_a: usize,
    dim_b: usize,
    amplitudes: Vec<Complex<T>>,
}

impl<T: Real> BipartitePureState<T> {
    pub fn new(dim_a: usize, dim_b: usize, amplitudes: Vec<Complex<T>>, tol: &Tolerances) -> Result<Self> {
        if amplitudes.len() != dim_a * dim_b {
            return Err(Error::LengthMismatch {
                expected: dim_a * dim_b,
                found: amplitudes.len(),
            });
        }
        if dim_a < 2 {
            return Err(Error::DimensionTooSmall(dim_a));
        }
        if let Some(i) = amplitudes.iter().position(|z| !(z.re.is_finite() && z.im.is_finite())) {
            return Err(Error::NonFinite(i));
        }
        let n = norm(&amplitudes);
        let violation = (n - T::one()).abs();
        if violation > lit(tol.norm) {
            return Err(Error::NotNormalized {
                violation: to_f64(violation),
            });
        }
        Ok(Self {
            dim_a,
            dim_b,
            amplitudes,
        })
    }

    /// Normalizes `amplitudes` instead of validating the norm.
    pub fn normalized(dim_a: usize, dim_b: usize, amplitudes: Vec<Complex<T>>) -> Self {
        assert_eq!(amplitudes.len(), dim_a * dim_b, "amplitude count mismatch");
        let psi = PureStateVector::normalized(amplitudes);
        Self {
            dim_a,
            dim_b,
            amplitudes: psi.amplitudes,
        }
    }

    pub fn product(a: &PureStateVector<T>, b: &PureStateVector<T>) -> Self {
        let mut amps = Vec::with_capacity(a.dim() * b.dim());
        for &x in a.amplitudes() {
            for &y in b.amplitudes() {
                amps.push(x * y);
            }
        }
        Self {
            dim_a: a.dim(),
            dim_b: b.dim(),
            amplitudes: amps,
        }
    }

    /// `Σ_k |kk⟩ / √d` on `C^d ⊗ C^d`.
    pub fn maximally_entangled(d: usize) -> Self {
        Self::schmidt_form(&vec![T::one() / lit::<T>(d as f64); d], d, d)
    }

    /// `Σ_k √λ_k |kk⟩`.
    pub fn schmidt_form(lambda: &[T], dim_a: usize, dim_b: usize) -> Self {
        assert!(lambda.len() <= dim_a.min(dim_b), "too many Schmidt coefficients");
        let mut amps = vec![Complex::zero(); dim_a * dim_b];
        for (k, &l) in lambda.iter().enumerate() {
            amps[k * dim_b + k] = Complex::new(l.max(T::zero()).sqrt(), T::zero());
        }
        Self::normalized(dim_a, dim_b, amps)
    }

    pub fn dim_a(&self) -> usize {
        self.dim_a
    }

    pub fn dim_b(&self) -> usize {
        self.dim_b
    }

    pub fn amplitudes(&self) -> &[Complex<T>] {
        &self.amplitudes
    }

    /// `d_A × d_B` matrix `M_ab = ⟨ab|Ψ⟩`.
    pub fn amplitude_matrix(&self) -> ComplexMatrix<T> {
        ComplexMatrix::from_row_major(self.dim_a, self.dim_b, self.amplitudes.clone())
            .expect("amplitude count checked at construction")
    }

    /// `(U_A ⊗ U_B)|Ψ⟩`, i.e. `M ↦ U_A M U_Bᵀ`.
    pub fn apply_local(&self, ua: &ComplexMatrix<T>, ub: &ComplexMatrix<T>) -> Self {
        let m = ua.matmul(&self.amplitude_matrix()).matmul(&ub.transpose());
        Self {
            dim_a: self.dim_a,
            dim_b: self.dim_b,
            amplitudes: m.into_vec(),
        }
    }

    /// Flattens to a single-system pure state on `C^{d_A d_B}`.
    pub fn as_vector(&self) -> PureStateVector<T> {
        PureStateVector {
            amplitudes: self.amplitudes.clone(),
        }
    }
}

/// `ρ_A = Tr_B |Ψ⟩⟨Ψ| = M M†`.
pub fn partial_trace_b<T: Real>(psi: &BipartitePureState<T>) -> DensityMatrix<T> {
    DensityMatrix::from_matrix_unchecked(reduced_matrix(psi.dim_a, psi.dim_b, &psi.amplitudes))
}

/// `M M†` for a raw (unnormalized) amplitude slice.
pub(crate) fn reduced_matrix<T: Real>(dim_a: usize, dim_b: usize, amps: &[Complex<T>]) -> ComplexMatrix<T> {
    let mut out = ComplexMatrix::zeros(dim_a, dim_a);
    for i in 0..dim_a {
        let ri = &amps[i * dim_b..(i + 1) * dim_b];
        for j in i..dim_a {
            let rj = &amps[j * dim_b..(j + 1) * dim_b];
            let s: Complex<T> = ri.iter().zip(rj).map(|(&a, &b)| a * b.conj()).sum();
            out[(i, j)] = s;
            out[(j, i)] = s.conj();
        }
    }
    out
}

/// Nonnegative weights summing to one.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityVector<T> {
    components: Vec<T>,
}

impl<T: Real> ProbabilityVector<T> {
    pub fn new(components: Vec<T>, tol: &Tolerances) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidProbability("empty vector".into()));
        }
        let t = lit::<T>(tol.trace);
        if let Some((i, x)) = components
            .iter()
            .enumerate()
            .find(|(_, &x)| !x.is_finite() || x < -t || x > T::one() + t)
        {
            return Err(Error::InvalidProbability(format!("component {i} = {x} outside [0, 1]")));
        }
        let s: T = components.iter().copied().sum();
        if (s - T::one()).abs() > t {
            return Err(Error::InvalidProbability(format!("components sum to {s}")));
        }
        Ok(Self {
            components: components.into_iter().map(|x| x.max(T::zero())).collect(),
        })
    }

    /// Rescales nonnegative weights to sum one.
    pub fn normalized(weights: Vec<T>) -> Self {
        let s: T = weights.iter().copied().sum();
        assert!(s > T::zero(), "cannot normalize nonpositive weights");
        Self {
            components: weights.into_iter().map(|x| x.max(T::zero()) / s).collect(),
        }
    }

    pub fn uniform(dim: usize) -> Self {
        Self {
            components: vec![T::one() / lit::<T>(dim as f64); dim],
        }
    }

    pub(crate) fn from_vec_unchecked(components: Vec<T>) -> Self {
        Self { components }
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn as_slice(&self) -> &[T] {
        &self.components
    }

    pub fn sorted_descending(&self) -> Vec<T> {
        let mut v = self.components.clone();
        v.sort_by(|a, b| b.partial_cmp(a).unwrap_or(std::cmp::Ordering::Equal));
        v
    }

    /// Extends with zeros to `len` components.
    pub fn padded(&self, len: usize) -> Self {
        let mut v = self.components.clone();
        v.resize(len.max(v.len()), T::zero());
        Self { components: v }
    }
}

/// `|Ψ⟩ = Σ_k √λ_k |φ_k⟩ ⊗ |ψ_k⟩`.
#[derive(Debug, Clone)]
pub struct SchmidtDecomposition<T> {
    pub coefficients: ProbabilityVector<T>,
    pub basis_a: Vec<PureStateVector<T>>,
    pub basis_b: Vec<PureStateVector<T>>,
}

impl<T: Real> SchmidtDecomposition<T> {
    pub fn reconstruct(&self) -> Vec<Complex<T>> {
        let da = self.basis_a.first().map_or(0, |v| v.dim());
        let db = self.basis_b.first().map_or(0, |v| v.dim());
        let mut out = vec![Complex::zero(); da * db];
        for (k, &l) in self.coefficients.as_slice().iter().enumerate() {
            let s = l.max(T::zero()).sqrt();
            for (a, &x) in self.basis_a[k].amplitudes().iter().enumerate() {
                for (b, &y) in self.basis_b[k].amplitudes().iter().enumerate() {
                    out[a * db + b] += x * y * s;
                }
            }
        }
        out
    }
}

/// Schmidt decomposition from the SVD of the amplitude matrix.
///
/// Coefficients are squared singular values in descending order (ties keep
/// their original index order) and there are `min(d_A, d_B)` of them.
pub fn schmidt_decompose<T: Real>(psi: &BipartitePureState<T>) -> SchmidtDecomposition<T> {
    let s = svd(&psi.amplitude_matrix());
    let lambda: Vec<T> = s.values.iter().map(|&x| x * x).collect();
    let total: T = lambda.iter().copied().sum();
    let coefficients = ProbabilityVector::from_vec_unchecked(lambda.into_iter().map(|x| x / total).collect());
    let basis_a = s
        .left
        .into_iter()
        .map(|amplitudes| PureStateVector { amplitudes })
        .collect();
    // M = Σ σ u v†, so the B-side vectors are conj(v)
    let basis_b = s
        .right
        .into_iter()
        .map(|v| PureStateVector {
            amplitudes: v.into_iter().map(|z| z.conj()).collect(),
        })
        .collect();
    SchmidtDecomposition {
        coefficients,
        basis_a,
        basis_b,
    }
}

/// Schmidt coefficients only, from the spectrum of `ρ_A` (length `d_A`).
pub fn schmidt_coefficients<T: Real>(psi: &BipartitePureState<T>) -> ProbabilityVector<T> {
    spectrum_of(&reduced_matrix(psi.dim_a, psi.dim_b, &psi.amplitudes))
}

/// Clamped, renormalized spectrum of a PSD matrix as a probability vector.
pub(crate) fn spectrum_of<T: Real>(m: &ComplexMatrix<T>) -> ProbabilityVector<T> {
    let mut v = eigvalsh(m);
    let floor = noise_floor::<T>(m.rows());
    for x in v.iter_mut() {
        if *x < floor {
            *x = T::zero();
        }
    }
    let s: T = v.iter().copied().sum();
    ProbabilityVector::from_vec_unchecked(v.into_iter().map(|x| x / s).collect())
}

/// Purification with ancilla dimension equal to `rank(ρ)`:
/// `|Ψ⟩ = Σ_k √μ_k |v_k⟩ ⊗ |k⟩`.
pub fn purify<T: Real>(rho: &DensityMatrix<T>) -> BipartitePureState<T> {
    let eig = rho.eigen();
    let threshold = lit::<T>(T::tolerances().psd);
    let kept: Vec<usize> = (0..rho.dim()).filter(|&k| eig.values[k] > threshold).collect();
    let r = kept.len().max(1);
    let d = rho.dim();
    let mut amps = vec![Complex::zero(); d * r];
    for (col, &k) in kept.iter().enumerate() {
        let s = eig.values[k].sqrt();
        for a in 0..d {
            amps[a * r + col] = eig.vectors[(a, k)] * s;
        }
    }
    BipartitePureState::normalized(d, r, amps)
}

/// Hermitian PSD square root via the spectral decomposition. Eigenvalues at
/// or below the round-off floor are treated as zero.
pub fn psd_sqrt<T: Real>(rho: &DensityMatrix<T>) -> ComplexMatrix<T> {
    let floor = noise_floor::<T>(rho.dim());
    rho.eigen()
        .reconstruct_with(|x| if x > floor { x.sqrt() } else { T::zero() })
        .hermitian_part()
}

/// True iff `p` majorizes `q` (`q ≺ p`): every sorted-descending prefix sum of
/// `p` dominates that of `q`, with totals equal within `tol.trace`.
pub fn majorizes<T: Real>(p: &ProbabilityVector<T>, q: &ProbabilityVector<T>, tol: &Tolerances) -> Result<bool> {
    if p.len() != q.len() {
        return Err(Error::LengthMismatch {
            expected: p.len(),
            found: q.len(),
        });
    }
    let t = lit::<T>(tol.trace);
    let (ps, qs) = (p.sorted_descending(), q.sorted_descending());
    let (mut sp, mut sq) = (T::zero(), T::zero());
    for (&a, &b) in ps.iter().zip(&qs) {
        sp += a;
        sq += b;
        if sp + t < sq {
            return Ok(false);
        }
    }
    Ok((sp - sq).abs() <= t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex<f64> {
        Complex::new(re, 0.0)
    }

    fn real_matrix(n: usize, v: &[f64]) -> ComplexMatrix<f64> {
        ComplexMatrix::from_row_major(n, n, v.iter().map(|&x| c(x)).collect()).unwrap()
    }

    const TOL: Tolerances = Tolerances::DOUBLE;

    #[test]
    fn validate_examples() {
        let mm = DensityMatrix::validate(real_matrix(2, &[0.5, 0.0, 0.0, 0.5]), &TOL).unwrap();
        assert_eq!(mm.correction(), 0.0);
        assert!(DensityMatrix::validate(real_matrix(2, &[0.7, 0.3, 0.3, 0.3]), &TOL).is_ok());
        match DensityMatrix::validate(real_matrix(2, &[0.5, 0.6, 0.6, 0.5]), &TOL) {
            Err(Error::NotPositive { min_eigenvalue }) => assert!((min_eigenvalue + 0.1).abs() < 1e-12),
            other => panic!("expected NotPositive, got {other:?}"),
        }
    }

    #[test]
    fn validate_error_paths() {
        let nh = ComplexMatrix::from_row_major(2, 2, vec![c(0.5), c(0.1), c(0.2), c(0.5)]).unwrap();
        assert!(matches!(
            DensityMatrix::validate(nh, &TOL),
            Err(Error::NotHermitian { .. })
        ));
        assert!(matches!(
            DensityMatrix::validate(real_matrix(2, &[0.6, 0.0, 0.0, 0.6]), &TOL),
            Err(Error::NotUnitTrace { .. })
        ));
        let rect = ComplexMatrix::<f64>::zeros(2, 3);
        assert!(matches!(
            DensityMatrix::validate(rect, &TOL),
            Err(Error::NotSquare { .. })
        ));
        assert!(matches!(
            DensityMatrix::validate(real_matrix(1, &[1.0]), &TOL),
            Err(Error::DimensionTooSmall(1))
        ));
    }

    #[test]
    fn tiny_negative_eigenvalue_is_clamped() {
        let m = real_matrix(2, &[1.0 + 5e-13, 0.0, 0.0, -5e-13]);
        let rho = DensityMatrix::validate(m, &TOL).unwrap();
        assert!((rho.correction() - 5e-13).abs() < 1e-20);
        assert!(rho.eigenvalues().iter().all(|&x| x >= 0.0));
        assert!((rho.matrix().trace().re - 1.0).abs() < 1e-15);
    }

    #[test]
    fn partial_trace_examples() {
        let r = partial_trace_b(&BipartitePureState::<f64>::maximally_entangled(2));
        assert!((r.matrix() - DensityMatrix::maximally_mixed(2).matrix()).max_abs() < 1e-15);

        let prod = BipartitePureState::<f64>::product(&PureStateVector::basis(2, 0), &PureStateVector::uniform(2));
        let r = partial_trace_b(&prod);
        assert!((r.matrix() - DensityMatrix::basis_projector(2, 0).matrix()).max_abs() < 1e-15);

        let psi = BipartitePureState::<f64>::schmidt_form(&[0.8, 0.2], 2, 2);
        let r = partial_trace_b(&psi);
        assert!((r.get(0, 0).re - 0.8).abs() < 1e-15);
        assert!((r.get(1, 1).re - 0.2).abs() < 1e-15);
        assert!(r.get(0, 1).norm() < 1e-15);
    }

    #[test]
    fn schmidt_examples() {
        let s = schmidt_decompose(&BipartitePureState::<f64>::maximally_entangled(2));
        for &x in s.coefficients.as_slice() {
            assert!((x - 0.5).abs() < 1e-14);
        }
        let prod = BipartitePureState::<f64>::product(&PureStateVector::basis(2, 0), &PureStateVector::basis(2, 1));
        let s = schmidt_decompose(&prod);
        assert!((s.coefficients.as_slice()[0] - 1.0).abs() < 1e-15);
        assert!(s.coefficients.as_slice()[1].abs() < 1e-15);
        // orthonormal completion on both sides
        assert!(s.basis_a[0].inner(&s.basis_a[1]).norm() < 1e-14);
        assert!(s.basis_b[0].inner(&s.basis_b[1]).norm() < 1e-14);

        let w = 1.0 / 3f64.sqrt();
        let psi = BipartitePureState::new(2, 2, vec![c(w), c(w), c(w), c(0.0)], &TOL).unwrap();
        let s = schmidt_decompose(&psi);
        let l = s.coefficients.as_slice();
        assert!((l[0] - (3.0 + 5f64.sqrt()) / 6.0).abs() < 1e-14);
        assert!((l[1] - (3.0 - 5f64.sqrt()) / 6.0).abs() < 1e-14);
        let back = s.reconstruct();
        for (a, b) in back.iter().zip(psi.amplitudes()) {
            assert!((a - b).norm() < 1e-14);
        }
    }

    #[test]
    fn schmidt_unequal_dimensions() {
        let amps: Vec<Complex<f64>> = (0..6)
            .map(|k| Complex::new(k as f64 * 0.3 - 0.7, 0.1 * k as f64))
            .collect();
        for (da, db) in [(2, 3), (3, 2)] {
            let psi = BipartitePureState::normalized(da, db, amps.clone());
            let s = schmidt_decompose(&psi);
            assert_eq!(s.coefficients.len(), 2);
            let back = s.reconstruct();
            for (a, b) in back.iter().zip(psi.amplitudes()) {
                assert!((a - b).norm() < 1e-13);
            }
        }
    }

    #[test]
    fn purify_examples() {
        let p = purify(&DensityMatrix::<f64>::basis_projector(2, 0));
        assert_eq!(p.dim_b(), 1);
        let s = schmidt_decompose(&p);
        assert!((s.coefficients.as_slice()[0] - 1.0).abs() < 1e-15);

        let p = purify(&DensityMatrix::<f64>::maximally_mixed(2));
        assert_eq!(p.dim_b(), 2);
        let s = schmidt_decompose(&p);
        for &x in s.coefficients.as_slice() {
            assert!((x - 0.5).abs() < 1e-14);
        }

        let rho = DensityMatrix::from_diagonal(&[0.8f64, 0.2]).unwrap();
        let p = purify(&rho);
        assert!((partial_trace_b(&p).matrix() - rho.matrix()).max_abs() < 1e-14);
        let l = schmidt_decompose(&p).coefficients;
        assert!((l.as_slice()[0] - 0.8).abs() < 1e-14);
    }

    #[test]
    fn psd_sqrt_examples() {
        let proj = DensityMatrix::<f64>::from_pure(&PureStateVector::uniform(2));
        assert!((&psd_sqrt(&proj) - proj.matrix()).max_abs() < 1e-14);

        let mm = DensityMatrix::<f64>::maximally_mixed(2);
        let r = psd_sqrt(&mm);
        assert!((r[(0, 0)].re - 0.5f64.sqrt()).abs() < 1e-15);
        assert!(r[(0, 1)].norm() < 1e-15);

        let rho = DensityMatrix::new(real_matrix(2, &[0.5, 0.25, 0.25, 0.5])).unwrap();
        let r = psd_sqrt(&rho);
        // |±⟩ eigenbasis: diagonal (a+b)/2, off-diagonal (a-b)/2
        let (a, b) = (0.75f64.sqrt(), 0.25f64.sqrt());
        assert!((r[(0, 0)].re - (a + b) / 2.0).abs() < 1e-14);
        assert!((r[(0, 1)].re - (a - b) / 2.0).abs() < 1e-14);
        assert!((&r.matmul(&r) - rho.matrix()).max_abs() < 1e-14);
    }

    #[test]
    fn majorization_examples() {
        let pv = |v: Vec<f64>| ProbabilityVector::new(v, &TOL).unwrap();
        assert!(majorizes(&pv(vec![1.0, 0.0]), &pv(vec![0.5, 0.5]), &TOL).unwrap());
        assert!(!majorizes(&pv(vec![0.5, 0.5]), &pv(vec![1.0, 0.0]), &TOL).unwrap());
        assert!(majorizes(&pv(vec![0.7, 0.3]), &pv(vec![0.6, 0.4]), &TOL).unwrap());
        assert!(matches!(
            majorizes(&pv(vec![1.0]), &pv(vec![0.5, 0.5]), &TOL),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn probability_vector_rejects_bad_input() {
        assert!(ProbabilityVector::new(vec![0.6f64, 0.6], &TOL).is_err());
        assert!(ProbabilityVector::new(vec![1.2f64, -0.2], &TOL).is_err());
        assert!(ProbabilityVector::<f64>::new(vec![], &TOL).is_err());
    }

    #[test]
    fn bipartite_rejects_unnormalized() {
        let r = BipartitePureState::new(2, 2, vec![c(1.0), c(1.0), c(0.0), c(0.0)], &TOL);
        assert!(matches!(r, Err(Error::NotNormalized { .. })));
        let r = BipartitePureState::new(2, 2, vec![c(1.0)], &TOL);
        assert!(matches!(r, Err(Error::LengthMismatch { .. })));
    }
}
