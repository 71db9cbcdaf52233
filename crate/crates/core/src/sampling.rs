//! Seeded random states, unitaries and simplex points.
//!
//! Every draw comes from a [`SeededStream`]: ChaCha20 (20 rounds) keyed by
//! `rand_core`'s `seed_from_u64(seed)` expansion, with the 64-bit ChaCha
//! stream word set to the stream id. Derived quantities use only explicit
//! arithmetic on that stream so other implementations can reproduce them:
//!
//! * uniform: `(next_u64 >> 11) · 2^-53` in `[0, 1)`;
//! * standard normal: Box–Muller on two uniforms `u1, u2`,
//!   `r = sqrt(-2 ln(1 - u1))`, returning `r cos(2π u2)` then `r sin(2π u2)`;
//! * complex normal: real part first, then imaginary part, each `N(0, 1/2)`;
//! * exponential: `-ln(1 - u)`.
//!
//! Sampling is carried out in `f64` and cast to the target scalar.

use num_complex::Complex;
use rand_chacha::ChaCha20Rng;
use rand_core::{RngCore, SeedableRng};

use crate::linalg::ComplexMatrix;
use crate::scalar::{lit, Real};
use crate::state::{BipartitePureState, DensityMatrix, ProbabilityVector, PureStateVector};

/// Single-owner random stream identified by `(seed, stream id)`.
#[derive(Debug, Clone)]
pub struct SeededStream {
    seed: u64,
    stream: u64,
    rng: ChaCha20Rng,
    spare_normal: Option<f64>,
}

impl SeededStream {
    pub fn new(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Self {
            seed,
            stream,
            rng,
            spare_normal: None,
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn stream_id(&self) -> u64 {
        self.stream
    }

    /// Independent stream for worker `id`, derived from this stream's seed.
    pub fn child(&self, id: u64) -> Self {
        Self::new(
            self.seed,
            self.stream.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(id + 1),
        )
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    /// Uniform in `[0, 1)` with 53 random bits.
    pub fn uniform(&mut self) -> f64 {
        (self.rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform integer in `0..n`.
    pub fn below(&mut self, n: usize) -> usize {
        ((self.uniform() * n as f64) as usize).min(n - 1)
    }

    pub fn normal(&mut self) -> f64 {
        if let Some(z) = self.spare_normal.take() {
            return z;
        }
        let u1 = self.uniform();
        let u2 = self.uniform();
        let r = (-2.0 * (1.0 - u1).ln()).sqrt();
        let (s, c) = (std::f64::consts::TAU * u2).sin_cos();
        self.spare_normal = Some(r * s);
        r * c
    }

    /// Circular complex Gaussian with `E|z|² = 1`.
    pub fn complex_normal<T: Real>(&mut self) -> Complex<T> {
        let re = self.normal() * std::f64::consts::FRAC_1_SQRT_2;
        let im = self.normal() * std::f64::consts::FRAC_1_SQRT_2;
        Complex::new(lit(re), lit(im))
    }

    pub fn exponential(&mut self) -> f64 {
        -(1.0 - self.uniform()).ln()
    }
}

/// Haar-random pure state: normalized complex Gaussian vector.
pub fn haar_pure<T: Real>(dim: usize, stream: &mut SeededStream) -> PureStateVector<T> {
    let amps = (0..dim).map(|_| stream.complex_normal()).collect();
    PureStateVector::normalized(amps)
}

/// Haar-random bipartite pure state on `C^{d_A} ⊗ C^{d_B}`.
pub fn haar_bipartite<T: Real>(dim_a: usize, dim_b: usize, stream: &mut SeededStream) -> BipartitePureState<T> {
    let amps = (0..dim_a * dim_b).map(|_| stream.complex_normal()).collect();
    BipartitePureState::normalized(dim_a, dim_b, amps)
}

fn ginibre<T: Real>(rows: usize, cols: usize, stream: &mut SeededStream) -> ComplexMatrix<T> {
    ComplexMatrix::from_fn(rows, cols, |_, _| stream.complex_normal())
}

/// `G G† / Tr(G G†)` with `G` a `dim × rank` Ginibre matrix.
pub fn ginibre_density<T: Real>(dim: usize, rank: usize, stream: &mut SeededStream) -> DensityMatrix<T> {
    assert!(rank >= 1 && rank <= dim, "rank must lie in 1..=dim");
    let g = ginibre::<T>(dim, rank, stream);
    let w = g.matmul(&g.adjoint());
    let tr = w.trace().re;
    DensityMatrix::from_matrix_unchecked(w.scale(T::one() / tr))
}

/// Haar-random unitary: Gram–Schmidt QR of a Ginibre matrix, which fixes the
/// phases of `R`'s diagonal to be positive.
pub fn haar_unitary<T: Real>(dim: usize, stream: &mut SeededStream) -> ComplexMatrix<T> {
    let g = ginibre::<T>(dim, dim, stream);
    let mut cols: Vec<Vec<Complex<T>>> = Vec::with_capacity(dim);
    for j in 0..dim {
        let mut v = g.column(j);
        // two passes of modified Gram-Schmidt
        for _ in 0..2 {
            for q in &cols {
                let c: Complex<T> = q.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
                for (x, y) in v.iter_mut().zip(q) {
                    *x -= c * y;
                }
            }
        }
        let n = v.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt();
        cols.push(v.into_iter().map(|z| z / n).collect());
    }
    ComplexMatrix::from_fn(dim, dim, |i, j| cols[j][i])
}

/// Flat-Dirichlet point on the probability simplex.
pub fn random_simplex<T: Real>(dim: usize, stream: &mut SeededStream) -> ProbabilityVector<T> {
    let w: Vec<f64> = (0..dim).map(|_| stream.exponential()).collect();
    let s: f64 = w.iter().sum();
    ProbabilityVector::normalized(w.into_iter().map(|x| lit(x / s)).collect())
}

/// Ginibre state whose rank is drawn uniformly from `1..=dim`.
pub fn random_density<T: Real>(dim: usize, stream: &mut SeededStream) -> DensityMatrix<T> {
    let rank = 1 + stream.below(dim);
    ginibre_density(dim, rank, stream)
}

/// Haar-random permutation of `0..n` (Fisher–Yates).
pub fn random_permutation(n: usize, stream: &mut SeededStream) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = stream.below(i + 1);
        p.swap(i, j);
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::state::partial_trace_b;

    #[test]
    fn streams_are_deterministic_and_distinct() {
        let mut a = SeededStream::new(7, 3);
        let mut b = SeededStream::new(7, 3);
        let mut c = SeededStream::new(7, 4);
        let xa: Vec<f64> = (0..8).map(|_| a.normal()).collect();
        let xb: Vec<f64> = (0..8).map(|_| b.normal()).collect();
        let xc: Vec<f64> = (0..8).map(|_| c.normal()).collect();
        assert_eq!(xa, xb);
        assert_ne!(xa, xc);
    }

    #[test]
    fn haar_pure_is_normalized() {
        let mut s = SeededStream::new(1, 0);
        for d in 2..6 {
            let psi: PureStateVector<f64> = haar_pure(d, &mut s);
            assert!((psi.inner(&psi).re - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn ginibre_rank_and_purity() {
        let mut s = SeededStream::new(2, 0);
        for rank in 1..=4 {
            let rho: DensityMatrix<f64> = ginibre_density(4, rank, &mut s);
            assert!(DensityMatrix::new(rho.matrix().clone()).is_ok());
            assert_eq!(rho.rank(1e-9), rank);
        }
        let pure: DensityMatrix<f64> = ginibre_density(3, 1, &mut s);
        assert!((pure.purity() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn haar_unitary_properties() {
        let mut s = SeededStream::new(3, 0);
        let u: ComplexMatrix<f64> = haar_unitary(4, &mut s);
        assert!(u.unitarity_violation() < 1e-10);
        let mm = DensityMatrix::<f64>::maximally_mixed(4);
        assert!((mm.conjugate_by(&u).matrix() - mm.matrix()).max_abs() < 1e-12);
        let rho: DensityMatrix<f64> = ginibre_density(4, 3, &mut s);
        let a = rho.eigenvalues();
        let b = rho.conjugate_by(&u).eigenvalues();
        for (x, y) in a.iter().zip(&b) {
            assert!((x - y).abs() < 1e-10);
        }
    }

    #[test]
    fn simplex_points_are_valid() {
        let mut s = SeededStream::new(4, 0);
        for _ in 0..100 {
            let p: ProbabilityVector<f64> = random_simplex(5, &mut s);
            assert!((p.as_slice().iter().sum::<f64>() - 1.0).abs() < 1e-12);
            assert!(p.as_slice().iter().all(|&x| x >= 0.0));
        }
    }

    #[test]
    fn simplex_mean_component() {
        let mut s = SeededStream::new(5, 0);
        let n = 100_000;
        let d = 4;
        let mut mean = vec![0.0; d];
        for _ in 0..n {
            let p: ProbabilityVector<f64> = random_simplex(d, &mut s);
            for (m, &x) in mean.iter_mut().zip(p.as_slice()) {
                *m += x / n as f64;
            }
        }
        for m in mean {
            assert!((m - 0.25).abs() < 0.01, "mean component {m}");
        }
    }

    #[test]
    fn haar_reduced_purity_mean() {
        // E Tr ρ_A² = (d_A + d_B) / (d_A d_B + 1) = 0.8 for two qubits
        let mut s = SeededStream::new(6, 0);
        let n = 100_000;
        let mean: f64 = (0..n)
            .map(|_| partial_trace_b(&haar_bipartite::<f64>(2, 2, &mut s)).purity())
            .sum::<f64>()
            / n as f64;
        assert!((mean - 0.8).abs() < 0.005, "mean purity {mean}");
    }

    #[test]
    fn permutations_are_bijections() {
        let mut s = SeededStream::new(8, 0);
        let mut p = random_permutation(6, &mut s);
        p.sort();
        assert_eq!(p, (0..6).collect::<Vec<_>>());
    }
}
