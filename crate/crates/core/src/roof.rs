//! Convex-roof extension of pure-state monotones to mixed bipartite states.
//!
//! Every size-`m` pure-state ensemble of `ρ` is obtained by applying an
//! `m × m` unitary to the eigen-ensemble padded with zero vectors. The
//! unitary is `exp(A(θ))` for a generator built from `m²` real parameters.
//! The optimizer descends on the unitary group with left-translated steps
//! `W ← exp(η X) W`, which keeps every iterate a valid ensemble.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::linalg::{anti_hermitian_from_params, exp_anti_hermitian, ComplexMatrix};
use crate::monotones::{wootters_concurrence, PureMonotone};
use crate::sampling::SeededStream;
use crate::scalar::{lit, shannon_entropy, to_f64, Real};
use crate::state::{BipartitePureState, DensityMatrix};
use crate::{Error, Result};

/// Members lighter than this are left out of reported ensembles.
pub const TINY_WEIGHT: f64 = 1e-14;

/// Window and relative tolerance of the stopping rule.
pub const STALL_WINDOW: usize = 50;
pub const STALL_TOLERANCE: f64 = 1e-9;

/// `m²` generator parameters for a size-`m` ensemble of a rank-`r` state.
#[derive(Debug, Clone, PartialEq)]
pub struct EnsembleParameterization<T> {
    rank: usize,
    size: usize,
    generator: Vec<T>,
}

impl<T: Real> EnsembleParameterization<T> {
    pub fn new(rank: usize, size: usize, generator: Vec<T>) -> Result<Self> {
        if size < rank {
            return Err(Error::RankExceedsEnsembleSize {
                rank,
                ensemble_size: size,
            });
        }
        if generator.len() != size * size {
            return Err(Error::LengthMismatch {
                expected: size * size,
                found: generator.len(),
            });
        }
        Ok(Self { rank, size, generator })
    }

    /// The zero generator, which decodes to the eigen-ensemble.
    pub fn identity(rank: usize, size: usize) -> Result<Self> {
        Self::new(rank, size, vec![T::zero(); size * size])
    }

    /// Generator entries drawn as `π · N(0, 1)`.
    pub fn random(rank: usize, size: usize, stream: &mut SeededStream) -> Result<Self> {
        let g = (0..size * size)
            .map(|_| lit(std::f64::consts::PI * stream.normal()))
            .collect();
        Self::new(rank, size, g)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn generator(&self) -> &[T] {
        &self.generator
    }

    pub fn unitary(&self) -> ComplexMatrix<T> {
        exp_anti_hermitian(&anti_hermitian_from_params(self.size, &self.generator))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EnsembleMember<T: Real> {
    pub weight: T,
    pub state: BipartitePureState<T>,
}

/// Eigenvectors scaled by `√μ_k` for the nonzero eigenvalues, as rows.
fn eigen_rows<T: Real>(rho: &DensityMatrix<T>) -> Vec<Vec<Complex<T>>> {
    let eig = rho.eigen();
    let threshold = lit::<T>(T::tolerances().psd);
    (0..rho.dim())
        .filter(|&k| eig.values[k] > threshold)
        .map(|k| {
            let s = eig.values[k].sqrt();
            eig.vector(k).into_iter().map(|z| z * s).collect()
        })
        .collect()
}

/// Number of eigenvalues above the PSD tolerance.
pub fn ensemble_rank<T: Real>(rho: &DensityMatrix<T>) -> usize {
    eigen_rows(rho).len().max(1)
}

/// `m × D` matrix whose first `r` rows are the scaled eigenvectors.
fn padded_rows<T: Real>(rho: &DensityMatrix<T>, size: usize) -> Result<ComplexMatrix<T>> {
    let rows = eigen_rows(rho);
    if rows.len() > size {
        return Err(Error::RankExceedsEnsembleSize {
            rank: rows.len(),
            ensemble_size: size,
        });
    }
    let d = rho.dim();
    let mut w = ComplexMatrix::zeros(size, d);
    for (i, row) in rows.iter().enumerate() {
        for (c, &z) in row.iter().enumerate() {
            w[(i, c)] = z;
        }
    }
    Ok(w)
}

fn members_of<T: Real>(w: &ComplexMatrix<T>, dim_a: usize, dim_b: usize) -> Vec<EnsembleMember<T>> {
    (0..w.rows())
        .filter_map(|j| {
            let row = w.row(j);
            let weight: T = row.iter().map(|z| z.norm_sqr()).sum();
            (weight >= lit(TINY_WEIGHT)).then(|| EnsembleMember {
                weight,
                state: BipartitePureState::normalized(dim_a, dim_b, row.to_vec()),
            })
        })
        .collect()
}

/// Ensemble `{p_j, |Ψ_j⟩}` of `rho` selected by `theta`.
pub fn decode_ensemble<T: Real>(
    rho: &DensityMatrix<T>,
    dim_a: usize,
    dim_b: usize,
    theta: &EnsembleParameterization<T>,
) -> Result<Vec<EnsembleMember<T>>> {
    check_dims(rho, dim_a, dim_b)?;
    let w0 = padded_rows(rho, theta.size)?;
    Ok(members_of(&theta.unitary().matmul(&w0), dim_a, dim_b))
}

/// `Σ_j p_j |Ψ_j⟩⟨Ψ_j|`.
pub fn ensemble_mixture<T: Real>(members: &[EnsembleMember<T>]) -> ComplexMatrix<T> {
    let d = members.first().map_or(0, |m| m.state.amplitudes().len());
    let mut out = ComplexMatrix::zeros(d, d);
    for m in members {
        out = &out + &ComplexMatrix::outer(m.state.amplitudes()).scale(m.weight);
    }
    out
}

fn check_dims<T: Real>(rho: &DensityMatrix<T>, dim_a: usize, dim_b: usize) -> Result<()> {
    if dim_a * dim_b != rho.dim() {
        return Err(Error::LengthMismatch {
            expected: dim_a * dim_b,
            found: rho.dim(),
        });
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct RoofConfig {
    /// Ensemble size; `r²` when unset.
    pub m: Option<usize>,
    pub restarts: usize,
    pub max_iters: usize,
    /// Initial step angle.
    pub step: f64,
    pub seed: u64,
}

impl Default for RoofConfig {
    fn default() -> Self {
        Self {
            m: None,
            restarts: 16,
            max_iters: 2000,
            step: 0.1,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RestartSummary {
    pub restart: usize,
    pub initial: f64,
    pub best: f64,
    pub iterations: usize,
    pub accepted: usize,
    pub converged: bool,
    /// Best value after each iteration.
    #[serde(skip)]
    pub history: Vec<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RoofResult<T: Real> {
    pub value: T,
    pub ensemble: Vec<EnsembleMember<T>>,
    pub rank: usize,
    pub ensemble_size: usize,
    pub restarts: usize,
    pub best_restart: usize,
    /// True when every restart met the stopping rule.
    pub converged: bool,
    pub trace: Vec<RestartSummary>,
}

impl<T: Real> RoofResult<T> {
    pub fn require_converged(&self) -> Result<&Self> {
        if self.converged {
            Ok(self)
        } else {
            let iterations = self.trace.iter().map(|t| t.iterations).max().unwrap_or(0);
            Err(Error::NotConverged { iterations })
        }
    }
}

/// `‖w‖² E(w / ‖w‖)`, zero for the zero vector.
fn member_value<T: Real>(monotone: &dyn PureMonotone<T>, dim_a: usize, dim_b: usize, w: &[Complex<T>]) -> T {
    let n2: T = w.iter().map(|z| z.norm_sqr()).sum();
    if n2 <= T::min_positive_value() {
        return T::zero();
    }
    n2 * monotone.evaluate(&BipartitePureState::normalized(dim_a, dim_b, w.to_vec()))
}

struct Objective<'a, T: Real> {
    monotone: &'a dyn PureMonotone<T>,
    dim_a: usize,
    dim_b: usize,
}

impl<T: Real> Objective<'_, T> {
    fn values(&self, w: &ComplexMatrix<T>) -> Vec<T> {
        (0..w.rows())
            .map(|j| member_value(self.monotone, self.dim_a, self.dim_b, w.row(j)))
            .collect()
    }

    /// Central-difference gradient of one member term, `∂/∂x + i ∂/∂y`.
    fn row_gradient(&self, row: &[Complex<T>]) -> Vec<Complex<T>> {
        let n: T = row.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt();
        let mut grad = vec![Complex::new(T::zero(), T::zero()); row.len()];
        if n <= lit(1e-12) {
            return grad;
        }
        let h = T::epsilon().cbrt() * n;
        let two_h = h + h;
        let mut probe = row.to_vec();
        for k in 0..row.len() {
            for unit in [Complex::new(T::one(), T::zero()), Complex::new(T::zero(), T::one())] {
                probe[k] = row[k] + unit * h;
                let plus = member_value(self.monotone, self.dim_a, self.dim_b, &probe);
                probe[k] = row[k] - unit * h;
                let minus = member_value(self.monotone, self.dim_a, self.dim_b, &probe);
                probe[k] = row[k];
                grad[k] += unit * ((plus - minus) / two_h);
            }
        }
        grad
    }

    /// Descent direction in the Lie algebra: the anti-Hermitian part of
    /// `W G†`, where `G` stacks the member gradients.
    fn direction(&self, w: &ComplexMatrix<T>) -> ComplexMatrix<T> {
        let m = w.rows();
        let mut g = ComplexMatrix::zeros(m, w.cols());
        for j in 0..m {
            for (c, z) in self.row_gradient(w.row(j)).into_iter().enumerate() {
                g[(j, c)] = z;
            }
        }
        let mg = w.matmul(&g.adjoint());
        let half = lit::<T>(0.5);
        ComplexMatrix::from_fn(m, m, |a, b| (mg[(a, b)] - mg[(b, a)].conj()) * half)
    }
}

struct RunOutcome<T> {
    w: ComplexMatrix<T>,
    value: T,
    summary: RestartSummary,
}

fn descend<T: Real>(
    obj: &Objective<'_, T>,
    mut w: ComplexMatrix<T>,
    config: &RoofConfig,
    restart: usize,
) -> RunOutcome<T> {
    let mut value: T = obj.values(&w).into_iter().sum();
    let initial = to_f64(value);
    let mut step = lit::<T>(config.step);
    let mut history = Vec::with_capacity(config.max_iters.min(4096));
    let mut accepted = 0;
    let mut converged = false;
    let mut direction: Option<ComplexMatrix<T>> = None;
    let mut iterations = 0;
    let min_step = T::epsilon();

    while iterations < config.max_iters {
        iterations += 1;
        let x = match &direction {
            Some(x) => x.clone(),
            None => {
                let x = obj.direction(&w);
                let norm = x.frobenius_norm();
                if norm <= T::epsilon() * lit(16.0) {
                    converged = true;
                    history.push(to_f64(value));
                    break;
                }
                let x = x.scale(T::one() / norm);
                direction = Some(x.clone());
                x
            }
        };
        let trial = exp_anti_hermitian(&x.scale(step)).matmul(&w);
        let trial_value: T = obj.values(&trial).into_iter().sum();
        if trial_value < value {
            w = trial;
            value = trial_value;
            accepted += 1;
            step *= lit(1.5);
            direction = None;
        } else {
            step *= lit(0.5);
            if step < min_step {
                converged = true;
                history.push(to_f64(value));
                break;
            }
        }
        history.push(to_f64(value));
        if history.len() > STALL_WINDOW {
            let old = history[history.len() - 1 - STALL_WINDOW];
            let now = to_f64(value);
            if old - now <= STALL_TOLERANCE * old.abs() {
                converged = true;
                break;
            }
        }
    }

    RunOutcome {
        w,
        value,
        summary: RestartSummary {
            restart,
            initial,
            best: to_f64(value),
            iterations,
            accepted,
            converged,
            history,
        },
    }
}

/// Upper bound on the convex roof of `monotone` at `rho` on `C^{d_A} ⊗ C^{d_B}`:
/// the best of `config.restarts` descents. Restart 0 starts from the
/// eigen-ensemble, restart `i > 0` from a random generator drawn from stream
/// `(seed, i)`.
pub fn convex_roof_estimate<T: Real>(
    monotone: &dyn PureMonotone<T>,
    rho: &DensityMatrix<T>,
    dim_a: usize,
    dim_b: usize,
    config: &RoofConfig,
) -> Result<RoofResult<T>> {
    check_dims(rho, dim_a, dim_b)?;
    let rank = ensemble_rank(rho);
    let size = config.m.unwrap_or(rank * rank);
    let w0 = padded_rows(rho, size)?;
    let obj = Objective { monotone, dim_a, dim_b };
    let restarts = config.restarts.max(1);

    let mut best: Option<RunOutcome<T>> = None;
    let mut trace = Vec::with_capacity(restarts);
    let mut best_restart = 0;
    for restart in 0..restarts {
        let start = if restart == 0 {
            w0.clone()
        } else {
            let mut stream = SeededStream::new(config.seed, restart as u64);
            EnsembleParameterization::<T>::random(rank, size, &mut stream)?
                .unitary()
                .matmul(&w0)
        };
        let run = descend(&obj, start, config, restart);
        trace.push(run.summary.clone());
        if best.as_ref().is_none_or(|b| run.value < b.value) {
            best_restart = restart;
            best = Some(run);
        }
    }
    let best = best.expect("at least one restart");
    Ok(RoofResult {
        value: best.value,
        ensemble: members_of(&best.w, dim_a, dim_b),
        rank,
        ensemble_size: size,
        restarts,
        best_restart,
        converged: trace.iter().all(|t| t.converged),
        trace,
    })
}

/// Entanglement of formation of a two-qubit state,
/// `h((1 + √(1 − C²)) / 2)` with `C` the Wootters concurrence.
pub fn entanglement_of_formation_oracle<T: Real>(rho: &DensityMatrix<T>) -> T {
    let c = wootters_concurrence(rho).min(T::one());
    let half = lit::<T>(0.5);
    let x = half + half * (T::one() - c * c).max(T::zero()).sqrt();
    shannon_entropy(&[x, T::one() - x])
}

/// Convex roof of the linear entropy `1 − Tr ρ_A²` of a two-qubit state, `C² / 2`.
pub fn linear_entropy_roof_oracle<T: Real>(rho: &DensityMatrix<T>) -> T {
    let c = wootters_concurrence(rho);
    c * c * lit(0.5)
}
