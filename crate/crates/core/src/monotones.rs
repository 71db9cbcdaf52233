//! Pure-state entanglement monotones `E = α − P(ρ_A) − C(ρ_A)` and their
//! Schmidt-coefficient closed forms.
//!
//! [`monotone_pure`] evaluates a pair on the reduced state in the reference
//! basis. For `vn` and `hs` the sum `P + C` depends only on the spectrum of
//! `ρ_A`, so the result equals the closed form on the Schmidt coefficients
//! for every state. For `l1` and `wy` it does so only when `ρ_A` is
//! incoherent in the reference basis (e.g. the reference basis is the
//! Schmidt basis); [`monotone_schmidt`] always evaluates in that basis.

use serde::Serialize;

use crate::linalg::ComplexMatrix;
use crate::measures::MeasurePair;
use crate::sampling::{random_simplex, SeededStream};
use crate::scalar::{lit, noise_floor, shannon_entropy, to_f64, Real};
use crate::state::{
    majorizes, partial_trace_b, psd_sqrt, schmidt_coefficients, BipartitePureState, DensityMatrix, ProbabilityVector,
};

/// A functional of a probability vector (a spectrum or Schmidt vector).
pub trait SpectralFunction<T: Real>: Send + Sync {
    fn name(&self) -> &str;
    fn of(&self, lambda: &[T]) -> T;
}

/// A functional of bipartite pure states.
pub trait PureMonotone<T: Real>: Send + Sync {
    fn name(&self) -> &str;
    fn evaluate(&self, psi: &BipartitePureState<T>) -> T;
}

/// Closed-form monotones on Schmidt coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SchmidtMonotone {
    SVn,
    SL,
    WL1,
    WWy,
}

impl SchmidtMonotone {
    pub const ALL: [SchmidtMonotone; 4] = [
        SchmidtMonotone::SVn,
        SchmidtMonotone::SL,
        SchmidtMonotone::WL1,
        SchmidtMonotone::WWy,
    ];

    pub fn id(self) -> &'static str {
        match self {
            SchmidtMonotone::SVn => "s_vn",
            SchmidtMonotone::SL => "s_l",
            SchmidtMonotone::WL1 => "w_l1",
            SchmidtMonotone::WWy => "w_wy",
        }
    }

    pub fn from_id(name: &str) -> crate::Result<Self> {
        Self::ALL
            .into_iter()
            .find(|m| m.id() == name)
            .ok_or_else(|| crate::Error::UnknownName {
                kind: "monotone",
                name: name.to_string(),
            })
    }

    /// Closed form completing the built-in pair of the given name.
    pub fn for_pair(pair: &str) -> Option<Self> {
        match pair {
            "vn" => Some(SchmidtMonotone::SVn),
            "hs" => Some(SchmidtMonotone::SL),
            "l1" => Some(SchmidtMonotone::WL1),
            "wy" => Some(SchmidtMonotone::WWy),
            _ => None,
        }
    }

    pub fn value<T: Real>(self, lambda: &[T]) -> T {
        match self {
            SchmidtMonotone::SVn => s_vn(lambda),
            SchmidtMonotone::SL => s_l(lambda),
            SchmidtMonotone::WL1 => w_l1(lambda),
            SchmidtMonotone::WWy => w_wy(lambda),
        }
    }
}

impl<T: Real> SpectralFunction<T> for SchmidtMonotone {
    fn name(&self) -> &str {
        self.id()
    }

    fn of(&self, lambda: &[T]) -> T {
        self.value(lambda)
    }
}

impl<T: Real> PureMonotone<T> for SchmidtMonotone {
    fn name(&self) -> &str {
        self.id()
    }

    fn evaluate(&self, psi: &BipartitePureState<T>) -> T {
        self.value(schmidt_coefficients(psi).as_slice())
    }
}

/// `−Σ λ_k log2 λ_k`.
pub fn s_vn<T: Real>(lambda: &[T]) -> T {
    shannon_entropy(lambda).max(T::zero())
}

/// `1 − Σ λ_k²`.
pub fn s_l<T: Real>(lambda: &[T]) -> T {
    (T::one() - lambda.iter().map(|&x| x * x).sum::<T>()).max(T::zero())
}

/// `Σ_{j≠k} √(λ_j λ_k)`.
pub fn w_l1<T: Real>(lambda: &[T]) -> T {
    let roots: Vec<T> = lambda.iter().map(|&x| x.max(T::zero()).sqrt()).collect();
    let mut s = T::zero();
    for (j, &a) in roots.iter().enumerate() {
        for (k, &b) in roots.iter().enumerate() {
            if j != k {
                s += a * b;
            }
        }
    }
    s
}

/// `Σ_j ((√λ_j)² − λ_j²)`.
pub fn w_wy<T: Real>(lambda: &[T]) -> T {
    lambda
        .iter()
        .map(|&x| {
            let r = x.max(T::zero()).sqrt();
            r * r - x * x
        })
        .sum::<T>()
        .max(T::zero())
}

/// Robustness form `(Σ_j √λ_j)² − 1` of `w_l1`.
pub fn robustness<T: Real>(lambda: &[T]) -> T {
    let s: T = lambda.iter().map(|&x| x.max(T::zero()).sqrt()).sum();
    s * s - T::one()
}

#[derive(Debug, Clone, Serialize)]
pub struct MonotoneValue<T> {
    pub name: String,
    /// Value clamped at zero when round-off pushes it slightly negative.
    pub value: T,
    pub raw: T,
    pub alpha: T,
    pub schmidt: Vec<T>,
}

impl<T: Real> MonotoneValue<T> {
    /// `1 − (P + C)/α`.
    pub fn normalized(&self) -> T {
        self.value / self.alpha
    }
}

fn clamp_slack<T: Real>(raw: T) -> T {
    let tol = lit::<T>(T::tolerances().slack);
    if raw < T::zero() && raw >= -tol {
        T::zero()
    } else {
        raw
    }
}

/// `α(d_A) − P(ρ_A) − C(ρ_A)` with `ρ_A = Tr_B |Ψ⟩⟨Ψ|` in the reference basis.
pub fn monotone_pure<T: Real>(pair: &MeasurePair<T>, psi: &BipartitePureState<T>) -> MonotoneValue<T> {
    let rho_a = partial_trace_b(psi);
    let alpha = pair.alpha(psi.dim_a());
    let raw = alpha - pair.p(&rho_a) - pair.c(&rho_a);
    MonotoneValue {
        name: pair.name().to_string(),
        value: clamp_slack(raw),
        raw,
        alpha,
        schmidt: schmidt_coefficients(psi).as_slice().to_vec(),
    }
}

/// The same functional evaluated on `diag(λ)`, i.e. with the Schmidt basis
/// as reference basis. A symmetric function of the Schmidt coefficients.
pub fn monotone_schmidt<T: Real>(pair: &MeasurePair<T>, lambda: &ProbabilityVector<T>) -> T {
    let rho = DensityMatrix::from_matrix_unchecked(ComplexMatrix::from_diagonal(lambda.as_slice()));
    clamp_slack(pair.alpha(lambda.len()) - pair.p(&rho) - pair.c(&rho))
}

/// A [`MeasurePair`] used as a pure-state functional through [`monotone_pure`].
#[derive(Debug, Clone)]
pub struct PairMonotone<T: Real>(pub MeasurePair<T>);

impl<T: Real> PureMonotone<T> for PairMonotone<T> {
    fn name(&self) -> &str {
        self.0.name()
    }

    fn evaluate(&self, psi: &BipartitePureState<T>) -> T {
        monotone_pure(&self.0, psi).value
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct LocalUnitaryReport {
    pub monotone: String,
    pub before: f64,
    pub after: f64,
    pub deviation: f64,
}

/// `|E(Ψ) − E((U_A ⊗ U_B)Ψ)|`.
pub fn check_local_unitary_invariance<T: Real>(
    monotone: &dyn PureMonotone<T>,
    psi: &BipartitePureState<T>,
    ua: &ComplexMatrix<T>,
    ub: &ComplexMatrix<T>,
) -> LocalUnitaryReport {
    let before = monotone.evaluate(psi);
    let after = monotone.evaluate(&psi.apply_local(ua, ub));
    LocalUnitaryReport {
        monotone: monotone.name().to_string(),
        before: to_f64(before),
        after: to_f64(after),
        deviation: to_f64((before - after).abs()),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SchurReport<T> {
    pub function: String,
    pub dim: usize,
    pub trials: usize,
    /// Largest `f(q) − f(p)` over pairs with `p ≺ q`.
    pub worst_violation: f64,
    /// `(p, q)` with `p ≺ q` attaining the worst violation, when it fails.
    pub counterexample: Option<(Vec<T>, Vec<T>)>,
    pub pass: bool,
}

pub const SCHUR_TOLERANCE: f64 = 1e-10;

/// Replaces `(q_j, q_k)` by `(t q_j + (1−t) q_k, t q_k + (1−t) q_j)`; the
/// result is majorized by `q`.
fn robin_hood<T: Real>(q: &[T], stream: &mut SeededStream) -> Vec<T> {
    let mut p = q.to_vec();
    let n = p.len();
    if n < 2 {
        return p;
    }
    let j = stream.below(n);
    let mut k = stream.below(n - 1);
    if k >= j {
        k += 1;
    }
    let t = lit::<T>(stream.uniform());
    let (a, b) = (p[j], p[k]);
    p[j] = t * a + (T::one() - t) * b;
    p[k] = t * b + (T::one() - t) * a;
    p
}

/// Samples `p ≺ q` by one to three random ε-transfers applied to a random
/// simplex point `q`, checking `f(p) ≥ f(q) − 1e−10`.
pub fn check_schur_concavity<T: Real>(
    function: &dyn SpectralFunction<T>,
    trials: usize,
    dim: usize,
    seed: u64,
) -> SchurReport<T> {
    let mut stream = SeededStream::new(seed, dim as u64);
    let tol = T::tolerances();
    let mut worst = f64::NEG_INFINITY;
    let mut counterexample = None;
    for _ in 0..trials {
        let q = random_simplex::<T>(dim, &mut stream);
        let mut p = q.as_slice().to_vec();
        for _ in 0..(1 + stream.below(3)) {
            p = robin_hood(&p, &mut stream);
        }
        let pv = ProbabilityVector::normalized(p.clone());
        debug_assert!(majorizes(&q, &pv, &tol).unwrap_or(false));
        let violation = to_f64(function.of(q.as_slice()) - function.of(&p));
        if violation > worst {
            worst = violation;
            if violation > SCHUR_TOLERANCE {
                counterexample = Some((p, q.as_slice().to_vec()));
            }
        }
    }
    SchurReport {
        function: function.name().to_string(),
        dim,
        trials,
        worst_violation: worst.max(0.0),
        pass: worst <= SCHUR_TOLERANCE,
        counterexample,
    }
}

/// Wootters concurrence of a two-qubit state: `max(0, μ1 − μ2 − μ3 − μ4)`
/// with `μ_i` the descending square roots of the eigenvalues of
/// `√ρ ρ̃ √ρ`, `ρ̃ = (σ_y ⊗ σ_y) ρ* (σ_y ⊗ σ_y)`.
pub fn wootters_concurrence<T: Real>(rho: &DensityMatrix<T>) -> T {
    assert_eq!(rho.dim(), 4, "concurrence needs a two-qubit state");
    // σ_y ⊗ σ_y is real: anti-diagonal (-1, 1, 1, -1)
    let mut yy = ComplexMatrix::<T>::zeros(4, 4);
    let signs = [-1.0, 1.0, 1.0, -1.0];
    for (i, &s) in signs.iter().enumerate() {
        yy[(i, 3 - i)] = num_complex::Complex::new(lit(s), T::zero());
    }
    let tilde = yy.matmul(&rho.matrix().conj()).matmul(&yy);
    let root = psd_sqrt(rho);
    let inner = DensityMatrix::from_matrix_unchecked(root.matmul(&tilde).matmul(&root));
    let floor = noise_floor::<T>(4);
    let mu: Vec<T> = inner
        .eigenvalues()
        .into_iter()
        .map(|x| if x > floor { x.sqrt() } else { T::zero() })
        .collect();
    (mu[0] - mu[1] - mu[2] - mu[3]).max(T::zero())
}

/// Werner state `p |Φ+⟩⟨Φ+| + (1 − p) I/4`.
pub fn werner_state<T: Real>(p: T) -> DensityMatrix<T> {
    let bell = DensityMatrix::from_pure(&BipartitePureState::<T>::maximally_entangled(2).as_vector());
    bell.mix(&DensityMatrix::maximally_mixed(4), p)
}
