//! Sampled checks of the six admissibility criteria for predictability and
//! visibility functionals, with replayable counterexamples.
//!
//! | id    | property                                                   |
//! |-------|------------------------------------------------------------|
//! | C1    | continuity (bounded difference ratio, finite boundary limit) |
//! | C2    | invariance under basis permutations                        |
//! | C3-C4 | extremes at basis states and at uniform-diagonal states    |
//! | C5    | no increase under population transfer / coherence shrinkage |
//! | C6    | convexity                                                  |

use std::fmt;

use itertools::Itertools;
use num_complex::Complex;
use serde::Serialize;

use crate::linalg::ComplexMatrix;
use crate::measures::{Functional, MeasureKind, MeasurePair};
use crate::sampling::{ginibre_density, haar_pure, random_density, random_permutation, random_simplex, SeededStream};
use crate::scalar::{lit, to_f64, Real};
use crate::state::{DensityMatrix, PureStateVector};

/// Lipschitz-type bound on `|Δf| / ‖Δρ‖_F`.
pub const C1_RATIO_BOUND: f64 = 100.0;
pub const C1_DELTAS: [f64; 2] = [1e-4, 1e-6];
/// Interior states keep every eigenvalue at or above this.
pub const C1_INTERIOR: f64 = 1e-3;
/// Boundary limit check: mixing weight toward `I/d` and the allowed gap.
pub const C1_BOUNDARY_STEP: f64 = 1e-12;
pub const C1_BOUNDARY_GAP: f64 = 1e-3;
pub const C2_TOLERANCE: f64 = 1e-10;
/// States per permutation check; exhaustive over permutations for `d ≤ 4`.
pub const C2_STATES: usize = 100;
pub const C2_SAMPLED_PERMUTATIONS: usize = 100;
pub const C3_C4_TOLERANCE: f64 = 1e-9;
pub const C5_EPSILON: f64 = 1e-5;
pub const C5_TOLERANCE: f64 = 1e-12;
pub const C6_TOLERANCE: f64 = 1e-9;
pub const C6_GRID: usize = 11;
pub const DEFAULT_TRIALS: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Criterion {
    C1,
    C2,
    #[serde(rename = "C3-C4")]
    C3C4,
    C5,
    C6,
}

impl Criterion {
    pub const ALL: [Criterion; 5] = [
        Criterion::C1,
        Criterion::C2,
        Criterion::C3C4,
        Criterion::C5,
        Criterion::C6,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Criterion::C1 => "C1",
            Criterion::C2 => "C2",
            Criterion::C3C4 => "C3-C4",
            Criterion::C5 => "C5",
            Criterion::C6 => "C6",
        }
    }

    pub fn tolerance(self) -> f64 {
        match self {
            // C1 violations are normalized by their bounds
            Criterion::C1 => 1.0,
            Criterion::C2 => C2_TOLERANCE,
            Criterion::C3C4 => C3_C4_TOLERANCE,
            Criterion::C5 => C5_TOLERANCE,
            Criterion::C6 => C6_TOLERANCE,
        }
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Whether an extreme configuration should be a maximum or a minimum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Extreme {
    Max,
    Min,
}

/// The states behind a violation. [`Witness::replay`] recomputes the
/// violation magnitude the report recorded.
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Witness<T: Real> {
    Ratio {
        rho: DensityMatrix<T>,
        perturbed: DensityMatrix<T>,
        delta: f64,
    },
    BoundaryGap {
        boundary: DensityMatrix<T>,
        nearby: DensityMatrix<T>,
    },
    Pair {
        original: DensityMatrix<T>,
        permuted: DensityMatrix<T>,
        permutation: Vec<usize>,
    },
    Exceeds {
        reference: DensityMatrix<T>,
        sample: DensityMatrix<T>,
        expected: Extreme,
    },
    Increase {
        before: DensityMatrix<T>,
        after: DensityMatrix<T>,
    },
    Convexity {
        first: DensityMatrix<T>,
        second: DensityMatrix<T>,
        lambda: f64,
    },
}

impl<T: Real> Witness<T> {
    pub fn replay(&self, f: &dyn Functional<T>) -> f64 {
        let ev = |rho: &DensityMatrix<T>| to_f64(f.evaluate(rho));
        match self {
            Witness::Ratio { rho, perturbed, delta } => (ev(perturbed) - ev(rho)).abs() / delta / C1_RATIO_BOUND,
            Witness::BoundaryGap { boundary, nearby } => {
                let gap = (ev(nearby) - ev(boundary)).abs();
                if gap.is_finite() {
                    gap / C1_BOUNDARY_GAP
                } else {
                    f64::INFINITY
                }
            }
            Witness::Pair { original, permuted, .. } => (ev(permuted) - ev(original)).abs(),
            Witness::Exceeds {
                reference,
                sample,
                expected,
            } => match expected {
                Extreme::Max => ev(sample) - ev(reference),
                Extreme::Min => ev(reference) - ev(sample),
            },
            Witness::Increase { before, after } => ev(after) - ev(before),
            Witness::Convexity { first, second, lambda } => {
                let mix = first.mix(second, lit(*lambda));
                ev(&mix) - (lambda * ev(first) + (1.0 - lambda) * ev(second))
            }
        }
    }

    /// Every density matrix carried by the witness.
    pub fn states(&self) -> Vec<&DensityMatrix<T>> {
        match self {
            Witness::Ratio { rho, perturbed, .. } => vec![rho, perturbed],
            Witness::BoundaryGap { boundary, nearby } => vec![boundary, nearby],
            Witness::Pair { original, permuted, .. } => vec![original, permuted],
            Witness::Exceeds { reference, sample, .. } => vec![reference, sample],
            Witness::Increase { before, after } => vec![before, after],
            Witness::Convexity { first, second, .. } => vec![first, second],
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CriterionReport<T: Real> {
    pub criterion: Criterion,
    pub measure: String,
    pub kind: MeasureKind,
    pub dim: usize,
    pub trials: usize,
    pub seed: u64,
    pub worst_violation: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub counterexample: Option<Witness<T>>,
}

/// Running maximum of a violation with the witness that produced it.
struct Worst<T: Real> {
    value: f64,
    witness: Option<Witness<T>>,
}

impl<T: Real> Worst<T> {
    fn new() -> Self {
        Self {
            value: f64::NEG_INFINITY,
            witness: None,
        }
    }

    fn offer(&mut self, value: f64, witness: impl FnOnce() -> Witness<T>) {
        let value = if value.is_nan() { f64::INFINITY } else { value };
        if value > self.value {
            self.value = value;
            self.witness = Some(witness());
        }
    }

    fn finish(
        self,
        criterion: Criterion,
        f: &dyn Functional<T>,
        dim: usize,
        trials: usize,
        seed: u64,
    ) -> CriterionReport<T> {
        let tolerance = criterion.tolerance();
        let worst = self.value.max(0.0);
        let pass = worst <= tolerance;
        CriterionReport {
            criterion,
            measure: f.name().to_string(),
            kind: f.kind(),
            dim,
            trials,
            seed,
            worst_violation: worst,
            tolerance,
            pass,
            counterexample: if pass { None } else { self.witness },
        }
    }
}

fn stream_for(criterion: Criterion, dim: usize, seed: u64) -> SeededStream {
    let id = Criterion::ALL.iter().position(|&c| c == criterion).unwrap_or(0) as u64;
    SeededStream::new(seed, (id + 1) << 32 | dim as u64)
}

/// Cycles through Haar pure, random-rank Ginibre, incoherent and full-rank
/// Ginibre states.
fn trial_state<T: Real>(dim: usize, i: usize, stream: &mut SeededStream) -> DensityMatrix<T> {
    match i % 4 {
        0 => DensityMatrix::from_pure(&haar_pure(dim, stream)),
        1 => random_density(dim, stream),
        2 => DensityMatrix::from_matrix_unchecked(ComplexMatrix::from_diagonal(
            random_simplex::<T>(dim, stream).as_slice(),
        )),
        _ => ginibre_density(dim, dim, stream),
    }
}

/// Ginibre state with every eigenvalue at least [`C1_INTERIOR`].
fn interior_state<T: Real>(dim: usize, stream: &mut SeededStream) -> DensityMatrix<T> {
    for _ in 0..100 {
        let rho = ginibre_density::<T>(dim, dim, stream);
        if rho.eigenvalues().last().is_some_and(|&x| to_f64(x) >= C1_INTERIOR) {
            return rho;
        }
    }
    let w = lit::<T>(2.0 * C1_INTERIOR * dim as f64);
    DensityMatrix::maximally_mixed(dim).mix(&ginibre_density(dim, dim, stream), w)
}

fn boundary_state<T: Real>(dim: usize, i: usize, stream: &mut SeededStream) -> DensityMatrix<T> {
    match i % 3 {
        0 => DensityMatrix::from_pure(&haar_pure(dim, stream)),
        1 => {
            let mut p = random_simplex::<T>(dim, stream).as_slice().to_vec();
            let j = stream.below(dim);
            p[j] = T::zero();
            let s: T = p.iter().copied().sum();
            let p: Vec<T> = p.into_iter().map(|x| x / s).collect();
            DensityMatrix::from_matrix_unchecked(ComplexMatrix::from_diagonal(&p))
        }
        _ => ginibre_density(dim, dim - 1, stream),
    }
}

/// C1: for interior states and perturbations of Frobenius size `δ`,
/// `|Δf| ≤ K δ`; on boundary states `f` is finite and the limit from the
/// interior matches within [`C1_BOUNDARY_GAP`]. The reported violation is
/// the larger of `ratio / K` and `gap / C1_BOUNDARY_GAP`.
pub fn check_c1_continuity<T: Real>(f: &dyn Functional<T>, dim: usize, trials: usize, seed: u64) -> CriterionReport<T> {
    let mut stream = stream_for(Criterion::C1, dim, seed);
    let mut worst = Worst::new();
    for _ in 0..trials {
        let rho = interior_state::<T>(dim, &mut stream);
        let sigma = random_density::<T>(dim, &mut stream);
        let diff = (sigma.matrix() - rho.matrix()).frobenius_norm();
        let base = to_f64(f.evaluate(&rho));
        for delta in C1_DELTAS {
            let perturbed = rho.mix(&sigma, T::one() - lit::<T>(delta) / diff);
            let ratio = (to_f64(f.evaluate(&perturbed)) - base).abs() / delta;
            worst.offer(ratio / C1_RATIO_BOUND, || Witness::Ratio {
                rho: rho.clone(),
                perturbed: perturbed.clone(),
                delta,
            });
        }
    }
    let mixed = DensityMatrix::<T>::maximally_mixed(dim);
    for i in 0..(trials / 100).max(10) {
        let boundary = boundary_state::<T>(dim, i, &mut stream);
        let nearby = mixed.mix(&boundary, lit(C1_BOUNDARY_STEP));
        let a = to_f64(f.evaluate(&boundary));
        let b = to_f64(f.evaluate(&nearby));
        let gap = (a - b).abs();
        let v = if gap.is_finite() {
            gap / C1_BOUNDARY_GAP
        } else {
            f64::INFINITY
        };
        worst.offer(v, || Witness::BoundaryGap {
            boundary: boundary.clone(),
            nearby: nearby.clone(),
        });
    }
    worst.finish(Criterion::C1, f, dim, trials, seed)
}

/// `ρ_{π(j) π(k)}`.
pub fn permute<T: Real>(rho: &DensityMatrix<T>, perm: &[usize]) -> DensityMatrix<T> {
    let d = rho.dim();
    DensityMatrix::from_matrix_unchecked(ComplexMatrix::from_fn(d, d, |j, k| rho.get(perm[j], perm[k])))
}

/// C2: `|f(P ρ Pᵀ) − f(ρ)| ≤ 1e−10` over all permutations for `d ≤ 4` and
/// 100 sampled ones otherwise, on [`C2_STATES`] random states.
pub fn check_c2_permutation<T: Real>(f: &dyn Functional<T>, dim: usize, seed: u64) -> CriterionReport<T> {
    let mut stream = stream_for(Criterion::C2, dim, seed);
    let perms: Vec<Vec<usize>> = if dim <= 4 {
        (0..dim).permutations(dim).collect()
    } else {
        (0..C2_SAMPLED_PERMUTATIONS)
            .map(|_| random_permutation(dim, &mut stream))
            .collect()
    };
    let mut worst = Worst::new();
    for i in 0..C2_STATES {
        let rho = trial_state::<T>(dim, i, &mut stream);
        let base = to_f64(f.evaluate(&rho));
        for perm in &perms {
            let permuted = permute(&rho, perm);
            let v = (to_f64(f.evaluate(&permuted)) - base).abs();
            worst.offer(v, || Witness::Pair {
                original: rho.clone(),
                permuted: permuted.clone(),
                permutation: perm.clone(),
            });
        }
    }
    worst.finish(Criterion::C2, f, dim, C2_STATES, seed)
}

/// `Σ_j e^{iφ_j} |j⟩ / √d`.
fn phase_state<T: Real>(phases: &[f64]) -> DensityMatrix<T> {
    let amps = phases
        .iter()
        .map(|&p| Complex::new(lit(p.cos()), lit(p.sin())))
        .collect();
    DensityMatrix::from_pure(&PureStateVector::normalized(amps))
}

/// C3 and C4 against `trials` random states.
///
/// * P: maximum at every `|j⟩⟨j|`; minimum at `I/d` and at uniform-diagonal
///   pure states.
/// * V: minimum at every `|j⟩⟨j|`; maximum at uniform-diagonal pure states
///   (uniform and random phases).
pub fn check_c3_c4_extremes<T: Real>(
    f: &dyn Functional<T>,
    dim: usize,
    trials: usize,
    seed: u64,
) -> CriterionReport<T> {
    let mut stream = stream_for(Criterion::C3C4, dim, seed);
    let basis: Vec<DensityMatrix<T>> = (0..dim).map(|j| DensityMatrix::basis_projector(dim, j)).collect();
    let mut uniform_pure = vec![phase_state::<T>(&vec![0.0; dim])];
    for _ in 0..4 {
        let phases: Vec<f64> = (0..dim).map(|_| std::f64::consts::TAU * stream.uniform()).collect();
        uniform_pure.push(phase_state(&phases));
    }
    let (at_basis, at_uniform, uniform_configs) = match f.kind() {
        MeasureKind::Predictability => {
            let mut configs = vec![DensityMatrix::maximally_mixed(dim)];
            configs.extend(uniform_pure);
            (Extreme::Max, Extreme::Min, configs)
        }
        MeasureKind::Visibility => (Extreme::Min, Extreme::Max, uniform_pure),
    };
    let basis_values: Vec<f64> = basis.iter().map(|r| to_f64(f.evaluate(r))).collect();
    let uniform_values: Vec<f64> = uniform_configs.iter().map(|r| to_f64(f.evaluate(r))).collect();
    let excess = |expected: Extreme, reference: f64, sample: f64| match expected {
        Extreme::Max => sample - reference,
        Extreme::Min => reference - sample,
    };

    let mut worst = Worst::new();
    for i in 0..trials {
        let sample = trial_state::<T>(dim, i, &mut stream);
        let s = to_f64(f.evaluate(&sample));
        for (reference, &r) in basis.iter().zip(&basis_values) {
            worst.offer(excess(at_basis, r, s), || Witness::Exceeds {
                reference: reference.clone(),
                sample: sample.clone(),
                expected: at_basis,
            });
        }
        for (reference, &r) in uniform_configs.iter().zip(&uniform_values) {
            worst.offer(excess(at_uniform, r, s), || Witness::Exceeds {
                reference: reference.clone(),
                sample: sample.clone(),
                expected: at_uniform,
            });
        }
    }
    worst.finish(Criterion::C3C4, f, dim, trials, seed)
}

/// Off-diagonal block scaled by `1 − ε`: `(1 − ε) ρ + ε Δ(ρ)`.
pub fn shrink_coherences<T: Real>(rho: &DensityMatrix<T>, eps: T) -> DensityMatrix<T> {
    let keep = T::one() - eps;
    let d = rho.dim();
    DensityMatrix::from_matrix_unchecked(ComplexMatrix::from_fn(d, d, |j, k| {
        let z = rho.get(j, k);
        if j == k {
            z
        } else {
            z * keep
        }
    }))
}

/// C5 with `ε = 1e−5`, tolerance `1e−12`.
///
/// * P: on random incoherent states, move `ε` from a larger population to a
///   smaller one.
/// * V: scale every coherence of a random state by `1 − ε`.
pub fn check_c5_transfer<T: Real>(f: &dyn Functional<T>, dim: usize, trials: usize, seed: u64) -> CriterionReport<T> {
    let mut stream = stream_for(Criterion::C5, dim, seed);
    let eps = lit::<T>(C5_EPSILON);
    let mut worst = Worst::new();
    for i in 0..trials {
        let (before, after) = match f.kind() {
            MeasureKind::Predictability => {
                let p = random_simplex::<T>(dim, &mut stream).as_slice().to_vec();
                let j = stream.below(dim);
                let mut k = stream.below(dim - 1);
                if k >= j {
                    k += 1;
                }
                let (hi, lo) = if p[j] >= p[k] { (j, k) } else { (k, j) };
                if p[hi] - p[lo] <= eps + eps {
                    continue;
                }
                let mut q = p.clone();
                q[hi] -= eps;
                q[lo] += eps;
                (
                    DensityMatrix::from_matrix_unchecked(ComplexMatrix::from_diagonal(&p)),
                    DensityMatrix::from_matrix_unchecked(ComplexMatrix::from_diagonal(&q)),
                )
            }
            MeasureKind::Visibility => {
                // skip the incoherent slot of the cycle
                let rho = trial_state::<T>(dim, if i % 4 == 2 { 3 } else { i }, &mut stream);
                let shrunk = shrink_coherences(&rho, eps);
                (rho, shrunk)
            }
        };
        let v = to_f64(f.evaluate(&after)) - to_f64(f.evaluate(&before));
        worst.offer(v, || Witness::Increase {
            before: before.clone(),
            after: after.clone(),
        });
    }
    worst.finish(Criterion::C5, f, dim, trials, seed)
}

/// C6: `f(λρ + (1−λ)σ) ≤ λ f(ρ) + (1−λ) f(σ)` on an 11-point `λ` grid.
pub fn check_c6_convexity<T: Real>(f: &dyn Functional<T>, dim: usize, trials: usize, seed: u64) -> CriterionReport<T> {
    let mut stream = stream_for(Criterion::C6, dim, seed);
    let mut worst = Worst::new();
    for i in 0..trials {
        let first = trial_state::<T>(dim, i, &mut stream);
        let second = trial_state::<T>(dim, i + 1 + stream.below(3), &mut stream);
        let f1 = to_f64(f.evaluate(&first));
        let f2 = to_f64(f.evaluate(&second));
        for g in 1..C6_GRID - 1 {
            let lambda = g as f64 / (C6_GRID - 1) as f64;
            let mix = first.mix(&second, lit(lambda));
            let v = to_f64(f.evaluate(&mix)) - (lambda * f1 + (1.0 - lambda) * f2);
            worst.offer(v, || Witness::Convexity {
                first: first.clone(),
                second: second.clone(),
                lambda,
            });
        }
    }
    worst.finish(Criterion::C6, f, dim, trials, seed)
}

/// C1, C2, C3-C4, C5 and C6 for one functional.
pub fn audit_measure<T: Real>(f: &dyn Functional<T>, dim: usize, trials: usize, seed: u64) -> Vec<CriterionReport<T>> {
    vec![
        check_c1_continuity(f, dim, trials, seed),
        check_c2_permutation(f, dim, seed),
        check_c3_c4_extremes(f, dim, trials, seed),
        check_c5_transfer(f, dim, trials, seed),
        check_c6_convexity(f, dim, trials, seed),
    ]
}

/// Audits both members of a pair with `trials` samples per criterion.
pub fn full_audit_with_trials<T: Real>(
    pair: &MeasurePair<T>,
    dim: usize,
    trials: usize,
    seed: u64,
) -> Vec<CriterionReport<T>> {
    let mut reports = audit_measure(pair.predictability(), dim, trials, seed);
    reports.extend(audit_measure(pair.visibility(), dim, trials, seed));
    reports
}

/// Audits both members of a pair with [`DEFAULT_TRIALS`] samples.
pub fn full_audit<T: Real>(pair: &MeasurePair<T>, dim: usize, seed: u64) -> Vec<CriterionReport<T>> {
    full_audit_with_trials(pair, dim, DEFAULT_TRIALS, seed)
}

/// A pair may be used to build monotones only if every report passes.
pub fn certified<T: Real>(reports: &[CriterionReport<T>]) -> bool {
    reports.iter().all(|r| r.pass)
}

/// Deliberately broken functionals, each failing one criterion.
pub mod doubles {
    use super::*;
    use crate::measures::c_hs;

    /// `⌊5000 ρ_00⌋ / 5000`: a step function of one population.
    #[derive(Debug, Clone, Copy, Default)]
    pub struct QuantizedPopulation;

    impl<T: Real> Functional<T> for QuantizedPopulation {
        fn name(&self) -> &str {
            "quantized_population"
        }
        fn kind(&self) -> MeasureKind {
            MeasureKind::Predictability
        }
        fn evaluate(&self, rho: &DensityMatrix<T>) -> T {
            let levels = lit::<T>(5000.0);
            (rho.get(0, 0).re * levels).floor() / levels
        }
    }

    /// `Σ_j (j + 1) ρ_jj² − 1/d`.
    #[derive(Debug, Clone, Copy, Default)]
    pub struct BasisWeighted;

    impl<T: Real> Functional<T> for BasisWeighted {
        fn name(&self) -> &str {
            "basis_weighted"
        }
        fn kind(&self) -> MeasureKind {
            MeasureKind::Predictability
        }
        fn evaluate(&self, rho: &DensityMatrix<T>) -> T {
            let p = rho.populations();
            let s: T = p
                .iter()
                .enumerate()
                .map(|(j, &x)| lit::<T>((j + 1) as f64) * x * x)
                .sum();
            s - T::one() / lit(p.len() as f64)
        }
    }

    /// `(d − 1)/d² − Var(ρ_jj)`: grows as populations even out.
    #[derive(Debug, Clone, Copy, Default)]
    pub struct DiagonalVarianceComplement;

    impl<T: Real> Functional<T> for DiagonalVarianceComplement {
        fn name(&self) -> &str {
            "diagonal_variance_complement"
        }
        fn kind(&self) -> MeasureKind {
            MeasureKind::Predictability
        }
        fn evaluate(&self, rho: &DensityMatrix<T>) -> T {
            let p = rho.populations();
            let d = lit::<T>(p.len() as f64);
            let mean = T::one() / d;
            let var: T = p.iter().map(|&x| (x - mean) * (x - mean)).sum::<T>() / d;
            (d - T::one()) / (d * d) - var
        }
    }

    /// `C_hs^{1/4}`: a concave transform of a convex measure.
    #[derive(Debug, Clone, Copy, Default)]
    pub struct FourthRootHs;

    impl<T: Real> Functional<T> for FourthRootHs {
        fn name(&self) -> &str {
            "fourth_root_hs"
        }
        fn kind(&self) -> MeasureKind {
            MeasureKind::Visibility
        }
        fn evaluate(&self, rho: &DensityMatrix<T>) -> T {
            c_hs(rho).sqrt().sqrt()
        }
    }

    /// `−C_hs`.
    #[derive(Debug, Clone, Copy, Default)]
    pub struct NegatedHs;

    impl<T: Real> Functional<T> for NegatedHs {
        fn name(&self) -> &str {
            "negated_hs"
        }
        fn kind(&self) -> MeasureKind {
            MeasureKind::Visibility
        }
        fn evaluate(&self, rho: &DensityMatrix<T>) -> T {
            -c_hs(rho)
        }
    }

    /// Each double with the criterion it is built to fail.
    pub fn designated<T: Real>() -> Vec<(Box<dyn Functional<T>>, Criterion)> {
        vec![
            (Box::new(QuantizedPopulation), Criterion::C1),
            (Box::new(BasisWeighted), Criterion::C2),
            (Box::new(NegatedHs), Criterion::C3C4),
            (Box::new(DiagonalVarianceComplement), Criterion::C5),
            (Box::new(FourthRootHs), Criterion::C6),
        ]
    }
}
