//! Incomplete (`P + C ≤ α`) and complete (`P + C + E = α`) complementarity
//! relations, with sweeps over sampled states.

use serde::Serialize;

use crate::measures::{MeasurePair, Registry};
use crate::monotones::monotone_pure;
use crate::sampling::{ginibre_density, haar_bipartite, SeededStream};
use crate::scalar::{lit, to_f64, Real};
use crate::state::{partial_trace_b, BipartitePureState, DensityMatrix};

#[derive(Debug, Clone, Serialize)]
pub struct RelationReport<T> {
    pub pair_name: String,
    pub dim_a: usize,
    /// Present for complete relations.
    pub dim_b: Option<usize>,
    pub p_value: T,
    pub c_value: T,
    pub e_value: Option<T>,
    pub alpha: T,
    /// `α − P − C`, or `α − P − C − E` for complete relations.
    pub slack: T,
    /// `Tr ρ_A²`.
    pub purity: T,
    /// `|slack| < τ_slack`.
    pub saturated: bool,
}

pub fn check_incomplete<T: Real>(pair: &MeasurePair<T>, rho: &DensityMatrix<T>) -> RelationReport<T> {
    let p = pair.p(rho);
    let c = pair.c(rho);
    let alpha = pair.alpha(rho.dim());
    let slack = alpha - p - c;
    RelationReport {
        pair_name: pair.name().to_string(),
        dim_a: rho.dim(),
        dim_b: None,
        p_value: p,
        c_value: c,
        e_value: None,
        alpha,
        slack,
        purity: rho.purity(),
        saturated: slack.abs() < lit(T::tolerances().slack),
    }
}

/// `α(d_A) − P(ρ_A) − C(ρ_A) − E(Ψ)` with `E` from [`monotone_pure`].
pub fn check_complete<T: Real>(pair: &MeasurePair<T>, psi: &BipartitePureState<T>) -> RelationReport<T> {
    let rho_a = partial_trace_b(psi);
    let p = pair.p(&rho_a);
    let c = pair.c(&rho_a);
    let e = monotone_pure(pair, psi).value;
    let alpha = pair.alpha(psi.dim_a());
    let slack = alpha - p - c - e;
    RelationReport {
        pair_name: pair.name().to_string(),
        dim_a: psi.dim_a(),
        dim_b: Some(psi.dim_b()),
        p_value: p,
        c_value: c,
        e_value: Some(e),
        alpha,
        slack,
        purity: rho_a.purity(),
        saturated: slack.abs() < lit(T::tolerances().slack),
    }
}

/// One CSV sweep row: `pair_name, d_A, d_B, P, C, E, alpha, slack, purity, seed`.
#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub index: usize,
    pub pair_name: String,
    pub d_a: usize,
    pub d_b: Option<usize>,
    pub p: f64,
    pub c: f64,
    pub e: Option<f64>,
    pub alpha: f64,
    pub slack: f64,
    pub purity: f64,
    pub seed: u64,
}

impl SweepRow {
    pub const HEADER: &'static str = "pair_name,d_A,d_B,P,C,E,alpha,slack,purity,seed";

    pub fn from_report<T: Real>(index: usize, r: &RelationReport<T>, seed: u64) -> Self {
        Self {
            index,
            pair_name: r.pair_name.clone(),
            d_a: r.dim_a,
            d_b: r.dim_b,
            p: to_f64(r.p_value),
            c: to_f64(r.c_value),
            e: r.e_value.map(to_f64),
            alpha: to_f64(r.alpha),
            slack: to_f64(r.slack),
            purity: to_f64(r.purity),
            seed,
        }
    }

    /// Numbers printed with 12 significant digits.
    pub fn to_csv(&self) -> String {
        let opt_usize = |x: Option<usize>| x.map(|v| v.to_string()).unwrap_or_default();
        let opt = |x: Option<f64>| x.map(sig12).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.pair_name,
            self.d_a,
            opt_usize(self.d_b),
            sig12(self.p),
            sig12(self.c),
            opt(self.e),
            sig12(self.alpha),
            sig12(self.slack),
            sig12(self.purity),
            self.seed
        )
    }
}

/// Formats with 12 significant digits in scientific notation.
pub fn sig12(x: f64) -> String {
    format!("{x:.11e}")
}

/// What a sweep samples.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepKind {
    /// Ginibre density matrices of rank `rank` (full rank when `None`).
    Incomplete { dim: usize, rank: Option<usize> },
    /// Haar bipartite pure states.
    Complete { dim_a: usize, dim_b: usize },
}

/// A sampled input of a sweep.
#[derive(Debug, Clone)]
pub enum SampledState<T: Real> {
    Density(DensityMatrix<T>),
    Bipartite(BipartitePureState<T>),
}

impl<T: Real> SampledState<T> {
    /// State `index` of a sweep, drawn from stream `index` of `seed`.
    pub fn draw(kind: SweepKind, seed: u64, index: usize) -> Self {
        let mut stream = SeededStream::new(seed, index as u64);
        match kind {
            SweepKind::Incomplete { dim, rank } => {
                SampledState::Density(ginibre_density(dim, rank.unwrap_or(dim), &mut stream))
            }
            SweepKind::Complete { dim_a, dim_b } => SampledState::Bipartite(haar_bipartite(dim_a, dim_b, &mut stream)),
        }
    }

    pub fn check(&self, pair: &MeasurePair<T>) -> RelationReport<T> {
        match self {
            SampledState::Density(rho) => check_incomplete(pair, rho),
            SampledState::Bipartite(psi) => check_complete(pair, psi),
        }
    }
}

/// Evaluates every pair on `states` sampled states. Rows are ordered by
/// `(state index, pair order)`.
pub fn sweep<T: Real>(
    registry: &Registry<T>,
    pairs: &[String],
    kind: SweepKind,
    states: usize,
    seed: u64,
) -> crate::Result<Vec<SweepRow>> {
    let selected: Vec<&MeasurePair<T>> = pairs
        .iter()
        .map(|n| registry.require(n))
        .collect::<crate::Result<_>>()?;
    let mut rows = Vec::with_capacity(states * selected.len());
    for i in 0..states {
        let state = SampledState::<T>::draw(kind, seed, i);
        for pair in &selected {
            rows.push(SweepRow::from_report(i, &state.check(pair), seed));
        }
    }
    Ok(rows)
}
