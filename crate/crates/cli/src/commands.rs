use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use ccr_core::complementarity::{SampledState, SweepKind, SweepRow};
use ccr_core::criteria::{self, doubles, CriterionReport};
use ccr_core::io::{LoadedState, StateFile};
use ccr_core::measures::{entropy_report, Bound, EntropyReport};
use ccr_core::monotones::{monotone_pure, PairMonotone};
use ccr_core::roof::{entanglement_of_formation_oracle, linear_entropy_roof_oracle};
use ccr_core::sampling::ginibre_density;
use ccr_core::state::schmidt_coefficients;
use ccr_core::{
    BuiltinMeasure, DensityMatrix, Functional, MeasurePair, PureMonotone, Registry, RelationReport, RoofConfig,
    RoofResult, SchmidtMonotone, SeededStream,
};
use serde::Serialize;
use thiserror::Error;

use crate::args::{ComputeArgs, CriteriaArgs, Dims, Format, RoofArgs, SampleArgs};
use crate::output::to_json;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] ccr_core::Error),
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write output: {0}")]
    Write(#[from] std::io::Error),
    #[error("{0}")]
    Usage(String),
}

/// What a command decided, before exit-code mapping.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Ok,
    Failed,
}

pub struct Rendered {
    pub text: String,
    pub verdict: Verdict,
}

/// The effective configuration, echoed in every report.
#[derive(Debug, Clone, Serialize, Default)]
pub struct RunConfig {
    pub subcommand: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<PathBuf>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dims: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub pairs: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub measures: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub monotone: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trials: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub format: Option<Format>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub out: Option<PathBuf>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub roof: Option<RoofConfig>,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub normalized: bool,
}

fn read_state(path: &Path) -> Result<LoadedState<f64>, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(StateFile::parse(&text)?.load()?)
}

fn select_pairs(registry: &Registry<f64>, names: &[String]) -> Result<Vec<String>, CliError> {
    if names.is_empty() {
        return Ok(registry.pairs().iter().map(|p| p.name().to_string()).collect());
    }
    for n in names {
        registry.require(n)?;
    }
    Ok(names.to_vec())
}

fn csv_lines(header: &str, rows: impl IntoIterator<Item = String>) -> String {
    let mut text = String::from(header);
    text.push('\n');
    for r in rows {
        text.push_str(&r);
        text.push('\n');
    }
    text
}

fn sig(x: f64) -> String {
    ccr_core::complementarity::sig12(x)
}

#[derive(Serialize)]
struct PairMonotoneEntry {
    pair: String,
    value: f64,
    raw: f64,
    alpha: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    normalized: Option<f64>,
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum ComputeReport {
    Density {
        config: RunConfig,
        dim: usize,
        measures: BTreeMap<&'static str, f64>,
        entropy: EntropyReport<f64>,
        relations: Vec<RelationReport<f64>>,
    },
    Bipartite {
        config: RunConfig,
        #[serde(rename = "dimA")]
        dim_a: usize,
        #[serde(rename = "dimB")]
        dim_b: usize,
        schmidt_coefficients: Vec<f64>,
        monotones: BTreeMap<&'static str, f64>,
        pairs: Vec<PairMonotoneEntry>,
        relations: Vec<RelationReport<f64>>,
    },
}

pub fn compute(args: &ComputeArgs, format: Option<Format>, out: Option<&Path>) -> Result<Rendered, CliError> {
    let config = RunConfig {
        subcommand: "compute",
        input: Some(args.input.clone()),
        format,
        out: out.map(Path::to_path_buf),
        normalized: args.normalized,
        ..RunConfig::default()
    };
    let registry = Registry::<f64>::builtin();
    let report = match read_state(&args.input)? {
        LoadedState::Density { rho, .. } => ComputeReport::Density {
            config,
            dim: rho.dim(),
            measures: BuiltinMeasure::ALL.iter().map(|m| (m.id(), m.eval(&rho))).collect(),
            entropy: entropy_report(&rho),
            relations: registry
                .pairs()
                .iter()
                .map(|p| ccr_core::check_incomplete(p, &rho))
                .collect(),
        },
        LoadedState::Bipartite(psi) => {
            let lambda = schmidt_coefficients(&psi);
            ComputeReport::Bipartite {
                config,
                dim_a: psi.dim_a(),
                dim_b: psi.dim_b(),
                schmidt_coefficients: lambda.as_slice().to_vec(),
                monotones: SchmidtMonotone::ALL
                    .iter()
                    .map(|m| (m.id(), m.value(lambda.as_slice())))
                    .collect(),
                pairs: registry
                    .pairs()
                    .iter()
                    .map(|p| {
                        let v = monotone_pure(p, &psi);
                        PairMonotoneEntry {
                            pair: p.name().to_string(),
                            value: v.value,
                            raw: v.raw,
                            alpha: v.alpha,
                            normalized: args.normalized.then(|| v.normalized()),
                        }
                    })
                    .collect(),
                relations: registry
                    .pairs()
                    .iter()
                    .map(|p| ccr_core::check_complete(p, &psi))
                    .collect(),
            }
        }
    };
    let text = match format {
        Some(Format::Csv) => compute_csv(&report),
        _ => to_json(&report),
    };
    Ok(Rendered {
        text,
        verdict: Verdict::Ok,
    })
}

fn compute_csv(report: &ComputeReport) -> String {
    let mut rows = Vec::new();
    match report {
        ComputeReport::Density { measures, entropy, .. } => {
            rows.extend(measures.iter().map(|(k, v)| format!("{k},{}", sig(*v))));
            rows.push(format!("s_vn_rho,{}", sig(entropy.vn)));
            rows.push(format!("s_vn_diag,{}", sig(entropy.vn_diag)));
            rows.push(format!("s_l_rho,{}", sig(entropy.linear)));
            rows.push(format!("purity,{}", sig(entropy.purity)));
        }
        ComputeReport::Bipartite {
            schmidt_coefficients,
            monotones,
            pairs,
            ..
        } => {
            rows.extend(
                schmidt_coefficients
                    .iter()
                    .enumerate()
                    .map(|(k, v)| format!("lambda_{k},{}", sig(*v))),
            );
            rows.extend(monotones.iter().map(|(k, v)| format!("{k},{}", sig(*v))));
            for p in pairs {
                rows.push(format!("e_{},{}", p.pair, sig(p.value)));
                if let Some(n) = p.normalized {
                    rows.push(format!("e_{}_normalized,{}", p.pair, sig(n)));
                }
            }
        }
    }
    csv_lines("name,value", rows)
}

/// The states a verify or sweep run iterates over.
enum StateSource {
    File(SampledState<f64>),
    Sampled { kind: SweepKind, count: usize, seed: u64 },
}

impl StateSource {
    fn from_args(args: &SampleArgs) -> Result<Self, CliError> {
        if let Some(path) = &args.input {
            let state = match read_state(path)? {
                LoadedState::Density { rho, .. } => SampledState::Density(rho),
                LoadedState::Bipartite(psi) => SampledState::Bipartite(psi),
            };
            return Ok(StateSource::File(state));
        }
        let kind = match args.dims {
            Dims::Single(d) => {
                if let Some(r) = args.rank {
                    if r == 0 || r > d {
                        return Err(CliError::Usage(format!("rank {r} must lie in 1..={d}")));
                    }
                }
                SweepKind::Incomplete {
                    dim: d,
                    rank: args.rank,
                }
            }
            Dims::Bipartite(a, b) => SweepKind::Complete { dim_a: a, dim_b: b },
        };
        Ok(StateSource::Sampled {
            kind,
            count: args.trials as usize,
            seed: args.seed,
        })
    }

    fn len(&self) -> usize {
        match self {
            StateSource::File(_) => 1,
            StateSource::Sampled { count, .. } => *count,
        }
    }

    fn get(&self, index: usize) -> SampledState<f64> {
        match self {
            StateSource::File(s) => s.clone(),
            StateSource::Sampled { kind, seed, .. } => SampledState::draw(*kind, *seed, index),
        }
    }

    fn seed(&self) -> u64 {
        match self {
            StateSource::File(_) => 0,
            StateSource::Sampled { seed, .. } => *seed,
        }
    }

    /// Pure inputs must saturate; mixed ones only satisfy the inequality.
    fn expects_saturation(&self) -> bool {
        match self {
            StateSource::File(SampledState::Bipartite(_)) => true,
            StateSource::File(SampledState::Density(rho)) => (rho.purity() - 1.0).abs() < 1e-10,
            StateSource::Sampled { kind, .. } => match kind {
                SweepKind::Complete { .. } => true,
                SweepKind::Incomplete { rank, .. } => *rank == Some(1),
            },
        }
    }
}

fn sample_config(
    subcommand: &'static str,
    args: &SampleArgs,
    pairs: &[String],
    format: Option<Format>,
    out: Option<&Path>,
) -> RunConfig {
    let sampled = args.input.is_none();
    RunConfig {
        subcommand,
        input: args.input.clone(),
        dims: sampled.then(|| args.dims.to_string()),
        rank: if sampled { args.rank } else { None },
        pairs: pairs.to_vec(),
        trials: sampled.then_some(args.trials),
        seed: sampled.then_some(args.seed),
        format,
        out: out.map(Path::to_path_buf),
        ..RunConfig::default()
    }
}

#[derive(Serialize)]
#[serde(untagged)]
enum StateJson {
    Density(DensityMatrix<f64>),
    Bipartite(ccr_core::BipartitePureState<f64>),
}

impl From<&SampledState<f64>> for StateJson {
    fn from(s: &SampledState<f64>) -> Self {
        match s {
            SampledState::Density(r) => StateJson::Density(r.clone()),
            SampledState::Bipartite(p) => StateJson::Bipartite(p.clone()),
        }
    }
}

#[derive(Serialize)]
struct Violation {
    index: usize,
    pair: String,
    slack: f64,
    state: StateJson,
}

#[derive(Serialize)]
struct VerifyReport {
    config: RunConfig,
    expectation: &'static str,
    tolerance: f64,
    states: usize,
    checks: usize,
    min_slack: f64,
    max_abs_slack: f64,
    /// Smallest slack among states with purity ≤ 0.99, when there are any.
    min_mixed_slack: Option<f64>,
    violation_count: usize,
    violations: Vec<Violation>,
    verified: bool,
}

const MAX_LISTED_VIOLATIONS: usize = 100;

pub fn verify(args: &SampleArgs, format: Option<Format>, out: Option<&Path>) -> Result<Rendered, CliError> {
    let registry = Registry::<f64>::builtin();
    let pairs = select_pairs(&registry, &args.pair)?;
    let source = StateSource::from_args(args)?;
    let saturation = source.expects_saturation();
    let tol = ccr_core::Tolerances::DOUBLE.slack;

    let mut min_slack = f64::INFINITY;
    let mut max_abs = 0.0f64;
    let mut min_mixed: Option<f64> = None;
    let mut violations = Vec::new();
    let mut violation_rows = Vec::new();
    let mut count = 0;
    for i in 0..source.len() {
        let state = source.get(i);
        for name in &pairs {
            let r = state.check(registry.require(name)?);
            min_slack = min_slack.min(r.slack);
            max_abs = max_abs.max(r.slack.abs());
            if r.dim_b.is_none() && r.purity <= 0.99 {
                min_mixed = Some(min_mixed.map_or(r.slack, |m: f64| m.min(r.slack)));
            }
            let bad = if saturation {
                r.slack.abs() > tol
            } else {
                r.slack < -tol
            };
            if bad {
                count += 1;
                violation_rows.push(SweepRow::from_report(i, &r, source.seed()).to_csv());
                if violations.len() < MAX_LISTED_VIOLATIONS {
                    violations.push(Violation {
                        index: i,
                        pair: name.clone(),
                        slack: r.slack,
                        state: (&state).into(),
                    });
                }
            }
        }
    }
    let report = VerifyReport {
        config: sample_config("verify", args, &pairs, format, out),
        expectation: if saturation { "saturation" } else { "inequality" },
        tolerance: tol,
        states: source.len(),
        checks: source.len() * pairs.len(),
        min_slack,
        max_abs_slack: max_abs,
        min_mixed_slack: min_mixed,
        violation_count: count,
        violations,
        verified: count == 0,
    };
    let verdict = if report.verified { Verdict::Ok } else { Verdict::Failed };
    let text = match format {
        Some(Format::Csv) => csv_lines(SweepRow::HEADER, violation_rows),
        _ => to_json(&report),
    };
    Ok(Rendered { text, verdict })
}

#[derive(Serialize)]
struct SweepReport {
    config: RunConfig,
    rows: Vec<SweepRow>,
}

pub fn sweep(args: &SampleArgs, format: Option<Format>, out: Option<&Path>) -> Result<(Rendered, String), CliError> {
    let registry = Registry::<f64>::builtin();
    let pairs = select_pairs(&registry, &args.pair)?;
    let source = StateSource::from_args(args)?;
    let mut rows = Vec::with_capacity(source.len() * pairs.len());
    for i in 0..source.len() {
        let state = source.get(i);
        for name in &pairs {
            rows.push(SweepRow::from_report(
                i,
                &state.check(registry.require(name)?),
                source.seed(),
            ));
        }
    }
    let format = format.or(Some(Format::Csv));
    let config = sample_config("sweep", args, &pairs, format, out);
    let echo = serde_json::to_string(&config).expect("config serializes");
    let text = match format {
        Some(Format::Json) => to_json(&SweepReport { config, rows }),
        _ => csv_lines(SweepRow::HEADER, rows.iter().map(SweepRow::to_csv)),
    };
    Ok((
        Rendered {
            text,
            verdict: Verdict::Ok,
        },
        echo,
    ))
}

fn resolve_monotone(name: &str, registry: &Registry<f64>) -> Result<Box<dyn PureMonotone<f64>>, CliError> {
    if let Ok(m) = SchmidtMonotone::from_id(name) {
        return Ok(Box::new(m));
    }
    match registry.get(name) {
        Some(pair) => Ok(Box::new(PairMonotone(pair.clone()))),
        None => Err(ccr_core::Error::UnknownName {
            kind: "monotone",
            name: name.to_string(),
        }
        .into()),
    }
}

fn roof_config(args: &RoofArgs) -> Result<RoofConfig, CliError> {
    let mut cfg = match &args.config {
        None => RoofConfig::default(),
        Some(block) => {
            let text = if block.trim_start().starts_with('{') {
                block.clone()
            } else {
                fs::read_to_string(block).map_err(|source| CliError::Read {
                    path: PathBuf::from(block),
                    source,
                })?
            };
            serde_json::from_str(&text).map_err(|e| ccr_core::Error::Parse(e.to_string()))?
        }
    };
    if args.ensemble_size.is_some() {
        cfg.m = args.ensemble_size;
    }
    if let Some(r) = args.restarts {
        cfg.restarts = r;
    }
    if let Some(n) = args.max_iters {
        cfg.max_iters = n;
    }
    if let Some(s) = args.step {
        cfg.step = s;
    }
    if let Some(s) = args.seed {
        cfg.seed = s;
    }
    if cfg.restarts == 0 || cfg.max_iters == 0 {
        return Err(CliError::Usage("restarts and max_iters must be at least 1".into()));
    }
    Ok(cfg)
}

#[derive(Serialize)]
struct TwoQubitOracles {
    concurrence: f64,
    entanglement_of_formation: f64,
    linear_entropy_roof: f64,
}

#[derive(Serialize)]
struct RoofReport {
    config: RunConfig,
    #[serde(rename = "dimA")]
    dim_a: usize,
    #[serde(rename = "dimB")]
    dim_b: usize,
    state: DensityMatrix<f64>,
    result: RoofResult<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    two_qubit_oracles: Option<TwoQubitOracles>,
}

/// Stream used for a sampled roof input; restarts use streams `1..`.
const ROOF_INPUT_STREAM: u64 = 1 << 40;

pub fn roof(args: &RoofArgs, format: Option<Format>, out: Option<&Path>) -> Result<Rendered, CliError> {
    let registry = Registry::<f64>::builtin();
    let monotone = resolve_monotone(&args.monotone, &registry)?;
    let cfg = roof_config(args)?;
    let flag_dims = match args.dims {
        Some(Dims::Bipartite(a, b)) => Some((a, b)),
        Some(Dims::Single(_)) => return Err(CliError::Usage("roof needs --dims dAxdB".into())),
        None => None,
    };
    let (rho, (dim_a, dim_b)) = match &args.input {
        Some(path) => match read_state(path)? {
            LoadedState::Density { rho, dims } => {
                let dims = flag_dims
                    .or(dims)
                    .ok_or_else(|| CliError::Usage("give --dims dAxdB or dimA/dimB in the state file".into()))?;
                (rho, dims)
            }
            LoadedState::Bipartite(psi) => {
                let dims = (psi.dim_a(), psi.dim_b());
                (DensityMatrix::from_pure(&psi.as_vector()), dims)
            }
        },
        None => {
            let (a, b) = flag_dims.ok_or_else(|| CliError::Usage("give a state file or --dims dAxdB".into()))?;
            let d = a * b;
            let rank = args.rank.unwrap_or(d);
            if rank == 0 || rank > d {
                return Err(CliError::Usage(format!("rank {rank} must lie in 1..={d}")));
            }
            let mut stream = SeededStream::new(cfg.seed, ROOF_INPUT_STREAM);
            (ginibre_density(d, rank, &mut stream), (a, b))
        }
    };
    if dim_a * dim_b != rho.dim() {
        return Err(CliError::Usage(format!(
            "state of dimension {} does not split as {dim_a}x{dim_b}",
            rho.dim()
        )));
    }
    let result = ccr_core::convex_roof_estimate(monotone.as_ref(), &rho, dim_a, dim_b, &cfg)?;
    let two_qubit_oracles = (dim_a == 2 && dim_b == 2).then(|| TwoQubitOracles {
        concurrence: ccr_core::monotones::wootters_concurrence(&rho),
        entanglement_of_formation: entanglement_of_formation_oracle(&rho),
        linear_entropy_roof: linear_entropy_roof_oracle(&rho),
    });
    let config = RunConfig {
        subcommand: "roof",
        input: args.input.clone(),
        dims: Some(format!("{dim_a}x{dim_b}")),
        rank: if args.input.is_none() {
            Some(args.rank.unwrap_or(dim_a * dim_b))
        } else {
            None
        },
        monotone: Some(args.monotone.clone()),
        seed: Some(cfg.seed),
        format,
        out: out.map(Path::to_path_buf),
        roof: Some(cfg),
        ..RunConfig::default()
    };
    let text = match format {
        Some(Format::Csv) => csv_lines(
            "monotone,dims,rank,ensemble_size,value,converged,seed",
            [format!(
                "{},{}x{},{},{},{},{},{}",
                args.monotone,
                dim_a,
                dim_b,
                result.rank,
                result.ensemble_size,
                sig(result.value),
                result.converged,
                config.seed.unwrap_or(0)
            )],
        ),
        _ => to_json(&RoofReport {
            config,
            dim_a,
            dim_b,
            state: rho,
            result,
            two_qubit_oracles,
        }),
    };
    Ok(Rendered {
        text,
        verdict: Verdict::Ok,
    })
}

/// Built-in measures and test doubles by name.
fn resolve_measure(name: &str) -> Result<Arc<dyn Functional<f64>>, CliError> {
    if let Ok(m) = BuiltinMeasure::from_id(name) {
        return Ok(Arc::new(m));
    }
    doubles::designated::<f64>()
        .into_iter()
        .find(|(f, _)| f.name() == name)
        .map(|(f, _)| Arc::from(f))
        .ok_or_else(|| {
            ccr_core::Error::UnknownName {
                kind: "measure",
                name: name.to_string(),
            }
            .into()
        })
}

/// Registered pairs plus `negated_hs`, a test-double pair `(p_hs, −c_hs)`.
fn resolve_pair(name: &str, registry: &Registry<f64>) -> Result<MeasurePair<f64>, CliError> {
    if name == "negated_hs" {
        return Ok(MeasurePair::new(
            "negated_hs",
            Arc::new(BuiltinMeasure::PHs),
            Arc::new(doubles::NegatedHs),
            Bound::LinearEntropyMax,
        )?);
    }
    Ok(registry.require(name)?.clone())
}

#[derive(Serialize)]
struct CriteriaReport {
    config: RunConfig,
    certified: bool,
    reports: Vec<CriterionReport<f64>>,
}

pub fn criteria(args: &CriteriaArgs, format: Option<Format>, out: Option<&Path>) -> Result<Rendered, CliError> {
    let registry = Registry::<f64>::builtin();
    let dim = args.dim as usize;
    let trials = args.trials as usize;
    let pair_names: Vec<String> = if args.pair.is_empty() && args.measure.is_empty() {
        registry.pairs().iter().map(|p| p.name().to_string()).collect()
    } else {
        args.pair.clone()
    };
    let pairs: Vec<MeasurePair<f64>> = pair_names
        .iter()
        .map(|n| resolve_pair(n, &registry))
        .collect::<Result<_, _>>()?;
    let measures: Vec<Arc<dyn Functional<f64>>> = args
        .measure
        .iter()
        .map(|n| resolve_measure(n))
        .collect::<Result<_, _>>()?;

    let mut reports = Vec::new();
    for pair in &pairs {
        reports.extend(criteria::full_audit_with_trials(pair, dim, trials, args.seed));
    }
    for m in &measures {
        reports.extend(criteria::audit_measure(m.as_ref(), dim, trials, args.seed));
    }
    let certified = criteria::certified(&reports);
    let config = RunConfig {
        subcommand: "criteria",
        dims: Some(dim.to_string()),
        pairs: pair_names,
        measures: args.measure.clone(),
        trials: Some(args.trials),
        seed: Some(args.seed),
        format,
        out: out.map(Path::to_path_buf),
        ..RunConfig::default()
    };
    let text = match format {
        Some(Format::Csv) => csv_lines(
            "criterion,measure,kind,dim,trials,worst_violation,tolerance,pass,seed",
            reports.iter().map(|r| {
                format!(
                    "{},{},{},{},{},{},{},{},{}",
                    r.criterion,
                    r.measure,
                    r.kind,
                    r.dim,
                    r.trials,
                    sig(r.worst_violation),
                    sig(r.tolerance),
                    r.pass,
                    r.seed
                )
            }),
        ),
        _ => to_json(&CriteriaReport {
            config,
            certified,
            reports,
        }),
    };
    Ok(Rendered {
        text,
        verdict: if certified { Verdict::Ok } else { Verdict::Failed },
    })
}
