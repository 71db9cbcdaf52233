//! Complementarity relations between predictability and quantum coherence,
//! the entanglement monotones that complete them on bipartite pure states,
//! and their convex-roof extensions to mixed states.
//!
//! Everything is generic over [`Real`] (`f32` or `f64`); the `*F64` and
//! `*F32` aliases below fix the scalar.

pub mod complementarity;
pub mod criteria;
pub mod error;
pub mod io;
pub mod linalg;
pub mod measures;
pub mod monotones;
pub mod roof;
pub mod sampling;
pub mod scalar;
pub mod state;

pub use complementarity::{check_complete, check_incomplete, RelationReport};
pub use error::{Error, Result};
pub use measures::{registry, BuiltinMeasure, Functional, MeasureKind, MeasurePair, Registry};
pub use monotones::{monotone_pure, monotone_schmidt, PureMonotone, SchmidtMonotone};
pub use roof::{convex_roof_estimate, RoofConfig, RoofResult};
pub use sampling::SeededStream;
pub use scalar::{Real, Tolerances};
pub use state::{BipartitePureState, DensityMatrix, ProbabilityVector, PureStateVector};

pub type ComplexMatrixF64 = linalg::ComplexMatrix<f64>;
pub type DensityMatrixF64 = DensityMatrix<f64>;
pub type PureStateVectorF64 = PureStateVector<f64>;
pub type BipartitePureStateF64 = BipartitePureState<f64>;
pub type ProbabilityVectorF64 = ProbabilityVector<f64>;
pub type MeasurePairF64 = MeasurePair<f64>;
pub type RegistryF64 = Registry<f64>;
pub type RelationReportF64 = RelationReport<f64>;
pub type RoofResultF64 = RoofResult<f64>;

pub type ComplexMatrixF32 = linalg::ComplexMatrix<f32>;
pub type DensityMatrixF32 = DensityMatrix<f32>;
pub type PureStateVectorF32 = PureStateVector<f32>;
pub type BipartitePureStateF32 = BipartitePureState<f32>;
pub type ProbabilityVectorF32 = ProbabilityVector<f32>;
pub type MeasurePairF32 = MeasurePair<f32>;
pub type RegistryF32 = Registry<f32>;
pub type RelationReportF32 = RelationReport<f32>;
pub type RoofResultF32 = RoofResult<f32>;
