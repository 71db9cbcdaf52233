//! Scalar abstraction shared by every numerical routine in the crate.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, NumAssign};
use serde::{Deserialize, Serialize};

/// Real floating-point scalar (`f32` or `f64`) the library is generic over.
pub trait Real:
    Float + FloatConst + NumAssign + Sum + Debug + Display + Default + Serialize + Send + Sync + 'static
{
    /// Default validation tolerances appropriate for this precision.
    fn tolerances() -> Tolerances;
}

impl Real for f64 {
    fn tolerances() -> Tolerances {
        Tolerances::DOUBLE
    }
}

impl Real for f32 {
    fn tolerances() -> Tolerances {
        Tolerances::SINGLE
    }
}

/// Numerical tolerances, stored in `f64` and converted at the point of use.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub hermitian: f64,
    pub trace: f64,
    pub norm: f64,
    /// Eigenvalues in `[-psd, 0)` are clamped; anything lower is rejected.
    pub psd: f64,
    pub reconstruction: f64,
    pub eigenvalue: f64,
    pub orthonormality: f64,
    /// Slack tolerance for complementarity relations.
    pub slack: f64,
}

impl Tolerances {
    pub const DOUBLE: Tolerances = Tolerances {
        hermitian: 1e-10,
        trace: 1e-10,
        norm: 1e-10,
        psd: 1e-12,
        reconstruction: 1e-9,
        eigenvalue: 1e-9,
        orthonormality: 1e-9,
        slack: 1e-9,
    };

    pub const SINGLE: Tolerances = Tolerances {
        hermitian: 1e-5,
        trace: 1e-5,
        norm: 1e-5,
        psd: 1e-6,
        reconstruction: 1e-4,
        eigenvalue: 1e-4,
        orthonormality: 1e-4,
        slack: 1e-4,
    };

    pub fn for_scalar<T: Real>() -> Self {
        T::tolerances()
    }
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances::DOUBLE
    }
}

/// Converts an `f64` literal into `T`.
#[inline]
pub fn lit<T: Real>(x: f64) -> T {
    T::from(x).expect("f64 literal representable in scalar type")
}

/// Converts a scalar back to `f64` for reporting.
#[inline]
pub fn to_f64<T: Real>(x: T) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// `x log2 x` with the `0 log 0 = 0` convention applied by branch.
#[inline]
pub fn xlog2x<T: Real>(x: T) -> T {
    if x <= T::zero() {
        T::zero()
    } else {
        x * x.log2()
    }
}

/// Shannon entropy in bits of a (not necessarily normalized) weight vector.
pub fn shannon_entropy<T: Real>(p: &[T]) -> T {
    -p.iter().map(|&x| xlog2x(x)).sum::<T>()
}

/// Noise floor below which a computed eigenvalue of a unit-trace matrix of
/// dimension `dim` is indistinguishable from zero.
#[inline]
pub fn noise_floor<T: Real>(dim: usize) -> T {
    T::epsilon() * lit::<T>(8.0 * dim.max(1) as f64)
}
