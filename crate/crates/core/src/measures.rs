//! Predictability and visibility (coherence) functionals and the registry of
//! complementarity pairs `(P, C, α)`.
//!
//! All measures are taken with respect to the computational basis of the
//! stored matrix. Entropies are in bits.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::{lit, shannon_entropy, to_f64, xlog2x, Real};
use crate::state::{psd_sqrt, spectrum_of, DensityMatrix};

/// Sum of `|ρ_jk|` over `j ≠ k`.
pub fn c_l1<T: Real>(rho: &DensityMatrix<T>) -> T {
    off_diagonal_sum(rho, |z| z.norm())
}

/// Sum of `|ρ_jk|²` over `j ≠ k`.
pub fn c_hs<T: Real>(rho: &DensityMatrix<T>) -> T {
    off_diagonal_sum(rho, |z| z.norm_sqr())
}

/// Wigner–Yanase skew-information coherence `Σ_{j≠k} |⟨j|√ρ|k⟩|²`.
pub fn c_wy<T: Real>(rho: &DensityMatrix<T>) -> T {
    let root = psd_sqrt(rho);
    let d = rho.dim();
    let mut s = T::zero();
    for j in 0..d {
        for k in 0..d {
            if j != k {
                s += root[(j, k)].norm_sqr();
            }
        }
    }
    s
}

/// Relative entropy of coherence `S(ρ_diag) − S(ρ)`.
pub fn c_re<T: Real>(rho: &DensityMatrix<T>) -> T {
    let v = shannon_entropy(&rho.populations()) - von_neumann_entropy(rho);
    v.max(T::zero())
}

/// `log2 d + Σ_j ρ_jj log2 ρ_jj`.
pub fn p_vn<T: Real>(rho: &DensityMatrix<T>) -> T {
    let d = lit::<T>(rho.dim() as f64);
    let s: T = rho.populations().into_iter().map(xlog2x).sum();
    (d.log2() + s).max(T::zero())
}

/// `Σ_j ρ_jj² − 1/d`.
pub fn p_hs<T: Real>(rho: &DensityMatrix<T>) -> T {
    let d = lit::<T>(rho.dim() as f64);
    let s: T = rho.populations().into_iter().map(|x| x * x).sum();
    (s - T::one() / d).max(T::zero())
}

/// `d − 1 − Σ_{j≠k} √(ρ_jj ρ_kk)`.
pub fn p_l1<T: Real>(rho: &DensityMatrix<T>) -> T {
    let p = rho.populations();
    let d = p.len();
    // Σ_{j≠k} √(p_j p_k) = (Σ √p_j)² − 1
    let root_sum: T = p.iter().map(|&x| x.max(T::zero()).sqrt()).sum();
    let cross = root_sum * root_sum - p.iter().copied().sum::<T>();
    (lit::<T>(d as f64 - 1.0) - cross).max(T::zero())
}

fn off_diagonal_sum<T: Real>(rho: &DensityMatrix<T>, f: impl Fn(num_complex::Complex<T>) -> T) -> T {
    let d = rho.dim();
    let mut s = T::zero();
    for j in 0..d {
        for k in 0..d {
            if j != k {
                s += f(rho.get(j, k));
            }
        }
    }
    s
}

/// Von Neumann entropy in bits.
pub fn von_neumann_entropy<T: Real>(rho: &DensityMatrix<T>) -> T {
    shannon_entropy(spectrum_of(rho.matrix()).as_slice())
}

/// `1 − Tr ρ²`.
pub fn linear_entropy<T: Real>(rho: &DensityMatrix<T>) -> T {
    (T::one() - rho.purity()).max(T::zero())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EntropyReport<T> {
    /// Von Neumann entropy (bits).
    pub vn: T,
    /// Shannon entropy of the populations (bits).
    pub vn_diag: T,
    pub linear: T,
    pub purity: T,
}

pub fn entropy_report<T: Real>(rho: &DensityMatrix<T>) -> EntropyReport<T> {
    let purity = rho.purity().min(T::one());
    EntropyReport {
        vn: von_neumann_entropy(rho),
        vn_diag: shannon_entropy(&rho.populations()),
        linear: T::one() - purity,
        purity,
    }
}

/// Whether a functional quantifies the particle (P) or wave (V) aspect.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum MeasureKind {
    Predictability,
    Visibility,
}

impl fmt::Display for MeasureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MeasureKind::Predictability => "P",
            MeasureKind::Visibility => "V",
        })
    }
}

/// A real functional on density matrices.
pub trait Functional<T: Real>: Send + Sync {
    fn name(&self) -> &str;
    fn kind(&self) -> MeasureKind;
    fn evaluate(&self, rho: &DensityMatrix<T>) -> T;
}

/// The seven closed-form measures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BuiltinMeasure {
    CL1,
    CHs,
    CWy,
    CRe,
    PL1,
    PHs,
    PVn,
}

impl BuiltinMeasure {
    pub const ALL: [BuiltinMeasure; 7] = [
        BuiltinMeasure::CL1,
        BuiltinMeasure::CHs,
        BuiltinMeasure::CWy,
        BuiltinMeasure::CRe,
        BuiltinMeasure::PL1,
        BuiltinMeasure::PHs,
        BuiltinMeasure::PVn,
    ];

    pub fn id(self) -> &'static str {
        match self {
            BuiltinMeasure::CL1 => "c_l1",
            BuiltinMeasure::CHs => "c_hs",
            BuiltinMeasure::CWy => "c_wy",
            BuiltinMeasure::CRe => "c_re",
            BuiltinMeasure::PL1 => "p_l1",
            BuiltinMeasure::PHs => "p_hs",
            BuiltinMeasure::PVn => "p_vn",
        }
    }

    pub fn from_id(name: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|m| m.id() == name)
            .ok_or_else(|| Error::UnknownName {
                kind: "measure",
                name: name.to_string(),
            })
    }

    pub fn measure_kind(self) -> MeasureKind {
        match self {
            BuiltinMeasure::PL1 | BuiltinMeasure::PHs | BuiltinMeasure::PVn => MeasureKind::Predictability,
            _ => MeasureKind::Visibility,
        }
    }

    pub fn eval<T: Real>(self, rho: &DensityMatrix<T>) -> T {
        match self {
            BuiltinMeasure::CL1 => c_l1(rho),
            BuiltinMeasure::CHs => c_hs(rho),
            BuiltinMeasure::CWy => c_wy(rho),
            BuiltinMeasure::CRe => c_re(rho),
            BuiltinMeasure::PL1 => p_l1(rho),
            BuiltinMeasure::PHs => p_hs(rho),
            BuiltinMeasure::PVn => p_vn(rho),
        }
    }
}

impl<T: Real> Functional<T> for BuiltinMeasure {
    fn name(&self) -> &str {
        self.id()
    }

    fn kind(&self) -> MeasureKind {
        self.measure_kind()
    }

    fn evaluate(&self, rho: &DensityMatrix<T>) -> T {
        self.eval(rho)
    }
}

/// The bound `α(d)` of a complementarity relation.
#[derive(Clone)]
pub enum Bound<T> {
    /// `log2 d`
    Log2Dim,
    /// `d − 1`
    DimMinusOne,
    /// `(d − 1)/d`
    LinearEntropyMax,
    Custom(Arc<dyn Fn(usize) -> T + Send + Sync>),
}

impl<T: Real> Bound<T> {
    pub fn at(&self, d: usize) -> T {
        let x = lit::<T>(d as f64);
        match self {
            Bound::Log2Dim => x.log2(),
            Bound::DimMinusOne => x - T::one(),
            Bound::LinearEntropyMax => (x - T::one()) / x,
            Bound::Custom(f) => f(d),
        }
    }
}

impl<T> fmt::Debug for Bound<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::Log2Dim => f.write_str("log2(d)"),
            Bound::DimMinusOne => f.write_str("d-1"),
            Bound::LinearEntropyMax => f.write_str("(d-1)/d"),
            Bound::Custom(_) => f.write_str("custom"),
        }
    }
}

/// Largest dimension at which a bound is checked for positivity on registration.
pub const MAX_CHECKED_DIM: usize = 64;

/// A complementarity relation `P + C ≤ α(d)`.
#[derive(Clone)]
pub struct MeasurePair<T: Real> {
    name: String,
    predictability: Arc<dyn Functional<T>>,
    visibility: Arc<dyn Functional<T>>,
    alpha: Bound<T>,
}

impl<T: Real> MeasurePair<T> {
    /// Registers a pair; rejects bounds that are not positive for some
    /// `d ∈ 2..=64`.
    pub fn new(
        name: impl Into<String>,
        predictability: Arc<dyn Functional<T>>,
        visibility: Arc<dyn Functional<T>>,
        alpha: Bound<T>,
    ) -> Result<Self> {
        let name = name.into();
        for d in 2..=MAX_CHECKED_DIM {
            let a = alpha.at(d);
            if a.partial_cmp(&T::zero()) != Some(std::cmp::Ordering::Greater) || !a.is_finite() {
                return Err(Error::InvalidBound {
                    name,
                    dim: d,
                    value: to_f64(a),
                });
            }
        }
        Ok(Self {
            name,
            predictability,
            visibility,
            alpha,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn predictability(&self) -> &dyn Functional<T> {
        self.predictability.as_ref()
    }

    pub fn visibility(&self) -> &dyn Functional<T> {
        self.visibility.as_ref()
    }

    pub fn bound(&self) -> &Bound<T> {
        &self.alpha
    }

    pub fn alpha(&self, d: usize) -> T {
        self.alpha.at(d)
    }

    pub fn p(&self, rho: &DensityMatrix<T>) -> T {
        self.predictability.evaluate(rho)
    }

    pub fn c(&self, rho: &DensityMatrix<T>) -> T {
        self.visibility.evaluate(rho)
    }
}

impl<T: Real> fmt::Debug for MeasurePair<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MeasurePair")
            .field("name", &self.name)
            .field("P", &self.predictability.name())
            .field("C", &self.visibility.name())
            .field("alpha", &self.alpha)
            .finish()
    }
}

/// Ordered collection of named pairs, starting with the four built-ins.
#[derive(Debug, Clone)]
pub struct Registry<T: Real> {
    pairs: Vec<MeasurePair<T>>,
}

impl<T: Real> Registry<T> {
    /// `vn`: (P_vn, C_re, log2 d); `l1`: (P_l1, C_l1, d−1);
    /// `wy`: (P_hs, C_wy, (d−1)/d); `hs`: (P_hs, C_hs, (d−1)/d).
    pub fn builtin() -> Self {
        let pair = |name: &str, p: BuiltinMeasure, c: BuiltinMeasure, alpha| {
            MeasurePair::new(name, Arc::new(p), Arc::new(c), alpha).expect("built-in bounds are positive")
        };
        Self {
            pairs: vec![
                pair("vn", BuiltinMeasure::PVn, BuiltinMeasure::CRe, Bound::Log2Dim),
                pair("l1", BuiltinMeasure::PL1, BuiltinMeasure::CL1, Bound::DimMinusOne),
                pair("wy", BuiltinMeasure::PHs, BuiltinMeasure::CWy, Bound::LinearEntropyMax),
                pair("hs", BuiltinMeasure::PHs, BuiltinMeasure::CHs, Bound::LinearEntropyMax),
            ],
        }
    }

    pub fn register(&mut self, pair: MeasurePair<T>) -> Result<()> {
        if self.get(pair.name()).is_some() {
            return Err(Error::Parse(format!("pair '{}' already registered", pair.name())));
        }
        self.pairs.push(pair);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&MeasurePair<T>> {
        self.pairs.iter().find(|p| p.name() == name)
    }

    pub fn require(&self, name: &str) -> Result<&MeasurePair<T>> {
        self.get(name).ok_or_else(|| Error::UnknownName {
            kind: "pair",
            name: name.to_string(),
        })
    }

    pub fn pairs(&self) -> &[MeasurePair<T>] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

pub fn registry<T: Real>() -> Registry<T> {
    Registry::builtin()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ComplexMatrix;
    use crate::state::PureStateVector;
    use num_complex::Complex;

    fn real(n: usize, v: &[f64]) -> DensityMatrix<f64> {
        DensityMatrix::new(
            ComplexMatrix::from_row_major(n, n, v.iter().map(|&x| Complex::new(x, 0.0)).collect()).unwrap(),
        )
        .unwrap()
    }

    fn plus() -> DensityMatrix<f64> {
        DensityMatrix::from_pure(&PureStateVector::uniform(2))
    }

    // independent binary entropy oracle
    fn h2(p: f64) -> f64 {
        -p * p.log2() - (1.0 - p) * (1.0 - p).log2()
    }

    #[test]
    fn coherence_examples() {
        let diag = DensityMatrix::from_diagonal(&[0.3f64, 0.7]).unwrap();
        let m = real(2, &[0.7, 0.3, 0.3, 0.3]);
        assert_eq!(c_l1(&diag), 0.0);
        assert!((c_l1(&plus()) - 1.0).abs() < 1e-15);
        assert!((c_l1(&m) - 0.6).abs() < 1e-15);

        assert_eq!(c_hs(&diag), 0.0);
        assert!((c_hs(&plus()) - 0.5).abs() < 1e-15);
        assert!((c_hs(&m) - 0.18).abs() < 1e-15);

        let w = real(2, &[0.5, 0.25, 0.25, 0.5]);
        let expect = 2.0 * ((0.75f64.sqrt() - 0.25f64.sqrt()) / 2.0).powi(2);
        assert!((c_wy(&w) - expect).abs() < 1e-14);
        assert!((c_wy(&w) - 0.06698729810778066).abs() < 1e-12);
        assert!(c_wy(&w) < c_hs(&w));
        assert!(c_wy(&diag).abs() < 1e-15);
        assert!((c_wy(&plus()) - c_hs(&plus())).abs() < 1e-14);

        assert!((c_re(&plus()) - 1.0).abs() < 1e-14);
        assert!(c_re(&diag).abs() < 1e-15);
        assert!((c_re(&w) - (1.0 - h2(0.75))).abs() < 1e-14);
    }

    #[test]
    fn predictability_examples() {
        for d in 2..5 {
            let top = DensityMatrix::<f64>::basis_projector(d, 0);
            let mm = DensityMatrix::<f64>::maximally_mixed(d);
            let df = d as f64;
            assert!((p_vn(&top) - df.log2()).abs() < 1e-14);
            assert!(p_vn(&mm).abs() < 1e-14);
            assert!((p_hs(&top) - (df - 1.0) / df).abs() < 1e-14);
            assert!(p_hs(&mm).abs() < 1e-14);
            assert!((p_l1(&top) - (df - 1.0)).abs() < 1e-14);
            assert!(p_l1(&mm).abs() < 1e-14);
        }
        let a = DensityMatrix::from_diagonal(&[0.8f64, 0.2]).unwrap();
        assert!((p_vn(&a) - (1.0 - h2(0.8))).abs() < 1e-14);
        assert!((p_vn(&a) - 0.27807190511263774).abs() < 1e-12);
        let b = DensityMatrix::from_diagonal(&[0.7f64, 0.3]).unwrap();
        assert!((p_hs(&b) - 0.08).abs() < 1e-15);
        assert!((p_l1(&b) - (1.0 - 2.0 * 0.21f64.sqrt())).abs() < 1e-15);
    }

    #[test]
    fn entropy_report_examples() {
        for d in 2..5 {
            let r = entropy_report(&DensityMatrix::<f64>::maximally_mixed(d));
            assert!((r.vn - (d as f64).log2()).abs() < 1e-14);
            assert!((r.linear - (d as f64 - 1.0) / d as f64).abs() < 1e-14);
        }
        let r = entropy_report(&plus());
        assert!(r.vn.abs() < 1e-14 && r.linear.abs() < 1e-14);
        assert!((r.purity - 1.0).abs() < 1e-14);
        let r = entropy_report(&real(2, &[0.5, 0.25, 0.25, 0.5]));
        assert!((r.vn - 0.8112781244591328).abs() < 1e-13);
        assert!((r.vn_diag - 1.0).abs() < 1e-15);
    }

    #[test]
    fn registry_contents() {
        let r = registry::<f64>();
        assert_eq!(r.len(), 4);
        assert_eq!(r.require("hs").unwrap().alpha(2), 0.5);
        assert_eq!(r.require("vn").unwrap().alpha(2), 1.0);
        assert_eq!(r.require("l1").unwrap().alpha(3), 2.0);
        assert!(matches!(r.require("xx"), Err(Error::UnknownName { .. })));
    }

    #[test]
    fn zero_bound_rejected() {
        let r = MeasurePair::<f64>::new(
            "bad",
            Arc::new(BuiltinMeasure::PHs),
            Arc::new(BuiltinMeasure::CHs),
            Bound::Custom(Arc::new(|_| 0.0)),
        );
        assert!(matches!(r, Err(Error::InvalidBound { .. })));
    }

    #[test]
    fn duplicate_pair_rejected() {
        let mut r = registry::<f64>();
        let dup = r.require("hs").unwrap().clone();
        assert!(r.register(dup).is_err());
        let custom = MeasurePair::new(
            "hs2",
            Arc::new(BuiltinMeasure::PHs),
            Arc::new(BuiltinMeasure::CHs),
            Bound::LinearEntropyMax,
        )
        .unwrap();
        r.register(custom).unwrap();
        assert_eq!(r.len(), 5);
    }

    #[test]
    fn names_round_trip() {
        for m in BuiltinMeasure::ALL {
            assert_eq!(BuiltinMeasure::from_id(m.id()).unwrap(), m);
        }
        assert!(BuiltinMeasure::from_id("c_xx").is_err());
    }
}
