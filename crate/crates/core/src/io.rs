//! JSON state files and serialized forms of states.
//!
//! A state file holds either a density matrix,
//! `{"dim": d, "entries": [[re, im], ...]}`, or a pure state,
//! `{"dimA": dA, "dimB": dB, "amplitudes": [[re, im], ...]}`. Entries are
//! row-major. A density matrix on `A ⊗ B` may give `dimA`/`dimB` instead of
//! `dim`, and a single-system pure state may give `dim` with `amplitudes`.

use num_complex::Complex;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::linalg::ComplexMatrix;
use crate::scalar::{lit, to_f64, Real};
use crate::state::{BipartitePureState, DensityMatrix, PureStateVector};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(rename = "dimA", default, skip_serializing_if = "Option::is_none")]
    pub dim_a: Option<usize>,
    #[serde(rename = "dimB", default, skip_serializing_if = "Option::is_none")]
    pub dim_b: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub entries: Option<Vec<[f64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub amplitudes: Option<Vec<[f64; 2]>>,
}

#[derive(Debug, Clone)]
pub enum LoadedState<T> {
    /// A density matrix, with its bipartition when one was given.
    Density {
        rho: DensityMatrix<T>,
        dims: Option<(usize, usize)>,
    },
    Bipartite(BipartitePureState<T>),
}

fn complex_list<T: Real>(raw: &[[f64; 2]]) -> Vec<Complex<T>> {
    raw.iter().map(|&[re, im]| Complex::new(lit(re), lit(im))).collect()
}

fn pairs<T: Real>(values: &[Complex<T>]) -> Vec<[f64; 2]> {
    values.iter().map(|z| [to_f64(z.re), to_f64(z.im)]).collect()
}

impl StateFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("state files always serialize")
    }

    pub fn from_density<T: Real>(rho: &DensityMatrix<T>) -> Self {
        Self {
            dim: Some(rho.dim()),
            dim_a: None,
            dim_b: None,
            entries: Some(pairs(rho.matrix().as_slice())),
            amplitudes: None,
        }
    }

    pub fn from_bipartite<T: Real>(psi: &BipartitePureState<T>) -> Self {
        Self {
            dim: None,
            dim_a: Some(psi.dim_a()),
            dim_b: Some(psi.dim_b()),
            entries: None,
            amplitudes: Some(pairs(psi.amplitudes())),
        }
    }

    /// Validates the contents into a state.
    pub fn load<T: Real>(&self) -> Result<LoadedState<T>> {
        let bipartite = match (self.dim_a, self.dim_b) {
            (Some(a), Some(b)) => Some((a, b)),
            (None, None) => None,
            _ => return Err(Error::Parse("dimA and dimB must be given together".into())),
        };
        let tol = T::tolerances();
        match (&self.entries, &self.amplitudes) {
            (Some(entries), None) => {
                let d = match (self.dim, bipartite) {
                    (Some(d), None) => d,
                    (None, Some((a, b))) => a * b,
                    (Some(d), Some((a, b))) if d == a * b => d,
                    (Some(_), Some(_)) => return Err(Error::Parse("dim must equal dimA * dimB".into())),
                    (None, None) => return Err(Error::Parse("missing dim".into())),
                };
                if entries.len() != d * d {
                    return Err(Error::LengthMismatch {
                        expected: d * d,
                        found: entries.len(),
                    });
                }
                let m = ComplexMatrix::from_row_major(d, d, complex_list(entries))?;
                Ok(LoadedState::Density {
                    rho: DensityMatrix::validate(m, &tol)?,
                    dims: bipartite,
                })
            }
            (None, Some(amps)) => match (self.dim, bipartite) {
                (None, Some((a, b))) => Ok(LoadedState::Bipartite(BipartitePureState::new(
                    a,
                    b,
                    complex_list(amps),
                    &tol,
                )?)),
                (Some(d), None) => {
                    if amps.len() != d {
                        return Err(Error::LengthMismatch {
                            expected: d,
                            found: amps.len(),
                        });
                    }
                    let psi = PureStateVector::new(complex_list(amps), &tol)?;
                    Ok(LoadedState::Density {
                        rho: DensityMatrix::from_pure(&psi),
                        dims: None,
                    })
                }
                _ => Err(Error::Parse("amplitudes need either dim or dimA/dimB".into())),
            },
            (Some(_), Some(_)) => Err(Error::Parse("give entries or amplitudes, not both".into())),
            (None, None) => Err(Error::Parse("missing entries or amplitudes".into())),
        }
    }
}

/// Parses and validates a state file.
pub fn parse_state<T: Real>(text: &str) -> Result<LoadedState<T>> {
    StateFile::parse(text)?.load()
}

impl<T: Real> Serialize for DensityMatrix<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("DensityMatrix", 2)?;
        s.serialize_field("dim", &self.dim())?;
        s.serialize_field("entries", &pairs(self.matrix().as_slice()))?;
        s.end()
    }
}

impl<T: Real> Serialize for BipartitePureState<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("BipartitePureState", 3)?;
        s.serialize_field("dimA", &self.dim_a())?;
        s.serialize_field("dimB", &self.dim_b())?;
        s.serialize_field("amplitudes", &pairs(self.amplitudes()))?;
        s.end()
    }
}
