//! JSON channel specifications: `{"kind": ..., "params": {...}}`.
//!
//! ```
//! use capdetect::spec::parse_channel_spec;
//!
//! let spec = parse_channel_spec(r#"{"kind":"gad","params":{"gamma":0.36,"p":1.0}}"#).unwrap();
//! assert_eq!(spec.dim(), 2);
//! let channel = spec.build().unwrap();
//! assert_eq!(channel.dim(), 2);
//! ```

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::channels::{
    dephasing_axis_channel, pauli_channel, pauli_family_channel, rotated_pauli_channel, vshape_qutrit_channel,
    AffineQubitChannel,
};
use crate::error::{Error, Result};
use crate::qcore::{is_cptp, ComplexMatrix, KrausChannel, CPTP_TOL};

/// One Kraus operator, either flat row-major or as a list of rows; each
/// entry is `[re, im]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum KrausEntries {
    Flat(Vec<[f64; 2]>),
    Rows(Vec<Vec<[f64; 2]>>),
}

impl KrausEntries {
    fn flatten(&self) -> Vec<[f64; 2]> {
        match self {
            Self::Flat(v) => v.clone(),
            Self::Rows(rows) => rows.iter().flatten().copied().collect(),
        }
    }

    fn from_matrix(m: &ComplexMatrix) -> Self {
        Self::Flat(m.as_slice().iter().map(|z| [z.re, z.im]).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "params", rename_all = "snake_case", deny_unknown_fields)]
pub enum ChannelSpec {
    Kraus { dim: usize, operators: Vec<KrausEntries> },
    Pauli { px: f64, py: f64, pz: f64 },
    GeneralizedPauli { d: usize, q: Vec<Vec<f64>> },
    Gad { gamma: f64, p: f64 },
    Stretched { gamma: f64, s: f64 },
    Extremal { alpha: f64, beta: f64 },
    DephasingAxis { p: f64, theta: f64, phi: f64 },
    RotatedPauli { px: f64, py: f64, pz: f64, phi: f64 },
    VshapeQutrit { gamma01: f64, gamma02: f64 },
    AffineQubit { lambda1: f64, lambda2: f64, lambda3: f64, t3: f64 },
}

/// Parses and validates a specification document.
pub fn parse_channel_spec(document: &str) -> Result<ChannelSpec> {
    let spec = parse_channel_spec_unvalidated(document)?;
    spec.validate()?;
    Ok(spec)
}

/// Parses the document structure only; parameter ranges are not checked.
pub fn parse_channel_spec_unvalidated(document: &str) -> Result<ChannelSpec> {
    serde_json::from_str(document).map_err(|e| Error::Parse(e.to_string()))
}

impl ChannelSpec {
    pub fn kind(&self) -> &'static str {
        match self {
            Self::Kraus { .. } => "kraus",
            Self::Pauli { .. } => "pauli",
            Self::GeneralizedPauli { .. } => "generalized_pauli",
            Self::Gad { .. } => "gad",
            Self::Stretched { .. } => "stretched",
            Self::Extremal { .. } => "extremal",
            Self::DephasingAxis { .. } => "dephasing_axis",
            Self::RotatedPauli { .. } => "rotated_pauli",
            Self::VshapeQutrit { .. } => "vshape_qutrit",
            Self::AffineQubit { .. } => "affine_qubit",
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Self::Kraus { dim, .. } => *dim,
            Self::GeneralizedPauli { d, .. } => *d,
            Self::VshapeQutrit { .. } => 3,
            _ => 2,
        }
    }

    /// Builds the channel, discarding it; errors name the offending field.
    pub fn validate(&self) -> Result<()> {
        self.build().map(|_| ())
    }

    /// Canonical affine form for the kinds that have one natively.
    pub fn affine(&self) -> Option<Result<AffineQubitChannel>> {
        Some(match *self {
            Self::Gad { gamma, p } => AffineQubitChannel::gad(gamma, p),
            Self::Stretched { gamma, s } => AffineQubitChannel::stretched(gamma, s),
            Self::Extremal { alpha, beta } => AffineQubitChannel::extremal(alpha, beta),
            Self::AffineQubit {
                lambda1,
                lambda2,
                lambda3,
                t3,
            } => AffineQubitChannel::new(lambda1, lambda2, lambda3, t3),
            Self::Pauli { px, py, pz } => crate::channels::pauli_weights(px, py, pz).and_then(|_| {
                AffineQubitChannel::new(1.0 - 2.0 * (py + pz), 1.0 - 2.0 * (px + pz), 1.0 - 2.0 * (px + py), 0.0)
            }),
            _ => return None,
        })
    }

    /// Kraus representation. A user-supplied Kraus set must be CPTP within
    /// the default tolerance.
    pub fn build(&self) -> Result<KrausChannel> {
        match self {
            Self::Kraus { dim, operators } => build_kraus(*dim, operators),
            Self::Pauli { px, py, pz } => pauli_channel(*px, *py, *pz),
            Self::GeneralizedPauli { d, q } => pauli_family_channel(*d, q),
            Self::DephasingAxis { p, theta, phi } => dephasing_axis_channel(*p, *theta, *phi),
            Self::RotatedPauli { px, py, pz, phi } => rotated_pauli_channel(*px, *py, *pz, *phi),
            Self::VshapeQutrit { gamma01, gamma02 } => vshape_qutrit_channel(*gamma01, *gamma02),
            Self::Gad { .. } | Self::Stretched { .. } | Self::Extremal { .. } | Self::AffineQubit { .. } => {
                self.affine().expect("affine kinds")?.to_kraus()
            }
        }
    }

    /// Like [`build`](Self::build), but a `kraus` spec is assembled without
    /// the CPTP test so that it can be diagnosed.
    pub fn build_unchecked(&self) -> Result<KrausChannel> {
        match self {
            Self::Kraus { dim, operators } => assemble_kraus(*dim, operators),
            _ => self.build(),
        }
    }

    /// A `kraus` spec holding the given channel's operators.
    pub fn from_channel(channel: &KrausChannel) -> Self {
        Self::Kraus {
            dim: channel.dim(),
            operators: channel.operators().iter().map(KrausEntries::from_matrix).collect(),
        }
    }
}

fn build_kraus(dim: usize, operators: &[KrausEntries]) -> Result<KrausChannel> {
    let channel = assemble_kraus(dim, operators)?;
    let report = is_cptp(&channel, CPTP_TOL);
    if !report.cptp {
        return Err(Error::NotCptp {
            trace_deviation: report.trace_deviation,
            min_choi_eigenvalue: report.min_choi_eigenvalue,
        });
    }
    Ok(channel)
}

fn assemble_kraus(dim: usize, operators: &[KrausEntries]) -> Result<KrausChannel> {
    if dim == 0 {
        return Err(Error::param("dim", "must be at least 1"));
    }
    if operators.is_empty() {
        return Err(Error::param("operators", "at least one Kraus operator is required"));
    }
    let ops = operators
        .iter()
        .enumerate()
        .map(|(k, entries)| {
            let flat = entries.flatten();
            if flat.len() != dim * dim {
                return Err(Error::param(
                    format!("operators[{k}]"),
                    format!("expected {} entries for a {dim}×{dim} matrix, found {}", dim * dim, flat.len()),
                ));
            }
            if flat.iter().flatten().any(|x| !x.is_finite()) {
                return Err(Error::param(format!("operators[{k}]"), "entries must be finite"));
            }
            ComplexMatrix::from_vec(dim, dim, flat.into_iter().map(|[re, im]| Complex64::new(re, im)).collect())
        })
        .collect::<Result<Vec<_>>>()?;
    KrausChannel::new(ops)
}
