//! The detection engine.
//!
//! For every basis in a [`DetectionConfig`] the channel's transition matrix
//! p(m|n) is built and its mutual information maximized over input priors;
//! the detected capacity is the best value over bases. Closed forms for the
//! qubit and qutrit families live in the submodules.

mod holevo;
mod pseudo;
mod qubit;
mod qutrit;
mod vonmises;
mod weyl;

pub use holevo::{holevo_axial, holevo_gad_p1, AXIAL_GRID};
pub use pseudo::{pseudoclassicality, t_threshold, PseudoclassicalityReport};
pub use qubit::{
    dephasing_detected, detect_pauli_qubit, extremal_detected_terms, gad_detected_terms, pauli_epsilons,
    pauli_transition, rotated_pauli_detected,
};
pub use qutrit::{qutrit_mub_bases, qutrit_vshape_transitions, VShapeTransitions};
pub use vonmises::{von_mises_expected_capacity, VonMisesPrior, DEFAULT_QUAD_POINTS};
pub use weyl::{detect_weyl, is_prime};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::infotheory::{
    binary_capacity_of, blahut_arimoto, weakly_symmetric_capacity, BaOptions, ProbVector, TransitionMatrix,
    DEFAULT_MAX_ITER, DEFAULT_TOL_BITS,
};
use crate::qcore::{conditional_probs, eigenbasis, sigma_x, sigma_y, sigma_z, weyl_operator, KrausChannel, MeasurementBasis};

/// Tolerance for recognizing weakly symmetric transition matrices.
pub const SYMMETRY_TOL: f64 = 1e-12;

/// Bases to probe and solver settings.
#[derive(Clone, Debug)]
pub struct DetectionConfig {
    bases: Vec<MeasurementBasis>,
    pub ba_tolerance_bits: f64,
    pub max_iterations: usize,
}

impl DetectionConfig {
    pub fn new(bases: Vec<MeasurementBasis>) -> Result<Self> {
        let dim = bases
            .first()
            .ok_or_else(|| Error::param("bases", "at least one basis is required"))?
            .dim();
        if let Some(b) = bases.iter().find(|b| b.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: b.dim(),
            });
        }
        Ok(Self {
            bases,
            ba_tolerance_bits: DEFAULT_TOL_BITS,
            max_iterations: DEFAULT_MAX_ITER,
        })
    }

    /// Eigenbases of σx, σy, σz.
    pub fn pauli() -> Self {
        Self::new(pauli_bases()).expect("pauli bases are consistent")
    }

    /// Eigenbases of every Weyl operator U_ls with (l, s) ≠ (0, 0).
    pub fn weyl(d: usize) -> Result<Self> {
        Self::new(weyl_bases(d)?)
    }

    pub fn with_tolerance(mut self, tol_bits: f64, max_iterations: usize) -> Self {
        self.ba_tolerance_bits = tol_bits;
        self.max_iterations = max_iterations;
        self
    }

    pub fn push_basis(&mut self, basis: MeasurementBasis) -> Result<()> {
        if basis.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: basis.dim(),
            });
        }
        self.bases.push(basis);
        Ok(())
    }

    pub fn bases(&self) -> &[MeasurementBasis] {
        &self.bases
    }

    pub fn dim(&self) -> usize {
        self.bases[0].dim()
    }

    pub(crate) fn ba_options(&self) -> BaOptions {
        BaOptions {
            tol_bits: self.ba_tolerance_bits,
            max_iter: self.max_iterations,
            initial_prior: None,
        }
    }
}

pub fn pauli_bases() -> Vec<MeasurementBasis> {
    [("x", sigma_x()), ("y", sigma_y()), ("z", sigma_z())]
        .into_iter()
        .map(|(label, m)| eigenbasis(&m, label).expect("Pauli spectra are nondegenerate"))
        .collect()
}

/// Fails with a degenerate-basis error for composite `d`, where some U_ls
/// have repeated eigenvalues.
pub fn weyl_bases(d: usize) -> Result<Vec<MeasurementBasis>> {
    let mut out = Vec::with_capacity(d * d - 1);
    for l in 0..d {
        for s in 0..d {
            if (l, s) != (0, 0) {
                out.push(eigenbasis(&weyl_operator(d, l, s)?, format!("U({l},{s})"))?);
            }
        }
    }
    Ok(out)
}

/// How a basis' optimal mutual information was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Ba,
    WeaklySymmetric,
    BinaryClosedForm,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BasisOutcome {
    pub label: String,
    pub transition: TransitionMatrix,
    pub optimal_prior: ProbVector,
    pub mutual_information_bits: f64,
    pub method: Method,
    /// False only when Blahut–Arimoto ran out of iterations.
    pub converged: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DetectionResult {
    pub per_basis: Vec<BasisOutcome>,
    pub c_det_bits: f64,
    /// Index of the maximizing basis; ties go to the lowest index.
    pub argmax_index: usize,
    pub argmax_basis: String,
}

impl DetectionResult {
    pub fn from_outcomes(per_basis: Vec<BasisOutcome>) -> Result<Self> {
        let mut best = 0;
        for (i, o) in per_basis.iter().enumerate() {
            if o.mutual_information_bits > per_basis[best].mutual_information_bits {
                best = i;
            }
        }
        let top = per_basis
            .get(best)
            .ok_or_else(|| Error::param("bases", "at least one basis is required"))?;
        Ok(Self {
            c_det_bits: top.mutual_information_bits,
            argmax_basis: top.label.clone(),
            argmax_index: best,
            per_basis,
        })
    }

    /// True when every basis' optimization converged.
    pub fn converged(&self) -> bool {
        self.per_basis.iter().all(|o| o.converged)
    }
}

/// Optimal mutual information of a single transition matrix, preferring the
/// weakly symmetric and binary closed forms over iteration.
pub fn maximize_transition(label: impl Into<String>, t: TransitionMatrix, options: &BaOptions) -> Result<BasisOutcome> {
    let label = label.into();
    if let Some(sym) = weakly_symmetric_capacity(&t, SYMMETRY_TOL) {
        return Ok(BasisOutcome {
            label,
            optimal_prior: ProbVector::uniform(t.inputs()),
            transition: t,
            mutual_information_bits: sym.capacity_bits,
            method: Method::WeaklySymmetric,
            converged: true,
        });
    }
    if let Some(bin) = binary_capacity_of(&t) {
        let bin = bin?;
        return Ok(BasisOutcome {
            label,
            optimal_prior: ProbVector::with_tolerance(vec![bin.p0, 1.0 - bin.p0], 1e-12)?,
            transition: t,
            mutual_information_bits: bin.capacity_bits,
            method: Method::BinaryClosedForm,
            converged: true,
        });
    }
    let ba = blahut_arimoto(&t, options)?;
    Ok(BasisOutcome {
        label,
        transition: t,
        optimal_prior: ba.optimal_prior,
        mutual_information_bits: ba.capacity_bits,
        method: Method::Ba,
        converged: ba.converged,
    })
}

/// Runs the maximization over already-reconstructed transition matrices.
pub fn detect_transitions(
    transitions: impl IntoIterator<Item = (String, TransitionMatrix)>,
    options: &BaOptions,
) -> Result<DetectionResult> {
    let outcomes = transitions
        .into_iter()
        .map(|(label, t)| maximize_transition(label, t, options))
        .collect::<Result<Vec<_>>>()?;
    DetectionResult::from_outcomes(outcomes)
}

/// C_DET of a channel over the configured bases.
pub fn detect_capacity(channel: &KrausChannel, config: &DetectionConfig) -> Result<DetectionResult> {
    if channel.dim() != config.dim() {
        return Err(Error::DimensionMismatch {
            expected: config.dim(),
            found: channel.dim(),
        });
    }
    let transitions = config
        .bases()
        .iter()
        .map(|b| Ok((b.label().to_string(), conditional_probs(channel, b)?)))
        .collect::<Result<Vec<_>>>()?;
    detect_transitions(transitions, &config.ba_options())
}
