//! Pseudoclassicality certificate for canonical non-unital qubit channels.

use std::f64::consts::LN_2;

use serde::{Deserialize, Serialize};

use super::pauli_epsilons;
use crate::channels::AffineQubitChannel;
use crate::error::{check_range, Result};
use crate::infotheory::{binary_capacity, binary_entropy};

/// Below this |t − r| the removable singularity of T is replaced by its limit.
const SEAM: f64 = 1e-6;

/// Threshold T(t, r) that max{λ₁², λ₂²} must not exceed.
pub fn t_threshold(t_norm: f64, r: f64) -> Result<f64> {
    check_range("t_norm", t_norm, 0.0, 1.0)?;
    check_range("r", r, 0.0, 1.0)?;
    let base = r * r - t_norm * r;
    let u = t_norm - r;
    if u.abs() < SEAM {
        return Ok(base + 0.5 * LN_2 * (1.0 - binary_entropy(0.5 + r)));
    }
    // H'(x) = log2((1−x)/x) at x = (1+u)/2, written to keep precision near u = 0
    let slope = (f64::ln_1p(-u) - f64::ln_1p(u)) / LN_2;
    let jump = binary_entropy(0.5 * (1.0 + t_norm + r)) - binary_entropy(0.5 * (1.0 + u));
    Ok(base + u * jump / slope)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PseudoclassicalityReport {
    /// The shift is nonzero and lies along a principal axis; always true for
    /// non-unital channels in canonical form.
    pub applicable: bool,
    pub lambda_m_sq: f64,
    pub threshold_t: f64,
    pub pseudoclassical: bool,
    /// Holevo capacity C₁, present whenever `pseudoclassical` holds.
    pub c1_bits: Option<f64>,
}

/// Unital channels are always pseudoclassical with C₁ = 1 − H((1 − max|λᵢ|)/2).
/// Otherwise the channel is pseudoclassical iff max{λ₁², λ₂²} ≤ T(|t₃|, |λ₃|),
/// and then C₁ is the binary capacity of the σz measurement.
pub fn pseudoclassicality(ch: &AffineQubitChannel) -> Result<PseudoclassicalityReport> {
    ch.check_cp()?;
    let lambda_m_sq = ch.lambda1.powi(2).max(ch.lambda2.powi(2));
    let threshold_t = t_threshold(ch.t3.abs(), ch.lambda3.abs())?;
    if ch.is_unital() {
        let top = ch.lambdas().into_iter().map(f64::abs).fold(0.0, f64::max);
        return Ok(PseudoclassicalityReport {
            applicable: false,
            lambda_m_sq,
            threshold_t,
            pseudoclassical: true,
            c1_bits: Some(1.0 - binary_entropy(0.5 * (1.0 - top))),
        });
    }
    let pseudoclassical = lambda_m_sq <= threshold_t;
    let c1_bits = if pseudoclassical {
        let (e0, e1) = pauli_epsilons(ch)[2];
        Some(binary_capacity(e0, e1)?.capacity_bits)
    } else {
        None
    };
    Ok(PseudoclassicalityReport {
        applicable: true,
        lambda_m_sq,
        threshold_t,
        pseudoclassical,
        c1_bits,
    })
}
