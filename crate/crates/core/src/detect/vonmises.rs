//! Averaging the rotated-Pauli bound over a von Mises prior on the phase.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::qubit::rotated_pauli_unchecked;
use crate::error::{Error, Result};

pub const DEFAULT_QUAD_POINTS: usize = 2001;
const MIN_QUAD_POINTS: usize = 64;

/// Density on [−π, π] proportional to exp(K cos φ).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct VonMisesPrior {
    concentration: f64,
}

impl VonMisesPrior {
    pub fn new(concentration: f64) -> Result<Self> {
        if !(concentration.is_finite() && concentration >= 0.0) {
            return Err(Error::param(
                "K_phi",
                format!("concentration must be finite and ≥ 0, got {concentration}"),
            ));
        }
        Ok(Self { concentration })
    }

    pub fn concentration(&self) -> f64 {
        self.concentration
    }

    /// Unnormalized weight, shifted by exp(−K) so large K cannot overflow.
    fn weight(&self, phi: f64) -> f64 {
        (self.concentration * (phi.cos() - 1.0)).exp()
    }

    /// E[f(φ)] by composite Simpson on `quad_points` nodes, normalizing on
    /// the same grid. An even point count is bumped to the next odd one.
    pub fn expectation(&self, f: impl Fn(f64) -> f64, quad_points: usize) -> Result<f64> {
        if quad_points < MIN_QUAD_POINTS {
            return Err(Error::param(
                "quad_points",
                format!("at least {MIN_QUAD_POINTS} points are required, got {quad_points}"),
            ));
        }
        let n = quad_points | 1;
        let h = 2.0 * PI / (n - 1) as f64;
        let (mut num, mut den) = (0.0, 0.0);
        for k in 0..n {
            let phi = -PI + k as f64 * h;
            let coeff = if k == 0 || k == n - 1 {
                1.0
            } else if k % 2 == 1 {
                4.0
            } else {
                2.0
            };
            let w = coeff * self.weight(phi);
            num += w * f(phi);
            den += w;
        }
        Ok(num / den)
    }
}

/// Expected Pauli-basis C_DET of the rotated Pauli channel when the phase
/// follows a von Mises prior with concentration `k_phi`.
pub fn von_mises_expected_capacity(px: f64, py: f64, pz: f64, k_phi: f64, quad_points: usize) -> Result<f64> {
    crate::channels::pauli_weights(px, py, pz)?;
    VonMisesPrior::new(k_phi)?.expectation(|phi| rotated_pauli_unchecked(px, py, pz, phi), quad_points)
}
