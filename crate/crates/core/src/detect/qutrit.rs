//! Closed-form transition matrices of the V-configuration qutrit decay.

use serde::{Deserialize, Serialize};

use crate::error::{check_range, Result};
use crate::infotheory::TransitionMatrix;
use crate::qcore::MeasurementBasis;

/// The two mutually unbiased bases used for the qutrit: computational
/// (`B1`) and Fourier (`B2`).
pub fn qutrit_mub_bases() -> [MeasurementBasis; 2] {
    [
        MeasurementBasis::computational(3).with_label("B1"),
        MeasurementBasis::fourier(3).with_label("B2"),
    ]
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VShapeTransitions {
    pub q1: TransitionMatrix,
    pub q2: TransitionMatrix,
    pub gamma_tilde: f64,
}

/// Q1 in the computational basis, and the symmetric Q2 in the Fourier basis
/// with off-diagonal γ̃ = 1/3 − (√(1−γ01) + √(1−γ02) + √((1−γ01)(1−γ02)))/9.
pub fn qutrit_vshape_transitions(gamma01: f64, gamma02: f64) -> Result<VShapeTransitions> {
    check_range("gamma01", gamma01, 0.0, 1.0)?;
    check_range("gamma02", gamma02, 0.0, 1.0)?;
    let q1 = TransitionMatrix::from_rows(vec![
        vec![1.0, gamma01, gamma02],
        vec![0.0, 1.0 - gamma01, 0.0],
        vec![0.0, 0.0, 1.0 - gamma02],
    ])?;
    let (a, b) = ((1.0 - gamma01).sqrt(), (1.0 - gamma02).sqrt());
    let g = (1.0 / 3.0 - (a + b + a * b) / 9.0).max(0.0);
    let q2 = TransitionMatrix::from_rows(
        (0..3)
            .map(|m| (0..3).map(|n| if m == n { 1.0 - 2.0 * g } else { g }).collect())
            .collect(),
    )?;
    Ok(VShapeTransitions { q1, q2, gamma_tilde: g })
}
