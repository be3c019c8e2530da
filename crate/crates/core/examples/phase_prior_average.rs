//! A Pauli channel followed by an unknown phase rotation: the bound as a
//! function of the angle, then averaged over von Mises priors.

use std::f64::consts::PI;

use capdetect::detect::{rotated_pauli_detected, von_mises_expected_capacity, DEFAULT_QUAD_POINTS};

fn main() -> capdetect::Result<()> {
    let (px, py, pz) = (0.15, 0.05, 0.1);
    for k in 0..=4 {
        let phi = k as f64 * PI / 4.0;
        println!("φ = {phi:.4}: C_DET = {:.6}", rotated_pauli_detected(px, py, pz, phi)?);
    }
    println!();
    for kappa in [0.0, 1.0, 3.0, 10.0, 30.0, 100.0, 1000.0] {
        let avg = von_mises_expected_capacity(px, py, pz, kappa, DEFAULT_QUAD_POINTS)?;
        println!("K = {kappa:>6}: E[C_DET] = {avg:.6}");
    }
    Ok(())
}
