//! Dephasing about an unknown axis, measured in the fixed Pauli bases.

use std::f64::consts::PI;

use capdetect::channels::dephasing_axis_channel;
use capdetect::detect::{dephasing_detected, detect_capacity, DetectionConfig};

fn main() -> capdetect::Result<()> {
    let p = 0.9;
    for (theta, phi) in [(0.0, 0.0), (PI / 8.0, 0.3), (PI / 4.0, PI / 4.0), ((1.0 / 3f64.sqrt()).acos(), PI / 4.0)] {
        let closed = dephasing_detected(p, theta, phi)?;
        let engine = detect_capacity(&dephasing_axis_channel(p, theta, phi)?, &DetectionConfig::pauli())?;
        println!(
            "θ={theta:.4} φ={phi:.4}: C_DET = {closed:.6} (engine {:.6}, basis {})",
            engine.c_det_bits, engine.argmax_basis
        );
    }
    println!("worst case equals 1 − H(2p/3) = {:.6}", 1.0 - capdetect::infotheory::binary_entropy(2.0 * p / 3.0));
    Ok(())
}
