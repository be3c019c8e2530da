//! Amplitude damping: the detected bound against the Holevo capacity, and
//! the pseudoclassicality verdict at finite temperature.

use capdetect::channels::AffineQubitChannel;
use capdetect::detect::{detect_pauli_qubit, gad_detected_terms, holevo_gad_p1, pseudoclassicality};

fn main() -> capdetect::Result<()> {
    println!("{:>5} {:>10} {:>10} {:>10}", "γ", "C_DET", "C1", "z term");
    for i in 0..=10 {
        let gamma = i as f64 / 10.0;
        let c_det = detect_pauli_qubit(&AffineQubitChannel::gad(gamma, 1.0)?)?.c_det_bits;
        let [_, z] = gad_detected_terms(gamma, 1.0)?;
        println!("{gamma:>5.2} {c_det:>10.6} {:>10.6} {z:>10.6}", holevo_gad_p1(gamma)?);
    }

    // the bound does not depend on the bath population p
    for p in [0.0, 0.3, 0.7, 1.0] {
        let ch = AffineQubitChannel::gad(0.4, p)?;
        let pc = pseudoclassicality(&ch)?;
        println!(
            "γ=0.4 p={p}: C_DET={:.9} pseudoclassical={} (λm²={:.4}, T={:.4})",
            detect_pauli_qubit(&ch)?.c_det_bits,
            pc.pseudoclassical,
            pc.lambda_m_sq,
            pc.threshold_t
        );
    }
    Ok(())
}
