//! A Pauli channel probed with the σx, σy, σz eigenbases: the general engine
//! on Kraus operators agrees with the affine closed form.

use capdetect::channels::{kraus_to_affine, pauli_channel, AffineQubitChannel};
use capdetect::detect::{detect_capacity, detect_pauli_qubit, pauli_epsilons, DetectionConfig};

fn main() -> capdetect::Result<()> {
    let (px, py, pz) = (0.15, 0.05, 0.1);
    let channel = pauli_channel(px, py, pz)?;
    let form = kraus_to_affine(&channel)?;
    println!("Λ diagonal: {:?}", [form.lambda[0][0], form.lambda[1][1], form.lambda[2][2]]);

    let engine = detect_capacity(&channel, &DetectionConfig::pauli())?;
    for o in &engine.per_basis {
        println!("basis {}: I = {:.6} bits ({:?})", o.label, o.mutual_information_bits, o.method);
    }
    println!("C_DET = {:.9} via basis {}", engine.c_det_bits, engine.argmax_basis);

    let affine = AffineQubitChannel::new(1.0 - 2.0 * (py + pz), 1.0 - 2.0 * (px + pz), 1.0 - 2.0 * (px + py), 0.0)?;
    println!("(ε0, ε1) per basis: {:?}", pauli_epsilons(&affine));
    println!("closed form C_DET = {:.9}", detect_pauli_qubit(&affine)?.c_det_bits);
    Ok(())
}
