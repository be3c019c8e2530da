//! Generalized Pauli channels in prime dimension: the Weyl-basis shortcut
//! against the full engine.

use capdetect::channels::pauli_family_channel;
use capdetect::detect::{detect_capacity, detect_weyl, DetectionConfig};

fn main() -> capdetect::Result<()> {
    let d = 5;
    // mostly identity, some shift and clock errors
    let mut q = vec![vec![0.0; d]; d];
    q[0][0] = 0.8;
    q[0][1] = 0.1;
    q[1][0] = 0.06;
    q[2][3] = 0.04;
    let channel = pauli_family_channel(d, &q)?;

    let fast = detect_weyl(&channel, d)?;
    let full = detect_capacity(&channel, &DetectionConfig::weyl(d)?)?;
    println!("{} Weyl bases probed", fast.per_basis.len());
    println!("shortcut C_DET = {:.9} (basis {})", fast.c_det_bits, fast.argmax_basis);
    println!("engine   C_DET = {:.9} (basis {})", full.c_det_bits, full.argmax_basis);

    match DetectionConfig::weyl(4) {
        Ok(_) => println!("unexpected: d = 4 accepted"),
        Err(e) => println!("d = 4: {e}"),
    }
    Ok(())
}
