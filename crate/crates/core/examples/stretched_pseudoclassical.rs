//! Stretched damping channels: the T-function threshold decides when the
//! σz bound is already the Holevo capacity.

use capdetect::channels::AffineQubitChannel;
use capdetect::detect::{detect_pauli_qubit, holevo_axial, pseudoclassicality, t_threshold, AXIAL_GRID};

fn main() -> capdetect::Result<()> {
    let gamma = 0.5;
    println!("T(1/2, 1/2) = {:.9}, edge |s| = {:.6}", t_threshold(0.5, 0.5)?, t_threshold(0.5, 0.5)?.sqrt());
    println!("{:>6} {:>10} {:>10} pseudoclassical", "s", "C_DET", "C1");
    for k in 0..=7 {
        let s = k as f64 * 0.1;
        let ch = AffineQubitChannel::stretched(gamma, s)?;
        let rep = pseudoclassicality(&ch)?;
        println!(
            "{s:>6.2} {:>10.6} {:>10.6} {}",
            detect_pauli_qubit(&ch)?.c_det_bits,
            holevo_axial(&ch, AXIAL_GRID)?,
            rep.pseudoclassical
        );
    }
    Ok(())
}
