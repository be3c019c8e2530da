//! V-configuration qutrit decay probed with two mutually unbiased bases,
//! mapping where each basis gives the better bound.

use capdetect::channels::vshape_qutrit_channel;
use capdetect::detect::{detect_capacity, qutrit_mub_bases, qutrit_vshape_transitions, DetectionConfig};

fn main() -> capdetect::Result<()> {
    let config = DetectionConfig::new(qutrit_mub_bases().to_vec())?;

    let v = qutrit_vshape_transitions(0.5, 0.5)?;
    println!("γ01 = γ02 = 0.5: γ̃ = {:.6}", v.gamma_tilde);
    println!("Q1 = {:?}\nQ2 = {:?}", v.q1.rows(), v.q2.rows());

    println!("\nwinning basis over (γ01 rows, γ02 columns):");
    for i in 0..=10 {
        let g01 = i as f64 / 10.0;
        let row: String = (0..=10)
            .map(|j| {
                let r = detect_capacity(&vshape_qutrit_channel(g01, j as f64 / 10.0).unwrap(), &config).unwrap();
                if r.argmax_index == 0 { '1' } else { '2' }
            })
            .collect();
        println!("  {g01:.1}  {row}");
    }
    Ok(())
}
