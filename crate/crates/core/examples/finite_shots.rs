//! Estimating the bound from simulated measurement counts, with bootstrap
//! intervals that shrink as shots grow.

use capdetect::channels::pauli_channel;
use capdetect::detect::{detect_capacity, DetectionConfig};
use capdetect::sim::{detect_from_samples, sample_bases, shot_records_csv};

fn main() -> capdetect::Result<()> {
    let channel = pauli_channel(0.15, 0.05, 0.1)?;
    let config = DetectionConfig::pauli();
    println!("exact C_DET = {:.6}", detect_capacity(&channel, &config)?.c_det_bits);

    for shots in [100, 1_000, 10_000, 100_000] {
        let e = detect_from_samples(&channel, &config, shots, 42, 500)?;
        println!(
            "{shots:>7} shots/input: {:.6}  95% CI [{:.6}, {:.6}]",
            e.point_estimate_bits, e.ci_low_bits, e.ci_high_bits
        );
    }

    print!("\n{}", shot_records_csv(&sample_bases(&channel, &config, 20, 1)?));
    Ok(())
}
