//! Blahut–Arimoto on an arbitrary transition matrix, watching the
//! lower/upper capacity bracket close.

use capdetect::infotheory::{blahut_arimoto, BaOptions, BlahutArimoto, TransitionMatrix};

fn main() -> capdetect::Result<()> {
    // outputs as rows, inputs as columns
    let t = TransitionMatrix::from_rows(vec![
        vec![0.7, 0.1, 0.2],
        vec![0.2, 0.6, 0.1],
        vec![0.1, 0.3, 0.7],
    ])?;

    let mut ba = BlahutArimoto::new(&t, None)?;
    for r in 1..=8 {
        let b = ba.step();
        println!("iter {r:>2}: {:.9} ≤ C ≤ {:.9}  (gap {:.2e})", b.lower, b.upper, b.gap());
    }

    let result = blahut_arimoto(&t, &BaOptions::default())?;
    println!(
        "\nconverged={} after {} iterations: C = {:.9} bits, prior {:?}",
        result.converged,
        result.iterations,
        result.capacity_bits,
        result.optimal_prior.as_slice()
    );
    Ok(())
}
