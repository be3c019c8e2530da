//! Closed-form capacity of binary asymmetric channels, from the binary
//! symmetric channel through the Z channel to the useless channel.

use capdetect::infotheory::{binary_capacity, binary_entropy};

fn main() -> capdetect::Result<()> {
    println!("{:>6} {:>6} {:>10} {:>8}", "eps0", "eps1", "C (bits)", "p0");
    for (e0, e1) in [(0.1, 0.1), (0.0, 0.5), (0.05, 0.3), (0.3, 0.05), (0.2, 0.8), (0.5, 0.5)] {
        let c = binary_capacity(e0, e1)?;
        println!("{e0:>6} {e1:>6} {:>10.6} {:>8.4}", c.capacity_bits, c.p0);
    }

    // the symmetric case reduces to 1 − H(ε)
    let eps = 0.1;
    println!("\nBSC(0.1): closed form {:.12}, 1 − H(ε) {:.12}", binary_capacity(eps, eps)?.capacity_bits, 1.0 - binary_entropy(eps));
    Ok(())
}
