//! Closed-form capacities: binary asymmetric channels and weakly symmetric
//! channels.

use serde::{Deserialize, Serialize};

use super::entropy::{binary_entropy, entropy_bits};
use super::types::TransitionMatrix;
use crate::error::{check_range, Result};

/// Capacity of a binary channel together with the optimal P(input = 0).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BinaryCapacity {
    pub capacity_bits: f64,
    pub p0: f64,
}

/// Below this |1 − ε₀ − ε₁| the output is treated as independent of the input.
const DEGENERATE_DENOM: f64 = 1e-9;

/// Capacity of the binary channel with P(1|0) = `eps0` and P(0|1) = `eps1`.
///
/// Any labeling is accepted. Internally the outputs are flipped when
/// ε₀ + ε₁ > 1 and the inputs swapped when ε₀ > ε₁, which leaves
/// 0 ≤ ε₀ ≤ ½, ε₀ ≤ ε₁ and ε₀ ≤ 1 − ε₁; the returned `p0` refers to the
/// caller's original input labels.
pub fn binary_capacity(eps0: f64, eps1: f64) -> Result<BinaryCapacity> {
    check_range("eps0", eps0, 0.0, 1.0)?;
    check_range("eps1", eps1, 0.0, 1.0)?;

    let (mut e0, mut e1) = (eps0, eps1);
    if e0 + e1 > 1.0 {
        // relabel outputs: errors become successes
        (e0, e1) = (1.0 - e0, 1.0 - e1);
    }
    let swapped = e0 > e1;
    if swapped {
        (e0, e1) = (e1, e0);
    }

    let denom = 1.0 - e0 - e1;
    if denom < DEGENERATE_DENOM {
        return Ok(BinaryCapacity {
            capacity_bits: 0.0,
            p0: 0.5,
        });
    }
    let (h0, h1) = (binary_entropy(e0), binary_entropy(e1));
    let z = ((h0 - h1) / denom).exp2();
    let capacity = (1.0 + z).log2() + e0 / denom * h1 - (1.0 - e1) / denom * h0;
    let p0 = ((1.0 - e1 * (1.0 + z)) / (denom * (1.0 + z))).clamp(0.0, 1.0);

    Ok(BinaryCapacity {
        capacity_bits: capacity.clamp(0.0, 1.0),
        p0: if swapped { 1.0 - p0 } else { p0 },
    })
}

/// Capacity of a 2×2 transition matrix via [`binary_capacity`].
pub fn binary_capacity_of(t: &TransitionMatrix) -> Option<Result<BinaryCapacity>> {
    (t.outputs() == 2 && t.inputs() == 2).then(|| binary_capacity(t.get(1, 0), t.get(0, 1)))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct WeaklySymmetric {
    pub capacity_bits: f64,
    pub column_entropy_bits: f64,
}

/// log₂|Y| − H(column) when every column is a permutation of the others and
/// all row sums agree (within `tol`); `None` otherwise. The optimal prior is
/// uniform.
pub fn weakly_symmetric_capacity(t: &TransitionMatrix, tol: f64) -> Option<WeaklySymmetric> {
    let sorted_column = |n: usize| {
        let mut c = t.column(n);
        c.sort_by(f64::total_cmp);
        c
    };
    let reference = sorted_column(0);
    for n in 1..t.inputs() {
        let col = sorted_column(n);
        if col.iter().zip(&reference).any(|(a, b)| (a - b).abs() > tol) {
            return None;
        }
    }
    let row_sum = |m: usize| (0..t.inputs()).map(|n| t.get(m, n)).sum::<f64>();
    let first = row_sum(0);
    if (1..t.outputs()).any(|m| (row_sum(m) - first).abs() > tol) {
        return None;
    }
    let h = entropy_bits(&t.column(0));
    Some(WeaklySymmetric {
        capacity_bits: ((t.outputs() as f64).log2() - h).max(0.0),
        column_entropy_bits: h,
    })
}
