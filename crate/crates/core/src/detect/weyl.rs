//! Shortcut for generalized Pauli channels in prime dimension.

use super::{weyl_bases, BasisOutcome, DetectionResult, Method};
use crate::error::{Error, Result};
use crate::infotheory::{weakly_symmetric_capacity, ProbVector};
use crate::qcore::{conditional_probs, KrausChannel};

/// Column-permutation tolerance for accepting a basis' statistics.
const PERMUTATION_TOL: f64 = 1e-9;

pub fn is_prime(d: usize) -> bool {
    d >= 2 && (2..).take_while(|k| k * k <= d).all(|k| !d.is_multiple_of(k))
}

/// C_DET = log₂ d − min over (l, s) ≠ (0, 0) of the column entropy of
/// p^(ls), valid when every p^(ls) has columns that are permutations of
/// each other. Composite `d` is refused: some U_ls are degenerate there and
/// the general engine with explicit bases must be used instead.
pub fn detect_weyl(channel: &KrausChannel, d: usize) -> Result<DetectionResult> {
    if !is_prime(d) {
        return Err(Error::CompositeDimension(d));
    }
    if channel.dim() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: channel.dim(),
        });
    }
    let outcomes = weyl_bases(d)?
        .into_iter()
        .map(|basis| {
            let t = conditional_probs(channel, &basis)?;
            let sym = weakly_symmetric_capacity(&t, PERMUTATION_TOL).ok_or_else(|| {
                Error::NotGeneralizedPauli(format!("statistics in basis {} are not column permutations", basis.label()))
            })?;
            Ok(BasisOutcome {
                label: basis.label().to_string(),
                transition: t,
                optimal_prior: ProbVector::uniform(d),
                mutual_information_bits: sym.capacity_bits,
                method: Method::WeaklySymmetric,
                converged: true,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    DetectionResult::from_outcomes(outcomes)
}
