use super::types::{ProbVector, TransitionMatrix};
use crate::error::{Error, Result};

/// −Σ x log₂ x over arbitrary nonnegative weights, with 0·log 0 = 0.
pub fn entropy_bits(p: &[f64]) -> f64 {
    p.iter()
        .filter(|&&x| x > 0.0)
        .map(|&x| -x * x.log2())
        .sum::<f64>()
        .max(0.0)
}

/// Shannon entropy in bits.
pub fn shannon_entropy(p: &ProbVector) -> f64 {
    entropy_bits(p.as_slice())
}

/// H(x) = −x log₂ x − (1−x) log₂(1−x)
pub fn binary_entropy(x: f64) -> f64 {
    entropy_bits(&[x, 1.0 - x])
}

/// I(X;Y) = Σ p_x p(y|x) log₂[p(y|x) / Σ_x' p_x' p(y|x')]
pub fn mutual_information(prior: &ProbVector, t: &TransitionMatrix) -> Result<f64> {
    if prior.len() != t.inputs() {
        return Err(Error::DimensionMismatch {
            expected: t.inputs(),
            found: prior.len(),
        });
    }
    Ok(mutual_information_unchecked(prior.as_slice(), t))
}

pub(crate) fn mutual_information_unchecked(prior: &[f64], t: &TransitionMatrix) -> f64 {
    let q: Vec<f64> = (0..t.outputs())
        .map(|m| prior.iter().enumerate().map(|(n, p)| p * t.get(m, n)).sum())
        .collect();
    let mut info = 0.0;
    for (n, &pn) in prior.iter().enumerate() {
        if pn <= 0.0 {
            continue;
        }
        for (m, &qm) in q.iter().enumerate() {
            let pmn = t.get(m, n);
            if pmn > 0.0 {
                info += pn * pmn * (pmn / qm).log2();
            }
        }
    }
    info.max(0.0)
}
