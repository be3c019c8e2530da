//! Blahut–Arimoto capacity solver for discrete memoryless channels.
//!
//! Each iteration computes, for the current prior p and output marginal
//! q_m = Σ_l p_l p(m|l), the factors c_n = 2^{D(p(·|n) ‖ q)} and rescales
//! p_n ∝ p_n c_n. The pair log₂ Σ p_n c_n ≤ C ≤ log₂ max c_n brackets the
//! capacity and is used as the stopping rule.

use serde::{Deserialize, Serialize};

use super::types::{ProbVector, TransitionMatrix};
use crate::error::{Error, Result};

pub const DEFAULT_TOL_BITS: f64 = 1e-9;
pub const DEFAULT_MAX_ITER: usize = 100_000;

#[derive(Clone, Debug)]
pub struct BaOptions {
    pub tol_bits: f64,
    pub max_iter: usize,
    pub initial_prior: Option<ProbVector>,
}

impl Default for BaOptions {
    fn default() -> Self {
        Self {
            tol_bits: DEFAULT_TOL_BITS,
            max_iter: DEFAULT_MAX_ITER,
            initial_prior: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BaResult {
    /// Final lower bound log₂ Σ p_n c_n.
    pub capacity_bits: f64,
    pub optimal_prior: ProbVector,
    pub iterations: usize,
    /// Final upper minus lower bound.
    pub gap_bits: f64,
    pub converged: bool,
}

/// Lower and upper capacity bounds at one iterate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Bracket {
    pub lower: f64,
    pub upper: f64,
}

impl Bracket {
    pub fn gap(&self) -> f64 {
        (self.upper - self.lower).max(0.0)
    }
}

/// Stepwise Blahut–Arimoto iteration; exposed so callers can inspect the
/// bracket sequence.
pub struct BlahutArimoto<'a> {
    t: &'a TransitionMatrix,
    prior: Vec<f64>,
    divergence: Vec<f64>,
    marginal: Vec<f64>,
}

impl<'a> BlahutArimoto<'a> {
    pub fn new(t: &'a TransitionMatrix, initial_prior: Option<&ProbVector>) -> Result<Self> {
        let prior = match initial_prior {
            Some(p) if p.len() != t.inputs() => {
                return Err(Error::DimensionMismatch {
                    expected: t.inputs(),
                    found: p.len(),
                })
            }
            Some(p) => p.as_slice().to_vec(),
            None => ProbVector::uniform(t.inputs()).as_slice().to_vec(),
        };
        Ok(Self {
            t,
            prior,
            divergence: vec![0.0; t.inputs()],
            marginal: vec![0.0; t.outputs()],
        })
    }

    pub fn prior(&self) -> &[f64] {
        &self.prior
    }

    /// Evaluates the bracket at the current prior, then updates the prior.
    pub fn step(&mut self) -> Bracket {
        let t = self.t;
        for (m, q) in self.marginal.iter_mut().enumerate() {
            *q = self.prior.iter().enumerate().map(|(l, p)| p * t.get(m, l)).sum();
        }
        for (n, d) in self.divergence.iter_mut().enumerate() {
            *d = (0..t.outputs())
                .map(|m| {
                    let p = t.get(m, n);
                    if p > 0.0 {
                        p * (p / self.marginal[m]).log2()
                    } else {
                        0.0
                    }
                })
                .sum();
        }
        // c_n / max c keeps the exponentials in range
        let shift = self
            .prior
            .iter()
            .zip(&self.divergence)
            .filter(|(p, _)| **p > 0.0)
            .map(|(_, d)| *d)
            .fold(f64::NEG_INFINITY, f64::max);
        let upper = self.divergence.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let weights: Vec<f64> = self
            .prior
            .iter()
            .zip(&self.divergence)
            .map(|(p, d)| if *p > 0.0 { p * (d - shift).exp2() } else { 0.0 })
            .collect();
        let total: f64 = weights.iter().sum();
        let lower = shift + total.log2();
        for (p, w) in self.prior.iter_mut().zip(&weights) {
            *p = w / total;
        }
        Bracket {
            lower,
            upper: upper.max(lower),
        }
    }
}

/// Capacity of `t` in bits by Blahut–Arimoto iteration.
///
/// Stops once the bracket width drops to `tol_bits`. Hitting `max_iter`
/// is not an error: the best iterate is returned with `converged = false`.
pub fn blahut_arimoto(t: &TransitionMatrix, options: &BaOptions) -> Result<BaResult> {
    if !(options.tol_bits > 0.0) {
        return Err(Error::param("tol_bits", "must be positive"));
    }
    let mut solver = BlahutArimoto::new(t, options.initial_prior.as_ref())?;
    let mut best = Bracket {
        lower: 0.0,
        upper: f64::INFINITY,
    };
    let mut iterations = 0;
    let mut converged = false;
    while iterations < options.max_iter.max(1) {
        let bracket = solver.step();
        iterations += 1;
        best = Bracket {
            lower: best.lower.max(bracket.lower),
            upper: best.upper.min(bracket.upper),
        };
        if bracket.gap() <= options.tol_bits {
            converged = true;
            break;
        }
    }
    let max_bits = (t.inputs() as f64).log2();
    Ok(BaResult {
        capacity_bits: best.lower.clamp(0.0, max_bits),
        optimal_prior: ProbVector::with_tolerance(solver.prior().to_vec(), 1e-9)?,
        iterations,
        gap_bits: best.gap(),
        converged,
    })
}
