use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A probability vector (entries ≥ 0, summing to 1 within 1e-12).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct ProbVector(Vec<f64>);

impl ProbVector {
    pub const SUM_TOL: f64 = 1e-12;

    pub fn new(p: Vec<f64>) -> Result<Self> {
        Self::with_tolerance(p, Self::SUM_TOL)
    }

    pub(crate) fn with_tolerance(p: Vec<f64>, tol: f64) -> Result<Self> {
        if p.is_empty() {
            return Err(Error::NotProbability("empty vector".into()));
        }
        if let Some(x) = p.iter().find(|x| !(x.is_finite() && **x >= 0.0)) {
            return Err(Error::NotProbability(format!("entry {x} is negative or not finite")));
        }
        let sum: f64 = p.iter().sum();
        if (sum - 1.0).abs() > tol {
            return Err(Error::NotProbability(format!("entries sum to {sum}")));
        }
        Ok(Self(p))
    }

    pub fn uniform(n: usize) -> Self {
        Self(vec![1.0 / n as f64; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }
}

impl TryFrom<Vec<f64>> for ProbVector {
    type Error = Error;

    fn try_from(v: Vec<f64>) -> Result<Self> {
        // serialized priors may have been rounded by a few ulps
        Self::with_tolerance(v, 1e-9)
    }
}

impl From<ProbVector> for Vec<f64> {
    fn from(p: ProbVector) -> Self {
        p.0
    }
}

/// Column-stochastic matrix of conditional probabilities p(m|n):
/// outputs index rows, inputs index columns.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<f64>>", into = "Vec<Vec<f64>>")]
pub struct TransitionMatrix {
    outputs: usize,
    inputs: usize,
    entries: Vec<f64>,
}

impl TransitionMatrix {
    pub const COLUMN_TOL: f64 = 1e-10;

    /// Row-major entries, validated strictly.
    pub fn new(outputs: usize, inputs: usize, entries: Vec<f64>) -> Result<Self> {
        Self::validated(outputs, inputs, entries, Self::COLUMN_TOL)
    }

    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self> {
        let outputs = rows.len();
        let inputs = rows.first().map_or(0, Vec::len);
        if let Some(r) = rows.iter().find(|r| r.len() != inputs) {
            return Err(Error::DimensionMismatch {
                expected: inputs,
                found: r.len(),
            });
        }
        Self::new(outputs, inputs, rows.into_iter().flatten().collect())
    }

    /// Clamps entries within `tol` outside [0, 1] (round-off from quantum
    /// arithmetic) before validating.
    pub fn from_noisy(outputs: usize, inputs: usize, mut entries: Vec<f64>, tol: f64) -> Result<Self> {
        for x in entries.iter_mut() {
            if *x < 0.0 && *x >= -tol {
                *x = 0.0;
            } else if *x > 1.0 && *x <= 1.0 + tol {
                *x = 1.0;
            }
        }
        Self::validated(outputs, inputs, entries, tol)
    }

    fn validated(outputs: usize, inputs: usize, entries: Vec<f64>, tol: f64) -> Result<Self> {
        if outputs == 0 || inputs == 0 {
            return Err(Error::NotStochastic("matrix must be non-empty".into()));
        }
        if entries.len() != outputs * inputs {
            return Err(Error::DimensionMismatch {
                expected: outputs * inputs,
                found: entries.len(),
            });
        }
        if let Some((i, x)) = entries
            .iter()
            .enumerate()
            .find(|(_, x)| !(x.is_finite() && (0.0..=1.0).contains(*x)))
        {
            return Err(Error::NotStochastic(format!(
                "entry ({}, {}) = {x} is outside [0, 1]",
                i / inputs,
                i % inputs
            )));
        }
        for n in 0..inputs {
            let sum: f64 = (0..outputs).map(|m| entries[m * inputs + n]).sum();
            if (sum - 1.0).abs() > tol {
                return Err(Error::NotStochastic(format!("column {n} sums to {sum}")));
            }
        }
        Ok(Self {
            outputs,
            inputs,
            entries,
        })
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![0.0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1.0;
        }
        Self {
            outputs: n,
            inputs: n,
            entries,
        }
    }

    /// Binary channel with P(1|0) = eps0 and P(0|1) = eps1.
    pub fn binary(eps0: f64, eps1: f64) -> Result<Self> {
        Self::new(2, 2, vec![1.0 - eps0, eps1, eps0, 1.0 - eps1])
    }

    pub fn outputs(&self) -> usize {
        self.outputs
    }

    pub fn inputs(&self) -> usize {
        self.inputs
    }

    /// p(m|n)
    pub fn get(&self, m: usize, n: usize) -> f64 {
        self.entries[m * self.inputs + n]
    }

    pub fn column(&self, n: usize) -> Vec<f64> {
        (0..self.outputs).map(|m| self.get(m, n)).collect()
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.entries.chunks(self.inputs).map(<[f64]>::to_vec).collect()
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!((self.outputs, self.inputs), (other.outputs, other.inputs));
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

impl TryFrom<Vec<Vec<f64>>> for TransitionMatrix {
    type Error = Error;

    fn try_from(rows: Vec<Vec<f64>>) -> Result<Self> {
        Self::from_rows(rows)
    }
}

impl From<TransitionMatrix> for Vec<Vec<f64>> {
    fn from(t: TransitionMatrix) -> Self {
        t.rows()
    }
}
