//! Finite-shot simulation of the prepare-and-measure protocol.
//!
//! Every (resample, basis, input) cell draws from its own ChaCha8 stream,
//! keyed off the user seed, so results do not depend on evaluation order or
//! thread count.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Binomial, Distribution};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::detect::{detect_transitions, DetectionConfig, DetectionResult};
use crate::error::{Error, Result};
use crate::infotheory::TransitionMatrix;
use crate::qcore::{choi_matrix, conditional_probs, KrausChannel, MeasurementBasis};

pub const DEFAULT_RESAMPLES: usize = 1000;
pub const MIN_RESAMPLES: usize = 100;

/// Measured counts for one basis; `counts[m][n]` is how often outcome m
/// followed input n.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShotRecord {
    pub basis: String,
    pub counts: Vec<Vec<u64>>,
    pub shots_per_input: u64,
    pub seed: u64,
}

impl ShotRecord {
    pub fn outputs(&self) -> usize {
        self.counts.len()
    }

    pub fn inputs(&self) -> usize {
        self.counts.first().map_or(0, Vec::len)
    }

    /// Relative frequencies; every column sums to one by construction.
    pub fn estimate(&self) -> Result<TransitionMatrix> {
        let n = self.shots_per_input as f64;
        let entries = self.counts.iter().flatten().map(|&c| c as f64 / n).collect();
        TransitionMatrix::from_noisy(self.outputs(), self.inputs(), entries, 1e-12)
    }

    /// Long-format rows `basis,input,output,count`, without header.
    pub fn csv_rows(&self) -> String {
        let mut out = String::new();
        for n in 0..self.inputs() {
            for (m, row) in self.counts.iter().enumerate() {
                out.push_str(&format!("{},{n},{m},{}\n", self.basis, row[n]));
            }
        }
        out
    }
}

pub const SHOT_CSV_HEADER: &str = "basis,input,output,count\n";

/// All records as one CSV document with header.
pub fn shot_records_csv(records: &[ShotRecord]) -> String {
    let mut out = String::from(SHOT_CSV_HEADER);
    for r in records {
        out.push_str(&r.csv_rows());
    }
    out
}

/// Generator for one sampling cell. Distinct keys give independent streams.
pub fn cell_rng(seed: u64, resample: u32, basis: u16, input: u16) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream((u64::from(resample) << 32) | (u64::from(basis) << 16) | u64::from(input));
    rng
}

/// Multinomial draw as a chain of conditional binomials.
fn multinomial(shots: u64, probs: &[f64], rng: &mut ChaCha8Rng) -> Vec<u64> {
    let mut left = shots;
    let mut mass = 1.0;
    let mut out = Vec::with_capacity(probs.len());
    for (k, &p) in probs.iter().enumerate() {
        let draw = if k + 1 == probs.len() || left == 0 {
            left
        } else if mass <= 0.0 {
            0
        } else {
            let q = (p / mass).clamp(0.0, 1.0);
            Binomial::new(left, q).expect("probability clamped to [0, 1]").sample(rng)
        };
        out.push(draw);
        left -= draw;
        mass -= p;
    }
    out
}

fn check_keys(bases: usize, inputs: usize) -> Result<()> {
    if bases > usize::from(u16::MAX) + 1 || inputs > usize::from(u16::MAX) + 1 {
        return Err(Error::param("bases", "at most 65536 bases and 65536 inputs are supported"));
    }
    Ok(())
}

/// Samples `shots_per_input` outcomes for every input of `t` using the
/// stream keyed by (`seed`, `resample`, `basis_index`, input).
pub fn sample_transition_keyed(
    t: &TransitionMatrix,
    label: &str,
    shots_per_input: u64,
    seed: u64,
    resample: u32,
    basis_index: u16,
) -> Result<ShotRecord> {
    if shots_per_input == 0 {
        return Err(Error::param("shots", "at least one shot per input is required"));
    }
    check_keys(1, t.inputs())?;
    let mut counts = vec![vec![0u64; t.inputs()]; t.outputs()];
    for n in 0..t.inputs() {
        let mut rng = cell_rng(seed, resample, basis_index, n as u16);
        for (m, c) in multinomial(shots_per_input, &t.column(n), &mut rng).into_iter().enumerate() {
            counts[m][n] = c;
        }
    }
    Ok(ShotRecord {
        basis: label.to_string(),
        counts,
        shots_per_input,
        seed,
    })
}

/// Returns the record and the estimated transition matrix.
pub fn sample_transition(t: &TransitionMatrix, shots_per_input: u64, seed: u64) -> Result<(ShotRecord, TransitionMatrix)> {
    let record = sample_transition_keyed(t, "", shots_per_input, seed, 0, 0)?;
    let estimate = record.estimate()?;
    Ok((record, estimate))
}

/// Shot records for every configured basis.
pub fn sample_bases(
    channel: &KrausChannel,
    config: &DetectionConfig,
    shots_per_input: u64,
    seed: u64,
) -> Result<Vec<ShotRecord>> {
    if channel.dim() != config.dim() {
        return Err(Error::DimensionMismatch {
            expected: config.dim(),
            found: channel.dim(),
        });
    }
    check_keys(config.bases().len(), channel.dim())?;
    config
        .bases()
        .iter()
        .enumerate()
        .map(|(i, b)| {
            let t = conditional_probs(channel, b)?;
            sample_transition_keyed(&t, b.label(), shots_per_input, seed, 0, i as u16)
        })
        .collect()
}

/// Joint outcome distribution of the entangled variant: P(m, n) for the
/// projector |φ_m><φ_m| ⊗ (|φ_n><φ_n|)ᵀ on (E ⊗ I)|φ+><φ+|. Rows index m.
pub fn entangled_joint_distribution(channel: &KrausChannel, basis: &MeasurementBasis) -> Result<Vec<Vec<f64>>> {
    if channel.dim() != basis.dim() {
        return Err(Error::DimensionMismatch {
            expected: channel.dim(),
            found: basis.dim(),
        });
    }
    let choi = choi_matrix(channel);
    let conj: Vec<_> = basis.vectors().iter().map(|v| v.conj()).collect();
    Ok(basis
        .vectors()
        .iter()
        .map(|phi_m| {
            conj.iter()
                .map(|phi_n| {
                    let v = phi_m.tensor(phi_n);
                    choi.sandwich(v.amplitudes(), v.amplitudes()).re.max(0.0)
                })
                .collect()
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EstimatedDetection {
    pub point_estimate_bits: f64,
    pub ci_low_bits: f64,
    pub ci_high_bits: f64,
    pub bootstrap_resamples: usize,
    pub shots_per_input: u64,
    pub seed: u64,
    /// The detection pipeline run on the estimated transition matrices.
    pub estimate: DetectionResult,
}

impl EstimatedDetection {
    pub fn ci_width(&self) -> f64 {
        self.ci_high_bits - self.ci_low_bits
    }
}

/// Estimates C_DET from simulated counts, with a 95% percentile bootstrap
/// interval obtained by redrawing every column from its empirical
/// frequencies. The interval is widened if needed to contain the point
/// estimate.
pub fn detect_from_samples(
    channel: &KrausChannel,
    config: &DetectionConfig,
    shots_per_input: u64,
    seed: u64,
    resamples: usize,
) -> Result<EstimatedDetection> {
    if resamples < MIN_RESAMPLES {
        return Err(Error::param(
            "resamples",
            format!("at least {MIN_RESAMPLES} bootstrap resamples are required, got {resamples}"),
        ));
    }
    if resamples >= u32::MAX as usize {
        return Err(Error::param("resamples", "too many resamples"));
    }
    let options = config.ba_options();
    let records = sample_bases(channel, config, shots_per_input, seed)?;
    let estimates = records
        .iter()
        .map(|r| Ok((r.basis.clone(), r.estimate()?)))
        .collect::<Result<Vec<_>>>()?;
    let estimate = detect_transitions(estimates.clone(), &options)?;

    let mut boot = (1..=resamples as u32)
        .into_par_iter()
        .map(|r| {
            let redrawn = estimates
                .iter()
                .enumerate()
                .map(|(i, (label, t))| {
                    let rec = sample_transition_keyed(t, label, shots_per_input, seed, r, i as u16)?;
                    Ok((label.clone(), rec.estimate()?))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(detect_transitions(redrawn, &options)?.c_det_bits)
        })
        .collect::<Result<Vec<f64>>>()?;
    boot.sort_by(f64::total_cmp);

    let point = estimate.c_det_bits;
    Ok(EstimatedDetection {
        point_estimate_bits: point,
        ci_low_bits: percentile(&boot, 0.025).min(point),
        ci_high_bits: percentile(&boot, 0.975).max(point),
        bootstrap_resamples: resamples,
        shots_per_input,
        seed,
        estimate,
    })
}

/// Linear interpolation between order statistics of sorted data.
fn percentile(sorted: &[f64], q: f64) -> f64 {
    let pos = q * (sorted.len() - 1) as f64;
    let (lo, hi) = (pos.floor() as usize, pos.ceil() as usize);
    sorted[lo] + (pos - lo as f64) * (sorted[hi] - sorted[lo])
}
