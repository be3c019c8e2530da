//! Kraus-form channels and the maps that turn a channel plus a basis into
//! classical statistics.

use num_complex::Complex64;

use super::eigen::hermitian_eigenvalues;
use super::matrix::ComplexMatrix;
use super::state::{DensityMatrix, MeasurementBasis};
use crate::error::{Error, Result};
use crate::infotheory::TransitionMatrix;

/// Default tolerance for stochasticity and CPTP certification.
pub const CPTP_TOL: f64 = 1e-10;

/// A linear map ρ ↦ Σ_k A_k ρ A_k† on d×d matrices.
///
/// Construction only checks shapes; use [`is_cptp`] to certify the map.
#[derive(Clone, Debug, PartialEq)]
pub struct KrausChannel {
    dim: usize,
    operators: Vec<ComplexMatrix>,
}

impl KrausChannel {
    pub fn new(operators: Vec<ComplexMatrix>) -> Result<Self> {
        let first = operators
            .first()
            .ok_or_else(|| Error::param("operators", "at least one Kraus operator is required"))?;
        let dim = first.rows();
        for op in &operators {
            if op.rows() != dim || op.cols() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: if op.rows() != dim { op.rows() } else { op.cols() },
                });
            }
        }
        Ok(Self { dim, operators })
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            dim,
            operators: vec![ComplexMatrix::identity(dim)],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn operators(&self) -> &[ComplexMatrix] {
        &self.operators
    }

    /// Σ_k A_k X A_k† for an arbitrary d×d matrix X.
    pub fn apply_matrix(&self, x: &ComplexMatrix) -> ComplexMatrix {
        let mut out = ComplexMatrix::zeros(self.dim, self.dim);
        for a in &self.operators {
            out = &out + &(&(a * x) * &a.adjoint());
        }
        out
    }

    /// Composition: `other` applied after `self`.
    pub fn then(&self, other: &KrausChannel) -> Result<KrausChannel> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        let operators = other
            .operators
            .iter()
            .flat_map(|b| self.operators.iter().map(move |a| b * a))
            .collect();
        Ok(KrausChannel {
            dim: self.dim,
            operators,
        })
    }
}

fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// Applies the channel to a state.
pub fn apply_channel(channel: &KrausChannel, rho: &DensityMatrix) -> Result<DensityMatrix> {
    check_dim(channel.dim(), rho.dim())?;
    let mut out = channel.apply_matrix(rho.matrix());
    // re-Hermitize against round-off
    let n = out.rows();
    for i in 0..n {
        out[(i, i)] = Complex64::from(out[(i, i)].re);
        for j in i + 1..n {
            let avg = (out[(i, j)] + out[(j, i)].conj()) * 0.5;
            out[(i, j)] = avg;
            out[(j, i)] = avg.conj();
        }
    }
    Ok(DensityMatrix::from_matrix_unchecked(out))
}

/// (E ⊗ I)|φ+><φ+| as a d²×d² matrix, system factor first.
pub fn choi_matrix(channel: &KrausChannel) -> ComplexMatrix {
    let d = channel.dim();
    let amp = Complex64::from(1.0 / (d as f64).sqrt());
    let phi: Vec<Complex64> = (0..d * d)
        .map(|i| if i / d == i % d { amp } else { Complex64::new(0.0, 0.0) })
        .collect();
    let mut out = ComplexMatrix::zeros(d * d, d * d);
    let id = ComplexMatrix::identity(d);
    for a in channel.operators() {
        let v = a.kron(&id).matvec(&phi);
        out = &out + &ComplexMatrix::outer(&v, &v);
    }
    out
}

/// Outcome of a CPTP certification.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CptpReport {
    pub cptp: bool,
    /// max |Σ A†A − I| entry
    pub trace_deviation: f64,
    pub min_choi_eigenvalue: f64,
}

pub fn is_cptp(channel: &KrausChannel, tol: f64) -> CptpReport {
    let d = channel.dim();
    let mut sum = ComplexMatrix::zeros(d, d);
    for a in channel.operators() {
        sum = &sum + &(&a.adjoint() * a);
    }
    let trace_deviation = sum.max_abs_diff(&ComplexMatrix::identity(d));
    let min_choi_eigenvalue = hermitian_eigenvalues(&choi_matrix(channel))[0];
    CptpReport {
        cptp: trace_deviation <= tol && min_choi_eigenvalue >= -tol,
        trace_deviation,
        min_choi_eigenvalue,
    }
}

/// p(m|n) = <φ_m| E(|φ_n><φ_n|) |φ_m>, outputs as rows.
pub fn conditional_probs(channel: &KrausChannel, basis: &MeasurementBasis) -> Result<TransitionMatrix> {
    check_dim(channel.dim(), basis.dim())?;
    let d = basis.dim();
    let mut entries = vec![0.0; d * d];
    for (n, input) in basis.vectors().iter().enumerate() {
        let out = channel.apply_matrix(&input.projector());
        for (m, output) in basis.vectors().iter().enumerate() {
            let p = out.sandwich(output.amplitudes(), output.amplitudes()).re;
            entries[m * d + n] = p;
        }
    }
    TransitionMatrix::from_noisy(d, d, entries, CPTP_TOL)
}

/// U_ls = Σ_k e^{2πi kl/d} |k><(k+s) mod d|
pub fn weyl_operator(d: usize, l: usize, s: usize) -> Result<ComplexMatrix> {
    if d == 0 {
        return Err(Error::param("d", "must be positive"));
    }
    if l >= d || s >= d {
        return Err(Error::param("(l, s)", format!("indices must lie in [0, {}], got ({l}, {s})", d - 1)));
    }
    Ok(ComplexMatrix::from_fn(d, d, |r, c| {
        if c == (r + s) % d {
            Complex64::from_polar(1.0, std::f64::consts::TAU * ((r * l) % d) as f64 / d as f64)
        } else {
            Complex64::new(0.0, 0.0)
        }
    }))
}
