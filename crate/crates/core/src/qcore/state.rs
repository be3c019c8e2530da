//! Kets, density matrices and orthonormal measurement bases.

use num_complex::Complex64;

use super::eigen::{hermitian_eigenvalues, normal_eigen};
use super::matrix::{ComplexMatrix, ONE, ZERO};
use crate::error::{Error, Result};

/// A unit vector in C^d.
#[derive(Clone, Debug, PartialEq)]
pub struct Ket {
    amplitudes: Vec<Complex64>,
}

impl Ket {
    /// Wraps amplitudes that must already be normalized to within 1e-12.
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(Error::InvalidState("empty ket".into()));
        }
        let norm = norm(&amplitudes);
        if (norm - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidState(format!("ket norm is {norm}, expected 1")));
        }
        Ok(Self { amplitudes })
    }

    /// Normalizes arbitrary nonzero amplitudes.
    pub fn normalized(mut amplitudes: Vec<Complex64>) -> Result<Self> {
        let n = norm(&amplitudes);
        if !(n > 1e-300) {
            return Err(Error::InvalidState("cannot normalize a zero vector".into()));
        }
        amplitudes.iter_mut().for_each(|z| *z /= n);
        Ok(Self { amplitudes })
    }

    /// Computational basis state |k> in dimension d.
    pub fn basis(dim: usize, k: usize) -> Self {
        assert!(k < dim);
        let mut amplitudes = vec![ZERO; dim];
        amplitudes[k] = ONE;
        Self { amplitudes }
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn inner(&self, other: &Ket) -> Complex64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn conj(&self) -> Ket {
        Ket {
            amplitudes: self.amplitudes.iter().map(|z| z.conj()).collect(),
        }
    }

    pub fn tensor(&self, other: &Ket) -> Ket {
        let amplitudes = self
            .amplitudes
            .iter()
            .flat_map(|a| other.amplitudes.iter().map(move |b| a * b))
            .collect();
        Ket { amplitudes }
    }

    /// |ψ><ψ|
    pub fn projector(&self) -> ComplexMatrix {
        ComplexMatrix::outer(&self.amplitudes, &self.amplitudes)
    }
}

fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// (1/√d) Σ_k |k>|k> in the computational product basis.
pub fn maximally_entangled(d: usize) -> Result<Ket> {
    if d < 2 {
        return Err(Error::param("d", format!("must be at least 2, got {d}")));
    }
    let amp = Complex64::from(1.0 / (d as f64).sqrt());
    let mut amplitudes = vec![ZERO; d * d];
    for k in 0..d {
        amplitudes[k * d + k] = amp;
    }
    Ok(Ket { amplitudes })
}

/// Hermitian, unit-trace, positive semidefinite matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
}

impl DensityMatrix {
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::InvalidState("density matrix must be square".into()));
        }
        let herm = matrix.hermiticity_deviation();
        if herm > 1e-12 {
            return Err(Error::InvalidState(format!("not Hermitian (deviation {herm:.3e})")));
        }
        let tr = matrix.trace();
        if (tr - ONE).norm() > 1e-12 {
            return Err(Error::InvalidState(format!("trace is {tr}, expected 1")));
        }
        let min_eig = hermitian_eigenvalues(&matrix)[0];
        if min_eig < -1e-10 {
            return Err(Error::InvalidState(format!("negative eigenvalue {min_eig:.3e}")));
        }
        Ok(Self { matrix })
    }

    pub(crate) fn from_matrix_unchecked(matrix: ComplexMatrix) -> Self {
        Self { matrix }
    }

    pub fn pure(ket: &Ket) -> Self {
        Self {
            matrix: ket.projector(),
        }
    }

    pub fn maximally_mixed(d: usize) -> Self {
        Self {
            matrix: ComplexMatrix::identity(d).scale(Complex64::from(1.0 / d as f64)),
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    /// Born probability <φ|ρ|φ>.
    pub fn expectation(&self, ket: &Ket) -> f64 {
        self.matrix.sandwich(ket.amplitudes(), ket.amplitudes()).re
    }
}

/// An orthonormal, complete basis of C^d with a display label.
#[derive(Clone, Debug, PartialEq)]
pub struct MeasurementBasis {
    label: String,
    vectors: Vec<Ket>,
}

impl MeasurementBasis {
    pub fn new(label: impl Into<String>, vectors: Vec<Ket>) -> Result<Self> {
        let d = vectors.len();
        if d == 0 {
            return Err(Error::param("basis", "needs at least one vector"));
        }
        if let Some(bad) = vectors.iter().find(|v| v.dim() != d) {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: bad.dim(),
            });
        }
        for i in 0..d {
            for j in i..d {
                let target = if i == j { ONE } else { ZERO };
                let deviation = (vectors[i].inner(&vectors[j]) - target).norm();
                if deviation > 1e-10 {
                    return Err(Error::NotOrthonormal { i, j, deviation });
                }
            }
        }
        Ok(Self {
            label: label.into(),
            vectors,
        })
    }

    pub fn computational(d: usize) -> Self {
        Self {
            label: "computational".into(),
            vectors: (0..d).map(|k| Ket::basis(d, k)).collect(),
        }
    }

    /// Fourier basis |n> = Σ_j ω^{nj} |j> / √d.
    pub fn fourier(d: usize) -> Self {
        let amp = 1.0 / (d as f64).sqrt();
        let vectors = (0..d)
            .map(|n| Ket {
                amplitudes: (0..d)
                    .map(|j| {
                        let angle = std::f64::consts::TAU * ((n * j) % d) as f64 / d as f64;
                        Complex64::from_polar(amp, angle)
                    })
                    .collect(),
            })
            .collect();
        Self {
            label: "fourier".into(),
            vectors,
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Ket] {
        &self.vectors
    }
}

/// Orthonormal eigenvectors of a normal matrix, sorted by eigenvalue phase.
///
/// Degenerate spectra (minimum gap below 1e-8) are refused since the basis
/// would not be determined by the observable.
pub fn eigenbasis(m: &ComplexMatrix, label: impl Into<String>) -> Result<MeasurementBasis> {
    let (_, vectors) = normal_eigen(m, 1e-8)?;
    let kets = vectors.into_iter().map(|amplitudes| Ket { amplitudes }).collect();
    MeasurementBasis::new(label, kets)
}
