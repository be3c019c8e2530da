//! Dense complex linear algebra and the quantum primitives that turn a
//! channel plus a measurement basis into a classical transition matrix.

mod channel;
mod eigen;
mod matrix;
mod state;

pub use channel::{apply_channel, choi_matrix, conditional_probs, is_cptp, weyl_operator, CptpReport, KrausChannel, CPTP_TOL};
pub use eigen::{hermitian_eigen, hermitian_eigenvalues, normal_eigen};
pub use matrix::{sigma_x, sigma_y, sigma_z, ComplexMatrix};
pub use state::{eigenbasis, maximally_entangled, DensityMatrix, Ket, MeasurementBasis};

