//! Classical information theory: entropies, mutual information, the
//! Blahut–Arimoto solver and closed-form capacities.

mod binary;
mod blahut;
mod entropy;
mod types;

pub use binary::{binary_capacity, binary_capacity_of, weakly_symmetric_capacity, BinaryCapacity, WeaklySymmetric};
pub use blahut::{blahut_arimoto, BaOptions, BaResult, BlahutArimoto, Bracket, DEFAULT_MAX_ITER, DEFAULT_TOL_BITS};
pub use entropy::{binary_entropy, entropy_bits, mutual_information, shannon_entropy};
pub use types::{ProbVector, TransitionMatrix};

