//! Measurement-based lower bounds on the classical capacity of quantum
//! channels.
//!
//! A channel is probed with a handful of orthonormal bases: each basis is
//! used both to prepare inputs and to measure outputs, which yields a
//! classical transition matrix p(m|n). Maximizing the mutual information of
//! each matrix over input priors and taking the best basis gives the
//! detected capacity C_DET, a lower bound on the Holevo capacity.
//!
//! The crate is organized bottom-up:
//!
//! - [`qcore`]: complex matrices, states, bases, Kraus channels, Weyl operators.
//! - [`channels`]: the channel zoo and the affine Bloch-sphere form.
//! - [`infotheory`]: entropies, Blahut–Arimoto and closed-form capacities.
//! - [`detect`]: the detection engine and its closed-form specializations.
//! - [`sim`]: finite-shot simulation with bootstrap confidence intervals.
//! - [`spec`], [`figures`], [`format`]: JSON channel specifications, figure
//!   sweeps and the file formats used by the `capdetect` binary.
//!
//! Runnable walkthroughs live in `examples/`; `cargo run --example <name>`.

pub mod channels;
pub mod detect;
pub mod error;
pub mod figures;
pub mod format;
pub mod infotheory;
pub mod qcore;
pub mod sim;
pub mod spec;

pub use error::{Error, Result};
