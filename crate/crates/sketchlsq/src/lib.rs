//! Sketching-based preconditioned iterative solvers for overdetermined
//! least squares, with the matching rate predictors and sketch-size
//! calculators.
//!
//! The crate is organized around the pipeline
//! `problem -> sketch -> precond -> solvers`, with three analysis layers on
//! the side:
//!
//! - [`problem`]: instance construction (synthetic spectra, Matrix Market
//!   files), the thin-SVD solution oracle, and error/spectrum measurements.
//! - [`sketch`]: Gaussian, Haar and SRHT embeddings, including the fast
//!   Walsh-Hadamard transform.
//! - [`precond`]: QR/SVD factorizations of the sketched Hessian.
//! - [`solvers`]: PCG with a fixed sketch; IHS, Polyak-IHS and the
//!   GCC/FCG/IPCG conjugate-direction family with fixed or refreshed
//!   sketches.
//! - [`moments`]: inverse moments of the sketched projection, closed-form
//!   and Monte-Carlo, which predict refreshed-sketch rates exactly.
//! - [`analysis`]: momentum root-radius dynamics and Marchenko-Pastur rate
//!   integrals.
//! - [`tuning`]: flop-cost models and cost-optimal sketch sizes.
//!
//! The `examples/` directory has one runnable walkthrough per capability;
//! `cli` backs the `sketchlsq` binary for batch experiments.

pub mod analysis;
pub mod cli;
pub mod error;
pub mod moments;
pub mod plot;
pub mod precond;
pub mod problem;
pub mod rng;
pub mod sketch;
pub mod solvers;
pub mod tuning;

mod randmat;

pub use error::{Error, Result};
