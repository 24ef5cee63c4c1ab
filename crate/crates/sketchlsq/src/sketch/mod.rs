//! Random embeddings: Gaussian, Haar and the subsampled randomized Hadamard
//! transform (SRHT).
//!
//! A drawn operator is immutable and cheap to share. Gaussian and Haar
//! operators are materialized `m x n` matrices; the SRHT is kept implicit as
//! a sign vector, a set of sampled row indices and the fast transform, so
//! applying it to an `n x d` matrix costs `O(n_pad d log n_pad)` instead of
//! `O(mnd)`.
//!
//! Conventions:
//! - Gaussian entries are i.i.d. `N(0, 1/m)`, so `E[SᵀS] = I_n`.
//! - Haar operators have exactly orthonormal rows (`S Sᵀ = I_m`) and are NOT
//!   rescaled; `E[SᵀS] = (m/n) I_n`.
//! - SRHT is `R · (H/√n_pad) · E` with `n_pad = 2^⌈log2 n⌉`, rows sampled
//!   uniformly without replacement; the data is implicitly padded with zero
//!   rows. Its rows are orthonormal too (`S Sᵀ = I_m`,
//!   `E[SᵀS] = (m/n_pad) I`), matching the Haar convention so that the
//!   shared inverse-moment formulas in [`crate::moments`] apply to both.
//!   Preconditioned solvers are insensitive to this overall scale; explicit
//!   step sizes are resolved against it.

mod fwht;

pub use fwht::fwht;

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::randmat;
use crate::rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SketchKind {
    Gaussian,
    Haar,
    Srht,
}

impl fmt::Display for SketchKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SketchKind::Gaussian => write!(f, "gaussian"),
            SketchKind::Haar => write!(f, "haar"),
            SketchKind::Srht => write!(f, "srht"),
        }
    }
}

impl FromStr for SketchKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "gaussian" => Ok(SketchKind::Gaussian),
            "haar" => Ok(SketchKind::Haar),
            "srht" => Ok(SketchKind::Srht),
            other => Err(Error::Usage(format!(
                "unknown sketch kind '{other}' (expected gaussian, haar or srht)"
            ))),
        }
    }
}

#[derive(Clone, Debug)]
enum Payload {
    /// Materialized `m x n` matrix (Gaussian, Haar, hand-built operators).
    Dense(DMatrix<f64>),
    /// Implicit SRHT: sign flips, padded transform, row subsample.
    Srht {
        signs: Vec<f64>,
        rows: Vec<usize>,
        n_pad: usize,
    },
}

/// A realized `m x n` random embedding.
#[derive(Clone, Debug)]
pub struct SketchOperator {
    kind: SketchKind,
    m: usize,
    n: usize,
    payload: Payload,
}

impl SketchOperator {
    /// Draws an operator, deterministically per `(kind, m, n, seed)`.
    pub fn draw(kind: SketchKind, m: usize, n: usize, seed: u64) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::Dimension(format!(
                "sketch dimensions must be positive, got m={m}, n={n}"
            )));
        }
        let mut rng = rng::stream(seed, rng::STREAM_SKETCH);
        let payload = match kind {
            SketchKind::Gaussian => {
                let scale = 1.0 / (m as f64).sqrt();
                Payload::Dense(randmat::standard_normal(m, n, &mut rng) * scale)
            }
            SketchKind::Haar => {
                if m > n {
                    return Err(Error::Dimension(format!(
                        "Haar embedding needs m <= n, got m={m}, n={n}"
                    )));
                }
                Payload::Dense(randmat::haar_columns(n, m, &mut rng).transpose())
            }
            SketchKind::Srht => {
                let n_pad = n.next_power_of_two();
                if m > n_pad {
                    return Err(Error::Dimension(format!(
                        "SRHT needs m <= padded size, got m={m}, n_pad={n_pad}"
                    )));
                }
                let signs = (0..n_pad)
                    .map(|_| if rng.random::<bool>() { 1.0 } else { -1.0 })
                    .collect();
                let rows = sample_without_replacement(n_pad, m, &mut rng);
                Payload::Srht { signs, rows, n_pad }
            }
        };
        Ok(SketchOperator {
            kind,
            m,
            n,
            payload,
        })
    }

    /// Wraps an explicit `m x n` matrix (mainly for tests and cross-checks).
    pub fn from_matrix(kind: SketchKind, matrix: DMatrix<f64>) -> Self {
        SketchOperator {
            kind,
            m: matrix.nrows(),
            n: matrix.ncols(),
            payload: Payload::Dense(matrix),
        }
    }

    /// The identity embedding `S = I_n` (exact preconditioner `H_S = H`).
    pub fn identity(n: usize) -> Self {
        Self::from_matrix(SketchKind::Gaussian, DMatrix::identity(n, n))
    }

    pub fn kind(&self) -> SketchKind {
        self.kind
    }

    /// Number of sketched rows `m`.
    pub fn sketch_size(&self) -> usize {
        self.m
    }

    /// Ambient (input) dimension `n`.
    pub fn input_dim(&self) -> usize {
        self.n
    }

    /// Padded length `2^⌈log2 n⌉` for SRHT operators.
    pub fn padded_len(&self) -> Option<usize> {
        match &self.payload {
            Payload::Srht { n_pad, .. } => Some(*n_pad),
            _ => None,
        }
    }

    /// Sampled row indices for SRHT operators.
    pub fn sampled_rows(&self) -> Option<&[usize]> {
        match &self.payload {
            Payload::Srht { rows, .. } => Some(rows),
            _ => None,
        }
    }

    /// Computes `S * A` for an `n x d` matrix `A`.
    pub fn apply(&self, a: &DMatrix<f64>) -> Result<DMatrix<f64>> {
        if a.nrows() != self.n {
            return Err(Error::Dimension(format!(
                "sketch expects {} rows, matrix has {}",
                self.n,
                a.nrows()
            )));
        }
        match &self.payload {
            Payload::Dense(s) => Ok(s * a),
            Payload::Srht { signs, rows, n_pad } => {
                let d = a.ncols();
                let norm = 1.0 / (*n_pad as f64).sqrt();
                let mut out = DMatrix::zeros(self.m, d);
                let mut buf = vec![0.0; *n_pad];
                for j in 0..d {
                    buf.fill(0.0);
                    for i in 0..self.n {
                        buf[i] = signs[i] * a[(i, j)];
                    }
                    fwht(&mut buf)?;
                    for (r, &src) in rows.iter().enumerate() {
                        out[(r, j)] = buf[src] * norm;
                    }
                }
                Ok(out)
            }
        }
    }

    /// Flop count charged for `apply` on an `n x d` input.
    pub fn apply_flops(&self, d: usize) -> u64 {
        let (m, n, d) = (self.m as u64, self.n as u64, d as u64);
        match &self.payload {
            Payload::Dense(_) => 2 * m * n * d,
            Payload::Srht { n_pad, .. } => {
                let n_pad = *n_pad as u64;
                let log = n_pad.ilog2() as u64;
                d * (n + n_pad * log + m)
            }
        }
    }

    /// Materializes the operator as an `m x n` matrix (test oracle; applies
    /// the operator to `I_n`).
    pub fn to_dense(&self) -> DMatrix<f64> {
        match &self.payload {
            Payload::Dense(s) => s.clone(),
            Payload::Srht { .. } => self
                .apply(&DMatrix::identity(self.n, self.n))
                .expect("identity has matching dimensions"),
        }
    }
}

/// `count` distinct indices in `[0, limit)`, uniform without replacement
/// (Floyd's algorithm), returned sorted.
fn sample_without_replacement<R: Rng>(limit: usize, count: usize, rng: &mut R) -> Vec<usize> {
    debug_assert!(count <= limit);
    let mut chosen: HashSet<usize> = HashSet::with_capacity(count);
    for j in (limit - count)..limit {
        let t = rng.random_range(0..=j);
        if !chosen.insert(t) {
            chosen.insert(j);
        }
    }
    let mut rows: Vec<usize> = chosen.into_iter().collect();
    rows.sort_unstable();
    rows
}
