//! First and second inverse moments of `C_S = (SU)ᵀ(SU)`.
//!
//! For rotationally invariant embeddings the inverse moments are isotropic,
//! `E[C_S⁻¹] = θ1·I` and `E[C_S⁻²] = θ2·I`, and they fully determine the
//! behavior of refreshed-sketch methods: the optimal step size is `θ1/θ2`
//! and the expected per-iteration error contraction is `1 - θ1²/θ2`.
//!
//! Closed forms:
//! - Gaussian (exact, `m >= d+4`):
//!   `θ1 = m/(m-d-1)`, `θ2 = m²(m-1)/((m-d)(m-d-1)(m-d-3))`.
//! - Haar (finite-sample approximation, `d < m <= n`):
//!   `θ1 = (n-d)/(m-d)`, `θ2 = (n-d)(d² + mn - 2dm)/(m-d)³`.
//! - SRHT: the trace moments are asymptotically those of Haar; the same
//!   formulas are reused under a distinct source tag, and serve only as a
//!   step-size heuristic since isotropy is not established for the SRHT.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::randmat;
use crate::rng;
use crate::sketch::{SketchKind, SketchOperator};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MomentSource {
    GaussianExact,
    HaarApprox,
    SrhtTraceAsymptotic,
    MonteCarlo,
}

/// The pair `(θ1, θ2)` with provenance and, for Monte-Carlo estimates,
/// standard errors.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct MomentPair {
    pub theta1: f64,
    pub theta2: f64,
    pub source: MomentSource,
    /// `(stderr(θ1), stderr(θ2))` for Monte-Carlo estimates.
    pub stderr: Option<(f64, f64)>,
    /// Trials discarded for numerically singular `C_S` (Monte Carlo only).
    pub failed_trials: usize,
}

impl MomentPair {
    fn new(theta1: f64, theta2: f64, source: MomentSource) -> Result<Self> {
        if !theta1.is_finite() || !theta2.is_finite() || theta1 <= 0.0 || theta2 <= 0.0 {
            return Err(Error::Domain(format!(
                "inverse moments must be positive, got θ1={theta1}, θ2={theta2}"
            )));
        }
        // Cauchy-Schwarz on the spectral measure; equality only in the
        // degenerate C_S = I case.
        if theta1 * theta1 > theta2 * (1.0 + 1e-12) {
            return Err(Error::Numerical(format!(
                "θ1² = {} exceeds θ2 = {theta2}",
                theta1 * theta1
            )));
        }
        Ok(MomentPair {
            theta1,
            theta2,
            source,
            stderr: None,
            failed_trials: 0,
        })
    }

    /// Optimal refreshed-sketch step size `θ1/θ2`.
    pub fn step(&self) -> f64 {
        self.theta1 / self.theta2
    }

    /// Expected per-iteration contraction `1 - θ1²/θ2`, in `[0, 1)`.
    pub fn rate(&self) -> f64 {
        (1.0 - self.theta1 * self.theta1 / self.theta2).max(0.0)
    }
}

/// Exact Gaussian inverse moments; diverge below `m = d + 4`.
pub fn gaussian_moments(m: usize, d: usize) -> Result<MomentPair> {
    if m < d + 4 {
        return Err(Error::Domain(format!(
            "Gaussian inverse moments need m >= d+4, got m={m}, d={d}"
        )));
    }
    let (mf, df) = (m as f64, d as f64);
    let theta1 = mf / (mf - df - 1.0);
    let theta2 = mf * mf * (mf - 1.0) / ((mf - df) * (mf - df - 1.0) * (mf - df - 3.0));
    MomentPair::new(theta1, theta2, MomentSource::GaussianExact)
}

/// Haar finite-sample approximation, `d < m <= n` (exact at `m = n`).
pub fn haar_moments(n: usize, m: usize, d: usize) -> Result<MomentPair> {
    haar_formula(n, m, d, MomentSource::HaarApprox)
}

/// SRHT trace moments: same formulas as Haar, separate tag. Used as a
/// step-size heuristic only.
pub fn srht_trace_moments(n: usize, m: usize, d: usize) -> Result<MomentPair> {
    haar_formula(n, m, d, MomentSource::SrhtTraceAsymptotic)
}

fn haar_formula(n: usize, m: usize, d: usize, source: MomentSource) -> Result<MomentPair> {
    if m <= d {
        return Err(Error::Domain(format!(
            "orthonormal-row moments need m > d, got m={m}, d={d}"
        )));
    }
    if m > n {
        return Err(Error::Domain(format!(
            "orthonormal-row moments need m <= n, got m={m}, n={n}"
        )));
    }
    let (nf, mf, df) = (n as f64, m as f64, d as f64);
    let theta1 = (nf - df) / (mf - df);
    let theta2 = (nf - df) * (df * df + mf * nf - 2.0 * df * mf) / (mf - df).powi(3);
    MomentPair::new(theta1, theta2, source)
}

/// Monte-Carlo estimates of `d⁻¹ tr C_S⁻¹` and `d⁻¹ tr C_S⁻²`.
///
/// The test basis `U` is one Haar-random orthonormal `n x d` frame, fixed
/// across trials. For Gaussian and Haar sketches the choice is irrelevant
/// (rotational invariance); for the SRHT a generic frame is essential — a
/// basis supported on few coordinates aligns with the Walsh structure and
/// does not represent the trace asymptotics. Trials run in parallel and
/// reduce in index order. Trials with a numerically singular `C_S` are
/// discarded; more than 1% of them aborts the estimate.
pub fn mc_moments(
    kind: SketchKind,
    n: usize,
    m: usize,
    d: usize,
    trials: usize,
    seed: u64,
) -> Result<MomentPair> {
    if trials < 2 {
        return Err(Error::Domain("mc_moments needs at least 2 trials".into()));
    }
    if m <= d {
        return Err(Error::Domain(format!(
            "mc_moments needs m > d, got m={m}, d={d}"
        )));
    }
    let u = randmat::haar_columns(n, d, &mut rng::stream(seed, rng::STREAM_MC_BASIS));

    let samples: Vec<Result<Option<(f64, f64)>>> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let s = SketchOperator::draw(kind, m, n, rng::derive(seed, 1 + t as u64))?;
            let su = s.apply(&u)?;
            let c = su.transpose() * &su;
            let eigs = c.symmetric_eigen().eigenvalues;
            let max = eigs.amax();
            if eigs.iter().any(|&l| l <= 1e-12 * max) {
                return Ok(None);
            }
            let inv1 = eigs.iter().map(|&l| 1.0 / l).sum::<f64>() / d as f64;
            let inv2 = eigs.iter().map(|&l| 1.0 / (l * l)).sum::<f64>() / d as f64;
            Ok(Some((inv1, inv2)))
        })
        .collect();

    let mut kept = Vec::with_capacity(trials);
    let mut failures = 0usize;
    for s in samples {
        match s? {
            Some(pair) => kept.push(pair),
            None => failures += 1,
        }
    }
    if failures * 100 > trials {
        return Err(Error::Numerical(format!(
            "{failures}/{trials} Monte-Carlo trials had singular C_S"
        )));
    }
    let k = kept.len() as f64;
    let mean1 = kept.iter().map(|s| s.0).sum::<f64>() / k;
    let mean2 = kept.iter().map(|s| s.1).sum::<f64>() / k;
    let var1 = kept.iter().map(|s| (s.0 - mean1).powi(2)).sum::<f64>() / (k - 1.0);
    let var2 = kept.iter().map(|s| (s.1 - mean2).powi(2)).sum::<f64>() / (k - 1.0);
    let mut pair = MomentPair::new(mean1, mean2, MomentSource::MonteCarlo)?;
    pair.stderr = Some(((var1 / k).sqrt(), (var2 / k).sqrt()));
    pair.failed_trials = failures;
    Ok(pair)
}
