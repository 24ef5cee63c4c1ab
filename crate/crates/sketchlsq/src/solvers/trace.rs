//! Per-run record of errors, costs and resolved parameters.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::sketch::SketchKind;

use super::{SketchMode, Truncation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Pcg,
    Ihs,
    #[serde(rename = "polyak")]
    PolyakIhs,
    Gcc,
    Fcg,
    Ipcg,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self {
            Method::Pcg => "pcg",
            Method::Ihs => "ihs",
            Method::PolyakIhs => "polyak",
            Method::Gcc => "gcc",
            Method::Fcg => "fcg",
            Method::Ipcg => "ipcg",
        };
        write!(f, "{tag}")
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "pcg" => Ok(Method::Pcg),
            "ihs" => Ok(Method::Ihs),
            "polyak" | "polyak-ihs" | "polyakihs" => Ok(Method::PolyakIhs),
            "gcc" => Ok(Method::Gcc),
            "fcg" => Ok(Method::Fcg),
            "ipcg" => Ok(Method::Ipcg),
            other => Err(Error::Usage(format!(
                "unknown method '{other}' (expected pcg, ihs, polyak, gcc, fcg or ipcg)"
            ))),
        }
    }
}

/// Flops and wall seconds attributed to one phase (sketch, factor, iterate).
#[derive(Clone, Copy, Debug, Default, Serialize, Deserialize)]
pub struct PhaseStats {
    pub flops: u64,
    pub seconds: f64,
}

/// Parameters actually used by a run, after `auto` resolution.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct ResolvedParams {
    pub mu: Option<f64>,
    pub beta: Option<f64>,
    pub truncation: Option<Truncation>,
    pub sketch: SketchKind,
    pub m: usize,
    pub mode: SketchMode,
    pub seed: u64,
}

/// Record of one solver run.
///
/// `deltas[t]` is the prediction error `δ_t = 1/2 ||x_t - x*||²_H` (empty
/// when no oracle was supplied); `resid_norms[t]` the residual or gradient
/// norm; `flops_cum`/`wall_cum` the cumulative cost at the same instants,
/// including sketching and factorization.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SolveTrace {
    pub method: Method,
    pub deltas: Vec<f64>,
    pub resid_norms: Vec<f64>,
    pub flops_cum: Vec<u64>,
    pub wall_cum: Vec<f64>,
    pub sketch_phase: PhaseStats,
    pub factor_phase: PhaseStats,
    pub iterate_phase: PhaseStats,
    pub params: ResolvedParams,
    pub converged: bool,
    pub iters: usize,
}

impl SolveTrace {
    /// Adds setup (sketch + factorization) costs charged outside the solver
    /// loop, shifting the cumulative ledgers accordingly.
    pub fn charge_setup(&mut self, sketch: PhaseStats, factor: PhaseStats) {
        let flops = sketch.flops + factor.flops;
        let secs = sketch.seconds + factor.seconds;
        self.sketch_phase.flops += sketch.flops;
        self.sketch_phase.seconds += sketch.seconds;
        self.factor_phase.flops += factor.flops;
        self.factor_phase.seconds += factor.seconds;
        for f in &mut self.flops_cum {
            *f += flops;
        }
        for w in &mut self.wall_cum {
            *w += secs;
        }
    }

    /// Total flops across phases.
    pub fn total_flops(&self) -> u64 {
        self.sketch_phase.flops + self.factor_phase.flops + self.iterate_phase.flops
    }

    /// Final relative error `δ_T/δ_0`, when an oracle was attached.
    pub fn final_relative_delta(&self) -> Option<f64> {
        match (self.deltas.first(), self.deltas.last()) {
            (Some(&d0), Some(&dt)) if d0 > 0.0 => Some(dt / d0),
            _ => None,
        }
    }
}
