//! Flop-count cost models and cost-optimal sketch sizes for PCG.
//!
//! To reach a relative accuracy `ε` with a fixed sketch of size `m`, PCG
//! pays `C(m) = sketch(m) + m d² + n d ln(1/ε) / ln(m/m_ref)`, with
//! `m_ref = d ln d` for the SRHT (sketch cost `n d ln m`) and `m_ref = d`
//! for Gaussian embeddings (sketch cost `n d`, assuming the Gaussian sketch
//! is formed in parallel; a flag restores the serial `n d m` model). All
//! logarithms are natural.
//!
//! The closed-form prescriptions keep `C` within a constant of its minimum:
//! - SRHT, case (i) `√ln(1/ε) < ln(n/d²)`: `m* = e^{√ln(1/ε)} d ln d`;
//!   case (ii): `m* = (n/d) max{ln d, ln(1/ε)/ln(n/d²)}`. The constants are
//!   order-level; a geometric grid search is kept alongside as an oracle.
//! - Gaussian: `α* = m*/d` solves `α ln α = (n/d²) ln(1/ε)`, i.e.
//!   `m* = d·exp(W((n/d²) ln(1/ε)))` with `W` the Lambert function. This
//!   equalizes factorization and iteration cost, `C(m*) = 2 d³ exp(W(·))`.
//!
//! Everything here assumes the highly overparameterized regime `n > d²`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sketch::SketchKind;

/// Principal-branch Lambert W on `[0, ∞)`: the solution of `w e^w = a`.
///
/// Halley iteration from a logarithmic initial guess; the residual
/// `|W e^W - a|` is driven below `1e-12 · max(1, a)`.
pub fn lambert_w(a: f64) -> Result<f64> {
    if a.is_nan() || a < 0.0 {
        return Err(Error::Domain(format!(
            "lambert_w is restricted to a >= 0, got {a}"
        )));
    }
    if a == 0.0 {
        return Ok(0.0);
    }
    let mut w = if a < std::f64::consts::E {
        // Series-flavored start, accurate for small a.
        a / (1.0 + a)
    } else {
        let l = a.ln();
        l - l.ln().max(0.0)
    };
    let tol = 1e-13 * a.max(1.0);
    for _ in 0..64 {
        let ew = w.exp();
        let f = w * ew - a;
        if f.abs() <= tol {
            return Ok(w);
        }
        let denom = ew * (w + 1.0) - (w + 2.0) * f / (2.0 * w + 2.0);
        w -= f / denom;
    }
    Err(Error::Numerical(format!(
        "lambert_w failed to converge for a = {a}"
    )))
}

/// The three-term cost model `C(m)`.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct CostModel {
    pub kind: SketchKind,
    pub n: usize,
    pub d: usize,
    pub epsilon: f64,
    /// Charge the serial `n d m` Gaussian sketching cost instead of the
    /// idealized parallel `n d`.
    pub serial_gaussian_sketch: bool,
}

impl CostModel {
    pub fn new(kind: SketchKind, n: usize, d: usize, epsilon: f64) -> Result<Self> {
        if kind == SketchKind::Haar {
            return Err(Error::Domain(
                "no cost model for Haar embeddings (generation cost dominates)".into(),
            ));
        }
        if d < 2 || n <= d {
            return Err(Error::Dimension(format!(
                "cost model needs n > d >= 2, got n={n}, d={d}"
            )));
        }
        if epsilon.is_nan() || epsilon <= 0.0 || epsilon >= 1.0 {
            return Err(Error::Domain(format!(
                "epsilon must lie in (0,1), got {epsilon}"
            )));
        }
        Ok(CostModel {
            kind,
            n,
            d,
            epsilon,
            serial_gaussian_sketch: false,
        })
    }

    /// Reference sketch size under which the iteration bound is vacuous.
    pub fn m_ref(&self) -> f64 {
        let d = self.d as f64;
        match self.kind {
            SketchKind::Srht => d * d.ln(),
            _ => d,
        }
    }

    pub fn sketch_cost(&self, m: f64) -> f64 {
        let (n, d) = (self.n as f64, self.d as f64);
        match self.kind {
            SketchKind::Srht => n * d * m.ln(),
            _ => {
                if self.serial_gaussian_sketch {
                    n * d * m
                } else {
                    n * d
                }
            }
        }
    }

    pub fn factor_cost(&self, m: f64) -> f64 {
        let d = self.d as f64;
        m * d * d
    }

    /// `n d ln(1/ε)/ln(m/m_ref)`; infinite at or below `m_ref`.
    pub fn iter_cost(&self, m: f64) -> f64 {
        let (n, d) = (self.n as f64, self.d as f64);
        let ratio = m / self.m_ref();
        if ratio <= 1.0 {
            return f64::INFINITY;
        }
        n * d * (1.0 / self.epsilon).ln() / ratio.ln()
    }

    pub fn cost(&self, m: f64) -> f64 {
        self.sketch_cost(m) + self.factor_cost(m) + self.iter_cost(m)
    }
}

/// Brute-force minimizer of `C(m)` over a geometric grid on `(m_ref, hi]`;
/// the independent oracle for the closed-form prescriptions.
pub fn grid_min_cost(model: &CostModel, hi: f64, points: usize) -> (f64, f64) {
    let lo = model.m_ref() * 1.0001;
    let ratio = (hi / lo).powf(1.0 / (points - 1) as f64);
    let mut best = (lo, model.cost(lo));
    let mut m = lo;
    for _ in 1..points {
        m *= ratio;
        let c = model.cost(m);
        if c < best.1 {
            best = (m, c);
        }
    }
    best
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SrhtCase {
    /// `√ln(1/ε) < ln(n/d²)`: moderate precision.
    I,
    /// High-precision regime.
    Ii,
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct SrhtSketchSize {
    pub m_star: usize,
    pub m_star_real: f64,
    pub case: SrhtCase,
    pub predicted_cost: f64,
}

fn check_overparameterized(n: usize, d: usize, epsilon: f64) -> Result<()> {
    if n <= d * d {
        return Err(Error::Domain(format!(
            "optimized sketch sizes assume n > d², got n={n}, d={d}"
        )));
    }
    if epsilon.is_nan() || epsilon <= 0.0 || epsilon >= 1.0 {
        return Err(Error::Domain(format!(
            "epsilon must lie in (0,1), got {epsilon}"
        )));
    }
    Ok(())
}

/// Cost-optimal SRHT sketch size (order-level constants taken as 1).
pub fn srht_opt_sketch_size(n: usize, d: usize, epsilon: f64) -> Result<SrhtSketchSize> {
    check_overparameterized(n, d, epsilon)?;
    let (nf, df) = (n as f64, d as f64);
    let big_l = (1.0 / epsilon).ln();
    let log_ratio = (nf / (df * df)).ln();
    let (case, m_real) = if big_l.sqrt() < log_ratio {
        (SrhtCase::I, big_l.sqrt().exp() * df * df.ln())
    } else {
        (SrhtCase::Ii, (nf / df) * (df.ln()).max(big_l / log_ratio))
    };
    let m_star = m_real.ceil() as usize;
    let model = CostModel::new(SketchKind::Srht, n, d, epsilon)?;
    Ok(SrhtSketchSize {
        m_star,
        m_star_real: m_real,
        case,
        predicted_cost: model.cost(m_star as f64),
    })
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct GaussianSketchSize {
    pub m_star: usize,
    pub m_star_real: f64,
    /// `α* = m*/d`, satisfying `α ln α = (n/d²) ln(1/ε)` exactly.
    pub alpha_star: f64,
    pub predicted_cost: f64,
}

/// Gaussian sketch-size prescription `m* = d·exp(W((n/d²) ln(1/ε)))`.
///
/// `α* = m*/d` solves `α ln α = (n/d²) ln(1/ε)`, which balances the
/// factorization cost against the total iteration cost exactly (so
/// `C(m*) = 2 d³ α*`). The balance point stays within a factor 2 of the
/// summed-cost optimum, which sits lower, at `α ln²α = (n/d²) ln(1/ε)`.
pub fn gaussian_opt_sketch_size(n: usize, d: usize, epsilon: f64) -> Result<GaussianSketchSize> {
    check_overparameterized(n, d, epsilon)?;
    let (nf, df) = (n as f64, d as f64);
    let a = nf / (df * df) * (1.0 / epsilon).ln();
    let alpha_star = lambert_w(a)?.exp();
    let m_real = df * alpha_star;
    Ok(GaussianSketchSize {
        m_star: m_real.ceil() as usize,
        m_star_real: m_real,
        alpha_star,
        predicted_cost: 2.0 * df.powi(3) * alpha_star,
    })
}

/// Leading-term cost ratio of the optimized prescription against the
/// classical one (`m = O(d log d)` SRHT, `m = O(d)` Gaussian), constants
/// discarded, natural logarithms.
pub fn cost_ratio_vs_classical(kind: SketchKind, n: usize, d: usize, epsilon: f64) -> Result<f64> {
    check_overparameterized(n, d, epsilon)?;
    let (nf, df) = (n as f64, d as f64);
    let big_l = (1.0 / epsilon).ln();
    let log_ratio = (nf / (df * df)).ln();
    match kind {
        SketchKind::Gaussian => Ok(1.0 / log_ratio),
        SketchKind::Srht => {
            let optimized = if big_l.sqrt() < log_ratio {
                df.ln() + big_l.sqrt()
            } else {
                df.ln() + big_l / log_ratio
            };
            Ok(optimized / (df.ln() + big_l))
        }
        SketchKind::Haar => Err(Error::Domain("no cost model for Haar embeddings".into())),
    }
}
