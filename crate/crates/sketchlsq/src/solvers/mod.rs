//! Iterative least-squares solvers with sketched preconditioners.
//!
//! All methods minimize `f(x) = 1/2 <x, Hx> - <b, x>` with `H = AᵀA` and
//! share the preconditioner `H_S = (SA)ᵀ(SA)`:
//!
//! - [`pcg`]: preconditioned conjugate gradient with one fixed sketch.
//!   Starting from `r_0 = b - H x_0`, `p_0 = H_S⁻¹ r_0`, it iterates the
//!   three-term recurrence `x += α p`, `r -= α H p`,
//!   `p = H_S⁻¹ r + (rᵀH_S⁻¹r / r_oldᵀH_S⁻¹r_old) p` with
//!   `α = rᵀH_S⁻¹r / pᵀHp`.
//! - [`ihs`]: preconditioned steepest descent `x -= μ H_S⁻¹ ∇f(x)`, with a
//!   fixed or per-iteration refreshed sketch.
//! - [`polyak_ihs`]: IHS plus the heavy-ball term `β (x_t - x_{t-1})`.
//! - [`fcg`]: conjugate direction methods with refreshed sketches. Each
//!   iteration preconditions the residual with a fresh factor and
//!   H-orthogonalizes against a window of past directions: the full window
//!   is the generalized conjugate gradient (GCC), window 1 matches the
//!   inexact preconditioned CG (IPCG), a fixed window is the flexible CG.
//!
//! `H` is never formed; every product goes through `Aᵀ(A v)` at `O(nd)`.
//! Iterations, factorizations and sketch applications are charged to a flop
//! and wall-clock ledger per phase, so cost comparisons between fixed and
//! refreshed modes are honest.

mod trace;

pub use trace::{Method, PhaseStats, ResolvedParams, SolveTrace};

use std::time::Instant;

use nalgebra::DVector;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::moments;
use crate::precond::{factorize, FactorMethod, PreconditionerFactor};
use crate::problem::{ErrorOracle, LeastSquaresProblem};
use crate::rng;
use crate::sketch::{SketchKind, SketchOperator};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SketchMode {
    Fixed,
    Refreshed,
}

impl std::fmt::Display for SketchMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SketchMode::Fixed => write!(f, "fixed"),
            SketchMode::Refreshed => write!(f, "refreshed"),
        }
    }
}

impl std::str::FromStr for SketchMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "fixed" => Ok(SketchMode::Fixed),
            "refreshed" => Ok(SketchMode::Refreshed),
            other => Err(Error::Usage(format!(
                "unknown sketch mode '{other}' (expected fixed or refreshed)"
            ))),
        }
    }
}

/// A parameter that is either prescribed or resolved from theory.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum Param {
    Auto,
    Value(f64),
}

/// Orthogonalization window for [`fcg`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Truncation {
    /// Keep every past direction (GCC).
    Full,
    /// Keep the last `k` directions.
    Fixed(usize),
    /// Keep one direction (IPCG).
    One,
}

impl Truncation {
    fn window(&self) -> usize {
        match self {
            Truncation::Full => usize::MAX,
            Truncation::Fixed(k) => *k,
            Truncation::One => 1,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SolverConfig {
    pub max_iters: usize,
    /// Relative target on `δ_t/δ_0` (oracle runs) or on the residual norm
    /// (oracle-free runs). Zero disables early stopping.
    pub tol: f64,
    pub mu: Param,
    pub beta: Param,
    pub truncation: Truncation,
    pub mode: SketchMode,
    pub sketch: SketchKind,
    pub m: usize,
    pub seed: u64,
    pub factor_method: FactorMethod,
    pub x0: Option<DVector<f64>>,
}

impl SolverConfig {
    pub fn new(sketch: SketchKind, m: usize, seed: u64) -> Self {
        SolverConfig {
            max_iters: 50,
            tol: 0.0,
            mu: Param::Auto,
            beta: Param::Auto,
            truncation: Truncation::Full,
            mode: SketchMode::Refreshed,
            sketch,
            m,
            seed,
            factor_method: FactorMethod::Qr,
            x0: None,
        }
    }

    fn validate(&self, p: &LeastSquaresProblem) -> Result<()> {
        if self.max_iters == 0 {
            return Err(Error::Domain("max_iters must be >= 1".into()));
        }
        if self.tol.is_nan() || self.tol < 0.0 {
            return Err(Error::Domain(format!("tol must be >= 0, got {}", self.tol)));
        }
        if self.m < p.d() {
            return Err(Error::Dimension(format!(
                "sketch size m={} below column dimension d={}",
                self.m,
                p.d()
            )));
        }
        if let Some(x0) = &self.x0 {
            if x0.len() != p.d() {
                return Err(Error::Dimension("x0 length mismatch".into()));
            }
        }
        if let Param::Value(b) = self.beta {
            if b.is_nan() || b < 0.0 {
                return Err(Error::Domain(format!("momentum must be >= 0, got {b}")));
            }
        }
        Ok(())
    }

    fn start(&self, p: &LeastSquaresProblem) -> DVector<f64> {
        self.x0.clone().unwrap_or_else(|| DVector::zeros(p.d()))
    }

    /// Inverse-moment pair matching the sketch kind (refreshed-mode theory).
    pub fn moment_pair(&self, n: usize, d: usize) -> Result<moments::MomentPair> {
        match self.sketch {
            SketchKind::Gaussian => moments::gaussian_moments(self.m, d),
            SketchKind::Haar => moments::haar_moments(n, self.m, d),
            SketchKind::Srht => moments::srht_trace_moments(n, self.m, d),
        }
    }

    /// Mean eigenvalue of `C_S` under this sketch's normalization: 1 for
    /// Gaussian, `m/n` for Haar, `m/n_pad` for the SRHT (both keep
    /// orthonormal rows). Fixed-sketch step prescriptions are stated for a
    /// unit-mean spectrum and are rescaled by this factor.
    fn spectrum_scale(&self, n: usize) -> f64 {
        match self.sketch {
            SketchKind::Gaussian => 1.0,
            SketchKind::Haar => self.m as f64 / n as f64,
            SketchKind::Srht => self.m as f64 / n.next_power_of_two() as f64,
        }
    }

    /// Resolves the IHS step size: `scale·(1-ρ)²/(1+ρ)` with `ρ = d/m` for a
    /// fixed sketch, `θ1/θ2` for refreshed sketches.
    fn resolve_mu_ihs(&self, p: &LeastSquaresProblem) -> Result<f64> {
        match self.mu {
            Param::Value(v) if v.is_finite() => Ok(v),
            Param::Value(v) => Err(Error::Domain(format!("step size must be finite, got {v}"))),
            Param::Auto => match self.mode {
                SketchMode::Fixed => {
                    let rho = p.d() as f64 / self.m as f64;
                    Ok(self.spectrum_scale(p.n()) * (1.0 - rho).powi(2) / (1.0 + rho))
                }
                SketchMode::Refreshed => Ok(self.moment_pair(p.n(), p.d())?.step()),
            },
        }
    }

    /// Resolves Polyak parameters: `μ = scale·(1-ρ)², β = ρ` for a fixed
    /// sketch (β is scale-free). With refreshed sketches momentum brings no
    /// benefit, so `β = auto` resolves to 0 and the step to `θ1/θ2`.
    fn resolve_polyak(&self, p: &LeastSquaresProblem) -> Result<(f64, f64)> {
        let rho = p.d() as f64 / self.m as f64;
        let mu = match self.mu {
            Param::Value(v) if v.is_finite() => v,
            Param::Value(v) => {
                return Err(Error::Domain(format!("step size must be finite, got {v}")))
            }
            Param::Auto => match self.mode {
                SketchMode::Fixed => self.spectrum_scale(p.n()) * (1.0 - rho).powi(2),
                SketchMode::Refreshed => self.moment_pair(p.n(), p.d())?.step(),
            },
        };
        let beta = match self.beta {
            Param::Value(b) => b,
            Param::Auto => match self.mode {
                SketchMode::Fixed => rho,
                SketchMode::Refreshed => 0.0,
            },
        };
        Ok((mu, beta))
    }
}

/// Running cost/error ledger shared by the solver loops.
struct Recorder {
    oracle_d0: Option<f64>,
    deltas: Vec<f64>,
    resid_norms: Vec<f64>,
    flops_cum: Vec<u64>,
    wall_cum: Vec<f64>,
    flops: u64,
    sketch: PhaseStats,
    factor: PhaseStats,
    iterate: PhaseStats,
}

enum Phase {
    Sketch,
    Factor,
    Iterate,
}

impl Recorder {
    fn new() -> Self {
        Recorder {
            oracle_d0: None,
            deltas: Vec::new(),
            resid_norms: Vec::new(),
            flops_cum: Vec::new(),
            wall_cum: Vec::new(),
            flops: 0,
            sketch: PhaseStats::default(),
            factor: PhaseStats::default(),
            iterate: PhaseStats::default(),
        }
    }

    fn charge(&mut self, phase: Phase, flops: u64, seconds: f64) {
        self.flops += flops;
        let slot = match phase {
            Phase::Sketch => &mut self.sketch,
            Phase::Factor => &mut self.factor,
            Phase::Iterate => &mut self.iterate,
        };
        slot.flops += flops;
        slot.seconds += seconds;
    }

    fn total_seconds(&self) -> f64 {
        self.sketch.seconds + self.factor.seconds + self.iterate.seconds
    }

    /// Records the state after an iteration (or the start state).
    fn snapshot(
        &mut self,
        oracle: Option<&ErrorOracle>,
        x: &DVector<f64>,
        resid: f64,
    ) -> Result<f64> {
        let delta = match oracle {
            Some(o) => {
                let d = o.delta(x)?;
                if self.oracle_d0.is_none() {
                    self.oracle_d0 = Some(d);
                }
                self.deltas.push(d);
                d
            }
            None => f64::NAN,
        };
        self.resid_norms.push(resid);
        self.flops_cum.push(self.flops);
        self.wall_cum.push(self.total_seconds());
        Ok(delta)
    }

    /// Relative progress used by the stopping rule.
    fn progress(&self) -> f64 {
        match self.oracle_d0 {
            Some(d0) => {
                let last = *self.deltas.last().expect("snapshot before progress");
                if d0 > 0.0 {
                    last / d0
                } else {
                    0.0
                }
            }
            None => {
                let r0 = self.resid_norms[0];
                let last = *self.resid_norms.last().expect("snapshot before progress");
                if r0 > 0.0 {
                    last / r0
                } else {
                    0.0
                }
            }
        }
    }

    fn into_trace(
        self,
        method: Method,
        params: ResolvedParams,
        converged: bool,
        iters: usize,
    ) -> SolveTrace {
        SolveTrace {
            method,
            deltas: self.deltas,
            resid_norms: self.resid_norms,
            flops_cum: self.flops_cum,
            wall_cum: self.wall_cum,
            sketch_phase: self.sketch,
            factor_phase: self.factor,
            iterate_phase: self.iterate,
            params,
            converged,
            iters,
        }
    }
}

fn h_apply_flops(n: usize, d: usize) -> u64 {
    4 * n as u64 * d as u64
}

fn solve_flops(d: usize) -> u64 {
    2 * (d as u64) * (d as u64)
}

fn factor_flops(m: usize, d: usize) -> u64 {
    m as u64 * (d as u64) * (d as u64)
}

/// Draws, applies and factorizes the sketch for one (re)preconditioning.
fn build_factor(
    p: &LeastSquaresProblem,
    cfg: &SolverConfig,
    stream_id: u64,
    rec: &mut Recorder,
) -> Result<PreconditionerFactor> {
    let t0 = Instant::now();
    let s = SketchOperator::draw(cfg.sketch, cfg.m, p.n(), rng::derive(cfg.seed, stream_id))?;
    let sa = s.apply(p.a())?;
    rec.charge(
        Phase::Sketch,
        s.apply_flops(p.d()),
        t0.elapsed().as_secs_f64(),
    );
    let t1 = Instant::now();
    let f = factorize(&sa, cfg.factor_method)?;
    rec.charge(
        Phase::Factor,
        factor_flops(cfg.m, p.d()),
        t1.elapsed().as_secs_f64(),
    );
    Ok(f)
}

/// Preconditioned conjugate gradient with a fixed, prebuilt factor.
///
/// Sketching and factorization costs are charged by the caller (see
/// [`run_method`]); the returned trace covers the iteration phase.
pub fn pcg(
    p: &LeastSquaresProblem,
    f: &PreconditionerFactor,
    cfg: &SolverConfig,
    oracle: Option<&ErrorOracle>,
) -> Result<SolveTrace> {
    cfg.validate(p)?;
    if f.d() != p.d() {
        return Err(Error::Dimension("factor dimension mismatch".into()));
    }
    let (n, d) = (p.n(), p.d());
    let mut rec = Recorder::new();
    let mut x = cfg.start(p);

    let t0 = Instant::now();
    let mut r = p.b() - p.h_apply(&x);
    let mut rhat = f.solve(&r)?;
    let mut rz = r.dot(&rhat);
    let mut pdir = rhat.clone();
    rec.charge(
        Phase::Iterate,
        h_apply_flops(n, d) + solve_flops(d) + 2 * d as u64,
        t0.elapsed().as_secs_f64(),
    );
    rec.snapshot(oracle, &x, r.norm())?;

    let mut converged = rec.progress() <= cfg.tol;
    let mut iters = 0;
    while !converged && iters < cfg.max_iters {
        let t = Instant::now();
        let hp = p.h_apply(&pdir);
        let php = pdir.dot(&hp);
        if php <= 0.0 {
            if rz.abs() <= f64::EPSILON * p.b().norm_squared() {
                converged = true;
                break;
            }
            return Err(Error::Breakdown {
                iter: iters,
                msg: format!("pᵀHp = {php:e} lost positive-definiteness"),
            });
        }
        let alpha = rz / php;
        x.axpy(alpha, &pdir, 1.0);
        r.axpy(-alpha, &hp, 1.0);
        rhat = f.solve(&r)?;
        let rz_new = r.dot(&rhat);
        let beta = rz_new / rz;
        pdir = &rhat + &pdir * beta;
        rz = rz_new;
        rec.charge(
            Phase::Iterate,
            h_apply_flops(n, d) + solve_flops(d) + 8 * d as u64,
            t.elapsed().as_secs_f64(),
        );
        iters += 1;
        rec.snapshot(oracle, &x, r.norm())?;
        converged = rec.progress() <= cfg.tol;
    }

    let params = ResolvedParams {
        mu: None,
        beta: None,
        truncation: None,
        sketch: cfg.sketch,
        m: cfg.m,
        mode: SketchMode::Fixed,
        seed: cfg.seed,
    };
    Ok(rec.into_trace(Method::Pcg, params, converged, iters))
}

/// Iterative Hessian sketch (preconditioned steepest descent).
pub fn ihs(
    p: &LeastSquaresProblem,
    cfg: &SolverConfig,
    oracle: Option<&ErrorOracle>,
) -> Result<SolveTrace> {
    cfg.validate(p)?;
    let mu = cfg.resolve_mu_ihs(p)?;
    momentum_descent(p, cfg, oracle, Method::Ihs, mu, 0.0)
}

/// IHS with heavy-ball momentum `β (x_t - x_{t-1})`; `x_{-1} = x_0`.
pub fn polyak_ihs(
    p: &LeastSquaresProblem,
    cfg: &SolverConfig,
    oracle: Option<&ErrorOracle>,
) -> Result<SolveTrace> {
    cfg.validate(p)?;
    let (mu, beta) = cfg.resolve_polyak(p)?;
    momentum_descent(p, cfg, oracle, Method::PolyakIhs, mu, beta)
}

fn momentum_descent(
    p: &LeastSquaresProblem,
    cfg: &SolverConfig,
    oracle: Option<&ErrorOracle>,
    method: Method,
    mu: f64,
    beta: f64,
) -> Result<SolveTrace> {
    cfg.validate(p)?;
    let (n, d) = (p.n(), p.d());
    let mut rec = Recorder::new();
    let mut x = cfg.start(p);
    let mut x_prev = x.clone();

    let fixed_factor = match cfg.mode {
        SketchMode::Fixed => Some(build_factor(p, cfg, 0, &mut rec)?),
        SketchMode::Refreshed => None,
    };

    let t0 = Instant::now();
    let g0 = p.gradient(&x);
    rec.charge(
        Phase::Iterate,
        h_apply_flops(n, d) + d as u64,
        t0.elapsed().as_secs_f64(),
    );
    rec.snapshot(oracle, &x, g0.norm())?;

    let mut g = g0;
    let mut converged = rec.progress() <= cfg.tol;
    let mut iters = 0;
    while !converged && iters < cfg.max_iters {
        let factor_storage;
        let factor = match &fixed_factor {
            Some(f) => f,
            None => {
                factor_storage = build_factor(p, cfg, iters as u64, &mut rec)?;
                &factor_storage
            }
        };
        let t = Instant::now();
        let v = factor.solve(&g)?;
        let mut x_new = &x - &v * mu;
        if beta > 0.0 {
            x_new += (&x - &x_prev) * beta;
        }
        x_prev = std::mem::replace(&mut x, x_new);
        g = p.gradient(&x);
        rec.charge(
            Phase::Iterate,
            h_apply_flops(n, d) + solve_flops(d) + 5 * d as u64,
            t.elapsed().as_secs_f64(),
        );
        iters += 1;
        rec.snapshot(oracle, &x, g.norm())?;
        converged = rec.progress() <= cfg.tol;
    }

    let params = ResolvedParams {
        mu: Some(mu),
        beta: Some(beta),
        truncation: None,
        sketch: cfg.sketch,
        m: cfg.m,
        mode: cfg.mode,
        seed: cfg.seed,
    };
    Ok(rec.into_trace(method, params, converged, iters))
}

/// Conjugate directions with refreshed sketches and a truncated
/// orthogonalization window (GCC / FCG / IPCG by window size).
///
/// Each step preconditions the residual, H-orthogonalizes the direction
/// against the retained window and takes the locally optimal step
/// `α = <p, r>/<p, Hp>`, which keeps `δ_t` monotone for any window.
pub fn fcg(
    p: &LeastSquaresProblem,
    cfg: &SolverConfig,
    oracle: Option<&ErrorOracle>,
) -> Result<SolveTrace> {
    fcg_impl(p, cfg, oracle, None)
}

fn fcg_impl(
    p: &LeastSquaresProblem,
    cfg: &SolverConfig,
    oracle: Option<&ErrorOracle>,
    mut collect_dirs: Option<&mut Vec<DVector<f64>>>,
) -> Result<SolveTrace> {
    cfg.validate(p)?;
    if cfg.mode != SketchMode::Refreshed {
        return Err(Error::Domain(
            "conjugate-direction methods here use refreshed sketches; use pcg for a fixed sketch"
                .into(),
        ));
    }
    let (n, d) = (p.n(), p.d());
    let window = cfg.truncation.window();
    let mut rec = Recorder::new();
    let mut x = cfg.start(p);

    let t0 = Instant::now();
    let mut r = p.b() - p.h_apply(&x);
    rec.charge(
        Phase::Iterate,
        h_apply_flops(n, d) + d as u64,
        t0.elapsed().as_secs_f64(),
    );
    rec.snapshot(oracle, &x, r.norm())?;
    let r0_norm = rec.resid_norms[0];

    let mut dirs: Vec<(DVector<f64>, DVector<f64>, f64)> = Vec::new();
    let mut converged = rec.progress() <= cfg.tol;
    let mut iters = 0;
    while !converged && iters < cfg.max_iters {
        if r.norm() <= 1e-15 * r0_norm {
            converged = true;
            break;
        }
        let factor = build_factor(p, cfg, iters as u64, &mut rec)?;
        let t = Instant::now();
        let v = factor.solve(&r)?;
        let mut pdir = v;
        let lo = dirs.len().saturating_sub(window);
        for (pj, hpj, phpj) in &dirs[lo..] {
            let coeff = pdir.dot(hpj) / phpj;
            pdir.axpy(-coeff, pj, 1.0);
        }
        let hp = p.h_apply(&pdir);
        let php = pdir.dot(&hp);
        if php <= 0.0 {
            return Err(Error::Breakdown {
                iter: iters,
                msg: format!("pᵀHp = {php:e} lost positive-definiteness"),
            });
        }
        let alpha = pdir.dot(&r) / php;
        x.axpy(alpha, &pdir, 1.0);
        r.axpy(-alpha, &hp, 1.0);
        if let Some(sink) = collect_dirs.as_deref_mut() {
            sink.push(pdir.clone());
        }
        let ortho_flops = 4 * (dirs.len() - lo) as u64 * d as u64;
        if window > 0 {
            dirs.push((pdir, hp, php));
            if dirs.len() > window {
                dirs.remove(0);
            }
        }
        rec.charge(
            Phase::Iterate,
            h_apply_flops(n, d) + solve_flops(d) + ortho_flops + 8 * d as u64,
            t.elapsed().as_secs_f64(),
        );
        iters += 1;
        rec.snapshot(oracle, &x, r.norm())?;
        converged = rec.progress() <= cfg.tol;
    }

    let method = match cfg.truncation {
        Truncation::Full => Method::Gcc,
        Truncation::One => Method::Ipcg,
        Truncation::Fixed(_) => Method::Fcg,
    };
    let params = ResolvedParams {
        mu: None,
        beta: None,
        truncation: Some(cfg.truncation),
        sketch: cfg.sketch,
        m: cfg.m,
        mode: cfg.mode,
        seed: cfg.seed,
    };
    Ok(rec.into_trace(method, params, converged, iters))
}

/// Runs `method` end to end, charging sketch and factorization phases.
pub fn run_method(
    p: &LeastSquaresProblem,
    oracle: Option<&ErrorOracle>,
    method: Method,
    cfg: &SolverConfig,
) -> Result<SolveTrace> {
    match method {
        Method::Pcg => {
            if cfg.mode != SketchMode::Fixed {
                return Err(Error::Usage(
                    "pcg uses a fixed sketch; pass --mode fixed".into(),
                ));
            }
            cfg.validate(p)?;
            let mut rec = Recorder::new();
            let factor = build_factor(p, cfg, 0, &mut rec)?;
            let mut trace = pcg(p, &factor, cfg, oracle)?;
            trace.charge_setup(rec.sketch, rec.factor);
            Ok(trace)
        }
        Method::Ihs => ihs(p, cfg, oracle),
        Method::PolyakIhs => polyak_ihs(p, cfg, oracle),
        Method::Gcc => {
            let mut cfg = cfg.clone();
            cfg.truncation = Truncation::Full;
            fcg(p, &cfg, oracle)
        }
        Method::Ipcg => {
            let mut cfg = cfg.clone();
            cfg.truncation = Truncation::One;
            fcg(p, &cfg, oracle)
        }
        Method::Fcg => fcg(p, cfg, oracle),
    }
}

/// Monte-Carlo mean of `δ_t/δ_0` over independent sketch streams.
///
/// Trial `i` reruns `method` with sketch seed `derive(cfg.seed, i)`; traces
/// that stop early keep their last value (the method has converged). Trials
/// run in parallel and are reduced in seed order, so the result does not
/// depend on scheduling.
pub fn mean_relative_error_curve(
    p: &LeastSquaresProblem,
    oracle: &ErrorOracle,
    method: Method,
    cfg: &SolverConfig,
    trials: usize,
    t_max: usize,
) -> Result<Vec<f64>> {
    let curves: Vec<Result<Vec<f64>>> = (0..trials)
        .into_par_iter()
        .map(|i| {
            let mut c = cfg.clone();
            c.seed = rng::derive(cfg.seed, 0x0071_7269 ^ i as u64);
            c.max_iters = t_max;
            c.tol = 0.0;
            let trace = run_method(p, Some(oracle), method, &c)?;
            let d0 = trace.deltas[0];
            let mut rel: Vec<f64> = trace.deltas.iter().map(|d| d / d0).collect();
            let last = *rel.last().expect("at least delta_0");
            rel.resize(t_max + 1, last);
            Ok(rel)
        })
        .collect();
    let mut mean = vec![0.0; t_max + 1];
    for curve in curves {
        let curve = curve?;
        for (acc, v) in mean.iter_mut().zip(&curve) {
            *acc += v;
        }
    }
    for v in &mut mean {
        *v /= trials as f64;
    }
    Ok(mean)
}
