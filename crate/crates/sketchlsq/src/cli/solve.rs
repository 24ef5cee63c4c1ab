//! `sketchlsq solve`: one solver run with trace artifacts.

use std::path::PathBuf;

use clap::Args;
use nalgebra::DVector;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::plot::{LinePlot, Series};
use crate::problem::{compute_oracle, generate_synthetic, load_matrix_market, LeastSquaresProblem};
use crate::rng;
use crate::sketch::SketchKind;
use crate::solvers::{
    run_method, Method, Param, ResolvedParams, SketchMode, SolveTrace, SolverConfig, Truncation,
};
use crate::tuning;

use super::{cell, to_json_pretty, write_file, AutoOr, OutputArgs};

/// Run one solver on a synthetic or file-based instance; writes
/// trace.csv, solve.json and trace.svg.
#[derive(Args, Debug)]
pub struct SolveArgs {
    /// Solver: pcg, ihs, polyak, gcc, fcg or ipcg.
    #[arg(long, default_value = "pcg")]
    pub method: Method,
    /// Embedding: gaussian, haar or srht.
    #[arg(long, default_value = "srht")]
    pub sketch: SketchKind,
    /// fixed | refreshed. Default: fixed for pcg, refreshed otherwise.
    #[arg(long)]
    pub mode: Option<SketchMode>,
    /// Sketch size, or `auto`: cost-optimized when n > d², otherwise the
    /// classical prescription (4 d ln d for SRHT, 4 d for Gaussian/Haar).
    #[arg(long, default_value = "auto")]
    pub m: AutoOr<usize>,
    /// Step size, or `auto`: (1-d/m)²/(1+d/m) for a fixed sketch, θ1/θ2 for
    /// refreshed sketches.
    #[arg(long, default_value = "auto")]
    pub mu: AutoOr<f64>,
    /// Momentum, or `auto`: d/m for a fixed sketch; 0 when refreshed
    /// (momentum does not help refreshed sketches).
    #[arg(long, default_value = "auto")]
    pub beta: AutoOr<f64>,
    /// Orthogonalization window for fcg (gcc keeps all, ipcg keeps 1).
    #[arg(long, default_value_t = 1)]
    pub window: usize,
    /// Rows of the synthetic instance.
    #[arg(long)]
    pub n: Option<usize>,
    /// Columns of the synthetic instance.
    #[arg(long)]
    pub d: Option<usize>,
    /// Condition number of the synthetic instance (log-spaced spectrum).
    #[arg(long, default_value_t = 100.0)]
    pub cond: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Relative error target on δ_t/δ_0.
    #[arg(long, default_value_t = 1e-8)]
    pub eps: f64,
    #[arg(long, default_value_t = 100)]
    pub max_iters: usize,
    /// Matrix Market file holding A (replaces synthetic generation).
    #[arg(long)]
    pub matrix: Option<PathBuf>,
    /// Matrix Market n x 1 array holding y, with b = Aᵀy. Defaults to a
    /// seeded Gaussian y.
    #[arg(long)]
    pub rhs: Option<PathBuf>,
    /// Record wall-clock seconds in artifacts. Timed reruns are not
    /// byte-identical; without this flag wall columns are zero.
    #[arg(long)]
    pub timings: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Serialize, Deserialize)]
pub struct ProblemDesc {
    pub source: String,
    pub n: usize,
    pub d: usize,
    pub cond: Option<f64>,
    pub seed: u64,
    pub matrix: Option<String>,
    pub rhs: Option<String>,
}

#[derive(Serialize, Deserialize)]
pub struct RequestDesc {
    pub method: String,
    pub sketch: String,
    pub mode: String,
    pub m: String,
    pub mu: String,
    pub beta: String,
    pub window: usize,
    pub eps: f64,
    pub max_iters: usize,
    pub timings: bool,
}

#[derive(Serialize, Deserialize)]
pub struct FlopsDesc {
    pub sketch: u64,
    pub factor: u64,
    pub iterate: u64,
    pub total: u64,
}

#[derive(Serialize, Deserialize)]
pub struct WallDesc {
    pub sketch: f64,
    pub factor: f64,
    pub iterate: f64,
}

/// The `solve.json` sidecar; see [`super::SOLVE_SIDECAR_SCHEMA`].
#[derive(Serialize, Deserialize)]
pub struct SolveSidecar {
    pub command: String,
    pub problem: ProblemDesc,
    pub request: RequestDesc,
    pub resolved: ResolvedParams,
    pub status: String,
    pub iters: usize,
    pub final_delta_rel: Option<f64>,
    pub final_resid_rel: f64,
    pub flops: FlopsDesc,
    pub wall_seconds: Option<WallDesc>,
}

pub fn cmd_solve(args: &SolveArgs) -> Result<()> {
    args.output.prepare()?;
    let (problem, desc) = build_problem(args)?;
    let oracle = compute_oracle(&problem)?;
    let (n, d) = (problem.n(), problem.d());

    let mode = args.mode.unwrap_or(match args.method {
        Method::Pcg => SketchMode::Fixed,
        _ => SketchMode::Refreshed,
    });
    let m = match args.m {
        AutoOr::Value(m) => m,
        AutoOr::Auto => auto_sketch_size(args.sketch, n, d, args.eps)?,
    };
    let mut cfg = SolverConfig::new(args.sketch, m, args.seed);
    cfg.mode = mode;
    cfg.max_iters = args.max_iters;
    cfg.tol = args.eps;
    cfg.mu = match args.mu {
        AutoOr::Auto => Param::Auto,
        AutoOr::Value(v) => Param::Value(v),
    };
    cfg.beta = match args.beta {
        AutoOr::Auto => Param::Auto,
        AutoOr::Value(v) => Param::Value(v),
    };
    cfg.truncation = match args.method {
        Method::Gcc => Truncation::Full,
        Method::Ipcg => Truncation::One,
        _ => Truncation::Fixed(args.window),
    };

    let trace = run_method(&problem, Some(&oracle), args.method, &cfg)?;

    let status = if trace.converged {
        "converged"
    } else {
        "max_iters"
    };
    let sidecar = SolveSidecar {
        command: "solve".into(),
        problem: desc,
        request: RequestDesc {
            method: args.method.to_string(),
            sketch: args.sketch.to_string(),
            mode: mode.to_string(),
            m: args.m.to_string(),
            mu: args.mu.to_string(),
            beta: args.beta.to_string(),
            window: args.window,
            eps: args.eps,
            max_iters: args.max_iters,
            timings: args.timings,
        },
        resolved: trace.params,
        status: status.into(),
        iters: trace.iters,
        final_delta_rel: trace.final_relative_delta(),
        final_resid_rel: trace.resid_norms.last().unwrap() / trace.resid_norms[0],
        flops: FlopsDesc {
            sketch: trace.sketch_phase.flops,
            factor: trace.factor_phase.flops,
            iterate: trace.iterate_phase.flops,
            total: trace.total_flops(),
        },
        wall_seconds: args.timings.then_some(WallDesc {
            sketch: trace.sketch_phase.seconds,
            factor: trace.factor_phase.seconds,
            iterate: trace.iterate_phase.seconds,
        }),
    };

    if args.output.formats.csv {
        write_file(
            &args.output.path("trace.csv"),
            &trace_csv(&trace, args.timings),
        )?;
    }
    if args.output.formats.json {
        write_file(&args.output.path("solve.json"), &to_json_pretty(&sidecar)?)?;
    }
    if args.output.formats.svg {
        write_file(
            &args.output.path("trace.svg"),
            &trace_svg(&trace, args.method),
        )?;
    }

    println!(
        "solve: method={} sketch={} mode={} m={} iters={} status={} final_delta_rel={}",
        args.method,
        args.sketch,
        mode,
        m,
        trace.iters,
        status,
        trace
            .final_relative_delta()
            .map_or_else(|| "n/a".into(), cell)
    );
    eprintln!(
        "phase seconds: sketch={:.3} factor={:.3} iterate={:.3}",
        trace.sketch_phase.seconds, trace.factor_phase.seconds, trace.iterate_phase.seconds
    );
    Ok(())
}

fn build_problem(args: &SolveArgs) -> Result<(LeastSquaresProblem, ProblemDesc)> {
    if let Some(path) = &args.matrix {
        let a = load_matrix_market(path)?;
        let n = a.nrows();
        let y = match &args.rhs {
            Some(rhs_path) => {
                let y_mat = load_matrix_market(rhs_path)?;
                if y_mat.ncols() != 1 || y_mat.nrows() != n {
                    return Err(Error::Dimension(format!(
                        "rhs must be {n} x 1, got {} x {}",
                        y_mat.nrows(),
                        y_mat.ncols()
                    )));
                }
                y_mat.column(0).into_owned()
            }
            None => DVector::from_fn(n, |_, _| {
                use rand::Rng;
                rng::stream(args.seed, rng::STREAM_RHS).sample(rand_distr::StandardNormal)
            }),
        };
        let desc = ProblemDesc {
            source: "file".into(),
            n,
            d: a.ncols(),
            cond: None,
            seed: args.seed,
            matrix: Some(path.display().to_string()),
            rhs: args.rhs.as_ref().map(|p| p.display().to_string()),
        };
        Ok((LeastSquaresProblem::from_data_pair(a, &y, args.seed)?, desc))
    } else {
        let n = args.n.ok_or_else(|| {
            Error::Usage("missing --n (or pass --matrix FILE); see solve --help".into())
        })?;
        let d = args.d.ok_or_else(|| {
            Error::Usage("missing --d (or pass --matrix FILE); see solve --help".into())
        })?;
        let desc = ProblemDesc {
            source: "synthetic".into(),
            n,
            d,
            cond: Some(args.cond),
            seed: args.seed,
            matrix: None,
            rhs: None,
        };
        Ok((generate_synthetic(n, d, args.cond, args.seed)?, desc))
    }
}

/// `auto` sketch size: optimized prescription in the overparameterized
/// regime, classical otherwise, clamped to the feasible range.
pub(super) fn auto_sketch_size(kind: SketchKind, n: usize, d: usize, eps: f64) -> Result<usize> {
    let df = d as f64;
    let raw = match kind {
        SketchKind::Srht => {
            if n > d * d {
                tuning::srht_opt_sketch_size(n, d, eps)?.m_star
            } else {
                (4.0 * df * df.ln()).ceil() as usize
            }
        }
        SketchKind::Gaussian => {
            if n > d * d {
                tuning::gaussian_opt_sketch_size(n, d, eps)?.m_star
            } else {
                4 * d
            }
        }
        SketchKind::Haar => 4 * d,
    };
    let cap = match kind {
        SketchKind::Srht => n.next_power_of_two(),
        _ => n,
    };
    Ok(raw.max(d + 4).min(cap))
}

fn trace_csv(trace: &SolveTrace, timings: bool) -> String {
    let mut out = String::from("iter,delta,delta_rel,flops_cum,wall_s\n");
    let d0 = trace.deltas.first().copied().unwrap_or(f64::NAN);
    for t in 0..trace.flops_cum.len() {
        let delta = trace.deltas.get(t).copied().unwrap_or(f64::NAN);
        let wall = if timings { trace.wall_cum[t] } else { 0.0 };
        out.push_str(&format!(
            "{t},{},{},{},{}\n",
            cell(delta),
            cell(delta / d0),
            trace.flops_cum[t],
            cell(wall)
        ));
    }
    out
}

fn trace_svg(trace: &SolveTrace, method: Method) -> String {
    let d0 = trace.deltas.first().copied().unwrap_or(1.0);
    let pts: Vec<(f64, f64)> = trace
        .deltas
        .iter()
        .enumerate()
        .map(|(t, &dt)| (t as f64, dt / d0))
        .collect();
    let mut plot = LinePlot::new(
        "relative prediction error",
        "iteration",
        "delta_t / delta_0",
    );
    plot.log_y = true;
    plot.series.push(Series::new(method.to_string(), pts));
    plot.to_svg()
}
