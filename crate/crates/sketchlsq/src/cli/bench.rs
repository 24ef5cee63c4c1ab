//! `sketchlsq bench`: mean relative error of every method on one instance,
//! against the theoretical refreshed-sketch rate.

use clap::Args;
use serde::Serialize;

use crate::error::Result;
use crate::plot::{LinePlot, Series};
use crate::problem::{compute_oracle, generate_synthetic};
use crate::sketch::SketchKind;
use crate::solvers::{mean_relative_error_curve, Method, Param, SketchMode, SolverConfig};

use super::{cell, to_json_pretty, write_file, OutputArgs};

/// Compare mean errors of every method against the theoretical rate.
#[derive(Args, Debug)]
pub struct BenchArgs {
    /// Embedding for all methods (PCG keeps its draw fixed, the rest
    /// refresh it every iteration).
    #[arg(long, default_value = "gaussian")]
    pub sketch: SketchKind,
    /// The defaults (n=1024, d=10, m=3d, 200 trials) are calibration
    /// choices for desk-scale comparison figures, not theory constants.
    #[arg(long, default_value_t = 1024)]
    pub n: usize,
    #[arg(long, default_value_t = 10)]
    pub d: usize,
    #[arg(long, default_value_t = 30)]
    pub m: usize,
    #[arg(long, default_value_t = 100.0)]
    pub cond: f64,
    #[arg(long, default_value_t = 200)]
    pub trials: usize,
    /// Iterations per run.
    #[arg(long, default_value_t = 20)]
    pub tmax: usize,
    /// Momentum values for the Polyak runs.
    #[arg(long, value_delimiter = ',', default_values_t = vec![0.05, 0.1, 0.5])]
    pub betas: Vec<f64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Serialize)]
struct BenchSidecar {
    command: String,
    sketch: String,
    n: usize,
    d: usize,
    m: usize,
    cond: f64,
    trials: usize,
    tmax: usize,
    betas: Vec<f64>,
    seed: u64,
    theta1: f64,
    theta2: f64,
    bound_rate: f64,
    final_mean_delta_rel: Vec<(String, f64)>,
}

pub fn cmd_bench(args: &BenchArgs) -> Result<()> {
    if args.trials == 0 {
        return Err(crate::error::Error::Usage("--trials must be at least 1".into()));
    }
    if args.tmax == 0 {
        return Err(crate::error::Error::Usage("--tmax must be at least 1".into()));
    }
    args.output.prepare()?;
    let p = generate_synthetic(args.n, args.d, args.cond, args.seed)?;
    let oracle = compute_oracle(&p)?;

    let mut proto = SolverConfig::new(args.sketch, args.m, args.seed);
    proto.max_iters = args.tmax;
    let pair = proto.moment_pair(args.n, args.d)?;
    let rate = pair.rate();
    let bound: Vec<f64> = (0..=args.tmax).map(|t| rate.powi(t as i32)).collect();

    let mut columns: Vec<(String, Vec<f64>)> = Vec::new();
    let mut fixed = proto.clone();
    fixed.mode = SketchMode::Fixed;
    columns.push((
        "pcg".into(),
        mean_relative_error_curve(&p, &oracle, Method::Pcg, &fixed, args.trials, args.tmax)?,
    ));
    for method in [Method::Gcc, Method::Ipcg, Method::Ihs] {
        columns.push((
            method.to_string(),
            mean_relative_error_curve(&p, &oracle, method, &proto, args.trials, args.tmax)?,
        ));
    }
    for &beta in &args.betas {
        let mut cfg = proto.clone();
        cfg.beta = Param::Value(beta);
        columns.push((
            format!("polyak_{beta}"),
            mean_relative_error_curve(
                &p,
                &oracle,
                Method::PolyakIhs,
                &cfg,
                args.trials,
                args.tmax,
            )?,
        ));
    }

    if args.output.formats.csv {
        let mut csv = String::from("iter,bound");
        for (name, _) in &columns {
            csv.push(',');
            csv.push_str(name);
        }
        csv.push('\n');
        for t in 0..=args.tmax {
            csv.push_str(&format!("{t},{}", cell(bound[t])));
            for (_, series) in &columns {
                csv.push(',');
                csv.push_str(&cell(series[t]));
            }
            csv.push('\n');
        }
        write_file(&args.output.path("bench.csv"), &csv)?;
    }

    if args.output.formats.json {
        let sidecar = BenchSidecar {
            command: "bench".into(),
            sketch: args.sketch.to_string(),
            n: args.n,
            d: args.d,
            m: args.m,
            cond: args.cond,
            trials: args.trials,
            tmax: args.tmax,
            betas: args.betas.clone(),
            seed: args.seed,
            theta1: pair.theta1,
            theta2: pair.theta2,
            bound_rate: rate,
            final_mean_delta_rel: columns
                .iter()
                .map(|(name, series)| (name.clone(), *series.last().unwrap()))
                .collect(),
        };
        write_file(&args.output.path("bench.json"), &to_json_pretty(&sidecar)?)?;
    }

    if args.output.formats.svg {
        let mut plot = LinePlot::new(
            format!("mean relative error, {} sketch, m={}", args.sketch, args.m),
            "iteration",
            "mean delta_t / delta_0",
        );
        plot.log_y = true;
        plot.series.push(Series::new(
            "bound",
            bound
                .iter()
                .enumerate()
                .map(|(t, &b)| (t as f64, b))
                .collect(),
        ));
        for (name, series) in &columns {
            plot.series.push(Series::new(
                name.clone(),
                series
                    .iter()
                    .enumerate()
                    .map(|(t, &v)| (t as f64, v))
                    .collect(),
            ));
        }
        write_file(&args.output.path("bench.svg"), &plot.to_svg())?;
    }

    println!(
        "bench: sketch={} n={} d={} m={} trials={} bound_rate={}",
        args.sketch,
        args.n,
        args.d,
        args.m,
        args.trials,
        cell(rate)
    );
    for (name, series) in &columns {
        println!(
            "  {name}: final mean delta_rel = {}",
            cell(*series.last().unwrap())
        );
    }
    Ok(())
}
