//! `sketchlsq tune`: cost-model sweep, optimized sketch size and the
//! classical prescription, with optional measured wall times.

use std::time::Instant;

use clap::Args;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::plot::{LinePlot, Series};
use crate::precond::{factorize, FactorMethod};
use crate::problem::{compute_oracle, generate_synthetic};
use crate::sketch::{SketchKind, SketchOperator};
use crate::solvers::{pcg, SketchMode, SolverConfig};
use crate::tuning::{self, CostModel};

use super::{cell, to_json_pretty, write_file, OutputArgs};

/// Cost-model sweep and cost-optimal sketch size for PCG.
#[derive(Args, Debug)]
pub struct TuneArgs {
    /// gaussian or srht (no cost model for haar).
    #[arg(long, default_value = "srht")]
    pub sketch: SketchKind,
    #[arg(long, default_value_t = 1 << 20)]
    pub n: usize,
    #[arg(long, default_value_t = 32)]
    pub d: usize,
    #[arg(long, default_value_t = 1e-8)]
    pub eps: f64,
    /// Measure wall time per phase at each swept sketch size (runs real
    /// solves; output is then not byte-reproducible).
    #[arg(long)]
    pub measure: bool,
    /// Repetitions per measured point; the median is reported.
    #[arg(long, default_value_t = 3)]
    pub runs: usize,
    #[arg(long, default_value_t = 24)]
    pub sweep_points: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Serialize)]
struct MeasuredPoint {
    m: usize,
    sketch_s: f64,
    factor_s: f64,
    iterate_s: f64,
    total_s: f64,
    iters: usize,
}

#[derive(Serialize)]
struct TuneSidecar {
    command: String,
    sketch: String,
    n: usize,
    d: usize,
    eps: f64,
    m_star: usize,
    m_star_real: f64,
    /// SRHT regime tag: "i" (moderate precision) or "ii" (high precision).
    case: Option<String>,
    /// Gaussian only: `m*/d`, satisfying `α ln α = (n/d²) ln(1/ε)`.
    alpha_star: Option<f64>,
    predicted_cost: f64,
    classical_m: usize,
    classical_cost: f64,
    cost_ratio_vs_classical: f64,
    measured: Option<Vec<MeasuredPoint>>,
}

pub fn cmd_tune(args: &TuneArgs) -> Result<()> {
    if args.sweep_points < 2 {
        return Err(Error::Usage("--sweep-points must be at least 2".into()));
    }
    if args.measure && args.runs == 0 {
        return Err(Error::Usage("--runs must be at least 1".into()));
    }
    args.output.prepare()?;
    let model = CostModel::new(args.sketch, args.n, args.d, args.eps)?;
    let df = args.d as f64;

    let (m_star, m_star_real, case, alpha_star) = match args.sketch {
        SketchKind::Srht => {
            let r = tuning::srht_opt_sketch_size(args.n, args.d, args.eps)?;
            let case = match r.case {
                tuning::SrhtCase::I => "i",
                tuning::SrhtCase::Ii => "ii",
            };
            (r.m_star, r.m_star_real, Some(case.to_string()), None)
        }
        SketchKind::Gaussian => {
            let r = tuning::gaussian_opt_sketch_size(args.n, args.d, args.eps)?;
            (r.m_star, r.m_star_real, None, Some(r.alpha_star))
        }
        SketchKind::Haar => return Err(Error::Domain("tune supports gaussian or srht".into())),
    };
    let classical_m = match args.sketch {
        SketchKind::Srht => (4.0 * df * df.ln()).ceil() as usize,
        _ => 4 * args.d,
    };
    let ratio = tuning::cost_ratio_vs_classical(args.sketch, args.n, args.d, args.eps)?;

    // Geometric sweep of the modeled costs.
    let lo = model.m_ref() * 1.05;
    let hi = args.n as f64;
    let mut sweep: Vec<(f64, f64, f64, f64, f64)> = Vec::with_capacity(args.sweep_points);
    for i in 0..args.sweep_points {
        let m = lo * (hi / lo).powf(i as f64 / (args.sweep_points - 1) as f64);
        sweep.push((
            m,
            model.sketch_cost(m),
            model.factor_cost(m),
            model.iter_cost(m),
            model.cost(m),
        ));
    }

    let measured = if args.measure {
        Some(measure_sweep(args, m_star, classical_m)?)
    } else {
        None
    };

    let sidecar = TuneSidecar {
        command: "tune".into(),
        sketch: args.sketch.to_string(),
        n: args.n,
        d: args.d,
        eps: args.eps,
        m_star,
        m_star_real,
        case,
        alpha_star,
        predicted_cost: match args.sketch {
            SketchKind::Gaussian => {
                tuning::gaussian_opt_sketch_size(args.n, args.d, args.eps)?.predicted_cost
            }
            _ => tuning::srht_opt_sketch_size(args.n, args.d, args.eps)?.predicted_cost,
        },
        classical_m,
        classical_cost: model.cost(classical_m as f64),
        cost_ratio_vs_classical: ratio,
        measured,
    };

    if args.output.formats.csv {
        let mut csv = String::from("m,sketch_cost,factor_cost,iter_cost,total_cost\n");
        for &(m, s, f, i, t) in &sweep {
            csv.push_str(&format!(
                "{},{},{},{},{}\n",
                cell(m),
                cell(s),
                cell(f),
                cell(i),
                cell(t)
            ));
        }
        write_file(&args.output.path("tune.csv"), &csv)?;
    }
    if args.output.formats.json {
        write_file(&args.output.path("tune.json"), &to_json_pretty(&sidecar)?)?;
    }
    if args.output.formats.svg {
        let mut plot = LinePlot::new(
            format!(
                "modeled PCG cost, {} sketch, n={}, d={}",
                args.sketch, args.n, args.d
            ),
            "sketch size m",
            "flops",
        );
        plot.log_x = true;
        plot.log_y = true;
        for (idx, name) in ["sketch", "factor", "iterations", "total"]
            .iter()
            .enumerate()
        {
            let pts: Vec<(f64, f64)> = sweep
                .iter()
                .map(|row| (row.0, [row.1, row.2, row.3, row.4][idx]))
                .collect();
            plot.series.push(Series::new(*name, pts));
        }
        plot.markers.push((m_star as f64, "m*".into()));
        plot.markers.push((classical_m as f64, "classical".into()));
        write_file(&args.output.path("tune.svg"), &plot.to_svg())?;
    }

    println!(
        "tune: sketch={} n={} d={} eps={} m*={} classical_m={} cost_ratio={}{}",
        args.sketch,
        args.n,
        args.d,
        cell(args.eps),
        m_star,
        classical_m,
        cell(ratio),
        sidecar
            .case
            .as_ref()
            .map_or(String::new(), |c| format!(" case={c}"))
    );
    Ok(())
}

/// Wall-times sketch, factorization and PCG iterations at a few sketch
/// sizes, including `m*` and the classical prescription.
fn measure_sweep(args: &TuneArgs, m_star: usize, classical_m: usize) -> Result<Vec<MeasuredPoint>> {
    let p = generate_synthetic(args.n, args.d, 1e6, args.seed)?;
    let oracle = compute_oracle(&p)?;
    let cap = match args.sketch {
        SketchKind::Srht => args.n.next_power_of_two(),
        _ => args.n,
    };
    let mut sizes = vec![classical_m, m_star];
    let lo = (args.d + 4) as f64;
    for i in 0..6 {
        let m = lo * ((cap as f64 / lo).powf(i as f64 / 5.0));
        sizes.push(m.round() as usize);
    }
    sizes.retain(|&m| m >= args.d + 4 && m <= cap);
    sizes.sort_unstable();
    sizes.dedup();

    let mut out = Vec::with_capacity(sizes.len());
    for &m in &sizes {
        let mut samples = Vec::with_capacity(args.runs);
        let mut iters = 0;
        for run in 0..args.runs {
            let t0 = Instant::now();
            let s = SketchOperator::draw(args.sketch, m, args.n, args.seed ^ run as u64)?;
            let sa = s.apply(p.a())?;
            let sketch_s = t0.elapsed().as_secs_f64();
            let t1 = Instant::now();
            let f = factorize(&sa, FactorMethod::Qr)?;
            let factor_s = t1.elapsed().as_secs_f64();
            let mut cfg = SolverConfig::new(args.sketch, m, args.seed);
            cfg.mode = SketchMode::Fixed;
            cfg.tol = args.eps;
            cfg.max_iters = 500;
            let t2 = Instant::now();
            let trace = pcg(&p, &f, &cfg, Some(&oracle))?;
            let iterate_s = t2.elapsed().as_secs_f64();
            iters = trace.iters;
            samples.push((sketch_s, factor_s, iterate_s));
        }
        samples.sort_by(|a, b| {
            (a.0 + a.1 + a.2)
                .partial_cmp(&(b.0 + b.1 + b.2))
                .expect("finite timings")
        });
        let median = samples[samples.len() / 2];
        out.push(MeasuredPoint {
            m,
            sketch_s: median.0,
            factor_s: median.1,
            iterate_s: median.2,
            total_s: median.0 + median.1 + median.2,
            iters,
        });
        eprintln!(
            "measured m={m}: sketch={:.3}s factor={:.3}s iterate={:.3}s ({} iters)",
            median.0, median.1, median.2, iters
        );
    }
    Ok(out)
}
