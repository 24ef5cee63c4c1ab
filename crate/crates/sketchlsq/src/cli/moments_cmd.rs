//! `sketchlsq moments`: closed-form and Monte-Carlo inverse moments.

use clap::Args;
use serde::Serialize;

use crate::error::Result;
use crate::moments::{self, MomentPair};
use crate::sketch::SketchKind;

use super::{cell, to_json_pretty, write_file, OutputArgs};

/// Inverse moments of the sketched projection, closed-form and
/// Monte-Carlo.
#[derive(Args, Debug)]
pub struct MomentsArgs {
    #[arg(long, default_value = "gaussian")]
    pub sketch: SketchKind,
    /// Ambient dimension (used by Haar/SRHT formulas and Monte Carlo).
    #[arg(long, default_value_t = 1024)]
    pub n: usize,
    #[arg(long, default_value_t = 30)]
    pub m: usize,
    #[arg(long, default_value_t = 10)]
    pub d: usize,
    /// Monte-Carlo trials; 0 skips the estimate.
    #[arg(long, default_value_t = 0)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Serialize)]
struct MomentEntry {
    source: String,
    theta1: f64,
    theta2: f64,
    step: f64,
    rate: f64,
    stderr: Option<(f64, f64)>,
    failed_trials: usize,
}

impl MomentEntry {
    fn from_pair(p: &MomentPair) -> Self {
        MomentEntry {
            source: format!("{:?}", p.source),
            theta1: p.theta1,
            theta2: p.theta2,
            step: p.step(),
            rate: p.rate(),
            stderr: p.stderr,
            failed_trials: p.failed_trials,
        }
    }
}

#[derive(Serialize)]
struct MomentsSidecar {
    command: String,
    sketch: String,
    n: usize,
    m: usize,
    d: usize,
    trials: usize,
    seed: u64,
    closed_form: MomentEntry,
    monte_carlo: Option<MomentEntry>,
}

pub fn cmd_moments(args: &MomentsArgs) -> Result<()> {
    args.output.prepare()?;
    let closed = match args.sketch {
        SketchKind::Gaussian => moments::gaussian_moments(args.m, args.d)?,
        SketchKind::Haar => moments::haar_moments(args.n, args.m, args.d)?,
        SketchKind::Srht => moments::srht_trace_moments(args.n, args.m, args.d)?,
    };
    let mc = if args.trials > 0 {
        Some(moments::mc_moments(
            args.sketch,
            args.n,
            args.m,
            args.d,
            args.trials,
            args.seed,
        )?)
    } else {
        None
    };

    let sidecar = MomentsSidecar {
        command: "moments".into(),
        sketch: args.sketch.to_string(),
        n: args.n,
        m: args.m,
        d: args.d,
        trials: args.trials,
        seed: args.seed,
        closed_form: MomentEntry::from_pair(&closed),
        monte_carlo: mc.as_ref().map(MomentEntry::from_pair),
    };

    if args.output.formats.json {
        write_file(
            &args.output.path("moments.json"),
            &to_json_pretty(&sidecar)?,
        )?;
    }
    if args.output.formats.csv {
        let mut csv = String::from(
            "source,theta1,theta2,step,rate,stderr_theta1,stderr_theta2,failed_trials\n",
        );
        for entry in std::iter::once(&sidecar.closed_form).chain(sidecar.monte_carlo.as_ref()) {
            let (s1, s2) = entry.stderr.unwrap_or((f64::NAN, f64::NAN));
            csv.push_str(&format!(
                "{},{},{},{},{},{},{},{}\n",
                entry.source,
                cell(entry.theta1),
                cell(entry.theta2),
                cell(entry.step),
                cell(entry.rate),
                cell(s1),
                cell(s2),
                entry.failed_trials
            ));
        }
        write_file(&args.output.path("moments.csv"), &csv)?;
    }

    println!(
        "moments: sketch={} n={} m={} d={} theta1={} theta2={} step={} rate={}",
        args.sketch,
        args.n,
        args.m,
        args.d,
        cell(closed.theta1),
        cell(closed.theta2),
        cell(closed.step()),
        cell(closed.rate())
    );
    if let Some(mc) = &mc {
        let (s1, s2) = mc.stderr.unwrap_or((f64::NAN, f64::NAN));
        println!(
            "  monte-carlo ({} trials, {} failed): theta1={} (se {}), theta2={} (se {})",
            args.trials,
            mc.failed_trials,
            cell(mc.theta1),
            cell(s1),
            cell(mc.theta2),
            cell(s2)
        );
    }
    Ok(())
}
