//! `sketchlsq rootradius`: minimum of the momentum-dynamics root radius.

use clap::Args;
use serde::Serialize;

use crate::analysis::{min_root_radius_default, root_radius, DynamicsParams};
use crate::error::{Error, Result};
use crate::moments;
use crate::plot::{LinePlot, Series};
use crate::sketch::SketchKind;

use super::{cell, to_json_pretty, write_file, OutputArgs};

/// Minimum of the momentum-dynamics root radius over step and momentum.
#[derive(Args, Debug)]
pub struct RootRadiusArgs {
    /// First inverse moment; both thetas override the sketch-derived pair.
    #[arg(long, requires = "theta2")]
    pub theta1: Option<f64>,
    #[arg(long, requires = "theta1")]
    pub theta2: Option<f64>,
    #[arg(long, default_value = "gaussian")]
    pub sketch: SketchKind,
    #[arg(long, default_value_t = 1024)]
    pub n: usize,
    #[arg(long, default_value_t = 20)]
    pub m: usize,
    #[arg(long, default_value_t = 10)]
    pub d: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Serialize)]
struct RootRadiusSidecar {
    command: String,
    theta1: f64,
    theta2: f64,
    rho_star: f64,
    mu_star: f64,
    min_value: f64,
    argmin_mu: f64,
    argmin_beta: f64,
    /// `min_value - rho_star`; zero up to search tolerance.
    gap: f64,
}

pub fn cmd_rootradius(args: &RootRadiusArgs) -> Result<()> {
    args.output.prepare()?;
    let (theta1, theta2) = match (args.theta1, args.theta2) {
        (Some(t1), Some(t2)) => {
            if !(t1 > 0.0 && t2 >= t1 * t1) {
                return Err(Error::Domain(format!(
                    "need θ1 > 0 and θ2 >= θ1², got θ1={t1}, θ2={t2}"
                )));
            }
            (t1, t2)
        }
        _ => {
            let pair = match args.sketch {
                SketchKind::Gaussian => moments::gaussian_moments(args.m, args.d)?,
                SketchKind::Haar => moments::haar_moments(args.n, args.m, args.d)?,
                SketchKind::Srht => moments::srht_trace_moments(args.n, args.m, args.d)?,
            };
            (pair.theta1, pair.theta2)
        }
    };

    let rho_star = 1.0 - theta1 * theta1 / theta2;
    let mu_star = theta1 / theta2;
    let min = min_root_radius_default(theta1, theta2)?;
    let sidecar = RootRadiusSidecar {
        command: "rootradius".into(),
        theta1,
        theta2,
        rho_star,
        mu_star,
        min_value: min.value,
        argmin_mu: min.mu,
        argmin_beta: min.beta,
        gap: min.value - rho_star,
    };

    let points = 200;
    let betas = [0.0, rho_star / 2.0];
    let mut curves: Vec<Vec<(f64, f64)>> = vec![Vec::with_capacity(points); betas.len()];
    for i in 0..points {
        let mu = 3.0 * mu_star * i as f64 / (points - 1) as f64;
        for (curve, &beta) in curves.iter_mut().zip(&betas) {
            let dp = DynamicsParams::new(mu, beta, theta1, theta2)?;
            curve.push((mu, root_radius(&dp)));
        }
    }

    if args.output.formats.csv {
        let mut csv = String::from("mu,lambda_beta0,lambda_beta_half_rho\n");
        for (at_zero, at_half) in curves[0].iter().zip(&curves[1]) {
            csv.push_str(&format!(
                "{},{},{}\n",
                cell(at_zero.0),
                cell(at_zero.1),
                cell(at_half.1)
            ));
        }
        write_file(&args.output.path("rootradius.csv"), &csv)?;
    }
    if args.output.formats.json {
        write_file(
            &args.output.path("rootradius.json"),
            &to_json_pretty(&sidecar)?,
        )?;
    }
    if args.output.formats.svg {
        let mut plot = LinePlot::new(
            "momentum dynamics root radius",
            "step size mu",
            "root radius",
        );
        plot.series.push(Series::new("beta = 0", curves[0].clone()));
        plot.series.push(Series::new(
            format!("beta = {}", cell(rho_star / 2.0)),
            curves[1].clone(),
        ));
        plot.markers.push((mu_star, "mu* = theta1/theta2".into()));
        write_file(&args.output.path("rootradius.svg"), &plot.to_svg())?;
    }

    println!(
        "rootradius: theta1={} theta2={} rho*={} min={} at (mu={}, beta={})",
        cell(theta1),
        cell(theta2),
        cell(rho_star),
        cell(min.value),
        cell(min.mu),
        cell(min.beta)
    );
    Ok(())
}
