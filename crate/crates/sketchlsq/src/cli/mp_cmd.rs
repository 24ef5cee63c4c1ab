//! `sketchlsq mp`: Marchenko-Pastur rate integrals for the fixed-sketch
//! IHS step-size analysis.

use clap::Args;
use serde::Serialize;

use crate::analysis::{mp_asymptotic_rate, mp_gamma, mp_optimal_step_check};
use crate::error::Result;
use crate::plot::{LinePlot, Series};

use super::{cell, to_json_pretty, write_file, OutputArgs};

/// Marchenko-Pastur rate integrals and the optimal fixed-sketch step.
#[derive(Args, Debug)]
pub struct MpArgs {
    /// Aspect ratio d/m in (0, 1).
    #[arg(long, default_value_t = 0.25)]
    pub rho: f64,
    /// Exponent at which the step-size grid is evaluated.
    #[arg(long, default_value_t = 200)]
    pub t: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Serialize)]
struct MpSidecar {
    command: String,
    rho: f64,
    t: usize,
    mu_star: f64,
    degenerate: bool,
    argmin_mu: f64,
    edge_ratio_low: f64,
    edge_ratio_high: f64,
    /// `Γ_{t+1}(μ*)/Γ_t(μ*)`, approaching the asymptotic rate.
    gamma_ratio_at_t: f64,
    asymptotic_rate: f64,
}

pub fn cmd_mp(args: &MpArgs) -> Result<()> {
    args.output.prepare()?;
    let report = mp_optimal_step_check(args.rho, args.t)?;
    let g_t = mp_gamma(args.rho, report.mu_star, args.t)?;
    let g_next = mp_gamma(args.rho, report.mu_star, args.t + 1)?;
    let sidecar = MpSidecar {
        command: "mp".into(),
        rho: args.rho,
        t: args.t,
        mu_star: report.mu_star,
        degenerate: report.degenerate,
        argmin_mu: report.argmin_mu,
        edge_ratio_low: report.edge_ratios.0,
        edge_ratio_high: report.edge_ratios.1,
        gamma_ratio_at_t: if report.degenerate { 1.0 } else { g_next / g_t },
        asymptotic_rate: mp_asymptotic_rate(args.rho),
    };

    if args.output.formats.csv {
        let mut csv = String::from("mu,gamma\n");
        for (mu, g) in report.grid_mu.iter().zip(&report.grid_gamma) {
            csv.push_str(&format!("{},{}\n", cell(*mu), cell(*g)));
        }
        write_file(&args.output.path("mp.csv"), &csv)?;
    }
    if args.output.formats.json {
        write_file(&args.output.path("mp.json"), &to_json_pretty(&sidecar)?)?;
    }
    if args.output.formats.svg {
        let mut plot = LinePlot::new(
            format!(
                "Gamma_t over the step-size grid (rho={}, t={})",
                args.rho, args.t
            ),
            "step size mu",
            "Gamma_t(mu)",
        );
        plot.log_y = true;
        plot.series.push(Series::new(
            "Gamma_t",
            report
                .grid_mu
                .iter()
                .zip(&report.grid_gamma)
                .map(|(&m, &g)| (m, g))
                .collect(),
        ));
        plot.markers.push((report.mu_star, "mu*".into()));
        write_file(&args.output.path("mp.svg"), &plot.to_svg())?;
    }

    println!(
        "mp: rho={} t={} mu*={} argmin={} ratio_at_t={} asymptotic_rate={}{}",
        cell(args.rho),
        args.t,
        cell(report.mu_star),
        cell(report.argmin_mu),
        cell(sidecar.gamma_ratio_at_t),
        cell(sidecar.asymptotic_rate),
        if report.degenerate {
            " (degenerate: t = 0)"
        } else {
            ""
        }
    );
    Ok(())
}
