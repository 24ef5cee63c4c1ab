//! Mean-error comparison of the refreshed-sketch family: full
//! orthogonalization (GCC) beats window-1 orthogonalization (IPCG), which
//! beats plain IHS, and all sit under the (1 - θ1²/θ2)^t envelope.
//!
//!     cargo run --release --example method_ordering

use sketchlsq::problem::{compute_oracle, generate_synthetic};
use sketchlsq::sketch::SketchKind;
use sketchlsq::solvers::{mean_relative_error_curve, Method, SolverConfig};

fn main() -> sketchlsq::Result<()> {
    let (n, d, m, trials, t_max) = (1024, 10, 30, 200, 10);
    let problem = generate_synthetic(n, d, 100.0, 9)?;
    let oracle = compute_oracle(&problem)?;

    for kind in [SketchKind::Gaussian, SketchKind::Haar, SketchKind::Srht] {
        let cfg = SolverConfig::new(kind, m, 23);
        let bound_rate = cfg.moment_pair(n, d)?.rate();
        println!("{kind} sketches (bound rate {bound_rate:.4}):");
        println!("  t |    bound    |     gcc     |    ipcg     |     ihs");
        let gcc = mean_relative_error_curve(&problem, &oracle, Method::Gcc, &cfg, trials, t_max)?;
        let ipcg = mean_relative_error_curve(&problem, &oracle, Method::Ipcg, &cfg, trials, t_max)?;
        let ihs = mean_relative_error_curve(&problem, &oracle, Method::Ihs, &cfg, trials, t_max)?;
        for t in 0..=t_max {
            println!(
                " {t:2} | {:11.4e} | {:11.4e} | {:11.4e} | {:11.4e}",
                bound_rate.powi(t as i32),
                gcc[t],
                ipcg[t],
                ihs[t]
            );
        }
        println!();
    }
    Ok(())
}
