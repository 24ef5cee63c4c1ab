//! With a fresh Gaussian embedding per iteration, the mean error of the IHS
//! at step size θ1/θ2 contracts by exactly 1 - θ1²/θ2 per iteration. This
//! runs 200 independent solves and compares the empirical mean against that
//! prediction.
//!
//!     cargo run --release --example refreshed_ihs_rate

use sketchlsq::moments::gaussian_moments;
use sketchlsq::problem::{compute_oracle, generate_synthetic};
use sketchlsq::sketch::SketchKind;
use sketchlsq::solvers::{mean_relative_error_curve, Method, SolverConfig};

fn main() -> sketchlsq::Result<()> {
    let (n, d, m, trials, t_max) = (512, 10, 30, 200, 8);
    let problem = generate_synthetic(n, d, 100.0, 3)?;
    let oracle = compute_oracle(&problem)?;

    let pair = gaussian_moments(m, d)?;
    println!(
        "inverse moments at (m={m}, d={d}): theta1 = {:.5}, theta2 = {:.5}",
        pair.theta1, pair.theta2
    );
    println!("optimal step theta1/theta2 = {:.5}", pair.step());
    println!(
        "predicted contraction 1 - theta1^2/theta2 = {:.5}\n",
        pair.rate()
    );

    let cfg = SolverConfig::new(SketchKind::Gaussian, m, 42);
    let mean = mean_relative_error_curve(&problem, &oracle, Method::Ihs, &cfg, trials, t_max)?;

    println!("  t   mean delta_t/delta_0     rate^t       ratio");
    for t in 0..=t_max {
        let predicted = pair.rate().powi(t as i32);
        println!(
            "  {t}   {:12.5e}    {:12.5e}   {:.3}",
            mean[t],
            predicted,
            mean[t] / predicted
        );
    }
    let per_iter = mean[t_max].powf(1.0 / t_max as f64);
    println!(
        "\nper-iteration geometric mean {:.5} vs predicted {:.5}",
        per_iter,
        pair.rate()
    );
    Ok(())
}
