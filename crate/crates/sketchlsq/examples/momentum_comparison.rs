//! Heavy-ball momentum does not help when the sketch is refreshed every
//! iteration: any β > 0 loses to plain IHS at the same step size, and no
//! (step, momentum) pair can beat the IHS contraction 1 - θ1²/θ2. With a
//! fixed sketch the method of choice is PCG, shown here for contrast.
//!
//!     cargo run --release --example momentum_comparison

use sketchlsq::analysis::{min_root_radius_default, root_radius, DynamicsParams};
use sketchlsq::moments::gaussian_moments;
use sketchlsq::problem::{compute_oracle, generate_synthetic};
use sketchlsq::sketch::SketchKind;
use sketchlsq::solvers::{
    mean_relative_error_curve, Method, Param, SketchMode, SolverConfig,
};

fn main() -> sketchlsq::Result<()> {
    let (n, d, m, trials, t_max) = (512, 10, 30, 200, 15);
    let problem = generate_synthetic(n, d, 100.0, 5)?;
    let oracle = compute_oracle(&problem)?;

    println!("refreshed Gaussian sketches, mean delta_15/delta_0 over {trials} trials:");
    let base = SolverConfig::new(SketchKind::Gaussian, m, 11);
    let ihs = mean_relative_error_curve(&problem, &oracle, Method::Ihs, &base, trials, t_max)?;
    println!("  ihs (beta = 0):    {:.4e}", ihs[t_max]);
    for beta in [0.05, 0.1, 0.5] {
        let mut cfg = base.clone();
        cfg.beta = Param::Value(beta);
        let curve =
            mean_relative_error_curve(&problem, &oracle, Method::PolyakIhs, &cfg, trials, t_max)?;
        println!(
            "  polyak beta={beta:4}: {:.4e}   ({:.1}x worse)",
            curve[t_max],
            curve[t_max] / ihs[t_max]
        );
    }

    // The expected-error dynamics say this is not a sampling artifact: the
    // root radius over all (step, momentum) pairs bottoms out at β = 0.
    let pair = gaussian_moments(m, d)?;
    let min = min_root_radius_default(pair.theta1, pair.theta2)?;
    let with_momentum = DynamicsParams::new(pair.step(), 0.3, pair.theta1, pair.theta2)?;
    println!(
        "\nexpected-error root radius: minimum {:.5} at (mu={:.4}, beta={:.1e}); \
         e.g. beta=0.3 already gives {:.5}",
        min.value,
        min.mu,
        min.beta,
        root_radius(&with_momentum)
    );

    // With one fixed sketch, skip first-order tuning entirely: PCG is the
    // optimal method for any spectrum of the sketched preconditioner.
    let mut fixed = base.clone();
    fixed.mode = SketchMode::Fixed;
    let pcg = mean_relative_error_curve(&problem, &oracle, Method::Pcg, &fixed, trials, t_max)?;
    println!(
        "\nfixed Gaussian sketch, same m: PCG reaches mean delta_15/delta_0 = {:.4e}",
        pcg[t_max]
    );
    Ok(())
}
