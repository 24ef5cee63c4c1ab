//! The closed-form inverse moments against their Monte-Carlo estimates, for
//! the three embeddings. Gaussian is exact, Haar is a tight finite-sample
//! approximation, and the SRHT reuses the Haar trace formulas as a
//! heuristic.
//!
//!     cargo run --release --example moments_monte_carlo

use sketchlsq::moments::{gaussian_moments, haar_moments, mc_moments, srht_trace_moments};
use sketchlsq::sketch::SketchKind;

fn main() -> sketchlsq::Result<()> {
    let (n, m, d, trials) = (512, 40, 10, 1_000);
    println!("n={n}, m={m}, d={d}, {trials} Monte-Carlo trials\n");
    println!(
        "{:10} {:>12} {:>12} {:>12} {:>12}",
        "kind", "theta1", "mc_theta1", "theta2", "mc_theta2"
    );
    for kind in [SketchKind::Gaussian, SketchKind::Haar, SketchKind::Srht] {
        let closed = match kind {
            SketchKind::Gaussian => gaussian_moments(m, d)?,
            SketchKind::Haar => haar_moments(n, m, d)?,
            SketchKind::Srht => srht_trace_moments(n, m, d)?,
        };
        let mc = mc_moments(kind, n, m, d, trials, 17)?;
        println!(
            "{:10} {:>12.5} {:>12.5} {:>12.5} {:>12.5}",
            kind.to_string(),
            closed.theta1,
            mc.theta1,
            closed.theta2,
            mc.theta2
        );
    }

    let pair = gaussian_moments(m, d)?;
    println!(
        "\nGaussian refreshed-sketch prescription at (m={m}, d={d}): \
         step {:.5}, contraction {:.5} per iteration",
        pair.step(),
        pair.rate()
    );
    Ok(())
}
