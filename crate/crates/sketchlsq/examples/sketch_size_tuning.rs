//! How large should the sketch be? Evaluates the cost-optimal prescriptions
//! and compares them against the classical 4d/4d·log d choices and a
//! brute-force grid minimization of the flop model.
//!
//!     cargo run --release --example sketch_size_tuning

use sketchlsq::sketch::SketchKind;
use sketchlsq::tuning::{
    cost_ratio_vs_classical, gaussian_opt_sketch_size, grid_min_cost, lambert_w,
    srht_opt_sketch_size, CostModel,
};

fn main() -> sketchlsq::Result<()> {
    let (n, d) = (10_000_000usize, 50usize);
    let eps = d as f64 / n as f64;
    println!("n = {n}, d = {d}, target accuracy eps = d/n = {eps:.1e}\n");

    let s = srht_opt_sketch_size(n, d, eps)?;
    let model = CostModel::new(SketchKind::Srht, n, d, eps)?;
    let (m_grid, c_grid) = grid_min_cost(&model, n as f64, 400);
    println!(
        "SRHT: m* = {} (case {:?}), modeled cost {:.3e}",
        s.m_star, s.case, s.predicted_cost
    );
    println!("      grid oracle: argmin m = {m_grid:.0}, cost {c_grid:.3e}");
    println!(
        "      cost vs classical m = 4 d ln d: {:.3} of the classical flop count",
        cost_ratio_vs_classical(SketchKind::Srht, n, d, eps)?
    );

    let g = gaussian_opt_sketch_size(n, d, eps)?;
    println!(
        "\nGaussian: m* = {} = d·exp(W(a)) with a = (n/d²)ln(1/eps) = {:.4e}",
        g.m_star,
        n as f64 / (d * d) as f64 * (1.0 / eps).ln()
    );
    println!(
        "      alpha* ln alpha* = {:.6e} (stationarity residual {:.1e})",
        g.alpha_star * g.alpha_star.ln(),
        (g.alpha_star * g.alpha_star.ln() - n as f64 / (d * d) as f64 * (1.0 / eps).ln()).abs()
    );
    println!(
        "      cost vs classical m = 4d: {:.4} of the classical flop count",
        cost_ratio_vs_classical(SketchKind::Gaussian, n, d, eps)?
    );

    println!("\nLambert W along the way: W(1) = {:.10}", lambert_w(1.0)?);
    Ok(())
}
