//! Loading a least-squares instance from Matrix Market files and solving it.
//! Writes a small overdetermined system to a temp directory first, so the
//! example is self-contained.
//!
//!     cargo run --release --example matrix_market_io

use std::fs;

use nalgebra::DVector;
use sketchlsq::problem::{compute_oracle, load_matrix_market, LeastSquaresProblem};
use sketchlsq::sketch::SketchKind;
use sketchlsq::solvers::{run_method, Method, SketchMode, SolverConfig};

fn main() -> sketchlsq::Result<()> {
    let dir = std::env::temp_dir().join("sketchlsq_mm_example");
    fs::create_dir_all(&dir)?;
    let path = dir.join("design.mtx");

    // A 12 x 3 polynomial design matrix in array format (column-major).
    let mut body =
        String::from("%%MatrixMarket matrix array real general\n% cubic fit design\n12 3\n");
    for col in 0..3 {
        for row in 0..12 {
            let x = row as f64 / 11.0;
            body.push_str(&format!("{}\n", x.powi(col)));
        }
    }
    fs::write(&path, body)?;

    let a = load_matrix_market(&path)?;
    println!(
        "loaded {} x {} matrix from {}",
        a.nrows(),
        a.ncols(),
        path.display()
    );

    // Noisy observations of y = 1 + 2x - x².
    let y = DVector::from_fn(12, |i, _| {
        let x = i as f64 / 11.0;
        1.0 + 2.0 * x - x * x + 0.01 * ((i * 37 % 11) as f64 / 11.0 - 0.5)
    });
    let problem = LeastSquaresProblem::from_data_pair(a, &y, 0)?;
    let oracle = compute_oracle(&problem)?;
    println!(
        "normal-equation solution x* = {:?}",
        oracle.x_star().as_slice()
    );

    let mut cfg = SolverConfig::new(SketchKind::Gaussian, 8, 1);
    cfg.mode = SketchMode::Fixed;
    cfg.tol = 1e-12;
    let trace = run_method(&problem, Some(&oracle), Method::Pcg, &cfg)?;
    println!(
        "PCG reached delta_rel = {:.2e} in {} iterations",
        trace.final_relative_delta().unwrap(),
        trace.iters
    );
    Ok(())
}
