//! Anatomy of the SRHT: random signs, fast Walsh-Hadamard butterfly, row
//! subsampling. Applying it to an n x d matrix costs O(n_pad d log n_pad)
//! instead of the O(mnd) of a materialized embedding, at identical output.
//!
//!     cargo run --release --example srht_transform

use std::time::Instant;

use sketchlsq::problem::generate_synthetic;
use sketchlsq::sketch::{fwht, SketchKind, SketchOperator};

fn main() -> sketchlsq::Result<()> {
    // The butterfly itself, on a vector we can check by hand.
    let mut x = vec![1.0, 2.0, 3.0, 4.0];
    fwht(&mut x)?;
    println!("fwht([1, 2, 3, 4]) = {x:?}   (rows of H_4 dotted with the input)");
    fwht(&mut x)?;
    println!("applying it twice returns 4x the input: {x:?}\n");

    let (n, d, m) = (100_000, 40, 2_000);
    let problem = generate_synthetic(n, d, 10.0, 2)?;

    let srht = SketchOperator::draw(SketchKind::Srht, m, n, 9)?;
    println!(
        "SRHT at n={n}: pads to n_pad={} and samples {m} of those rows",
        srht.padded_len().unwrap()
    );
    let t0 = Instant::now();
    let sa_fast = srht.apply(problem.a())?;
    let fast = t0.elapsed();

    let gauss = SketchOperator::draw(SketchKind::Gaussian, m, n, 9)?;
    let t1 = Instant::now();
    let _sa_dense = gauss.apply(problem.a())?;
    let dense = t1.elapsed();

    println!(
        "apply flops: srht {} vs dense {}  ({}x fewer)",
        srht.apply_flops(d),
        gauss.apply_flops(d),
        gauss.apply_flops(d) / srht.apply_flops(d)
    );
    println!("apply time:  srht {fast:.2?} vs dense {dense:.2?}");

    // The Gram matrix of SA estimates AᵀA without bias.
    let gram = sa_fast.transpose() * &sa_fast;
    let target = problem.a().transpose() * problem.a();
    let rel = (&gram - &target).norm() / target.norm();
    println!("relative Gram deviation ||(SA)ᵀSA - AᵀA||/||AᵀA|| = {rel:.3}");
    Ok(())
}
