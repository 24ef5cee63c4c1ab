//! The expected-error dynamics of momentum with refreshed sketches have a
//! cubic characteristic polynomial; its root radius over (step, momentum)
//! bottoms out at exactly 1 - θ1²/θ2, at zero momentum. This sweeps the
//! landscape and verifies the auxiliary-polynomial identities behind that
//! fact.
//!
//!     cargo run --release --example root_radius_landscape

use sketchlsq::analysis::{
    beta_plus, min_root_radius_default, p_alpha, p_alpha_via_chi, root_radius, DynamicsParams,
};
use sketchlsq::moments::gaussian_moments;

fn main() -> sketchlsq::Result<()> {
    let pair = gaussian_moments(20, 10)?;
    let (t1, t2) = (pair.theta1, pair.theta2);
    let rho_star = pair.rate();
    println!("theta1 = {t1:.5}, theta2 = {t2:.5}, rho* = 1 - theta1²/theta2 = {rho_star:.5}\n");

    println!("root radius along beta at the optimal step mu* = theta1/theta2:");
    for k in 0..=6 {
        let beta = 0.1 * k as f64;
        let dp = DynamicsParams::new(pair.step(), beta, t1, t2)?;
        println!("  beta = {beta:.1}: radius = {:.5}", root_radius(&dp));
    }

    let min = min_root_radius_default(t1, t2)?;
    println!(
        "\ngrid + polish minimum: {:.8} at (mu = {:.6}, beta = {:.2e});  rho* = {:.8}",
        min.value, min.mu, min.beta, rho_star
    );

    // Why no (mu, beta) can beat rho*: the cubic evaluated at rho* reduces
    // to P_alpha(beta), which stays strictly negative on (0, rho*).
    let (alpha, beta) = (1.7, 0.3);
    println!(
        "\nP_alpha identity at (alpha={alpha}, beta={beta}): direct {:.12}, via cubic {:.12}",
        p_alpha(alpha, beta, rho_star),
        p_alpha_via_chi(alpha, beta, rho_star)?
    );
    let bp = beta_plus(alpha, rho_star)?;
    println!("maximal critical point beta_+({alpha}) = {bp:.6}");
    let worst = (1..100)
        .map(|i| p_alpha(alpha, rho_star * i as f64 / 100.0, rho_star))
        .fold(f64::NEG_INFINITY, f64::max);
    println!("max of P_alpha on (0, rho*): {worst:.5}  (< 0, so momentum cannot reach rho*)");
    Ok(())
}
