//! Convergence-rate analysis: the cubic expected-error dynamics of heavy-ball
//! momentum with refreshed sketches, the fixed-sketch momentum spectral
//! radius, and Marchenko-Pastur rate integrals.
//!
//! With refreshed sketches and inverse moments `(θ1, θ2)`, the triple
//! `(E δ_{t+1}, cross term, β² E δ_t)` evolves linearly; the root radius
//! `Λ(μ, β)` of the characteristic cubic
//! `χ(λ) = λ³ + a2 λ² + a1 λ + a0` governs the asymptotic error growth.
//! Its infimum over step size and momentum is `ρ* = 1 - θ1²/θ2`, attained at
//! `(μ, β) = (θ1/θ2, 0)` — momentum cannot beat plain IHS — and this module
//! verifies that numerically: companion-matrix roots, a grid-plus-polish
//! minimizer, and the auxiliary polynomial `P_α(β) = χ_{α,β}(ρ*)/(1-ρ*)`
//! with its maximal critical point `β₊(α)`.

use nalgebra::{Complex, DMatrix, Matrix3, Vector3};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coefficients of the momentum error dynamics for one `(μ, β, θ1, θ2)`.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct DynamicsParams {
    pub mu: f64,
    pub beta: f64,
    pub theta1: f64,
    pub theta2: f64,
    /// `(1+β)² - 2μθ1(1+β) + μ²θ2`
    pub eta: f64,
    /// `1 + β - μθ1`
    pub gamma: f64,
    /// `η` at `β = 0`
    pub eta0: f64,
    /// `γ` at `β = 0`
    pub gamma0: f64,
    pub a0: f64,
    pub a1: f64,
    pub a2: f64,
    /// `1 - θ1²/θ2`
    pub rho_star: f64,
    /// `(θ2/θ1) μ`
    pub alpha: f64,
}

impl DynamicsParams {
    /// Negative `β` is accepted: the analysis routines difference across
    /// `β = 0`; solvers enforce `β >= 0` themselves.
    pub fn new(mu: f64, beta: f64, theta1: f64, theta2: f64) -> Result<Self> {
        if !theta1.is_finite() || !theta2.is_finite() || theta1 <= 0.0 || theta2 <= 0.0 {
            return Err(Error::Domain(format!(
                "moments must be positive, got θ1={theta1}, θ2={theta2}"
            )));
        }
        if theta1 * theta1 > theta2 * (1.0 + 1e-12) {
            return Err(Error::Domain(format!(
                "θ1² = {} must not exceed θ2 = {theta2}",
                theta1 * theta1
            )));
        }
        let eta0 = 1.0 - 2.0 * mu * theta1 + mu * mu * theta2;
        let gamma0 = 1.0 - mu * theta1;
        let eta = (1.0 + beta).powi(2) - 2.0 * mu * theta1 * (1.0 + beta) + mu * mu * theta2;
        let gamma = 1.0 + beta - mu * theta1;
        let a0 = -beta.powi(3);
        let a1 = beta * (beta * beta - (1.0 - 2.0 * gamma0) * beta + 2.0 * gamma0 * gamma0 - eta0);
        let a2 = -beta * beta + (1.0 - 2.0 * gamma0) * beta - eta0;
        let rho_star = 1.0 - theta1 * theta1 / theta2;
        let alpha = theta2 / theta1 * mu;
        let dp = DynamicsParams {
            mu,
            beta,
            theta1,
            theta2,
            eta,
            gamma,
            eta0,
            gamma0,
            a0,
            a1,
            a2,
            rho_star,
            alpha,
        };
        // Algebraic consistency of the two parameterizations.
        let scale = 1.0 + eta.abs() + beta * beta;
        debug_assert!((dp.eta - (eta0 + 2.0 * gamma0 * beta + beta * beta)).abs() <= 1e-14 * scale);
        debug_assert!((dp.gamma - (gamma0 + beta)).abs() <= 1e-14 * scale);
        Ok(dp)
    }

    /// Same dynamics in the `(α, β, ρ*)` parameterization, which determines
    /// the cubic completely (any `θ1 > 0` gives identical coefficients).
    pub fn from_alpha(alpha: f64, beta: f64, rho_star: f64) -> Result<Self> {
        if !rho_star.is_finite() || !(0.0..1.0).contains(&rho_star) {
            return Err(Error::Domain(format!(
                "rho_star must lie in [0, 1), got {rho_star}"
            )));
        }
        let theta1 = 1.0;
        let theta2 = 1.0 / (1.0 - rho_star);
        let mu = alpha * theta1 / theta2;
        Self::new(mu, beta, theta1, theta2)
    }
}

/// Roots of the monic cubic `λ³ + a2 λ² + a1 λ + a0`, via the eigenvalues of
/// its companion matrix (stable near multiple roots, where the minimal root
/// radius actually sits).
pub fn cubic_roots(a2: f64, a1: f64, a0: f64) -> [Complex<f64>; 3] {
    let companion = Matrix3::new(-a2, -a1, -a0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0);
    let eigs = companion.complex_eigenvalues();
    [eigs[0], eigs[1], eigs[2]]
}

/// Root radius `Λ(μ, β)`: the largest root modulus of the dynamics cubic,
/// equal to the spectral radius of [`momentum_dynamics_matrix`].
pub fn root_radius(dp: &DynamicsParams) -> f64 {
    cubic_roots(dp.a2, dp.a1, dp.a0)
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max)
}

/// The 3x3 transition matrix of the expected-error linear dynamics.
pub fn momentum_dynamics_matrix(dp: &DynamicsParams) -> Matrix3<f64> {
    Matrix3::new(
        dp.eta,
        2.0 * dp.gamma,
        1.0,
        -dp.beta * dp.gamma,
        -dp.beta,
        0.0,
        dp.beta * dp.beta,
        0.0,
        0.0,
    )
}

/// Empirical growth rate `(||X_T||/||X_0||)^{1/T}` of the dynamics started
/// along a generic direction; approaches the root radius.
pub fn dynamics_growth_rate(dp: &DynamicsParams, steps: usize) -> f64 {
    let m = momentum_dynamics_matrix(dp);
    let mut x = Vector3::new(1.0, 1.0, 1.0).normalize();
    let mut log_sum = 0.0;
    let burn_in = steps / 2;
    for t in 0..steps {
        x = m * x;
        let norm = x.norm();
        if norm == 0.0 {
            return 0.0;
        }
        if t >= burn_in {
            log_sum += norm.ln();
        }
        x /= norm;
    }
    (log_sum / (steps - burn_in) as f64).exp()
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct RootRadiusMin {
    pub value: f64,
    pub mu: f64,
    pub beta: f64,
}

/// Grid minimum of `Λ` over `[mu_range] x [beta_range]` with coordinate-
/// descent polish (step halving down to 1e-10).
pub fn min_root_radius_search(
    theta1: f64,
    theta2: f64,
    mu_range: (f64, f64),
    beta_range: (f64, f64),
    grid: (usize, usize),
) -> Result<RootRadiusMin> {
    let mu_star = theta1 / theta2;
    if !(mu_range.0 <= mu_star && mu_star <= mu_range.1) {
        return Err(Error::Domain(format!(
            "mu range [{}, {}] must contain θ1/θ2 = {mu_star}",
            mu_range.0, mu_range.1
        )));
    }
    if !(beta_range.0 <= 0.0 && 0.0 <= beta_range.1) {
        return Err(Error::Domain("beta range must contain 0".into()));
    }
    if grid.0 < 2 || grid.1 < 2 {
        return Err(Error::Domain(
            "grid needs at least 2 points per axis".into(),
        ));
    }
    let beta_lo = beta_range.0.max(0.0);
    let lambda = |mu: f64, beta: f64| -> Result<f64> {
        Ok(root_radius(&DynamicsParams::new(mu, beta, theta1, theta2)?))
    };

    let mu_step = (mu_range.1 - mu_range.0) / (grid.0 - 1) as f64;
    let beta_step = (beta_range.1 - beta_lo) / (grid.1 - 1) as f64;
    let mut best = RootRadiusMin {
        value: f64::INFINITY,
        mu: mu_range.0,
        beta: beta_lo,
    };
    for i in 0..grid.0 {
        let mu = mu_range.0 + mu_step * i as f64;
        for j in 0..grid.1 {
            let beta = beta_lo + beta_step * j as f64;
            let v = lambda(mu, beta)?;
            if v < best.value {
                best = RootRadiusMin { value: v, mu, beta };
            }
        }
    }

    // Coordinate descent from the grid argmin.
    let mut step_mu = mu_step;
    let mut step_beta = beta_step.max(1e-6);
    let mut guard = 0;
    while (step_mu > 1e-10 || step_beta > 1e-10) && guard < 100_000 {
        guard += 1;
        let mut improved = false;
        let candidates = [
            (best.mu + step_mu, best.beta),
            (best.mu - step_mu, best.beta),
            (best.mu, best.beta + step_beta),
            (best.mu, best.beta - step_beta),
        ];
        for (mu, beta) in candidates {
            let mu = mu.clamp(mu_range.0, mu_range.1);
            let beta = beta.clamp(beta_lo, beta_range.1);
            let v = lambda(mu, beta)?;
            if v < best.value {
                best = RootRadiusMin { value: v, mu, beta };
                improved = true;
            }
        }
        if !improved {
            step_mu *= 0.5;
            step_beta *= 0.5;
        }
    }
    Ok(best)
}

/// Default search box `μ ∈ [0, 3θ1/θ2]`, `β ∈ [0, 0.99]` (outside it
/// `Λ > 1`: the radius is at least `β`, and `η0` grows quadratically in μ).
pub fn min_root_radius_default(theta1: f64, theta2: f64) -> Result<RootRadiusMin> {
    min_root_radius_search(
        theta1,
        theta2,
        (0.0, 3.0 * theta1 / theta2),
        (0.0, 0.99),
        (61, 61),
    )
}

/// `P_α(β) = -β³ + ρ*(1-2α)β² + ρ*(1-α)(1+α(2ρ*-1))β - ρ*²(1-α)²`.
///
/// Satisfies `χ_{α,β}(ρ*)/(1-ρ*) = P_α(β)`; its sign pattern on `(0, ρ*)`
/// is what rules out a momentum parameter beating `ρ*`.
pub fn p_alpha(alpha: f64, beta: f64, rho_star: f64) -> f64 {
    -beta.powi(3)
        + rho_star * (1.0 - 2.0 * alpha) * beta * beta
        + rho_star * (1.0 - alpha) * (1.0 + alpha * (2.0 * rho_star - 1.0)) * beta
        - rho_star * rho_star * (1.0 - alpha) * (1.0 - alpha)
}

/// `d P_α / dβ`.
pub fn p_alpha_prime(alpha: f64, beta: f64, rho_star: f64) -> f64 {
    -3.0 * beta * beta
        + 2.0 * rho_star * (1.0 - 2.0 * alpha) * beta
        + rho_star * (1.0 - alpha) * (1.0 + alpha * (2.0 * rho_star - 1.0))
}

/// Second route to `P_α(β)`: evaluate the dynamics cubic at `ρ*` and divide
/// by `1 - ρ*`. Rejects `ρ* = 1`, where the identity is undefined.
pub fn p_alpha_via_chi(alpha: f64, beta: f64, rho_star: f64) -> Result<f64> {
    if rho_star >= 1.0 {
        return Err(Error::Domain(
            "identity route undefined at rho_star = 1".into(),
        ));
    }
    let dp = DynamicsParams::from_alpha(alpha, beta, rho_star)?;
    let chi = rho_star.powi(3) + dp.a2 * rho_star * rho_star + dp.a1 * rho_star + dp.a0;
    Ok(chi / (1.0 - rho_star))
}

/// Maximal root `β₊(α) = (b + √(b² + 3c))/3` of `P'_α`, with
/// `b = ρ*(1-2α)` and `c = ρ*(1-α)(1+α(2ρ*-1))`.
pub fn beta_plus(alpha: f64, rho_star: f64) -> Result<f64> {
    if !rho_star.is_finite() || rho_star <= 0.0 || rho_star >= 1.0 {
        return Err(Error::Domain(format!(
            "rho_star must lie in (0, 1), got {rho_star}"
        )));
    }
    let b = rho_star * (1.0 - 2.0 * alpha);
    let c = rho_star * (1.0 - alpha) * (1.0 + alpha * (2.0 * rho_star - 1.0));
    let disc = b * b + 3.0 * c;
    if disc.is_nan() || disc <= 0.0 {
        return Err(Error::Numerical(format!(
            "discriminant b²+3c = {disc} not positive (α={alpha}, ρ*={rho_star})"
        )));
    }
    Ok((b + disc.sqrt()) / 3.0)
}

/// Largest real root of the dynamics cubic (the branch through `ρ*` near the
/// optimum); used to difference the radius surface where it is smooth.
pub fn dominant_real_root(dp: &DynamicsParams) -> Result<f64> {
    let mut best: Option<f64> = None;
    for z in cubic_roots(dp.a2, dp.a1, dp.a0) {
        if z.im.abs() <= 1e-8 * (1.0 + z.re.abs()) {
            best = Some(best.map_or(z.re, |b: f64| b.max(z.re)));
        }
    }
    best.ok_or_else(|| Error::Numerical("cubic has no real root".into()))
}

/// Spectral radius of the heavy-ball iteration matrix with a fixed sketch:
/// max over eigenvalues `λ_i` of `C_S` of the radius of
/// `[[1+β-μ/λ_i, -β], [1, 0]]`.
pub fn fixed_polyak_spectral_radius(lambdas: &[f64], mu: f64, beta: f64) -> Result<f64> {
    if lambdas.is_empty() {
        return Err(Error::Domain("need at least one eigenvalue".into()));
    }
    let mut radius = 0.0f64;
    for &l in lambdas {
        if !l.is_finite() || l <= 0.0 {
            return Err(Error::Domain(format!(
                "eigenvalues must be positive, got {l}"
            )));
        }
        let tr = 1.0 + beta - mu / l;
        let disc = tr * tr - 4.0 * beta;
        let r = if disc >= 0.0 {
            let s = disc.sqrt();
            (0.5 * (tr + s)).abs().max((0.5 * (tr - s)).abs())
        } else {
            // Conjugate pair of modulus √β.
            beta.sqrt()
        };
        radius = radius.max(r);
    }
    Ok(radius)
}

/// Marchenko-Pastur spectrum parameters at scale `σ = 1`.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct MpSpec {
    pub rho: f64,
    pub sigma: f64,
    pub lambda_minus: f64,
    pub lambda_plus: f64,
    /// `1/λ₊`
    pub a: f64,
    /// `1/λ₋`
    pub b: f64,
    /// `(b+a)/(b-a)`
    pub kappa: f64,
}

impl MpSpec {
    pub fn new(rho: f64) -> Result<Self> {
        if !rho.is_finite() || rho <= 0.0 || rho >= 1.0 {
            return Err(Error::Domain(format!("rho must lie in (0, 1), got {rho}")));
        }
        let lambda_minus = (1.0 - rho.sqrt()).powi(2);
        let lambda_plus = (1.0 + rho.sqrt()).powi(2);
        let a = 1.0 / lambda_plus;
        let b = 1.0 / lambda_minus;
        Ok(MpSpec {
            rho,
            sigma: 1.0,
            lambda_minus,
            lambda_plus,
            a,
            b,
            kappa: (b + a) / (b - a),
        })
    }

    /// Density `ν(λ) = √((λ₊-λ)(λ-λ₋)) / (2πρλ)` on `[λ₋, λ₊]`.
    pub fn density(&self, lambda: f64) -> f64 {
        if lambda <= self.lambda_minus || lambda >= self.lambda_plus {
            return 0.0;
        }
        ((self.lambda_plus - lambda) * (lambda - self.lambda_minus)).sqrt()
            / (2.0 * std::f64::consts::PI * self.rho * lambda)
    }

    /// Rejection sampler in the `λ = λ₋ + (λ₊-λ₋) sin²φ` coordinate, where
    /// the transformed density is bounded by `4/(πλ₋)`.
    pub fn sample<R: rand::Rng>(&self, rng: &mut R) -> f64 {
        let bound = 4.0 / (std::f64::consts::PI * self.lambda_minus);
        loop {
            let phi = rng.random::<f64>() * std::f64::consts::FRAC_PI_2;
            let lambda =
                self.lambda_minus + (self.lambda_plus - self.lambda_minus) * phi.sin().powi(2);
            let dens = 4.0 * (2.0 * phi).sin().powi(2) / (std::f64::consts::PI * lambda);
            if rng.random::<f64>() * bound <= dens {
                return lambda;
            }
        }
    }
}

/// Asymptotic per-iteration rate `4ρ/(1+ρ)²` of the optimally tuned IHS with
/// a fixed Gaussian sketch.
pub fn mp_asymptotic_rate(rho: f64) -> f64 {
    4.0 * rho / (1.0 + rho).powi(2)
}

/// Asymptotically optimal fixed-sketch step `μ* = (1-ρ)²/(1+ρ)`.
pub fn mp_optimal_step(rho: f64) -> f64 {
    (1.0 - rho).powi(2) / (1.0 + rho)
}

/// `Γ_t(μ) = E_{λ~MP(ρ,1)} (1 - μ/λ)^{2t}` by adaptive quadrature.
///
/// The substitution `λ = λ₋ + (λ₊-λ₋) sin²φ` removes the square-root
/// endpoint singularities of the density. The tolerance is relative to the
/// integral's own magnitude: `Γ_t` underflows any fixed absolute tolerance
/// for large `t` (at `t = 400` it is ~1e-78) while ratios of consecutive
/// values remain meaningful.
pub fn mp_gamma(rho: f64, mu: f64, t: usize) -> Result<f64> {
    let spec = MpSpec::new(rho)?;
    if !mu.is_finite() {
        return Err(Error::Domain(format!("step size must be finite, got {mu}")));
    }
    let width = spec.lambda_plus - spec.lambda_minus;
    let power = 2 * t as i32;
    let f = |phi: f64| -> f64 {
        let s = phi.sin();
        let lambda = spec.lambda_minus + width * s * s;
        let weight = 4.0 * (2.0 * phi).sin().powi(2) / (std::f64::consts::PI * lambda);
        weight * (1.0 - mu / lambda).powi(power)
    };
    integrate_adaptive(&f, 0.0, std::f64::consts::FRAC_PI_2, 1e-12)
}

fn composite_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, panels: usize) -> f64 {
    let h = (b - a) / panels as f64;
    let mut acc = f(a) + f(b);
    for i in 1..panels {
        let x = a + h * i as f64;
        acc += f(x) * if i % 2 == 1 { 4.0 } else { 2.0 };
    }
    acc * h / 3.0
}

fn integrate_adaptive(f: &dyn Fn(f64) -> f64, a: f64, b: f64, rel_tol: f64) -> Result<f64> {
    let scale = composite_simpson(f, a, b, 2048).abs();
    if scale == 0.0 {
        return Ok(0.0);
    }
    let eps = rel_tol * scale;
    // Pre-split so sharply peaked integrands cannot fool the first estimate.
    let panels = 16;
    let h = (b - a) / panels as f64;
    let mut total = 0.0;
    for i in 0..panels {
        let lo = a + h * i as f64;
        let hi = lo + h;
        let mid = 0.5 * (lo + hi);
        let (flo, fmid, fhi) = (f(lo), f(mid), f(hi));
        let s = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
        total += adaptive_step(f, lo, hi, flo, fmid, fhi, s, eps / panels as f64, 52)?;
    }
    Ok(total)
}

#[allow(clippy::too_many_arguments)]
fn adaptive_step(
    f: &dyn Fn(f64) -> f64,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    eps: f64,
    depth: usize,
) -> Result<f64> {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let refined = left + right;
    if (refined - whole).abs() <= 15.0 * eps {
        return Ok(refined + (refined - whole) / 15.0);
    }
    if depth == 0 {
        return Err(Error::Numerical(
            "adaptive quadrature failed to converge".into(),
        ));
    }
    Ok(
        adaptive_step(f, a, m, fa, flm, fm, left, eps * 0.5, depth - 1)?
            + adaptive_step(f, m, b, fm, frm, fb, right, eps * 0.5, depth - 1)?,
    )
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MpStepReport {
    pub rho: f64,
    pub t: usize,
    pub mu_star: f64,
    /// `Γ` is flat at 1 when `t = 0`.
    pub degenerate: bool,
    pub grid_mu: Vec<f64>,
    pub grid_gamma: Vec<f64>,
    pub argmin_mu: f64,
    /// `Γ_t(edge)/Γ_t(μ*)` at the two grid edges.
    pub edge_ratios: (f64, f64),
}

/// Evaluates `Γ_t` over a 101-point grid `μ* ± 0.1` and reports the argmin
/// and the edge ratios against `μ*`.
pub fn mp_optimal_step_check(rho: f64, t: usize) -> Result<MpStepReport> {
    let mu_star = mp_optimal_step(rho);
    let lo = (mu_star - 0.1).max(1e-6);
    let hi = mu_star + 0.1;
    let points = 101;
    let mut grid_mu = Vec::with_capacity(points);
    let mut grid_gamma = Vec::with_capacity(points);
    let mut argmin = (f64::INFINITY, lo);
    for i in 0..points {
        let mu = lo + (hi - lo) * i as f64 / (points - 1) as f64;
        let g = mp_gamma(rho, mu, t)?;
        if g < argmin.0 {
            argmin = (g, mu);
        }
        grid_mu.push(mu);
        grid_gamma.push(g);
    }
    let g_star = mp_gamma(rho, mu_star, t)?;
    let edge_ratios = (grid_gamma[0] / g_star, grid_gamma[points - 1] / g_star);
    Ok(MpStepReport {
        rho,
        t,
        mu_star,
        degenerate: t == 0,
        grid_mu,
        grid_gamma,
        argmin_mu: argmin.1,
        edge_ratios,
    })
}

/// Central-difference Hessian of the dominant-root branch of `Λ` at
/// `(θ1/θ2, 0)`; positive definite with determinant `4 θ2 x²/(1-x)`,
/// `x = θ1²/θ2`.
pub fn radius_hessian_at_optimum(theta1: f64, theta2: f64, h: f64) -> Result<DMatrix<f64>> {
    let mu_star = theta1 / theta2;
    let f = |mu: f64, beta: f64| -> Result<f64> {
        dominant_real_root(&DynamicsParams::new(mu, beta, theta1, theta2)?)
    };
    let f00 = f(mu_star, 0.0)?;
    let fmm = (f(mu_star + h, 0.0)? - 2.0 * f00 + f(mu_star - h, 0.0)?) / (h * h);
    let fbb = (f(mu_star, h)? - 2.0 * f00 + f(mu_star, -h)?) / (h * h);
    let fmb = (f(mu_star + h, h)? - f(mu_star + h, -h)? - f(mu_star - h, h)? + f(mu_star - h, -h)?)
        / (4.0 * h * h);
    Ok(DMatrix::from_row_slice(2, 2, &[fmm, fmb, fmb, fbb]))
}
