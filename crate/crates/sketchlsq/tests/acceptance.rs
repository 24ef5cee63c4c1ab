//! Acceptance suite: one test per release criterion, each asserting its
//! stated tolerance and printing a `[criterion NN] PASS` line (visible with
//! `cargo test --test acceptance -- --nocapture`).

use std::time::Instant;

use sketchlsq::analysis::{
    min_root_radius_default, mp_gamma, mp_optimal_step_check, p_alpha, p_alpha_via_chi,
};
use sketchlsq::moments::{gaussian_moments, haar_moments, mc_moments, srht_trace_moments};
use sketchlsq::problem::{compute_oracle, generate_synthetic};
use sketchlsq::rng;
use sketchlsq::sketch::{fwht, SketchKind};
use sketchlsq::solvers::{
    mean_relative_error_curve, run_method, Method, Param, SketchMode, SolverConfig,
};
use sketchlsq::tuning::{
    cost_ratio_vs_classical, gaussian_opt_sketch_size, grid_min_cost, srht_opt_sketch_size,
    CostModel, SrhtCase,
};

/// Criterion 1: with refreshed Gaussian embeddings and the step θ1/θ2, the
/// mean error contracts by 1 - θ1²/θ2 per iteration (±15%), in under 30 s.
#[test]
fn criterion_01_refreshed_ihs_exact_rate() {
    let clock = Instant::now();
    let (n, d, m, trials, t_max) = (512, 10, 30, 200, 8);
    let p = generate_synthetic(n, d, 100.0, 1).unwrap();
    let o = compute_oracle(&p).unwrap();
    let pair = gaussian_moments(m, d).unwrap();
    let rate = pair.rate();
    assert!(
        (rate - 0.38294).abs() <= 1e-5,
        "rate from Eq-level formula: {rate}"
    );

    let cfg = SolverConfig::new(SketchKind::Gaussian, m, 101);
    let mean = mean_relative_error_curve(&p, &o, Method::Ihs, &cfg, trials, t_max).unwrap();

    let gm = mean[t_max].powf(1.0 / t_max as f64);
    assert!(
        (gm - rate).abs() <= 0.15 * rate,
        "per-iteration geometric mean {gm} vs rate {rate}"
    );
    for t in 1..=t_max {
        let log_err = (mean[t].ln() - (t as f64) * rate.ln()).abs();
        assert!(
            log_err <= 0.15 * (t as f64) * rate.ln().abs(),
            "t={t}: mean {} vs rate^t {}",
            mean[t],
            rate.powi(t as i32)
        );
    }
    let elapsed = clock.elapsed().as_secs_f64();
    assert!(elapsed < 30.0, "runtime {elapsed:.1}s exceeds 30s");
    println!(
        "[criterion 01] PASS refreshed-IHS rate: geometric mean {gm:.5} vs 1-θ1²/θ2 = {rate:.5} \
         ({elapsed:.1}s)"
    );
}

/// Criterion 2: scaling the step to 0.5x or 1.5x of θ1/θ2 strictly
/// increases the mean error at t = 8.
#[test]
fn criterion_02_optimal_step_uniqueness() {
    let (n, d, m, trials, t_max) = (512, 10, 30, 200, 8);
    let p = generate_synthetic(n, d, 100.0, 1).unwrap();
    let o = compute_oracle(&p).unwrap();
    let mu_star = gaussian_moments(m, d).unwrap().step();

    let base = SolverConfig::new(SketchKind::Gaussian, m, 202);
    let at_star = mean_relative_error_curve(&p, &o, Method::Ihs, &base, trials, t_max).unwrap();
    for scale in [0.5, 1.5] {
        let mut cfg = base.clone();
        cfg.mu = Param::Value(scale * mu_star);
        let detuned = mean_relative_error_curve(&p, &o, Method::Ihs, &cfg, trials, t_max).unwrap();
        assert!(
            detuned[t_max] > at_star[t_max],
            "mu = {scale} mu*: mean δ8 {} not above optimal {}",
            detuned[t_max],
            at_star[t_max]
        );
    }
    println!(
        "[criterion 02] PASS optimal-step uniqueness: δ8(0.5μ*), δ8(1.5μ*) > δ8(μ*) = {:.3e}",
        at_star[t_max]
    );
}

/// Criterion 3: heavy-ball momentum hurts refreshed-sketch IHS for every
/// tested β at t = 15.
#[test]
fn criterion_03_momentum_non_acceleration() {
    let (n, d, m, trials, t_max) = (512, 10, 30, 200, 15);
    let p = generate_synthetic(n, d, 100.0, 1).unwrap();
    let o = compute_oracle(&p).unwrap();
    let base = SolverConfig::new(SketchKind::Gaussian, m, 303);
    let ihs = mean_relative_error_curve(&p, &o, Method::Ihs, &base, trials, t_max).unwrap();
    let mut summary = String::new();
    for beta in [0.05, 0.1, 0.5] {
        let mut cfg = base.clone();
        cfg.beta = Param::Value(beta);
        let pol =
            mean_relative_error_curve(&p, &o, Method::PolyakIhs, &cfg, trials, t_max).unwrap();
        assert!(
            pol[t_max] > ihs[t_max],
            "β={beta}: polyak mean δ15 {} not above ihs {}",
            pol[t_max],
            ihs[t_max]
        );
        summary.push_str(&format!(" β={beta}: {:.1}x;", pol[t_max] / ihs[t_max]));
    }
    println!("[criterion 03] PASS momentum non-acceleration vs IHS δ15:{summary}");
}

/// Criterion 4: PCG with a fixed Gaussian sketch meets δ_t/δ_0 <= 4 (d/m)^t
/// for t <= 10 in at least 95 of 100 sketch draws, in under 60 s.
#[test]
fn criterion_04_pcg_high_probability_rate() {
    let clock = Instant::now();
    let (n, d, m) = (2048, 20, 80);
    let p = generate_synthetic(n, d, 1e4, 4).unwrap();
    let o = compute_oracle(&p).unwrap();
    let rho = d as f64 / m as f64;
    let mut ok = 0;
    for seed in 0..100u64 {
        let mut cfg = SolverConfig::new(SketchKind::Gaussian, m, seed);
        cfg.mode = SketchMode::Fixed;
        cfg.max_iters = 10;
        let trace = run_method(&p, Some(&o), Method::Pcg, &cfg).unwrap();
        let d0 = trace.deltas[0];
        if trace
            .deltas
            .iter()
            .enumerate()
            .all(|(t, &dt)| dt / d0 <= 4.0 * rho.powi(t as i32))
        {
            ok += 1;
        }
    }
    assert!(ok >= 95, "bound held in only {ok}/100 seeds");
    let elapsed = clock.elapsed().as_secs_f64();
    assert!(elapsed < 60.0, "runtime {elapsed:.1}s exceeds 60s");
    println!("[criterion 04] PASS PCG rate bound 4(d/m)^t held in {ok}/100 seeds ({elapsed:.1}s)");
}

/// Criterion 5: with the same fixed sketch and start, PCG is at least as
/// good as IHS and Polyak-IHS at every iteration (slack 1e-10 δ_0).
#[test]
fn criterion_05_pcg_optimality() {
    let (n, d, m, t_max) = (2048, 20, 80, 20);
    let p = generate_synthetic(n, d, 1e4, 5).unwrap();
    let o = compute_oracle(&p).unwrap();
    for seed in 0..50u64 {
        let mut cfg = SolverConfig::new(SketchKind::Gaussian, m, seed);
        cfg.mode = SketchMode::Fixed;
        cfg.max_iters = t_max;
        let pcg_t = run_method(&p, Some(&o), Method::Pcg, &cfg).unwrap();
        let ihs_t = run_method(&p, Some(&o), Method::Ihs, &cfg).unwrap();
        let pol_t = run_method(&p, Some(&o), Method::PolyakIhs, &cfg).unwrap();
        let slack = 1e-10 * pcg_t.deltas[0];
        for t in 0..pcg_t.deltas.len() {
            if let Some(&v) = ihs_t.deltas.get(t) {
                assert!(
                    pcg_t.deltas[t] <= v + slack,
                    "seed {seed} t={t}: pcg above ihs"
                );
            }
            if let Some(&v) = pol_t.deltas.get(t) {
                assert!(
                    pcg_t.deltas[t] <= v + slack,
                    "seed {seed} t={t}: pcg above polyak"
                );
            }
        }
    }
    println!("[criterion 05] PASS PCG optimality over IHS/Polyak-IHS on 50 shared sketches");
}

/// Criterion 6: mean curves order GCC <= IPCG <= IHS <= Polyak-IHS(β>0) at
/// t = 10 for Gaussian, Haar and SRHT refreshed sketches.
#[test]
fn criterion_06_method_ordering() {
    let (n, d, m, trials, t_max) = (1024, 10, 30, 200, 10);
    let p = generate_synthetic(n, d, 100.0, 6).unwrap();
    let o = compute_oracle(&p).unwrap();
    for kind in [SketchKind::Gaussian, SketchKind::Haar, SketchKind::Srht] {
        let base = SolverConfig::new(kind, m, 606);
        let gcc = mean_relative_error_curve(&p, &o, Method::Gcc, &base, trials, t_max).unwrap();
        let ipcg = mean_relative_error_curve(&p, &o, Method::Ipcg, &base, trials, t_max).unwrap();
        let ihs = mean_relative_error_curve(&p, &o, Method::Ihs, &base, trials, t_max).unwrap();
        assert!(
            gcc[t_max] <= ipcg[t_max],
            "{kind}: gcc {} > ipcg {}",
            gcc[t_max],
            ipcg[t_max]
        );
        assert!(
            ipcg[t_max] <= ihs[t_max],
            "{kind}: ipcg {} > ihs {}",
            ipcg[t_max],
            ihs[t_max]
        );
        if kind == SketchKind::Gaussian {
            // Where the moment pair is exact, the conjugate-direction means
            // sit under the (1 - θ1²/θ2)^t envelope pointwise (15% slack).
            let rate = base.moment_pair(n, d).unwrap().rate();
            for t in 0..=8usize {
                let envelope = rate.powi(t as i32) * 1.15;
                assert!(gcc[t] <= ipcg[t] * (1.0 + 1e-12), "gcc above ipcg at t={t}");
                assert!(ipcg[t] <= envelope, "ipcg {} above envelope {envelope} at t={t}", ipcg[t]);
            }
        }
        for beta in [0.05, 0.1, 0.5] {
            let mut cfg = base.clone();
            cfg.beta = Param::Value(beta);
            let pol =
                mean_relative_error_curve(&p, &o, Method::PolyakIhs, &cfg, trials, t_max).unwrap();
            assert!(
                ihs[t_max] <= pol[t_max],
                "{kind}: ihs {} > polyak(β={beta}) {}",
                ihs[t_max],
                pol[t_max]
            );
        }
        println!(
            "[criterion 06] {kind}: gcc {:.2e} <= ipcg {:.2e} <= ihs {:.2e} <= polyak(β>0)",
            gcc[t_max], ipcg[t_max], ihs[t_max]
        );
    }
    println!("[criterion 06] PASS method ordering for gaussian, haar, srht");
}

/// Criterion 7: the minimal root radius of the momentum dynamics equals
/// ρ* = 1 - θ1²/θ2, attained at (θ1/θ2, 0), for Gaussian and Haar moment
/// pairs (one of them with ρ* within 0.02 of 1/2).
#[test]
fn criterion_07_minimal_root_radius() {
    let mut near_half_covered = false;
    let mut cases: Vec<(String, f64, f64)> = Vec::new();
    for (m, d) in [(20usize, 10usize), (40, 10), (80, 20)] {
        let pair = gaussian_moments(m, d).unwrap();
        cases.push((format!("gaussian(m={m},d={d})"), pair.theta1, pair.theta2));
    }
    let haar = haar_moments(1024, 20, 10).unwrap();
    cases.push(("haar(n=1024,m=20,d=10)".into(), haar.theta1, haar.theta2));

    for (label, t1, t2) in cases {
        let rho_star = 1.0 - t1 * t1 / t2;
        if (rho_star - 0.5).abs() <= 0.02 {
            near_half_covered = true;
        }
        let min = min_root_radius_default(t1, t2).unwrap();
        assert!(
            min.value >= rho_star - 1e-8 && min.value <= rho_star + 1e-4,
            "{label}: min {} vs ρ* {rho_star}",
            min.value
        );
        let mu_res = 3.0 * t1 / t2 / 60.0;
        let beta_res = 0.99 / 60.0;
        assert!(
            (min.mu - t1 / t2).abs() <= mu_res,
            "{label}: argmin μ {} vs μ* {}",
            min.mu,
            t1 / t2
        );
        assert!(min.beta <= beta_res, "{label}: argmin β {}", min.beta);
        println!(
            "[criterion 07] {label}: min Λ = {:.8}, ρ* = {rho_star:.8}",
            min.value
        );
    }
    assert!(near_half_covered, "no θ pair with ρ* within 0.02 of 1/2");
    println!("[criterion 07] PASS minimal root radius equals 1-θ1²/θ2 at (θ1/θ2, 0)");
}

/// Criterion 8: the two routes to P_α agree to 1e-12, and P_α has no root
/// inside (0, ρ*) across the (α, ρ*) grid.
#[test]
fn criterion_08_p_alpha_identity_and_root_free_interval() {
    use rand::Rng;
    let mut r = rng::stream(808, 0);
    for _ in 0..100 {
        let alpha = r.random::<f64>() * 4.0;
        let beta = r.random::<f64>() * 1.5;
        let rho = r.random::<f64>() * 0.97 + 0.01;
        let direct = p_alpha(alpha, beta, rho);
        let via_chi = p_alpha_via_chi(alpha, beta, rho).unwrap();
        assert!(
            (direct - via_chi).abs() <= 1e-12 * direct.abs().max(1.0),
            "identity broke at α={alpha}, β={beta}, ρ*={rho}"
        );
    }
    for rho in [0.1, 0.3, 0.7, 0.9] {
        for i in 0..200 {
            let alpha = 5.0 * i as f64 / 199.0;
            let mut prev_sign = None;
            for j in 1..500 {
                let beta = rho * j as f64 / 500.0;
                let v = p_alpha(alpha, beta, rho);
                let sign = v > 0.0;
                if let Some(p) = prev_sign {
                    assert!(
                        p == sign,
                        "sign change inside (0, ρ*) at α={alpha}, ρ*={rho}"
                    );
                }
                prev_sign = Some(sign);
                assert!(
                    v < 0.0,
                    "P_α touched zero inside (0, ρ*) at α={alpha}, ρ*={rho}"
                );
            }
        }
    }
    println!("[criterion 08] PASS P_α two-route identity (1e-12) and root-free (0, ρ*)");
}

/// Criterion 9: Marchenko-Pastur quadrature reproduces the asymptotic rate
/// 4ρ/(1+ρ)² = 0.64 at ρ = 0.25 within 2%, and the step-size grid argmin at
/// t = 200 sits within one grid step of μ* = 0.45. Under 10 s.
#[test]
fn criterion_09_marchenko_pastur_asymptotics() {
    let clock = Instant::now();
    let rho = 0.25;
    let mu_star = 0.45;
    let g400 = mp_gamma(rho, mu_star, 400).unwrap();
    let g401 = mp_gamma(rho, mu_star, 401).unwrap();
    let ratio = g401 / g400;
    assert!(
        (ratio - 0.64).abs() <= 0.02 * 0.64,
        "Γ401/Γ400 = {ratio} vs 0.64"
    );
    let report = mp_optimal_step_check(rho, 200).unwrap();
    let step = report.grid_mu[1] - report.grid_mu[0];
    assert!(
        (report.argmin_mu - mu_star).abs() <= step + 1e-12,
        "argmin {} vs 0.45",
        report.argmin_mu
    );
    let elapsed = clock.elapsed().as_secs_f64();
    assert!(elapsed < 10.0, "runtime {elapsed:.1}s exceeds 10s");
    println!(
        "[criterion 09] PASS MP asymptotics: Γ-ratio {ratio:.5} ~ 0.64, argmin {} ~ 0.45 \
         ({elapsed:.1}s)",
        report.argmin_mu
    );
}

/// Criterion 10: Monte-Carlo moments match the Gaussian closed form within
/// 3 standard errors (2000 trials) and the Haar/SRHT trace formulas within
/// 10% at (n=1024, m=64, d=8).
#[test]
fn criterion_10_moment_monte_carlo() {
    let exact = gaussian_moments(20, 10).unwrap();
    let est = mc_moments(SketchKind::Gaussian, 64, 20, 10, 2000, 1010).unwrap();
    let (se1, se2) = est.stderr.unwrap();
    assert!(
        (est.theta1 - exact.theta1).abs() <= 3.0 * se1,
        "θ1: {} vs {} (se {se1})",
        est.theta1,
        exact.theta1
    );
    assert!(
        (est.theta2 - exact.theta2).abs() <= 3.0 * se2,
        "θ2: {} vs {} (se {se2})",
        est.theta2,
        exact.theta2
    );
    println!(
        "[criterion 10] gaussian MC: θ1 {:.4}±{:.4} vs 20/9 = {:.4}; θ2 {:.3}±{:.3} vs {:.4}",
        est.theta1, se1, exact.theta1, est.theta2, se2, exact.theta2
    );

    let (n, m, d) = (1024, 64, 8);
    for kind in [SketchKind::Haar, SketchKind::Srht] {
        let formula = match kind {
            SketchKind::Haar => haar_moments(n, m, d).unwrap(),
            _ => srht_trace_moments(n, m, d).unwrap(),
        };
        let est = mc_moments(kind, n, m, d, 2000, 2020).unwrap();
        assert!(
            (est.theta1 - formula.theta1).abs() <= 0.10 * formula.theta1,
            "{kind} θ1: {} vs {}",
            est.theta1,
            formula.theta1
        );
        assert!(
            (est.theta2 - formula.theta2).abs() <= 0.10 * formula.theta2,
            "{kind} θ2: {} vs {}",
            est.theta2,
            formula.theta2
        );
        println!(
            "[criterion 10] {kind} MC: θ1 {:.3} vs {:.3}; θ2 {:.1} vs {:.1}",
            est.theta1, formula.theta1, est.theta2, formula.theta2
        );
    }
    println!("[criterion 10] PASS Monte-Carlo moments vs closed forms");
}

/// Criterion 11: tuning formulas. Gaussian classical-cost ratio 0.1206,
/// SRHT natural-log ratio 0.4595 (recomputed oracle; consistent with the
/// 0.46 reference within ±0.05), Gaussian stationarity identity to 1e-6,
/// and grid-oracle agreement (factor 2 SRHT; balance point to 1% and sum
/// cost within factor 2 for Gaussian).
#[test]
fn criterion_11_tuning_formulas() {
    let (n, d) = (10_000_000usize, 50usize);
    let eps = d as f64 / n as f64;

    let g_ratio = cost_ratio_vs_classical(SketchKind::Gaussian, n, d, eps).unwrap();
    assert!(
        (g_ratio - 0.1206).abs() <= 0.005,
        "gaussian ratio {g_ratio}"
    );

    let s_ratio = cost_ratio_vs_classical(SketchKind::Srht, n, d, eps).unwrap();
    let oracle = (50.0f64.ln() + (1.0 / eps).ln().sqrt()) / (50.0f64.ln() + (1.0 / eps).ln());
    assert!(
        (s_ratio - oracle).abs() <= 1e-12,
        "srht ratio {s_ratio} vs recomputed formula {oracle}"
    );
    assert!(
        (s_ratio - 0.4595).abs() <= 0.005,
        "srht ratio {s_ratio} vs 0.4595"
    );
    assert!(
        (s_ratio - 0.46).abs() <= 0.05,
        "srht ratio {s_ratio} vs reference 0.46"
    );
    println!(
        "[criterion 11] note: natural-log SRHT ratio at eps=d/n is {s_ratio:.4}; the published \
         0.419 figure corresponds to ln(1/eps)=14.509 (eps~5e-7), an arithmetic slip — at the \
         stated eps the model matches the 0.46 reference"
    );

    let g = gaussian_opt_sketch_size(n, d, eps).unwrap();
    let a = n as f64 / (d * d) as f64 * (1.0 / eps).ln();
    assert!(
        (g.alpha_star * g.alpha_star.ln() - a).abs() <= 1e-6 * a,
        "stationarity residual too large"
    );

    let s = srht_opt_sketch_size(n, d, eps).unwrap();
    assert_eq!(s.case, SrhtCase::I);
    let s_model = CostModel::new(SketchKind::Srht, n, d, eps).unwrap();
    let (_, c_grid) = grid_min_cost(&s_model, n as f64, 400);
    assert!(
        s.predicted_cost <= 2.0 * c_grid && s.predicted_cost >= c_grid / 2.0,
        "srht C(m*) {} vs grid {}",
        s.predicted_cost,
        c_grid
    );

    let g_model = CostModel::new(SketchKind::Gaussian, n, d, eps).unwrap();
    // m* balances factor and iteration cost; the minimax grid oracle must
    // recover it to 1%.
    let fc = g_model.factor_cost(g.m_star_real);
    let ic = g_model.iter_cost(g.m_star_real);
    assert!((fc - ic).abs() <= 1e-9 * fc, "balance identity violated");
    let minimax = {
        let f = |m: f64| g_model.factor_cost(m).max(g_model.iter_cost(m));
        let lo = g_model.m_ref() * 1.01;
        let mut best = (lo, f(lo));
        let ratio = (n as f64 / lo).powf(1.0 / 399.0);
        let mut m = lo;
        for _ in 1..400 {
            m *= ratio;
            if f(m) < best.1 {
                best = (m, f(m));
            }
        }
        let (mut a, mut b) = (best.0 / ratio, best.0 * ratio);
        for _ in 0..8 {
            for i in 0..=64 {
                let m = a + (b - a) * i as f64 / 64.0;
                if f(m) < best.1 {
                    best = (m, f(m));
                }
            }
            let w = (b - a) / 16.0;
            a = best.0 - w;
            b = best.0 + w;
        }
        best.0
    };
    assert!(
        (minimax - g.m_star_real).abs() <= 0.01 * g.m_star_real,
        "minimax grid {} vs m* {}",
        minimax,
        g.m_star_real
    );
    // Against the summed model the balance point is order-optimal only; the
    // sum's own argmin solves α ln²α = a and sits lower.
    let (m_sum, c_sum) = grid_min_cost(&g_model, n as f64, 400);
    let c_star = g_model.cost(g.m_star_real);
    assert!(
        c_star <= 2.0 * c_sum && c_star >= c_sum,
        "gaussian C(m*) {} vs summed-grid {}",
        c_star,
        c_sum
    );
    println!(
        "[criterion 11] note: summed-cost argmin sits at m = {m_sum:.0} (α ln²α = a), below the \
         balance prescription m* = {:.0}; cost ratio C(m*)/C_grid = {:.3} (within factor 2)",
        g.m_star_real,
        c_star / c_sum
    );
    println!(
        "[criterion 11] PASS tuning: gaussian ratio {g_ratio:.4}, srht ratio {s_ratio:.4}, \
         stationarity 1e-6, grid oracles in band"
    );
}

/// Criterion 12: the fast transform matches dense Sylvester-Hadamard
/// multiplication for lengths 2..16 to 1e-12 and is exactly involutive on
/// integer input.
#[test]
fn criterion_12_fwht_correctness() {
    fn hadamard(k: usize) -> Vec<Vec<f64>> {
        let mut h = vec![vec![1.0]];
        let mut size = 1;
        while size < k {
            let mut next = vec![vec![0.0; 2 * size]; 2 * size];
            for i in 0..size {
                for j in 0..size {
                    next[i][j] = h[i][j];
                    next[i][j + size] = h[i][j];
                    next[i + size][j] = h[i][j];
                    next[i + size][j + size] = -h[i][j];
                }
            }
            h = next;
            size *= 2;
        }
        h
    }
    for k in [2usize, 4, 8, 16] {
        let h = hadamard(k);
        let x: Vec<f64> = (0..k).map(|i| ((i * 7 + 3) % 5) as f64 - 2.0).collect();
        let mut y = x.clone();
        fwht(&mut y).unwrap();
        for i in 0..k {
            let want: f64 = (0..k).map(|j| h[i][j] * x[j]).sum();
            assert!((y[i] - want).abs() <= 1e-12, "len {k}, row {i}");
        }
        fwht(&mut y).unwrap();
        for i in 0..k {
            assert_eq!(y[i], k as f64 * x[i], "involution at len {k}");
        }
    }
    println!("[criterion 12] PASS FWHT vs Sylvester oracle (lengths 2-16) and exact involution");
}

/// Criterion 13: every CLI command is byte-deterministic given flags+seed.
#[test]
fn criterion_13_cli_determinism() {
    let commands: Vec<Vec<String>> = vec![
        vec![
            "solve".into(),
            "--method".into(),
            "ihs".into(),
            "--sketch".into(),
            "gaussian".into(),
            "--mode".into(),
            "refreshed".into(),
            "--n".into(),
            "256".into(),
            "--d".into(),
            "8".into(),
            "--m".into(),
            "32".into(),
            "--eps".into(),
            "1e-10".into(),
            "--seed".into(),
            "3".into(),
        ],
        vec![
            "bench".into(),
            "--n".into(),
            "128".into(),
            "--d".into(),
            "6".into(),
            "--m".into(),
            "18".into(),
            "--trials".into(),
            "5".into(),
            "--tmax".into(),
            "5".into(),
            "--seed".into(),
            "1".into(),
        ],
        vec![
            "moments".into(),
            "--sketch".into(),
            "srht".into(),
            "--n".into(),
            "128".into(),
            "--m".into(),
            "24".into(),
            "--d".into(),
            "6".into(),
            "--trials".into(),
            "40".into(),
            "--seed".into(),
            "2".into(),
        ],
        vec![
            "tune".into(),
            "--sketch".into(),
            "gaussian".into(),
            "--n".into(),
            "100000".into(),
            "--d".into(),
            "16".into(),
            "--eps".into(),
            "1e-8".into(),
        ],
        vec![
            "rootradius".into(),
            "--m".into(),
            "20".into(),
            "--d".into(),
            "10".into(),
        ],
        vec![
            "mp".into(),
            "--rho".into(),
            "0.25".into(),
            "--t".into(),
            "20".into(),
        ],
    ];
    for cmd in commands {
        let dir_a = tempfile::tempdir().unwrap();
        let dir_b = tempfile::tempdir().unwrap();
        for dir in [&dir_a, &dir_b] {
            let mut args = vec!["sketchlsq".to_string()];
            args.extend(cmd.iter().cloned());
            args.push("--out".into());
            args.push(dir.path().display().to_string());
            let code = sketchlsq::cli::run(args);
            assert_eq!(code, 0, "command {cmd:?} failed");
        }
        let mut names: Vec<String> = std::fs::read_dir(dir_a.path())
            .unwrap()
            .map(|e| e.unwrap().file_name().into_string().unwrap())
            .collect();
        names.sort();
        assert!(!names.is_empty(), "command {cmd:?} produced no artifacts");
        for name in names {
            let a = std::fs::read(dir_a.path().join(&name)).unwrap();
            let b = std::fs::read(dir_b.path().join(&name)).unwrap();
            assert_eq!(a, b, "artifact {name} differs between reruns for {cmd:?}");
        }
        println!("[criterion 13] {} artifacts byte-identical", cmd[0]);
    }
    println!("[criterion 13] PASS CLI determinism across reruns");
}
