//! CLI contract tests: exit codes, artifact schemas, auto-resolution.

use std::fs;

use sketchlsq::cli::{run, validate_against_schema, SOLVE_SIDECAR_SCHEMA};

fn run_args(args: &[&str]) -> i32 {
    let mut full = vec!["sketchlsq".to_string()];
    full.extend(args.iter().map(|s| s.to_string()));
    run(full)
}

#[test]
fn solve_end_to_end_meets_target() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().display().to_string();
    let code = run_args(&[
        "solve", "--method", "pcg", "--sketch", "srht", "--m", "auto", "--n", "4096", "--d", "32",
        "--eps", "1e-8", "--seed", "1", "--out", &out,
    ]);
    assert_eq!(code, 0);

    let csv = fs::read_to_string(dir.path().join("trace.csv")).unwrap();
    let mut lines = csv.lines();
    assert_eq!(
        lines.next().unwrap(),
        "iter,delta,delta_rel,flops_cum,wall_s"
    );
    let last = csv.lines().last().unwrap();
    let delta_rel: f64 = last.split(',').nth(2).unwrap().parse().unwrap();
    assert!(delta_rel <= 1e-8, "final delta_rel {delta_rel}");
    // wall_s column is zero without --timings.
    for line in csv.lines().skip(1) {
        assert_eq!(line.split(',').nth(4).unwrap(), "0");
    }
    assert!(dir.path().join("trace.svg").exists());
}

#[test]
fn solve_sidecar_matches_published_schema() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().display().to_string();
    let code = run_args(&[
        "solve",
        "--method",
        "ihs",
        "--sketch",
        "gaussian",
        "--mode",
        "refreshed",
        "--n",
        "256",
        "--d",
        "8",
        "--m",
        "32",
        "--mu",
        "auto",
        "--seed",
        "7",
        "--out",
        &out,
    ]);
    assert_eq!(code, 0);
    let raw = fs::read_to_string(dir.path().join("solve.json")).unwrap();
    let value: serde_json::Value = serde_json::from_str(&raw).unwrap();
    validate_against_schema(SOLVE_SIDECAR_SCHEMA, &value).unwrap();

    // `--mu auto` in refreshed mode resolves to θ1/θ2 of the closed form.
    let pair = sketchlsq::moments::gaussian_moments(32, 8).unwrap();
    let mu = value["resolved"]["mu"].as_f64().unwrap();
    assert!(
        (mu - pair.step()).abs() <= 1e-15,
        "resolved mu {mu} vs {}",
        pair.step()
    );
    assert_eq!(value["request"]["mu"], "auto");
}

#[test]
fn missing_dimension_is_usage_error() {
    let code = run_args(&["solve", "--method", "pcg", "--n", "128"]);
    assert_eq!(code, 1);
}

#[test]
fn unknown_flag_is_usage_error() {
    let code = run_args(&["solve", "--definitely-not-a-flag", "3"]);
    assert_eq!(code, 1);
}

#[test]
fn pcg_with_refreshed_mode_is_usage_error() {
    let code = run_args(&[
        "solve", "--method", "pcg", "--mode", "refreshed", "--n", "64", "--d", "4", "--m", "16",
    ]);
    assert_eq!(code, 1);
}

#[test]
fn zero_trials_bench_is_usage_error() {
    let code = run_args(&["bench", "--n", "64", "--d", "4", "--m", "12", "--trials", "0"]);
    assert_eq!(code, 1);
}

#[test]
fn help_exits_zero() {
    assert_eq!(run_args(&["--help"]), 0);
    assert_eq!(run_args(&["solve", "--help"]), 0);
}

#[test]
fn unreadable_matrix_is_io_error() {
    let code = run_args(&["solve", "--matrix", "/nonexistent/file.mtx"]);
    assert_eq!(code, 1);
}

#[test]
fn rank_deficient_input_is_numerical_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.mtx");
    // Two proportional columns.
    fs::write(
        &path,
        "%%MatrixMarket matrix array real general\n4 2\n1\n2\n3\n4\n2\n4\n6\n8\n",
    )
    .unwrap();
    let out = dir.path().display().to_string();
    let code = run_args(&[
        "solve",
        "--matrix",
        path.to_str().unwrap(),
        "--m",
        "4",
        "--out",
        &out,
    ]);
    assert_eq!(code, 2);
}

#[test]
fn solve_from_matrix_market_files() {
    let dir = tempfile::tempdir().unwrap();
    let a_path = dir.path().join("a.mtx");
    let y_path = dir.path().join("y.mtx");
    fs::write(
        &a_path,
        "%%MatrixMarket matrix array real general\n4 2\n1\n1\n1\n1\n0\n1\n2\n3\n",
    )
    .unwrap();
    fs::write(
        &y_path,
        "%%MatrixMarket matrix array real general\n4 1\n1\n3\n5\n7\n",
    )
    .unwrap();
    let out = dir.path().display().to_string();
    let code = run_args(&[
        "solve",
        "--matrix",
        a_path.to_str().unwrap(),
        "--rhs",
        y_path.to_str().unwrap(),
        "--method",
        "pcg",
        "--sketch",
        "gaussian",
        "--m",
        "4",
        "--eps",
        "1e-12",
        "--out",
        &out,
    ]);
    assert_eq!(code, 0);
    let sidecar: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("solve.json")).unwrap()).unwrap();
    assert_eq!(sidecar["problem"]["source"], "file");
    assert_eq!(sidecar["status"], "converged");
}

#[test]
fn bench_csv_has_bound_and_method_columns() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().display().to_string();
    let code = run_args(&[
        "bench", "--n", "128", "--d", "6", "--m", "18", "--trials", "5", "--tmax", "4", "--out",
        &out,
    ]);
    assert_eq!(code, 0);
    let csv = fs::read_to_string(dir.path().join("bench.csv")).unwrap();
    let header = csv.lines().next().unwrap();
    assert_eq!(
        header,
        "iter,bound,pcg,gcc,ipcg,ihs,polyak_0.05,polyak_0.1,polyak_0.5"
    );
    assert_eq!(csv.lines().count(), 1 + 5);

    // The bound column is (1 - θ1²/θ2)^t for the Gaussian pair.
    let pair = sketchlsq::moments::gaussian_moments(18, 6).unwrap();
    let row: Vec<&str> = csv.lines().nth(3).unwrap().split(',').collect();
    let t: i32 = row[0].parse().unwrap();
    let bound: f64 = row[1].parse().unwrap();
    assert_eq!(t, 2);
    assert!((bound - pair.rate().powi(2)).abs() <= 1e-12);
}

#[test]
fn bench_single_trial_is_valid() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().display().to_string();
    let code = run_args(&[
        "bench", "--n", "64", "--d", "4", "--m", "12", "--trials", "1", "--tmax", "3", "--out",
        &out,
    ]);
    assert_eq!(code, 0);
    let csv = fs::read_to_string(dir.path().join("bench.csv")).unwrap();
    assert_eq!(csv.lines().count(), 1 + 4);
    for line in csv.lines().skip(1) {
        for cell in line.split(',') {
            let v: f64 = cell.parse().unwrap();
            assert!(v.is_finite());
        }
    }
}

#[test]
fn timings_flag_populates_wall_column() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().display().to_string();
    let code = run_args(&[
        "solve",
        "--method",
        "pcg",
        "--sketch",
        "gaussian",
        "--n",
        "2048",
        "--d",
        "24",
        "--m",
        "96",
        "--eps",
        "1e-10",
        "--timings",
        "--out",
        &out,
    ]);
    assert_eq!(code, 0);
    let csv = fs::read_to_string(dir.path().join("trace.csv")).unwrap();
    let walls: Vec<f64> = csv
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(4).unwrap().parse().unwrap())
        .collect();
    assert!(walls.iter().all(|&w| w >= 0.0));
    assert!(
        walls.last().unwrap() > &0.0,
        "cumulative wall time stayed zero"
    );
    let sidecar: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("solve.json")).unwrap()).unwrap();
    assert!(sidecar["wall_seconds"].is_object());
}

#[test]
fn formats_flag_limits_artifacts() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().display().to_string();
    let code = run_args(&[
        "mp",
        "--rho",
        "0.25",
        "--t",
        "5",
        "--formats",
        "json",
        "--out",
        &out,
    ]);
    assert_eq!(code, 0);
    assert!(dir.path().join("mp.json").exists());
    assert!(!dir.path().join("mp.csv").exists());
    assert!(!dir.path().join("mp.svg").exists());
}

#[test]
fn tune_reports_case_tag_and_stationarity() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().display().to_string();
    assert_eq!(
        run_args(&[
            "tune", "--sketch", "srht", "--n", "1048576", "--d", "32", "--eps", "1e-8", "--out",
            &out,
        ]),
        0
    );
    let tune: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("tune.json")).unwrap()).unwrap();
    assert!(tune["case"] == "i" || tune["case"] == "ii");

    let out2 = dir.path().join("g");
    assert_eq!(
        run_args(&[
            "tune",
            "--sketch",
            "gaussian",
            "--n",
            "1048576",
            "--d",
            "32",
            "--eps",
            "1e-8",
            "--out",
            out2.to_str().unwrap(),
        ]),
        0
    );
    let tune: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(out2.join("tune.json")).unwrap()).unwrap();
    let alpha = tune["alpha_star"].as_f64().unwrap();
    let a = 1048576.0 / (32.0 * 32.0) * (1.0f64 / 1e-8).ln();
    assert!(
        (alpha * alpha.ln() - a).abs() <= 1e-6 * a,
        "alpha* ln alpha* = {} vs {a}",
        alpha * alpha.ln()
    );

    // Tuning requires the overparameterized regime.
    assert_eq!(
        run_args(&["tune", "--sketch", "srht", "--n", "100", "--d", "32"]),
        1
    );
}

#[test]
fn rootradius_gap_is_tiny() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().display().to_string();
    assert_eq!(
        run_args(&["rootradius", "--m", "20", "--d", "10", "--out", &out]),
        0
    );
    let v: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("rootradius.json")).unwrap())
            .unwrap();
    assert!(v["gap"].as_f64().unwrap().abs() <= 1e-4);
}
