use std::process::Command;

use fmr_sweep::cli::{parse_args, CliError};
use fmr_sweep::parse_csv;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_fmr-sweep"))
}

#[test]
fn config_file_with_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.cfg");
    std::fs::write(
        &cfg,
        "# sweep settings\npreset = 6\ntheta-step = 10\nfreq_ghz = 10.0\nhmax = 8000\n",
    )
    .unwrap();
    let inv = parse_args([
        "fmr-sweep",
        "--config",
        cfg.to_str().unwrap(),
        "--hmax",
        "9000",
    ])
    .unwrap();
    assert_eq!(inv.spec.params.k_u, 1.19e5);
    assert_eq!(inv.spec.params.k_4, -2.38e5);
    assert_eq!(inv.spec.theta_step, 10.0);
    assert_eq!(inv.spec.cfg.h_max, 9000.0);
    assert!((inv.spec.params.omega_exp - 2.0 * std::f64::consts::PI * 1e10).abs() < 1e-3);
}

#[test]
fn bad_config_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    for text in ["colour = blue\n", "hmax\n", "hmax = lots\n"] {
        let cfg = dir.path().join("bad.cfg");
        std::fs::write(&cfg, text).unwrap();
        let r = parse_args(["fmr-sweep", "--config", cfg.to_str().unwrap()]);
        assert!(matches!(r, Err(CliError::Usage(_))), "{text:?}");
    }
}

#[test]
fn exit_codes() {
    let out = bin().arg("--no-such-flag").output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Usage"));

    let out = bin().arg("--help").output().unwrap();
    assert_eq!(out.status.code(), Some(0));

    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("no/such/dir/out.csv");
    let out = bin()
        .args(["--theta-start", "0", "--theta-stop", "0", "--out"])
        .arg(&missing)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn writes_csv_plot_and_oracle() {
    let dir = tempfile::tempdir().unwrap();
    let (csv, svg, oracle) = (
        dir.path().join("r.csv"),
        dir.path().join("r.svg"),
        dir.path().join("o.csv"),
    );
    let status = bin()
        .args([
            "--preset",
            "8",
            "--theta-start",
            "80",
            "--theta-stop",
            "100",
            "--theta-step",
            "10",
            "--out",
        ])
        .arg(&csv)
        .arg("--plot")
        .arg(&svg)
        .arg("--oracle")
        .arg(&oracle)
        .status()
        .unwrap();
    assert!(status.success());
    let rows = parse_csv(&csv).unwrap();
    assert!(rows.len() >= 3);
    let svg = std::fs::read_to_string(&svg).unwrap();
    assert_eq!(svg.matches("<g class=\"marker").count(), rows.len());
    let oracle = std::fs::read_to_string(&oracle).unwrap();
    assert!(oracle.starts_with("theta_ext_deg,branch,h_res_oe,theta_eq_rad,phi_eq_rad,status\n"));
}
