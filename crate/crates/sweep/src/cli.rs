//! Command-line front end.
//!
//! Settings are resolved in order: built-in defaults, `--preset`, the
//! `--config` file, then explicit flags.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::Parser;

use crate::output::{emit_csv, emit_oracle_csv, write_csv};
use crate::plot::emit_svg;
use crate::presets::preset;
use crate::sweep::{run_sweep, SweepSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_RUNTIME: i32 = 2;

#[derive(Debug, Parser, Default)]
#[command(
    name = "fmr-sweep",
    version,
    about = "Sweep the external-field angle and enclose every FMR resonance field"
)]
struct Args {
    /// Microwave frequency, GHz [default: 9.243]
    #[arg(long)]
    freq_ghz: Option<f64>,
    /// Spectroscopic splitting factor [default: 2.00]
    #[arg(long)]
    g: Option<f64>,
    /// Saturation magnetization 4πMs, Gs [default: 6400]
    #[arg(long)]
    ms4pi: Option<f64>,
    /// Uniaxial anisotropy constant, erg/cm³ [default: 0]
    #[arg(long, allow_negative_numbers = true)]
    ku: Option<f64>,
    /// Fourth-order anisotropy constant, erg/cm³ [default: 0]
    #[arg(long, allow_negative_numbers = true)]
    k4: Option<f64>,
    /// First field polar angle, degrees [default: 0]
    #[arg(long)]
    theta_start: Option<f64>,
    /// Last field polar angle, degrees [default: 180]
    #[arg(long)]
    theta_stop: Option<f64>,
    /// Angle step, degrees [default: 2]
    #[arg(long)]
    theta_step: Option<f64>,
    /// Field azimuth, degrees [default: 0]
    #[arg(long, allow_negative_numbers = true)]
    phi_ext: Option<f64>,
    /// Upper end of the field search, Oe [default: 10000]
    #[arg(long)]
    hmax: Option<f64>,
    /// Angular box tolerance, rad [default: 2e-6]
    #[arg(long)]
    tol_angle: Option<f64>,
    /// Field box tolerance, Oe [default: 0.005]
    #[arg(long)]
    tol_field: Option<f64>,
    /// CSV output path (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
    /// SVG plot output path
    #[arg(long)]
    plot: Option<PathBuf>,
    /// Also run the brute-force oracle and write its roots to this CSV
    #[arg(long)]
    oracle: Option<PathBuf>,
    /// Seed for randomized checks (the sweep itself is deterministic)
    #[arg(long)]
    seed: Option<u64>,
    /// Anisotropy preset 1..12
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=12))]
    preset: Option<u32>,
    /// key=value file with any of the long options above
    #[arg(long)]
    config: Option<PathBuf>,
}

/// A parsed command line.
#[derive(Debug, Clone, PartialEq)]
pub struct Invocation {
    pub spec: SweepSpec,
    pub out: Option<PathBuf>,
    pub plot: Option<PathBuf>,
    pub oracle: Option<PathBuf>,
    pub seed: Option<u64>,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// `--help` or `--version`; the payload is the text to print.
    #[error("{0}")]
    Info(String),
    #[error("{0}")]
    Usage(String),
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(format!(
        "error: {}\n\nFor more information, try '--help'.",
        msg.into()
    ))
}

fn read_config(path: &Path) -> Result<BTreeMap<String, String>, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read config {}: {e}", path.display())))?;
    let mut map = BTreeMap::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(usage(format!(
                "{}:{}: expected key=value",
                path.display(),
                n + 1
            )));
        };
        map.insert(key.trim().replace('_', "-"), value.trim().to_owned());
    }
    Ok(map)
}

fn parse_value<T: std::str::FromStr>(key: &str, raw: &str) -> Result<T, CliError> {
    raw.parse()
        .map_err(|_| usage(format!("invalid value '{raw}' for '{key}' in config file")))
}

/// Fills every unset flag from the config file.
fn merge_config(args: &mut Args, file: BTreeMap<String, String>) -> Result<(), CliError> {
    macro_rules! fill {
        ($key:expr, $v:expr, $($name:literal => $field:ident),* $(,)?) => {
            match $key {
                $($name => {
                    if args.$field.is_none() {
                        args.$field = Some(parse_value($name, $v)?);
                    }
                })*
                other => return Err(usage(format!("unknown config key '{other}'"))),
            }
        };
    }
    for (key, v) in &file {
        fill!(key.as_str(), v,
            "freq-ghz" => freq_ghz,
            "g" => g,
            "ms4pi" => ms4pi,
            "ku" => ku,
            "k4" => k4,
            "theta-start" => theta_start,
            "theta-stop" => theta_stop,
            "theta-step" => theta_step,
            "phi-ext" => phi_ext,
            "hmax" => hmax,
            "tol-angle" => tol_angle,
            "tol-field" => tol_field,
            "out" => out,
            "plot" => plot,
            "oracle" => oracle,
            "seed" => seed,
            "preset" => preset,
        );
    }
    if args.preset.is_some_and(|p| !(1..=12).contains(&p)) {
        return Err(usage("preset must be between 1 and 12"));
    }
    Ok(())
}

/// Parses `argv` (program name first) into a validated invocation.
pub fn parse_args<I, T>(argv: I) -> Result<Invocation, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let mut args = Args::try_parse_from(argv).map_err(|e| match e.kind() {
        clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
            CliError::Info(e.to_string())
        }
        _ => CliError::Usage(e.to_string()),
    })?;
    if let Some(path) = args.config.clone() {
        merge_config(&mut args, read_config(&path)?)?;
    }

    let mut spec = SweepSpec::default();
    if let Some(id) = args.preset {
        let p = preset(id).ok_or_else(|| usage(format!("no preset {id}")))?;
        spec.params.k_u = p.k_u;
        spec.params.k_4 = p.k_4;
    }
    let p = &mut spec.params;
    if let Some(f) = args.freq_ghz {
        p.omega_exp = 2.0 * std::f64::consts::PI * f * 1e9;
    }
    p.g = args.g.unwrap_or(p.g);
    p.four_pi_ms = args.ms4pi.unwrap_or(p.four_pi_ms);
    p.k_u = args.ku.unwrap_or(p.k_u);
    p.k_4 = args.k4.unwrap_or(p.k_4);
    spec.theta_start = args.theta_start.unwrap_or(spec.theta_start);
    spec.theta_stop = args.theta_stop.unwrap_or(spec.theta_stop);
    spec.theta_step = args.theta_step.unwrap_or(spec.theta_step);
    spec.phi_ext = args.phi_ext.unwrap_or(spec.phi_ext);
    spec.cfg.h_max = args.hmax.unwrap_or(spec.cfg.h_max);
    spec.cfg.tol_angle = args.tol_angle.unwrap_or(spec.cfg.tol_angle);
    spec.cfg.tol_field = args.tol_field.unwrap_or(spec.cfg.tol_field);
    spec.run_oracle = args.oracle.is_some();
    spec.validate().map_err(|e| usage(e.to_string()))?;

    Ok(Invocation {
        spec,
        out: args.out,
        plot: args.plot,
        oracle: args.oracle,
        seed: args.seed,
    })
}

/// Runs the tool and returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let inv = match parse_args(argv) {
        Ok(inv) => inv,
        Err(CliError::Info(text)) => {
            print!("{text}");
            return EXIT_OK;
        }
        Err(CliError::Usage(text)) => {
            eprintln!("{text}");
            return EXIT_USAGE;
        }
    };
    match execute(&inv) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("fmr-sweep: {e}");
            EXIT_RUNTIME
        }
    }
}

fn execute(inv: &Invocation) -> Result<(), crate::SweepError> {
    let report = run_sweep(&inv.spec)?;
    match &inv.out {
        Some(path) => emit_csv(&report, path)?,
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            write_csv(&report.rows(), &mut lock)?;
            let _ = lock.flush();
        }
    }
    if let Some(path) = &inv.plot {
        emit_svg(&report, path)?;
    }
    if let Some(path) = &inv.oracle {
        emit_oracle_csv(&report, path)?;
        let jumps = report
            .orientations
            .iter()
            .filter(|o| matches!(o.oracle, Some(Err(_))))
            .count();
        let agree = report
            .orientations
            .iter()
            .filter(|o| matches!(&o.oracle, Some(Ok(roots)) if roots.len() == o.results.len()))
            .count();
        eprintln!(
            "oracle: branch counts agree at {agree} of {} orientations ({jumps} oracle scans lost a branch)",
            report.orientations.len()
        );
    }
    eprintln!(
        "{} orientations, {} enclosures in {:.2} s",
        report.orientations.len(),
        report.result_count(),
        report.elapsed.as_secs_f64()
    );
    Ok(())
}
