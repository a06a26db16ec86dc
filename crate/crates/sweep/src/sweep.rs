use std::path::PathBuf;
use std::time::{Duration, Instant};

use fmr_core::oracle::{Oracle, OracleError, OracleRoot, ScanConfig};
use fmr_core::{
    solve_orientation, FieldDirection, MaterialParams, ResonanceResult, SolverConfig, SolverError,
};
use rayon::prelude::*;

#[derive(Debug, thiserror::Error)]
pub enum SweepError {
    #[error("invalid sweep: {0}")]
    Invalid(String),
    #[error("orientation θ_ext = {theta_ext_deg}°: {source}")]
    Orientation {
        theta_ext_deg: f64,
        #[source]
        source: SolverError,
    },
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("CSV: {0}")]
    Csv(#[from] csv::Error),
}

/// What to sweep. Angles are in degrees.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub theta_start: f64,
    pub theta_stop: f64,
    pub theta_step: f64,
    pub phi_ext: f64,
    pub params: MaterialParams,
    pub cfg: SolverConfig,
    /// Also run the brute-force oracle on every orientation.
    pub run_oracle: bool,
}

impl Default for SweepSpec {
    fn default() -> Self {
        Self {
            theta_start: 0.0,
            theta_stop: 180.0,
            theta_step: 2.0,
            phi_ext: 0.0,
            params: MaterialParams::default(),
            cfg: SolverConfig::default(),
            run_oracle: false,
        }
    }
}

impl SweepSpec {
    pub fn validate(&self) -> Result<(), SweepError> {
        let angles = [
            self.theta_start,
            self.theta_stop,
            self.theta_step,
            self.phi_ext,
        ];
        if angles.iter().any(|a| !a.is_finite()) {
            return Err(SweepError::Invalid("angles must be finite".into()));
        }
        if self.theta_step <= 0.0 {
            return Err(SweepError::Invalid("theta step must be positive".into()));
        }
        if self.theta_start > self.theta_stop {
            return Err(SweepError::Invalid("theta start exceeds theta stop".into()));
        }
        if !(0.0..=180.0).contains(&self.theta_start) || self.theta_stop > 180.0 {
            return Err(SweepError::Invalid(
                "theta must lie in [0, 180] degrees".into(),
            ));
        }
        self.params
            .validate()
            .map_err(|e| SweepError::Invalid(e.to_string()))?;
        self.cfg
            .validate()
            .map_err(|e| SweepError::Invalid(e.to_string()))?;
        Ok(())
    }

    /// The polar angles visited, `start, start + step, …` up to `stop`.
    pub fn orientations(&self) -> Vec<f64> {
        // tolerate `stop` landing a rounding error past the last step
        let n = ((self.theta_stop - self.theta_start) / self.theta_step + 1e-9).floor() as usize;
        (0..=n)
            .map(|i| self.theta_start + i as f64 * self.theta_step)
            .collect()
    }
}

#[derive(Debug, Clone)]
pub struct OrientationReport {
    pub theta_ext_deg: f64,
    pub results: Vec<ResonanceResult>,
    /// Oracle roots, present when the spec asked for them.
    pub oracle: Option<Result<Vec<OracleRoot>, OracleError>>,
    /// Solver wall-clock time for this orientation.
    pub elapsed: Duration,
}

#[derive(Debug, Clone)]
pub struct SweepReport {
    pub orientations: Vec<OrientationReport>,
    pub elapsed: Duration,
}

impl SweepReport {
    pub fn result_count(&self) -> usize {
        self.orientations.iter().map(|o| o.results.len()).sum()
    }
}

/// Solves every orientation of `spec`.
///
/// Orientations run on the rayon pool; the report keeps sweep order. The first
/// failing orientation (in sweep order) is returned as the error.
pub fn run_sweep(spec: &SweepSpec) -> Result<SweepReport, SweepError> {
    spec.validate()?;
    let start = Instant::now();
    let outcomes: Vec<Result<OrientationReport, SweepError>> = spec
        .orientations()
        .into_par_iter()
        .map(|theta| solve_one(spec, theta))
        .collect();
    let orientations = outcomes.into_iter().collect::<Result<Vec<_>, _>>()?;
    Ok(SweepReport {
        orientations,
        elapsed: start.elapsed(),
    })
}

fn solve_one(spec: &SweepSpec, theta: f64) -> Result<OrientationReport, SweepError> {
    let dir = FieldDirection::from_degrees(theta, spec.phi_ext)
        .map_err(|e| SweepError::Invalid(e.to_string()))?;
    let t = Instant::now();
    let results = solve_orientation(&dir, &spec.params, &spec.cfg).map_err(|source| {
        SweepError::Orientation {
            theta_ext_deg: theta,
            source,
        }
    })?;
    let elapsed = t.elapsed();
    let oracle = spec.run_oracle.then(|| {
        Oracle::new(&dir, &spec.params).scan_resonances(spec.cfg.h_max, &ScanConfig::default())
    });
    Ok(OrientationReport {
        theta_ext_deg: theta,
        results,
        oracle,
        elapsed,
    })
}
