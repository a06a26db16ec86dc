//! CSV output. Floats are written in shortest round-trip form, so parsing a
//! file back yields bit-identical interval endpoints.

use std::fs::File;
use std::io::{Read, Write};
use std::path::Path;

use fmr_core::Status;
use serde::{Deserialize, Serialize};

use crate::sweep::{SweepError, SweepReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RowStatus {
    Resonance,
    Indeterminate,
}

impl From<Status> for RowStatus {
    fn from(s: Status) -> Self {
        match s {
            Status::Resonance => RowStatus::Resonance,
            Status::Indeterminate => RowStatus::Indeterminate,
        }
    }
}

/// One resonance enclosure.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CsvRow {
    pub theta_ext_deg: f64,
    pub branch_index: usize,
    pub h_lo_oe: f64,
    pub h_hi_oe: f64,
    pub status: RowStatus,
    pub boxes_merged: usize,
}

/// One oracle root, or a failed oracle scan (`status = "branch_jump"`, with
/// the field where tracking broke in `h_res_oe`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OracleRow {
    pub theta_ext_deg: f64,
    pub branch: usize,
    pub h_res_oe: f64,
    pub theta_eq_rad: Option<f64>,
    pub phi_eq_rad: Option<f64>,
    pub status: &'static str,
}

impl SweepReport {
    pub fn rows(&self) -> Vec<CsvRow> {
        self.orientations
            .iter()
            .flat_map(|o| {
                o.results.iter().enumerate().map(move |(i, r)| CsvRow {
                    theta_ext_deg: o.theta_ext_deg,
                    branch_index: i,
                    h_lo_oe: r.h_res.lo(),
                    h_hi_oe: r.h_res.hi(),
                    status: r.status.into(),
                    boxes_merged: r.boxes_merged,
                })
            })
            .collect()
    }

    pub fn oracle_rows(&self) -> Vec<OracleRow> {
        let mut rows = Vec::new();
        for o in &self.orientations {
            match &o.oracle {
                None => {}
                Some(Ok(roots)) => rows.extend(roots.iter().map(|r| OracleRow {
                    theta_ext_deg: o.theta_ext_deg,
                    branch: r.branch,
                    h_res_oe: r.h_res,
                    theta_eq_rad: Some(r.theta_eq),
                    phi_eq_rad: Some(r.phi_eq),
                    status: "root",
                })),
                Some(Err(fmr_core::oracle::OracleError::BranchJump { branch, h })) => {
                    rows.push(OracleRow {
                        theta_ext_deg: o.theta_ext_deg,
                        branch: *branch,
                        h_res_oe: *h,
                        theta_eq_rad: None,
                        phi_eq_rad: None,
                        status: "branch_jump",
                    })
                }
                Some(Err(_)) => {}
            }
        }
        rows
    }
}

fn create(path: &Path) -> Result<File, SweepError> {
    File::create(path).map_err(|source| SweepError::Io {
        path: path.to_owned(),
        source,
    })
}

pub fn write_csv<W: Write>(rows: &[CsvRow], w: W) -> Result<(), SweepError> {
    let mut out = csv::Writer::from_writer(w);
    if rows.is_empty() {
        // serde only emits the header alongside the first record
        out.write_record([
            "theta_ext_deg",
            "branch_index",
            "h_lo_oe",
            "h_hi_oe",
            "status",
            "boxes_merged",
        ])?;
    }
    for r in rows {
        out.serialize(r)?;
    }
    out.flush().map_err(csv::Error::from)?;
    Ok(())
}

pub fn emit_csv(report: &SweepReport, path: &Path) -> Result<(), SweepError> {
    write_csv(&report.rows(), create(path)?)
}

pub fn read_csv<R: Read>(r: R) -> Result<Vec<CsvRow>, SweepError> {
    csv::Reader::from_reader(r)
        .deserialize()
        .collect::<Result<Vec<CsvRow>, _>>()
        .map_err(SweepError::from)
}

pub fn parse_csv(path: &Path) -> Result<Vec<CsvRow>, SweepError> {
    let f = File::open(path).map_err(|source| SweepError::Io {
        path: path.to_owned(),
        source,
    })?;
    read_csv(f)
}

pub fn write_oracle_csv<W: Write>(rows: &[OracleRow], w: W) -> Result<(), SweepError> {
    let mut out = csv::Writer::from_writer(w);
    if rows.is_empty() {
        out.write_record([
            "theta_ext_deg",
            "branch",
            "h_res_oe",
            "theta_eq_rad",
            "phi_eq_rad",
            "status",
        ])?;
    }
    for r in rows {
        out.serialize(r)?;
    }
    out.flush().map_err(csv::Error::from)?;
    Ok(())
}

pub fn emit_oracle_csv(report: &SweepReport, path: &Path) -> Result<(), SweepError> {
    write_oracle_csv(&report.oracle_rows(), create(path)?)
}
