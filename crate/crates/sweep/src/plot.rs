//! SVG scatter of resonance field against field angle.

use std::fmt::Write as _;
use std::path::Path;

use crate::output::{CsvRow, RowStatus};
use crate::sweep::{SweepError, SweepReport};

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 600.0;
const LEFT: f64 = 80.0;
const RIGHT: f64 = 30.0;
const TOP: f64 = 30.0;
const BOTTOM: f64 = 60.0;

/// Step from the 1-2-5 sequence giving roughly `target` intervals over `span`.
fn tick_step(span: f64, target: f64) -> f64 {
    let raw = span / target;
    let mag = 10f64.powf(raw.log10().floor());
    let norm = raw / mag;
    let nice = if norm <= 1.0 {
        1.0
    } else if norm <= 2.0 {
        2.0
    } else if norm <= 5.0 {
        5.0
    } else {
        10.0
    };
    nice * mag
}

fn ticks(lo: f64, hi: f64, step: f64) -> Vec<f64> {
    let first = (lo / step).ceil() as i64;
    let last = (hi / step + 1e-9).floor() as i64;
    (first..=last).map(|k| k as f64 * step).collect()
}

/// Renders one `<g class="marker …">` per CSV row of `report`.
pub fn render_svg(report: &SweepReport) -> String {
    let rows = report.rows();
    let (mut x_lo, mut x_hi) = report
        .orientations
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), o| {
            (lo.min(o.theta_ext_deg), hi.max(o.theta_ext_deg))
        });
    if !x_lo.is_finite() {
        (x_lo, x_hi) = (0.0, 180.0);
    }
    if x_hi - x_lo < 1.0 {
        x_lo -= 1.0;
        x_hi += 1.0;
    }
    let y_max = rows.iter().map(|r| r.h_hi_oe).fold(0.0, f64::max);
    let y_step = tick_step(y_max.max(100.0), 8.0);
    let y_hi = ((y_max / y_step).floor() + 1.0) * y_step;
    let x_step = tick_step(x_hi - x_lo, 9.0);

    let plot_w = WIDTH - LEFT - RIGHT;
    let plot_h = HEIGHT - TOP - BOTTOM;
    let sx = |x: f64| LEFT + (x - x_lo) / (x_hi - x_lo) * plot_w;
    let sy = |y: f64| TOP + (1.0 - y / y_hi) * plot_h;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<?xml version="1.0" encoding="UTF-8" standalone="yes"?>"#
    );
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(
        s,
        r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#
    );

    // axes
    let (x0, x1, y0, y1) = (LEFT, WIDTH - RIGHT, TOP, HEIGHT - BOTTOM);
    let _ = writeln!(
        s,
        r#"<g class="axes" stroke="black" stroke-width="1" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(s, r#"<line x1="{x0}" y1="{y1}" x2="{x1}" y2="{y1}"/>"#);
    let _ = writeln!(s, r#"<line x1="{x0}" y1="{y0}" x2="{x0}" y2="{y1}"/>"#);
    for t in ticks(x_lo, x_hi, x_step) {
        let x = sx(t);
        let _ = writeln!(
            s,
            r#"<line x1="{x:.2}" y1="{y1}" x2="{x:.2}" y2="{}"/>"#,
            y1 + 5.0
        );
        let _ = writeln!(
            s,
            r#"<text x="{x:.2}" y="{}" text-anchor="middle" stroke="none">{t}</text>"#,
            y1 + 20.0
        );
    }
    for t in ticks(0.0, y_hi, y_step) {
        let y = sy(t);
        let _ = writeln!(
            s,
            r#"<line x1="{}" y1="{y:.2}" x2="{x0}" y2="{y:.2}"/>"#,
            x0 - 5.0
        );
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{:.2}" text-anchor="end" stroke="none">{t}</text>"#,
            x0 - 8.0,
            y + 4.0
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="{}" text-anchor="middle" stroke="none">field angle θ_ext (degrees)</text>"#,
        (x0 + x1) / 2.0,
        HEIGHT - 15.0
    );
    let _ = writeln!(
        s,
        r#"<text x="20" y="{:.2}" text-anchor="middle" stroke="none" transform="rotate(-90 20 {:.2})">resonance field H (Gs)</text>"#,
        (y0 + y1) / 2.0,
        (y0 + y1) / 2.0
    );
    let _ = writeln!(s, "</g>");

    for r in &rows {
        marker(
            &mut s,
            r,
            sx(r.theta_ext_deg),
            sy(r.h_lo_oe),
            sy(r.h_hi_oe),
            sy(0.5 * (r.h_lo_oe + r.h_hi_oe)),
        );
    }
    let _ = writeln!(s, "</svg>");
    s
}

fn marker(s: &mut String, r: &CsvRow, x: f64, y_lo: f64, y_hi: f64, y_mid: f64) {
    let (class, color) = match r.status {
        RowStatus::Resonance => ("resonance", "#1f4e99"),
        RowStatus::Indeterminate => ("indeterminate", "#c0392b"),
    };
    let _ = writeln!(
        s,
        r#"<g class="marker {class}" data-theta="{}" data-branch="{}"><line x1="{x:.2}" y1="{y_lo:.2}" x2="{x:.2}" y2="{y_hi:.2}" stroke="{color}"/><line x1="{:.2}" y1="{y_lo:.2}" x2="{:.2}" y2="{y_lo:.2}" stroke="{color}"/><line x1="{:.2}" y1="{y_hi:.2}" x2="{:.2}" y2="{y_hi:.2}" stroke="{color}"/><circle cx="{x:.2}" cy="{y_mid:.2}" r="2.5" fill="{color}"/></g>"#,
        r.theta_ext_deg,
        r.branch_index,
        x - 3.0,
        x + 3.0,
        x - 3.0,
        x + 3.0,
    );
}

pub fn emit_svg(report: &SweepReport, path: &Path) -> Result<(), SweepError> {
    std::fs::write(path, render_svg(report)).map_err(|source| SweepError::Io {
        path: path.to_owned(),
        source,
    })
}
