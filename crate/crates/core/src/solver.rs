//! Branch-and-bound search for every resonance field of one orientation.
//!
//! The search starts from the box `[0,2π] × [0,π] × [0,H_max]` and repeatedly
//! takes the largest box off the work list, splits it in two along its widest
//! dimension and re-tests both halves. Widths are measured in units of the
//! tolerances, so a box is "small" once every normalized width is at most 1.
//! The φ width is taken as arc length, `Δφ·max|sinθ|`, because φ degenerates
//! on the wire axis.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::energy::{EnergyError, FieldDirection, MaterialParams};
use crate::interval::{Interval, PI_UP};
use crate::resonance::{ResonanceCondition, TestId, Verdict};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SolverError {
    #[error("work list exceeded {cap} boxes")]
    ListOverflow { cap: usize },
    #[error("invalid solver configuration: {0}")]
    InvalidConfig(&'static str),
    #[error(transparent)]
    Energy(#[from] EnergyError),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig {
    /// Upper end of the field search range, Oe.
    pub h_max: f64,
    /// Angular tolerance, rad.
    pub tol_angle: f64,
    /// Field tolerance, Oe.
    pub tol_field: f64,
    /// Work-list length at which the search gives up.
    pub max_list: usize,
    /// Largest field gap bridged when gluing, Oe.
    pub glue_gap: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            h_max: 10_000.0,
            tol_angle: 2e-6,
            tol_field: 0.005,
            max_list: 100_000,
            glue_gap: 0.01,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<(), SolverError> {
        let positive = |x: f64| x.is_finite() && x > 0.0;
        if !positive(self.h_max) {
            return Err(SolverError::InvalidConfig("h_max must be positive"));
        }
        if !positive(self.tol_angle) || !positive(self.tol_field) {
            return Err(SolverError::InvalidConfig("tolerances must be positive"));
        }
        if !positive(self.glue_gap) {
            return Err(SolverError::InvalidConfig("glue_gap must be positive"));
        }
        if self.max_list == 0 {
            return Err(SolverError::InvalidConfig("max_list must be positive"));
        }
        Ok(())
    }

    /// Largest angular gap bridged when gluing.
    fn angle_gap(&self) -> f64 {
        2.0 * self.tol_angle
    }
}

/// One search box `Δφ × Δθ × ΔH`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Box3 {
    pub phi: Interval,
    pub theta: Interval,
    pub h: Interval,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dim {
    Phi,
    Theta,
    H,
}

impl Box3 {
    pub fn initial(h_max: f64) -> Self {
        Self {
            phi: Interval::new(0.0, 2.0 * PI_UP),
            theta: Interval::new(0.0, PI_UP),
            h: Interval::new(0.0, h_max),
        }
    }

    pub fn point(phi: f64, theta: f64, h: f64) -> Self {
        Self {
            phi: Interval::point(phi),
            theta: Interval::point(theta),
            h: Interval::point(h),
        }
    }

    pub fn contains(&self, phi: f64, theta: f64, h: f64) -> bool {
        self.phi.contains(phi) && self.theta.contains(theta) && self.h.contains(h)
    }

    /// Widths in tolerance units, in the order φ (arc length), θ, H.
    pub fn normalized_widths(&self, cfg: &SolverConfig) -> [f64; 3] {
        let max_sin = 1.0f64
            .min(self.theta.hi())
            .min(PI_UP - self.theta.lo())
            .max(0.0);
        [
            self.phi.width() * max_sin / cfg.tol_angle,
            self.theta.width() / cfg.tol_angle,
            self.h.width() / cfg.tol_field,
        ]
    }

    /// Dimension with the largest normalized width; ties go to φ, then θ.
    pub fn widest(&self, cfg: &SolverConfig) -> (Dim, f64) {
        let w = self.normalized_widths(cfg);
        let mut best = (Dim::Phi, w[0]);
        if w[1] > best.1 {
            best = (Dim::Theta, w[1]);
        }
        if w[2] > best.1 {
            best = (Dim::H, w[2]);
        }
        best
    }

    pub fn is_small(&self, cfg: &SolverConfig) -> bool {
        self.widest(cfg).1 <= 1.0
    }

    pub fn split(&self, dim: Dim) -> Option<(Box3, Box3)> {
        let (a, b) = match dim {
            Dim::Phi => self.phi.bisect().ok()?,
            Dim::Theta => self.theta.bisect().ok()?,
            Dim::H => self.h.bisect().ok()?,
        };
        let with = |i: Interval| {
            let mut c = *self;
            match dim {
                Dim::Phi => c.phi = i,
                Dim::Theta => c.theta = i,
                Dim::H => c.h = i,
            }
            c
        };
        Some((with(a), with(b)))
    }

    fn normalized_volume(&self, cfg: &SolverConfig) -> f64 {
        self.normalized_widths(cfg).iter().product()
    }
}

/// A box that reached tolerance without being eliminated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergedBox {
    pub bx: Box3,
    /// The right-hand side was unbounded on this box.
    pub unbounded: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Resonance,
    /// Every glued box sat where the resonance relation could not be bounded.
    Indeterminate,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Resonance => "resonance",
            Status::Indeterminate => "indeterminate",
        }
    }
}

/// Glued enclosure of one resonance field.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResonanceResult {
    pub h_res: Interval,
    pub theta_hull: Interval,
    /// May extend past 2π when the cluster straddles φ = 0.
    pub phi_hull: Interval,
    pub status: Status,
    pub boxes_merged: usize,
}

/// A box removed from the search, with the test it failed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Elimination {
    pub bx: Box3,
    pub reason: TestId,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolverStats {
    pub boxes_tested: usize,
    pub boxes_eliminated: usize,
    pub max_list_len: usize,
}

/// What one [`Solver::step`] did.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepEvent {
    /// The work list was already empty.
    Finished,
    /// The largest box was small and moved to the converged set.
    Converged,
    /// The largest box was split; this many children survived.
    Split { dim: Dim, survivors: usize },
}

struct Entry {
    key: f64,
    seq: u64,
    bx: Box3,
    unbounded: bool,
}

impl PartialEq for Entry {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Entry {}

impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Entry {
    // Largest key first; among equal keys, earliest insertion first.
    fn cmp(&self, other: &Self) -> Ordering {
        self.key
            .total_cmp(&other.key)
            .then_with(|| other.seq.cmp(&self.seq))
    }
}

/// The branch-and-bound state for one orientation.
pub struct Solver {
    cond: ResonanceCondition,
    cfg: SolverConfig,
    list: BinaryHeap<Entry>,
    seq: u64,
    converged: Vec<ConvergedBox>,
    trace: Option<Vec<Elimination>>,
    stats: SolverStats,
}

impl Solver {
    /// Tests the initial box and seeds the work list with it if it survives.
    pub fn new(
        dir: &FieldDirection,
        p: &MaterialParams,
        cfg: SolverConfig,
    ) -> Result<Self, SolverError> {
        Self::build(dir, p, cfg, false)
    }

    /// Like [`Solver::new`], additionally recording every eliminated box.
    pub fn with_trace(
        dir: &FieldDirection,
        p: &MaterialParams,
        cfg: SolverConfig,
    ) -> Result<Self, SolverError> {
        Self::build(dir, p, cfg, true)
    }

    fn build(
        dir: &FieldDirection,
        p: &MaterialParams,
        cfg: SolverConfig,
        trace: bool,
    ) -> Result<Self, SolverError> {
        cfg.validate()?;
        let mut solver = Self {
            cond: ResonanceCondition::new(dir, p)?,
            cfg,
            list: BinaryHeap::new(),
            seq: 0,
            converged: Vec::new(),
            trace: trace.then(Vec::new),
            stats: SolverStats::default(),
        };
        solver.consider(Box3::initial(cfg.h_max))?;
        Ok(solver)
    }

    pub fn config(&self) -> &SolverConfig {
        &self.cfg
    }

    pub fn list_len(&self) -> usize {
        self.list.len()
    }

    pub fn converged(&self) -> &[ConvergedBox] {
        &self.converged
    }

    pub fn trace(&self) -> Option<&[Elimination]> {
        self.trace.as_deref()
    }

    pub fn stats(&self) -> SolverStats {
        self.stats
    }

    pub fn boxes(&self) -> impl Iterator<Item = &Box3> {
        self.list.iter().map(|e| &e.bx)
    }

    /// Sum of normalized volumes of the boxes still on the work list.
    pub fn measure(&self) -> f64 {
        self.list
            .iter()
            .map(|e| e.bx.normalized_volume(&self.cfg))
            .sum()
    }

    /// Tests `bx` and queues it if it survives. Returns whether it survived.
    fn consider(&mut self, bx: Box3) -> Result<bool, SolverError> {
        self.stats.boxes_tested += 1;
        let out = self.cond.test(&bx)?;
        if let (Verdict::Eliminate, Some(reason)) = (out.verdict, out.reason) {
            self.stats.boxes_eliminated += 1;
            if let Some(t) = self.trace.as_mut() {
                t.push(Elimination { bx, reason });
            }
            return Ok(false);
        }
        let key = bx.widest(&self.cfg).1;
        self.list.push(Entry {
            key,
            seq: self.seq,
            bx,
            unbounded: out.verdict == Verdict::Indeterminate,
        });
        self.seq += 1;
        self.stats.max_list_len = self.stats.max_list_len.max(self.list.len());
        if self.list.len() > self.cfg.max_list {
            return Err(SolverError::ListOverflow {
                cap: self.cfg.max_list,
            });
        }
        Ok(true)
    }

    /// Processes the largest box on the work list.
    pub fn step(&mut self) -> Result<StepEvent, SolverError> {
        let Some(entry) = self.list.pop() else {
            return Ok(StepEvent::Finished);
        };
        let (dim, width) = entry.bx.widest(&self.cfg);
        let halves = if width <= 1.0 {
            None
        } else {
            entry.bx.split(dim)
        };
        let Some((a, b)) = halves else {
            self.converged.push(ConvergedBox {
                bx: entry.bx,
                unbounded: entry.unbounded,
            });
            return Ok(StepEvent::Converged);
        };
        let survivors = usize::from(self.consider(a)?) + usize::from(self.consider(b)?);
        Ok(StepEvent::Split { dim, survivors })
    }

    /// Runs to completion and glues the converged boxes.
    pub fn run(&mut self) -> Result<Vec<ResonanceResult>, SolverError> {
        while self.step()? != StepEvent::Finished {}
        Ok(glue(&self.converged, &self.cfg))
    }
}

pub fn solve_orientation(
    dir: &FieldDirection,
    p: &MaterialParams,
    cfg: &SolverConfig,
) -> Result<Vec<ResonanceResult>, SolverError> {
    Solver::new(dir, p, *cfg)?.run()
}

/// Gap between two intervals; zero when they overlap or touch.
fn gap(a: &Interval, b: &Interval) -> f64 {
    (a.lo().max(b.lo()) - a.hi().min(b.hi())).max(0.0)
}

fn phi_gap(a: &Interval, b: &Interval) -> f64 {
    let period = 2.0 * std::f64::consts::PI;
    let shifted = |d: f64| Interval::new(b.lo() + d, b.hi() + d);
    gap(a, b)
        .min(gap(a, &shifted(period)))
        .min(gap(a, &shifted(-period)))
}

fn near_same_pole(a: &Box3, b: &Box3, tol: f64) -> bool {
    (a.theta.lo() <= tol && b.theta.lo() <= tol)
        || (a.theta.hi() >= PI_UP - tol && b.theta.hi() >= PI_UP - tol)
}

fn neighbours(a: &Box3, b: &Box3, cfg: &SolverConfig) -> bool {
    let ag = cfg.angle_gap();
    gap(&a.h, &b.h) <= cfg.glue_gap
        && gap(&a.theta, &b.theta) <= ag
        && (phi_gap(&a.phi, &b.phi) <= ag || near_same_pole(a, b, ag))
}

fn find(parent: &mut [usize], mut i: usize) -> usize {
    while parent[i] != i {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    i
}

/// Merges neighbouring converged boxes into resonance enclosures.
///
/// Two boxes are neighbours when their field intervals are within
/// `glue_gap` and their angle intervals within two angular tolerances, with
/// φ compared modulo 2π and ignored for boxes touching the same pole.
/// Results are ordered by the midpoint of `h_res`.
pub fn glue(converged: &[ConvergedBox], cfg: &SolverConfig) -> Vec<ResonanceResult> {
    let n = converged.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        converged[i]
            .bx
            .h
            .lo()
            .total_cmp(&converged[j].bx.h.lo())
            .then(i.cmp(&j))
    });
    let max_w = converged.iter().map(|c| c.bx.h.width()).fold(0.0, f64::max);
    let reach = max_w + cfg.glue_gap;

    let mut parent: Vec<usize> = (0..n).collect();
    for (k, &i) in order.iter().enumerate() {
        let hi_lo = converged[i].bx.h.lo();
        for &j in &order[k + 1..] {
            if converged[j].bx.h.lo() - hi_lo > reach {
                break;
            }
            if neighbours(&converged[i].bx, &converged[j].bx, cfg) {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri.max(rj)] = ri.min(rj);
                }
            }
        }
    }

    let mut clusters: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for i in 0..n {
        let r = find(&mut parent, i);
        if slot[r] == usize::MAX {
            slot[r] = clusters.len();
            clusters.push(Vec::new());
        }
        clusters[slot[r]].push(i);
    }

    let mut results: Vec<ResonanceResult> = clusters
        .iter()
        .map(|members| summarize(members.iter().map(|&i| &converged[i])))
        .collect();
    results.sort_by(|a, b| {
        a.h_res
            .midpoint()
            .total_cmp(&b.h_res.midpoint())
            .then(a.theta_hull.lo().total_cmp(&b.theta_hull.lo()))
            .then(a.phi_hull.lo().total_cmp(&b.phi_hull.lo()))
    });
    results
}

fn summarize<'a>(members: impl Iterator<Item = &'a ConvergedBox> + Clone) -> ResonanceResult {
    let first = members.clone().next().expect("clusters are non-empty");
    let mut h = first.bx.h;
    let mut theta = first.bx.theta;
    let mut phi = first.bx.phi;
    let mut count = 0;
    let mut all_unbounded = true;
    for c in members.clone() {
        h = h.hull(&c.bx.h);
        theta = theta.hull(&c.bx.theta);
        phi = phi.hull(&c.bx.phi);
        all_unbounded &= c.unbounded;
        count += 1;
    }
    // A cluster straddling φ = 0 is reported as one arc past 2π.
    if phi.width() > std::f64::consts::PI {
        let period = 2.0 * std::f64::consts::PI;
        let mut wrapped: Option<Interval> = None;
        for c in members {
            let p = if c.bx.phi.hi() < std::f64::consts::PI {
                Interval::new(c.bx.phi.lo() + period, c.bx.phi.hi() + period)
            } else {
                c.bx.phi
            };
            wrapped = Some(wrapped.map_or(p, |w| w.hull(&p)));
        }
        let wrapped = wrapped.expect("clusters are non-empty");
        if wrapped.width() < phi.width() {
            phi = wrapped;
        }
    }
    ResonanceResult {
        h_res: h,
        theta_hull: theta,
        phi_hull: phi,
        status: if all_unbounded {
            Status::Indeterminate
        } else {
            Status::Resonance
        },
        boxes_merged: count,
    }
}
