//! Classical reference computation of resonance fields.
//!
//! Fix the field, find every stable equilibrium of the magnetization by a
//! dense grid scan plus local refinement, compute ω from the curvature of the
//! energy at each equilibrium, and repeat over a grid of field values,
//! bracketing and bisecting every crossing of `ω = ω_exp`.
//!
//! Nothing here is interval arithmetic and nothing is shared with the
//! interval energy model: the energy is evaluated from the Cartesian
//! magnetization vector, and the curvature from finite differences in
//! geodesic coordinates on the unit sphere, which avoids the coordinate
//! singularity of the polar formula on the wire axis. It can miss roots; it
//! is only meant to cross-check the interval solver.

use std::f64::consts::PI;

use crate::energy::{FieldDirection, MaterialParams};

const GRID_THETA: usize = 721;
const GRID_PHI: usize = 1441;
/// Final step of the coordinate-descent refinement, rad.
const REFINE_TOL: f64 = 1e-10;
/// Probe distance for the stability check and the curvature stencil, rad.
const PROBE: f64 = 1e-4;
/// Two minima closer than this on the sphere are the same equilibrium, rad.
const SAME_POINT: f64 = 1e-3;
/// A tracked minimum moving farther than this in one field step has vanished, rad.
const JUMP: f64 = 0.05;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum OracleError {
    #[error("equilibrium branch {branch} jumped to an untracked state near H = {h} Oe")]
    BranchJump { branch: usize, h: f64 },
    #[error("invalid oracle input: {0}")]
    Invalid(&'static str),
}

/// One resonance field found by the scan.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleRoot {
    pub h_res: f64,
    pub theta_eq: f64,
    pub phi_eq: f64,
    /// `γ·√rhs − ω_exp` at the reported field, rad/s.
    pub omega_residual: f64,
    /// Equilibrium branch the root was found on.
    pub branch: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanConfig {
    /// Field grid step, Oe.
    pub step: f64,
    /// Bracket width at which bisection stops, Oe.
    pub refine: f64,
    /// Spacing of full grid rescans looking for new equilibria, Oe.
    pub rescan_every: f64,
}

impl Default for ScanConfig {
    fn default() -> Self {
        Self {
            step: 0.5,
            refine: 1e-3,
            rescan_every: 500.0,
        }
    }
}

type Vec3 = [f64; 3];

fn dot(a: Vec3, b: Vec3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn unit(theta: f64, phi: f64) -> Vec3 {
    let (st, ct) = theta.sin_cos();
    let (sp, cp) = phi.sin_cos();
    [st * cp, st * sp, ct]
}

/// Polar angles of a unit vector; `phi_hint` is kept on the axis.
fn angles(m: Vec3, phi_hint: f64) -> (f64, f64) {
    let theta = m[2].clamp(-1.0, 1.0).acos();
    let rho = m[0].hypot(m[1]);
    let phi = if rho < 1e-14 {
        phi_hint
    } else {
        m[1].atan2(m[0]).rem_euclid(2.0 * PI)
    };
    (theta, phi)
}

/// Orthonormal tangent basis at `m`, aligned with the polar coordinate lines.
fn tangent_basis(theta: f64, phi: f64) -> (Vec3, Vec3) {
    let (st, ct) = theta.sin_cos();
    let (sp, cp) = phi.sin_cos();
    ([ct * cp, ct * sp, -st], [-sp, cp, 0.0])
}

/// Point reached from `m` along the great circle in tangent direction `a·e1 + b·e2`.
fn geodesic(m: Vec3, e1: Vec3, e2: Vec3, a: f64, b: f64) -> Vec3 {
    let r = a.hypot(b);
    if r == 0.0 {
        return m;
    }
    let (s, c) = r.sin_cos();
    let k = s / r;
    let v = [
        m[0] * c + k * (a * e1[0] + b * e2[0]),
        m[1] * c + k * (a * e1[1] + b * e2[1]),
        m[2] * c + k * (a * e1[2] + b * e2[2]),
    ];
    let n = dot(v, v).sqrt();
    [v[0] / n, v[1] / n, v[2] / n]
}

fn sphere_distance(a: Vec3, b: Vec3) -> f64 {
    dot(a, b).clamp(-1.0, 1.0).acos()
}

/// A stable equilibrium of the magnetization at one field value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Equilibrium {
    pub theta: f64,
    pub phi: f64,
}

impl Equilibrium {
    fn vector(&self) -> Vec3 {
        unit(self.theta, self.phi)
    }
}

/// Scalar energy density evaluated from the Cartesian magnetization direction.
#[derive(Debug, Clone, Copy)]
pub struct Oracle {
    m_s: f64,
    quad: f64,
    k_4: f64,
    h_dir: Vec3,
    phi_h: f64,
    axial: bool,
    gamma: f64,
    omega_exp: f64,
}

impl Oracle {
    pub fn new(dir: &FieldDirection, p: &MaterialParams) -> Self {
        Self::build(dir, p, true)
    }

    /// Drops the demagnetizing term. Test hook.
    pub fn without_demag(dir: &FieldDirection, p: &MaterialParams) -> Self {
        Self::build(dir, p, false)
    }

    fn build(dir: &FieldDirection, p: &MaterialParams, demag: bool) -> Self {
        let m_s = p.four_pi_ms / (4.0 * PI);
        let demag_coeff = if demag { PI * m_s * m_s } else { 0.0 };
        Self {
            m_s,
            quad: demag_coeff + p.k_u,
            k_4: p.k_4,
            h_dir: unit(dir.theta_h, dir.phi_h),
            phi_h: dir.phi_h,
            axial: dir.theta_h.sin().abs() < 1e-12,
            gamma: p.gamma(),
            omega_exp: p.omega_exp,
        }
    }

    /// Energy density for magnetization direction `m` at field `h`.
    pub fn energy_at(&self, m: Vec3, h: f64) -> f64 {
        let transverse = 1.0 - m[2] * m[2];
        -self.m_s * h * dot(m, self.h_dir)
            + self.quad * transverse
            + self.k_4 * transverse * transverse
    }

    pub fn energy(&self, theta: f64, phi: f64, h: f64) -> f64 {
        self.energy_at(unit(theta, phi), h)
    }

    /// Hessian of the energy in geodesic coordinates at `m`: `[aa, bb, ab]`.
    fn hessian(&self, m: Vec3, phi_hint: f64, h: f64) -> [f64; 3] {
        let (theta, phi) = angles(m, phi_hint);
        let (e1, e2) = tangent_basis(theta, phi);
        let d = PROBE;
        let f = |a: f64, b: f64| self.energy_at(geodesic(m, e1, e2, a, b), h);
        let f0 = f(0.0, 0.0);
        let aa = (f(d, 0.0) - 2.0 * f0 + f(-d, 0.0)) / (d * d);
        let bb = (f(0.0, d) - 2.0 * f0 + f(0.0, -d)) / (d * d);
        let ab = (f(d, d) - f(d, -d) - f(-d, d) + f(-d, -d)) / (4.0 * d * d);
        [aa, bb, ab]
    }

    /// `(ω/γ)²` at equilibrium `m`: the Hessian determinant over Ms².
    pub fn omega_over_gamma_sq(&self, eq: &Equilibrium, h: f64) -> f64 {
        let [aa, bb, ab] = self.hessian(eq.vector(), eq.phi, h);
        (aa * bb - ab * ab) / (self.m_s * self.m_s)
    }

    fn resonance_mismatch(&self, eq: &Equilibrium, h: f64) -> f64 {
        let r = self.omega_exp / self.gamma;
        self.omega_over_gamma_sq(eq, h) - r * r
    }

    /// Coordinate descent in geodesic coordinates around the current point.
    fn refine(&self, start: Equilibrium, h: f64, first_step: f64) -> Equilibrium {
        let mut m = start.vector();
        let mut phi_hint = start.phi;
        let mut e = self.energy_at(m, h);
        let mut step = first_step;
        let mut iterations = 0;
        let mut basis = tangent_basis(start.theta, start.phi);
        while step >= REFINE_TOL && iterations < 20_000 {
            iterations += 1;
            let (e1, e2) = basis;
            let mut moved = false;
            for (a, b) in [(step, 0.0), (-step, 0.0), (0.0, step), (0.0, -step)] {
                let cand = geodesic(m, e1, e2, a, b);
                let ec = self.energy_at(cand, h);
                if ec < e {
                    m = cand;
                    e = ec;
                    let (theta, phi) = angles(m, phi_hint);
                    phi_hint = phi;
                    basis = tangent_basis(theta, phi);
                    moved = true;
                    break;
                }
            }
            if moved {
                step *= 2.0;
            } else {
                step *= 0.5;
            }
        }
        let (theta, phi) = angles(m, phi_hint);
        Equilibrium { theta, phi }
    }

    /// Under an axial field every off-axis point lies on a circle of equal
    /// energy, so it is never a strict minimum (and has no restoring torque in φ).
    fn degenerate(&self, eq: &Equilibrium) -> bool {
        self.axial && eq.theta.sin() > 1e-6
    }

    /// Strict local minimum among eight neighbours at distance [`PROBE`].
    fn is_stable(&self, eq: &Equilibrium, h: f64) -> bool {
        if self.degenerate(eq) {
            return false;
        }
        let m = eq.vector();
        let (e1, e2) = tangent_basis(eq.theta, eq.phi);
        let e0 = self.energy_at(m, h);
        let d = PROBE;
        let ring = [
            (d, 0.0),
            (-d, 0.0),
            (0.0, d),
            (0.0, -d),
            (d, d),
            (d, -d),
            (-d, d),
            (-d, -d),
        ];
        let probes_ok = ring
            .iter()
            .all(|&(a, b)| self.energy_at(geodesic(m, e1, e2, a, b), h) > e0);
        let [aa, bb, ab] = self.hessian(m, eq.phi, h);
        probes_ok && aa > 0.0 && aa * bb - ab * ab > 0.0
    }

    /// Every stable equilibrium at field `h`.
    ///
    /// Local minima of a 721 × 1441 grid over `[0,π] × [0,2π]` are refined by
    /// coordinate descent, checked for stability and deduplicated. On the
    /// axis φ is reported as `φ_H`.
    pub fn equilibrium(&self, h: f64) -> Vec<Equilibrium> {
        let nt = GRID_THETA;
        let np = GRID_PHI - 1; // the last column repeats φ = 0
        let dt = PI / (nt - 1) as f64;
        let dp = 2.0 * PI / np as f64;
        let zee = self.m_s * h;
        let mut slope = vec![0.0; nt];
        let mut offset = vec![0.0; nt];
        for (i, (sl, off)) in slope.iter_mut().zip(offset.iter_mut()).enumerate() {
            let (st, ct) = (i as f64 * dt).sin_cos();
            let tr = st * st;
            *sl = -zee * st;
            *off = -zee * ct * self.h_dir[2] + self.quad * tr + self.k_4 * tr * tr;
        }
        let col: Vec<f64> = (0..np)
            .map(|j| {
                let (sp, cp) = (j as f64 * dp).sin_cos();
                self.h_dir[0] * cp + self.h_dir[1] * sp
            })
            .collect();
        let grid: Vec<f64> = (0..nt)
            .flat_map(|i| {
                let (s, o) = (slope[i], offset[i]);
                col.iter().map(move |&u| s * u + o)
            })
            .collect();
        let at = |i: usize, j: usize| grid[i * np + j];

        let mut seeds: Vec<(f64, f64)> = Vec::new();
        // the poles are single points whatever φ is
        for (pole_row, next_row, theta) in [(0, 1, 0.0), (nt - 1, nt - 2, PI)] {
            let e = at(pole_row, 0);
            if (0..np).all(|j| e <= at(next_row, j)) {
                seeds.push((theta, self.phi_h));
            }
        }
        let mut candidate = vec![false; nt * np];
        for i in 1..nt - 1 {
            let (up, row, down) = (
                &grid[(i - 1) * np..i * np],
                &grid[i * np..(i + 1) * np],
                &grid[(i + 1) * np..(i + 2) * np],
            );
            for j in 0..np {
                let e = row[j];
                let (jm, jp) = (
                    if j == 0 { np - 1 } else { j - 1 },
                    if j + 1 == np { 0 } else { j + 1 },
                );
                if row[jm] < e || row[jp] < e {
                    continue;
                }
                candidate[i * np + j] = [jm, j, jp].iter().all(|&jj| up[jj] >= e && down[jj] >= e);
            }
        }
        // one seed per plateau of tied candidates
        let mut seen = vec![false; nt * np];
        for start in 0..nt * np {
            if !candidate[start] || seen[start] {
                continue;
            }
            let mut stack = vec![start];
            seen[start] = true;
            let mut best = start;
            while let Some(k) = stack.pop() {
                let (i, j) = (k / np, k % np);
                let phi_k = j as f64 * dp;
                let phi_b = (best % np) as f64 * dp;
                let dist = |p: f64| {
                    let d = (p - self.phi_h).rem_euclid(2.0 * PI);
                    d.min(2.0 * PI - d)
                };
                if dist(phi_k) < dist(phi_b) {
                    best = k;
                }
                for di in [-1i64, 0, 1] {
                    for dj in [-1i64, 0, 1] {
                        let ii = i as i64 + di;
                        if ii < 1 || ii > nt as i64 - 2 {
                            continue;
                        }
                        let jj = (j as i64 + dj).rem_euclid(np as i64) as usize;
                        let kk = ii as usize * np + jj;
                        if candidate[kk] && !seen[kk] {
                            seen[kk] = true;
                            stack.push(kk);
                        }
                    }
                }
            }
            seeds.push(((best / np) as f64 * dt, (best % np) as f64 * dp));
        }

        let mut found: Vec<Equilibrium> = Vec::new();
        for (theta, phi) in seeds {
            let eq = self.refine(Equilibrium { theta, phi }, h, dt);
            let eq = self.on_axis_phi(eq);
            if !self.is_stable(&eq, h) {
                continue;
            }
            let v = eq.vector();
            if found
                .iter()
                .all(|f| sphere_distance(f.vector(), v) > SAME_POINT)
            {
                found.push(eq);
            }
        }
        found
    }

    fn on_axis_phi(&self, eq: Equilibrium) -> Equilibrium {
        if eq.theta.sin() < 1e-9 {
            Equilibrium {
                theta: eq.theta,
                phi: self.phi_h,
            }
        } else {
            eq
        }
    }

    /// Follows one equilibrium from `from` to field `h`. `None` when it vanished.
    /// Returns the new equilibrium with its resonance mismatch.
    fn follow(&self, from: &Equilibrium, h: f64) -> Option<(Equilibrium, f64)> {
        let eq = self.on_axis_phi(self.refine(*from, h, 1e-4));
        if self.degenerate(&eq) || sphere_distance(eq.vector(), from.vector()) > JUMP {
            return None;
        }
        let [aa, bb, ab] = self.hessian(eq.vector(), eq.phi, h);
        let det = aa * bb - ab * ab;
        if aa <= 0.0 || det <= 0.0 {
            return None;
        }
        let r = self.omega_exp / self.gamma;
        Some((eq, det / (self.m_s * self.m_s) - r * r))
    }

    /// Bisects a sign change of the resonance mismatch between `lo` and `hi`.
    fn bisect_root(
        &self,
        branch: usize,
        mut lo: (f64, Equilibrium, f64),
        hi_h: f64,
        refine: f64,
    ) -> Option<OracleRoot> {
        let mut hi_h = hi_h;
        while hi_h - lo.0 > refine {
            let mid = 0.5 * (lo.0 + hi_h);
            let (eq, f) = self.follow(&lo.1, mid)?;
            if (f > 0.0) == (lo.2 > 0.0) {
                lo = (mid, eq, f);
            } else {
                hi_h = mid;
            }
        }
        let h = 0.5 * (lo.0 + hi_h);
        let (eq, _) = self.follow(&lo.1, h)?;
        let r = self.omega_over_gamma_sq(&eq, h);
        Some(OracleRoot {
            h_res: h,
            theta_eq: eq.theta,
            phi_eq: eq.phi,
            omega_residual: self.gamma * r.max(0.0).sqrt() - self.omega_exp,
            branch,
        })
    }

    /// Resonance fields on every stable equilibrium branch for `0 ≤ H ≤ h_max`.
    pub fn scan_resonances(
        &self,
        h_max: f64,
        cfg: &ScanConfig,
    ) -> Result<Vec<OracleRoot>, OracleError> {
        if !(cfg.step > 0.0 && cfg.refine > 0.0 && cfg.rescan_every > 0.0) {
            return Err(OracleError::Invalid("step sizes must be positive"));
        }
        if !(h_max.is_finite() && h_max >= 0.0) {
            return Err(OracleError::Invalid("h_max must be non-negative"));
        }
        let n = (h_max / cfg.step).floor() as usize;
        let rescan_period = ((cfg.rescan_every / cfg.step).round() as usize).max(1);
        let field = |k: usize| k as f64 * cfg.step;

        struct Branch {
            id: usize,
            eq: Equilibrium,
            mismatch: f64,
            alive: bool,
        }
        let mut branches: Vec<Branch> = Vec::new();
        let mut roots = Vec::new();
        let mut last_rescan = 0usize;
        // landings not yet matched, re-checked one step later
        let mut pending: Vec<(usize, Equilibrium)> = Vec::new();

        for k in 0..=n {
            let h = field(k);
            let mut lost: Vec<(usize, Equilibrium)> = Vec::new();
            for b in branches.iter_mut().filter(|b| b.alive) {
                match self.follow(&b.eq, h) {
                    Some((eq, f)) => {
                        if (f > 0.0) != (b.mismatch > 0.0) {
                            let prev = (field(k - 1), b.eq, b.mismatch);
                            roots.extend(self.bisect_root(b.id, prev, h, cfg.refine));
                        }
                        b.eq = eq;
                        b.mismatch = f;
                    }
                    None => {
                        b.alive = false;
                        lost.push((b.id, b.eq));
                    }
                }
            }

            // branches that ran into each other (e.g. at a pitchfork) are one
            for i in 0..branches.len() {
                if !branches[i].alive {
                    continue;
                }
                let v = branches[i].eq.vector();
                for b in branches[i + 1..].iter_mut().filter(|b| b.alive) {
                    if sphere_distance(b.eq.vector(), v) <= SAME_POINT {
                        b.alive = false;
                    }
                }
            }

            if k == 0 || k - last_rescan >= rescan_period || !lost.is_empty() || !pending.is_empty()
            {
                let fresh = self.equilibrium(h);
                let known = |eq: &Equilibrium| {
                    fresh
                        .iter()
                        .any(|f| sphere_distance(f.vector(), eq.vector()) <= SAME_POINT)
                };
                // a vanished branch must have relaxed into some current minimum;
                // when it vanished exactly at a bifurcation the minimum it joins
                // only turns strict a step later
                for (id, eq) in std::mem::take(&mut pending) {
                    let landing = self.on_axis_phi(self.refine(eq, h, 1e-3));
                    if !known(&landing) && self.is_stable(&landing, h) {
                        return Err(OracleError::BranchJump { branch: id, h });
                    }
                }
                for (id, eq) in &lost {
                    let landing = self.on_axis_phi(self.refine(*eq, h, 1e-3));
                    if !known(&landing) && self.is_stable(&landing, h) {
                        pending.push((*id, landing));
                    }
                }
                for eq in fresh {
                    let v = eq.vector();
                    let tracked = branches
                        .iter()
                        .any(|b| b.alive && sphere_distance(b.eq.vector(), v) <= SAME_POINT);
                    if tracked {
                        continue;
                    }
                    let id = branches.len();
                    if k > 0 {
                        roots.extend(self.backtrack(id, eq, k, last_rescan, cfg));
                    }
                    branches.push(Branch {
                        id,
                        eq,
                        mismatch: self.resonance_mismatch(&eq, h),
                        alive: true,
                    });
                }
                last_rescan = k;
            }
        }
        if let Some(&(branch, _)) = pending.first() {
            return Err(OracleError::BranchJump {
                branch,
                h: field(n),
            });
        }
        roots.sort_by(|a, b| a.h_res.total_cmp(&b.h_res).then(a.branch.cmp(&b.branch)));
        // a branch rediscovered after a false loss retraces roots already found
        let mut unique: Vec<OracleRoot> = Vec::with_capacity(roots.len());
        for r in roots {
            let v = unit(r.theta_eq, r.phi_eq);
            let dup = unique
                .iter()
                .rev()
                .take_while(|u| r.h_res - u.h_res <= 2.0 * cfg.refine)
                .any(|u| sphere_distance(unit(u.theta_eq, u.phi_eq), v) <= SAME_POINT);
            if !dup {
                unique.push(r);
            }
        }
        let roots = unique;
        Ok(roots)
    }

    /// Follows a newly found branch back down in field to the previous rescan.
    fn backtrack(
        &self,
        id: usize,
        eq: Equilibrium,
        k: usize,
        stop: usize,
        cfg: &ScanConfig,
    ) -> Vec<OracleRoot> {
        let mut roots = Vec::new();
        let mut cur = (
            k as f64 * cfg.step,
            eq,
            self.resonance_mismatch(&eq, k as f64 * cfg.step),
        );
        for kk in (stop..k).rev() {
            let h = kk as f64 * cfg.step;
            let Some((prev, f)) = self.follow(&cur.1, h) else {
                break;
            };
            if (f > 0.0) != (cur.2 > 0.0) {
                roots.extend(self.bisect_root(id, (h, prev, f), cur.0, cfg.refine));
            }
            cur = (h, prev, f);
        }
        roots
    }
}

pub fn equilibrium(dir: &FieldDirection, p: &MaterialParams, h: f64) -> Vec<Equilibrium> {
    Oracle::new(dir, p).equilibrium(h)
}

pub fn scan_resonances(
    dir: &FieldDirection,
    p: &MaterialParams,
    h_max: f64,
    step: f64,
) -> Result<Vec<OracleRoot>, OracleError> {
    let cfg = ScanConfig {
        step,
        ..ScanConfig::default()
    };
    Oracle::new(dir, p).scan_resonances(h_max, &cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pure_zeeman_aligns_with_field() {
        let dir = FieldDirection::new(1.0, 2.0).unwrap();
        let p = MaterialParams::default();
        let eqs = Oracle::without_demag(&dir, &p).equilibrium(1000.0);
        assert_eq!(eqs.len(), 1);
        assert!((eqs[0].theta - 1.0).abs() < 1e-6, "{eqs:?}");
        assert!((eqs[0].phi - 2.0).abs() < 1e-6, "{eqs:?}");
    }

    #[test]
    fn axial_field_holds_magnetization_on_axis() {
        let dir = FieldDirection::new(0.0, 0.5).unwrap();
        let p = MaterialParams::default();
        let eqs = Oracle::new(&dir, &p).equilibrium(5000.0);
        assert_eq!(eqs.len(), 1, "{eqs:?}");
        assert!(eqs[0].theta < 1e-6);
        assert_eq!(eqs[0].phi, 0.5);
    }

    #[test]
    fn axial_field_below_switching_keeps_reversed_state() {
        // antiparallel state survives while Ms·H < 2πMs²
        let dir = FieldDirection::new(0.0, 0.0).unwrap();
        let p = MaterialParams::default();
        let eqs = Oracle::new(&dir, &p).equilibrium(1000.0);
        assert_eq!(eqs.len(), 2, "{eqs:?}");
    }

    #[test]
    fn kittel_roots() {
        let p = MaterialParams::default();
        let r = p.omega_exp / p.gamma();
        let cfg = ScanConfig::default();

        let par = Oracle::new(&FieldDirection::new(0.0, 0.0).unwrap(), &p)
            .scan_resonances(10_000.0, &cfg)
            .unwrap();
        assert_eq!(par.len(), 1, "{par:?}");
        assert!((par[0].h_res - (r - 3200.0)).abs() < 2e-3, "{par:?}");

        let perp = Oracle::new(&FieldDirection::new(PI / 2.0, 0.0).unwrap(), &p)
            .scan_resonances(10_000.0, &cfg)
            .unwrap();
        let expected = 1600.0 + (1600.0f64 * 1600.0 + r * r).sqrt();
        assert_eq!(perp.len(), 1, "{perp:?}");
        assert!((perp[0].h_res - expected).abs() < 2e-3, "{perp:?}");
        assert!(perp[0].omega_residual.abs() < 1e-4 * p.omega_exp);
    }

    #[test]
    fn short_scan_finds_nothing() {
        let p = MaterialParams::default();
        let roots =
            scan_resonances(&FieldDirection::new(0.0, 0.0).unwrap(), &p, 50.0, 0.5).unwrap();
        assert!(roots.is_empty());
    }

    #[test]
    fn invalid_step_rejected() {
        let p = MaterialParams::default();
        let dir = FieldDirection::new(0.0, 0.0).unwrap();
        assert!(scan_resonances(&dir, &p, 50.0, 0.0).is_err());
    }
}
