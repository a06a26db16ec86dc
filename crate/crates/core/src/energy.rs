//! Free-energy density of a magnetized amorphous wire and its partial
//! derivatives, evaluated in interval arithmetic.
//!
//! The magnetization direction is `(θ, φ)` in a polar frame whose axis is the
//! wire axis. In CGS units the energy density is
//!
//! ```text
//! E = -Ms·H·[sinθ sinθH cos(φ-φH) + cosθ cosθH]   Zeeman
//!     + π·Ms²·sin²θ                                demagnetizing (infinite cylinder)
//!     + Ku·sin²θ + K4·sin⁴θ                        anisotropy
//! ```
//!
//! The functional form lives only in this module; the resonance condition and
//! the solver see it through [`EnergyModel`].

use std::f64::consts::PI;

use crate::interval::{Enclosure, Interval, PI_UP};

/// Bohr magneton over ħ in rad·s⁻¹·G⁻¹; the gyromagnetic ratio is `g` times this.
pub const GAMMA_PER_G: f64 = 8.7941e6;

#[derive(Debug, Clone, Copy, PartialEq, thiserror::Error)]
pub enum EnergyError {
    #[error("box outside the model domain: {0}")]
    Domain(&'static str),
    #[error("invalid material parameter: {0}")]
    Params(&'static str),
    #[error("invalid field direction: {0}")]
    Direction(&'static str),
}

/// Physical constants of one simulation run, in CGS units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MaterialParams {
    /// Landé factor.
    pub g: f64,
    /// Saturation magnetization as 4πMs, in Gs.
    pub four_pi_ms: f64,
    /// Uniaxial anisotropy constant, erg/cm³.
    pub k_u: f64,
    /// Fourth-order anisotropy constant, erg/cm³.
    pub k_4: f64,
    /// Microwave angular frequency, rad/s.
    pub omega_exp: f64,
}

impl Default for MaterialParams {
    /// 9.243 GHz, g = 2.00, 4πMs = 6400 Gs, no anisotropy.
    fn default() -> Self {
        Self {
            g: 2.0,
            four_pi_ms: 6400.0,
            k_u: 0.0,
            k_4: 0.0,
            omega_exp: 2.0 * PI * 9.243e9,
        }
    }
}

impl MaterialParams {
    pub fn with_anisotropy(k_u: f64, k_4: f64) -> Self {
        Self {
            k_u,
            k_4,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<(), EnergyError> {
        if !(self.g.is_finite() && self.g > 0.0) {
            return Err(EnergyError::Params("g must be positive"));
        }
        if !(self.four_pi_ms.is_finite() && self.four_pi_ms > 0.0) {
            return Err(EnergyError::Params("4πMs must be positive"));
        }
        if !(self.omega_exp.is_finite() && self.omega_exp > 0.0) {
            return Err(EnergyError::Params("frequency must be positive"));
        }
        if !(self.k_u.is_finite() && self.k_4.is_finite()) {
            return Err(EnergyError::Params("anisotropy constants must be finite"));
        }
        Ok(())
    }

    /// Gyromagnetic ratio in rad·s⁻¹·G⁻¹.
    pub fn gamma(&self) -> f64 {
        self.g * GAMMA_PER_G
    }

    /// Saturation magnetization Ms in emu/cm³.
    pub fn m_s(&self) -> f64 {
        self.four_pi_ms / (4.0 * PI)
    }

    /// Enclosure of `(ω_exp/γ)²`, in Oe².
    pub fn target_sq(&self) -> Interval {
        let omega = Interval::point(self.omega_exp);
        let gamma = Interval::point(self.g) * Interval::point(GAMMA_PER_G);
        omega
            .div_extended(&gamma)
            .bounded()
            .expect("gamma is positive")
            .sqr()
    }
}

/// Polar orientation of the external field relative to the wire axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldDirection {
    pub theta_h: f64,
    pub phi_h: f64,
}

impl FieldDirection {
    /// `theta_h` must lie in `[0, π]`; `phi_h` is wrapped into `[0, 2π)`.
    pub fn new(theta_h: f64, phi_h: f64) -> Result<Self, EnergyError> {
        if !(theta_h.is_finite() && phi_h.is_finite()) {
            return Err(EnergyError::Direction("angles must be finite"));
        }
        if !(0.0..=PI).contains(&theta_h) {
            return Err(EnergyError::Direction("theta_h outside [0, π]"));
        }
        let mut phi_h = phi_h.rem_euclid(2.0 * PI);
        if phi_h >= 2.0 * PI {
            phi_h = 0.0;
        }
        Ok(Self { theta_h, phi_h })
    }

    pub fn from_degrees(theta_deg: f64, phi_deg: f64) -> Result<Self, EnergyError> {
        Self::new(theta_deg.to_radians(), phi_deg.to_radians())
    }
}

/// Enclosures of the first and second partial derivatives of `E` over a box.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyDerivatives {
    pub e_theta: Interval,
    pub e_phi: Interval,
    pub e_tt: Interval,
    pub e_pp: Interval,
    pub e_tp: Interval,
}

/// Quotients by powers of `sinθ` that stay finite at the poles.
///
/// `e_phi_over_sin` is `∂E/∂φ / sinθ` simplified analytically, so it is the
/// φ-component of the gradient on the sphere. `e_pp_over_sin2` equals
/// `∂²E/∂φ² / sin²θ` at every point where `∂E/∂θ = 0` and `sinθ ≠ 0`, and
/// extends continuously to the poles; it is unbounded where `cosθ` may vanish.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoleForms {
    pub e_phi_over_sin: Interval,
    pub e_pp_over_sin2: Enclosure,
}

/// Sines and cosines of one box, shared by every quantity evaluated on it.
#[derive(Debug, Clone, Copy)]
struct BoxTrig {
    s: Interval,
    c: Interval,
    s2t: Interval,
    c2t: Interval,
    /// sin²θ, from the double angle so it has no dependency overestimate.
    ssq: Interval,
    sd: Interval,
    cd: Interval,
    mh: Interval,
}

#[derive(Debug, Clone, Copy)]
pub struct EnergyModel {
    m_s: Interval,
    /// Coefficient of sin²θ: demagnetizing πMs² plus Ku.
    quad: Interval,
    k_4: Interval,
    sin_h: Interval,
    cos_h: Interval,
    phi_h: Interval,
}

impl EnergyModel {
    pub fn new(dir: &FieldDirection, p: &MaterialParams) -> Result<Self, EnergyError> {
        Self::build(dir, p, true)
    }

    /// Same model with the demagnetizing term removed. Test hook.
    pub fn without_demag(dir: &FieldDirection, p: &MaterialParams) -> Result<Self, EnergyError> {
        Self::build(dir, p, false)
    }

    fn build(dir: &FieldDirection, p: &MaterialParams, demag: bool) -> Result<Self, EnergyError> {
        p.validate()?;
        let pi = Interval::new(PI, PI_UP);
        let m_s = Interval::point(p.four_pi_ms)
            .div_extended(&pi.scale(4.0))
            .bounded()
            .expect("π is positive");
        let demag_coeff = if demag {
            pi * m_s.sqr()
        } else {
            Interval::point(0.0)
        };
        let theta_h = Interval::point(dir.theta_h);
        Ok(Self {
            m_s,
            quad: demag_coeff + Interval::point(p.k_u),
            k_4: Interval::point(p.k_4),
            sin_h: theta_h.sin(),
            cos_h: theta_h.cos(),
            phi_h: Interval::point(dir.phi_h),
        })
    }

    /// Enclosure of Ms.
    pub fn m_s(&self) -> Interval {
        self.m_s
    }

    fn trig(&self, theta: Interval, phi: Interval, h: Interval) -> Result<BoxTrig, EnergyError> {
        if theta.lo() < 0.0 || theta.hi() > PI_UP {
            return Err(EnergyError::Domain("theta outside [0, π]"));
        }
        if phi.lo() < 0.0 || phi.hi() > 2.0 * PI_UP {
            return Err(EnergyError::Domain("phi outside [0, 2π]"));
        }
        if h.lo() < 0.0 {
            return Err(EnergyError::Domain("negative field"));
        }
        let two_t = theta.scale(2.0);
        let c2t = two_t.cos();
        let delta = phi - self.phi_h;
        Ok(BoxTrig {
            s: theta.sin(),
            c: theta.cos(),
            s2t: two_t.sin(),
            c2t,
            ssq: (Interval::point(1.0) - c2t).scale(0.5),
            sd: delta.sin(),
            cd: delta.cos(),
            mh: self.m_s * h,
        })
    }

    pub fn energy(
        &self,
        theta: Interval,
        phi: Interval,
        h: Interval,
    ) -> Result<Interval, EnergyError> {
        let t = self.trig(theta, phi, h)?;
        let zeeman = t.mh * (t.s * self.sin_h * t.cd + t.c * self.cos_h);
        Ok(-zeeman + self.quad * t.ssq + self.k_4 * t.ssq.sqr())
    }

    pub fn derivatives(
        &self,
        theta: Interval,
        phi: Interval,
        h: Interval,
    ) -> Result<EnergyDerivatives, EnergyError> {
        let t = self.trig(theta, phi, h)?;
        Ok(self.derivatives_from(&t))
    }

    /// Derivatives and pole forms from a single trig evaluation.
    pub fn evaluate(
        &self,
        theta: Interval,
        phi: Interval,
        h: Interval,
    ) -> Result<(EnergyDerivatives, PoleForms), EnergyError> {
        let t = self.trig(theta, phi, h)?;
        Ok((self.derivatives_from(&t), self.pole_forms_from(&t)))
    }

    pub fn pole_forms(
        &self,
        theta: Interval,
        phi: Interval,
        h: Interval,
    ) -> Result<PoleForms, EnergyError> {
        let t = self.trig(theta, phi, h)?;
        Ok(self.pole_forms_from(&t))
    }

    fn derivatives_from(&self, t: &BoxTrig) -> EnergyDerivatives {
        let mh_sh = t.mh * self.sin_h;
        // 2·Ku'·sinθcosθ + 4·K4·sin³θcosθ = sin2θ·(Ku' + 2·K4·sin²θ)
        let e_theta = -(t.mh * (t.c * self.sin_h * t.cd - t.s * self.cos_h))
            + t.s2t * (self.quad + self.k_4.scale(2.0) * t.ssq);
        let e_tt = t.mh * (t.s * self.sin_h * t.cd + t.c * self.cos_h)
            + self.quad.scale(2.0) * t.c2t
            + self.k_4.scale(2.0) * (t.s2t.sqr() + t.ssq.scale(2.0) * t.c2t);
        EnergyDerivatives {
            e_theta,
            e_phi: mh_sh * t.s * t.sd,
            e_tt,
            e_pp: mh_sh * t.s * t.cd,
            e_tp: mh_sh * t.c * t.sd,
        }
    }

    fn pole_forms_from(&self, t: &BoxTrig) -> PoleForms {
        // From ∂E/∂θ = 0:  Ms·H·sinθH·cos(φ-φH)·cosθ = sinθ·(Ms·H·cosθH + cosθ·(2Ku' + 4K4 sin²θ)),
        // hence ∂²E/∂φ²/sin²θ = Ms·H·cosθH/cosθ + 2Ku' + 4K4 sin²θ.
        let rest = self.quad.scale(2.0) + self.k_4.scale(4.0) * t.ssq;
        let e_pp_over_sin2 = (t.mh * self.cos_h).div_extended(&t.c).map(|q| q + rest);
        PoleForms {
            e_phi_over_sin: t.mh * self.sin_h * t.sd,
            e_pp_over_sin2,
        }
    }
}

pub fn energy(
    theta: Interval,
    phi: Interval,
    h: Interval,
    dir: &FieldDirection,
    p: &MaterialParams,
) -> Result<Interval, EnergyError> {
    EnergyModel::new(dir, p)?.energy(theta, phi, h)
}

pub fn derivatives(
    theta: Interval,
    phi: Interval,
    h: Interval,
    dir: &FieldDirection,
    p: &MaterialParams,
) -> Result<EnergyDerivatives, EnergyError> {
    EnergyModel::new(dir, p)?.derivatives(theta, phi, h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    fn pt(x: f64) -> Interval {
        Interval::point(x)
    }

    fn close(i: Interval, x: f64, rel: f64) -> bool {
        let slack = rel * x.abs().max(1.0);
        i.lo() - slack <= x && x <= i.hi() + slack
    }

    #[test]
    fn aligned_zeeman_only() {
        let p = MaterialParams::default();
        let dir = FieldDirection::new(0.0, 0.0).unwrap();
        let e = energy(pt(0.0), pt(0.3), pt(1000.0), &dir, &p).unwrap();
        let expected = -p.m_s() * 1000.0;
        assert!(e.contains(expected), "{e:?} vs {expected}");
        assert!(e.width() <= 1e-9 * expected.abs());
    }

    #[test]
    fn perpendicular_point_box() {
        let p = MaterialParams::with_anisotropy(1.5e5, -0.7e5);
        let dir = FieldDirection::new(FRAC_PI_2, 1.0).unwrap();
        let h = 2500.0;
        let e = energy(pt(FRAC_PI_2), pt(1.0), pt(h), &dir, &p).unwrap();
        let ms = p.m_s();
        let expected = -ms * h + PI * ms * ms + p.k_u + p.k_4;
        assert!(close(e, expected, 1e-12), "{e:?} vs {expected}");
    }

    #[test]
    fn phi_gradient_vanishes_on_axis() {
        let p = MaterialParams::default();
        let dir = FieldDirection::new(0.0, 0.0).unwrap();
        let d = derivatives(pt(0.0), pt(1.2), pt(500.0), &dir, &p).unwrap();
        assert_eq!(d.e_phi, pt(0.0));
    }

    #[test]
    fn domain_is_checked() {
        let p = MaterialParams::default();
        let dir = FieldDirection::new(0.5, 0.0).unwrap();
        assert!(energy(pt(-0.1), pt(0.0), pt(1.0), &dir, &p).is_err());
        assert!(energy(pt(0.1), pt(7.0), pt(1.0), &dir, &p).is_err());
        assert!(energy(pt(0.1), pt(0.0), pt(-1.0), &dir, &p).is_err());
    }

    #[test]
    fn parameters_are_validated() {
        let p = MaterialParams {
            g: 0.0,
            ..MaterialParams::default()
        };
        assert!(p.validate().is_err());
        let p = MaterialParams {
            four_pi_ms: -1.0,
            ..MaterialParams::default()
        };
        assert!(EnergyModel::new(&FieldDirection::new(0.0, 0.0).unwrap(), &p).is_err());
        assert!(FieldDirection::new(4.0, 0.0).is_err());
        assert_eq!(
            FieldDirection::new(1.0, -FRAC_PI_2).unwrap().phi_h,
            1.5 * PI
        );
    }

    #[test]
    fn pole_form_matches_plain_quotient_at_equilibrium() {
        // Zero anisotropy, field along the axis: equilibrium at θ = 0, where
        // ∂²E/∂φ²/sin²θ → Ms·H + 2πMs².
        let p = MaterialParams::default();
        let dir = FieldDirection::new(0.0, 0.0).unwrap();
        let model = EnergyModel::new(&dir, &p).unwrap();
        let f = model.pole_forms(pt(0.0), pt(0.4), pt(100.0)).unwrap();
        let ms = p.m_s();
        let expected = ms * 100.0 + 2.0 * PI * ms * ms;
        let q = f.e_pp_over_sin2.bounded().unwrap();
        assert!(close(q, expected, 1e-12));
        assert_eq!(f.e_phi_over_sin, pt(0.0));
    }

    #[test]
    fn target_matches_closed_form() {
        let p = MaterialParams::default();
        let t = p.target_sq();
        let r = p.omega_exp / p.gamma();
        assert!(close(t, r * r, 1e-14));
        assert!((r - 3_301.957_095_908_67).abs() < 1e-6);
    }
}
