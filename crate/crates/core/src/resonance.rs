//! The resonance condition and the box elimination tests.
//!
//! The right-hand side of the resonance relation is
//!
//! ```text
//! (ω/γ)² = [E_θθ·E_φφ − E_θφ²] / (Ms·sinθ)²
//! ```
//!
//! taken at a stable equilibrium of the magnetization. A box of
//! `(φ, θ, H)` is eliminated as soon as one test proves it holds no such
//! point with `ω = ω_exp`.

use crate::energy::{
    EnergyDerivatives, EnergyError, EnergyModel, FieldDirection, MaterialParams, PoleForms,
};
use crate::interval::{Enclosure, Interval};
use crate::solver::Box3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Eliminate,
    Keep,
    /// Kept, but the right-hand side was unbounded so only the gradient tests ran.
    Indeterminate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TestId {
    /// T1: does `∂E/∂φ` contain zero?
    PhiGradient,
    /// T2: does `∂E/∂θ` contain zero?
    ThetaGradient,
    /// T3: does the right-hand side contain positive numbers?
    Positivity,
    /// T4: does the right-hand side contain `(ω_exp/γ)²`?
    Frequency,
}

impl TestId {
    pub fn label(&self) -> &'static str {
        match self {
            TestId::PhiGradient => "T1",
            TestId::ThetaGradient => "T2",
            TestId::Positivity => "T3",
            TestId::Frequency => "T4",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TestOutcome {
    pub verdict: Verdict,
    /// The first failing test when eliminated.
    pub reason: Option<TestId>,
}

impl TestOutcome {
    fn eliminate(reason: TestId) -> Self {
        Self {
            verdict: Verdict::Eliminate,
            reason: Some(reason),
        }
    }

    pub fn is_eliminated(&self) -> bool {
        self.verdict == Verdict::Eliminate
    }
}

/// Right-hand side from its textbook form. Unbounded when `sinθ` may vanish.
pub fn rhs_plain(d: &EnergyDerivatives, theta: Interval, m_s: Interval) -> Enclosure {
    let num = d.e_tt * d.e_pp - d.e_tp.sqr();
    let den = (m_s * theta.sin()).sqr();
    num.div_extended(&den)
}

/// Right-hand side rewritten with the stationarity conditions.
///
/// Wherever `∂E/∂φ = ∂E/∂θ = 0` and `sinθ ≠ 0`, the mixed derivative vanishes
/// and `E_φφ/sin²θ` equals [`PoleForms::e_pp_over_sin2`], so this agrees with
/// [`rhs_plain`] at every candidate point and stays finite on the axis.
pub fn rhs_stationary(d: &EnergyDerivatives, f: &PoleForms, m_s: Interval) -> Enclosure {
    let m2 = m_s.sqr();
    match f.e_pp_over_sin2 {
        Enclosure::Bounded(q) => (d.e_tt * q).div_extended(&m2),
        other => other,
    }
}

/// Runs the four tests in order on precomputed enclosures.
///
/// T1 also requires the sphere-gradient component `∂E/∂φ / sinθ` to contain
/// zero, and T3 also requires `E_θθ` to contain positive numbers (a stable
/// minimum has a positive-definite Hessian). An empty `rhs` means the two
/// routes to the right-hand side disagree everywhere in the box, so no
/// stationary point exists there; it fails T3.
pub fn apply_tests(
    d: &EnergyDerivatives,
    e_phi_over_sin: Option<Interval>,
    rhs: Enclosure,
    target: Interval,
) -> TestOutcome {
    let phi_ok = d.e_phi.contains_zero() && e_phi_over_sin.is_none_or(|i| i.contains_zero());
    if !phi_ok {
        return TestOutcome::eliminate(TestId::PhiGradient);
    }
    if !d.e_theta.contains_zero() {
        return TestOutcome::eliminate(TestId::ThetaGradient);
    }
    if d.e_tt.hi() <= 0.0 {
        return TestOutcome::eliminate(TestId::Positivity);
    }
    match rhs {
        Enclosure::Empty => TestOutcome::eliminate(TestId::Positivity),
        Enclosure::Unbounded => TestOutcome {
            verdict: Verdict::Indeterminate,
            reason: None,
        },
        Enclosure::Bounded(r) => {
            if r.hi() <= 0.0 {
                TestOutcome::eliminate(TestId::Positivity)
            } else if r.intersect(&target).is_empty() {
                TestOutcome::eliminate(TestId::Frequency)
            } else {
                TestOutcome {
                    verdict: Verdict::Keep,
                    reason: None,
                }
            }
        }
    }
}

/// Everything needed to test boxes for one field orientation.
#[derive(Debug, Clone, Copy)]
pub struct ResonanceCondition {
    model: EnergyModel,
    target: Interval,
}

impl ResonanceCondition {
    pub fn new(dir: &FieldDirection, p: &MaterialParams) -> Result<Self, EnergyError> {
        Ok(Self {
            model: EnergyModel::new(dir, p)?,
            target: p.target_sq(),
        })
    }

    pub fn model(&self) -> &EnergyModel {
        &self.model
    }

    /// Enclosure of `(ω_exp/γ)²`.
    pub fn target(&self) -> Interval {
        self.target
    }

    /// Intersection of the plain and stationary forms of the right-hand side.
    pub fn rhs(&self, bx: &Box3) -> Result<Enclosure, EnergyError> {
        let (d, f) = self.model.evaluate(bx.theta, bx.phi, bx.h)?;
        Ok(self.rhs_from(bx, &d, &f))
    }

    fn rhs_from(&self, bx: &Box3, d: &EnergyDerivatives, f: &PoleForms) -> Enclosure {
        let m_s = self.model.m_s();
        rhs_plain(d, bx.theta, m_s).intersect(&rhs_stationary(d, f, m_s))
    }

    pub fn test(&self, bx: &Box3) -> Result<TestOutcome, EnergyError> {
        let (d, f) = self.model.evaluate(bx.theta, bx.phi, bx.h)?;
        if !(d.e_phi.contains_zero() && f.e_phi_over_sin.contains_zero()) {
            return Ok(TestOutcome::eliminate(TestId::PhiGradient));
        }
        if !d.e_theta.contains_zero() {
            return Ok(TestOutcome::eliminate(TestId::ThetaGradient));
        }
        let rhs = self.rhs_from(bx, &d, &f);
        Ok(apply_tests(&d, Some(f.e_phi_over_sin), rhs, self.target))
    }
}

/// Plain right-hand side of the resonance relation over a box, in Oe².
pub fn omega_over_gamma_sq(
    bx: &Box3,
    dir: &FieldDirection,
    p: &MaterialParams,
) -> Result<Enclosure, EnergyError> {
    let model = EnergyModel::new(dir, p)?;
    let d = model.derivatives(bx.theta, bx.phi, bx.h)?;
    Ok(rhs_plain(&d, bx.theta, model.m_s()))
}

pub fn test_box(
    bx: &Box3,
    dir: &FieldDirection,
    p: &MaterialParams,
) -> Result<TestOutcome, EnergyError> {
    ResonanceCondition::new(dir, p)?.test(bx)
}
