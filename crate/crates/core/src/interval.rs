//! Closed real intervals with outward-rounded arithmetic.
//!
//! Every operation returns an interval that contains the exact range of the
//! real operation over its inputs. Endpoints are rounded outward with
//! [`crate::round`], so results that are representable come out exact:
//! `[-2,3] + [0,1]` is exactly `[-2,4]`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::round;

/// `π/2` rounded down (the `f64` constant lies below the true value).
const HALF_PI_LO: f64 = std::f64::consts::FRAC_PI_2;
/// `π/2` rounded up.
const HALF_PI_HI: f64 = f64::from_bits(0x3FF9_21FB_5444_2D19);
/// `π` rounded up.
pub const PI_UP: f64 = f64::from_bits(0x4009_21FB_5444_2D19);

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum IntervalError {
    #[error("invalid interval bounds")]
    InvalidBounds,
    #[error("cannot bisect a point interval")]
    PointBisect,
}

/// A non-empty, bounded closed interval `[lo, hi]`.
#[derive(Clone, Copy, PartialEq)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

/// An interval-valued result that may also be empty or unbounded.
///
/// `Unbounded` comes out of a division by an interval containing zero and
/// must be read as "no information": it contains every real number.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Enclosure {
    Empty,
    Bounded(Interval),
    Unbounded,
}

impl Interval {
    /// Panics unless `lo <= hi` and both are finite.
    #[inline]
    pub fn new(lo: f64, hi: f64) -> Self {
        match Self::try_new(lo, hi) {
            Ok(i) => i,
            Err(_) => panic!("invalid interval [{lo}, {hi}]"),
        }
    }

    pub fn try_new(lo: f64, hi: f64) -> Result<Self, IntervalError> {
        if lo.is_finite() && hi.is_finite() && lo <= hi {
            Ok(Self { lo, hi })
        } else {
            Err(IntervalError::InvalidBounds)
        }
    }

    #[inline]
    pub fn point(x: f64) -> Self {
        Self::new(x, x)
    }

    #[inline]
    pub fn lo(&self) -> f64 {
        self.lo
    }

    #[inline]
    pub fn hi(&self) -> f64 {
        self.hi
    }

    /// Upper bound on `hi - lo`.
    #[inline]
    pub fn width(&self) -> f64 {
        round::sub_up(self.hi, self.lo)
    }

    #[inline]
    pub fn midpoint(&self) -> f64 {
        let m = 0.5 * self.lo + 0.5 * self.hi;
        m.clamp(self.lo, self.hi)
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    /// Endpoint-inclusive membership.
    #[inline]
    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    #[inline]
    pub fn contains_zero(&self) -> bool {
        self.contains(0.0)
    }

    pub fn is_subset_of(&self, other: &Interval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    /// Largest absolute value in the interval.
    pub fn mag(&self) -> f64 {
        self.lo.abs().max(self.hi.abs())
    }

    pub fn hull(&self, other: &Interval) -> Interval {
        Interval {
            lo: self.lo.min(other.lo),
            hi: self.hi.max(other.hi),
        }
    }

    pub fn intersect(&self, other: &Interval) -> Enclosure {
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi);
        if lo <= hi {
            Enclosure::Bounded(Interval { lo, hi })
        } else {
            Enclosure::Empty
        }
    }

    /// Splits at the midpoint into two halves that share the midpoint.
    pub fn bisect(&self) -> Result<(Interval, Interval), IntervalError> {
        let m = self.midpoint();
        if m <= self.lo || m >= self.hi {
            return Err(IntervalError::PointBisect);
        }
        Ok((
            Interval { lo: self.lo, hi: m },
            Interval { lo: m, hi: self.hi },
        ))
    }

    /// Range of `x²`, using the dependent form so the result is never negative.
    pub fn sqr(&self) -> Interval {
        let (lo, hi) = (self.lo, self.hi);
        if lo >= 0.0 {
            Interval {
                lo: round::mul_down(lo, lo),
                hi: round::mul_up(hi, hi),
            }
        } else if hi <= 0.0 {
            Interval {
                lo: round::mul_down(hi, hi),
                hi: round::mul_up(lo, lo),
            }
        } else {
            Interval {
                lo: 0.0,
                hi: round::mul_up(lo, lo).max(round::mul_up(hi, hi)),
            }
        }
    }

    /// Multiplication by an exact scalar.
    pub fn scale(&self, k: f64) -> Interval {
        *self * Interval::point(k)
    }

    /// Division; yields [`Enclosure::Unbounded`] when the divisor contains zero.
    pub fn div_extended(&self, rhs: &Interval) -> Enclosure {
        if rhs.contains_zero() {
            return Enclosure::Unbounded;
        }
        let cands = [
            (self.lo, rhs.lo),
            (self.lo, rhs.hi),
            (self.hi, rhs.lo),
            (self.hi, rhs.hi),
        ];
        let lo = cands
            .iter()
            .map(|&(a, b)| round::div_down(a, b))
            .fold(f64::INFINITY, f64::min);
        let hi = cands
            .iter()
            .map(|&(a, b)| round::div_up(a, b))
            .fold(f64::NEG_INFINITY, f64::max);
        Enclosure::Bounded(Interval { lo, hi })
    }

    pub fn sin(&self) -> Interval {
        // sin has its maxima at j·π/2 for j ≡ 1 (mod 4), minima for j ≡ 3
        self.trig(sin_bounds, 1, 3)
    }

    pub fn cos(&self) -> Interval {
        self.trig(cos_bounds, 0, 2)
    }

    fn trig(&self, eval: fn(f64) -> (f64, f64), max_class: i64, min_class: i64) -> Interval {
        if self.width() >= 4.0 * HALF_PI_LO {
            return Interval { lo: -1.0, hi: 1.0 };
        }
        let (a_lo, a_hi) = eval(self.lo);
        let (b_lo, b_hi) = eval(self.hi);
        let mut lo = a_lo.min(b_lo);
        let mut hi = a_hi.max(b_hi);

        let first = (self.lo / HALF_PI_HI).floor() as i64 - 1;
        let last = (self.hi / HALF_PI_LO).ceil() as i64 + 1;
        for j in first..=last {
            let (c_lo, c_hi) = half_pi_multiple(j);
            if c_hi < self.lo || c_lo > self.hi {
                continue;
            }
            let class = j.rem_euclid(4);
            if class == max_class {
                hi = 1.0;
            } else if class == min_class {
                lo = -1.0;
            }
        }
        Interval { lo, hi }
    }
}

/// Enclosure of `j·π/2`.
fn half_pi_multiple(j: i64) -> (f64, f64) {
    let k = j as f64;
    if j >= 0 {
        (round::mul_down(k, HALF_PI_LO), round::mul_up(k, HALF_PI_HI))
    } else {
        (round::mul_down(k, HALF_PI_HI), round::mul_up(k, HALF_PI_LO))
    }
}

// The platform sin/cos are accurate to well under one ulp on the argument
// range used here; two ulps each way covers that.
fn sin_bounds(x: f64) -> (f64, f64) {
    if x == 0.0 {
        return (0.0, 0.0);
    }
    let s = x.sin();
    (
        s.next_down().next_down().max(-1.0),
        s.next_up().next_up().min(1.0),
    )
}

fn cos_bounds(x: f64) -> (f64, f64) {
    if x == 0.0 {
        return (1.0, 1.0);
    }
    let c = x.cos();
    (
        c.next_down().next_down().max(-1.0),
        c.next_up().next_up().min(1.0),
    )
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?}, {:?}]", self.lo, self.hi)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl From<f64> for Interval {
    fn from(x: f64) -> Self {
        Interval::point(x)
    }
}

impl Add for Interval {
    type Output = Interval;
    #[inline]
    fn add(self, rhs: Interval) -> Interval {
        Interval {
            lo: round::add_down(self.lo, rhs.lo),
            hi: round::add_up(self.hi, rhs.hi),
        }
    }
}

impl Sub for Interval {
    type Output = Interval;
    #[inline]
    fn sub(self, rhs: Interval) -> Interval {
        Interval {
            lo: round::sub_down(self.lo, rhs.hi),
            hi: round::sub_up(self.hi, rhs.lo),
        }
    }
}

impl Neg for Interval {
    type Output = Interval;
    #[inline]
    fn neg(self) -> Interval {
        Interval {
            lo: -self.hi,
            hi: -self.lo,
        }
    }
}

impl Mul for Interval {
    type Output = Interval;
    #[inline]
    fn mul(self, rhs: Interval) -> Interval {
        let (a, b, c, d) = (self.lo, self.hi, rhs.lo, rhs.hi);
        let lo = round::mul_down(a, c)
            .min(round::mul_down(a, d))
            .min(round::mul_down(b, c))
            .min(round::mul_down(b, d));
        let hi = round::mul_up(a, c)
            .max(round::mul_up(a, d))
            .max(round::mul_up(b, c))
            .max(round::mul_up(b, d));
        Interval { lo, hi }
    }
}

impl Enclosure {
    pub fn bounded(&self) -> Option<Interval> {
        match self {
            Enclosure::Bounded(i) => Some(*i),
            _ => None,
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, Enclosure::Empty)
    }

    pub fn is_unbounded(&self) -> bool {
        matches!(self, Enclosure::Unbounded)
    }

    pub fn contains(&self, x: f64) -> bool {
        match self {
            Enclosure::Empty => false,
            Enclosure::Bounded(i) => i.contains(x),
            Enclosure::Unbounded => true,
        }
    }

    pub fn intersect(&self, other: &Enclosure) -> Enclosure {
        match (self, other) {
            (Enclosure::Empty, _) | (_, Enclosure::Empty) => Enclosure::Empty,
            (Enclosure::Unbounded, x) | (x, Enclosure::Unbounded) => *x,
            (Enclosure::Bounded(a), Enclosure::Bounded(b)) => a.intersect(b),
        }
    }

    /// Applies `f` to a bounded value, passing `Empty` and `Unbounded` through.
    pub fn map(self, f: impl FnOnce(Interval) -> Interval) -> Enclosure {
        match self {
            Enclosure::Bounded(i) => Enclosure::Bounded(f(i)),
            other => other,
        }
    }
}

impl From<Interval> for Enclosure {
    fn from(i: Interval) -> Self {
        Enclosure::Bounded(i)
    }
}
