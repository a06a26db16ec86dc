//! Directed rounding of the four basic operations on `f64`.
//!
//! Each function computes the round-to-nearest result and then uses an
//! error-free transformation (TwoSum, FMA residual) to find out on which side
//! of the exact value it landed. The result is moved by one ulp only when it
//! is on the wrong side, so exact results stay exact.

/// Below this magnitude the FMA residual of a product may itself be rounded.
const TINY: f64 = 1e-290;

#[inline]
fn two_sum_err(a: f64, b: f64, s: f64) -> f64 {
    let bb = s - a;
    (a - (s - bb)) + (b - bb)
}

#[inline]
pub fn add_down(a: f64, b: f64) -> f64 {
    let s = a + b;
    if !s.is_finite() {
        return if s == f64::INFINITY { f64::MAX } else { s };
    }
    if two_sum_err(a, b, s) < 0.0 {
        s.next_down()
    } else {
        s
    }
}

#[inline]
pub fn add_up(a: f64, b: f64) -> f64 {
    let s = a + b;
    if !s.is_finite() {
        return if s == f64::NEG_INFINITY { f64::MIN } else { s };
    }
    if two_sum_err(a, b, s) > 0.0 {
        s.next_up()
    } else {
        s
    }
}

#[inline]
pub fn sub_down(a: f64, b: f64) -> f64 {
    add_down(a, -b)
}

#[inline]
pub fn sub_up(a: f64, b: f64) -> f64 {
    add_up(a, -b)
}

#[inline]
pub fn mul_down(a: f64, b: f64) -> f64 {
    let p = a * b;
    if !p.is_finite() {
        return if p == f64::INFINITY { f64::MAX } else { p };
    }
    if p.abs() < TINY {
        return if p == 0.0 && (a == 0.0 || b == 0.0) {
            0.0
        } else {
            p.next_down()
        };
    }
    if a.mul_add(b, -p) < 0.0 {
        p.next_down()
    } else {
        p
    }
}

#[inline]
pub fn mul_up(a: f64, b: f64) -> f64 {
    let p = a * b;
    if !p.is_finite() {
        return if p == f64::NEG_INFINITY { f64::MIN } else { p };
    }
    if p.abs() < TINY {
        return if p == 0.0 && (a == 0.0 || b == 0.0) {
            0.0
        } else {
            p.next_up()
        };
    }
    if a.mul_add(b, -p) > 0.0 {
        p.next_up()
    } else {
        p
    }
}

/// Sign of `a/b - q` for the rounded quotient `q`, from the exact remainder.
#[inline]
fn div_residual_sign(a: f64, b: f64, q: f64) -> f64 {
    let r = (-q).mul_add(b, a);
    if b > 0.0 {
        r
    } else {
        -r
    }
}

#[inline]
pub fn div_down(a: f64, b: f64) -> f64 {
    let q = a / b;
    if !q.is_finite() {
        return if q == f64::INFINITY { f64::MAX } else { q };
    }
    if q.abs() < TINY {
        return if a == 0.0 { 0.0 } else { q.next_down() };
    }
    if div_residual_sign(a, b, q) < 0.0 {
        q.next_down()
    } else {
        q
    }
}

#[inline]
pub fn div_up(a: f64, b: f64) -> f64 {
    let q = a / b;
    if !q.is_finite() {
        return if q == f64::NEG_INFINITY { f64::MIN } else { q };
    }
    if q.abs() < TINY {
        return if a == 0.0 { 0.0 } else { q.next_up() };
    }
    if div_residual_sign(a, b, q) > 0.0 {
        q.next_up()
    } else {
        q
    }
}
