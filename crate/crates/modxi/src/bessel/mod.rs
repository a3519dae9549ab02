//! Bessel functions of complex order, Hardy's M/L and the two reciprocity kernels.

use crate::numerics::{quad_finite, C64};
use crate::special::reciprocal_gamma;
use std::f64::consts::PI;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BesselError {
    #[error("order {0} outside the band |Re ν| < 2")]
    OrderOutOfBand(C64),
    #[error("argument {0} is not allowed here")]
    BadArgument(C64),
    #[error("argument {0} lies on the branch cut")]
    BranchCut(C64),
}

/// Bessel order with |Re ν| < 2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Order(C64);

impl Order {
    pub fn new(nu: C64) -> Result<Self, BesselError> {
        if nu.re.abs() < 2.0 && nu.re.is_finite() && nu.im.is_finite() {
            Ok(Order(nu))
        } else {
            Err(BesselError::OrderOutOfBand(nu))
        }
    }
    pub fn value(self) -> C64 {
        self.0
    }
}

const SERIES_LIMIT: f64 = 8.0;
const HANKEL_SEAM: f64 = 20.0;
const INTEGER_GAP: f64 = 1e-4;
const OFFSET: f64 = 1e-3;

fn near_integer(nu: C64) -> Option<i64> {
    let n = nu.re.round();
    if (nu - n).norm() < INTEGER_GAP {
        Some(n as i64)
    } else {
        None
    }
}

fn exact_integer(nu: C64) -> Option<i64> {
    if nu.im == 0.0 && nu.re == nu.re.round() {
        Some(nu.re as i64)
    } else {
        None
    }
}

/// Power series Σ (−ζ²/4)^k / (k! Γ(ν+k+1)) times exp(ν·ln(ζ/2)), given ln(ζ/2) and −ζ²/4.
fn j_series(nu: C64, ln_half: C64, q: C64) -> C64 {
    let mut term = reciprocal_gamma(nu + 1.0);
    let mut sum = term;
    let mut k = 1.0;
    let mut small = 0;
    loop {
        let denom = nu + k;
        if denom.norm() < 1e-300 {
            // only reachable for negative integer orders, handled by the caller
            break;
        }
        term = term * q / (denom * k);
        sum += term;
        if term.norm() <= 1e-17 * sum.norm() {
            small += 1;
            if small >= 2 {
                break;
            }
        } else {
            small = 0;
        }
        k += 1.0;
        if k > 500.0 {
            break;
        }
    }
    (nu * ln_half).exp() * sum
}

fn hankel(nu: C64, x: f64) -> (C64, C64) {
    let mu = nu * nu * 4.0;
    let mut p = C64::new(1.0, 0.0);
    let mut q = C64::new(0.0, 0.0);
    let mut a = C64::new(1.0, 0.0);
    let mut last = f64::INFINITY;
    for k in 1..200 {
        let odd = (2 * k - 1) as f64;
        a = a * (mu - odd * odd) / (8.0 * x * k as f64);
        let mag = a.norm();
        if mag > last {
            break;
        }
        last = mag;
        let sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
        if k % 2 == 1 {
            q += a * sign;
        } else {
            p += a * sign;
        }
        if mag < 1e-18 {
            break;
        }
    }
    let chi = C64::new(x, 0.0) - (nu * 0.5 + 0.25) * PI;
    let amp = (2.0 / (PI * x)).sqrt();
    let j = (p * chi.cos() - q * chi.sin()) * amp;
    let y = (p * chi.sin() + q * chi.cos()) * amp;
    (j, y)
}

fn j_integral(nu: C64, x: f64) -> C64 {
    if let Some(n) = exact_integer(nu) {
        // periodic trapezoid over a full period is spectrally accurate
        let m = 96;
        let mut s = 0.0;
        for k in 0..m {
            let th = 2.0 * PI * k as f64 / m as f64;
            s += (n as f64 * th - x * th.sin()).cos();
        }
        return C64::new(s / m as f64, 0.0);
    }
    let first = quad_finite(|th: f64| (nu * th - x * th.sin()).cos(), 0.0, PI, 1e-16)
        .map(|r| r.value)
        .unwrap_or(C64::new(f64::NAN, 0.0));
    let tmax = (60.0 / x).asinh() + 1.0;
    let second = quad_finite(|t: f64| (-(nu * t) - x * t.sinh()).exp(), 0.0, tmax, 1e-17)
        .map(|r| r.value)
        .unwrap_or(C64::new(f64::NAN, 0.0));
    (first - (nu * PI).sin() * second) / PI
}

pub(crate) fn j_raw(nu: C64, x: f64) -> C64 {
    if x == 0.0 {
        return if nu.norm() == 0.0 { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) };
    }
    if let Some(n) = exact_integer(nu) {
        if n < 0 {
            let s = if n % 2 == 0 { 1.0 } else { -1.0 };
            return j_raw(C64::new(-n as f64, 0.0), x) * s;
        }
    }
    let v = if x <= SERIES_LIMIT {
        j_series(nu, C64::new((0.5 * x).ln(), 0.0), C64::new(-0.25 * x * x, 0.0))
    } else if x <= HANKEL_SEAM {
        j_integral(nu, x)
    } else {
        hankel(nu, x).0
    };
    if nu.im == 0.0 {
        C64::new(v.re, 0.0)
    } else {
        v
    }
}

/// (J_ν cos νπ − J_{−ν}) / sin νπ, valid away from integer orders.
pub(crate) fn y_formula(nu: C64, x: f64) -> C64 {
    let c = (nu * PI).cos();
    let s = (nu * PI).sin();
    (j_raw(nu, x) * c - j_raw(-nu, x)) / s
}

pub(crate) fn y_raw(nu: C64, x: f64) -> C64 {
    if x > HANKEL_SEAM {
        let v = hankel(nu, x).1;
        return if nu.im == 0.0 { C64::new(v.re, 0.0) } else { v };
    }
    let v = if near_integer(nu).is_some() {
        let avg = |h: f64| (y_formula(nu + h, x) + y_formula(nu - h, x)) * 0.5;
        (avg(OFFSET) * 4.0 - avg(2.0 * OFFSET)) / 3.0
    } else {
        y_formula(nu, x)
    };
    if nu.im == 0.0 {
        C64::new(v.re, 0.0)
    } else {
        v
    }
}

pub(crate) fn k_raw(nu: C64, w: C64) -> C64 {
    let phi = w.arg().abs();
    let r = w.norm();
    // strip half-width d trades the discretisation error e^{-2πd/h}
    // against the growth of e^{-w cosh(u+id)} inside the strip
    let mut h = 0.0;
    for i in 1..=12 {
        let d = (0.5 * PI - phi) * i as f64 / 13.0;
        let inner = ((phi + d).cos() * (phi - d).cos()).max(0.0).sqrt();
        let growth = r * (phi.cos() - inner);
        let cand = 2.0 * PI * d / (40.0 + growth);
        if cand > h {
            h = cand;
        }
    }
    h = h.min(0.25);
    let re_w = w.re;
    let f = |u: f64| (-(w * u.cosh())).exp() * (nu * u).cosh();
    let mut sum = f(0.0) * 0.5;
    let mut k = 1usize;
    loop {
        let u = k as f64 * h;
        sum += f(u);
        if re_w * (u.cosh() - 1.0) - nu.re.abs() * u > 45.0 && re_w * u.cosh() > 45.0 {
            break;
        }
        k += 1;
        if k > 100_000 {
            break;
        }
    }
    let v = sum * h;
    if nu.im == 0.0 && w.im == 0.0 {
        C64::new(v.re, 0.0)
    } else {
        v
    }
}

/// J_ν(x) for real x ≥ 0.
pub fn bessel_j(nu: Order, x: f64) -> Result<C64, BesselError> {
    let n = nu.value();
    if x < 0.0 || !x.is_finite() || (x == 0.0 && n.re < 0.0) {
        return Err(BesselError::BadArgument(C64::new(x, 0.0)));
    }
    Ok(j_raw(n, x))
}

/// Y_ν(x) for real x > 0.
pub fn bessel_y(nu: Order, x: f64) -> Result<C64, BesselError> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(BesselError::BadArgument(C64::new(x, 0.0)));
    }
    Ok(y_raw(nu.value(), x))
}

/// I_ν(w) through I_ν(w) = e^{∓iπν/2…} J_ν(e^{±iπ/2…} w) with the principal branches.
pub fn bessel_i(nu: Order, w: C64) -> Result<C64, BesselError> {
    let n = nu.value();
    if w.norm() == 0.0 {
        return Ok(if n.norm() == 0.0 { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) });
    }
    let arg = w.arg();
    if arg == -PI {
        return Err(BesselError::BranchCut(w));
    }
    let q = w * w * 0.25;
    let lr = (0.5 * w.norm()).ln();
    let v = if arg <= 0.5 * PI {
        let ln_half = C64::new(lr, arg + 0.5 * PI);
        (C64::new(0.0, -0.5 * PI) * n).exp() * j_series(n, ln_half, q)
    } else {
        let ln_half = C64::new(lr, arg - 1.5 * PI);
        (C64::new(0.0, 1.5 * PI) * n).exp() * j_series(n, ln_half, q)
    };
    Ok(if n.im == 0.0 && w.im == 0.0 && w.re > 0.0 { C64::new(v.re, 0.0) } else { v })
}

/// K_ν(w) = ∫₀^∞ e^{−w cosh u} cosh(νu) du for Re w > 0.
pub fn bessel_k(nu: Order, w: C64) -> Result<C64, BesselError> {
    if !(w.re > 0.0) {
        return Err(BesselError::BadArgument(w));
    }
    Ok(k_raw(nu.value(), w))
}

/// K_ν(x) for real ν and x > 0.
pub fn bessel_k_real(nu: f64, x: f64) -> f64 {
    k_raw(C64::new(nu, 0.0), C64::new(x, 0.0)).re
}

/// J_ν(x) for real ν.
pub fn bessel_j_real(nu: f64, x: f64) -> f64 {
    j_raw(C64::new(nu, 0.0), x).re
}

/// Hardy's M_ν(x) = (2/π)K_ν(x) − Y_ν(x).
pub fn hardy_m(nu: Order, x: f64) -> Result<C64, BesselError> {
    Ok(bessel_k(nu, C64::new(x, 0.0))? * (2.0 / PI) - bessel_y(nu, x)?)
}

/// Hardy's L_ν(x) = −(2/π)K_ν(x) − Y_ν(x).
pub fn hardy_l(nu: Order, x: f64) -> Result<C64, BesselError> {
    Ok(-bessel_k(nu, C64::new(x, 0.0))? * (2.0 / PI) - bessel_y(nu, x)?)
}

pub(crate) fn m_raw(nu: C64, x: f64) -> C64 {
    k_raw(nu, C64::new(x, 0.0)) * (2.0 / PI) - y_raw(nu, x)
}

pub(crate) fn l_raw(nu: C64, x: f64) -> C64 {
    -k_raw(nu, C64::new(x, 0.0)) * (2.0 / PI) - y_raw(nu, x)
}

/// cos(πz/2)M_z(u) − sin(πz/2)J_z(u).
pub fn kernel_first(z: C64, u: f64) -> Result<C64, BesselError> {
    Order::new(z)?;
    if !(u > 0.0) {
        return Err(BesselError::BadArgument(C64::new(u, 0.0)));
    }
    Ok(kernel_first_raw(z, u))
}

/// sin(πz/2)J_z(u) − cos(πz/2)L_z(u).
pub fn kernel_second(z: C64, u: f64) -> Result<C64, BesselError> {
    Order::new(z)?;
    if !(u > 0.0) {
        return Err(BesselError::BadArgument(C64::new(u, 0.0)));
    }
    Ok(kernel_second_raw(z, u))
}

pub(crate) fn kernel_first_raw(z: C64, u: f64) -> C64 {
    let a = z * (0.5 * PI);
    a.cos() * m_raw(z, u) - a.sin() * j_raw(z, u)
}

pub(crate) fn kernel_second_raw(z: C64, u: f64) -> C64 {
    let a = z * (0.5 * PI);
    a.sin() * j_raw(z, u) - a.cos() * l_raw(z, u)
}
