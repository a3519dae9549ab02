//! Divisor arithmetic and the closed-form series sides of the identities.

mod closed;
mod divisor;
mod kseries;
mod tails;

pub use closed::{
    capital_lambda, capital_lambda0, capital_lambda_at_level, cohen_rhs, ferrar_bracket, frak_f,
    frak_f0, hurwitz_side, lambda_small, omega0, omega_z, phi_small_x, ramanujan_lambda_side,
    ramanujan_lambda_side_with, voronoi_rhs, OmegaRepr,
};
pub use divisor::{divisor_d, divisor_sigma, DivisorTable, DEFAULT_LIMIT};
pub use kseries::{
    cohen_lhs, ferrar_k_sum, guinand_side, kosh_k0_side, kosh_k0_side_with, phi, phi0,
    theta_tail, voronoi_check, voronoi_lhs,
};
pub use tails::{divisor_log_tail, divisor_tail};

use crate::numerics::C64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A truncated infinite sum: value, bound on the neglected part, and terms used.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TruncatedSum {
    pub value: C64,
    pub tail_bound: f64,
    pub terms: usize,
}

impl TruncatedSum {
    pub(crate) fn new(value: C64, tail_bound: f64, terms: usize) -> Self {
        TruncatedSum { value, tail_bound, terms }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SeriesError {
    #[error("n = {n} is outside the divisor table (limit {limit})")]
    OutOfTable { n: usize, limit: usize },
    #[error("parameter sits on a pole: {0}")]
    PoleParameter(&'static str),
    #[error("argument out of range: {0}")]
    BadArgument(&'static str),
}

pub(crate) fn check_strip(z: C64) -> Result<(), SeriesError> {
    if !(z.re.abs() < 1.0) || !z.im.is_finite() {
        return Err(SeriesError::BadArgument("need -1 < Re z < 1"));
    }
    Ok(())
}

pub(crate) fn check_nonzero(z: C64) -> Result<(), SeriesError> {
    if z.norm() == 0.0 {
        return Err(SeriesError::PoleParameter("z = 0 needs the dedicated z = 0 form"));
    }
    Ok(())
}

pub(crate) fn check_positive(x: f64) -> Result<(), SeriesError> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(SeriesError::BadArgument("need x > 0"));
    }
    Ok(())
}

/// Drops the imaginary part when every input is real.
pub(crate) fn realify(v: C64, real: bool) -> C64 {
    if real {
        C64::new(v.re, 0.0)
    } else {
        v
    }
}

/// e^w − 1 without cancellation for small w.
pub(crate) fn cexpm1(w: C64) -> C64 {
    if w.norm() > 0.5 {
        return w.exp() - 1.0;
    }
    let (s, c) = w.im.sin_cos();
    let em = w.re.exp_m1();
    let half = (0.5 * w.im).sin();
    C64::new(em * c - 2.0 * half * half, (em + 1.0) * s)
}

/// Generalized binomial coefficients binom(a, k) for k < n.
pub(crate) fn binomials(a: C64, n: usize) -> Vec<C64> {
    let mut out = Vec::with_capacity(n);
    let mut b = C64::new(1.0, 0.0);
    for k in 0..n {
        out.push(b);
        b = b * (a - k as f64) / (k + 1) as f64;
    }
    out
}
