//! Ξ-weighted cosine integrals, weighted x-integrals, Mellin inversion of the
//! self-reciprocal functions, the Koshlyakov kernel transforms and the
//! auxiliary integral evaluations.

mod aux;
mod double;
mod kernel;
mod mellin;
mod sides;
mod xi;

pub use aux::{aux_identity, AuxId, AuxOutcome, AuxParams};
pub use double::{double_integral_side, double_inner, h_chain_integral, k0_phi_single_integral, JPath};
pub use kernel::{apply_kernel_transform, kosh_reciprocity, KernelKind};
pub use mellin::{mellin_self_reciprocal, MellinFactorId};
pub use sides::{bose_middle, side_integral, SideId};
pub use xi::{xi_cos_integral, xi_cos_integral_with, XiWeightId};

use crate::numerics::{quad_finite_with, quad_semi_infinite_with, DecayHint, QuadConfig, QuadError, QuadResult, C64};
use crate::series::{SeriesError, TruncatedSum};
use std::sync::Mutex;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TransformError {
    #[error(transparent)]
    Quad(#[from] QuadError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("invalid parameters: {0}")]
    BadParams(String),
}

/// Records the first series failure raised inside an integrand.
pub(crate) struct Trap(Mutex<Option<SeriesError>>);

impl Trap {
    pub(crate) fn new() -> Self {
        Trap(Mutex::new(None))
    }

    pub(crate) fn take(&self, r: Result<TruncatedSum, SeriesError>) -> C64 {
        match r {
            Ok(s) => s.value,
            Err(e) => {
                let mut g = self.0.lock().unwrap_or_else(|p| p.into_inner());
                if g.is_none() {
                    *g = Some(e);
                }
                C64::new(f64::NAN, 0.0)
            }
        }
    }

    /// Prefers the trapped series error over the quadrature outcome it caused.
    pub(crate) fn finish(self, r: Result<QuadResult, QuadError>) -> Result<QuadResult, TransformError> {
        if let Some(e) = self.0.into_inner().unwrap_or_else(|p| p.into_inner()) {
            return Err(e.into());
        }
        Ok(r?)
    }
}

/// ∫₀^∞ f for f ≲ x^{−a} (a < 1, logs allowed) near 0: x = u^p on [0, split], `hint` beyond.
pub(crate) fn half_line<F>(f: &F, a: f64, split: f64, hint: DecayHint, tol: f64, cfg: &QuadConfig) -> Result<QuadResult, QuadError>
where
    F: Fn(f64) -> C64 + Sync,
{
    let p = if a > 0.0 { (2.0 / (1.0 - a.min(0.9))).max(2.0) } else { 2.0 };
    let ub = split.powf(1.0 / p);
    let g = |u: f64| {
        if u == 0.0 {
            return C64::new(0.0, 0.0);
        }
        f(u.powf(p)) * (p * u.powf(p - 1.0))
    };
    let head = quad_finite_with(&g, 0.0, ub, 0.5 * tol, cfg)?;
    let tail = quad_semi_infinite_with(f, split, hint, 0.5 * tol, cfg)?;
    Ok(head.plus(tail))
}

/// x/(e^x − 1) − 1, accurate for small x.
pub(crate) fn bose_minus_one(x: f64) -> f64 {
    if x.abs() > 0.5 {
        return x / x.exp_m1() - 1.0;
    }
    // x/(e^x−1) = Σ B_n x^n/n!
    let b = crate::special::bernoulli_over_factorial();
    let x2 = x * x;
    let mut s = -0.5 * x;
    let mut p = x2;
    for c in b.iter().take(10) {
        s += c * p;
        p *= x2;
    }
    s
}

#[cfg(test)]
mod tests;
