use super::{half_line, TransformError};
use crate::bessel::{k_raw, kernel_first_raw, kernel_second_raw};
use crate::numerics::{quad_finite_with, quad_oscillatory_with, DecayHint, QuadConfig, QuadResult, C64};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum KernelKind {
    /// cos(πz/2)M_z − sin(πz/2)J_z
    First,
    /// sin(πz/2)J_z − cos(πz/2)L_z
    Second,
}

impl KernelKind {
    pub fn eval(self, z: C64, u: f64) -> C64 {
        match self {
            KernelKind::First => kernel_first_raw(z, u),
            KernelKind::Second => kernel_second_raw(z, u),
        }
    }
}

/// 2π∫₀^∞ f(x) k_z(4π√(xy)) dx, integrated in u = √x where the kernel oscillates with fixed period.
pub fn apply_kernel_transform<F>(
    kind: KernelKind,
    f: &F,
    z: C64,
    y: f64,
    tol: f64,
    cfg: &QuadConfig,
) -> Result<QuadResult, TransformError>
where
    F: Fn(f64) -> C64 + Sync,
{
    if !(y > 0.0) || !(z.re.abs() < 1.0) {
        return Err(TransformError::BadParams("need y > 0 and -1 < Re z < 1".into()));
    }
    let w = 4.0 * PI * y.sqrt();
    let g = |u: f64| {
        if u == 0.0 {
            return C64::new(0.0, 0.0);
        }
        f(u * u) * kind.eval(z, w * u) * (4.0 * PI * u)
    };
    let spacing = PI / w;
    let start = 8.0 * spacing;
    let head = quad_finite_with(&g, 0.0, start, 0.5 * tol, cfg)?;
    let tail = quad_oscillatory_with(&g, start, spacing, 0.5 * tol, cfg)?;
    let mut r = head.plus(tail);
    if z.im == 0.0 {
        r.value.im = 0.0;
    }
    Ok(r)
}

/// Koshlyakov's reciprocities for K_ν; returns (integral, closed value).
///
/// `second == false`: ∫₀^∞ K_ν(t)(cos νπ M_{2ν} − sin νπ J_{2ν})(2√(xt)) dt = K_ν(x).
/// `second == true`: ∫₀^∞ t K_ν(t)(sin νπ J_{2ν} − cos νπ L_{2ν})(2√(xt)) dt = x K_ν(x).
pub fn kosh_reciprocity(second: bool, nu: f64, x: f64, tol: f64, cfg: &QuadConfig) -> Result<(QuadResult, f64), TransformError> {
    if !(nu.abs() < 0.5) || !(x > 0.0) {
        return Err(TransformError::BadParams("need |nu| < 1/2 and x > 0".into()));
    }
    let n = C64::new(nu, 0.0);
    let z = C64::new(2.0 * nu, 0.0);
    let f = |t: f64| {
        let k = k_raw(n, C64::new(t, 0.0));
        let u = 2.0 * (x * t).sqrt();
        if second {
            k * t * KernelKind::Second.eval(z, u)
        } else {
            k * KernelKind::First.eval(z, u)
        }
    };
    let mut r = half_line(&f, 2.0 * nu.abs() + 0.05, 1.0, DecayHint::BesselK { scale: 1.0 }, tol, cfg)?;
    r.value.im = 0.0;
    let kx = k_raw(n, C64::new(x, 0.0)).re;
    Ok((r, if second { x * kx } else { kx }))
}
