use super::kernel::KernelKind;
use super::TransformError;
use crate::numerics::{quad_vertical_line_with, DecayHint, QuadConfig, QuadResult, C64};
use crate::special::{gamma, zeta};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Factor F(s,z) of the Mellin representation of a self-reciprocal function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MellinFactorId {
    /// F = 1 (second kind, gives Φ)
    One,
    /// Γ(s+z/2)Γ(1−s+z/2) (first kind, gives Λ)
    GammaPair,
    /// Γ(s/2+z/4)Γ(½−s/2+z/4) (first kind, gives 𝔉)
    HalfGammaPair,
}

impl MellinFactorId {
    pub fn eval(self, s: C64, z: C64) -> C64 {
        match self {
            MellinFactorId::One => C64::new(1.0, 0.0),
            MellinFactorId::GammaPair => gamma(s + z * 0.5) * gamma(1.0 - s + z * 0.5),
            MellinFactorId::HalfGammaPair => gamma(s * 0.5 + z * 0.25) * gamma(0.5 - s * 0.5 + z * 0.25),
        }
    }

    fn rate(self) -> f64 {
        match self {
            MellinFactorId::One => 0.0,
            MellinFactorId::GammaPair => PI,
            MellinFactorId::HalfGammaPair => 0.5 * PI,
        }
    }
}

const LINE: f64 = 0.5;

/// f(x) = (1/2πi)∫_{(1/2)} x^{−s} M(s) ds, with
/// M = F ζ(1−s−z/2)ζ(1−s+z/2) for the first kind and
/// M = F (2π)^{−2s}Γ(s−z/2)Γ(s+z/2)ζ(s−z/2)ζ(s+z/2) for the second.
pub fn mellin_self_reciprocal(
    kind: KernelKind,
    factor: MellinFactorId,
    z: C64,
    x: f64,
    tol: f64,
    cfg: &QuadConfig,
) -> Result<QuadResult, TransformError> {
    if !(x > 0.0) || !(z.re.abs() < 1.0) {
        return Err(TransformError::BadParams("need x > 0 and -1 < Re z < 1".into()));
    }
    let lx = x.ln();
    let h = z * 0.5;
    let (rate, g): (f64, Box<dyn Fn(C64) -> C64 + Sync>) = match kind {
        KernelKind::First => {
            if factor == MellinFactorId::One {
                return Err(TransformError::BadParams("F = 1 has no first-kind inverse on the line".into()));
            }
            (factor.rate(), Box::new(move |s: C64| (-s * lx).exp() * factor.eval(s, z) * zeta(1.0 - s - h) * zeta(1.0 - s + h)))
        }
        KernelKind::Second => {
            let l2p = (2.0 * PI).ln();
            (
                factor.rate() + PI,
                Box::new(move |s: C64| {
                    (-s * (lx + 2.0 * l2p)).exp() * gamma(s - h) * gamma(s + h) * zeta(s - h) * zeta(s + h) * factor.eval(s, z)
                }),
            )
        }
    };
    let hint = DecayHint::XiEnvelope { rate, power: 2.0 };
    let mut r = quad_vertical_line_with(&g, LINE, hint, tol, cfg)?;
    if z.im == 0.0 {
        r.value.im = 0.0;
    }
    Ok(r)
}
