use super::TransformError;
use crate::numerics::{quad_semi_infinite_with, DecayHint, QuadConfig, QuadResult, C64};
use crate::special::{log_gamma, xi_big};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Weights w(z,t) of the Ξ-cosine integrals ∫₀^∞ w(z,t) Ξ-factor cos(½t log α) dt.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum XiWeightId {
    /// Ξ(t/2)/(1+t²)
    Jacobi,
    /// Ξ²(t/2)/(1+t²)²
    KoshK0,
    /// Γ((3±it)/4)Ξ(t/2)/(1+t²)
    RamanujanGauss,
    /// |Γ((−1+it)/4)|²Ξ²(t/2)/(1+t²)
    RamanujanLambda,
    /// 16|Γ((3+it)/4)|²Ξ²(t/2)/(1+t²)²
    RamanujanLambdaAlt,
    /// Ξ(t/2)/((1+t²)cosh(πt/2))
    Hardy,
    /// Ξ²(t/2)/((1+t²)²cosh(πt/2))
    KoshLambda,
    /// Γ((z+3±it)/4)Γ((z+1±it)/4) · pair / D(z,t)
    LambdaZ,
    /// Γ((z+3±it)/4)Γ((−z+3±it)/4) · pair / D(z,t)
    PhiZ,
    /// |Γ((−1+it)/4)|⁴Ξ²(t/2)
    PhiZ0,
    /// Γ((1±it)/4)Ξ(t/2)/(1+t²)
    Ferrar,
    /// Γ((z+1±it)/4) · pair / D(z,t)
    FerrarZ,
    /// Γ((1±it)/4)Ξ²(t/2)/(1+t²)²
    FerrarZ0,
    /// Γ((z+3±it)/4) · pair / D(z,t)
    OmegaLaplace,
    /// |Γ((−1+it)/4)|²Ξ²(t/2)/(1+t²)
    OmegaLaplace0,
    /// [Γ((z+3±it)/4)/Γ((z+1±it)/4)] · pair / D(z,t)
    OmegaJ,
    /// |Γ((−1+it)/4)|⁴ cosh(πt/2) Ξ²(t/2)
    OmegaJ0,
    /// pair / D(z,t)
    Note42,
}

/// Shorthand: Γ(a+it)Γ(a−it) is written Γ(a±it); "pair" is Ξ((t−iz)/2)Ξ((t+iz)/2);
/// D(z,t) = (t²+(z+1)²)(t²+(z−1)²).
impl XiWeightId {
    pub const ALL: [XiWeightId; 18] = [
        XiWeightId::Jacobi,
        XiWeightId::KoshK0,
        XiWeightId::RamanujanGauss,
        XiWeightId::RamanujanLambda,
        XiWeightId::RamanujanLambdaAlt,
        XiWeightId::Hardy,
        XiWeightId::KoshLambda,
        XiWeightId::LambdaZ,
        XiWeightId::PhiZ,
        XiWeightId::PhiZ0,
        XiWeightId::Ferrar,
        XiWeightId::FerrarZ,
        XiWeightId::FerrarZ0,
        XiWeightId::OmegaLaplace,
        XiWeightId::OmegaLaplace0,
        XiWeightId::OmegaJ,
        XiWeightId::OmegaJ0,
        XiWeightId::Note42,
    ];

    /// True when the weight multiplies a pair of Ξ values rather than a single Ξ(t/2).
    pub fn is_pair(self) -> bool {
        !matches!(self, XiWeightId::Jacobi | XiWeightId::RamanujanGauss | XiWeightId::Hardy | XiWeightId::Ferrar)
    }

    /// True when the weight depends on z.
    pub fn uses_z(self) -> bool {
        matches!(
            self,
            XiWeightId::LambdaZ
                | XiWeightId::PhiZ
                | XiWeightId::FerrarZ
                | XiWeightId::OmegaLaplace
                | XiWeightId::OmegaJ
                | XiWeightId::Note42
        )
    }

    /// Exponential decay rate of |w · Ξ-factor| in t.
    pub fn decay_rate(self) -> f64 {
        let q = PI / 8.0;
        match self {
            XiWeightId::Jacobi => q,
            XiWeightId::KoshK0 | XiWeightId::Note42 | XiWeightId::OmegaJ | XiWeightId::OmegaJ0 => 2.0 * q,
            XiWeightId::RamanujanGauss | XiWeightId::Ferrar => 3.0 * q,
            XiWeightId::RamanujanLambda
            | XiWeightId::RamanujanLambdaAlt
            | XiWeightId::FerrarZ
            | XiWeightId::FerrarZ0
            | XiWeightId::OmegaLaplace
            | XiWeightId::OmegaLaplace0 => 4.0 * q,
            XiWeightId::Hardy => 5.0 * q,
            XiWeightId::KoshLambda | XiWeightId::LambdaZ | XiWeightId::PhiZ | XiWeightId::PhiZ0 => 6.0 * q,
        }
    }

    /// Constant N(z) such that N(z)·∫ w Ξ cos equals the transformation's common value.
    pub fn normalization(self, z: C64) -> C64 {
        let p = |e: f64| PI.powf(e);
        let c = |v: f64| C64::new(v, 0.0);
        match self {
            XiWeightId::Jacobi => c(2.0 / PI),
            XiWeightId::KoshK0 | XiWeightId::Note42 => c(-32.0 / PI),
            XiWeightId::RamanujanGauss => c(1.0),
            XiWeightId::RamanujanLambda => c(-1.0 / p(1.5)),
            XiWeightId::RamanujanLambdaAlt => c(-1.0 / p(1.5)),
            XiWeightId::Hardy => c(2.0),
            XiWeightId::KoshLambda => c(8.0),
            XiWeightId::LambdaZ => ((z + 2.0) * 2f64.ln()).exp() / (PI * PI),
            XiWeightId::PhiZ => c(2.0 / p(4.0)),
            XiWeightId::PhiZ0 => c(1.0 / (128.0 * p(4.0))),
            XiWeightId::Ferrar => c(-1.0 / (2.0 * p(1.5))),
            XiWeightId::FerrarZ => c(8.0 / PI),
            XiWeightId::FerrarZ0 => c(2.0 / p(1.5)),
            XiWeightId::OmegaLaplace => 8.0 * (-(z + 5.0) * 0.5 * PI.ln()).exp(),
            XiWeightId::OmegaLaplace0 => c(1.0 / (2.0 * p(2.5))),
            XiWeightId::OmegaJ => c(8.0 / p(3.0)),
            XiWeightId::OmegaJ0 => c(1.0 / (64.0 * p(5.0))),
        }
    }

    /// w(z,t) without the Ξ factor.
    pub fn weight(self, z: C64, t: f64) -> C64 {
        let it = C64::new(0.0, t);
        // log Γ((a+it)/4) + log Γ((a−it)/4)
        let lg2 = |a: C64| log_gamma((a + it) * 0.25) + log_gamma((a - it) * 0.25);
        let one = 1.0 + t * t;
        let d = (z + 1.0).powi(2) + t * t;
        let dd = ((z - 1.0).powi(2) + t * t) * d;
        let sech = 2.0 * (-0.5 * PI * t).exp() / (1.0 + (-PI * t).exp());
        let r = |v: f64| C64::new(v, 0.0);
        match self {
            XiWeightId::Jacobi => r(1.0 / one),
            XiWeightId::KoshK0 => r(1.0 / (one * one)),
            XiWeightId::RamanujanGauss => lg2(r(3.0)).exp() / one,
            XiWeightId::RamanujanLambda | XiWeightId::OmegaLaplace0 => lg2(r(-1.0)).exp() / one,
            XiWeightId::RamanujanLambdaAlt => lg2(r(3.0)).exp() * 16.0 / (one * one),
            XiWeightId::Hardy => r(sech / one),
            XiWeightId::KoshLambda => r(sech / (one * one)),
            XiWeightId::LambdaZ => (lg2(z + 3.0) + lg2(z + 1.0)).exp() / dd,
            XiWeightId::PhiZ => (lg2(z + 3.0) + lg2(3.0 - z)).exp() / dd,
            XiWeightId::PhiZ0 => (lg2(r(-1.0)) * 2.0).exp(),
            XiWeightId::Ferrar => lg2(r(1.0)).exp() / one,
            XiWeightId::FerrarZ => lg2(z + 1.0).exp() / dd,
            XiWeightId::FerrarZ0 => lg2(r(1.0)).exp() / (one * one),
            XiWeightId::OmegaLaplace => lg2(z + 3.0).exp() / dd,
            XiWeightId::OmegaJ => (lg2(z + 3.0) - lg2(z + 1.0)).exp() / dd,
            XiWeightId::OmegaJ0 => {
                // cosh(πt/2)|Γ((−1+it)/4)|⁴ combined in log form
                let lc = 0.5 * PI * t + (-PI * t).exp().ln_1p() - 2f64.ln();
                (lg2(r(-1.0)) * 2.0 + lc).exp()
            }
            XiWeightId::Note42 => C64::new(1.0, 0.0) / dd,
        }
    }

    /// Ξ(t/2) for single weights, Ξ((t−iz)/2)Ξ((t+iz)/2) for pairs (Ξ²(t/2) at z = 0 forms).
    pub fn xi_factor(self, z: C64, t: f64) -> C64 {
        if !self.is_pair() {
            return xi_big(C64::new(0.5 * t, 0.0));
        }
        let z = if self.uses_z() { z } else { C64::new(0.0, 0.0) };
        let iz = C64::new(-z.im, z.re);
        let tt = C64::new(t, 0.0);
        xi_big((tt - iz) * 0.5) * xi_big((tt + iz) * 0.5)
    }

    pub fn integrand(self, z: C64, alpha: f64, t: f64) -> C64 {
        self.weight(z, t) * self.xi_factor(z, t) * (0.5 * t * alpha.ln()).cos()
    }
}

/// ∫₀^∞ w(z,t) Ξ-factor cos(½ t log α) dt, truncated where the Stirling envelope of
/// the integrand falls below tol/10.
pub fn xi_cos_integral(w: XiWeightId, z: C64, alpha: f64, tol: f64) -> Result<QuadResult, TransformError> {
    xi_cos_integral_with(w, z, alpha, tol, &QuadConfig::default())
}

pub fn xi_cos_integral_with(
    w: XiWeightId,
    z: C64,
    alpha: f64,
    tol: f64,
    cfg: &QuadConfig,
) -> Result<QuadResult, TransformError> {
    if !(alpha > 0.0) || !alpha.is_finite() {
        return Err(TransformError::BadParams(format!("alpha must be positive, got {alpha}")));
    }
    if w.uses_z() && !(z.re.abs() < 1.0) {
        return Err(TransformError::BadParams("need -1 < Re z < 1".into()));
    }
    let hint = DecayHint::XiEnvelope { rate: w.decay_rate(), power: 6.0 };
    let f = |t: f64| w.integrand(z, alpha, t);
    let mut r = quad_semi_infinite_with(&f, 0.0, hint, tol, cfg)?;
    if z.im == 0.0 || !w.uses_z() {
        r.value.im = 0.0;
    }
    Ok(r)
}
