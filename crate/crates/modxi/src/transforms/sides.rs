use super::{bose_minus_one, half_line, TransformError, Trap};
use crate::bessel::{j_raw, k_raw};
use crate::numerics::{quad_finite_with, quad_oscillatory_with, quad_semi_infinite_with, DecayHint, QuadConfig, QuadResult, C64};
use crate::series::{
    capital_lambda, capital_lambda0, ferrar_bracket, frak_f, frak_f0, omega0, omega_z, phi, phi0, OmegaRepr,
};
use crate::special::{digamma, zeta};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Weighted x-integral members.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SideId {
    /// π^{5/2}α^{3/2}∫ x e^{−πα²x²}(1/(2πx) − 1/(e^{2πx}−1)) dx
    RamanujanGauss,
    /// √α∫ e^{−πα²x²}(ψ(x+1) − log x) dx
    HardyPsi,
    /// √α∫ K₀(2παx)Λ₀(x) dx
    KoshLambda,
    /// √α∫ K_{z/2}(2παx)Λ(x,z) dx
    LambdaZ,
    /// α^{3/2}∫ x K_{z/2}(2παx)Φ(x,z) dx
    PhiZ,
    /// α^{3/2}∫ x K₀(2παx)φ₀(x) dx
    PhiZ0,
    /// √α∫ e^{−πα²x²}(ΣK₀(2πnx) − 1/(4x)) dx
    Ferrar,
    /// √α∫ K_{z/2}(2παx)𝔉(x,z) dx
    FerrarZ,
    /// √α∫ K₀(2παx)𝔉₀(x) dx
    FerrarZ0,
    /// α^{(z+1)/2}∫ e^{−2παx}x^{z/2}(Ω(x,z) − ζ(z)x^{z/2−1}/(2π)) dx
    OmegaLaplace,
    /// α^{3/2}∫ x J_{z/2}(2παx)(Ω(x,z) − ζ(z)x^{z/2−1}/(2π)) dx
    OmegaJ,
}

fn k_hint(alpha: f64) -> DecayHint {
    DecayHint::BesselK { scale: 2.0 * PI * alpha }
}

fn cr(v: f64) -> C64 {
    C64::new(v, 0.0)
}

/// Ω(x,z) − ζ(z)x^{z/2−1}/(2π), with the z = 0 limit Ω(x) + 1/(4πx).
fn omega_bracket(trap: &Trap, x: f64, z: C64) -> C64 {
    if z.norm() == 0.0 {
        trap.take(omega0(x, OmegaRepr::ClosedForm)) + 1.0 / (4.0 * PI * x)
    } else {
        let xh = (z * 0.5 * x.ln()).exp();
        trap.take(omega_z(x, z, OmegaRepr::ClosedForm)) - zeta(z) * xh / (2.0 * PI * x)
    }
}

/// Evaluates the x-integral member `side` at (z, α).
pub fn side_integral(side: SideId, z: C64, alpha: f64, tol: f64, cfg: &QuadConfig) -> Result<QuadResult, TransformError> {
    if !(alpha > 0.0) || !alpha.is_finite() {
        return Err(TransformError::BadParams(format!("alpha must be positive, got {alpha}")));
    }
    let needs_z = matches!(side, SideId::LambdaZ | SideId::PhiZ | SideId::FerrarZ);
    if needs_z && z.norm() == 0.0 {
        return Err(TransformError::BadParams("z = 0 needs the dedicated z = 0 member".into()));
    }
    if !(z.re.abs() < 1.0) {
        return Err(TransformError::BadParams("need -1 < Re z < 1".into()));
    }
    let trap = Trap::new();
    let sa = alpha.sqrt();
    let a3 = alpha * sa;
    let gauss = DecayHint::Gaussian { rate: PI * alpha * alpha };
    let nu = z * 0.5;
    let kz = |x: f64| k_raw(nu, cr(2.0 * PI * alpha * x));
    let k0 = |x: f64| k_raw(cr(0.0), cr(2.0 * PI * alpha * x));
    let az = z.re.abs() + 0.05;
    let r = match side {
        SideId::RamanujanGauss => {
            let f = |x: f64| {
                if x == 0.0 {
                    return cr(0.0);
                }
                // x(1/(2πx) − 1/(e^{2πx}−1)) = −bose_minus_one(2πx)/(2π)
                cr(-(-PI * alpha * alpha * x * x).exp() * bose_minus_one(2.0 * PI * x) / (2.0 * PI))
            };
            let s = PI.powf(2.5) * a3;
            quad_semi_infinite_with(&f, 0.0, gauss, tol / s, cfg).map(|r| r.scaled(cr(s)))
        }
        SideId::HardyPsi => {
            let f = |x: f64| cr((-PI * alpha * alpha * x * x).exp() * (digamma(cr(x + 1.0)).re - x.ln()));
            half_line(&f, 0.05, 1.0, gauss, tol / sa, cfg).map(|r| r.scaled(cr(sa)))
        }
        SideId::KoshLambda => {
            let f = |x: f64| k0(x) * trap.take(capital_lambda0(x));
            half_line(&f, 0.1, 1.0, k_hint(alpha), tol / sa, cfg).map(|r| r.scaled(cr(sa)))
        }
        SideId::LambdaZ => {
            let f = |x: f64| kz(x) * trap.take(capital_lambda(x, z));
            half_line(&f, az, 1.0, k_hint(alpha), tol / sa, cfg).map(|r| r.scaled(cr(sa)))
        }
        SideId::PhiZ => {
            let f = |x: f64| kz(x) * trap.take(phi(x, z)) * x;
            half_line(&f, az, 1.0, k_hint(alpha), tol / a3, cfg).map(|r| r.scaled(cr(a3)))
        }
        SideId::PhiZ0 => {
            let f = |x: f64| k0(x) * trap.take(phi0(x)) * x;
            half_line(&f, 0.1, 1.0, k_hint(alpha), tol / a3, cfg).map(|r| r.scaled(cr(a3)))
        }
        SideId::Ferrar => {
            let f = |x: f64| trap.take(ferrar_bracket(x)) * (-PI * alpha * alpha * x * x).exp();
            half_line(&f, 0.05, 1.0, gauss, tol / sa, cfg).map(|r| r.scaled(cr(sa)))
        }
        SideId::FerrarZ => {
            let f = |x: f64| kz(x) * trap.take(frak_f(x, z));
            half_line(&f, az, 1.0, k_hint(alpha), tol / sa, cfg).map(|r| r.scaled(cr(sa)))
        }
        SideId::FerrarZ0 => {
            let f = |x: f64| k0(x) * trap.take(frak_f0(x));
            half_line(&f, 0.1, 1.0, k_hint(alpha), tol / sa, cfg).map(|r| r.scaled(cr(sa)))
        }
        SideId::OmegaLaplace => {
            let pre = ((z + 1.0) * 0.5 * alpha.ln()).exp();
            let f = |x: f64| (z * 0.5 * x.ln()).exp() * omega_bracket(&trap, x, z) * (-2.0 * PI * alpha * x).exp();
            let hint = DecayHint::Exponential { rate: 2.0 * PI * alpha };
            half_line(&f, az, 1.0, hint, tol / pre.norm(), cfg).map(|r| r.scaled(pre))
        }
        SideId::OmegaJ => {
            let f = |x: f64| j_raw(nu, 2.0 * PI * alpha * x) * omega_bracket(&trap, x, z) * x;
            let spacing = 0.5 / alpha;
            let start = 4.0 * spacing;
            let head = half_line_finite(&f, az, start, tol / a3 * 0.5, cfg);
            head.and_then(|h| {
                quad_oscillatory_with(&f, start, spacing, tol / a3 * 0.5, cfg).map(|t| h.plus(t).scaled(cr(a3)))
            })
        }
    };
    let mut out = trap.finish(r)?;
    if z.im == 0.0 {
        out.value.im = 0.0;
    }
    Ok(out)
}

/// ∫₀^b f with the same endpoint substitution as the half-line helper.
fn half_line_finite<F>(f: &F, a: f64, b: f64, tol: f64, cfg: &QuadConfig) -> Result<QuadResult, crate::numerics::QuadError>
where
    F: Fn(f64) -> C64 + Sync,
{
    let p = if a > 0.0 { (2.0 / (1.0 - a.min(0.9))).max(2.0) } else { 2.0 };
    let g = |u: f64| if u == 0.0 { cr(0.0) } else { f(u.powf(p)) * (p * u.powf(p - 1.0)) };
    quad_finite_with(&g, 0.0, b.powf(1.0 / p), tol, cfg)
}

/// (2π)^{−(z+1)}∫₀^∞ x^z (1/(e^{x√α}−1) − 1/(x√α))(1/(e^{x/√α}−1) − √α/x) dx.
pub fn bose_middle(z: C64, alpha: f64, tol: f64, cfg: &QuadConfig) -> Result<QuadResult, TransformError> {
    if !(alpha > 0.0) || !(z.re > -1.0 && z.re < 1.0) {
        return Err(TransformError::BadParams("need alpha > 0 and -1 < Re z < 1".into()));
    }
    let sa = alpha.sqrt();
    // 1/(e^u−1) − 1/u = bose_minus_one(u)/u
    let g = |u: f64| bose_minus_one(u) / u;
    let f = |x: f64| {
        if x == 0.0 {
            return cr(0.0);
        }
        (z * x.ln()).exp() * (g(x * sa) * g(x / sa))
    };
    let big = 40.0 * sa.max(1.0 / sa);
    let head = half_line_finite(&f, (-z.re).max(0.0) + 0.05, big, 0.4 * tol, cfg)?;
    // beyond `big` the product is 1/x² up to exponentially small terms
    let rest = |x: f64| f(x) - (z * x.ln()).exp() / (x * x);
    let tail = quad_semi_infinite_with(&rest, big, DecayHint::Exponential { rate: sa.min(1.0 / sa) }, 0.4 * tol, cfg)?;
    let analytic = (z - 1.0) * big.ln();
    let a = QuadResult { value: analytic.exp() / (1.0 - z), error_estimate: 0.0, nodes: 0, converged: true };
    let pre = (-(z + 1.0) * (2.0 * PI).ln()).exp();
    let mut r = head.plus(tail).plus(a).scaled(pre);
    if z.im == 0.0 {
        r.value.im = 0.0;
    }
    Ok(r)
}
