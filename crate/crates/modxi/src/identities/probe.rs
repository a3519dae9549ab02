use super::{Budgets, CheckError, IdentityId};
use crate::numerics::C64;
use crate::transforms::{side_integral, SideId};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Average of a z-family at z = ±ε against its dedicated z = 0 form.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ContinuityProbe {
    pub family: IdentityId,
    pub limit_form: IdentityId,
    pub alpha: f64,
    pub eps: f64,
    pub average: f64,
    pub limit: f64,
    pub diff: f64,
}

fn pairing(id: IdentityId) -> Option<(SideId, IdentityId, SideId, f64)> {
    match id {
        IdentityId::LambdaZ => Some((SideId::LambdaZ, IdentityId::KoshLambda, SideId::KoshLambda, 1.0)),
        IdentityId::PhiZ => Some((SideId::PhiZ, IdentityId::PhiZ0, SideId::PhiZ0, 1.0)),
        IdentityId::FerrarZ => Some((SideId::FerrarZ, IdentityId::FerrarZ0, SideId::FerrarZ0, 4.0 * PI.sqrt())),
        _ => None,
    }
}

/// Supported for LAMBDA_Z, PHI_Z and FERRAR_Z.
pub fn continuity_probe(family: IdentityId, alpha: f64, eps: f64, tol: f64, budgets: Budgets) -> Result<ContinuityProbe, CheckError> {
    let bad = |reason: String| CheckError::InvalidParams { id: family, reason };
    let (side, limit_form, zero_side, scale) = pairing(family).ok_or_else(|| bad("no z = 0 form to probe against".into()))?;
    if !(alpha > 0.0 && eps > 0.0 && eps < 0.5) {
        return Err(bad("need alpha > 0 and 0 < eps < 1/2".into()));
    }
    let cfg = budgets.quad_config();
    let eval = |s: SideId, z: f64| {
        side_integral(s, C64::new(z, 0.0), alpha, tol, &cfg).map(|r| r.value.re).map_err(|e| bad(e.to_string()))
    };
    let average = 0.5 * (eval(side, eps)? + eval(side, -eps)?);
    let limit = scale * eval(zero_side, 0.0)?;
    Ok(ContinuityProbe { family, limit_form, alpha, eps, average, limit, diff: (average - limit).abs() })
}
