use super::{gamma, zeta_times_s_minus_one};
use crate::numerics::C64;
use std::f64::consts::PI;

/// ξ(s) = ½s(s−1)π^{−s/2}Γ(s/2)ζ(s), written as π^{−s/2}Γ(1+s/2)·(s−1)ζ(s)
/// so both removable singularities are handled.
pub fn xi_small(s: C64) -> C64 {
    let half = s * 0.5;
    let p = (-half * PI.ln()).exp();
    let v = p * gamma(half + 1.0) * zeta_times_s_minus_one(s);
    if s.im == 0.0 {
        C64::new(v.re, 0.0)
    } else {
        v
    }
}

/// Ξ(t) = ξ(½ + it).
pub fn xi_big(t: C64) -> C64 {
    let v = xi_small(C64::new(0.5 - t.im, t.re));
    if t.im == 0.0 {
        C64::new(v.re, 0.0)
    } else {
        v
    }
}

/// Upper bound for |Γ(σ+it)| with safety factor 2, valid for |t| ≥ 2.
pub fn stirling_envelope(sigma: f64, t: f64) -> f64 {
    let t = t.abs();
    2.0 * (2.0 * PI).sqrt() * t.powf(sigma - 0.5) * (-0.5 * PI * t).exp()
}
