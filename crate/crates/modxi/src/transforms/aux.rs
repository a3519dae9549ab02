use super::double::{h_chain_integral, k0_phi_single_integral};
use super::sides::{side_integral, SideId};
use super::{bose_minus_one, half_line, TransformError};
use crate::bessel::{j_raw, k_raw};
use crate::numerics::{
    quad_finite_with, quad_oscillatory_with, quad_semi_infinite_with, DecayHint, QuadConfig, QuadResult, C64,
};
use crate::special::{digamma, gamma, zeta, BERNOULLI_EVEN, EULER_GAMMA};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Auxiliary integral evaluations used along the proofs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AuxId {
    /// ∫xK₀(2παx)/(e^{2πx/t}−1)dx = t/(8πα) − (t²/2)∫xJ₀(2πtαx)(ψ(x+1)−log x)dx
    Lemma57,
    /// ζ(s)/sin πs = −(1/π)∫(ψ(x+1)−log x)x^{−s}dx, s = `t` in (0,1)
    Kloosterman,
    /// ∫K₀(2παx)dx = 1/(4α)
    IntK0,
    /// Mellin transform of K_ν(mx) log x at w = 3/2, m = 2πα, ν = `t`
    LogMellinK,
    /// 2π∫(1/(e^{2πy}−1) − 1/(2πy))e^{−2πxy}dy = log x − ψ(x+1), x = `alpha`
    PsiLog,
    /// ∫e^{−ax}J_ν(x)x^{ν+1}dx = 2a·2^νΓ(ν+3/2)/(√π(a²+1)^{ν+3/2}), a = `alpha`, ν = `t`
    JLaplace,
    /// γ − log(π/α) = ∫(2π/(e^{2πt}−1) − e^{−2αt}/t)dt
    GammaLogRep,
    /// ∫yJ₀(2αy)/(y²+t²)^{3/2}dy = e^{−2αt}/t
    J0Alg,
    /// α^{3/2}∫xK₀(2παx)φ₀(x)dx against the single-integral form built on its t-integral
    HChain,
}

impl AuxId {
    pub const ALL: [AuxId; 9] = [
        AuxId::Lemma57,
        AuxId::Kloosterman,
        AuxId::IntK0,
        AuxId::LogMellinK,
        AuxId::PsiLog,
        AuxId::JLaplace,
        AuxId::GammaLogRep,
        AuxId::J0Alg,
        AuxId::HChain,
    ];

    /// True when one side comes from an oscillatory tail partition.
    pub fn oscillatory(self) -> bool {
        matches!(self, AuxId::Lemma57 | AuxId::J0Alg | AuxId::HChain)
    }

    pub fn name(self) -> &'static str {
        match self {
            AuxId::Lemma57 => "LEMMA57",
            AuxId::Kloosterman => "KLOOSTERMAN",
            AuxId::IntK0 => "INT_K0",
            AuxId::LogMellinK => "LOG_MELLIN_K",
            AuxId::PsiLog => "PSI_LOG",
            AuxId::JLaplace => "J_LAPLACE",
            AuxId::GammaLogRep => "GAMMA_LOG_REP",
            AuxId::J0Alg => "J0_ALG",
            AuxId::HChain => "H_CHAIN",
        }
    }

    /// Two evaluation points per identity.
    pub fn default_points(self) -> [AuxParams; 2] {
        let p = |alpha, t| AuxParams { alpha, t };
        match self {
            AuxId::Lemma57 => [p(1.0, 0.8), p(1.3, 0.5)],
            AuxId::Kloosterman => [p(1.0, 0.3), p(1.0, 0.6)],
            AuxId::IntK0 => [p(2.0, 0.0), p(0.7, 0.0)],
            AuxId::LogMellinK => [p(1.0, 0.0), p(0.8, 0.25)],
            AuxId::PsiLog => [p(1.0, 0.0), p(2.5, 0.0)],
            AuxId::JLaplace => [p(1.0, 0.0), p(2.0, 0.25)],
            AuxId::GammaLogRep => [p(1.0, 0.0), p(1.7, 0.0)],
            AuxId::J0Alg => [p(1.0, 0.7), p(1.5, 0.3)],
            AuxId::HChain => [p(1.0, 0.0), p(1.5, 0.0)],
        }
    }
}

/// Evaluation point; the meaning of `t` depends on the identity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AuxParams {
    pub alpha: f64,
    pub t: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AuxOutcome {
    pub lhs: C64,
    pub rhs: C64,
    pub residual: f64,
    pub error_estimate: f64,
    pub nodes: usize,
}

fn cr(v: f64) -> C64 {
    C64::new(v, 0.0)
}

fn exact(v: C64) -> QuadResult {
    QuadResult { value: v, error_estimate: 0.0, nodes: 0, converged: true }
}

pub fn aux_identity(id: AuxId, p: AuxParams, tol: f64, cfg: &QuadConfig) -> Result<AuxOutcome, TransformError> {
    let AuxParams { alpha, t } = p;
    if !(alpha > 0.0) || !alpha.is_finite() || !t.is_finite() {
        return Err(TransformError::BadParams(format!("bad aux parameters {p:?}")));
    }
    let q = 0.5 * tol;
    let (l, r): (QuadResult, QuadResult) = match id {
        AuxId::Lemma57 => {
            if !(t > 0.0) {
                return Err(TransformError::BadParams("LEMMA57 needs t > 0".into()));
            }
            let f = |x: f64| k_raw(cr(0.0), cr(2.0 * PI * alpha * x)) * (x / (2.0 * PI * x / t).exp_m1());
            let hint = DecayHint::Exponential { rate: 2.0 * PI * (alpha + 1.0 / t) };
            let l = half_line(&f, 0.05, 1.0, hint, q, cfg)?;
            let i = k0_phi_single_integral(alpha, t, q / (0.5 * t * t), cfg)?;
            (l, exact(cr(t / (8.0 * PI * alpha))).plus(i.scaled(cr(-0.5 * t * t))))
        }
        AuxId::Kloosterman => {
            let s = t;
            if !(s > 0.0 && s < 1.0) {
                return Err(TransformError::BadParams("KLOOSTERMAN needs 0 < s < 1".into()));
            }
            let big: f64 = 30.0;
            let f = |x: f64| {
                if x == 0.0 {
                    return cr(0.0);
                }
                cr((digamma(cr(x + 1.0)).re - x.ln()) * x.powf(-s))
            };
            let head = quad_finite_with(
                &|u: f64| if u == 0.0 { cr(0.0) } else { f(u.powf(4.0)) * (4.0 * u.powi(3)) },
                0.0,
                big.powf(0.25),
                q,
                cfg,
            )?;
            // ψ(x+1) − log x = 1/(2x) − Σ B_{2k}/(2k) x^{−2k}
            let mut tail = big.powf(-s) / (2.0 * s);
            for (k, b) in BERNOULLI_EVEN.iter().enumerate().take(10) {
                let k = (k + 1) as f64;
                tail -= b / (2.0 * k) * big.powf(1.0 - s - 2.0 * k) / (s + 2.0 * k - 1.0);
            }
            let total = head.plus(exact(cr(tail)));
            (exact(zeta(cr(s)) / (PI * s).sin()), total.scaled(cr(-1.0 / PI)))
        }
        AuxId::IntK0 => {
            let f = |x: f64| k_raw(cr(0.0), cr(2.0 * PI * alpha * x));
            let l = half_line(&f, 0.05, 1.0, DecayHint::BesselK { scale: 2.0 * PI * alpha }, q, cfg)?;
            (l, exact(cr(0.25 / alpha)))
        }
        AuxId::LogMellinK => {
            let nu = t;
            let w = 1.5;
            if !(nu.abs() < w) {
                return Err(TransformError::BadParams("LOG_MELLIN_K needs |nu| < 3/2".into()));
            }
            let m = 2.0 * PI * alpha;
            let f = |x: f64| k_raw(cr(nu), cr(m * x)) * (x.powf(w - 1.0) * x.ln());
            let l = half_line(&f, nu.abs() - (w - 1.0) + 0.05, 1.0, DecayHint::BesselK { scale: m }, q, cfg)?;
            let (a, b) = (cr(0.5 * (w + nu)), cr(0.5 * (w - nu)));
            let rhs = gamma(a) * gamma(b) * (2f64.powf(w - 3.0) / m.powf(w))
                * (digamma(a) + digamma(b) - 2.0 * (0.5 * m).ln());
            (l, exact(rhs))
        }
        AuxId::PsiLog => {
            let x = alpha;
            let f = |y: f64| {
                if y == 0.0 {
                    return cr(-PI);
                }
                cr(bose_minus_one(2.0 * PI * y) / y * (-2.0 * PI * x * y).exp())
            };
            let l = quad_semi_infinite_with(&f, 0.0, DecayHint::Exponential { rate: 2.0 * PI * x }, q, cfg)?;
            (l, exact(cr(x.ln() - digamma(cr(x + 1.0)).re)))
        }
        AuxId::JLaplace => {
            let (a, nu) = (alpha, t);
            if !(nu > -1.0) {
                return Err(TransformError::BadParams("J_LAPLACE needs nu > -1".into()));
            }
            let f = |x: f64| j_raw(cr(nu), x) * ((-a * x).exp() * x.powf(nu + 1.0));
            let l = quad_semi_infinite_with(&f, 0.0, DecayHint::XiEnvelope { rate: a, power: nu + 1.0 }, q, cfg)?;
            let rhs = 2.0 * a * 2f64.powf(nu) * gamma(cr(nu + 1.5)).re / (PI.sqrt() * (a * a + 1.0).powf(nu + 1.5));
            (l, exact(cr(rhs)))
        }
        AuxId::GammaLogRep => {
            let f = |s: f64| {
                if s == 0.0 {
                    return cr(2.0 * alpha - PI);
                }
                cr((bose_minus_one(2.0 * PI * s) - (-2.0 * alpha * s).exp_m1()) / s)
            };
            let rate = (2.0 * alpha).min(2.0 * PI);
            let r = quad_semi_infinite_with(&f, 0.0, DecayHint::Exponential { rate }, q, cfg)?;
            (exact(cr(EULER_GAMMA - (PI / alpha).ln())), r)
        }
        AuxId::J0Alg => {
            if !(t > 0.0) {
                return Err(TransformError::BadParams("J0_ALG needs t > 0".into()));
            }
            let f = |y: f64| j_raw(cr(0.0), 2.0 * alpha * y) * (y / (y * y + t * t).powf(1.5));
            let spacing = 0.5 * PI / alpha;
            let start = 2.0 * spacing + 2.0 * t;
            let head = quad_finite_with(&f, 0.0, t, 0.25 * q, cfg)?.plus(quad_finite_with(&f, t, start, 0.25 * q, cfg)?);
            let tail = quad_oscillatory_with(&f, start, spacing, 0.5 * q, cfg)?;
            (head.plus(tail), exact(cr((-2.0 * alpha * t).exp() / t)))
        }
        AuxId::HChain => {
            let l = side_integral(SideId::PhiZ0, cr(0.0), alpha, q, cfg)?;
            (l, h_chain_integral(alpha, q, cfg)?)
        }
    };
    Ok(AuxOutcome {
        lhs: l.value,
        rhs: r.value,
        residual: (l.value - r.value).norm(),
        error_estimate: l.error_estimate + r.error_estimate,
        nodes: l.nodes + r.nodes,
    })
}
