use super::{bose_minus_one, half_line, TransformError};
use crate::bessel::j_raw;
use crate::numerics::{
    quad_double_by, quad_finite_with, quad_oscillatory_with, quad_semi_infinite_with, DecayHint, DoubleRule, QuadConfig,
    QuadError, QuadResult, C64,
};
use crate::special::{digamma, BERNOULLI_EVEN};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// How ∫₀^∞ y J₀(2αy)/(y²+t²)^{3/2} dy is obtained inside the double integral.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum JPath {
    /// Interval partition over the J₀ half-periods with averaging.
    Oscillatory,
    /// The algebraic value e^{−2αt}/t.
    ClosedForm,
}

fn cr(v: f64) -> C64 {
    C64::new(v, 0.0)
}

fn j0(x: f64) -> f64 {
    j_raw(cr(0.0), x).re
}

/// ∫₀^∞ y/(y²+t²)^{3/2} (J₀(2αy) + 4πt/(e^{2πt}−1) · (1/(e^{2παy}−1) − 1/(2παy))) dy.
pub fn double_inner(alpha: f64, t: f64, path: JPath, tol: f64, cfg: &QuadConfig) -> Result<QuadResult, QuadError> {
    let c = 2.0 * (bose_minus_one(2.0 * PI * t) + 1.0);
    let kern = |y: f64| y / (y * y + t * t).powf(1.5);
    let g = |y: f64| {
        if y == 0.0 {
            -0.5
        } else {
            bose_minus_one(2.0 * PI * alpha * y) / (2.0 * PI * alpha * y)
        }
    };
    let big_y = PI / alpha + 2.0 * t;
    let t_cfg = QuadConfig { parallel_nodes: false, ..*cfg };
    let part_tol = 0.25 * tol;

    let head_fn = |y: f64| {
        let j = if path == JPath::Oscillatory { j0(2.0 * alpha * y) } else { 0.0 };
        cr(kern(y) * (j + c * g(y)))
    };
    let head = quad_finite_with(&head_fn, 0.0, t, part_tol, &t_cfg)?.plus(quad_finite_with(&head_fn, t, big_y, part_tol, &t_cfg)?);

    // ∫_Y^∞ kern/(e^{2παy}−1) minus the closed ∫_Y^∞ kern/(2παy)
    let bose = |y: f64| cr(kern(y) / (2.0 * PI * alpha * y).exp_m1());
    let bt = quad_semi_infinite_with(&bose, big_y, DecayHint::Exponential { rate: 2.0 * PI * alpha }, part_tol, &t_cfg)?;
    let s = (big_y * big_y + t * t).sqrt();
    let g_tail = bt.value.re - 1.0 / (2.0 * PI * alpha * s * (s + big_y));

    let j_part = match path {
        JPath::Oscillatory => {
            let jf = |y: f64| cr(kern(y) * j0(2.0 * alpha * y));
            quad_oscillatory_with(&jf, big_y, 0.5 * PI / alpha, part_tol, &t_cfg)?
        }
        JPath::ClosedForm => QuadResult { value: cr((-2.0 * alpha * t).exp() / t), error_estimate: 0.0, nodes: 0, converged: true },
    };
    let tail = QuadResult { value: cr(c * g_tail), error_estimate: c * bt.error_estimate, nodes: bt.nodes, converged: bt.converged };
    Ok(head.plus(j_part).plus(tail))
}

/// √α ∫₀^∞∫₀^∞ of the double-integral member.
pub fn double_integral_side(alpha: f64, path: JPath, tol: f64, cfg: &QuadConfig) -> Result<QuadResult, TransformError> {
    if !(alpha > 0.0) {
        return Err(TransformError::BadParams("alpha must be positive".into()));
    }
    let sa = alpha.sqrt();
    let inner_tol = 1e-3 * tol / sa;
    let rate = (2.0 * alpha).min(2.0 * PI);
    // inner(t) = C − (πα/3) log t + O(t log t) below t0; t = u² above it
    let u0: f64 = 1e-3;
    let t0 = u0 * u0;
    let slope = PI * alpha / 3.0;
    let at_t0 = double_inner(alpha, t0, path, inner_tol, cfg)?;
    let c0 = at_t0.value.re + slope * t0.ln();
    let strip = QuadResult {
        value: cr(c0 * t0 - slope * (t0 * t0.ln() - t0)),
        error_estimate: at_t0.error_estimate * t0,
        nodes: at_t0.nodes,
        converged: at_t0.converged,
    };
    let head = quad_double_by(
        |u: f64| double_inner(alpha, u * u, path, inner_tol, cfg).map(|r| r.scaled(cr(2.0 * u))),
        DoubleRule::Finite { a: u0, b: 1.0 },
        0.5 * tol / sa,
        cfg,
    )?
    .plus(strip);
    let tail = quad_double_by(
        |t: f64| double_inner(alpha, t, path, inner_tol, cfg),
        DoubleRule::SemiInfinite { a: 1.0, hint: DecayHint::Exponential { rate } },
        0.5 * tol / sa,
        cfg,
    )?;
    Ok(head.plus(tail).scaled(cr(sa)))
}

/// x(ψ(x+1) − log x) − 1/2, without cancellation at large x.
pub(crate) fn psi_log_remainder(x: f64) -> f64 {
    if x < 12.0 {
        return x * (digamma(cr(x + 1.0)).re - x.ln()) - 0.5;
    }
    // −Σ B_{2k}/(2k) x^{1−2k}
    let x2 = 1.0 / (x * x);
    let mut p = 1.0 / x;
    let mut s = 0.0;
    for (k, b) in BERNOULLI_EVEN.iter().enumerate().take(10) {
        s -= b / (2.0 * (k + 1) as f64) * p;
        p *= x2;
    }
    s
}

/// ∫₀^∞ x J₀(bx)(ψ(x+1) − log x − 1/(2x)) dx; the removed 1/(2x) contributes 1/(2b).
fn psi_remainder_j(b: f64, tol: f64, cfg: &QuadConfig) -> Result<QuadResult, QuadError> {
    let f = |x: f64| if x == 0.0 { cr(-0.5) } else { cr(j0(b * x) * psi_log_remainder(x)) };
    let spacing = PI / b;
    let start = 4.0 * spacing;
    let head = quad_finite_with(&f, 0.0, start, 0.5 * tol, cfg)?;
    let tail = quad_oscillatory_with(&f, start, spacing, 0.5 * tol, cfg)?;
    Ok(head.plus(tail))
}

/// ∫₀^∞ x J₀(2πtαx)(ψ(x+1) − log x) dx.
pub fn k0_phi_single_integral(alpha: f64, t: f64, tol: f64, cfg: &QuadConfig) -> Result<QuadResult, TransformError> {
    if !(alpha > 0.0 && t > 0.0) {
        return Err(TransformError::BadParams("need alpha > 0 and t > 0".into()));
    }
    let b = 2.0 * PI * t * alpha;
    let r = psi_remainder_j(b, tol, cfg)?;
    Ok(QuadResult { value: r.value + 0.5 / b, ..r })
}

/// (√α/16π²)∫₀^∞ (e^{−2αt}/t − 8π²αt/(e^{2πt}−1) ∫₀^∞ x J₀(2πtαx)(ψ(x+1) − log x) dx) dt.
pub fn h_chain_integral(alpha: f64, tol: f64, cfg: &QuadConfig) -> Result<QuadResult, TransformError> {
    if !(alpha > 0.0) {
        return Err(TransformError::BadParams("alpha must be positive".into()));
    }
    let pre = alpha.sqrt() / (16.0 * PI * PI);
    let inner_tol = 1e-3 * tol / pre;
    let err = std::sync::Mutex::new(None::<QuadError>);
    // with the 1/(2b) part taken out, the two 1/t poles cancel analytically
    let f = |t: f64| {
        // below 1e-12 the log-singular integrand contributes nothing visible
        let t = t.max(1e-12);
        let bm = bose_minus_one(2.0 * PI * t);
        let smooth = ((-2.0 * alpha * t).exp_m1() - bm) / t;
        match psi_remainder_j(2.0 * PI * t * alpha, inner_tol, &QuadConfig { parallel_nodes: false, ..*cfg }) {
            Ok(r) => cr(smooth - 4.0 * PI * alpha * (bm + 1.0) * r.value.re),
            Err(e) => {
                err.lock().unwrap().get_or_insert(e);
                cr(f64::NAN)
            }
        }
    };
    let rate = (2.0 * alpha).min(2.0 * PI);
    let outer = QuadConfig { parallel_nodes: true, ..*cfg };
    let r = half_line(&f, 0.05, 1.0, DecayHint::Exponential { rate }, tol / pre, &outer);
    if let Some(e) = err.into_inner().unwrap() {
        return Err(e.into());
    }
    Ok(r?.scaled(cr(pre)))
}
