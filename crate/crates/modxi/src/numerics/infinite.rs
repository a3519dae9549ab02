use super::{quad_finite_with, DecayHint, QuadConfig, QuadError, QuadResult, C64};
use std::sync::Mutex;

const SAFETY: f64 = 10.0;
const AVERAGING_LEVELS: usize = 12;

/// ∫_a^∞ f for integrands that decay as described by `hint`.
pub fn quad_semi_infinite<F>(f: F, a: f64, hint: DecayHint, tol: f64) -> Result<QuadResult, QuadError>
where
    F: Fn(f64) -> C64 + Sync,
{
    quad_semi_infinite_with(&f, a, hint, tol, &QuadConfig::default())
}

fn calibrate<F>(f: &F, a: f64, t: f64, hint: &DecayHint, samples: usize) -> f64
where
    F: Fn(f64) -> C64 + Sync,
{
    let mut amp: f64 = 0.0;
    for j in 1..=samples {
        let x = a + (t - a) * j as f64 / samples as f64;
        let g = hint.shape(x);
        if g > 1e-280 {
            let v = f(x).norm();
            if v.is_finite() {
                amp = amp.max(v / g);
            }
        }
    }
    amp
}

fn truncation_point(a: f64, amp: f64, hint: &DecayHint, tol: f64) -> f64 {
    let step = hint.length();
    let mut t = a + step;
    let limit = a + 5000.0 * step;
    while amp * hint.tail(t) > tol / SAFETY && t < limit {
        t += step;
    }
    t
}

pub fn quad_semi_infinite_with<F>(
    f: &F,
    a: f64,
    hint: DecayHint,
    tol: f64,
    cfg: &QuadConfig,
) -> Result<QuadResult, QuadError>
where
    F: Fn(f64) -> C64 + Sync,
{
    if !hint.is_valid() || !a.is_finite() {
        return Err(QuadError::BadInterval(a, f64::INFINITY));
    }
    let first = a + 30.0 * hint.length();
    let mut amp = calibrate(f, a, first, &hint, 24);
    let mut t = truncation_point(a, amp, &hint, tol);
    amp = amp.max(calibrate(f, a, t, &hint, 32));
    t = truncation_point(a, amp, &hint, tol);

    let at_t = f(t).norm();
    let env = amp * hint.shape(t);
    if at_t > SAFETY * env && at_t > tol {
        return Err(QuadError::HintViolation { t, observed: at_t, envelope: env });
    }
    let mut r = quad_finite_with(f, a, t, 0.9 * tol, cfg)?;
    r.error_estimate += amp * hint.tail(t);
    r.converged = r.converged && r.error_estimate <= tol;
    Ok(r)
}

fn averaged(sums: &[C64]) -> C64 {
    let mut v = sums.to_vec();
    for _ in 0..AVERAGING_LEVELS.min(v.len().saturating_sub(1)) {
        for i in 0..v.len() - 1 {
            v[i] = (v[i] + v[i + 1]) * 0.5;
        }
        v.pop();
    }
    v[0]
}

/// ∫_a^∞ f for eventually oscillating integrands whose sign changes are
/// asymptotically `zero_spacing` apart.
pub fn quad_oscillatory<F>(f: F, a: f64, zero_spacing: f64, tol: f64) -> Result<QuadResult, QuadError>
where
    F: Fn(f64) -> C64 + Sync,
{
    quad_oscillatory_with(&f, a, zero_spacing, tol, &QuadConfig::default())
}

pub fn quad_oscillatory_with<F>(
    f: &F,
    a: f64,
    zero_spacing: f64,
    tol: f64,
    cfg: &QuadConfig,
) -> Result<QuadResult, QuadError>
where
    F: Fn(f64) -> C64 + Sync,
{
    if !(zero_spacing > 0.0) || !a.is_finite() {
        return Err(QuadError::BadInterval(a, f64::INFINITY));
    }
    let piece_tol = (tol * 1e-2).max(1e-17);
    let window = AVERAGING_LEVELS + 1;
    let burn_in = 6;
    let mut sums: Vec<C64> = Vec::new();
    let mut running = C64::new(0.0, 0.0);
    let mut nodes = 0;
    let mut piece_err = 0.0;
    let mut all_conv = true;
    let mut estimates: Vec<C64> = Vec::new();
    let mut k = 0usize;
    while k < cfg.max_intervals {
        let lo = a + k as f64 * zero_spacing;
        let hi = lo + zero_spacing;
        let r = quad_finite_with(f, lo, hi, piece_tol, cfg)?;
        running += r.value;
        nodes += r.nodes;
        piece_err += r.error_estimate;
        all_conv &= r.converged;
        sums.push(running);
        k += 1;
        if sums.len() >= window + burn_in {
            let est = averaged(&sums[sums.len() - window..]);
            estimates.push(est);
            let n = estimates.len();
            if n >= 3 {
                let d1 = (estimates[n - 1] - estimates[n - 2]).norm();
                let d2 = (estimates[n - 2] - estimates[n - 3]).norm();
                if d1 <= 0.25 * tol && d2 <= tol {
                    return Ok(QuadResult {
                        value: est,
                        error_estimate: d1 + piece_err,
                        nodes,
                        converged: all_conv && d1 + piece_err <= tol,
                    });
                }
                if n > 40 && d1 > 1e3 * d2.max(1e-300) && d1 > tol {
                    return Err(QuadError::AccelerationDivergence(d1));
                }
            }
        }
    }
    let n = estimates.len();
    let (value, inc) = if n >= 2 {
        (estimates[n - 1], (estimates[n - 1] - estimates[n - 2]).norm())
    } else {
        (running, f64::INFINITY)
    };
    Ok(QuadResult {
        value,
        error_estimate: inc + piece_err,
        nodes,
        converged: false,
    })
}

/// (1/2πi)∫_{c−i∞}^{c+i∞} g(s) ds.
pub fn quad_vertical_line<G>(g: G, c: f64, envelope: DecayHint, tol: f64) -> Result<QuadResult, QuadError>
where
    G: Fn(C64) -> C64 + Sync,
{
    quad_vertical_line_with(&g, c, envelope, tol, &QuadConfig::default())
}

pub fn quad_vertical_line_with<G>(
    g: &G,
    c: f64,
    envelope: DecayHint,
    tol: f64,
    cfg: &QuadConfig,
) -> Result<QuadResult, QuadError>
where
    G: Fn(C64) -> C64 + Sync,
{
    let symmetric = [0.7, 2.3, 5.1].iter().all(|&tau| {
        let up = g(C64::new(c, tau));
        let down = g(C64::new(c, -tau));
        (down - up.conj()).norm() <= 1e-12 * up.norm().max(1e-300)
    });
    let pi = std::f64::consts::PI;
    if symmetric {
        let h = |tau: f64| C64::new(g(C64::new(c, tau)).re, 0.0);
        let r = quad_semi_infinite_with(&h, 0.0, envelope, tol * pi, cfg)?;
        Ok(r.scaled(C64::new(1.0 / pi, 0.0)))
    } else {
        let h = |tau: f64| g(C64::new(c, tau)) + g(C64::new(c, -tau));
        let r = quad_semi_infinite_with(&h, 0.0, envelope, tol * 2.0 * pi, cfg)?;
        Ok(r.scaled(C64::new(0.5 / pi, 0.0)))
    }
}

/// How one variable of an iterated integral is handled.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DoubleRule {
    Finite { a: f64, b: f64 },
    SemiInfinite { a: f64, hint: DecayHint },
    Oscillatory { a: f64, zero_spacing: f64 },
}

impl DoubleRule {
    fn integrate<F>(&self, f: &F, tol: f64, cfg: &QuadConfig) -> Result<QuadResult, QuadError>
    where
        F: Fn(f64) -> C64 + Sync,
    {
        match *self {
            DoubleRule::Finite { a, b } => quad_finite_with(f, a, b, tol, cfg),
            DoubleRule::SemiInfinite { a, hint } => quad_semi_infinite_with(f, a, hint, tol, cfg),
            DoubleRule::Oscillatory { a, zero_spacing } => quad_oscillatory_with(f, a, zero_spacing, tol, cfg),
        }
    }

    fn span(&self) -> f64 {
        match *self {
            DoubleRule::Finite { a, b } => b - a,
            DoubleRule::SemiInfinite { hint, .. } => 30.0 * hint.length(),
            DoubleRule::Oscillatory { zero_spacing, .. } => 100.0 * zero_spacing,
        }
    }
}

/// Iterated integral ∫_outer ∫_inner f(y, t) dy dt; the outer nodes are evaluated in parallel.
pub fn quad_double<F>(
    f: F,
    inner: DoubleRule,
    outer: DoubleRule,
    tol: f64,
    cfg: &QuadConfig,
) -> Result<QuadResult, QuadError>
where
    F: Fn(f64, f64) -> C64 + Sync,
{
    quad_double_by(|t| {
        let g = |y: f64| f(y, t);
        inner.integrate(&g, tol * 1e-3, &QuadConfig { parallel_nodes: false, ..*cfg })
    }, outer, tol, cfg)
}

/// Iterated integral whose inner integral is supplied as a function of the outer variable.
pub fn quad_double_by<I>(inner: I, outer: DoubleRule, tol: f64, cfg: &QuadConfig) -> Result<QuadResult, QuadError>
where
    I: Fn(f64) -> Result<QuadResult, QuadError> + Sync,
{
    let state: Mutex<(Option<QuadError>, f64, bool, usize)> = Mutex::new((None, 0.0, true, 0));
    let outer_f = |t: f64| match inner(t) {
        Ok(r) => {
            let mut s = state.lock().unwrap();
            s.1 = s.1.max(r.error_estimate);
            s.2 &= r.converged;
            s.3 += r.nodes;
            r.value
        }
        Err(e) => {
            let mut s = state.lock().unwrap();
            if s.0.is_none() {
                s.0 = Some(e);
            }
            C64::new(0.0, 0.0)
        }
    };
    let outer_cfg = QuadConfig { parallel_nodes: true, ..*cfg };
    let r = outer.integrate(&outer_f, tol * 0.5, &outer_cfg)?;
    let (err, inner_err, inner_conv, inner_nodes) = state.into_inner().unwrap();
    if let Some(e) = err {
        return Err(e);
    }
    let error_estimate = r.error_estimate + inner_err * outer.span();
    Ok(QuadResult {
        value: r.value,
        error_estimate,
        nodes: r.nodes + inner_nodes,
        converged: r.converged && inner_conv && error_estimate <= tol,
    })
}
