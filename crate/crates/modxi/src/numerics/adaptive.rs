use super::{eval_nodes, QuadConfig, QuadError, QuadResult, C64};
use std::cmp::Ordering;
use std::collections::BinaryHeap;

// 21-point Kronrod extension of the 10-point Gauss rule.
const XGK: [f64; 11] = [
    0.995657163025808080735527280689003,
    0.973906528517171720077964012084452,
    0.930157491355708226001207180059508,
    0.865063366688984510732096688423493,
    0.780817726586416897063717578345042,
    0.679409568299024406234327365114874,
    0.562757134668604683339000099272694,
    0.433395394129247190799265943165784,
    0.294392862701460198131126603103866,
    0.148874338981631210884826001129720,
    0.000000000000000000000000000000000,
];
const WGK: [f64; 11] = [
    0.011694638867371874278064396062192,
    0.032558162307964727478818972459390,
    0.054755896574351996031381300244580,
    0.075039674810919952767043140916190,
    0.093125454583697605535065465083366,
    0.109387158802297641899210590325805,
    0.123491976262065851077600125600390,
    0.134709217311473325928054001771707,
    0.142775938577060080797094273138717,
    0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
];
// Gauss weights for the odd-indexed Kronrod abscissae.
const WG: [f64; 5] = [
    0.066671344308688137593568809893332,
    0.149451349150580593145776339657697,
    0.219086362515982043995534934228163,
    0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
];

struct Panel {
    a: f64,
    b: f64,
    value: C64,
    err: f64,
}

impl PartialEq for Panel {
    fn eq(&self, o: &Self) -> bool {
        self.err == o.err && self.a == o.a
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for Panel {
    fn cmp(&self, o: &Self) -> Ordering {
        self.err
            .total_cmp(&o.err)
            .then_with(|| o.a.total_cmp(&self.a))
    }
}

fn abscissae(a: f64, b: f64) -> [f64; 21] {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let mut xs = [0.0; 21];
    for j in 0..10 {
        xs[2 * j] = c - h * XGK[j];
        xs[2 * j + 1] = c + h * XGK[j];
    }
    xs[20] = c;
    xs
}

fn rule(a: f64, b: f64, fv: &[C64]) -> (C64, f64) {
    let h = 0.5 * (b - a);
    let fc = fv[20];
    let mut k = fc * WGK[10];
    let mut g = C64::new(0.0, 0.0);
    let mut resabs = fc.norm() * WGK[10];
    for j in 0..10 {
        let s = fv[2 * j] + fv[2 * j + 1];
        k += s * WGK[j];
        resabs += WGK[j] * (fv[2 * j].norm() + fv[2 * j + 1].norm());
        if j % 2 == 1 {
            g += s * WG[j / 2];
        }
    }
    let mean = k * 0.5;
    let mut resasc = WGK[10] * (fc - mean).norm();
    for j in 0..10 {
        resasc += WGK[j] * ((fv[2 * j] - mean).norm() + (fv[2 * j + 1] - mean).norm());
    }
    let value = k * h;
    let mut err = ((k - g) * h).norm();
    let resasc = resasc * h.abs();
    let resabs = resabs * h.abs();
    if resasc != 0.0 && err != 0.0 {
        err = resasc * (200.0 * err / resasc).powf(1.5).min(1.0);
    }
    // roundoff floor, kept small so tight tolerances remain reachable
    err = err.max(2.0 * f64::EPSILON * resabs);
    (value, err)
}

fn panel<F>(f: &F, a: f64, b: f64, parallel: bool) -> Result<Panel, QuadError>
where
    F: Fn(f64) -> C64 + Sync,
{
    let xs = abscissae(a, b);
    let fv = eval_nodes(f, &xs, parallel);
    for (x, v) in xs.iter().zip(&fv) {
        if !(v.re.is_finite() && v.im.is_finite()) {
            return Err(QuadError::NonFinite(*x));
        }
    }
    let (value, err) = rule(a, b, &fv);
    Ok(Panel { a, b, value, err })
}

/// Adaptive Gauss–Kronrod integration of `f` over `[a, b]` to absolute tolerance `tol`.
pub fn quad_finite<F>(f: F, a: f64, b: f64, tol: f64) -> Result<QuadResult, QuadError>
where
    F: Fn(f64) -> C64 + Sync,
{
    quad_finite_with(&f, a, b, tol, &QuadConfig::default())
}

pub fn quad_finite_with<F>(
    f: &F,
    a: f64,
    b: f64,
    tol: f64,
    cfg: &QuadConfig,
) -> Result<QuadResult, QuadError>
where
    F: Fn(f64) -> C64 + Sync,
{
    if !(a.is_finite() && b.is_finite()) || a > b {
        return Err(QuadError::BadInterval(a, b));
    }
    if a == b {
        return Ok(QuadResult {
            value: C64::new(0.0, 0.0),
            error_estimate: 0.0,
            nodes: 1,
            converged: true,
        });
    }
    let mut heap = BinaryHeap::new();
    let first = panel(f, a, b, cfg.parallel_nodes)?;
    let mut nodes = 21;
    let mut total_err = first.err;
    heap.push(first);
    // panels too narrow to split are parked here
    let mut frozen: Vec<Panel> = Vec::new();
    let mut frozen_err = 0.0;

    while total_err + frozen_err > tol && heap.len() + frozen.len() < cfg.max_panels {
        let Some(worst) = heap.pop() else { break };
        let mid = 0.5 * (worst.a + worst.b);
        if !(mid > worst.a && mid < worst.b) || (worst.b - worst.a) < 1e-15 * worst.a.abs().max(worst.b.abs()) * 4.0 {
            total_err -= worst.err;
            frozen_err += worst.err;
            frozen.push(worst);
            continue;
        }
        let (l, r) = if cfg.parallel_nodes {
            let l = panel(f, worst.a, mid, true)?;
            let r = panel(f, mid, worst.b, true)?;
            (l, r)
        } else {
            (panel(f, worst.a, mid, false)?, panel(f, mid, worst.b, false)?)
        };
        nodes += 42;
        total_err += l.err + r.err - worst.err;
        heap.push(l);
        heap.push(r);
        if heap.len() % 64 == 0 {
            // refresh the running sum to shed accumulated rounding
            total_err = heap.iter().map(|p| p.err).sum();
        }
    }

    // Sum in positional order so the result does not depend on heap layout.
    let mut all: Vec<Panel> = heap.into_vec();
    all.extend(frozen);
    all.sort_by(|p, q| p.a.total_cmp(&q.a));
    let mut value = C64::new(0.0, 0.0);
    let mut err = 0.0;
    for p in &all {
        value += p.value;
        err += p.err;
    }
    Ok(QuadResult {
        value,
        error_estimate: err,
        nodes,
        converged: err <= tol,
    })
}
