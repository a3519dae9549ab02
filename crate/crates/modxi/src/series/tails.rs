//! Tails Σ_{n>M} σ_{−z}(n) n^{−p} of divisor Dirichlet series, expressed through
//! Hurwitz zeta values so that expansions in x/n can be summed in closed form.

use crate::numerics::C64;
use crate::special::{hurwitz_zeta, hurwitz_zeta_deriv, zeta, zeta_deriv};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

pub(crate) const LEVELS: usize = 12;
pub(crate) const BASE_CUTOFF: usize = 64;

pub(crate) fn cutoff(level: usize) -> usize {
    BASE_CUTOFF << level
}

/// Smallest grid level whose cutoff M satisfies M ≥ ratio·x.
pub(crate) fn level_for(x: f64, ratio: f64) -> usize {
    let mut l = 0;
    while l + 1 < LEVELS && (cutoff(l) as f64) < ratio * x {
        l += 1;
    }
    l
}

fn hz(s: C64, a: f64) -> C64 {
    hurwitz_zeta(s, a).unwrap_or(C64::new(f64::NAN, f64::NAN))
}

fn hzd(s: C64, a: f64) -> C64 {
    hurwitz_zeta_deriv(s, a).unwrap_or(C64::new(f64::NAN, f64::NAN))
}

/// Σ_{n>M} σ_{−z}(n) n^{−p} = Σ_{a≤M} a^{−z−p} ζ(p, ⌊M/a⌋+1) + ζ(p) ζ(p+z, M+1).
pub fn divisor_tail(z: C64, p: C64, m: usize) -> C64 {
    if m == 0 {
        return zeta(p) * zeta(p + z);
    }
    let mut s = C64::new(0.0, 0.0);
    for a in 1..=m {
        let q = (m / a + 1) as f64;
        s += (-(z + p) * (a as f64).ln()).exp() * hz(p, q);
    }
    s + zeta(p) * hz(p + z, (m + 1) as f64)
}

/// Σ_{n>M} d(n) log n · n^{−p}, the negative p-derivative of the z=0 tail.
pub fn divisor_log_tail(p: C64, m: usize) -> C64 {
    if m == 0 {
        return -zeta_deriv(p) * zeta(p) * 2.0;
    }
    let mut s = C64::new(0.0, 0.0);
    for a in 1..=m {
        let q = (m / a + 1) as f64;
        let la = (a as f64).ln();
        let w = (-p * la).exp();
        s += w * (hz(p, q) * la - hzd(p, q));
    }
    let big = (m + 1) as f64;
    s - zeta_deriv(p) * hz(p, big) - zeta(p) * hzd(p, big)
}

/// Cached coefficient vectors c_k = tail(p0 + step·k, M_level), k < terms.
pub(crate) struct PowerTail {
    z: C64,
    p0: C64,
    step: f64,
    log: bool,
    terms: usize,
    levels: [OnceLock<Vec<C64>>; LEVELS],
}

impl PowerTail {
    fn new(z: C64, p0: C64, step: f64, log: bool, terms: usize) -> Self {
        PowerTail { z, p0, step, log, terms, levels: Default::default() }
    }

    pub(crate) fn coeffs(&self, level: usize) -> &[C64] {
        self.levels[level].get_or_init(|| {
            let m = cutoff(level);
            (0..self.terms)
                .map(|k| {
                    let p = self.p0 + self.step * k as f64;
                    if self.log {
                        divisor_log_tail(p, m)
                    } else {
                        divisor_tail(self.z, p, m)
                    }
                })
                .collect()
        })
    }

    pub(crate) fn terms(&self) -> usize {
        self.terms
    }
}

type Key = (u64, u64, u64, u64, u64, bool);

/// Shared cache; each (z, p0, step, log) family is built once per process.
pub(crate) fn power_tail(z: C64, p0: C64, step: f64, log: bool) -> Arc<PowerTail> {
    static CACHE: OnceLock<Mutex<HashMap<Key, Arc<PowerTail>>>> = OnceLock::new();
    let key = (z.re.to_bits(), z.im.to_bits(), p0.re.to_bits(), p0.im.to_bits(), step.to_bits(), log);
    let map = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = map.lock().unwrap_or_else(|e| e.into_inner());
    guard
        .entry(key)
        .or_insert_with(|| {
            // expansions run in (x/M)^step with x/M ≤ 1/4
            let terms = if step >= 2.0 { 18 } else { 34 };
            Arc::new(PowerTail::new(z, p0, step, log, terms))
        })
        .clone()
}
