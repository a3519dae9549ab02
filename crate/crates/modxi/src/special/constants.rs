use super::bernoulli_over_factorial;
use std::sync::OnceLock;

/// γ as a literal, for contexts that must not depend on the computed value.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_606_512_090_082;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpecialConstants {
    pub euler_gamma: f64,
    pub stieltjes_1: f64,
    pub log_2pi: f64,
}

/// Stieltjes constant γ_m for m ∈ {0, 1}: the limit of
/// Σ_{k≤n} (log k)^m/k − (log n)^{m+1}/(m+1), summed to a cutoff and
/// completed by Euler–Maclaurin.
pub fn stieltjes(order: u32) -> f64 {
    assert!(order <= 1, "only orders 0 and 1 are implemented");
    let n = 30usize;
    let f = |x: f64| if order == 0 { 1.0 / x } else { x.ln() / x };
    let mut s = 0.0;
    for k in (1..n).rev() {
        s += f(k as f64);
    }
    let big = n as f64;
    let lb = big.ln();
    let antider = if order == 0 { lb } else { 0.5 * lb * lb };
    s += 0.5 * f(big) - antider;
    // f^{(j)}(x) = (−1)^j j! x^{−j−1} (1 or log x − H_j)
    let coef = bernoulli_over_factorial();
    let mut harmonic = 0.0;
    let mut fact = 1.0;
    for j in 1..=(2 * coef.len() - 1) {
        harmonic += 1.0 / j as f64;
        fact *= j as f64;
        if j % 2 == 1 {
            let factor = if order == 0 { 1.0 } else { lb - harmonic };
            let deriv = -fact * big.powi(-(j as i32) - 1) * factor;
            s -= coef[(j - 1) / 2] * deriv;
        }
    }
    s
}

pub fn constants() -> &'static SpecialConstants {
    static C: OnceLock<SpecialConstants> = OnceLock::new();
    C.get_or_init(|| SpecialConstants {
        euler_gamma: stieltjes(0),
        stieltjes_1: stieltjes(1),
        log_2pi: (2.0 * std::f64::consts::PI).ln(),
    })
}
