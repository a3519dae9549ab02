use super::{SpecialError, BERNOULLI_EVEN};
use crate::numerics::C64;
use std::f64::consts::PI;

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_741_780_329_736_4;
const SHIFT_RADIUS: f64 = 15.0;

fn is_nonpositive_integer(s: C64) -> bool {
    s.im == 0.0 && s.re <= 0.0 && s.re == s.re.round()
}

fn shift_count(s: C64) -> usize {
    if s.norm() >= SHIFT_RADIUS && s.re > 0.0 {
        0
    } else {
        (SHIFT_RADIUS - s.re).ceil().max(0.0) as usize
    }
}

fn stirling_log(z: C64) -> C64 {
    let mut acc = (z - 0.5) * z.ln() - z + LN_SQRT_2PI;
    let zi = z.inv();
    let zi2 = zi * zi;
    let mut p = zi;
    for k in 1..=10 {
        let kk = k as f64;
        acc += p * (BERNOULLI_EVEN[k - 1] / (2.0 * kk * (2.0 * kk - 1.0)));
        p *= zi2;
    }
    acc
}

/// ln Γ(s) modulo 2πi (sufficient for exponentiation).
pub fn log_gamma(s: C64) -> C64 {
    if s.re < 0.5 {
        let lsin = (s * PI).sin().ln();
        return C64::new(PI.ln(), 0.0) - lsin - log_gamma(C64::new(1.0, 0.0) - s);
    }
    let n = shift_count(s);
    if n == 0 {
        return stirling_log(s);
    }
    let mut prod = C64::new(1.0, 0.0);
    for j in 0..n {
        prod *= s + j as f64;
    }
    stirling_log(s + n as f64) - prod.ln()
}

/// Γ(s). Returns an infinite value at the poles; see [`gamma_checked`].
pub fn gamma(s: C64) -> C64 {
    if is_nonpositive_integer(s) {
        return C64::new(f64::INFINITY, 0.0);
    }
    if s.im == 0.0 {
        // positive integers are exact
        if s.re > 0.0 && s.re <= 25.0 && s.re == s.re.round() {
            let mut f = 1.0;
            for k in 2..(s.re as u32) {
                f *= k as f64;
            }
            return C64::new(f, 0.0);
        }
        if s.re < 0.5 {
            let g = gamma(C64::new(1.0 - s.re, 0.0)).re;
            return C64::new(PI / ((PI * s.re).sin() * g), 0.0);
        }
        return C64::new(log_gamma(s).re.exp(), 0.0);
    }
    log_gamma(s).exp()
}

pub fn gamma_checked(s: C64) -> Result<C64, SpecialError> {
    if is_nonpositive_integer(s) {
        Err(SpecialError::GammaPole(s.re))
    } else {
        Ok(gamma(s))
    }
}

/// 1/Γ(s), entire; zero at the nonpositive integers.
pub fn reciprocal_gamma(s: C64) -> C64 {
    if is_nonpositive_integer(s) {
        C64::new(0.0, 0.0)
    } else {
        gamma(s).inv()
    }
}

/// ψ(s) = Γ′(s)/Γ(s).
pub fn digamma(s: C64) -> C64 {
    if s.re < 0.5 {
        let one = C64::new(1.0, 0.0);
        let cot = (s * PI).cos() / (s * PI).sin();
        return digamma(one - s) - cot * PI;
    }
    let n = shift_count(s);
    let mut corr = C64::new(0.0, 0.0);
    for j in 0..n {
        corr += (s + j as f64).inv();
    }
    let z = s + n as f64;
    let zi = z.inv();
    let zi2 = zi * zi;
    let mut acc = z.ln() - zi * 0.5;
    let mut p = zi2;
    for k in 1..=10 {
        acc -= p * (BERNOULLI_EVEN[k - 1] / (2.0 * k as f64));
        p *= zi2;
    }
    acc - corr
}
