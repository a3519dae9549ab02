use super::{bernoulli_over_factorial, constants, SpecialError};
use crate::numerics::C64;

fn direct_terms(s: C64) -> usize {
    (10.0 + 2.0 * s.im.abs()).ceil().max(20.0) as usize
}

/// Euler–Maclaurin value of Σ_{n≥0} (n+a)^{−s} and, optionally, its s-derivative.
/// With `split`, the pole part 1/(s−1) (and −1/(s−1)² for the derivative) is left out.
fn euler_maclaurin(s: C64, a: f64, with_deriv: bool, split: bool) -> (C64, C64) {
    let one = C64::new(1.0, 0.0);
    let n_target = direct_terms(s) as f64;
    let n_direct = if a >= n_target { 0 } else { (n_target - a.floor()).max(0.0) as usize };
    let mut sum = C64::new(0.0, 0.0);
    let mut dsum = C64::new(0.0, 0.0);
    for j in (0..n_direct).rev() {
        let q = j as f64 + a;
        let lq = q.ln();
        let term = (-s * lq).exp();
        sum += term;
        if with_deriv {
            dsum -= term * lq;
        }
    }
    let big = n_direct as f64 + a;
    let ln_big = big.ln();
    let pw = (-s * ln_big).exp(); // big^{-s}
    let sm1 = s - one;
    if split {
        let (g, dg) = head_regular(sm1, ln_big);
        sum += g + pw * 0.5;
        if with_deriv {
            dsum += dg - pw * ln_big * 0.5;
        }
    } else {
        let head = pw * big / sm1;
        sum += head + pw * 0.5;
        if with_deriv {
            dsum += -head * ln_big - head / sm1 - pw * ln_big * 0.5;
        }
    }
    // Bernoulli corrections: B_{2k}/(2k)! · (s)_{2k−1} · big^{−s−2k+1}
    let coef = bernoulli_over_factorial();
    let inv_big = 1.0 / big;
    let mut poch = s; // (s)_1
    let mut dpoch = one;
    let mut pw_k = pw * inv_big; // big^{−s−1}
    for (k, c) in coef.iter().enumerate() {
        let term = poch * pw_k * *c;
        sum += term;
        if with_deriv {
            dsum += (dpoch * pw_k - poch * pw_k * ln_big) * *c;
        }
        if term.norm() < 1e-18 * sum.norm() && k > 2 {
            break;
        }
        // advance (s)_{2k−1} → (s)_{2k+1}
        let m1 = s + (2 * k + 1) as f64;
        let m2 = s + (2 * k + 2) as f64;
        dpoch = dpoch * m1 * m2 + poch * (m1 + m2);
        poch = poch * m1 * m2;
        pw_k = pw_k * inv_big * inv_big;
    }
    (sum, dsum)
}

/// (e^{−dL} − 1)/d and its d-derivative by their Taylor series.
fn head_regular(d: C64, l: f64) -> (C64, C64) {
    let mut g = C64::new(0.0, 0.0);
    let mut dg = C64::new(0.0, 0.0);
    // c_k = (−L)^k / k!
    let mut ck = -l;
    let mut dpow = C64::new(1.0, 0.0);
    let mut dpow_prev = C64::new(0.0, 0.0);
    for k in 1..60 {
        g += dpow * ck;
        dg += dpow_prev * (ck * (k - 1) as f64);
        ck *= -l / (k + 1) as f64;
        dpow_prev = dpow;
        dpow *= d;
        if ck.abs() * dpow.norm() < 1e-18 && k > 4 {
            break;
        }
    }
    (g, dg)
}

const POLE_SPLIT: f64 = 0.1;

/// ζ(s) − 1/(s−1) and ζ′(s) + 1/(s−1)², accurate next to s = 1.
pub fn zeta_regular(s: C64) -> (C64, C64) {
    let d = s - 1.0;
    if d.norm() < POLE_SPLIT {
        return euler_maclaurin(s, 1.0, true, true);
    }
    (zeta(s) - d.inv(), zeta_deriv(s) + (d * d).inv())
}

/// ζ(s). At s = 1 the result is infinite; see [`zeta_checked`].
pub fn zeta(s: C64) -> C64 {
    if s.re == 1.0 && s.im == 0.0 {
        return C64::new(f64::INFINITY, 0.0);
    }
    if s.re > 60.0 {
        let two = (-s * 2f64.ln()).exp();
        let three = (-s * 3f64.ln()).exp();
        return C64::new(1.0, 0.0) + two + three;
    }
    let d = s - 1.0;
    let v = if d.norm() < POLE_SPLIT {
        euler_maclaurin(s, 1.0, false, true).0 + d.inv()
    } else {
        euler_maclaurin(s, 1.0, false, false).0
    };
    if s.im == 0.0 {
        C64::new(v.re, 0.0)
    } else {
        v
    }
}

pub fn zeta_checked(s: C64) -> Result<C64, SpecialError> {
    if s.re == 1.0 && s.im == 0.0 {
        Err(SpecialError::ZetaPole)
    } else {
        Ok(zeta(s))
    }
}

/// ζ′(s) by termwise differentiation of the Euler–Maclaurin formula.
pub fn zeta_deriv(s: C64) -> C64 {
    if s.re == 1.0 && s.im == 0.0 {
        return C64::new(f64::NEG_INFINITY, 0.0);
    }
    let d = s - 1.0;
    let v = if d.norm() < POLE_SPLIT {
        euler_maclaurin(s, 1.0, true, true).1 - (d * d).inv()
    } else {
        euler_maclaurin(s, 1.0, true, false).1
    };
    if s.im == 0.0 {
        C64::new(v.re, 0.0)
    } else {
        v
    }
}

/// (s − 1)ζ(s), continuous through s = 1.
pub fn zeta_times_s_minus_one(s: C64) -> C64 {
    let d = s - 1.0;
    if d.norm() < 1e-4 {
        let k = constants();
        C64::new(1.0, 0.0) + d * k.euler_gamma - d * d * k.stieltjes_1
    } else {
        d * zeta(s)
    }
}

/// Hurwitz ζ(s, a) for real a > 0.
pub fn hurwitz_zeta(s: C64, a: f64) -> Result<C64, SpecialError> {
    if !(a > 0.0) {
        return Err(SpecialError::BadHurwitzParameter(a));
    }
    if s.re == 1.0 && s.im == 0.0 {
        return Err(SpecialError::ZetaPole);
    }
    let v = euler_maclaurin(s, a, false, false).0;
    Ok(if s.im == 0.0 { C64::new(v.re, 0.0) } else { v })
}

/// ∂ζ(s, a)/∂s.
pub fn hurwitz_zeta_deriv(s: C64, a: f64) -> Result<C64, SpecialError> {
    if !(a > 0.0) {
        return Err(SpecialError::BadHurwitzParameter(a));
    }
    if s.re == 1.0 && s.im == 0.0 {
        return Err(SpecialError::ZetaPole);
    }
    let v = euler_maclaurin(s, a, true, false).1;
    Ok(if s.im == 0.0 { C64::new(v.re, 0.0) } else { v })
}

/// (ζ(1+w), ζ′(1+w)) with the pole taken at w exactly, so that small w
/// does not lose digits to the rounding of 1 + w.
pub fn zeta_one_plus(w: C64) -> (C64, C64) {
    let (r, dr) = zeta_regular(w + 1.0);
    (r + w.inv(), dr - (w * w).inv())
}
