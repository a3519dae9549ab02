use super::divisor::DivisorTable;
use super::kseries::{ferrar_k_sum, omega_definition};
use super::tails::{cutoff, level_for, power_tail};
use super::{binomials, cexpm1, check_nonzero, check_positive, check_strip, realify, SeriesError, TruncatedSum};
use crate::numerics::C64;
use crate::special::{constants, digamma, gamma, hurwitz_zeta, zeta, zeta_one_plus, EULER_GAMMA};
use crate::special::bernoulli_over_factorial;
use std::f64::consts::PI;

fn cr(x: f64) -> C64 {
    C64::new(x, 0.0)
}

/// λ(x) = ψ(x) + 1/(2x) − log x.
pub fn lambda_small(x: f64) -> f64 {
    assert!(x > 0.0, "lambda_small needs x > 0");
    let mut shift = 0.0;
    let mut y = x;
    // λ(y) = λ(y+1) − 1/(2y) − 1/(2(y+1)) + log(1 + 1/y)
    while y < 10.0 {
        shift += -0.5 / y - 0.5 / (y + 1.0) + (1.0 / y).ln_1p();
        y += 1.0;
    }
    let b = bernoulli_over_factorial();
    let mut asym = 0.0;
    let y2 = 1.0 / (y * y);
    let mut p = y2;
    let mut fact = 1.0;
    for k in 1..=12 {
        // B_{2k}/(2k) = (B_{2k}/(2k)!)·(2k−1)!
        if k > 1 {
            fact *= ((2 * k - 2) * (2 * k - 1)) as f64;
        }
        asym -= b[k - 1] * fact * p;
        p *= y2;
    }
    asym + shift
}

/// √α((γ − log 2πα)/(2α) + Σ_{k≥1} λ(kα)).
pub fn ramanujan_lambda_side(alpha: f64) -> TruncatedSum {
    ramanujan_lambda_side_with(alpha, None)
}

pub fn ramanujan_lambda_side_with(alpha: f64, terms: Option<usize>) -> TruncatedSum {
    let n = terms.unwrap_or(((20.0 / alpha).ceil() as usize).max(4));
    let mut s = 0.0;
    for k in 1..=n {
        s += lambda_small(k as f64 * alpha);
    }
    // Σ_{k>N} λ(kα) = −Σ_j B_{2j}/(2j) α^{−2j} ζ(2j, N+1)
    let b = bernoulli_over_factorial();
    let mut tail = 0.0;
    let mut last = 0.0;
    let mut fact = 1.0;
    for j in 1..=12 {
        if j > 1 {
            fact *= ((2 * j - 2) * (2 * j - 1)) as f64;
        }
        let h = hurwitz_zeta(cr(2.0 * j as f64), (n + 1) as f64).map(|v| v.re).unwrap_or(f64::NAN);
        let t = -b[j - 1] * fact * alpha.powi(-2 * j as i32) * h;
        if j > 1 && t.abs() > last {
            break;
        }
        last = t.abs();
        tail += t;
    }
    let r = alpha.sqrt();
    let v = r * ((EULER_GAMMA - (2.0 * PI * alpha).ln()) / (2.0 * alpha) + s + tail);
    TruncatedSum::new(cr(v), r * last, n)
}

/// Σ_{n>M} σ_{−z}(n) Σ_k coef_k x^{step·k} n^{−p_k} from a cached tail family.
fn tail_series(z: C64, p0: C64, step: f64, level: usize, coef: impl Fn(usize) -> C64, xpow: C64) -> (C64, f64) {
    let pt = power_tail(z, p0, step, false);
    let c = pt.coeffs(level);
    let mut s = C64::new(0.0, 0.0);
    let mut pw = C64::new(1.0, 0.0);
    let mut last = 0.0;
    for (k, ck) in c.iter().enumerate().take(pt.terms()) {
        let t = coef(k) * pw * *ck;
        s += t;
        last = t.norm();
        pw *= xpow;
    }
    (s, last * 2.0)
}

/// Λ(x) of Koshlyakov's z = 0 transformation.
pub fn capital_lambda0(x: f64) -> Result<TruncatedSum, SeriesError> {
    check_positive(x)?;
    let level = level_for(x, 4.0);
    let m = cutoff(level);
    let t = DivisorTable::global();
    let mut direct = 0.0;
    for n in 1..=m {
        let nf = n as f64;
        direct -= t.d_unchecked(n) * x / (nf * (nf + x));
    }
    // 1/(x+n) − 1/n = Σ_{k≥1} (−x)^k n^{−k−1}
    let (tail, tb) = tail_series(cr(0.0), cr(2.0), 1.0, level, |_| cr(-x), cr(-x));
    let c = constants();
    let l = x.ln();
    let v = PI * PI / 6.0 + c.euler_gamma * c.euler_gamma - 2.0 * c.stieltjes_1 + 2.0 * c.euler_gamma * l + 0.5 * l * l
        + direct
        + tail.re;
    Ok(TruncatedSum::new(cr(v), tb, m))
}

/// Λ(x,z) for −1 < Re z < 1, z ≠ 0.
pub fn capital_lambda(x: f64, z: C64) -> Result<TruncatedSum, SeriesError> {
    check_positive(x)?;
    capital_lambda_at_level(x, z, level_for(x, 4.0))
}

/// Λ(x,z) with the direct part fixed at the cutoff of the given grid level.
pub fn capital_lambda_at_level(x: f64, z: C64, level: usize) -> Result<TruncatedSum, SeriesError> {
    check_strip(z)?;
    check_nonzero(z)?;
    check_positive(x)?;
    let level = level.max(level_for(x, 4.0)).min(super::tails::LEVELS - 1);
    let m = cutoff(level);
    let t = DivisorTable::global();
    let a = -z - 1.0;
    let mut direct = C64::new(0.0, 0.0);
    for n in 1..=m {
        let nf = n as f64;
        direct += t.sigma_unchecked(-z, n) * cexpm1(a * (x / nf).ln_1p()) / nf;
    }
    let bin = binomials(a, 40);
    let (tail, tb) = tail_series(z, cr(2.0), 1.0, level, |k| bin[k + 1], cr(x));
    let tail = tail * x;
    let l = x.ln();
    let brace = (-z * l).exp() / (-z) * zeta_one_plus(-z).0
        + (2.0 * EULER_GAMMA + l + digamma(z + 1.0)) * zeta_one_plus(z).0
        + zeta_one_plus(z).1
        + direct
        + tail;
    let pre = (z * 0.5 * l).exp() * gamma(z + 1.0);
    Ok(TruncatedSum::new(realify(pre * brace, z.im == 0.0), pre.norm() * tb * x, m))
}

/// Φ(x,z) for 0 < x < 1 from the expansion of Cohen's identity, Re z ≥ 0.
pub fn phi_small_x(x: f64, z: C64) -> Result<TruncatedSum, SeriesError> {
    check_strip(z)?;
    check_nonzero(z)?;
    check_positive(x)?;
    if x >= 1.0 {
        return Err(SeriesError::BadArgument("power series needs x < 1"));
    }
    let l = x.ln();
    let xz = (z * l).exp();
    let hz = z * (0.5 * PI);
    let mut s = C64::new(0.0, 0.0);
    let mut last = 0.0;
    let mut pw = x;
    let mut k = 0usize;
    while k < 200 {
        let e = 2.0 + 2.0 * k as f64;
        let ze = zeta(cr(e));
        let t = (zeta(e - z) * ze - xz * ze * zeta(e + z)) * pw;
        s += t;
        last = t.norm();
        if last < 1e-18 * s.norm() && k > 2 {
            break;
        }
        pw *= x * x;
        k += 1;
    }
    let bracket = -gamma(z) * ((1.0 - z) * (2.0 * PI).ln()).exp() * zeta(z) - PI * xz * zeta_one_plus(z).0 / hz.cos()
        + s * 2.0 / hz.sin();
    let pre = (-(z * 0.5 * l)).exp() / (4.0 * PI);
    let tail = last * x * x / (1.0 - x * x) * 2.0 / hz.sin().norm() * pre.norm();
    Ok(TruncatedSum::new(realify(pre * bracket, z.im == 0.0), tail, k + 1))
}

/// 𝔉(x,z) for −1 < Re z < 1, z ≠ 0.
pub fn frak_f(x: f64, z: C64) -> Result<TruncatedSum, SeriesError> {
    check_strip(z)?;
    check_nonzero(z)?;
    check_positive(x)?;
    let level = level_for(x, 4.0);
    let m = cutoff(level);
    let t = DivisorTable::global();
    let a = -(z + 1.0) * 0.5;
    let mut direct = C64::new(0.0, 0.0);
    for n in 1..=m {
        let nf = n as f64;
        let r = x / nf;
        direct += t.sigma_unchecked(-z, n) * cexpm1(a * (r * r).ln_1p()) / nf;
    }
    let bin = binomials(a, 30);
    let (tail, tb) = tail_series(z, cr(3.0), 2.0, level, |k| bin[k + 1], cr(x * x));
    let tail = tail * (x * x);
    let l = x.ln();
    let g = gamma((z + 1.0) * 0.5);
    let xh = (z * 0.5 * l).exp();
    let v = xh * g * ((3.0 * EULER_GAMMA + 2.0 * l + digamma((z + 1.0) * 0.5)) * zeta_one_plus(z).0 + zeta_one_plus(z).1 * 2.0)
        - PI.sqrt() * gamma(z * 0.5) * zeta_one_plus(-z).0 / xh
        + xh * g * (direct + tail) * 2.0;
    Ok(TruncatedSum::new(realify(v, z.im == 0.0), 2.0 * (xh * g).norm() * tb * x * x, m))
}

/// Explicit 𝔉(x,0) as printed for the z = 0 case.
pub fn frak_f0(x: f64) -> Result<TruncatedSum, SeriesError> {
    check_positive(x)?;
    let level = level_for(x, 4.0);
    let m = cutoff(level);
    let t = DivisorTable::global();
    let mut direct = 0.0;
    for n in 1..=m {
        let nf = n as f64;
        let r = x / nf;
        direct += t.d_unchecked(n) * (-0.5 * (r * r).ln_1p()).exp_m1() / nf;
    }
    let bin = binomials(cr(-0.5), 30);
    let (tail, tb) = tail_series(cr(0.0), cr(3.0), 2.0, level, |k| bin[k + 1], cr(x * x));
    let tail = tail.re * x * x;
    let c = constants();
    let (g, g1) = (c.euler_gamma, c.stieltjes_1);
    let l2 = 2f64.ln();
    let l = x.ln();
    let v = PI * PI / 24.0 + 0.5 * g * g - g * l2 + 0.25 * l2 * l2 - g1 + g * l + 0.25 * l * (x / 4.0).ln()
        + 0.5 * (direct + tail);
    Ok(TruncatedSum::new(cr(v), 0.5 * tb * x * x, m))
}

/// Σ_{n≥1} K₀(2πnx) − 1/(4x): lattice-sum expansion for small x, direct sum otherwise.
pub fn ferrar_bracket(x: f64) -> Result<TruncatedSum, SeriesError> {
    check_positive(x)?;
    if x >= 0.5 {
        return ferrar_k_sum(x);
    }
    // ½(γ + log(x/2)) + ½ Σ_{l≥1} (1/√(x²+l²) − 1/l), expanded in x²
    let bin = binomials(cr(-0.5), 60);
    let mut s = 0.0;
    let mut pw = x * x;
    let mut last = 0.0;
    let mut k = 1;
    while k < 60 {
        let t = bin[k].re * pw * zeta(cr(2.0 * k as f64 + 1.0)).re;
        s += t;
        last = t.abs();
        if last < 1e-18 * s.abs() {
            break;
        }
        pw *= x * x;
        k += 1;
    }
    let v = 0.5 * (EULER_GAMMA + (x / 2.0).ln()) + 0.5 * s;
    Ok(TruncatedSum::new(cr(v), last, k))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OmegaRepr {
    /// Defining K-Bessel series with rotated arguments.
    Definition,
    /// Rational-series closed form.
    ClosedForm,
}

/// Σ σ_{−z}(n)/(n² + x²) by direct terms plus the cached tail expansion.
fn omega_rational(x: f64, z: C64) -> (C64, f64, usize) {
    let level = level_for(x, 4.0);
    let m = cutoff(level);
    let t = DivisorTable::global();
    let mut direct = C64::new(0.0, 0.0);
    for n in 1..=m {
        let nf = n as f64;
        direct += t.sigma_unchecked(-z, n) / (nf * nf + x * x);
    }
    let (tail, tb) = tail_series(z, cr(2.0), 2.0, level, |_| cr(1.0), cr(-x * x));
    (direct + tail, tb, m)
}

/// Ω(x) = Ω(x,0).
pub fn omega0(x: f64, repr: OmegaRepr) -> Result<TruncatedSum, SeriesError> {
    check_positive(x)?;
    match repr {
        OmegaRepr::Definition => Ok(omega_definition(x, cr(0.0))),
        OmegaRepr::ClosedForm => {
            let (s, tb, m) = omega_rational(x, cr(0.0));
            let v = -EULER_GAMMA - 0.5 * x.ln() - 1.0 / (4.0 * PI * x) + x / PI * s.re;
            Ok(TruncatedSum::new(cr(v), x / PI * tb, m))
        }
    }
}

/// Ω(x,z); the closed form needs z ≠ 0.
pub fn omega_z(x: f64, z: C64, repr: OmegaRepr) -> Result<TruncatedSum, SeriesError> {
    check_strip(z)?;
    check_positive(x)?;
    match repr {
        OmegaRepr::Definition => Ok(omega_definition(x, z)),
        OmegaRepr::ClosedForm => {
            check_nonzero(z)?;
            let (s, tb, m) = omega_rational(x, z);
            let l = x.ln();
            let xh = (z * 0.5 * l).exp();
            let v = -gamma(z) * zeta(z) * (-z * (2.0 * PI * x.sqrt()).ln()).exp() + xh / x * zeta(z) / (2.0 * PI)
                - xh * zeta_one_plus(z).0 * 0.5
                + xh * x / PI * s;
            Ok(TruncatedSum::new(realify(v, z.im == 0.0), xh.norm() * x / PI * tb, m))
        }
    }
}

/// Right side of Cohen's identity with k = 1, for complex x.
pub fn cohen_rhs(z: C64, x: C64) -> Result<TruncatedSum, SeriesError> {
    if !(z.re >= 0.0 && z.re < 1.0) {
        return Err(SeriesError::BadArgument("need 0 <= Re z < 1"));
    }
    check_nonzero(z)?;
    if x.norm() == 0.0 || (x.im == 0.0 && x.re == x.re.round()) {
        return Err(SeriesError::PoleParameter("x = 0 or integer x"));
    }
    let lx = x.ln();
    let pw = |e: C64| (e * lx).exp();
    let hz = z * (0.5 * PI);
    let l2p = (2.0 * PI).ln();
    let a = pw(z - 1.0) / hz.sin() - gamma(z) / ((z - 1.0) * l2p).exp();
    let b = gamma(z + 1.0) * 2.0 / (x * ((z + 1.0) * l2p).exp()) - pw(z) * PI / hz.cos();
    let level = level_for(x.norm(), 4.0);
    let m = cutoff(level);
    let t = DivisorTable::global();
    let xz2 = pw(z - 2.0);
    let x2 = x * x;
    let mut direct = C64::new(0.0, 0.0);
    for n in 1..=m {
        let nf = n as f64;
        let nz = ((z - 2.0) * nf.ln()).exp();
        direct += t.sigma_unchecked(-z, n) * (nz - xz2) / (nf * nf - x2);
    }
    // (n^{z−2} − x^{z−2})/(n² − x²) = Σ_k x^{2k} (n^{z−4−2k} − x^{z−2} n^{−2−2k})
    let (ta, tba) = tail_series(z, 4.0 - z, 2.0, level, |_| cr(1.0), x2);
    let (tb_, tbb) = tail_series(z, cr(2.0), 2.0, level, |_| cr(1.0), x2);
    let rsum = direct + ta - xz2 * tb_;
    let x3 = x2 * x;
    let v = a * zeta(z) + b * zeta_one_plus(z).0 + (zeta(cr(2.0)) * zeta(2.0 - z) * x + x3 * rsum) * 2.0 / hz.sin();
    let bound = (x3.norm() * (tba + xz2.norm() * tbb)) * 2.0 / hz.sin().norm();
    Ok(TruncatedSum::new(realify(v, z.im == 0.0 && x.im == 0.0), bound, m))
}

/// Right side of Voronoi's K₀ identity, rational series summed with the near-x terms stabilised.
pub fn voronoi_rhs(x: f64) -> Result<TruncatedSum, SeriesError> {
    check_positive(x)?;
    if x == x.round() {
        return Err(SeriesError::PoleParameter("integer x in the rational series"));
    }
    let level = level_for(x, 4.0);
    let m = cutoff(level);
    let t = DivisorTable::global();
    let mut direct = 0.0;
    for n in 1..=m {
        let nf = n as f64;
        let d = x - nf;
        let lr = if d.abs() < 0.25 * nf { (d / nf).ln_1p() / d } else { (x / nf).ln() / d };
        direct += t.d_unchecked(n) * lr / (x + nf);
    }
    // Σ_{n>M}: log(x/n)/(x²−n²) = −Σ_k x^{2k} (log x − log n) n^{−2−2k}
    let s0 = power_tail(cr(0.0), cr(2.0), 2.0, false);
    let sl = power_tail(cr(0.0), cr(2.0), 2.0, true);
    let (c0, cl) = (s0.coeffs(level), sl.coeffs(level));
    let lx = x.ln();
    let mut tail = 0.0;
    let mut pw = 1.0;
    let mut last = 0.0;
    for k in 0..s0.terms() {
        let term = -pw * (lx * c0[k].re - cl[k].re);
        tail += term;
        last = term.abs();
        pw *= x * x;
    }
    let r = direct + tail;
    let v = x / (PI * PI) * r - 0.5 * EULER_GAMMA - (0.25 + 1.0 / (4.0 * PI * PI * x)) * lx
        - (2.0 * PI).ln() / (2.0 * PI * PI * x);
    Ok(TruncatedSum::new(cr(v), x / (PI * PI) * last * 2.0, m))
}

/// α^{(z+1)/2} Γ(z+1)(2π)^{−(z+1)} [Σ(ζ(z+1,nα) − (nα)^{−z}/z − (nα)^{−z−1}/2) − ζ(z+1)/(2α^{z+1}) − ζ(z)/(αz)].
pub fn hurwitz_side(z: C64, alpha: f64) -> Result<TruncatedSum, SeriesError> {
    check_strip(z)?;
    check_nonzero(z)?;
    check_positive(alpha)?;
    let n = ((30.0 / alpha).ceil() as usize).max(8);
    let mut s = C64::new(0.0, 0.0);
    for k in 1..=n {
        let a = k as f64 * alpha;
        let la = a.ln();
        let h = hurwitz_zeta(z + 1.0, a).map_err(|_| SeriesError::BadArgument("Hurwitz evaluation"))?;
        s += h - (-z * la).exp() / z - (-(z + 1.0) * la).exp() * 0.5;
    }
    // Σ_{n>N} via ζ(s,a) − a^{1−s}/(s−1) − a^{−s}/2 ~ Σ_k B_{2k}/(2k)! (s)_{2k−1} a^{1−s−2k}
    let b = bernoulli_over_factorial();
    let mut tail = C64::new(0.0, 0.0);
    let mut poch = z + 1.0;
    let mut last = 0.0;
    for k in 1..=12 {
        if k > 1 {
            poch = poch * (z + (2 * k - 2) as f64) * (z + (2 * k - 1) as f64);
        }
        let zk = z + 2.0 * k as f64;
        let h = hurwitz_zeta(zk, (n + 1) as f64).map_err(|_| SeriesError::BadArgument("Hurwitz evaluation"))?;
        let t = poch * b[k - 1] * (-zk * alpha.ln()).exp() * h;
        if k > 2 && t.norm() > last {
            break;
        }
        last = t.norm();
        tail += t;
    }
    let la = alpha.ln();
    let br = s + tail - zeta_one_plus(z).0 * 0.5 * (-(z + 1.0) * la).exp() - zeta(z) / (z * alpha);
    let pre = ((z + 1.0) * 0.5 * la).exp() * gamma(z + 1.0) * (-(z + 1.0) * (2.0 * PI).ln()).exp();
    Ok(TruncatedSum::new(realify(pre * br, z.im == 0.0), pre.norm() * last, n))
}
