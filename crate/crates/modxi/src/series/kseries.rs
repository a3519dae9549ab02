use super::closed::{phi_small_x, voronoi_rhs};
use super::divisor::{sigma_sym, DivisorTable};
use super::{check_nonzero, check_positive, check_strip, realify, SeriesError, TruncatedSum};
use crate::bessel::k_raw;
use crate::numerics::C64;
use crate::special::{gamma, zeta, zeta_one_plus, EULER_GAMMA};
use std::f64::consts::PI;

/// Crude majorant of |c_n K_ν(w_n)| used for truncation and tail bounds.
fn k_majorant(coef_bound: f64, w: C64, nu_re: f64) -> f64 {
    let r = w.norm();
    let poly = (PI / (2.0 * r)).sqrt() * (1.0 + (nu_re * nu_re + 1.0) / r);
    2.0 * coef_bound * poly * (-w.re).exp()
}

/// Σ_{n≥1} c(n) K_ν(w(n)) with exponentially decaying terms.
fn k_sum<C, W>(nu: C64, coef: C, arg: W, fixed: Option<usize>) -> TruncatedSum
where
    C: Fn(usize) -> C64,
    W: Fn(usize) -> C64,
{
    let mut sum = C64::new(0.0, 0.0);
    let mut n = 1usize;
    let table = DivisorTable::global();
    let bound_at = |n: usize| {
        let cb = 2.0 * (n as f64).sqrt() * (n as f64).powf(nu.re.abs() * 0.5 + 0.5);
        k_majorant(cb, arg(n), nu.re)
    };
    loop {
        if let Some(f) = fixed {
            if n > f {
                break;
            }
        } else if bound_at(n) < 1e-18 * sum.norm().max(1e-280) || n >= table.limit() {
            break;
        }
        sum += coef(n) * k_raw(nu, arg(n));
        n += 1;
    }
    let terms = n - 1;
    let mut tail = 0.0;
    let mut m = n;
    loop {
        let b = bound_at(m);
        tail += b;
        if b < 1e-20 * tail.max(1e-300) || m > n + 100_000 {
            break;
        }
        m += 1;
    }
    TruncatedSum::new(sum, tail, terms)
}

/// √α(1/(2α) − Σ_{n≥1} e^{−πα²n²}).
pub fn theta_tail(alpha: f64) -> TruncatedSum {
    let q = PI * alpha * alpha;
    let mut s = 0.0;
    let mut n = 1usize;
    loop {
        let t = (-q * (n * n) as f64).exp();
        if t < 1e-19 * s && n > 1 {
            break;
        }
        s += t;
        n += 1;
        if n > 1_000_000 {
            break;
        }
    }
    let next = (-q * (n * n) as f64).exp();
    let tail = alpha.sqrt() * next / (1.0 - (-q).exp()).max(1e-300);
    TruncatedSum::new(C64::new(alpha.sqrt() * (0.5 / alpha - s), 0.0), tail, n - 1)
}

/// √α((γ − log 4πα)/α − 4Σ d(n) K₀(2πnα)).
pub fn kosh_k0_side(alpha: f64) -> TruncatedSum {
    kosh_k0_side_with(alpha, None)
}

pub fn kosh_k0_side_with(alpha: f64, terms: Option<usize>) -> TruncatedSum {
    let t = DivisorTable::global();
    let s = k_sum(
        C64::new(0.0, 0.0),
        |n| C64::new(t.d_unchecked(n), 0.0),
        |n| C64::new(2.0 * PI * n as f64 * alpha, 0.0),
        terms,
    );
    let r = alpha.sqrt();
    let v = r * ((EULER_GAMMA - (4.0 * PI * alpha).ln()) / alpha - 4.0 * s.value.re);
    TruncatedSum::new(C64::new(v, 0.0), 4.0 * r * s.tail_bound, s.terms)
}

/// (1/√α)(ω(z,α) + ω(−z,α) − 4α Σ σ_{−z}(n) n^{z/2} K_{z/2}(2nπα)).
pub fn guinand_side(z: C64, alpha: f64) -> Result<TruncatedSum, SeriesError> {
    check_strip(z)?;
    check_nonzero(z)?;
    check_positive(alpha)?;
    let omega = |z: C64| (z * 0.5 * (alpha / PI).ln()).exp() * gamma(z * 0.5) * zeta(z);
    let s = k_sum(z * 0.5, |n| sigma_sym(z, n), |n| C64::new(2.0 * PI * n as f64 * alpha, 0.0), None);
    let v = (omega(z) + omega(-z) - s.value * (4.0 * alpha)) / alpha.sqrt();
    Ok(TruncatedSum::new(realify(v, z.im == 0.0), 4.0 * alpha.sqrt() * s.tail_bound, s.terms))
}

fn mu(x: f64, z: C64) -> C64 {
    gamma(z + 1.0) * zeta_one_plus(z).0 * (-(z * 0.5 + 1.0) * x.ln()).exp() / (z * (2.0 * PI).ln() + 2.0 * (2.0 * PI).ln()).exp()
}

const PHI_SEAM: f64 = 0.5;

/// Φ(x,z) = 2Σσ_{−z}(n)n^{z/2}K_z(4π√(nx)) − μ(x,z) − μ(x,−z).
pub fn phi(x: f64, z: C64) -> Result<TruncatedSum, SeriesError> {
    check_strip(z)?;
    check_nonzero(z)?;
    check_positive(x)?;
    let zz = if z.re < 0.0 || (z.re == 0.0 && z.im < 0.0) { -z } else { z };
    if x < PHI_SEAM {
        return phi_small_x(x, zz);
    }
    let s = k_sum(zz, |n| sigma_sym(zz, n), |n| C64::new(4.0 * PI * (n as f64 * x).sqrt(), 0.0), None);
    let v = s.value * 2.0 - mu(x, zz) - mu(x, -zz);
    Ok(TruncatedSum::new(realify(v, z.im == 0.0), 2.0 * s.tail_bound, s.terms))
}

/// 2Σ d(n) K₀(4π√(nx)) + log(4π²x)/(4π²x), the z = 0 case of Φ.
pub fn phi0(x: f64) -> Result<TruncatedSum, SeriesError> {
    check_positive(x)?;
    let extra = (4.0 * PI * PI * x).ln() / (4.0 * PI * PI * x);
    if x < PHI_SEAM {
        let r = voronoi_rhs(x)?;
        return Ok(TruncatedSum::new(r.value + extra, r.tail_bound, r.terms));
    }
    let s = voronoi_k(x, None);
    Ok(TruncatedSum::new(s.value + extra, s.tail_bound, s.terms))
}

fn voronoi_k(x: f64, terms: Option<usize>) -> TruncatedSum {
    let t = DivisorTable::global();
    let s = k_sum(
        C64::new(0.0, 0.0),
        |n| C64::new(t.d_unchecked(n), 0.0),
        |n| C64::new(4.0 * PI * (n as f64 * x).sqrt(), 0.0),
        terms,
    );
    TruncatedSum::new(C64::new(2.0 * s.value.re, 0.0), 2.0 * s.tail_bound, s.terms)
}

/// 2Σ d(n) K₀(4π√(nx)), optionally with a fixed number of terms.
pub fn voronoi_lhs(x: f64, terms: Option<usize>) -> Result<TruncatedSum, SeriesError> {
    check_positive(x)?;
    Ok(voronoi_k(x, terms))
}

/// |LHS − RHS| of Voronoi's K₀ identity at non-integer x.
pub fn voronoi_check(x: f64) -> Result<f64, SeriesError> {
    check_positive(x)?;
    if x == x.round() {
        return Err(SeriesError::PoleParameter("integer x in the rational series"));
    }
    let l = voronoi_k(x, None);
    let r = voronoi_rhs(x)?;
    Ok((l.value - r.value).norm())
}

/// 8πx^{z/2} Σ σ_{−z}(n) n^{z/2} K_z(4π√(nx)) for complex x off the negative axis.
pub fn cohen_lhs(z: C64, x: C64) -> Result<TruncatedSum, SeriesError> {
    check_strip(z)?;
    let sx = x.sqrt();
    if !(sx.re > 0.0) {
        return Err(SeriesError::BadArgument("need Re √x > 0"));
    }
    let s = k_sum(z, |n| sigma_sym(z, n), |n| sx * (4.0 * PI * (n as f64).sqrt()), None);
    let pre = (z * 0.5 * x.ln()).exp() * (8.0 * PI);
    let v = pre * s.value;
    Ok(TruncatedSum::new(realify(v, z.im == 0.0 && x.im == 0.0), pre.norm() * s.tail_bound, s.terms))
}

/// Σ_{n≥1} K₀(2πnx) − 1/(4x) by direct summation, suited to x ≳ 0.3.
pub fn ferrar_k_sum(x: f64) -> Result<TruncatedSum, SeriesError> {
    check_positive(x)?;
    let s = k_sum(C64::new(0.0, 0.0), |_| C64::new(1.0, 0.0), |n| C64::new(2.0 * PI * n as f64 * x, 0.0), None);
    Ok(TruncatedSum::new(C64::new(s.value.re - 0.25 / x, 0.0), s.tail_bound, s.terms))
}

/// Ω(x,z) from its defining K-series with rotated arguments.
pub(crate) fn omega_definition(x: f64, z: C64) -> TruncatedSum {
    let rot = C64::from_polar(1.0, PI / 4.0);
    let ph = (C64::new(0.0, PI / 4.0) * z).exp();
    let phm = (C64::new(0.0, -PI / 4.0) * z).exp();
    let a = k_sum(z, |n| sigma_sym(z, n), |n| rot * (4.0 * PI * (n as f64 * x).sqrt()), None);
    let b = k_sum(z, |n| sigma_sym(z, n), |n| rot.conj() * (4.0 * PI * (n as f64 * x).sqrt()), None);
    let v = (ph * a.value + phm * b.value) * 2.0;
    TruncatedSum::new(realify(v, z.im == 0.0), 2.0 * (a.tail_bound + b.tail_bound), a.terms.max(b.terms))
}
