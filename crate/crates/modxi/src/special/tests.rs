use super::*;
use crate::numerics::{c64, cr, C64};
use proptest::prelude::*;
use std::f64::consts::PI;

/// Borwein's alternating-series algorithm for ζ; independent of Euler–Maclaurin.
/// Well conditioned only for modest |Im s|.
fn zeta_borwein(s: C64) -> C64 {
    let n = 60usize;
    let mut d = vec![0.0f64; n + 1];
    let mut term = 1.0 / n as f64;
    let mut acc = term;
    d[0] = acc * n as f64;
    for i in 1..=n {
        term *= ((n + i - 1) as f64 * 4.0 * (n - i + 1) as f64) / ((2 * i - 1) as f64 * (2 * i) as f64);
        acc += term;
        d[i] = acc * n as f64;
    }
    let mut sum = C64::new(0.0, 0.0);
    for k in 0..n {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        sum += (-s * ((k + 1) as f64).ln()).exp() * (sign * (d[k] - d[n]));
    }
    let one = C64::new(1.0, 0.0);
    let denom = (one - (one - s).exp2_like()) * d[n];
    -sum / denom
}

trait Exp2 {
    fn exp2_like(self) -> C64;
}
impl Exp2 for C64 {
    fn exp2_like(self) -> C64 {
        (self * 2f64.ln()).exp()
    }
}

fn close(a: C64, b: C64, tol: f64) -> bool {
    (a - b).norm() <= tol
}

#[test]
fn gamma_values() {
    assert!((gamma(cr(5.0)).re - 24.0).abs() < 1e-13);
    assert!((gamma(cr(0.5)).re - PI.sqrt()).abs() < 1e-14);
    assert!((gamma(cr(1.5)).re - PI.sqrt() / 2.0).abs() < 1e-14);
    assert!(gamma_checked(cr(-2.0)).is_err());
    assert_eq!(reciprocal_gamma(cr(-3.0)), cr(0.0));
}

#[test]
fn digamma_values() {
    let g = EULER_GAMMA;
    assert!((digamma(cr(1.0)).re + g).abs() < 1e-14);
    assert!((digamma(cr(2.0)).re - (1.0 - g)).abs() < 1e-14);
    assert!((digamma(cr(0.5)).re - (-g - 2.0 * 2f64.ln())).abs() < 1e-14);
}

#[test]
fn digamma_matches_series_definition() {
    // ψ(s) = −γ − Σ (1/(m+s) − 1/(m+1)), summed with an integral tail
    for &s in &[c64(0.3, 0.0), c64(2.5, 1.5), c64(0.7, -3.0)] {
        let m_max = 200_000usize;
        let mut acc = C64::new(0.0, 0.0);
        for m in (0..m_max).rev() {
            acc += (s + m as f64).inv() - 1.0 / (m + 1) as f64;
        }
        // tail Σ_{m≥M} (1/(m+s) − 1/(m+1)) ≈ ln((M+1)/(M+s)) … first order
        let tail = ((m_max as f64 + 0.5) / (s + m_max as f64 - 0.5)).ln();
        let series = -acc - EULER_GAMMA - tail;
        assert!(close(series, digamma(s), 1e-9), "{s} {series} {}", digamma(s));
    }
}

#[test]
fn zeta_special_values() {
    assert!((zeta(cr(2.0)).re - PI * PI / 6.0).abs() < 1e-15);
    assert!((zeta(cr(0.0)).re + 0.5).abs() < 1e-15);
    let oracle = zeta_borwein(cr(0.5));
    assert!(close(oracle, cr(-1.460_354_508_809_586_8), 1e-13));
    assert!(close(zeta(cr(0.5)), oracle, 1e-14));
    assert!(zeta_checked(cr(1.0)).is_err());
}

#[test]
fn zeta_against_borwein_on_strip() {
    for &s in &[c64(0.3, 4.0), c64(0.5, 3.0), c64(0.8, 6.0), c64(1.5, -5.0), c64(-0.4, 2.0)] {
        let a = zeta(s);
        let b = zeta_borwein(s);
        assert!(close(a, b, 1e-11 * b.norm().max(1.0)), "{s}: {a} vs {b}");
    }
}

#[test]
fn zeta_derivative() {
    // −Σ log n / n² with Euler–Maclaurin-free tail ∫_N^∞ log x/x² dx
    let n = 2_000_000usize;
    let mut acc = 0.0;
    for k in (2..=n).rev() {
        let x = k as f64;
        acc += x.ln() / (x * x);
    }
    let big = n as f64 + 0.5;
    acc += (big.ln() + 1.0) / big;
    assert!((zeta_deriv(cr(2.0)).re + acc).abs() < 1e-9);
    assert!((zeta_deriv(cr(2.0)).re + 0.937_548_254_315_843_8).abs() < 1e-13);
    assert!((zeta_deriv(cr(0.0)).re + 0.5 * (2.0 * PI).ln()).abs() < 1e-13);
    let s = c64(0.4, 3.0);
    assert!(close(zeta_deriv(s.conj()), zeta_deriv(s).conj(), 1e-14));
}

#[test]
fn zeta_derivative_vs_difference_grid() {
    let h = 1e-4;
    let mut worst: f64 = 0.0;
    for i in 0..6 {
        for j in 0..6 {
            let s = c64(-0.5 + 0.5 * i as f64, 1.0 + 6.0 * j as f64);
            let fd = (zeta(s + h) - zeta(s - h)) / (2.0 * h);
            worst = worst.max((fd - zeta_deriv(s)).norm());
        }
    }
    assert!(worst < 1e-7, "{worst}");
}

#[test]
fn hurwitz_values() {
    assert!(close(hurwitz_zeta(cr(3.0), 1.0).unwrap(), zeta(cr(3.0)), 1e-15));
    assert!((hurwitz_zeta(cr(2.0), 0.5).unwrap().re - PI * PI / 2.0).abs() < 1e-13);
    assert!((hurwitz_zeta(cr(2.0), 2.0).unwrap().re - (PI * PI / 6.0 - 1.0)).abs() < 1e-14);
    assert!(hurwitz_zeta(cr(2.0), 0.0).is_err());
    let s = c64(2.5, 0.0);
    let d = hurwitz_zeta_deriv(s, 3.5).unwrap();
    let fd = (hurwitz_zeta(s + 1e-5, 3.5).unwrap() - hurwitz_zeta(s - 1e-5, 3.5).unwrap()) / 2e-5;
    assert!(close(d, fd, 1e-8));
}

/// Richardson-extrapolated defining sequence Σ_{k≤m} (log k)^r/k − (log m)^{r+1}/(r+1).
fn stieltjes_sequence(order: u32, m: usize) -> f64 {
    let raw = |m: usize| {
        let mut s = 0.0;
        for k in (1..=m).rev() {
            let x = k as f64;
            s += if order == 0 { 1.0 / x } else { x.ln() / x };
        }
        let l = (m as f64).ln();
        s - if order == 0 { l } else { 0.5 * l * l }
    };
    // subtract the half-term; what is left decays like (p log m + q)/m²
    let half = |m: usize| {
        let x = m as f64;
        0.5 * if order == 0 { 1.0 / x } else { x.ln() / x }
    };
    let seq = |m: usize| raw(m) - half(m);
    let ms = [m as f64, 2.0 * m as f64, 4.0 * m as f64];
    let vals = [seq(m), seq(2 * m), seq(4 * m)];
    let row = |x: f64| {
        if order == 0 {
            [1.0, 1.0 / (x * x), 1.0 / (x * x * x * x)]
        } else {
            [1.0, x.ln() / (x * x), 1.0 / (x * x)]
        }
    };
    solve3([row(ms[0]), row(ms[1]), row(ms[2])], vals)[0]
}

fn solve3(mut m: [[f64; 3]; 3], mut r: [f64; 3]) -> [f64; 3] {
    for i in 0..3 {
        let p = m[i][i];
        for j in i + 1..3 {
            let f = m[j][i] / p;
            for k in i..3 {
                m[j][k] -= f * m[i][k];
            }
            r[j] -= f * r[i];
        }
    }
    let mut x = [0.0; 3];
    for i in (0..3).rev() {
        let mut s = r[i];
        for k in i + 1..3 {
            s -= m[i][k] * x[k];
        }
        x[i] = s / m[i][i];
    }
    x
}

#[test]
fn stieltjes_constants() {
    let g1 = stieltjes_sequence(1, 100_000);
    assert!((g1 - stieltjes(1)).abs() < 1e-10, "{g1} {}", stieltjes(1));
    assert!((stieltjes(1) + 0.072_815_845_483_676_72).abs() < 5e-15);
    let g0 = stieltjes_sequence(0, 100_000);
    assert!((g0 - stieltjes(0)).abs() < 1e-10);
    assert!((stieltjes(0) - EULER_GAMMA).abs() < 2e-15);
    let a = stieltjes_sequence(1, 10_000);
    let b = stieltjes_sequence(1, 100_000);
    assert!((a - b).abs() < 1e-10);
    // γ = −Γ′(1)
    assert!((constants().euler_gamma + digamma(cr(1.0)).re).abs() < 1e-14);
}

#[test]
fn xi_values() {
    assert!((xi_small(cr(1.0)).re - 0.5).abs() < 1e-15);
    assert!((xi_small(cr(0.0)).re - 0.5).abs() < 1e-15);
    let direct = 0.5 * 0.5 * (-0.5) * PI.powf(-0.25) * gamma(cr(0.25)).re * zeta_borwein(cr(0.5)).re;
    assert!((xi_small(cr(0.5)).re - direct).abs() < 1e-13);
    assert!((xi_big(cr(0.0)).re - 0.497_120_778_188_314_1).abs() < 1e-14);
    assert!((xi_big(cr(-3.0)) - xi_big(cr(3.0))).norm() < 1e-15);
    assert!(xi_big(cr(5.0)).im.abs() < 1e-16);
}

#[test]
fn stirling_envelope_bounds() {
    assert!(stirling_envelope(0.5, 50.0) >= gamma(c64(0.5, 50.0)).norm());
    let r = stirling_envelope(1.0, 100.0) / stirling_envelope(1.0, 50.0);
    let pred = 2f64.powf(0.5) * (-25.0 * PI).exp();
    assert!((r / pred - 1.0).abs() < 0.05);
    let mut prev = f64::INFINITY;
    for k in 0..50 {
        let v = stirling_envelope(0.8, 2.0 + k as f64);
        assert!(v < prev);
        prev = v;
    }
}

#[test]
fn functional_equation_grid() {
    let mut worst: f64 = 0.0;
    for i in 0..9 {
        for j in 0..21 {
            let s = c64(0.1 + 0.1 * i as f64, 2.0 * j as f64);
            let one = cr(1.0);
            let lhs = (-s * 0.5 * PI.ln()).exp() * gamma(s * 0.5) * zeta(s);
            let rhs = (-(one - s) * 0.5 * PI.ln()).exp() * gamma((one - s) * 0.5) * zeta(one - s);
            let scale = lhs.norm().max(1e-300);
            worst = worst.max((lhs - rhs).norm() / scale);
        }
    }
    assert!(worst < 1e-10, "{worst}");
}

#[test]
fn xi_pair_is_modulus_squared() {
    for &(t, z) in &[(0.3, 0.3), (7.0, -0.5), (23.0, 0.9)] {
        let p = xi_big(c64(t / 2.0, z / 2.0)) * xi_big(c64(t / 2.0, -z / 2.0));
        let m = xi_small(c64((1.0 - z) / 2.0, t / 2.0)).norm_sqr();
        assert!((p.re - m).abs() < 1e-12 * m.max(1e-30) + 1e-300, "{p} {m}");
        assert!(p.im.abs() < 1e-12 * m + 1e-300);
    }
}

proptest! {
    #[test]
    fn gamma_recurrence(re in -3.5f64..6.0, im in -20.0f64..20.0) {
        let s = c64(re, im);
        prop_assume!(im.abs() > 1e-3 || (re - re.round()).abs() > 1e-3);
        let lhs = gamma(s + 1.0);
        let rhs = s * gamma(s);
        prop_assert!((lhs - rhs).norm() <= 1e-12 * lhs.norm().max(1e-300));
    }

    #[test]
    fn gamma_reflection_and_duplication(re in 0.05f64..0.95, im in -8.0f64..8.0) {
        let s = c64(re, im);
        let one = cr(1.0);
        let refl = gamma(s) * gamma(one - s) * (s * PI).sin();
        prop_assert!((refl - cr(PI)).norm() < 1e-12 * PI);
        let dup = gamma(s) * gamma(s + 0.5);
        let expect = gamma(s * 2.0) * (one - s * 2.0).exp2_like() * PI.sqrt();
        prop_assert!((dup - expect).norm() <= 1e-12 * dup.norm().max(1e-300));
    }

    #[test]
    fn zeta_conjugate_symmetry(re in -0.9f64..2.5, im in 0.1f64..50.0) {
        let s = c64(re, im);
        prop_assert!((zeta(s.conj()) - zeta(s).conj()).norm() < 1e-14 * zeta(s).norm().max(1.0));
    }

    #[test]
    fn xi_reflection(re in -0.5f64..1.5, im in -30.0f64..30.0) {
        let s = c64(re, im);
        let a = xi_small(s);
        let b = xi_small(cr(1.0) - s);
        prop_assert!((a - b).norm() <= 1e-11 * a.norm().max(1e-300));
    }
}
