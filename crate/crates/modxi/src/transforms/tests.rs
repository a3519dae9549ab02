use super::*;
use crate::numerics::{cr, QuadConfig, C64};
use crate::series::{
    capital_lambda, frak_f, guinand_side, hurwitz_side, kosh_k0_side, phi, ramanujan_lambda_side, theta_tail,
};
use std::f64::consts::PI;

fn cfg() -> QuadConfig {
    QuadConfig::default()
}

fn xi_member(w: XiWeightId, z: C64, alpha: f64, tol: f64) -> C64 {
    xi_cos_integral(w, z, alpha, tol).unwrap().value * w.normalization(z)
}

fn side(s: SideId, z: C64, alpha: f64, tol: f64) -> C64 {
    side_integral(s, z, alpha, tol, &cfg()).unwrap().value
}

#[test]
fn jacobi_xi_matches_theta() {
    for &a in &[1.0, 1.5, 2.0] {
        let x = xi_member(XiWeightId::Jacobi, cr(0.0), a, 1e-12);
        let s = theta_tail(a).value;
        assert!((x - s).norm() < 1e-10, "alpha {a}: {x} vs {s}");
    }
    let v = xi_member(XiWeightId::Jacobi, cr(0.0), 2.0, 1e-13).re;
    assert!((v - 0.353_548_458_746_416_97).abs() < 1e-12, "{v}");
}

#[test]
fn xi_integral_is_even_in_log_alpha() {
    for w in [XiWeightId::KoshK0, XiWeightId::Hardy, XiWeightId::LambdaZ] {
        let a = xi_cos_integral(w, cr(0.3), 1.7, 1e-12).unwrap().value;
        let b = xi_cos_integral(w, cr(0.3), 1.0 / 1.7, 1e-12).unwrap().value;
        assert!((a - b).norm() < 1e-14, "{w:?}");
    }
}

#[test]
fn koshlyakov_k0_xi_member() {
    let x = xi_member(XiWeightId::KoshK0, cr(0.0), 1.3, 1e-11);
    let s = kosh_k0_side(1.3).value;
    assert!((x - s).norm() < 1e-8, "{x} vs {s}");
    assert!((s.re + 1.944_271_336_923_954_861).abs() < 1e-10);
}

#[test]
fn ramanujan_gauss_members() {
    let a = 1.3;
    let l = side(SideId::RamanujanGauss, cr(0.0), a, 1e-13);
    let r = side(SideId::RamanujanGauss, cr(0.0), 1.0 / a, 1e-13);
    let x = xi_member(XiWeightId::RamanujanGauss, cr(0.0), a, 1e-12);
    assert!((l - r).norm() < 1e-12, "{l} vs {r}");
    assert!((l - x).norm() < 1e-9, "{l} vs {x}");
    assert!((l.re - 0.795_037_413_320_762_635).abs() < 1e-11, "{l}");
}

#[test]
fn ramanujan_lambda_xi_members() {
    let a = 1.3;
    let s = ramanujan_lambda_side(a).value;
    let x = xi_member(XiWeightId::RamanujanLambda, cr(0.0), a, 1e-11);
    let y = xi_member(XiWeightId::RamanujanLambdaAlt, cr(0.0), a, 1e-11);
    assert!((s.re + 0.757_410_248_149_100_68).abs() < 1e-10, "{s}");
    assert!((x - s).norm() < 1e-8, "{x} vs {s}");
    assert!((y - s).norm() < 1e-8, "{y} vs {s}");
}

#[test]
fn hardy_members() {
    let a = 1.2;
    let l = side(SideId::HardyPsi, cr(0.0), a, 1e-12);
    let r = side(SideId::HardyPsi, cr(0.0), 1.0 / a, 1e-12);
    let x = xi_member(XiWeightId::Hardy, cr(0.0), a, 1e-12);
    assert!((l.re - 0.686_154_572_160_298_522).abs() < 1e-10, "{l}");
    assert!((l - r).norm() < 1e-10);
    assert!((l - x).norm() < 1e-10, "{l} vs {x}");
}

#[test]
fn kosh_lambda_members() {
    let a = 1.2;
    let l = side(SideId::KoshLambda, cr(0.0), a, 1e-10);
    let r = side(SideId::KoshLambda, cr(0.0), 1.0 / a, 1e-10);
    let x = xi_member(XiWeightId::KoshLambda, cr(0.0), a, 1e-10);
    eprintln!("kosh_lambda {l} {r} {x}");
    assert!((l - r).norm() < 1e-8, "{l} vs {r}");
    assert!((l - x).norm() < 1e-7, "{l} vs {x}");
}

fn triple(s: SideId, w: XiWeightId, z: C64, a: f64, tol: f64) -> (C64, C64, C64) {
    let l = side(s, z, a, tol * 0.1);
    let r = side(s, z, 1.0 / a, tol * 0.1);
    let x = xi_member(w, z, a, tol * 0.1);
    eprintln!("{s:?} z={z} a={a}: {l} {r} {x}");
    (l, r, x)
}

#[test]
fn lambda_z_members() {
    let (l, r, x) = triple(SideId::LambdaZ, XiWeightId::LambdaZ, cr(0.3), 1.2, 1e-8);
    assert!((l - r).norm() < 1e-8 && (l - x).norm() < 1e-7, "{l} {r} {x}");
}

#[test]
fn phi_z_members() {
    let (l, r, x) = triple(SideId::PhiZ, XiWeightId::PhiZ, cr(0.3), 1.2, 1e-8);
    assert!((l - r).norm() < 1e-8 && (l - x).norm() < 1e-7, "{l} {r} {x}");
    let (l, r, x) = triple(SideId::PhiZ0, XiWeightId::PhiZ0, cr(0.0), 1.2, 1e-8);
    assert!((l - r).norm() < 1e-8 && (l - x).norm() < 1e-7, "{l} {r} {x}");
}

#[test]
fn ferrar_members() {
    let (l, r, x) = triple(SideId::Ferrar, XiWeightId::Ferrar, cr(0.0), 1.2, 1e-10);
    assert!((l - r).norm() < 1e-10 && (l - x).norm() < 1e-9, "{l} {r} {x}");
    let (l, r, x) = triple(SideId::FerrarZ, XiWeightId::FerrarZ, cr(0.3), 1.2, 1e-8);
    assert!((l - r).norm() < 1e-8 && (l - x).norm() < 1e-7, "{l} {r} {x}");
    let (l, r, x) = triple(SideId::FerrarZ0, XiWeightId::FerrarZ0, cr(0.0), 1.2, 1e-8);
    assert!((l - r).norm() < 1e-8 && (l - x).norm() < 1e-7, "{l} {r} {x}");
}

#[test]
fn omega_laplace_members() {
    let z = cr(0.3);
    let (l, r, x) = triple(SideId::OmegaLaplace, XiWeightId::OmegaLaplace, z, 1.2, 1e-8);
    let h = hurwitz_side(z, 1.2).unwrap().value;
    let b = bose_middle(z, 1.2, 1e-11, &cfg()).unwrap().value;
    eprintln!("hurwitz {h} bose {b}");
    assert!((l - r).norm() < 1e-8 && (l - x).norm() < 1e-8 && (l - h).norm() < 1e-8 && (b - h).norm() < 1e-8);
    let (l, r, x) = triple(SideId::OmegaLaplace, XiWeightId::OmegaLaplace0, cr(0.0), 1.2, 1e-8);
    assert!((l - r).norm() < 1e-8 && (l - x).norm() < 1e-8, "{l} {r} {x}");
}

#[test]
fn omega_j_members() {
    let (l, r, x) = triple(SideId::OmegaJ, XiWeightId::OmegaJ, cr(0.3), 1.2, 1e-7);
    assert!((l - r).norm() < 1e-7 && (l - x).norm() < 1e-7, "{l} {r} {x}");
    let (l, r, x) = triple(SideId::OmegaJ, XiWeightId::OmegaJ0, cr(0.0), 1.2, 1e-7);
    assert!((l - r).norm() < 1e-7 && (l - x).norm() < 1e-7, "{l} {r} {x}");
}

#[test]
fn note42_constant_is_one() {
    let z = cr(0.3);
    for &a in &[1.2, 1.6, 2.0] {
        let g = guinand_side(z, a).unwrap().value;
        let x = xi_member(XiWeightId::Note42, z, a, 1e-12);
        assert!((g / x - 1.0).norm() < 1e-9, "alpha {a}: {g} vs {x}");
    }
}

#[test]
fn mellin_examples() {
    let c = cfg();
    let v = mellin_self_reciprocal(KernelKind::Second, MellinFactorId::One, cr(0.4), 0.8, 1e-10, &c).unwrap().value;
    let s = phi(0.8, cr(0.4)).unwrap().value;
    assert!((v - s).norm() < 1e-7, "{v} vs {s}");
    let v = mellin_self_reciprocal(KernelKind::First, MellinFactorId::GammaPair, cr(0.5), 1.0, 1e-10, &c).unwrap().value;
    let s = capital_lambda(1.0, cr(0.5)).unwrap().value;
    assert!((v - s).norm() < 1e-7, "{v} vs {s}");
    let v = mellin_self_reciprocal(KernelKind::First, MellinFactorId::HalfGammaPair, cr(0.3), 0.6, 1e-10, &c).unwrap().value;
    let s = frak_f(0.6, cr(0.3)).unwrap().value;
    assert!((v - s).norm() < 1e-7, "{v} vs {s}");
}

#[test]
fn koshlyakov_reciprocities() {
    for second in [false, true] {
        for &nu in &[0.0, 0.25] {
            for &x in &[0.5, 1.0] {
                let (r, k) = kosh_reciprocity(second, nu, x, 1e-11, &cfg()).unwrap();
                assert!((r.value.re - k).abs() < 1e-9, "second={second} nu={nu} x={x}: {} vs {k}", r.value.re);
            }
        }
    }
}

#[test]
fn lambda_is_first_kind_self_reciprocal() {
    let z = cr(0.4);
    let f = |x: f64| capital_lambda(x, z).unwrap().value;
    let v = apply_kernel_transform(KernelKind::First, &f, z, 0.9, 1e-8, &cfg()).unwrap().value;
    let s = capital_lambda(0.9, z).unwrap().value;
    assert!((v - s).norm() < 1e-6, "{v} vs {s}");
}

#[test]
fn aux_examples() {
    let c = cfg();
    let o = aux_identity(AuxId::IntK0, AuxParams { alpha: 2.0, t: 0.0 }, 1e-13, &c).unwrap();
    assert!(o.residual < 1e-11, "{o:?}");
    let o = aux_identity(AuxId::JLaplace, AuxParams { alpha: 1.0, t: 0.0 }, 1e-12, &c).unwrap();
    assert!((o.rhs.re - 2f64.powf(-1.5)).abs() < 1e-15 && o.residual < 1e-10, "{o:?}");
    let o = aux_identity(AuxId::PsiLog, AuxParams { alpha: 1.0, t: 0.0 }, 1e-12, &c).unwrap();
    assert!((o.rhs.re - (crate::special::EULER_GAMMA - 1.0)).abs() < 1e-14 && o.residual < 1e-10, "{o:?}");
}

#[test]
fn aux_suite_points() {
    let c = cfg();
    for id in AuxId::ALL {
        for p in id.default_points() {
            let tol = if id.oscillatory() { 1e-8 } else { 1e-11 };
            let o = aux_identity(id, p, tol, &c).unwrap();
            eprintln!("{} {p:?}: {:e} ({} vs {})", id.name(), o.residual, o.lhs, o.rhs);
            let bound = if id.oscillatory() { 1e-7 } else { 1e-9 };
            assert!(o.residual < bound, "{} {p:?}: {o:?}", id.name());
        }
    }
}

#[test]
fn double_integral_paths() {
    let c = cfg();
    let a = double_inner(1.0, 0.7, JPath::Oscillatory, 1e-11, &c).unwrap().value;
    let b = double_inner(1.0, 0.7, JPath::ClosedForm, 1e-11, &c).unwrap().value;
    assert!((a - b).norm() < 1e-8, "{a} vs {b}");
}

#[test]
fn double_integral_matches_xi() {
    let v = double_integral_side(1.5, JPath::Oscillatory, 1e-7, &cfg()).unwrap().value;
    let x = xi_cos_integral(XiWeightId::PhiZ0, cr(0.0), 1.5, 1e-10).unwrap().value / (8.0 * PI * PI);
    assert!((v - x).norm() < 1e-5, "{v} vs {x}");
}
