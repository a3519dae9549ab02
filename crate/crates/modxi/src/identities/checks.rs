use super::{CheckParams, IdentityId, IdentityReport};
use crate::numerics::{quad_vertical_line_with, DecayHint, QuadConfig, QuadResult, C64};
use crate::series::{
    capital_lambda, cohen_lhs, cohen_rhs, frak_f, guinand_side, hurwitz_side, kosh_k0_side, omega0, omega_z, phi,
    ramanujan_lambda_side, theta_tail, voronoi_lhs, voronoi_rhs, OmegaRepr, SeriesError, TruncatedSum,
};
use crate::special::zeta;
use crate::transforms::{
    apply_kernel_transform, aux_identity, bose_middle, double_integral_side, kosh_reciprocity, mellin_self_reciprocal,
    side_integral, xi_cos_integral_with, AuxId, JPath, KernelKind, MellinFactorId, SideId, TransformError,
    XiWeightId,
};
use std::f64::consts::PI;
use std::sync::{Arc, OnceLock};

pub(super) struct Outcome {
    pub value: C64,
    pub err: f64,
    pub terms: usize,
    pub nodes: usize,
    pub converged: bool,
}

type Eval = Box<dyn Fn() -> Result<Outcome, String> + Send + Sync>;

pub(super) struct MemberSpec {
    pub label: String,
    pub eval: Eval,
}

fn spec(label: impl Into<String>, eval: impl Fn() -> Result<Outcome, String> + Send + Sync + 'static) -> MemberSpec {
    MemberSpec { label: label.into(), eval: Box::new(eval) }
}

fn from_sum(r: Result<TruncatedSum, SeriesError>) -> Result<Outcome, String> {
    let s = r.map_err(|e| e.to_string())?;
    Ok(Outcome { value: s.value, err: s.tail_bound, terms: s.terms, nodes: 0, converged: true })
}

fn from_quad(r: Result<QuadResult, TransformError>) -> Result<Outcome, String> {
    let q = r.map_err(|e| e.to_string())?;
    Ok(Outcome { value: q.value, err: q.error_estimate, terms: 0, nodes: q.nodes, converged: q.converged })
}

fn xi(w: XiWeightId, z: C64, alpha: f64, tol: f64, cfg: QuadConfig) -> Result<Outcome, String> {
    let n = w.normalization(z);
    let o = from_quad(xi_cos_integral_with(w, z, alpha, tol / n.norm(), &cfg))?;
    Ok(Outcome { value: o.value * n, err: o.err * n.norm(), ..o })
}

/// The two x-integral members at α and 1/α plus the Ξ member.
fn xi_triple(side: SideId, w: XiWeightId, z: C64, alpha: f64, q: f64, cfg: QuadConfig) -> Vec<MemberSpec> {
    vec![
        spec("x_integral(alpha)", move || from_quad(side_integral(side, z, alpha, q, &cfg))),
        spec("x_integral(beta)", move || from_quad(side_integral(side, z, 1.0 / alpha, q, &cfg))),
        spec("xi_integral", move || xi(w, z, alpha, q, cfg)),
    ]
}

fn series_pair(alpha: f64, f: fn(f64) -> Result<TruncatedSum, SeriesError>) -> Vec<MemberSpec> {
    vec![spec("series(alpha)", move || from_sum(f(alpha))), spec("series(beta)", move || from_sum(f(1.0 / alpha)))]
}

fn cr(v: f64) -> C64 {
    C64::new(v, 0.0)
}

/// Ω(x,z) by inverse Mellin on Re s = 2, right of every pole of ζζ.
fn omega_mellin(x: f64, z: C64, tol: f64, cfg: &QuadConfig) -> Result<QuadResult, TransformError> {
    let lx = x.ln();
    let h = z * 0.5;
    let g = |s: C64| {
        zeta(1.0 - s + h) * zeta(1.0 - s - h) / (2.0 * ((s + h) * (0.5 * PI)).cos()) * (-s * lx).exp()
    };
    let mut r = quad_vertical_line_with(&g, 2.0, DecayHint::XiEnvelope { rate: 0.5 * PI, power: 3.0 }, tol, cfg)?;
    if z.im == 0.0 {
        r.value.im = 0.0;
    }
    Ok(r)
}

/// Ω(x,z) from Cohen's k = 1 identity at ix and −ix.
fn omega_cohen(x: f64, z: C64) -> Result<TruncatedSum, SeriesError> {
    let a = cohen_rhs(z, C64::new(0.0, x))?;
    let b = cohen_rhs(z, C64::new(0.0, -x))?;
    let d = (z * 0.5 * x.ln()).exp() * (4.0 * PI);
    let mut v = (a.value + b.value) / d;
    if z.im == 0.0 {
        v.im = 0.0;
    }
    Ok(TruncatedSum { value: v, tail_bound: (a.tail_bound + b.tail_bound) / d.norm(), terms: a.terms + b.terms })
}

/// Reference α at which the NOTE42 constant is fitted.
pub(super) const NOTE42_FIT_ALPHA: f64 = 1.2;

fn note42_raw(z: C64, alpha: f64, q: f64, cfg: &QuadConfig) -> Result<QuadResult, TransformError> {
    xi_cos_integral_with(XiWeightId::Note42, z, alpha, q, cfg)
}

fn note42_constant(z: C64, alpha: f64, q: f64, cfg: &QuadConfig) -> Result<f64, String> {
    let g = guinand_side(z, alpha).map_err(|e| e.to_string())?.value;
    let raw = note42_raw(z, alpha, q, cfg).map_err(|e| e.to_string())?.value;
    Ok((g / raw).re)
}

pub(super) fn members(id: IdentityId, p: &CheckParams, tol: f64) -> Vec<MemberSpec> {
    let alpha = p.alpha;
    let z = p.z;
    let cfg = p.budgets.quad_config();
    let q = 0.1 * tol;
    match id {
        IdentityId::Jacobi => {
            let mut v = series_pair(alpha, |a| Ok(theta_tail(a)));
            v.push(spec("xi_integral", move || xi(XiWeightId::Jacobi, z, alpha, q, cfg)));
            v
        }
        IdentityId::KoshK0 => {
            let mut v = series_pair(alpha, |a| Ok(kosh_k0_side(a)));
            v.push(spec("xi_integral", move || xi(XiWeightId::KoshK0, z, alpha, q, cfg)));
            v
        }
        IdentityId::RamanujanGauss => xi_triple(SideId::RamanujanGauss, XiWeightId::RamanujanGauss, z, alpha, q, cfg),
        IdentityId::RamanujanLambda => {
            let mut v = series_pair(alpha, |a| Ok(ramanujan_lambda_side(a)));
            v.push(spec("xi_integral", move || xi(XiWeightId::RamanujanLambda, z, alpha, q, cfg)));
            v.push(spec("xi_integral_recurrence_form", move || xi(XiWeightId::RamanujanLambdaAlt, z, alpha, q, cfg)));
            v
        }
        IdentityId::Guinand => vec![
            spec("series(alpha)", move || from_sum(guinand_side(z, alpha))),
            spec("series(beta)", move || from_sum(guinand_side(z, 1.0 / alpha))),
        ],
        IdentityId::HardyPsi => xi_triple(SideId::HardyPsi, XiWeightId::Hardy, z, alpha, q, cfg),
        IdentityId::KoshLambda => xi_triple(SideId::KoshLambda, XiWeightId::KoshLambda, z, alpha, q, cfg),
        IdentityId::LambdaZ => xi_triple(SideId::LambdaZ, XiWeightId::LambdaZ, z, alpha, q, cfg),
        IdentityId::PhiZ => xi_triple(SideId::PhiZ, XiWeightId::PhiZ, z, alpha, q, cfg),
        IdentityId::PhiZ0 => xi_triple(SideId::PhiZ0, XiWeightId::PhiZ0, z, alpha, q, cfg),
        IdentityId::Voronoi => vec![
            spec("k_series", move || from_sum(voronoi_lhs(alpha, None))),
            spec("rational_series", move || from_sum(voronoi_rhs(alpha))),
        ],
        IdentityId::DoubleJ => {
            let dq = 0.2 * tol;
            vec![
                spec("double_integral(alpha)", move || from_quad(double_integral_side(alpha, JPath::Oscillatory, dq, &cfg))),
                spec("double_integral(beta)", move || from_quad(double_integral_side(1.0 / alpha, JPath::Oscillatory, dq, &cfg))),
                spec("xi_integral", move || {
                    let o = from_quad(xi_cos_integral_with(XiWeightId::PhiZ0, z, alpha, q, &cfg))?;
                    let n = 1.0 / (8.0 * PI * PI);
                    Ok(Outcome { value: o.value * n, err: o.err * n, ..o })
                }),
            ]
        }
        IdentityId::Ferrar => xi_triple(SideId::Ferrar, XiWeightId::Ferrar, z, alpha, q, cfg),
        IdentityId::FerrarZ => xi_triple(SideId::FerrarZ, XiWeightId::FerrarZ, z, alpha, q, cfg),
        IdentityId::FerrarZ0 => xi_triple(SideId::FerrarZ0, XiWeightId::FerrarZ0, z, alpha, q, cfg),
        IdentityId::KoshRecip1 | IdentityId::KoshRecip2 => {
            let second = id == IdentityId::KoshRecip2;
            let nu = z.re;
            let x = alpha;
            vec![
                spec("integral", move || {
                    let (r, _) = kosh_reciprocity(second, nu, x, q, &cfg).map_err(|e| e.to_string())?;
                    from_quad(Ok(r))
                }),
                spec("closed_form", move || {
                    let k = crate::bessel::k_raw(cr(nu), cr(x)).re;
                    Ok(Outcome { value: cr(if second { x * k } else { k }), err: 0.0, terms: 0, nodes: 0, converged: true })
                }),
            ]
        }
        IdentityId::SelfRecipTriangle => {
            let x = alpha;
            let kq = 0.1 * q;
            vec![
                spec("phi/series", move || from_sum(phi(x, z))),
                spec("phi/mellin", move || from_quad(mellin_self_reciprocal(KernelKind::Second, MellinFactorId::One, z, x, q, &cfg))),
                spec("phi/kernel", move || {
                    let f = |u: f64| phi(u, z).map(|s| s.value).unwrap_or(C64::new(f64::NAN, 0.0));
                    from_quad(apply_kernel_transform(KernelKind::Second, &f, z, x, kq, &cfg))
                }),
                spec("lambda/series", move || from_sum(capital_lambda(x, z))),
                spec("lambda/mellin", move || {
                    from_quad(mellin_self_reciprocal(KernelKind::First, MellinFactorId::GammaPair, z, x, q, &cfg))
                }),
                spec("lambda/kernel", move || {
                    let f = |u: f64| capital_lambda(u, z).map(|s| s.value).unwrap_or(C64::new(f64::NAN, 0.0));
                    from_quad(apply_kernel_transform(KernelKind::First, &f, z, x, kq, &cfg))
                }),
                spec("frak/series", move || from_sum(frak_f(x, z))),
                spec("frak/mellin", move || {
                    from_quad(mellin_self_reciprocal(KernelKind::First, MellinFactorId::HalfGammaPair, z, x, q, &cfg))
                }),
                spec("frak/kernel", move || {
                    let f = |u: f64| frak_f(u, z).map(|s| s.value).unwrap_or(C64::new(f64::NAN, 0.0));
                    from_quad(apply_kernel_transform(KernelKind::First, &f, z, x, kq, &cfg))
                }),
            ]
        }
        IdentityId::AuxSuite => {
            let mut v = Vec::new();
            for aid in AuxId::ALL {
                for (k, pt) in aid.default_points().into_iter().enumerate() {
                    let at = if aid.oscillatory() { 1e-8 } else { 1e-11 };
                    let group = format!("{}@{}", aid.name(), k);
                    let cell = Arc::new(OnceLock::new());
                    let c2 = Arc::clone(&cell);
                    let run = move || cell.get_or_init(|| aux_identity(aid, pt, at, &cfg).map_err(|e| e.to_string())).clone();
                    let run2 = move || c2.get().cloned().unwrap_or_else(|| aux_identity(aid, pt, at, &cfg).map_err(|e| e.to_string()));
                    v.push(spec(format!("{group}/lhs"), move || {
                        let o = run()?;
                        Ok(Outcome { value: o.lhs, err: 0.5 * o.error_estimate, terms: 0, nodes: o.nodes, converged: true })
                    }));
                    v.push(spec(format!("{group}/rhs"), move || {
                        let o = run2()?;
                        Ok(Outcome { value: o.rhs, err: 0.5 * o.error_estimate, terms: 0, nodes: 0, converged: true })
                    }));
                }
            }
            v
        }
        IdentityId::OmegaProp => {
            let x = alpha;
            let zero = z.norm() == 0.0;
            let mut v = vec![
                spec("definition", move || {
                    from_sum(if zero { omega0(x, OmegaRepr::Definition) } else { omega_z(x, z, OmegaRepr::Definition) })
                }),
                spec("closed_form", move || {
                    from_sum(if zero { omega0(x, OmegaRepr::ClosedForm) } else { omega_z(x, z, OmegaRepr::ClosedForm) })
                }),
            ];
            if !zero && z.re > 0.0 && x != x.round() {
                v.push(spec("cohen", move || from_sum(omega_cohen(x, z))));
            }
            v.push(spec("mellin", move || from_quad(omega_mellin(x, z, q, &cfg))));
            v
        }
        IdentityId::CohenK1 => vec![
            spec("k_series", move || from_sum(cohen_lhs(z, cr(alpha)))),
            spec("rational_series", move || from_sum(cohen_rhs(z, cr(alpha)))),
        ],
        IdentityId::OmegaLaplace => {
            let zero = z.norm() == 0.0;
            let w = if zero { XiWeightId::OmegaLaplace0 } else { XiWeightId::OmegaLaplace };
            let mut v = xi_triple(SideId::OmegaLaplace, w, z, alpha, q, cfg);
            if !zero {
                v.push(spec("hurwitz_series", move || from_sum(hurwitz_side(z, alpha))));
            }
            v.push(spec("bose_integral", move || from_quad(bose_middle(z, alpha, q, &cfg))));
            v
        }
        IdentityId::OmegaJ => {
            let w = if z.norm() == 0.0 { XiWeightId::OmegaJ0 } else { XiWeightId::OmegaJ };
            xi_triple(SideId::OmegaJ, w, z, alpha, q, cfg)
        }
        IdentityId::Note42Exploratory => vec![
            spec("series(alpha)", move || from_sum(guinand_side(z, alpha))),
            spec("xi_integral_fitted", move || {
                let c = note42_constant(z, NOTE42_FIT_ALPHA, q, &cfg)?;
                let o = from_quad(note42_raw(z, alpha, q, &cfg))?;
                Ok(Outcome { value: o.value * c, err: o.err * c.abs(), ..o })
            }),
        ],
    }
}

/// Tolerance multiplier for a label group.
pub(super) fn group_scale(id: IdentityId) -> impl Fn(&str) -> f64 {
    move |g: &str| {
        if id != IdentityId::AuxSuite {
            return 1.0;
        }
        let osc = AuxId::ALL.iter().any(|a| a.oscillatory() && g.starts_with(a.name()) && g[a.name().len()..].starts_with('@'));
        if osc {
            100.0
        } else {
            1.0
        }
    }
}

pub(super) fn annotate(id: IdentityId, p: &CheckParams, r: &mut IdentityReport) {
    match id {
        IdentityId::KoshLambda => {
            r.note = Some("Xi member evaluated with the + sign; it matches the x-integrals".into());
        }
        IdentityId::FerrarZ0 => {
            r.note = Some("common value equals the z -> 0 limit of FERRAR_Z divided by 4 sqrt(pi)".into());
        }
        IdentityId::Note42Exploratory => {
            let cfg = p.budgets.quad_config();
            let c = note42_constant(p.z, p.alpha, 1e-3 * r.params.tol, &cfg).ok();
            r.fitted_constant = c;
            r.note = Some(format!(
                "constant fitted at alpha = {NOTE42_FIT_ALPHA}; -32/pi = {:.12}",
                -32.0 / PI
            ));
        }
        _ => {}
    }
}
