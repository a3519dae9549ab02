//! Registry of transformations, each bound to independently computed members,
//! and the reports produced by checking them.

mod checks;
mod probe;

pub use probe::{continuity_probe, ContinuityProbe};

use crate::numerics::{QuadConfig, C64};
use crate::parallel::map_slice;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum IdentityId {
    Jacobi,
    KoshK0,
    RamanujanGauss,
    RamanujanLambda,
    Guinand,
    HardyPsi,
    KoshLambda,
    LambdaZ,
    PhiZ,
    PhiZ0,
    Voronoi,
    DoubleJ,
    Ferrar,
    FerrarZ,
    FerrarZ0,
    #[serde(rename = "KOSH_RECIP_1")]
    KoshRecip1,
    #[serde(rename = "KOSH_RECIP_2")]
    KoshRecip2,
    SelfRecipTriangle,
    AuxSuite,
    OmegaProp,
    CohenK1,
    OmegaLaplace,
    OmegaJ,
    #[serde(rename = "NOTE42_EXPLORATORY")]
    Note42Exploratory,
}

/// Which z values an identity accepts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ZRule {
    /// z is ignored and must be 0
    ZeroOnly,
    /// −1 < Re z < 1, z ≠ 0
    NonZeroStrip,
    /// −1 < Re z < 1
    Strip,
    /// 0 < Re z < 1
    RightHalfStrip,
    /// z carries the Bessel order ν, |ν| < 1/2, real
    BesselOrder,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IdentityInfo {
    pub id: IdentityId,
    pub description: &'static str,
    pub members: &'static [&'static str],
    /// Meaning of the `alpha` slot when it is not the modular parameter.
    pub alpha_role: &'static str,
    pub z_rule: ZRule,
    pub default_tol: f64,
    pub default_alpha: f64,
    pub default_z: f64,
    pub exploratory: bool,
}

impl IdentityId {
    pub const ALL: [IdentityId; 24] = [
        IdentityId::Jacobi,
        IdentityId::KoshK0,
        IdentityId::RamanujanGauss,
        IdentityId::RamanujanLambda,
        IdentityId::Guinand,
        IdentityId::HardyPsi,
        IdentityId::KoshLambda,
        IdentityId::LambdaZ,
        IdentityId::PhiZ,
        IdentityId::PhiZ0,
        IdentityId::Voronoi,
        IdentityId::DoubleJ,
        IdentityId::Ferrar,
        IdentityId::FerrarZ,
        IdentityId::FerrarZ0,
        IdentityId::KoshRecip1,
        IdentityId::KoshRecip2,
        IdentityId::SelfRecipTriangle,
        IdentityId::AuxSuite,
        IdentityId::OmegaProp,
        IdentityId::CohenK1,
        IdentityId::OmegaLaplace,
        IdentityId::OmegaJ,
        IdentityId::Note42Exploratory,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::Jacobi => "JACOBI",
            IdentityId::KoshK0 => "KOSH_K0",
            IdentityId::RamanujanGauss => "RAMANUJAN_GAUSS",
            IdentityId::RamanujanLambda => "RAMANUJAN_LAMBDA",
            IdentityId::Guinand => "GUINAND",
            IdentityId::HardyPsi => "HARDY_PSI",
            IdentityId::KoshLambda => "KOSH_LAMBDA",
            IdentityId::LambdaZ => "LAMBDA_Z",
            IdentityId::PhiZ => "PHI_Z",
            IdentityId::PhiZ0 => "PHI_Z0",
            IdentityId::Voronoi => "VORONOI",
            IdentityId::DoubleJ => "DOUBLE_J",
            IdentityId::Ferrar => "FERRAR",
            IdentityId::FerrarZ => "FERRAR_Z",
            IdentityId::FerrarZ0 => "FERRAR_Z0",
            IdentityId::KoshRecip1 => "KOSH_RECIP_1",
            IdentityId::KoshRecip2 => "KOSH_RECIP_2",
            IdentityId::SelfRecipTriangle => "SELF_RECIP_TRIANGLE",
            IdentityId::AuxSuite => "AUX_SUITE",
            IdentityId::OmegaProp => "OMEGA_PROP",
            IdentityId::CohenK1 => "COHEN_K1",
            IdentityId::OmegaLaplace => "OMEGA_LAPLACE",
            IdentityId::OmegaJ => "OMEGA_J",
            IdentityId::Note42Exploratory => "NOTE42_EXPLORATORY",
        }
    }

    pub fn info(self) -> IdentityInfo {
        use IdentityId::*;
        use ZRule::*;
        let mk = |description, members, alpha_role, z_rule, default_tol, default_alpha, default_z| IdentityInfo {
            id: self,
            description,
            members,
            alpha_role,
            z_rule,
            default_tol,
            default_alpha,
            default_z,
            exploratory: self == Note42Exploratory,
        };
        const XI3: &[&str] = &["x_integral(alpha)", "x_integral(beta)", "xi_integral"];
        match self {
            Jacobi => mk("theta tail sqrt(a)(1/(2a) - sum e^{-pi a^2 n^2}) and its Xi integral", &["series(alpha)", "series(beta)", "xi_integral"], "alpha", ZeroOnly, 1e-10, 1.5, 0.0),
            KoshK0 => mk("Koshlyakov's K0 divisor series and the squared Xi integral", &["series(alpha)", "series(beta)", "xi_integral"], "alpha", ZeroOnly, 1e-8, 1.3, 0.0),
            RamanujanGauss => mk("Gaussian-weighted Bose integral and its Xi integral", XI3, "alpha", ZeroOnly, 1e-9, 1.4, 0.0),
            RamanujanLambda => mk("lambda(k alpha) series against two Xi-squared weights", &["series(alpha)", "series(beta)", "xi_integral", "xi_integral_recurrence_form"], "alpha", ZeroOnly, 1e-7, 1.5, 0.0),
            Guinand => mk("Guinand's sigma_{-z} K_{z/2} series, alpha against beta", &["series(alpha)", "series(beta)"], "alpha", NonZeroStrip, 1e-10, 1.25, 0.3),
            HardyPsi => mk("Hardy's Gaussian psi integral and its Xi integral", XI3, "alpha", ZeroOnly, 1e-10, 1.2, 0.0),
            KoshLambda => mk("K0-weighted Lambda integral and the squared Xi integral with sech", XI3, "alpha", ZeroOnly, 1e-8, 1.2, 0.0),
            LambdaZ => mk("K_{z/2}-weighted Lambda(x,z) integral and its Xi integral", XI3, "alpha", NonZeroStrip, 1e-8, 1.2, 0.3),
            PhiZ => mk("x K_{z/2}-weighted Phi(x,z) integral and its Xi integral", XI3, "alpha", NonZeroStrip, 1e-8, 1.2, 0.3),
            PhiZ0 => mk("x K0-weighted Voronoi-type integral and its Xi integral", XI3, "alpha", ZeroOnly, 1e-8, 1.2, 0.0),
            Voronoi => mk("Voronoi's K0 divisor series against its rational series", &["k_series", "rational_series"], "x (non-integer)", ZeroOnly, 1e-10, 0.6, 0.0),
            DoubleJ => mk("double integral with J0 and Bose kernels against its Xi integral", &["double_integral(alpha)", "double_integral(beta)", "xi_integral"], "alpha", ZeroOnly, 1e-5, 1.5, 0.0),
            Ferrar => mk("Ferrar's Gaussian K0-lattice integral and its Xi integral", XI3, "alpha", ZeroOnly, 1e-8, 1.2, 0.0),
            FerrarZ => mk("K_{z/2}-weighted frak F(x,z) integral and its Xi integral", XI3, "alpha", NonZeroStrip, 1e-8, 1.2, 0.3),
            FerrarZ0 => mk("K0-weighted frak F(x,0) integral and its Xi integral", XI3, "alpha", ZeroOnly, 1e-8, 1.2, 0.0),
            KoshRecip1 => mk("first Koshlyakov reciprocity for K_nu (nu = Re z)", &["integral", "closed_form"], "x", BesselOrder, 1e-9, 1.0, 0.25),
            KoshRecip2 => mk("second Koshlyakov reciprocity for x K_nu (nu = Re z)", &["integral", "closed_form"], "x", BesselOrder, 1e-9, 1.0, 0.25),
            SelfRecipTriangle => mk("series, Mellin inversion and kernel transform of Phi, Lambda, frak F", &["phi/series", "phi/mellin", "phi/kernel", "lambda/series", "lambda/mellin", "lambda/kernel", "frak/series", "frak/mellin", "frak/kernel"], "x", NonZeroStrip, 1e-6, 0.8, 0.4),
            AuxSuite => mk("auxiliary integral evaluations, each at two fixed points", &["<aux>@<k>/lhs", "<aux>@<k>/rhs"], "ignored", ZeroOnly, 1e-9, 1.0, 0.0),
            OmegaProp => mk("Omega(x,z): rotated K series, rational closed form, Cohen k=1, Mellin inversion", &["definition", "closed_form", "cohen", "mellin"], "x", Strip, 1e-8, 0.7, 0.3),
            CohenK1 => mk("Cohen's K_z divisor series with k = 1", &["k_series", "rational_series"], "x", RightHalfStrip, 1e-8, 0.7, 0.3),
            OmegaLaplace => mk("Laplace transform of Omega(x,z) against Xi, Hurwitz and Bose forms", &["x_integral(alpha)", "x_integral(beta)", "xi_integral", "hurwitz_series", "bose_integral"], "alpha", Strip, 1e-8, 1.2, 0.3),
            OmegaJ => mk("J_{z/2}-weighted Omega(x,z) integral and its Xi integral", XI3, "alpha", Strip, 1e-7, 1.2, 0.3),
            Note42Exploratory => mk("Guinand's series against the unnormalized pair integral; constant fitted", &["series(alpha)", "xi_integral_fitted"], "alpha", NonZeroStrip, 1e-8, 1.6, 0.3),
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
#[error("unknown identity id '{0}'")]
pub struct UnknownId(pub String);

impl FromStr for IdentityId {
    type Err = UnknownId;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let up = s.trim().to_ascii_uppercase();
        IdentityId::ALL
            .iter()
            .copied()
            .find(|i| i.name() == up)
            .ok_or_else(|| UnknownId(s.to_string()))
    }
}

pub fn list_identities() -> Vec<IdentityInfo> {
    IdentityId::ALL.iter().map(|i| i.info()).collect()
}

/// Work limits handed to every quadrature.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Budgets {
    pub max_panels: usize,
    pub max_intervals: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        let q = QuadConfig::default();
        Budgets { max_panels: q.max_panels, max_intervals: q.max_intervals }
    }
}

impl Budgets {
    pub fn quad_config(&self) -> QuadConfig {
        QuadConfig { max_panels: self.max_panels, max_intervals: self.max_intervals, parallel_nodes: false }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CheckParams {
    pub alpha: f64,
    pub z: C64,
    /// None selects the identity's default tolerance.
    pub tol: Option<f64>,
    pub budgets: Budgets,
    /// Evaluate members concurrently.
    pub parallel: bool,
}

impl CheckParams {
    pub fn new(alpha: f64, z: C64) -> Self {
        CheckParams { alpha, z, tol: None, budgets: Budgets::default(), parallel: true }
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = Some(tol);
        self
    }

    pub fn defaults_for(id: IdentityId) -> Self {
        let i = id.info();
        CheckParams::new(i.default_alpha, C64::new(i.default_z, 0.0))
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CheckError {
    #[error("invalid parameters for {id}: {reason}")]
    InvalidParams { id: IdentityId, reason: String },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Member {
    pub label: String,
    pub value: C64,
    pub err: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportParams {
    pub alpha: f64,
    pub z_re: f64,
    pub z_im: f64,
    pub tol: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Diagnostics {
    pub terms: usize,
    pub nodes: usize,
    /// Wall time; left out of serialized reports unless requested.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub id: IdentityId,
    pub params: ReportParams,
    pub members: Vec<Member>,
    pub max_abs_diff: f64,
    pub max_rel_diff: f64,
    pub pass: bool,
    pub converged: bool,
    pub exploratory: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fitted_constant: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
    pub diagnostics: Diagnostics,
}

impl IdentityReport {
    /// A genuine disagreement: converged members that do not match.
    pub fn failed(&self) -> bool {
        !self.exploratory && self.converged && !self.pass
    }

    pub fn non_converged(&self) -> bool {
        !self.exploratory && !self.converged
    }

    pub fn strip_runtime(mut self) -> Self {
        self.diagnostics.runtime_ms = None;
        self
    }
}

/// Checks `p` against the validity region of `id` without evaluating anything.
pub fn validate(id: IdentityId, p: &CheckParams) -> Result<(), CheckError> {
    let bad = |reason: String| Err(CheckError::InvalidParams { id, reason });
    if !(p.alpha > 0.0) || !p.alpha.is_finite() {
        return bad(format!("{} must be positive and finite, got {}", id.info().alpha_role, p.alpha));
    }
    if let Some(t) = p.tol {
        if !(t >= 1e-13) || !t.is_finite() {
            return bad(format!("tol must be at least 1e-13, got {t}"));
        }
    }
    if !p.z.re.is_finite() || !p.z.im.is_finite() {
        return bad("z must be finite".into());
    }
    match id.info().z_rule {
        ZRule::ZeroOnly => {
            if p.z.norm() != 0.0 {
                return bad("this identity is the z = 0 form; pass z = 0".into());
            }
        }
        ZRule::NonZeroStrip => {
            if p.z.norm() == 0.0 {
                let hint = match id {
                    IdentityId::Guinand | IdentityId::Note42Exploratory => " (use KOSH_K0 for z = 0)",
                    IdentityId::LambdaZ => " (use KOSH_LAMBDA for z = 0)",
                    IdentityId::PhiZ => " (use PHI_Z0 for z = 0)",
                    IdentityId::FerrarZ => " (use FERRAR_Z0 for z = 0)",
                    _ => "",
                };
                return bad(format!("z = 0 is outside the strip{hint}"));
            }
            if !(p.z.re.abs() < 1.0) {
                return bad("need -1 < Re z < 1".into());
            }
        }
        ZRule::Strip => {
            if !(p.z.re.abs() < 1.0) {
                return bad("need -1 < Re z < 1".into());
            }
        }
        ZRule::RightHalfStrip => {
            if !(p.z.re > 0.0 && p.z.re < 1.0) {
                return bad("need 0 < Re z < 1".into());
            }
        }
        ZRule::BesselOrder => {
            if p.z.im != 0.0 || !(p.z.re.abs() < 0.5) {
                return bad("z carries a real Bessel order with |nu| < 1/2".into());
            }
        }
    }
    match id {
        IdentityId::Voronoi if p.alpha == p.alpha.round() => bad("x must not be an integer".into()),
        IdentityId::OmegaProp if p.z.norm() != 0.0 && p.z.re < 0.0 => bad("need 0 <= Re z < 1 for the Cohen member".into()),
        IdentityId::SelfRecipTriangle if p.z.im != 0.0 => bad("z must be real".into()),
        _ => Ok(()),
    }
}

/// Evaluates every member of `id` at `params` and compares them.
pub fn run_check(id: IdentityId, params: &CheckParams) -> Result<IdentityReport, CheckError> {
    validate(id, params)?;
    let start = Instant::now();
    let tol = params.tol.unwrap_or(id.info().default_tol);
    let specs = checks::members(id, params, tol);
    let outcomes = map_slice(&specs, params.parallel, |s| (s.eval)());
    let mut members = Vec::new();
    let mut terms = 0;
    let mut nodes = 0;
    let mut converged = true;
    let mut failure = None;
    for (spec, out) in specs.iter().zip(outcomes) {
        match out {
            Ok(o) => {
                terms += o.terms;
                nodes += o.nodes;
                converged &= o.converged;
                members.push(Member { label: spec.label.clone(), value: o.value, err: o.err });
            }
            Err(e) => {
                converged = false;
                failure.get_or_insert_with(|| format!("{}: {e}", spec.label));
            }
        }
    }
    let (max_abs, max_rel, pass) = agreement(&members, tol, &checks::group_scale(id));
    let mut report = IdentityReport {
        id,
        params: ReportParams { alpha: params.alpha, z_re: params.z.re, z_im: params.z.im, tol },
        pass: pass && failure.is_none(),
        converged,
        exploratory: id.info().exploratory,
        fitted_constant: None,
        note: None,
        failure,
        max_abs_diff: max_abs,
        max_rel_diff: max_rel,
        members,
        diagnostics: Diagnostics { terms, nodes, runtime_ms: None },
    };
    checks::annotate(id, params, &mut report);
    report.diagnostics.runtime_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    Ok(report)
}

fn group_of(label: &str) -> &str {
    label.split_once('/').map(|(g, _)| g).unwrap_or("")
}

/// Pairwise agreement within each label group; tolerance scaled per group.
fn agreement(members: &[Member], tol: f64, scale: &dyn Fn(&str) -> f64) -> (f64, f64, bool) {
    let mut max_abs: f64 = 0.0;
    let mut max_rel: f64 = 0.0;
    let mut pass = members.len() >= 2;
    let mut groups: Vec<&str> = members.iter().map(|m| group_of(&m.label)).collect();
    groups.dedup();
    for g in groups {
        let ms: Vec<&Member> = members.iter().filter(|m| group_of(&m.label) == g).collect();
        let mut d: f64 = 0.0;
        let mut r: f64 = 0.0;
        for i in 0..ms.len() {
            for j in i + 1..ms.len() {
                let a = (ms[i].value - ms[j].value).norm();
                d = d.max(a);
                let s = ms[i].value.norm().max(ms[j].value.norm());
                if s > 0.0 {
                    r = r.max(a / s);
                }
            }
        }
        let err: f64 = ms.iter().map(|m| m.err).sum();
        pass &= ms.len() >= 2 && d <= (tol * scale(g)).max(err);
        max_abs = max_abs.max(d);
        max_rel = max_rel.max(r);
    }
    (max_abs, max_rel, pass)
}

/// Runs every entry, preserving input order. With `parallel` the checks fan out over the pool.
pub fn run_suite(grid: &[(IdentityId, CheckParams)], parallel: bool) -> Vec<Result<IdentityReport, CheckError>> {
    map_slice(grid, parallel, |(id, p)| {
        let p = CheckParams { parallel: p.parallel && parallel, ..*p };
        run_check(*id, &p)
    })
}

/// Every identity at its default point.
pub fn default_grid() -> Vec<(IdentityId, CheckParams)> {
    IdentityId::ALL.iter().map(|&id| (id, CheckParams::defaults_for(id))).collect()
}

#[cfg(test)]
mod tests;
