//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

use modxi::bessel::{bessel_i, bessel_j, bessel_k, bessel_y, Order};
use modxi::identities::{continuity_probe, run_check, Budgets, CheckParams, IdentityId, IdentityReport};
use modxi::numerics::QuadConfig;
use modxi::special::{gamma, xi_big, xi_small, zeta};
use modxi::transforms::{aux_identity, kosh_reciprocity, AuxId, AuxParams};
use modxi::{c64, cr, C64};
use std::f64::consts::PI;
use std::time::{Duration, Instant};

struct Verdict {
    ok: bool,
    detail: String,
}

fn check(id: IdentityId, alpha: f64, z: f64, tol: f64) -> IdentityReport {
    run_check(id, &CheckParams::new(alpha, cr(z)).with_tol(tol)).unwrap_or_else(|e| panic!("{e}"))
}

fn member(r: &IdentityReport, label: &str) -> C64 {
    r.members.iter().find(|m| m.label == label).unwrap_or_else(|| panic!("{} has no member {label}", r.id)).value
}

fn diff(r: &IdentityReport, a: &str, b: &str) -> f64 {
    (member(r, a) - member(r, b)).norm()
}

/// Largest pairwise gap among all members.
fn spread(r: &IdentityReport) -> f64 {
    let mut d: f64 = 0.0;
    for a in &r.members {
        for b in &r.members {
            d = d.max((a.value - b.value).norm());
        }
    }
    d
}

struct Gate {
    worst: f64,
    ok: bool,
    notes: Vec<String>,
}

impl Gate {
    fn new() -> Self {
        Gate { worst: 0.0, ok: true, notes: Vec::new() }
    }

    fn within(&mut self, what: impl Into<String>, value: f64, bound: f64) {
        let what = what.into();
        self.worst = self.worst.max(value);
        if !(value < bound) {
            self.ok = false;
            self.notes.push(format!("{what}: {value:.2e} >= {bound:.0e}"));
        }
    }

    fn flag(&mut self, what: impl Into<String>, cond: bool) {
        if !cond {
            self.ok = false;
            self.notes.push(what.into());
        }
    }

    fn verdict(self, summary: &str) -> Verdict {
        let mut detail = format!("{summary}; worst {:.2e}", self.worst);
        if !self.notes.is_empty() {
            detail.push_str("; ");
            detail.push_str(&self.notes.join("; "));
        }
        Verdict { ok: self.ok, detail }
    }
}

fn c1_jacobi() -> Verdict {
    let mut g = Gate::new();
    for a in [1.0, 1.5, 2.0] {
        let r = check(IdentityId::Jacobi, a, 0.0, 1e-12);
        g.within(format!("alpha {a}"), spread(&r), 1e-10);
    }
    g.verdict("series, beta series and Xi member at alpha 1, 1.5, 2 within 1e-10")
}

fn c2_kosh_k0() -> Verdict {
    let mut g = Gate::new();
    for a in [0.7, 1.3] {
        let r = check(IdentityId::KoshK0, a, 0.0, 1e-10);
        g.within(format!("alpha {a}"), diff(&r, "series(alpha)", "xi_integral"), 1e-8);
    }
    g.verdict("K0 divisor series vs Xi member at alpha 0.7, 1.3 within 1e-8")
}

fn c3_ramanujan_gauss() -> Verdict {
    let mut g = Gate::new();
    for a in [1.0, 1.4, 2.0] {
        let r = check(IdentityId::RamanujanGauss, a, 0.0, 1e-12);
        g.within(format!("alpha {a} beta"), diff(&r, "x_integral(alpha)", "x_integral(beta)"), 1e-12);
        g.within(format!("alpha {a} xi"), diff(&r, "x_integral(alpha)", "xi_integral"), 1e-9);
    }
    g.verdict("x-integrals at alpha, 1/alpha within 1e-12 and vs Xi within 1e-9")
}

fn c4_ramanujan_lambda() -> Verdict {
    let mut g = Gate::new();
    let r = check(IdentityId::RamanujanLambda, 1.5, 0.0, 1e-10);
    g.within("beta", diff(&r, "series(alpha)", "series(beta)"), 1e-8);
    g.within("xi", diff(&r, "series(alpha)", "xi_integral"), 1e-7);
    g.within("xi alt", diff(&r, "series(alpha)", "xi_integral_recurrence_form"), 1e-7);
    g.verdict("lambda series vs beta within 1e-8 and vs Xi-squared members within 1e-7")
}

fn c5_guinand() -> Verdict {
    let mut g = Gate::new();
    for z in [0.3, 0.5] {
        for a in [1.25, 2.0] {
            let r = check(IdentityId::Guinand, a, z, 1e-12);
            g.within(format!("z {z} alpha {a}"), spread(&r), 1e-10);
            let m = check(IdentityId::Guinand, a, -z, 1e-12);
            for (x, y) in r.members.iter().zip(&m.members) {
                g.within(format!("z -> -z at z {z} alpha {a}"), (x.value - y.value).norm(), 1e-12);
            }
        }
    }
    let p = check(IdentityId::PhiZ, 1.2, 0.3, 1e-8);
    let q = check(IdentityId::PhiZ, 1.2, -0.3, 1e-8);
    for (x, y) in p.members.iter().zip(&q.members) {
        g.within("PHI_Z z -> -z", (x.value - y.value).norm(), 1e-12);
    }
    g.verdict("GUINAND on {0.3,0.5}x{1.25,2} within 1e-10; z -> -z reports equal within 1e-12")
}

fn c6_k_weighted() -> Verdict {
    let mut g = Gate::new();
    let cases = [
        (IdentityId::KoshLambda, 0.0),
        (IdentityId::LambdaZ, 0.3),
        (IdentityId::PhiZ, 0.3),
        (IdentityId::PhiZ0, 0.0),
        (IdentityId::FerrarZ, 0.3),
        (IdentityId::FerrarZ0, 0.0),
    ];
    for (id, z) in cases {
        let r = check(id, 1.2, z, 1e-9);
        g.flag(format!("{id} did not converge"), r.converged);
        g.within(id.name(), spread(&r), 1e-7);
    }
    for fam in [IdentityId::LambdaZ, IdentityId::PhiZ, IdentityId::FerrarZ] {
        let p = continuity_probe(fam, 1.2, 1e-4, 1e-11, Budgets::default()).unwrap();
        g.within(format!("{fam} continuity"), p.diff, 1e-5);
    }
    g.verdict("six K-weighted triples at alpha 1.2 within 1e-7; three z -> 0 probes within 1e-5")
}

fn c7_double() -> Verdict {
    let mut g = Gate::new();
    for a in [1.0, 1.5] {
        let r = check(IdentityId::DoubleJ, a, 0.0, 1e-6);
        g.within(format!("alpha {a}"), spread(&r), 1e-5);
    }
    let cfg = QuadConfig::default();
    let l = aux_identity(AuxId::Lemma57, AuxParams { alpha: 1.0, t: 0.8 }, 1e-9, &cfg).unwrap();
    g.within("LEMMA57 (1, 0.8)", l.residual, 1e-7);
    for a in [1.0, 1.5] {
        let h = aux_identity(AuxId::HChain, AuxParams { alpha: a, t: 0.0 }, 1e-8, &cfg).unwrap();
        g.within(format!("H_CHAIN alpha {a}"), h.residual, 1e-7);
    }
    g.verdict("double integral vs Xi at alpha 1, 1.5 within 1e-5; single-integral residual < 1e-7; chain < 1e-7")
}

fn c8_aux() -> Verdict {
    let mut g = Gate::new();
    let cfg = QuadConfig::default();
    for id in AuxId::ALL {
        let (tol, bound) = if id.oscillatory() { (1e-8, 1e-7) } else { (1e-11, 1e-9) };
        for p in id.default_points() {
            let o = aux_identity(id, p, tol, &cfg).unwrap();
            g.within(format!("{} {:?}", id.name(), p), o.residual, bound);
        }
    }
    g.verdict("nine auxiliary identities at two points each, 1e-9 (1e-7 oscillatory)")
}

fn c9_kernels() -> Verdict {
    let mut g = Gate::new();
    let cfg = QuadConfig::default();
    for second in [false, true] {
        for nu in [0.0, 0.25] {
            for x in [0.5, 1.0] {
                let (r, k) = kosh_reciprocity(second, nu, x, 1e-11, &cfg).unwrap();
                g.within(format!("recip second={second} nu={nu} x={x}"), (r.value.re - k).abs(), 1e-9);
            }
        }
    }
    let r = check(IdentityId::SelfRecipTriangle, 0.8, 0.4, 1e-7);
    for f in ["phi", "lambda", "frak"] {
        for (a, b) in [("series", "mellin"), ("series", "kernel"), ("mellin", "kernel")] {
            g.within(format!("{f} {a}/{b}"), diff(&r, &format!("{f}/{a}"), &format!("{f}/{b}")), 1e-6);
        }
    }
    g.verdict("reciprocities < 1e-9 at nu 0, 0.25 and x 0.5, 1; three triangles pairwise within 1e-6")
}

fn c10_omega() -> Verdict {
    let mut g = Gate::new();
    for z in [0.3, 0.0] {
        let r = check(IdentityId::OmegaProp, 0.7, z, 1e-10);
        g.within(format!("Omega definition vs closed z {z}"), diff(&r, "definition", "closed_form"), 1e-8);
        g.within(format!("Omega all members z {z}"), spread(&r), 1e-8);
    }
    let c = check(IdentityId::CohenK1, 0.7, 0.3, 1e-10);
    g.within("Cohen (0.3, 0.7)", spread(&c), 1e-8);
    for a in [1.0, 1.2] {
        let r = check(IdentityId::OmegaLaplace, a, 0.3, 1e-9);
        g.within(format!("Laplace alpha {a} x/xi"), diff(&r, "x_integral(alpha)", "xi_integral"), 1e-8);
        g.within(format!("Laplace alpha {a} x/hurwitz"), diff(&r, "x_integral(alpha)", "hurwitz_series"), 1e-8);
        g.within(format!("Laplace alpha {a} xi/hurwitz"), diff(&r, "xi_integral", "hurwitz_series"), 1e-8);
    }
    for z in [0.3, 0.0] {
        let r = check(IdentityId::OmegaJ, 1.2, z, 1e-8);
        g.within(format!("J-weighted z {z}"), spread(&r), 1e-7);
    }
    g.verdict("Omega closed form and Cohen within 1e-8; Laplace triple within 1e-8; J-weighted within 1e-7")
}

fn rel(a: C64, b: C64) -> f64 {
    (a - b).norm() / b.norm().max(1e-300)
}

fn c11_golden() -> Verdict {
    let mut g = Gate::new();
    g.within("zeta(2)", rel(zeta(cr(2.0)), cr(PI * PI / 6.0)), 1e-14);
    g.within("zeta(0)", rel(zeta(cr(0.0)), cr(-0.5)), 1e-14);
    g.within("zeta(1/2)", rel(zeta(cr(0.5)), cr(-1.460_354_508_809_586_8)), 1e-13);
    // ζ(s) = 2^s π^{s−1} sin(πs/2) Γ(1−s) ζ(1−s)
    for re in [-1.5, -0.3, 0.2, 0.5, 0.8, 1.7, 2.5] {
        for im in [0.0, 1.0, 7.5, 21.0] {
            let s = c64(re, im);
            let rhs = (s * 2f64.ln()).exp() * ((s - 1.0) * PI.ln()).exp() * (s * (0.5 * PI)).sin() * gamma(1.0 - s) * zeta(1.0 - s);
            g.within(format!("functional equation at {s}"), rel(zeta(s), rhs), 1e-10);
        }
    }
    for s in [c64(0.3, 0.0), c64(0.25, 2.0), c64(-0.7, 0.4), c64(0.5, 10.0)] {
        let refl = gamma(s) * gamma(1.0 - s) * (s * PI).sin();
        g.within(format!("reflection at {s}"), rel(refl, cr(PI)), 1e-12);
        let dup = gamma(s) * gamma(s + 0.5);
        let want = ((1.0 - 2.0 * s) * 2f64.ln()).exp() * PI.sqrt() * gamma(s * 2.0);
        g.within(format!("duplication at {s}"), rel(dup, want), 1e-12);
    }
    for nu in [-0.7, -0.25, 0.0, 0.3, 0.8] {
        let o = |v: f64| Order::new(cr(v)).unwrap();
        for x in [0.3, 1.0, 4.5, 17.0, 40.0] {
            let w = bessel_j(o(nu + 1.0), x).unwrap() * bessel_y(o(nu), x).unwrap()
                - bessel_j(o(nu), x).unwrap() * bessel_y(o(nu + 1.0), x).unwrap();
            g.within(format!("J/Y Wronskian nu {nu} x {x}"), rel(w, cr(2.0 / (PI * x))), 1e-10);
            let xc = cr(x);
            let wk = bessel_i(o(nu), xc).unwrap() * bessel_k(o(nu + 1.0), xc).unwrap()
                + bessel_i(o(nu + 1.0), xc).unwrap() * bessel_k(o(nu), xc).unwrap();
            g.within(format!("I/K Wronskian nu {nu} x {x}"), rel(wk, cr(1.0 / x)), 1e-10);
        }
    }
    g.within("xi(1)", rel(xi_small(cr(1.0)), cr(0.5)), 1e-14);
    g.within("xi(0)", rel(xi_small(cr(0.0)), cr(0.5)), 1e-14);
    for t in [0.0, 0.7, 3.0, 5.0, 14.134_725_141_734_693, 25.0] {
        let up = xi_small(c64(0.5, t));
        let down = xi_small(c64(0.5, -t));
        let scale = xi_big(cr(0.0)).re;
        g.within(format!("Im Xi({t})"), up.im.abs() / scale, 1e-12);
        g.within(format!("Xi({t}) even"), (up - down).norm() / scale, 1e-12);
    }
    g.verdict("zeta values, functional equation grid, gamma reflection/duplication, Wronskians, Xi reality/evenness")
}

fn c12_note42() -> Verdict {
    let mut g = Gate::new();
    let mut cs = Vec::new();
    for a in [1.2, 1.6, 2.0] {
        let r = check(IdentityId::Note42Exploratory, a, 0.3, 1e-10);
        g.flag(format!("alpha {a} not flagged exploratory"), r.exploratory);
        match r.fitted_constant {
            Some(c) => cs.push(c),
            None => g.flag(format!("alpha {a} has no fitted constant"), false),
        }
    }
    let lo = cs.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = cs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    g.within("relative spread of fitted constant", (hi - lo) / lo.abs(), 1e-8);
    let c = cs.first().copied().unwrap_or(f64::NAN);
    g.verdict(&format!("fitted constant {c:.12} (-32/pi = {:.12}) stable over alpha 1.2, 1.6, 2", -32.0 / PI))
}

fn main() {
    let criteria: [(&str, fn() -> Verdict, Duration); 12] = [
        ("1 Jacobi chain", c1_jacobi, Duration::from_secs(5)),
        ("2 K0 divisor series", c2_kosh_k0, Duration::from_secs(10)),
        ("3 Gaussian Bose integral", c3_ramanujan_gauss, Duration::from_secs(10)),
        ("4 lambda series", c4_ramanujan_lambda, Duration::from_secs(20)),
        ("5 Guinand series", c5_guinand, Duration::from_secs(10)),
        ("6 K-weighted integrals", c6_k_weighted, Duration::from_secs(180)),
        ("7 double integral chain", c7_double, Duration::from_secs(300)),
        ("8 auxiliary suite", c8_aux, Duration::from_secs(60)),
        ("9 kernel machinery", c9_kernels, Duration::from_secs(180)),
        ("10 Omega family", c10_omega, Duration::from_secs(180)),
        ("11 golden functions", c11_golden, Duration::from_secs(30)),
        ("12 exploratory NOTE42", c12_note42, Duration::from_secs(60)),
    ];
    let mut failed = 0;
    for (name, f, limit) in criteria {
        let t = Instant::now();
        let v = f();
        let el = t.elapsed();
        let ok = v.ok && el <= limit;
        if !ok {
            failed += 1;
        }
        let tag = if ok { "PASS" } else { "FAIL" };
        let over = if el > limit { format!(" (over the {}s budget)", limit.as_secs()) } else { String::new() };
        println!("criterion {name}: {tag} [{:.2}s{over}] {}", el.as_secs_f64(), v.detail);
    }
    println!("acceptance: {} of 12 criteria pass", 12 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
