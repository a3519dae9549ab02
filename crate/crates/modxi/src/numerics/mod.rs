//! Quadrature engines shared by every integral member.
//!
//! All routines take plain closures `Fn(f64) -> C64` and return a
//! [`QuadResult`]. A run that exhausts its panel budget is still `Ok` but has
//! `converged == false`; only non-finite samples and broken decay hints are
//! reported as errors.

mod adaptive;
mod infinite;

pub use adaptive::{quad_finite, quad_finite_with};
pub use infinite::{
    quad_double, quad_double_by, quad_oscillatory, quad_oscillatory_with, quad_semi_infinite,
    quad_semi_infinite_with, quad_vertical_line, quad_vertical_line_with, DoubleRule,
};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Complex scalar used throughout the crate.
pub type C64 = Complex64;

/// Shorthand constructor.
#[inline]
pub fn c64(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// Real number lifted to [`C64`].
#[inline]
pub fn cr(re: f64) -> C64 {
    C64::new(re, 0.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadResult {
    pub value: C64,
    pub error_estimate: f64,
    pub nodes: usize,
    pub converged: bool,
}

impl QuadResult {
    pub fn scaled(self, k: C64) -> Self {
        QuadResult {
            value: self.value * k,
            error_estimate: self.error_estimate * k.norm(),
            ..self
        }
    }

    /// Sum of two independent results.
    pub fn plus(self, other: QuadResult) -> Self {
        QuadResult {
            value: self.value + other.value,
            error_estimate: self.error_estimate + other.error_estimate,
            nodes: self.nodes + other.nodes,
            converged: self.converged && other.converged,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum QuadError {
    #[error("integrand returned a non-finite value at x = {0}")]
    NonFinite(f64),
    #[error("decay hint violated at truncation point {t}: |f| = {observed:e}, envelope {envelope:e}")]
    HintViolation { t: f64, observed: f64, envelope: f64 },
    #[error("oscillatory acceleration did not settle (last increment {0:e})")]
    AccelerationDivergence(f64),
    #[error("invalid interval [{0}, {1}]")]
    BadInterval(f64, f64),
}

/// Shape of the integrand's decay, used to pick a truncation point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DecayHint {
    /// |f(x)| ≲ C e^{−rate·x}
    Exponential { rate: f64 },
    /// |f(x)| ≲ C e^{−rate·x²}
    Gaussian { rate: f64 },
    /// |f(x)| ≲ C e^{−scale·x}/√(scale·x), the large-argument shape of K_ν(scale·x)
    BesselK { scale: f64 },
    /// |f(x)| ≲ C (1+x)^power e^{−rate·x}, the Stirling-type envelope of Ξ-products
    XiEnvelope { rate: f64, power: f64 },
}

impl DecayHint {
    pub fn shape(&self, x: f64) -> f64 {
        match *self {
            DecayHint::Exponential { rate } => (-rate * x).exp(),
            DecayHint::Gaussian { rate } => (-rate * x * x).exp(),
            DecayHint::BesselK { scale } => {
                let u = (scale * x).max(1e-300);
                (-u).exp() / u.sqrt().max(1.0)
            }
            DecayHint::XiEnvelope { rate, power } => (1.0 + x.abs()).powf(power) * (-rate * x).exp(),
        }
    }

    /// ∫_T^∞ shape, up to a modest overestimate.
    pub fn tail(&self, t: f64) -> f64 {
        let g = self.shape(t);
        match *self {
            DecayHint::Exponential { rate } => g / rate,
            DecayHint::Gaussian { rate } => g / (2.0 * rate * t.max(1.0 / rate.sqrt())),
            DecayHint::BesselK { scale } => g / scale,
            DecayHint::XiEnvelope { rate, power } => {
                let eff = rate - power.max(0.0) / (1.0 + t.abs());
                if eff <= 0.0 {
                    f64::INFINITY
                } else {
                    g / eff
                }
            }
        }
    }

    /// Natural length scale of the decay.
    pub fn length(&self) -> f64 {
        match *self {
            DecayHint::Exponential { rate } => 1.0 / rate,
            DecayHint::Gaussian { rate } => 1.0 / rate.sqrt(),
            DecayHint::BesselK { scale } => 1.0 / scale,
            DecayHint::XiEnvelope { rate, power } => (1.0 + power.max(0.0)) / rate,
        }
    }

    pub fn is_valid(&self) -> bool {
        match *self {
            DecayHint::Exponential { rate } | DecayHint::Gaussian { rate } => rate > 0.0,
            DecayHint::BesselK { scale } => scale > 0.0,
            DecayHint::XiEnvelope { rate, .. } => rate > 0.0,
        }
    }
}

/// Work limits for the adaptive engines.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadConfig {
    /// Maximum number of panels held by one adaptive run.
    pub max_panels: usize,
    /// Maximum number of half-period intervals in oscillatory runs.
    pub max_intervals: usize,
    /// Evaluate the nodes of each panel in parallel (only useful for costly integrands).
    pub parallel_nodes: bool,
}

impl Default for QuadConfig {
    fn default() -> Self {
        QuadConfig {
            max_panels: 4000,
            max_intervals: 400,
            parallel_nodes: false,
        }
    }
}

impl QuadConfig {
    pub fn with_parallel_nodes(mut self, on: bool) -> Self {
        self.parallel_nodes = on;
        self
    }
}

/// Evaluates `f` at every abscissa, in parallel when allowed.
pub(crate) fn eval_nodes<F>(f: &F, xs: &[f64], parallel: bool) -> Vec<C64>
where
    F: Fn(f64) -> C64 + Sync,
{
    crate::parallel::map_slice(xs, parallel, |&x| f(x))
}
