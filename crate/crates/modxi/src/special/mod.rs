//! Gamma- and zeta-family functions of a complex variable, plus ξ and Ξ.

mod constants;
mod gamma;
mod xi;
mod zeta;

pub use constants::{constants, stieltjes, SpecialConstants, EULER_GAMMA};
pub use gamma::{digamma, gamma, gamma_checked, log_gamma, reciprocal_gamma};
pub use xi::{stirling_envelope, xi_big, xi_small};
pub use zeta::{
    hurwitz_zeta, hurwitz_zeta_deriv, zeta, zeta_checked, zeta_deriv, zeta_one_plus, zeta_regular, zeta_times_s_minus_one,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpecialError {
    #[error("gamma has a pole at {0}")]
    GammaPole(f64),
    #[error("zeta has a pole at s = 1")]
    ZetaPole,
    #[error("Hurwitz parameter must be positive, got {0}")]
    BadHurwitzParameter(f64),
}

/// Even-index Bernoulli numbers B₂, B₄, …, B₃₀.
pub(crate) const BERNOULLI_EVEN: [f64; 15] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
];

/// B_{2k}/(2k)! for k = 1..=15.
pub(crate) fn bernoulli_over_factorial() -> &'static [f64; 15] {
    use std::sync::OnceLock;
    static TABLE: OnceLock<[f64; 15]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut out = [0.0; 15];
        let mut fact = 1.0f64;
        for k in 1..=15 {
            fact *= ((2 * k - 1) * (2 * k)) as f64;
            out[k - 1] = BERNOULLI_EVEN[k - 1] / fact;
        }
        out
    })
}

#[cfg(test)]
mod tests;
