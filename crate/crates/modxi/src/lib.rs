//! Independent numerical evaluation of modular-type transformations built
//! from Riemann Ξ integrals.
//!
//! Every identity is checked by computing its members through separate code
//! paths: a closed-form series, a weighted x-integral (usually at both α and
//! β = 1/α) and a Ξ-weighted cosine integral. [`identities::run_check`] binds
//! the members together and reports their agreement.

pub mod bessel;
pub mod identities;
pub mod numerics;
pub mod parallel;
pub mod series;
pub mod special;
pub mod transforms;

pub use numerics::{c64, cr, QuadResult, C64};
