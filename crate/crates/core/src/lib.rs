//! Exact Laurent expansions of Szegő and Bergman kernels of disc bundles over
//! compact Hermitian symmetric spaces, with floating-point oracles for the
//! type I Grassmannians and the cohomological obstructions that separate the
//! circle bundles from spheres and lens spaces.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;

pub mod catalog;
pub mod error;
pub mod expansion;
pub mod lab;
pub mod poch;
pub mod poly;
pub mod topology;

pub use catalog::{catalog, space_from_label, space_from_params, Family, SpaceLabel, SpaceParams};
pub use error::{Error, Result};
pub use expansion::{
    bergman_coeff_poly, check_c0, expand, laurent_profile, log_term_detector, szego_coeff_poly,
    to_binomial_basis, Expansion, KernelKind, KernelSpec, LaurentProfile, Prefactor,
};
pub use poch::{gindikin_log_gamma, poch_polynomial, poch_value};
pub use poly::{IntPoly, RatPoly};

pub use num_complex::Complex64;
pub use num_rational::BigRational;
