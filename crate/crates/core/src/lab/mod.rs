//! Floating-point realization of the type I Grassmannian `I(k,m)` in the
//! chart `z ∈ C^{k×m}`, used as an independent oracle for the exact pipeline.
//!
//! The Jordan polynomial is taken as `h(x,−y) = det(I_k + x y*)`, so that
//! `h(z,−z) = det(I + z z*) ≥ 1`. The determinant identity for the Bergman
//! operator and the transformation rule of `h` under `U(k+m)` certify the convention.

mod diff;
mod linalg;
mod quadrature;
mod series;

pub use diff::{
    jacobian_det_numeric, monge_ampere_expected, monge_ampere_numeric, transformation_check,
    BundlePoint,
};
pub use linalg::{bergman_op_det, h_pair, mobius_action, CMatrix};
pub use quadrature::{
    bergman_norm_quadrature, gauss_legendre, hardy_norm_quadrature, GaussLegendre,
};
pub use series::{rho_ext, szego_series, KernelSeries};

/// A numeric value next to the reference it is supposed to match.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Comparison {
    pub actual: f64,
    pub expected: f64,
}

impl Comparison {
    pub fn new(actual: f64, expected: f64) -> Self {
        Comparison { actual, expected }
    }

    /// `|actual − expected| / max(|expected|, 1e−300)`.
    pub fn rel_err(&self) -> f64 {
        (self.actual - self.expected).abs() / self.expected.abs().max(1e-300)
    }

    pub fn within(&self, tol: f64) -> bool {
        self.rel_err() <= tol
    }
}
