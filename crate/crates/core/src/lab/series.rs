use alloc::vec::Vec;

use num_complex::Complex64;

use super::linalg::{h_pair, CMatrix};
use crate::catalog::SpaceParams;
use crate::error::{Error, Result};
use crate::expansion::szego_coeff_poly;
use crate::poly::RatPoly;

const MAX_T: f64 = 0.9;
const MAX_TERMS: usize = 1_000_000;

/// Sesqui-holomorphic defining function `αβ̄·h(x,−y)^μ − 1`.
pub fn rho_ext(
    x: &CMatrix,
    alpha: Complex64,
    y: &CMatrix,
    beta: Complex64,
    mu: u32,
) -> Result<Complex64> {
    Ok(alpha * beta.conj() * h_pair(x, y)?.powu(mu) - 1.0)
}

/// Power series `Σ_ν P(ν) t^ν` with float coefficients taken from an exact polynomial.
#[derive(Debug, Clone)]
pub struct KernelSeries {
    coeffs: Vec<f64>,
    abs_coeffs: Vec<f64>,
    mu: u32,
}

impl KernelSeries {
    pub fn new(poly: &RatPoly, mu: u32) -> Self {
        let coeffs = poly.to_f64_coeffs();
        let abs_coeffs = coeffs.iter().map(|c| c.abs()).collect();
        KernelSeries {
            coeffs,
            abs_coeffs,
            mu,
        }
    }

    pub fn szego(space: &SpaceParams, mu: u32) -> Result<Self> {
        Ok(Self::new(&szego_coeff_poly(space, mu)?, mu))
    }

    fn horner(c: &[f64], x: f64) -> f64 {
        c.iter().rev().fold(0.0, |acc, a| acc * x + a)
    }

    /// Sums the series at `t`, stopping once the tail bound drops below `tol·|sum|`.
    ///
    /// For `ν ≥ N ≥ 1` the tail is dominated by the geometric series with ratio
    /// `|t|·((N+1)/N)^deg` applied to `Σ|coeffs|·ν^i`, which majorizes `|P(ν)|`.
    pub fn sum(&self, t: Complex64, tol: f64) -> Result<Complex64> {
        let t_abs = t.norm();
        if t_abs.is_nan() || t_abs > MAX_T {
            return Err(Error::SlowConvergence(t_abs));
        }
        let deg = self.coeffs.len().saturating_sub(1) as f64;
        let mut sum = Complex64::new(0.0, 0.0);
        let mut pow = Complex64::new(1.0, 0.0);
        let mut pow_abs = 1.0;
        for nu in 0..MAX_TERMS {
            let x = nu as f64;
            sum += pow * Self::horner(&self.coeffs, x);
            if t_abs == 0.0 {
                return Ok(sum);
            }
            if nu >= 1 {
                let ratio = t_abs * libm::pow((x + 1.0) / x, deg);
                if ratio < 1.0 {
                    let tail = Self::horner(&self.abs_coeffs, x) * pow_abs * ratio / (1.0 - ratio);
                    if tail <= tol * sum.norm().max(f64::MIN_POSITIVE) {
                        return Ok(sum);
                    }
                }
            }
            pow *= t;
            pow_abs *= t_abs;
        }
        Err(Error::SlowConvergence(t_abs))
    }

    /// Kernel at `(x, α; y, β)` via `t = αβ̄·h(x,−y)^μ`.
    pub fn eval(
        &self,
        x: &CMatrix,
        alpha: Complex64,
        y: &CMatrix,
        beta: Complex64,
        tol: f64,
    ) -> Result<Complex64> {
        let t = alpha * beta.conj() * h_pair(x, y)?.powu(self.mu);
        self.sum(t, tol)
    }
}

/// One-shot Szegő kernel evaluation by series summation.
pub fn szego_series(
    space: &SpaceParams,
    x: &CMatrix,
    alpha: Complex64,
    y: &CMatrix,
    beta: Complex64,
    mu: u32,
    tol: f64,
) -> Result<Complex64> {
    KernelSeries::szego(space, mu)?.eval(x, alpha, y, beta, tol)
}
