//! Gauss–Legendre quadrature and the norm integrals behind the kernel coefficients.

use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::catalog::SpaceParams;
use crate::error::{Error, Result};

/// Nodes and weights on `(0, 1)`.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

/// `n`-point Gauss–Legendre rule mapped to `(0, 1)`; Newton iteration on the
/// three-term recurrence.
pub fn gauss_legendre(n: usize) -> GaussLegendre {
    let mut nodes = alloc::vec![0.0; n];
    let mut weights = alloc::vec![0.0; n];
    let nf = n as f64;
    for i in 0..n.div_ceil(2) {
        let mut x = libm::cos(PI * (i as f64 + 0.75) / (nf + 0.5));
        let mut dp = 1.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for j in 2..=n {
                let jf = j as f64;
                let p2 = ((2.0 * jf - 1.0) * x * p1 - (jf - 1.0) * p0) / jf;
                p0 = p1;
                p1 = p2;
            }
            dp = nf * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        // map [-1, 1] -> [0, 1]
        nodes[i] = 0.5 * (1.0 - x);
        nodes[n - 1 - i] = 0.5 * (1.0 + x);
        weights[i] = 0.5 * w;
        weights[n - 1 - i] = 0.5 * w;
    }
    GaussLegendre { nodes, weights }
}

impl GaussLegendre {
    pub fn integrate<F: FnMut(f64) -> f64>(&self, mut f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(x, w)| w * f(*x))
            .sum()
    }
}

/// `t = √(x/(1−x))` together with `dt/dx`.
fn unfold(x: f64) -> (f64, f64) {
    let t = libm::sqrt(x / (1.0 - x));
    let dt = 1.0 / (2.0 * t * (1.0 - x) * (1.0 - x));
    (t, dt)
}

/// Polar density `∏(1+t_j²)^{−ν−p} t_j^{1+2b} ∏_{i<j}|t_i²−t_j²|^a`.
fn polar_density(t: &[f64], nu: u32, space: &SpaceParams) -> f64 {
    let e = -f64::from(nu + space.genus());
    let mut v: f64 = t
        .iter()
        .map(|tj| libm::pow(1.0 + tj * tj, e) * libm::pow(*tj, f64::from(1 + 2 * space.b())))
        .product();
    for i in 0..t.len() {
        for j in i + 1..t.len() {
            v *= libm::pow((t[i] * t[i] - t[j] * t[j]).abs(), f64::from(space.a()));
        }
    }
    v
}

fn polar_integral(space: &SpaceParams, nu: u32, rule: &GaussLegendre) -> f64 {
    match space.rank() {
        1 => rule.integrate(|x| {
            let (t, dt) = unfold(x);
            polar_density(&[t], nu, space) * dt
        }),
        _ => rule.integrate(|x1| {
            let (t1, d1) = unfold(x1);
            rule.integrate(|x2| {
                let (t2, d2) = unfold(x2);
                polar_density(&[t1, t2], nu, space) * d1 * d2
            })
        }),
    }
}

/// `I(ν)/I(0)` for the polar-coordinate norm integral of `1` in the weight
/// `h(z,−z)^{−ν−p}`, over `(0,∞)^r` mapped to the unit box by `x = t²/(1+t²)`.
///
/// Equals `1/P_1(ν)` with `P_1` the Szegő coefficient polynomial.
/// Only ranks 1 and 2 of the type I family are supported.
pub fn hardy_norm_quadrature(k: u32, m: u32, nu: u32, grid: usize) -> Result<f64> {
    if k == 0 || k > m {
        return Err(Error::InvalidParams(format!(
            "I({k},{m}) needs 1 <= k <= m"
        )));
    }
    if k > 2 {
        return Err(Error::Unsupported(format!(
            "rank {k} quadrature (only r <= 2)"
        )));
    }
    if nu > 30 {
        return Err(Error::Unsupported(format!("nu = {nu} > 30")));
    }
    let space = crate::catalog::SpaceLabel::I(k, m).params()?;
    let rule = gauss_legendre(grid);
    Ok(polar_integral(&space, nu, &rule) / polar_integral(&space, 0, &rule))
}

/// `‖λ^ν‖²` on the disc bundle `D_μ` over `CP¹`, measure `dA(λ) ∧ ω`, with
/// `ω = π^{-1}(1+|z|²)^{-2} dm(z)` of total mass one.
///
/// Both the fiber integral over `|λ| < (1+|z|²)^{−μ/2}` and the radial base
/// integral in `s = |z|²` are done by quadrature; the result is `π/Q_μ(ν)`.
pub fn bergman_norm_quadrature(nu: u32, mu: u32, grid: usize) -> Result<f64> {
    if nu > 30 || mu == 0 {
        return Err(Error::Unsupported(format!("nu = {nu}, mu = {mu}")));
    }
    let rule = gauss_legendre(grid);
    let two_nu = f64::from(2 * nu);
    // ∫_{|λ|<R} |λ|^{2ν} dA = R^{2ν+2} ∫_0^1 2π u^{2ν+1} du
    let fiber_unit = rule.integrate(|u| 2.0 * PI * libm::pow(u, two_nu + 1.0));
    Ok(rule.integrate(|x| {
        let s = x / (1.0 - x);
        let ds = 1.0 / ((1.0 - x) * (1.0 - x));
        let radius = libm::pow(1.0 + s, -0.5 * f64::from(mu));
        let fiber = libm::pow(radius, two_nu + 2.0) * fiber_unit;
        // dm(z) = π ds in s = |z|², against π^{-1}(1+s)^{-2}
        fiber * libm::pow(1.0 + s, -2.0) * ds
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rule_integrates_polynomials_exactly() {
        let rule = gauss_legendre(10);
        assert!((rule.weights.iter().sum::<f64>() - 1.0).abs() < 1e-14);
        for d in 0..20 {
            let got = rule.integrate(|x| libm::pow(x, f64::from(d)));
            assert!((got - 1.0 / f64::from(d + 1)).abs() < 1e-14, "degree {d}");
        }
        let one = gauss_legendre(1);
        assert!((one.nodes[0] - 0.5).abs() < 1e-15 && (one.weights[0] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn hardy_examples() {
        let r = hardy_norm_quadrature(1, 1, 3, 200).unwrap();
        assert!((r - 0.25).abs() < 1e-10);
        let r = hardy_norm_quadrature(1, 2, 1, 200).unwrap();
        assert!((r - 1.0 / 3.0).abs() < 1e-10);
        let r = hardy_norm_quadrature(2, 2, 1, 120).unwrap();
        assert!((r - 1.0 / 6.0).abs() < 1e-8);
        assert!(matches!(
            hardy_norm_quadrature(3, 3, 1, 10),
            Err(Error::Unsupported(_))
        ));
        assert!(hardy_norm_quadrature(2, 1, 1, 10).is_err());
    }

    #[test]
    fn bergman_slice_examples() {
        for (nu, want) in [(0, PI / 2.0), (1, PI / 6.0), (2, PI / 12.0)] {
            let got = bergman_norm_quadrature(nu, 1, 200).unwrap();
            assert!((got - want).abs() < 1e-10, "nu={nu}");
        }
        // μ = 2: π/((ν+1)(2ν+3))
        for nu in 0..5u32 {
            let got = bergman_norm_quadrature(nu, 2, 200).unwrap();
            let want = PI / f64::from((nu + 1) * (2 * nu + 3));
            assert!((got - want).abs() < 1e-10, "nu={nu}");
        }
    }
}
