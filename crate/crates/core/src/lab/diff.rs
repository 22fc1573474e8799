//! Finite-difference derivatives (central stencils, one Richardson step with
//! step ratio 2) for Jacobians of the `U(k+m)` action and the Monge–Ampère
//! determinant of the disc-bundle defining function.

use alloc::vec::Vec;

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::linalg::{h_pair, mobius_action, CMatrix};
use super::Comparison;
use crate::error::{Error, Result};

/// Point `(z, λ)` of the bundle chart over `I(k,m)`.
#[derive(Debug, Clone, PartialEq)]
pub struct BundlePoint {
    pub z: CMatrix,
    pub lambda: Complex64,
    pub mu: u32,
}

impl BundlePoint {
    /// Accepts points of the closed disc bundle `|λ|² h(z,−z)^μ ≤ 1`.
    pub fn new(z: CMatrix, lambda: Complex64, mu: u32) -> Result<Self> {
        if mu == 0 || z.is_empty() {
            return Err(Error::InvalidParams(
                "need mu >= 1 and a non-empty base point".into(),
            ));
        }
        let p = BundlePoint { z, lambda, mu };
        if p.defining_function() > 1e-12 {
            return Err(Error::InvalidParams(
                "point lies outside the disc bundle".into(),
            ));
        }
        Ok(p)
    }

    /// The point over `z` on the circle bundle with fiber phase `theta`.
    pub fn on_boundary(z: CMatrix, theta: f64, mu: u32) -> Result<Self> {
        let h = h_pair(&z, &z)?.re;
        let radius = libm::pow(h, -0.5 * f64::from(mu));
        Self::new(z, Complex64::from_polar(radius, theta), mu)
    }

    pub fn h(&self) -> f64 {
        h_pair(&self.z, &self.z).map(|v| v.re).unwrap_or(f64::NAN)
    }

    /// `ρ = |λ|² h(z,−z)^μ − 1`.
    pub fn defining_function(&self) -> f64 {
        self.lambda.norm_sqr() * libm::pow(self.h(), f64::from(self.mu)) - 1.0
    }

    pub fn is_interior(&self) -> bool {
        self.defining_function() < 0.0
    }

    /// Complex dimension `n = km` of the base.
    pub fn base_dim(&self) -> usize {
        self.z.len()
    }

    /// Genus `k + m` of `I(k,m)`.
    pub fn genus(&self) -> u32 {
        (self.z.nrows() + self.z.ncols()) as u32
    }
}

/// Central difference of a vector-valued map, refined by one Richardson step.
fn richardson<F>(step: f64, mut central: F) -> Result<Vec<Complex64>>
where
    F: FnMut(f64) -> Result<Vec<Complex64>>,
{
    let coarse = central(step)?;
    let fine = central(step / 2.0)?;
    Ok(fine
        .iter()
        .zip(&coarse)
        .map(|(f, c)| (f * 4.0 - c) / 3.0)
        .collect())
}

/// Determinant of the complex Jacobian of `z ↦ (Az+B)(Cz+D)^{-1}`, by central differences.
///
/// The map is holomorphic, so differentiating along each real coordinate axis
/// gives the complex derivative.
pub fn jacobian_det_numeric(u: &CMatrix, z: &CMatrix, step: f64) -> Result<Complex64> {
    let n = z.len();
    // the stencil straddles z, so check the chart at z itself
    mobius_action(u, z)?;
    let mut jac = DMatrix::<Complex64>::zeros(n, n);
    for col in 0..n {
        let column = richardson(step, |h| {
            let mut plus = z.clone();
            let mut minus = z.clone();
            plus[col] += h;
            minus[col] -= h;
            let fp = mobius_action(u, &plus)?;
            let fm = mobius_action(u, &minus)?;
            Ok(fp
                .iter()
                .zip(fm.iter())
                .map(|(a, b)| (a - b) / (2.0 * h))
                .collect())
        })?;
        for (row, v) in column.into_iter().enumerate() {
            jac[(row, col)] = v;
        }
    }
    Ok(jac.determinant())
}

/// Checks `h(gz,−gz) = h(z,−z)·|J_g(z)|^{2/p}` with `p = k + m`.
pub fn transformation_check(u: &CMatrix, z: &CMatrix, step: f64) -> Result<Comparison> {
    let gz = mobius_action(u, z)?;
    let p = (z.nrows() + z.ncols()) as f64;
    let jac = jacobian_det_numeric(u, z, step)?;
    let lhs = h_pair(&gz, &gz)?.re;
    let rhs = h_pair(z, z)?.re * libm::pow(jac.norm(), 2.0 / p);
    Ok(Comparison::new(lhs, rhs))
}

/// Real coordinates `(Re w_0, Im w_0, …)` with `w = (z entries…, λ)`.
fn pack(point: &BundlePoint) -> Vec<f64> {
    point
        .z
        .iter()
        .chain(core::iter::once(&point.lambda))
        .flat_map(|w| [w.re, w.im])
        .collect()
}

fn rho_at(coords: &[f64], k: usize, m: usize, mu: u32) -> Result<f64> {
    let z = CMatrix::from_iterator(
        k,
        m,
        (0..k * m).map(|i| Complex64::new(coords[2 * i], coords[2 * i + 1])),
    );
    let lam = Complex64::new(coords[2 * k * m], coords[2 * k * m + 1]);
    Ok(lam.norm_sqr() * libm::pow(h_pair(&z, &z)?.re, f64::from(mu)) - 1.0)
}

/// Gradient and Hessian of `ρ` in real coordinates for one step size.
fn real_derivatives(
    base: &[f64],
    k: usize,
    m: usize,
    mu: u32,
    h: f64,
) -> Result<(Vec<f64>, Vec<f64>)> {
    let dim = base.len();
    let f = |shifts: &[(usize, f64)]| -> Result<f64> {
        let mut c = base.to_vec();
        for &(i, d) in shifts {
            c[i] += d;
        }
        rho_at(&c, k, m, mu)
    };
    let f0 = f(&[])?;
    let mut grad = alloc::vec![0.0; dim];
    let mut hess = alloc::vec![0.0; dim * dim];
    for i in 0..dim {
        let fp = f(&[(i, h)])?;
        let fm = f(&[(i, -h)])?;
        grad[i] = (fp - fm) / (2.0 * h);
        hess[i * dim + i] = (fp - 2.0 * f0 + fm) / (h * h);
        for j in 0..i {
            let v = (f(&[(i, h), (j, h)])? - f(&[(i, h), (j, -h)])? - f(&[(i, -h), (j, h)])?
                + f(&[(i, -h), (j, -h)])?)
                / (4.0 * h * h);
            hess[i * dim + j] = v;
            hess[j * dim + i] = v;
        }
    }
    Ok((grad, hess))
}

/// Monge–Ampère determinant `J[ρ] = −det [[ρ, ∂ρ], [∂̄ρ, ∂∂̄ρ]]` of
/// `ρ = |λ|² h(z,−z)^μ − 1` over the `n+1` coordinates `(z, λ)`.
///
/// This is Fefferman's `(−1)^{n+1} det` applied to the positive-inside
/// function `−ρ`. On the circle bundle it equals `μ^n h(z,−z)^{μ−p}`.
pub fn monge_ampere_numeric(point: &BundlePoint, step: f64) -> Result<f64> {
    if step.is_nan() || step <= 0.0 {
        return Err(Error::InvalidParams(
            "finite-difference step must be positive".into(),
        ));
    }
    let (k, m) = point.z.shape();
    let base = pack(point);
    let dim = base.len();
    let (g1, h1) = real_derivatives(&base, k, m, point.mu, step)?;
    let (g2, h2) = real_derivatives(&base, k, m, point.mu, step / 2.0)?;
    let extrapolate = |fine: &[f64], coarse: &[f64]| -> Vec<f64> {
        fine.iter()
            .zip(coarse)
            .map(|(f, c)| (4.0 * f - c) / 3.0)
            .collect()
    };
    let grad = extrapolate(&g2, &g1);
    let hess = extrapolate(&h2, &h1);
    let vars = dim / 2;
    let rho = rho_at(&base, k, m, point.mu)?;
    let hr = |a: usize, b: usize| hess[a * dim + b];
    let mut mat = DMatrix::<Complex64>::zeros(vars + 1, vars + 1);
    mat[(0, 0)] = Complex64::new(rho, 0.0);
    for j in 0..vars {
        let (x, y) = (2 * j, 2 * j + 1);
        // ∂_j = (∂_x − i∂_y)/2
        mat[(0, j + 1)] = Complex64::new(grad[x], -grad[y]) * 0.5;
        mat[(j + 1, 0)] = Complex64::new(grad[x], grad[y]) * 0.5;
    }
    for i in 0..vars {
        for j in 0..vars {
            let (xi, yi, xj, yj) = (2 * i, 2 * i + 1, 2 * j, 2 * j + 1);
            // ∂̄_i ∂_j
            mat[(i + 1, j + 1)] =
                Complex64::new(hr(xi, xj) + hr(yi, yj), hr(yi, xj) - hr(xi, yj)) * 0.25;
        }
    }
    Ok(-mat.determinant().re)
}

/// Closed form `μ^n |λ|^{2n} h(z,−z)^{μ(n+1)−p}`; reduces to `μ^n h^{μ−p}` on the circle bundle.
pub fn monge_ampere_expected(point: &BundlePoint) -> f64 {
    let n = point.base_dim() as i32;
    let mu = f64::from(point.mu);
    let h = point.h();
    let p = f64::from(point.genus());
    libm::pow(mu, f64::from(n))
        * libm::pow(point.lambda.norm_sqr(), f64::from(n))
        * libm::pow(h, mu * f64::from(n + 1) - p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn scalar(v: Complex64) -> CMatrix {
        CMatrix::from_element(1, 1, v)
    }

    #[test]
    fn jacobian_examples() {
        let z = scalar(c(0.3, -0.2));
        let j = jacobian_det_numeric(&CMatrix::identity(2, 2), &z, 1e-3).unwrap();
        assert!((j - c(1.0, 0.0)).norm() < 1e-10);
        let flip =
            CMatrix::from_row_slice(2, 2, &[c(0.0, 0.0), c(1.0, 0.0), c(-1.0, 0.0), c(0.0, 0.0)]);
        assert!(matches!(
            jacobian_det_numeric(&flip, &scalar(c(0.0, 0.0)), 1e-3),
            Err(Error::Singular(_))
        ));
        let theta = 0.4;
        let e = Complex64::from_polar(1.0, theta);
        let rot = CMatrix::from_row_slice(2, 2, &[e, c(0.0, 0.0), c(0.0, 0.0), e.conj()]);
        let j = jacobian_det_numeric(&rot, &scalar(c(0.0, 0.0)), 1e-3).unwrap();
        assert!((j - Complex64::from_polar(1.0, 2.0 * theta)).norm() < 1e-10);
    }

    #[test]
    fn transformation_rank_one() {
        // An SU(2) element: [[a, b], [−b̄, ā]] with |a|²+|b|² = 1.
        let a = Complex64::from_polar(0.6, 0.3);
        let b = Complex64::from_polar(0.8, -1.1);
        let u = CMatrix::from_row_slice(2, 2, &[a, b, -b.conj(), a.conj()]);
        let z = scalar(c(0.7, 0.2));
        assert!(transformation_check(&u, &z, 1e-3).unwrap().within(1e-6));
        let id = transformation_check(&CMatrix::identity(2, 2), &z, 1e-3).unwrap();
        assert!(id.within(1e-12));
    }

    #[test]
    fn monge_ampere_cp1() {
        for (mu, want) in [(1, 1.0), (2, 2.0)] {
            let p = BundlePoint::on_boundary(scalar(c(0.0, 0.0)), 0.7, mu).unwrap();
            let got = monge_ampere_numeric(&p, 1e-3).unwrap();
            assert!((got - want).abs() < 1e-7, "mu={mu} got={got}");
        }
        // μ = p = 2: constant in z.
        for z in [c(0.5, 0.1), c(-1.3, 0.8)] {
            let p = BundlePoint::on_boundary(scalar(z), 1.9, 2).unwrap();
            let got = monge_ampere_numeric(&p, 1e-3).unwrap();
            assert!((got - 2.0).abs() < 1e-6, "{z} {got}");
        }
    }

    #[test]
    fn monge_ampere_interior_closed_form() {
        let z = CMatrix::from_row_slice(1, 2, &[c(0.2, 0.1), c(-0.3, 0.25)]);
        let p = BundlePoint::new(z, c(0.3, -0.4), 2).unwrap();
        assert!(p.is_interior());
        let got = monge_ampere_numeric(&p, 1e-3).unwrap();
        let want = monge_ampere_expected(&p);
        assert!(Comparison::new(got, want).within(1e-6), "{got} {want}");
    }

    #[test]
    fn bundle_point_validation() {
        assert!(BundlePoint::new(scalar(c(1.0, 0.0)), c(1.0, 0.0), 1).is_err());
        assert!(BundlePoint::new(scalar(c(0.0, 0.0)), c(0.5, 0.0), 0).is_err());
        assert!(monge_ampere_numeric(
            &BundlePoint::new(scalar(c(0.0, 0.0)), c(0.5, 0.0), 1).unwrap(),
            0.0
        )
        .is_err());
    }
}
