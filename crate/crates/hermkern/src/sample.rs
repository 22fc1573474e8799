//! Seeded random inputs for the numeric suites.
//!
//! Every suite draws from its own ChaCha stream, so adding checks to one suite
//! does not shift the points another suite sees.

use hermkern_core::lab::{h_pair, mobius_action, CMatrix};
use hermkern_core::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Stream ids, one per suite.
pub mod stream {
    pub const ORACLE: u64 = 1;
    pub const MONGE_AMPERE: u64 = 2;
    pub const DET_B: u64 = 3;
    pub const TRANSFORM: u64 = 4;
}

pub fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

fn sym(rng: &mut impl Rng) -> f64 {
    2.0 * rng.random::<f64>() - 1.0
}

/// `k×m` matrix with real and imaginary parts uniform in `[−scale, scale]`.
pub fn box_matrix(rng: &mut impl Rng, k: usize, m: usize, scale: f64) -> CMatrix {
    CMatrix::from_fn(k, m, |_, _| {
        Complex64::new(scale * sym(rng), scale * sym(rng))
    })
}

/// Random matrix rescaled to Frobenius norm `radius · u`, `u` uniform in `(0, 1]`.
pub fn frobenius_ball(rng: &mut impl Rng, k: usize, m: usize, radius: f64) -> CMatrix {
    let z = box_matrix(rng, k, m, 1.0);
    let norm = z.norm();
    let target = radius * (1.0 - rng.random::<f64>());
    if norm == 0.0 {
        z
    } else {
        z * Complex64::new(target / norm, 0.0)
    }
}

/// Fiber coordinate with `|α|² h(x,−x)^μ = bound · u`.
fn fiber_point(rng: &mut impl Rng, x: &CMatrix, mu: u32, bound: f64) -> Complex64 {
    let h = h_pair(x, x).expect("square shapes").re;
    let r2 = bound * rng.random::<f64>() / h.powi(mu as i32);
    Complex64::from_polar(r2.sqrt(), std::f64::consts::TAU * rng.random::<f64>())
}

/// A pair of bundle points `(x, α), (y, β)` in the chart over `I(k,m)`.
#[derive(Debug, Clone)]
pub struct PointPair {
    pub x: CMatrix,
    pub alpha: Complex64,
    pub y: CMatrix,
    pub beta: Complex64,
}

impl PointPair {
    /// `t = αβ̄ h(x,−y)^μ`.
    pub fn t(&self, mu: u32) -> Complex64 {
        self.alpha * self.beta.conj() * h_pair(&self.x, &self.y).expect("same shape").powu(mu)
    }
}

/// Point pair with `|t| ≤ t_max`; Cauchy–Schwarz for `h(x,−y)^μ` bounds `|t|`
/// by the geometric mean of the two fiber bounds.
pub fn point_pair(rng: &mut impl Rng, k: usize, m: usize, mu: u32, t_max: f64) -> PointPair {
    let x = box_matrix(rng, k, m, 1.0);
    let y = box_matrix(rng, k, m, 1.0);
    let alpha = fiber_point(rng, &x, mu, t_max);
    let beta = fiber_point(rng, &y, mu, t_max);
    PointPair { x, alpha, y, beta }
}

/// Unitary `Q` factor of a random complex square matrix.
pub fn unitary(rng: &mut impl Rng, l: usize) -> CMatrix {
    loop {
        let a = box_matrix(rng, l, l, 1.0);
        if a.determinant().norm() > 1e-3 {
            return a.qr().q();
        }
    }
}

/// Unitary `u` and base point `z` with `|det(Cz + D)| ≥ min_denom`.
pub fn chart_pair(rng: &mut impl Rng, k: usize, m: usize, min_denom: f64) -> (CMatrix, CMatrix) {
    loop {
        let u = unitary(rng, k + m);
        let z = box_matrix(rng, k, m, 1.0);
        let c = u.view((k, 0), (m, k));
        let d = u.view((k, k), (m, m));
        if (c * &z + d).determinant().norm() >= min_denom && mobius_action(&u, &z).is_ok() {
            return (u, z);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let a: Vec<f64> = (0..4).map(|_| rng(7, 1).random()).collect();
        assert!(a.iter().all(|v| *v == a[0]));
        let mut r1 = rng(7, 1);
        let mut r2 = rng(7, 2);
        assert_ne!(r1.random::<u64>(), r2.random::<u64>());
    }

    #[test]
    fn pairs_respect_bound() {
        let mut r = rng(42, 0);
        for _ in 0..200 {
            let pp = point_pair(&mut r, 2, 2, 2, 0.7);
            assert!(pp.t(2).norm() <= 0.7 + 1e-12);
        }
    }

    #[test]
    fn unitaries_are_unitary() {
        let mut r = rng(1, 0);
        for l in 2..5 {
            let u = unitary(&mut r, l);
            let err = (u.adjoint() * &u - CMatrix::identity(l, l)).norm();
            assert!(err < 1e-12);
        }
        let (u, z) = chart_pair(&mut r, 2, 2, 0.1);
        let c = u.view((2, 0), (2, 2));
        let d = u.view((2, 2), (2, 2));
        assert!((c * &z + d).determinant().norm() >= 0.1);
    }

    #[test]
    fn ball_radius() {
        let mut r = rng(3, 0);
        for _ in 0..50 {
            assert!(frobenius_ball(&mut r, 3, 2, 0.4).norm() <= 0.4 + 1e-15);
        }
    }
}
