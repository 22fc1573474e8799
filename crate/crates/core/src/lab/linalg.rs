use alloc::format;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Dense complex matrix; points of the chart are `k×m` matrices.
pub type CMatrix = DMatrix<Complex64>;

// Below this magnitude a determinant counts as zero.
const SINGULAR_EPS: f64 = 1e-12;

fn same_shape(x: &CMatrix, y: &CMatrix) -> Result<()> {
    if x.shape() != y.shape() {
        return Err(Error::Shape(format!("{:?} vs {:?}", x.shape(), y.shape())));
    }
    if x.nrows() == 0 || x.ncols() == 0 {
        return Err(Error::Shape("empty matrix".into()));
    }
    Ok(())
}

/// `h(x, −y) = det(I_k + x y*)`.
pub fn h_pair(x: &CMatrix, y: &CMatrix) -> Result<Complex64> {
    same_shape(x, y)?;
    let k = x.nrows();
    Ok((CMatrix::identity(k, k) + x * y.adjoint()).determinant())
}

/// Determinant of the Bergman operator `X ↦ (I − z w*) X (I − w* z)` on `k×m`
/// matrices, next to `det(I − z w*)^{k+m}`.
pub fn bergman_op_det(z: &CMatrix, w: &CMatrix) -> Result<(Complex64, Complex64)> {
    same_shape(z, w)?;
    let (k, m) = z.shape();
    let left = CMatrix::identity(k, k) - z * w.adjoint();
    let right = CMatrix::identity(m, m) - w.adjoint() * z;
    let base = left.determinant();
    if base.norm() < SINGULAR_EPS {
        return Err(Error::Singular("I - z w* is singular".into()));
    }
    // vec(A X B) = (Bᵀ ⊗ A) vec(X)
    let op = right.transpose().kronecker(&left);
    Ok((op.determinant(), base.powi((k + m) as i32)))
}

/// `(A z + B)(C z + D)^{-1}` for `u = [[A, B], [C, D]]` with `A` of size `k×k`.
pub fn mobius_action(u: &CMatrix, z: &CMatrix) -> Result<CMatrix> {
    let (k, m) = z.shape();
    let l = k + m;
    if u.shape() != (l, l) {
        return Err(Error::Shape(format!(
            "group element {:?} for a {k}x{m} point",
            u.shape()
        )));
    }
    let a = u.view((0, 0), (k, k));
    let b = u.view((0, k), (k, m));
    let c = u.view((k, 0), (m, k));
    let d = u.view((k, k), (m, m));
    let denom = c * z + d;
    if denom.determinant().norm() < SINGULAR_EPS {
        return Err(Error::Singular(
            "C z + D is singular: point leaves the chart".into(),
        ));
    }
    let inv = denom
        .try_inverse()
        .ok_or_else(|| Error::Singular("C z + D is not invertible".into()))?;
    Ok((a * z + b) * inv)
}
