//! Dense univariate polynomials over exact rationals and integers.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Polynomial with exact rational coefficients, `coeffs[i]` multiplying `x^i`.
///
/// Trailing zeros are always trimmed, so the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// The monic linear polynomial `x + shift`.
    pub fn linear(shift: BigRational) -> Self {
        Self::new(vec![shift, BigRational::one()])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigRational> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// Horner evaluation at an exact rational.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let fl = self.to_f64_coeffs();
        fl.iter().rev().fold(0.0, |acc, c| acc * x + c)
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(rational_to_f64).collect()
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// `P(k·x)`.
    pub fn compose_scale(&self, k: &BigRational) -> Self {
        let mut pow = BigRational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c * &pow);
            pow *= k;
        }
        Self::new(out)
    }

    /// `P(x + shift)`, by Horner's scheme in the shifted variable.
    pub fn compose_shift(&self, shift: &BigRational) -> Self {
        let lin = RatPoly::linear(shift.clone());
        self.coeffs.iter().rev().fold(RatPoly::zero(), |acc, c| {
            &(&acc * &lin) + &RatPoly::constant(c.clone())
        })
    }

    /// Rising factorial `(x + shift)(x + shift + 1)…(x + shift + m − 1)`.
    pub fn rising_factorial(shift: &BigRational, m: u64) -> Self {
        let mut out = RatPoly::one();
        let mut s = shift.clone();
        for _ in 0..m {
            out = &out * &RatPoly::linear(s.clone());
            s += BigRational::one();
        }
        out
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPoly({self})")
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, &self.coeffs, "v")
    }
}

fn write_poly<T: fmt::Display + Zero + Signed + Clone>(
    f: &mut fmt::Formatter<'_>,
    coeffs: &[T],
    var: &str,
) -> fmt::Result {
    if coeffs.is_empty() {
        return f.write_str("0");
    }
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if first {
            if c.is_negative() {
                f.write_str("-")?;
            }
        } else if c.is_negative() {
            f.write_str(" - ")?;
        } else {
            f.write_str(" + ")?;
        }
        first = false;
        let unit = mag.to_string() == "1";
        match i {
            0 => write!(f, "{mag}")?,
            1 if unit => write!(f, "{var}")?,
            1 => write!(f, "{mag}*{var}")?,
            _ if unit => write!(f, "{var}^{i}")?,
            _ => write!(f, "{mag}*{var}^{i}")?,
        }
    }
    Ok(())
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }
}

/// Lossy conversion for float-side consumers; exact for values representable in `f64`.
pub fn rational_to_f64(q: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    if let Some(v) = q.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    // Huge numerator or denominator: scale both down to the f64 range first.
    let nb = q.numer().bits() as i64;
    let db = q.denom().bits() as i64;
    let shift_n = (nb - 900).max(0) as usize;
    let shift_d = (db - 900).max(0) as usize;
    let n = (q.numer() >> shift_n).to_f64().unwrap_or(f64::NAN);
    let d = (q.denom() >> shift_d).to_f64().unwrap_or(f64::NAN);
    n / d * libm::exp2((shift_n as f64) - (shift_d as f64))
}

/// Polynomial with arbitrary-precision integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        Self::from_ints(&[1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Long division by a divisor with unit leading coefficient up to sign.
    ///
    /// Returns `(quotient, remainder)`; `None` when the divisor is zero or a
    /// quotient coefficient would not be integral.
    pub fn div_rem(&self, divisor: &IntPoly) -> Option<(IntPoly, IntPoly)> {
        let dd = divisor.degree()?;
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((IntPoly::default(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let top = rem[i + dd].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * d;
            }
            quot[i] = q;
        }
        Some((IntPoly::new(quot), IntPoly::new(rem)))
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, &self.coeffs, "q")
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return IntPoly::default();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}
