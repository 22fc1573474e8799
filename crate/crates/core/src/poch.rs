//! Gindikin Gamma function and the generalized Pochhammer symbol
//! `poch(c)_s = Γ_M(c+s) / Γ_M(c)` with `Γ_M(c) = ∏_{j=1}^r Γ(c − (a/2)(j−1))`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::RatPoly;

/// `Σ_j log Γ(c − (a/2)(j−1))`. Every argument must be positive.
pub fn gindikin_log_gamma(c: f64, r: u32, a: u32) -> Result<f64> {
    let mut total = 0.0;
    for j in 0..r {
        let arg = c - 0.5 * f64::from(a) * f64::from(j);
        if arg.is_nan() || arg <= 0.0 {
            return Err(Error::GammaPole(arg));
        }
        total += libm::lgamma(arg);
    }
    Ok(total)
}

/// Gamma arguments of the numerator and denominator of `poch(x + c0)_s`,
/// stored as offsets from the indeterminate `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaArgMultiset {
    pub numerator: Vec<BigRational>,
    pub denominator: Vec<BigRational>,
}

impl GammaArgMultiset {
    pub fn new(r: u32, a: u32, s: &BigRational, c0: &BigRational) -> Self {
        let half_a = BigRational::new(BigInt::from(a), BigInt::from(2));
        let den: Vec<BigRational> = (0..r)
            .map(|j| c0 - &half_a * BigRational::from_integer(BigInt::from(j)))
            .collect();
        let num = den.iter().map(|d| d + s).collect();
        GammaArgMultiset {
            numerator: num,
            denominator: den,
        }
    }

    /// Pairs each numerator offset with a denominator offset lying a
    /// non-negative integer below it, returning `(denominator offset, gap)`.
    ///
    /// Offsets are grouped by their class modulo 1 and paired in ascending
    /// order inside each class.
    pub fn pair(&self) -> Result<Vec<(BigRational, u64)>> {
        let mut classes: BTreeMap<BigRational, (Vec<BigRational>, Vec<BigRational>)> =
            BTreeMap::new();
        for x in &self.numerator {
            classes.entry(x - x.floor()).or_default().0.push(x.clone());
        }
        for x in &self.denominator {
            classes.entry(x - x.floor()).or_default().1.push(x.clone());
        }
        let mut pairs = Vec::with_capacity(self.numerator.len());
        for (class, (mut num, mut den)) in classes {
            if num.len() != den.len() {
                return Err(Error::NonPolynomial(format!(
                    "offset class {class}: {} numerator vs {} denominator Gamma factors",
                    num.len(),
                    den.len()
                )));
            }
            num.sort();
            den.sort();
            for (hi, lo) in num.into_iter().zip(den) {
                let gap = &hi - &lo;
                if gap.is_negative() || !gap.is_integer() {
                    return Err(Error::NonPolynomial(format!(
                        "Gamma({hi}+x)/Gamma({lo}+x) is not a rising factorial"
                    )));
                }
                let gap = gap
                    .to_integer()
                    .to_u64()
                    .ok_or_else(|| Error::NonPolynomial(format!("gap {gap} too large")))?;
                pairs.push((lo, gap));
            }
        }
        Ok(pairs)
    }
}

/// `ν ↦ poch(ν + c0)_s` as an exact polynomial.
///
/// Each paired ratio `Γ(x+m)/Γ(x)` expands to the rising factorial
/// `x(x+1)…(x+m−1)`.
pub fn poch_polynomial(r: u32, a: u32, s: &BigRational, c0: &BigRational) -> Result<RatPoly> {
    if s.is_negative() {
        return Err(Error::NonPolynomial(format!("negative order s = {s}")));
    }
    let pairs = GammaArgMultiset::new(r, a, s, c0).pair()?;
    Ok(pairs.iter().fold(RatPoly::one(), |acc, (lo, m)| {
        &acc * &RatPoly::rising_factorial(lo, *m)
    }))
}

/// Exact `poch(c)_s`, through the polynomial route.
pub fn poch_value(c: &BigRational, s: &BigRational, r: u32, a: u32) -> Result<BigRational> {
    Ok(poch_polynomial(r, a, s, c)?.eval(&BigRational::zero()))
}

/// `log poch(c)_s` from log-Gamma sums; the float fallback for non-polynomial cases.
pub fn log_poch_numeric(c: f64, s: f64, r: u32, a: u32) -> Result<f64> {
    Ok(gindikin_log_gamma(c + s, r, a)? - gindikin_log_gamma(c, r, a)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::poly::rational_to_f64;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn lin(n: i64, d: i64) -> RatPoly {
        RatPoly::linear(q(n, d))
    }

    #[test]
    fn log_gamma_examples() {
        let ln2 = core::f64::consts::LN_2;
        assert!((gindikin_log_gamma(3.0, 1, 7).unwrap() - ln2).abs() < 1e-14);
        assert!((gindikin_log_gamma(3.0, 2, 2).unwrap() - ln2).abs() < 1e-14);
        let want = libm::log(libm::sqrt(core::f64::consts::PI) / 2.0);
        assert!((gindikin_log_gamma(2.0, 2, 1).unwrap() - want).abs() < 1e-14);
    }

    #[test]
    fn log_gamma_pole() {
        assert!(matches!(
            gindikin_log_gamma(1.0, 2, 2),
            Err(Error::GammaPole(_))
        ));
        assert!(matches!(
            gindikin_log_gamma(-0.5, 1, 2),
            Err(Error::GammaPole(_))
        ));
    }

    #[test]
    fn polynomial_examples() {
        assert_eq!(
            poch_polynomial(1, 2, &q(2, 1), &q(1, 1)).unwrap(),
            RatPoly::from_ints(&[2, 3, 1])
        );
        let want = &(&(&lin(1, 1) * &lin(2, 1)) * &lin(2, 1)) * &lin(3, 1);
        assert_eq!(poch_polynomial(2, 2, &q(2, 1), &q(2, 1)).unwrap(), want);
        let got = poch_polynomial(2, 1, &q(3, 2), &q(3, 2)).unwrap();
        let want = &(&lin(3, 2) * &lin(1, 1)) * &lin(2, 1);
        assert_eq!(got, want);
        for nu in 0..3 {
            let x = f64::from(nu);
            let lhs = libm::log(got.eval_f64(x));
            let rhs = log_poch_numeric(x + 1.5, 1.5, 2, 1).unwrap();
            assert!((lhs - rhs).abs() < 1e-12);
        }
    }

    #[test]
    fn half_order_is_not_polynomial() {
        assert!(matches!(
            poch_polynomial(1, 2, &q(1, 2), &q(1, 1)),
            Err(Error::NonPolynomial(_))
        ));
        assert!(matches!(
            poch_polynomial(1, 2, &q(-1, 1), &q(1, 1)),
            Err(Error::NonPolynomial(_))
        ));
    }

    #[test]
    fn value_examples() {
        assert_eq!(poch_value(&q(1, 1), &q(2, 1), 1, 2).unwrap(), q(2, 1));
        assert_eq!(poch_value(&q(2, 1), &q(2, 1), 2, 2).unwrap(), q(12, 1));
        assert_eq!(poch_value(&q(3, 2), &q(3, 2), 2, 1).unwrap(), q(3, 1));
    }

    #[test]
    fn catalog_polynomials_are_monic_of_degree_n() {
        for label in catalog(10, None) {
            let sp = label.params().unwrap();
            let p = poch_polynomial(sp.rank(), sp.a(), &sp.s(), &sp.c0()).unwrap();
            assert!(p.is_monic(), "{label}");
            assert_eq!(p.degree(), Some(sp.dim() as usize), "{label}");
        }
    }

    #[test]
    fn shift_identity() {
        for (r, a) in [(1u32, 2u32), (2, 1), (2, 2), (3, 4), (3, 1)] {
            for twice_s in 0..6i64 {
                let s = q(twice_s, 2);
                let c = q(7, 2);
                let (Ok(lo), Ok(hi)) = (
                    poch_value(&c, &s, r, a),
                    poch_value(&c, &(&s + q(1, 1)), r, a),
                ) else {
                    continue;
                };
                let step = (0..r).fold(q(1, 1), |acc, j| acc * (&c + &s - q(i64::from(a * j), 2)));
                assert_eq!(hi / lo, step, "r={r} a={a} s={s}");
            }
        }
    }

    #[test]
    fn value_matches_gamma_ratio() {
        let v = poch_value(&q(5, 2), &q(3, 1), 3, 1).unwrap();
        let num = log_poch_numeric(2.5, 3.0, 3, 1).unwrap();
        assert!((libm::log(rational_to_f64(&v)) - num).abs() < 1e-12);
    }
}
