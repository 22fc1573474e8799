//! Exact Szegő and Bergman coefficient polynomials of the disc bundles
//! `D_μ` and their finite Laurent expansions in the defining function.
//!
//! The Szegő kernel is `Σ_ν P_μ(ν) t^ν` with `t = αβ̄·h(x,−y)^μ` and
//! `P_μ(ν) = poch(μν + p − n/r)_{n/r} / poch(p − n/r)_{n/r}`.
//! Writing `P_μ` in the basis `C(ν+k, k)`, whose generating functions are
//! `(1−t)^{−k−1} = (−ρ)^{−k−1}` with `ρ = t − 1`, turns the series into a
//! finite sum of negative powers of `ρ`: no logarithmic term appears.
//!
//! The Bergman kernel is handled the same way with
//! `Q_μ(ν) = (ν+1)·poch(μ(ν+1) + p − n/r)_{n/r} / poch(p − n/r)_{n/r}`
//! and an overall factor `1/π`; the series then represents `K*/h(x,−y)^μ`.
//! The fiber of `D_μ` over `z` is the disc of radius `h(z,−z)^{−μ/2}`, which
//! is where the weight `h^{−μ(ν+1)}` (and hence the argument `μ(ν+1)`) comes from.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::catalog::SpaceParams;
use crate::error::{Error, Result};
use crate::poch::{poch_polynomial, poch_value};
use crate::poly::{rational_to_f64, RatPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KernelKind {
    Szego,
    Bergman,
}

impl fmt::Display for KernelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            KernelKind::Szego => "szego",
            KernelKind::Bergman => "bergman",
        })
    }
}

impl FromStr for KernelKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_lowercase().as_str() {
            "szego" | "szegő" | "szegoe" => Ok(KernelKind::Szego),
            "bergman" => Ok(KernelKind::Bergman),
            other => Err(Error::InvalidParams(format!(
                "unknown kernel kind {other:?}"
            ))),
        }
    }
}

/// Kernel kind together with the bundle power `μ ≥ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct KernelSpec {
    kind: KernelKind,
    mu: u32,
}

impl KernelSpec {
    pub fn new(kind: KernelKind, mu: u32) -> Result<Self> {
        if mu == 0 {
            return Err(Error::InvalidParams("bundle power mu must be >= 1".into()));
        }
        Ok(KernelSpec { kind, mu })
    }

    pub fn szego(mu: u32) -> Result<Self> {
        Self::new(KernelKind::Szego, mu)
    }

    pub fn bergman(mu: u32) -> Result<Self> {
        Self::new(KernelKind::Bergman, mu)
    }

    pub fn kind(&self) -> KernelKind {
        self.kind
    }

    pub fn mu(&self) -> u32 {
        self.mu
    }

    pub fn prefactor(&self) -> Prefactor {
        match self.kind {
            KernelKind::Szego => Prefactor::One,
            KernelKind::Bergman => Prefactor::OneOverPi,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Prefactor {
    One,
    OneOverPi,
}

impl Prefactor {
    pub fn value(&self) -> f64 {
        match self {
            Prefactor::One => 1.0,
            Prefactor::OneOverPi => core::f64::consts::FRAC_1_PI,
        }
    }
}

impl fmt::Display for Prefactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Prefactor::One => "1",
            Prefactor::OneOverPi => "1/pi",
        })
    }
}

/// `prefactor · Σ_{j=0}^{m} c_j ρ^{j−m−1}`, coefficients in descending singularity order.
///
/// Zero coefficients are kept: `coeffs.len()` is always the depth `m + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentProfile {
    coeffs: Vec<BigRational>,
    prefactor: Prefactor,
}

impl LaurentProfile {
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn prefactor(&self) -> Prefactor {
        self.prefactor
    }

    /// Order of the leading pole.
    pub fn depth(&self) -> usize {
        self.coeffs.len()
    }

    /// Power of `ρ` multiplying `c_j`.
    pub fn exponent(&self, j: usize) -> i64 {
        j as i64 - self.coeffs.len() as i64
    }

    /// Exact value of the sum, prefactor excluded. `rho` must be non-zero.
    pub fn eval(&self, rho: &BigRational) -> BigRational {
        let inv = rho.recip();
        // Σ c_j ρ^{j−m−1} = ρ^{−1} Σ c_j (ρ^{−1})^{m−j}
        let mut acc = BigRational::zero();
        for c in &self.coeffs {
            acc = acc * &inv + c;
        }
        acc * inv
    }

    /// Floating value of the sum, prefactor excluded.
    pub fn eval_complex(&self, rho: Complex64) -> Complex64 {
        let inv = rho.inv();
        let mut acc = Complex64::new(0.0, 0.0);
        for c in &self.coeffs {
            acc = acc * inv + rational_to_f64(c);
        }
        acc * inv
    }

    /// `-2 rho^-5 - rho^-4` style rendering with the prefactor in front when it is not 1.
    pub fn expression(&self) -> String {
        let mut out = String::new();
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            if !mag.is_one() {
                out.push_str(&format!("{mag} "));
            }
            out.push_str(&format!("rho^{}", self.exponent(j)));
        }
        if out.is_empty() {
            out.push('0');
        }
        match self.prefactor {
            Prefactor::One => out,
            Prefactor::OneOverPi => format!("(1/pi) * ({out})"),
        }
    }
}

fn int(v: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(v.into())
}

/// `P_μ(ν) = poch(μν + p − n/r)_{n/r} / poch(p − n/r)_{n/r}`.
pub fn szego_coeff_poly(space: &SpaceParams, mu: u32) -> Result<RatPoly> {
    let base = poch_polynomial(space.rank(), space.a(), &space.s(), &space.c0())?;
    let norm = poch_value(&space.c0(), &space.s(), space.rank(), space.a())?;
    Ok(base.compose_scale(&int(mu)).scale(&norm.recip()))
}

/// `Q_μ(ν) = (ν+1)·poch(μ(ν+1) + p − n/r)_{n/r} / poch(p − n/r)_{n/r}` (prefactor `1/π` implied).
pub fn bergman_coeff_poly(space: &SpaceParams, mu: u32) -> Result<RatPoly> {
    let base = poch_polynomial(space.rank(), space.a(), &space.s(), &space.c0())?;
    let norm = poch_value(&space.c0(), &space.s(), space.rank(), space.a())?;
    let mu = int(mu);
    let shifted = base.compose_shift(&mu).compose_scale(&mu);
    Ok((&RatPoly::linear(BigRational::one()) * &shifted).scale(&norm.recip()))
}

pub fn coeff_poly(space: &SpaceParams, spec: KernelSpec) -> Result<RatPoly> {
    match spec.kind {
        KernelKind::Szego => szego_coeff_poly(space, spec.mu),
        KernelKind::Bergman => bergman_coeff_poly(space, spec.mu),
    }
}

/// `C(ν+k, k) = (ν+1)(ν+2)…(ν+k)/k!` as a polynomial in `ν`.
pub fn binomial_basis_poly(k: usize) -> RatPoly {
    let mut fact = BigRational::one();
    for i in 1..=k {
        fact *= int(i as u64);
    }
    RatPoly::rising_factorial(&BigRational::one(), k as u64).scale(&fact.recip())
}

/// Coefficients `d_k` with `P(ν) = Σ_k d_k C(ν+k, k)`.
///
/// The basis is triangular in degree, so the coefficients come out by
/// peeling off the top degree one step at a time.
pub fn to_binomial_basis(poly: &RatPoly) -> Vec<BigRational> {
    let Some(deg) = poly.degree() else {
        return Vec::new();
    };
    let mut rest = poly.clone();
    let mut d = vec![BigRational::zero(); deg + 1];
    for k in (0..=deg).rev() {
        let basis = binomial_basis_poly(k);
        let dk = rest.coeff(k) / basis.coeff(k);
        rest = &rest - &basis.scale(&dk);
        d[k] = dk;
    }
    debug_assert!(rest.is_zero());
    d
}

/// `Σ_k d_k C(ν+k, k)`.
pub fn from_binomial_basis(d: &[BigRational]) -> RatPoly {
    d.iter().enumerate().fold(RatPoly::zero(), |acc, (k, dk)| {
        &acc + &binomial_basis_poly(k).scale(dk)
    })
}

/// Reindexes binomial-basis coefficients into the Laurent profile:
/// `c_j = (−1)^{deg−j+1} d_{deg−j}`.
pub fn laurent_profile(d: &[BigRational], prefactor: Prefactor) -> LaurentProfile {
    let coeffs = d
        .iter()
        .rev()
        .enumerate()
        .map(|(j, dk)| {
            let k = d.len() - 1 - j;
            if k.is_multiple_of(2) {
                -dk
            } else {
                dk.clone()
            }
        })
        .collect();
    LaurentProfile { coeffs, prefactor }
}

/// Closed form of the top coefficient, prefactor excluded:
/// `(−1)^{n+1} n! μ^n / poch(p−n/r)_{n/r}` (Szegő) and
/// `(−1)^{n+2} (n+1)! μ^n / poch(p−n/r)_{n/r}` (Bergman).
pub fn expected_c0(space: &SpaceParams, spec: KernelSpec) -> Result<BigRational> {
    let n = space.dim();
    let top = match spec.kind {
        KernelKind::Szego => n,
        KernelKind::Bergman => n + 1,
    };
    let mut v = (1..=top).fold(BigRational::one(), |acc, i| acc * int(i));
    v *= int(BigInt::from(spec.mu).pow(n));
    v /= poch_value(&space.c0(), &space.s(), space.rank(), space.a())?;
    if (top + 1) % 2 == 1 {
        v = -v;
    }
    Ok(v)
}

pub fn check_c0(profile: &LaurentProfile, space: &SpaceParams, spec: KernelSpec) -> bool {
    if profile.prefactor != spec.prefactor() {
        return false;
    }
    match (profile.coeffs.first(), expected_c0(space, spec)) {
        (Some(c0), Ok(want)) => *c0 == want,
        _ => false,
    }
}

/// Successive forward differences; `order = 0` returns the input.
pub fn forward_difference(samples: &[BigRational], order: usize) -> Vec<BigRational> {
    let mut cur = samples.to_vec();
    for _ in 0..order {
        if cur.is_empty() {
            break;
        }
        cur = cur.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    cur
}

/// True when the `(degree+1)`-th forward difference of the samples vanishes on
/// every window, i.e. the coefficient sequence is a polynomial of that degree
/// and its generating function has no logarithmic term at `ρ = 0`.
pub fn log_term_detector(samples: &[BigRational], degree: usize) -> Result<bool> {
    let needed = degree + 2;
    if samples.len() < needed {
        return Err(Error::TooFewSamples {
            needed,
            got: samples.len(),
        });
    }
    Ok(forward_difference(samples, degree + 1)
        .iter()
        .all(Zero::is_zero))
}

/// Everything the pipeline produces for one `(space, kernel)` pair.
#[derive(Debug, Clone)]
pub struct Expansion {
    pub space: SpaceParams,
    pub spec: KernelSpec,
    pub poly: RatPoly,
    pub binomial: Vec<BigRational>,
    pub profile: LaurentProfile,
    pub c0_ok: bool,
    /// `true` when the sampled coefficients are polynomial, i.e. no log term.
    pub no_log_term: bool,
}

impl Expansion {
    /// Degree the coefficient polynomial must have: `n` (Szegő) or `n+1` (Bergman).
    pub fn expected_degree(space: &SpaceParams, spec: KernelSpec) -> usize {
        match spec.kind {
            KernelKind::Szego => space.dim() as usize,
            KernelKind::Bergman => space.dim() as usize + 1,
        }
    }

    /// Exact coefficients `P(0), …, P(count−1)`.
    pub fn samples(&self, count: usize) -> Vec<BigRational> {
        (0..count)
            .map(|nu| self.poly.eval(&int(nu as u64)))
            .collect()
    }
}

/// Runs the full exact pipeline. Log-term detection uses `ν = 0..deg+5`.
pub fn expand(space: &SpaceParams, spec: KernelSpec) -> Result<Expansion> {
    let poly = coeff_poly(space, spec)?;
    let binomial = to_binomial_basis(&poly);
    let profile = laurent_profile(&binomial, spec.prefactor());
    let c0_ok = check_c0(&profile, space, spec);
    let degree = Expansion::expected_degree(space, spec);
    let samples: Vec<BigRational> = (0..degree + 6)
        .map(|nu| poly.eval(&int(nu as u64)))
        .collect();
    let no_log_term = log_term_detector(&samples, degree)?;
    Ok(Expansion {
        space: *space,
        spec,
        poly,
        binomial,
        profile,
        c0_ok,
        no_log_term,
    })
}

/// Exact partial sum `Σ_{ν=0}^{terms−1} P(ν) t^ν`.
pub fn partial_sum(poly: &RatPoly, t: &BigRational, terms: usize) -> BigRational {
    let mut pow = BigRational::one();
    let mut acc = BigRational::zero();
    for nu in 0..terms {
        acc += poly.eval(&int(nu as u64)) * &pow;
        pow *= t;
    }
    acc
}

/// Bound on `Σ_{ν ≥ start} |P(ν)| |t|^ν` using `|P(ν)| ≤ A·(ν+1)^deg`, `A = Σ|coeffs|`.
///
/// Returns `None` when the ratio test does not yet bite at `start`.
pub fn tail_bound(poly: &RatPoly, t_abs: f64, start: usize) -> Option<f64> {
    let deg = poly.degree().unwrap_or(0) as i32;
    let a: f64 = poly
        .coeffs()
        .iter()
        .map(|c| rational_to_f64(&c.abs()))
        .sum();
    let n = start as f64;
    let ratio = t_abs * libm::pow((n + 2.0) / (n + 1.0), f64::from(deg));
    if ratio >= 1.0 {
        return None;
    }
    let first = a * libm::exp(f64::from(deg) * libm::log(n + 1.0) + n * libm::log(t_abs));
    Some(first / (1.0 - ratio))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{catalog, space_from_params, SpaceLabel};

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn qs(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| q(x, 1)).collect()
    }

    fn cp1() -> SpaceParams {
        space_from_params(1, 2, 0).unwrap()
    }

    fn gr24() -> SpaceParams {
        SpaceLabel::I(2, 2).params().unwrap()
    }

    fn lin(c: i64) -> RatPoly {
        RatPoly::linear(q(c, 1))
    }

    #[test]
    fn szego_examples() {
        assert_eq!(
            szego_coeff_poly(&cp1(), 1).unwrap(),
            RatPoly::from_ints(&[1, 1])
        );
        assert_eq!(
            szego_coeff_poly(&cp1(), 2).unwrap(),
            RatPoly::from_ints(&[1, 2])
        );
        let want = (&(&(&lin(1) * &lin(2)) * &lin(2)) * &lin(3)).scale(&q(1, 12));
        assert_eq!(szego_coeff_poly(&gr24(), 1).unwrap(), want);
    }

    #[test]
    fn bergman_examples() {
        assert_eq!(bergman_coeff_poly(&cp1(), 1).unwrap(), &lin(1) * &lin(2));
        // μ = 2: (ν+1)(2ν+3), from the fiber radius h^{-μ/2}
        assert_eq!(
            bergman_coeff_poly(&cp1(), 2).unwrap(),
            &lin(1) * &RatPoly::from_ints(&[3, 2])
        );
        let want = (&(&(&(&lin(1) * &lin(2)) * &lin(3)) * &lin(3)) * &lin(4)).scale(&q(1, 12));
        assert_eq!(bergman_coeff_poly(&gr24(), 1).unwrap(), want);
    }

    #[test]
    fn binomial_basis_examples() {
        assert_eq!(to_binomial_basis(&RatPoly::from_ints(&[1, 1])), qs(&[0, 1]));
        assert_eq!(
            to_binomial_basis(&RatPoly::from_ints(&[1, 2])),
            qs(&[-1, 2])
        );
        let p = szego_coeff_poly(&gr24(), 1).unwrap();
        assert_eq!(to_binomial_basis(&p), qs(&[0, 0, 0, -1, 2]));
        assert!(to_binomial_basis(&RatPoly::zero()).is_empty());
    }

    #[test]
    fn profile_examples() {
        let p = laurent_profile(&qs(&[0, 1]), Prefactor::One);
        assert_eq!(p.coeffs(), qs(&[1, 0]).as_slice());
        let p = laurent_profile(&qs(&[-1, 2]), Prefactor::One);
        assert_eq!(p.coeffs(), qs(&[2, 1]).as_slice());
        let p = laurent_profile(&qs(&[0, 0, 0, -1, 2]), Prefactor::One);
        assert_eq!(p.coeffs(), qs(&[-2, -1, 0, 0, 0]).as_slice());
        assert_eq!(p.depth(), 5);
        assert_eq!(p.expression(), "-2 rho^-5 - rho^-4");
    }

    #[test]
    fn c0_examples() {
        for (space, mu, c0) in [(cp1(), 1, 1), (cp1(), 2, 2), (gr24(), 1, -2)] {
            let spec = KernelSpec::szego(mu).unwrap();
            let e = expand(&space, spec).unwrap();
            assert_eq!(e.profile.coeffs()[0], q(c0, 1));
            assert!(e.c0_ok);
            assert!(check_c0(&e.profile, &space, spec));
        }
        let spec = KernelSpec::bergman(1).unwrap();
        let e = expand(&cp1(), spec).unwrap();
        assert_eq!(e.profile.coeffs(), qs(&[-2, 0, 0]).as_slice());
        assert_eq!(e.profile.prefactor(), Prefactor::OneOverPi);
        assert!(e.c0_ok);
        // A profile with the wrong prefactor or value is rejected.
        let wrong = laurent_profile(&qs(&[0, 1]), Prefactor::One);
        assert!(!check_c0(&wrong, &cp1(), spec));
        assert!(!check_c0(&wrong, &gr24(), KernelSpec::szego(1).unwrap()));
    }

    #[test]
    fn detector_examples() {
        let lin_samples: Vec<_> = (0..5).map(|v| q(v + 1, 1)).collect();
        assert!(log_term_detector(&lin_samples, 1).unwrap());
        let exp_samples: Vec<_> = (0..5).map(|v| q(1 << v, 1)).collect();
        assert!(!log_term_detector(&exp_samples, 1).unwrap());
        let p = szego_coeff_poly(&gr24(), 1).unwrap();
        let s: Vec<_> = (0..7).map(|v| p.eval(&q(v, 1))).collect();
        assert!(log_term_detector(&s, 4).unwrap());
        assert!(!log_term_detector(&s, 3).unwrap());
        assert!(matches!(
            log_term_detector(&s[..5], 4),
            Err(Error::TooFewSamples { needed: 6, got: 5 })
        ));
    }

    #[test]
    fn mu_zero_rejected() {
        assert!(KernelSpec::szego(0).is_err());
    }

    #[test]
    fn degree_leading_and_normalization() {
        for label in catalog(8, None) {
            let sp = label.params().unwrap();
            let norm = poch_value(&sp.c0(), &sp.s(), sp.rank(), sp.a()).unwrap();
            for mu in 1..=3u32 {
                let lead = int(BigInt::from(mu).pow(sp.dim())) / &norm;
                let p = szego_coeff_poly(&sp, mu).unwrap();
                assert_eq!(p.degree(), Some(sp.dim() as usize));
                assert_eq!(p.leading(), Some(&lead));
                assert!(p.coeff(0).is_one(), "{label}");
                let b = bergman_coeff_poly(&sp, mu).unwrap();
                assert_eq!(b.degree(), Some(sp.dim() as usize + 1));
                assert_eq!(b.leading(), Some(&lead));
            }
        }
    }

    #[test]
    fn projective_space_dimension_identity() {
        for m in 1..=8u32 {
            let sp = SpaceLabel::I(1, m).params().unwrap();
            let p = szego_coeff_poly(&sp, 1).unwrap();
            assert_eq!(p, binomial_basis_poly(sp.dim() as usize));
        }
    }

    #[test]
    fn laurent_matches_partial_sums() {
        // Generating functions of the basis: Σ C(ν+k,k) t^ν = (1−t)^{−k−1}.
        let t = q(1, 3);
        for label in [SpaceLabel::I(1, 1), SpaceLabel::I(2, 2), SpaceLabel::III(3)] {
            let sp = label.params().unwrap();
            for spec in [
                KernelSpec::szego(2).unwrap(),
                KernelSpec::bergman(1).unwrap(),
            ] {
                let e = expand(&sp, spec).unwrap();
                let exact = e.profile.eval(&(&t - q(1, 1)));
                let approx = partial_sum(&e.poly, &t, 150);
                let gap = rational_to_f64(&(exact - approx).abs());
                let bound = tail_bound(&e.poly, 1.0 / 3.0, 150).unwrap();
                assert!(gap <= bound, "{label} {gap} {bound}");
            }
        }
    }

    #[test]
    fn series_example_values() {
        // I(2,2) at t = 1/3: −2ρ^{−5} − ρ^{−4} with ρ = −2/3.
        let e = expand(&gr24(), KernelSpec::szego(1).unwrap()).unwrap();
        assert_eq!(e.profile.eval(&q(-2, 3)), q(162, 16));
        // CP¹ at t = 1/2 gives 4.
        let e = expand(&cp1(), KernelSpec::szego(1).unwrap()).unwrap();
        assert_eq!(e.profile.eval(&q(-1, 2)), q(4, 1));
    }
}
