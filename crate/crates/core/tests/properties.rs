use hermkern_core::expansion::{from_binomial_basis, to_binomial_basis};
use hermkern_core::lab::{bergman_op_det, h_pair, CMatrix};
use hermkern_core::poch::log_poch_numeric;
use hermkern_core::poly::rational_to_f64;
use hermkern_core::topology::gaussian_binomial;
use hermkern_core::{catalog, poch_polynomial, BigRational, Complex64, RatPoly, SpaceLabel};
use num_bigint::BigInt;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = BigRational> {
    (-1000i64..1000, 1i64..50).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

fn rat_poly() -> impl Strategy<Value = RatPoly> {
    prop::collection::vec(rational(), 0..12).prop_map(RatPoly::new)
}

fn cmatrix(k: usize, m: usize, scale: f64) -> impl Strategy<Value = CMatrix> {
    prop::collection::vec((-scale..scale, -scale..scale), k * m).prop_map(move |v| {
        CMatrix::from_iterator(k, m, v.into_iter().map(|(re, im)| Complex64::new(re, im)))
    })
}

fn shaped_pair(scale: f64) -> impl Strategy<Value = (CMatrix, CMatrix)> {
    (1usize..=3, 1usize..=3)
        .prop_flat_map(move |(k, m)| (cmatrix(k, m, scale), cmatrix(k, m, scale)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn binomial_basis_round_trip(p in rat_poly()) {
        let d = to_binomial_basis(&p);
        prop_assert_eq!(d.len(), p.degree().map_or(0, |x| x + 1));
        prop_assert_eq!(from_binomial_basis(&d), p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn poch_matches_log_gamma(idx in 0usize..1000, nu in 0u32..40, mu in 1u32..=3) {
        let spaces = catalog(8, None);
        let sp = spaces[idx % spaces.len()].params().unwrap();
        let poly = poch_polynomial(sp.rank(), sp.a(), &sp.s(), &sp.c0()).unwrap();
        let x = f64::from(mu * nu);
        let exact = rational_to_f64(&poly.eval(&BigRational::from_integer((mu * nu).into())));
        let numeric = log_poch_numeric(x + rational_to_f64(&sp.c0()), rational_to_f64(&sp.s()), sp.rank(), sp.a()).unwrap();
        prop_assert!((exact.ln() - numeric).abs() <= 1e-9 * numeric.abs().max(1.0), "{} {} {}", exact.ln(), numeric, sp.dim());
    }

    #[test]
    fn h_is_hermitian_and_positive((x, y) in shaped_pair(2.0)) {
        let a = h_pair(&x, &y).unwrap();
        let b = h_pair(&y, &x).unwrap();
        prop_assert!((a - b.conj()).norm() <= 1e-12 * a.norm().max(1.0));
        let hx = h_pair(&x, &x).unwrap();
        prop_assert!(hx.re >= 1.0 - 1e-12 && hx.im.abs() <= 1e-12 * hx.re);
    }

    #[test]
    fn det_b_is_power_of_h((z, w) in shaped_pair(0.25)) {
        let (lhs, rhs) = bergman_op_det(&z, &w).unwrap();
        prop_assert!((lhs - rhs).norm() <= 1e-9 * rhs.norm());
    }
}

#[test]
fn gaussian_binomial_identities() {
    for l in 0..=12u32 {
        for k in 0..=l {
            let g = gaussian_binomial(l, k).unwrap();
            let top = (k * (l - k)) as usize;
            assert_eq!(g.degree(), Some(top));
            assert_eq!(g, gaussian_binomial(l, l - k).unwrap());
            assert!(
                (0..=top).all(|j| g.coeff(j) == g.coeff(top - j)),
                "[{l},{k}] not palindromic"
            );
            let binom = (0..k).fold(BigInt::from(1), |acc, i| acc * (l - i) / (i + 1));
            assert_eq!(g.eval(&BigInt::from(1)), binom);
        }
    }
}

#[test]
fn catalog_labels_parse_back() {
    for label in catalog(12, None) {
        assert_eq!(
            label
                .to_string()
                .to_lowercase()
                .parse::<SpaceLabel>()
                .unwrap(),
            label
        );
    }
}
