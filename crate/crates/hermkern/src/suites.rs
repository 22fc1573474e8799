//! Numeric verification suites over the type I Grassmannians.

use std::f64::consts::PI;
use std::time::Instant;

use hermkern_core::expansion::{bergman_coeff_poly, szego_coeff_poly};
use hermkern_core::lab::{
    bergman_norm_quadrature, bergman_op_det, hardy_norm_quadrature, monge_ampere_expected,
    monge_ampere_numeric, transformation_check, BundlePoint, Comparison, KernelSeries,
};
use hermkern_core::poly::rational_to_f64;
use hermkern_core::{expand, BigRational, Complex64, KernelSpec, SpaceLabel};
use rand::Rng;

use crate::report::CheckRecord;
use crate::sample::{self, stream};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Oracle,
    MongeAmpere,
    Quadrature,
    #[value(name = "detB", alias = "detb")]
    DetB,
    Transform,
    All,
}

impl Suite {
    pub const EACH: [Suite; 5] = [
        Suite::Oracle,
        Suite::MongeAmpere,
        Suite::Quadrature,
        Suite::DetB,
        Suite::Transform,
    ];
}

pub const ORACLE_TOL: f64 = 1e-9;
pub const FD_TOL: f64 = 1e-5;
pub const QUAD_RANK1_TOL: f64 = 1e-8;
pub const QUAD_RANK2_TOL: f64 = 1e-5;
pub const DET_B_TOL: f64 = 1e-9;

const ORACLE_POINTS: usize = 25;
const ORACLE_T_MAX: f64 = 0.7;
const SERIES_TOL: f64 = 1e-13;
const FD_STEP: f64 = 1e-3;
const MA_POINTS: usize = 10;
const TRANSFORM_POINTS: usize = 10;
const DET_B_PAIRS: usize = 50;
const DET_B_RADIUS: f64 = 0.4;
const MIN_DENOM: f64 = 0.1;
const GRID_RANK1: usize = 200;
const GRID_RANK2: usize = 120;

/// Seed, optional tolerance override and whether to record wall time.
#[derive(Debug, Clone, Copy)]
pub struct Ctx {
    pub seed: u64,
    pub tol: Option<f64>,
    pub timings: bool,
}

impl Ctx {
    pub fn new(seed: u64) -> Self {
        Ctx {
            seed,
            tol: None,
            timings: false,
        }
    }

    fn tol(&self, default: f64) -> f64 {
        self.tol.unwrap_or(default)
    }

    fn timed(&self, f: impl FnOnce() -> CheckRecord) -> CheckRecord {
        let start = Instant::now();
        let mut rec = f();
        if self.timings {
            rec.wall_ms = Some(start.elapsed().as_secs_f64() * 1e3);
        }
        rec
    }
}

fn compare(name: String, cmp: Comparison, tol: f64) -> CheckRecord {
    CheckRecord::numeric(name, cmp.rel_err(), tol)
        .value("actual", cmp.actual)
        .value("expected", cmp.expected)
}

fn error_record(name: String, err: impl std::fmt::Display) -> CheckRecord {
    CheckRecord::new(name, false).value("error", err)
}

fn shape(label: SpaceLabel) -> (usize, usize) {
    label.type_i_shape().expect("type I label")
}

pub fn run(suite: Suite, ctx: &Ctx) -> Vec<CheckRecord> {
    match suite {
        Suite::Oracle => oracle(ctx),
        Suite::MongeAmpere => monge_ampere(ctx),
        Suite::Quadrature => quadrature(ctx),
        Suite::DetB => det_b(ctx),
        Suite::Transform => transform(ctx),
        Suite::All => Suite::EACH.iter().flat_map(|s| run(*s, ctx)).collect(),
    }
}

/// Szegő series summed at `t` against the Laurent profile at `ρ = t − 1`.
pub fn oracle(ctx: &Ctx) -> Vec<CheckRecord> {
    let tol = ctx.tol(ORACLE_TOL);
    let mut rng = sample::rng(ctx.seed, stream::ORACLE);
    let mut out = Vec::new();
    for label in [
        SpaceLabel::I(1, 1),
        SpaceLabel::I(1, 2),
        SpaceLabel::I(2, 2),
    ] {
        let (k, m) = shape(label);
        let space = label.params().expect("catalog label");
        for mu in [1u32, 2] {
            let exp = expand(&space, KernelSpec::szego(mu).expect("mu >= 1"))
                .expect("type I is polynomial");
            let series = KernelSeries::new(&exp.poly, mu);
            for i in 0..ORACLE_POINTS {
                let name = format!("oracle/{label}/mu={mu}/{i:02}");
                let pair = sample::point_pair(&mut rng, k, m, mu, ORACLE_T_MAX);
                out.push(ctx.timed(|| {
                    let t = pair.t(mu);
                    let laurent = exp.profile.eval_complex(t - 1.0);
                    match series.sum(t, SERIES_TOL) {
                        Ok(s) => {
                            let rel = (s - laurent).norm() / laurent.norm();
                            CheckRecord::numeric(name, rel, tol)
                                .value("t", t)
                                .value("series", s)
                                .value("laurent", laurent)
                        }
                        Err(e) => error_record(name, e),
                    }
                }));
            }
        }
    }
    out
}

fn distinct_mus(p: u32) -> Vec<u32> {
    let mut mus = vec![1, 2, p];
    mus.sort_unstable();
    mus.dedup();
    mus
}

/// `J[ρ] = μⁿ h(z,−z)^{μ−p}` on the circle bundle, plus one interior point per
/// `(space, μ)` against `μⁿ |λ|^{2n} h^{μ(n+1)−p}`.
pub fn monge_ampere(ctx: &Ctx) -> Vec<CheckRecord> {
    let tol = ctx.tol(FD_TOL);
    let mut rng = sample::rng(ctx.seed, stream::MONGE_AMPERE);
    let mut out = Vec::new();
    for label in [SpaceLabel::CP1, SpaceLabel::CP2, SpaceLabel::GR24] {
        let (k, m) = shape(label);
        let space = label.params().expect("catalog label");
        let (n, p) = (space.dim(), space.genus());
        for mu in distinct_mus(p) {
            for i in 0..MA_POINTS {
                let z = sample::box_matrix(&mut rng, k, m, 0.8);
                let theta = std::f64::consts::TAU * rng.random::<f64>();
                let name = format!("monge-ampere/{label}/mu={mu}/{i:02}");
                out.push(ctx.timed(|| {
                    let point = match BundlePoint::on_boundary(z, theta, mu) {
                        Ok(pt) => pt,
                        Err(e) => return error_record(name, e),
                    };
                    let expected =
                        f64::from(mu).powi(n as i32) * point.h().powf(f64::from(mu) - f64::from(p));
                    match monge_ampere_numeric(&point, FD_STEP) {
                        Ok(j) => compare(name, Comparison::new(j, expected), tol),
                        Err(e) => error_record(name, e),
                    }
                }));
            }
            let z = sample::box_matrix(&mut rng, k, m, 0.8);
            let shrink = 0.2 + 0.6 * rng.random::<f64>();
            let theta = std::f64::consts::TAU * rng.random::<f64>();
            let name = format!("monge-ampere/{label}/mu={mu}/interior");
            out.push(ctx.timed(|| {
                let point = match BundlePoint::on_boundary(z, theta, mu) {
                    Ok(pt) => BundlePoint::new(pt.z, pt.lambda * shrink, mu),
                    Err(e) => Err(e),
                };
                match point.and_then(|pt| {
                    Ok((
                        monge_ampere_numeric(&pt, FD_STEP)?,
                        monge_ampere_expected(&pt),
                    ))
                }) {
                    Ok((j, want)) => compare(name, Comparison::new(j, want), tol),
                    Err(e) => error_record(name, e),
                }
            }));
        }
    }
    out
}

/// Polar-coordinate norm ratios against the Szegő coefficients, and the
/// Bergman slice norm over `CP¹`.
pub fn quadrature(ctx: &Ctx) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    let plan = [
        (SpaceLabel::CP1, 10u32, GRID_RANK1, ctx.tol(QUAD_RANK1_TOL)),
        (SpaceLabel::CP2, 10, GRID_RANK1, ctx.tol(QUAD_RANK1_TOL)),
        (SpaceLabel::GR24, 6, GRID_RANK2, ctx.tol(QUAD_RANK2_TOL)),
    ];
    for (label, max_nu, grid, tol) in plan {
        let (k, m) = shape(label);
        let poly = szego_coeff_poly(&label.params().expect("catalog label"), 1)
            .expect("type I is polynomial");
        for nu in 0..=max_nu {
            let name = format!("quadrature/{label}/nu={nu}");
            out.push(ctx.timed(|| {
                let c_nu = poly.eval(&BigRational::from_integer(nu.into()));
                match hardy_norm_quadrature(k as u32, m as u32, nu, grid) {
                    Ok(ratio) => compare(
                        name,
                        Comparison::new(ratio, 1.0 / rational_to_f64(&c_nu)),
                        tol,
                    )
                    .exact("c_nu", &c_nu)
                    .value("grid", grid),
                    Err(e) => error_record(name, e),
                }
            }));
        }
    }

    let tol = ctx.tol(QUAD_RANK1_TOL);
    let cp1 = SpaceLabel::CP1.params().expect("catalog label");
    for mu in [1u32, 2] {
        let q = bergman_coeff_poly(&cp1, mu).expect("type I is polynomial");
        for nu in 0..=10u32 {
            let name = format!("bergman-slice/{}/mu={mu}/nu={nu}", SpaceLabel::CP1);
            out.push(ctx.timed(|| {
                let q_nu = q.eval(&BigRational::from_integer(nu.into()));
                match bergman_norm_quadrature(nu, mu, GRID_RANK1) {
                    Ok(norm) => compare(
                        name,
                        Comparison::new(norm, PI / rational_to_f64(&q_nu)),
                        tol,
                    )
                    .exact("q_nu", &q_nu),
                    Err(e) => error_record(name, e),
                }
            }));
        }
    }

    // The printed variant (ν+1)·poch(ν+p−n/r) gives π/(ν+1)² on CP¹; the
    // quadrature must be far from it for every ν ≥ 1.
    let name = format!("bergman-slice/{}/printed-variant-rejected", SpaceLabel::CP1);
    out.push(ctx.timed(|| {
        let mut min_gap = f64::INFINITY;
        for nu in 1..=10u32 {
            match bergman_norm_quadrature(nu, 1, GRID_RANK1) {
                Ok(norm) => {
                    let variant = PI / f64::from((nu + 1) * (nu + 1));
                    min_gap = min_gap.min(Comparison::new(norm, variant).rel_err());
                }
                Err(e) => return error_record(name, e),
            }
        }
        CheckRecord::new(name, min_gap > 1e-3)
            .value("min_relative_gap", min_gap)
            .value("variant", "pi/((nu+1)^2)")
    }));
    out
}

/// Determinant of the Bergman operator against `det(I − z w*)^{k+m}`.
pub fn det_b(ctx: &Ctx) -> Vec<CheckRecord> {
    let tol = ctx.tol(DET_B_TOL);
    let mut rng = sample::rng(ctx.seed, stream::DET_B);
    (0..DET_B_PAIRS)
        .map(|i| {
            let k = rng.random_range(1..=3usize);
            let m = rng.random_range(1..=3usize);
            let z = sample::frobenius_ball(&mut rng, k, m, DET_B_RADIUS);
            let w = sample::frobenius_ball(&mut rng, k, m, DET_B_RADIUS);
            let name = format!("detB/{k}x{m}/{i:02}");
            ctx.timed(|| match bergman_op_det(&z, &w) {
                Ok((lhs, rhs)) => complex_record(name, lhs, rhs, tol),
                Err(e) => error_record(name, e),
            })
        })
        .collect()
}

fn complex_record(name: String, actual: Complex64, expected: Complex64, tol: f64) -> CheckRecord {
    let rel = (actual - expected).norm() / expected.norm().max(1e-300);
    CheckRecord::numeric(name, rel, tol)
        .value("actual", actual)
        .value("expected", expected)
}

/// `h(gz,−gz) = h(z,−z)|J_g(z)|^{2/p}` for random unitaries.
pub fn transform(ctx: &Ctx) -> Vec<CheckRecord> {
    let tol = ctx.tol(FD_TOL);
    let mut rng = sample::rng(ctx.seed, stream::TRANSFORM);
    let mut out = Vec::new();
    for label in [
        SpaceLabel::I(1, 1),
        SpaceLabel::I(1, 3),
        SpaceLabel::I(2, 2),
    ] {
        let (k, m) = shape(label);
        for i in 0..TRANSFORM_POINTS {
            let (u, z) = sample::chart_pair(&mut rng, k, m, MIN_DENOM);
            let name = format!("transform/{label}/{i:02}");
            out.push(ctx.timed(|| match transformation_check(&u, &z, FD_STEP) {
                Ok(cmp) => compare(name, cmp, tol),
                Err(e) => error_record(name, e),
            }));
        }
    }
    out
}
