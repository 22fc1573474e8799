//! One function per subcommand; each returns a finished [`Report`].

use hermkern_core::expansion::{from_binomial_basis, Expansion};
use hermkern_core::topology::{grassmannian_pairs, lens_cohomology, lens_obstruction};
use hermkern_core::{catalog, expand, Family, KernelKind, KernelSpec, SpaceLabel};

use crate::report::{CheckRecord, Report};
use crate::suites::{self, Ctx, Suite};

pub const MAX_TOPOLOGY_L: u32 = 20;

/// Input errors, mapped to exit status 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

pub fn cmd_catalog(command: &str, seed: u64, family: Option<Family>, max_l: u32) -> Report {
    let mut report = Report::new(command, seed);
    for label in catalog(max_l, family) {
        let name = format!("catalog/{label}");
        let rec = match label.params() {
            Ok(sp) => {
                let ok = u64::from(sp.dim()) == label.known_dim();
                CheckRecord::new(name, ok)
                    .value("r", sp.rank())
                    .value("a", sp.a())
                    .value("b", sp.b())
                    .value("n", sp.dim())
                    .value("p", sp.genus())
                    .value("known_n", label.known_dim())
            }
            Err(e) => CheckRecord::new(name, false).value("error", e),
        };
        report.push(rec);
    }
    report
}

pub fn cmd_expand(
    command: &str,
    seed: u64,
    label: SpaceLabel,
    kind: KernelKind,
    mu: u32,
) -> Result<Report, UsageError> {
    let spec = KernelSpec::new(kind, mu).map_err(|e| UsageError(e.to_string()))?;
    let space = label.params().map_err(|e| UsageError(e.to_string()))?;
    let mut report = Report::new(command, seed);
    match expand(&space, spec) {
        Ok(exp) => report.extend(expansion_records(label, &exp)),
        Err(e) => report.push(
            CheckRecord::new("expand", false)
                .value("space", label)
                .value("error", e),
        ),
    }
    Ok(report)
}

fn expansion_records(label: SpaceLabel, exp: &Expansion) -> Vec<CheckRecord> {
    let spec = exp.spec;
    let degree = Expansion::expected_degree(&exp.space, spec);
    let mut out = Vec::new();

    let mut poly = CheckRecord::new("coefficient_polynomial", exp.poly.degree() == Some(degree))
        .value("polynomial", &exp.poly)
        .value("degree", degree);
    if let Some(lead) = exp.poly.leading() {
        poly = poly.exact("leading", lead);
    }
    out.push(poly);

    let mut binom = CheckRecord::new(
        "binomial_basis",
        from_binomial_basis(&exp.binomial) == exp.poly,
    );
    for (k, d) in exp.binomial.iter().enumerate() {
        binom = binom.exact(&format!("d_{k}"), d);
    }
    out.push(binom);

    let sp = &exp.space;
    let mut profile = CheckRecord::new("laurent_profile", true)
        .value("space", label)
        .value("kind", spec.kind())
        .value("mu", spec.mu())
        .value("n", sp.dim())
        .value("p", sp.genus())
        .value("prefactor", exp.profile.prefactor());
    for (j, c) in exp.profile.coeffs().iter().enumerate() {
        profile = profile.exact(&format!("c_{j}"), c);
    }
    out.push(profile.value("expression", format!("K = {}", exp.profile.expression())));

    let c0 = CheckRecord::new("c0_check", exp.c0_ok);
    let c0 = match (
        exp.profile.coeffs().first(),
        hermkern_core::expansion::expected_c0(sp, spec),
    ) {
        (Some(got), Ok(want)) => c0.exact("c_0", got).exact("expected", &want),
        (_, Err(e)) => c0.value("error", e),
        (None, _) => c0,
    };
    out.push(c0);

    out.push(
        CheckRecord::new("log_term", exp.no_log_term)
            .value("log_term", !exp.no_log_term)
            .value("samples", format!("nu=0..{}", degree + 5)),
    );

    if spec.kind() == KernelKind::Bergman {
        out.push(
            CheckRecord::new("bergman_variant", true)
                .value("argument", "mu*(nu+1)+p-n/r")
                .value("rejected", "nu+p-n/r (printed closed form)")
                .value(
                    "evidence",
                    "CP1 slice-norm quadrature, see `verify quadrature`",
                ),
        );
    }
    out
}

pub fn cmd_verify(command: &str, suite: Suite, ctx: &Ctx) -> Report {
    let mut report = Report::new(command, ctx.seed);
    report.extend(suites::run(suite, ctx));
    report
}

pub fn cmd_topology(
    command: &str,
    seed: u64,
    max_l: u32,
    mu: u64,
    lens: Option<(u32, u64)>,
) -> Result<Report, UsageError> {
    if max_l > MAX_TOPOLOGY_L {
        return Err(UsageError(format!(
            "--max-l must be <= {MAX_TOPOLOGY_L}, got {max_l}"
        )));
    }
    if mu == 0 {
        return Err(UsageError("--mu must be >= 1".into()));
    }
    let mut report = Report::new(command, seed);
    for (k, l) in grassmannian_pairs(max_l) {
        let name = format!("grassmannian/k={k},l={l}");
        let rec = match lens_obstruction(k, l) {
            Ok(v) => {
                let mut rec = CheckRecord::new(name, v.lens_candidate == (k == 1))
                    .value("n", v.n)
                    .value("bundle_real_dim", v.bundle_real_dim())
                    .value("poincare", &v.poincare)
                    .value("lens_candidate", v.lens_candidate);
                if v.lens_candidate {
                    if let Ok(t) = lens_cohomology(v.n, mu) {
                        rec = rec.value("lens_cohomology", t.to_string());
                    }
                }
                rec
            }
            Err(e) => CheckRecord::new(name, false).value("error", e),
        };
        report.push(rec);
    }
    if let Some((n, m)) = lens {
        let table = lens_cohomology(n, m).map_err(|e| UsageError(e.to_string()))?;
        let sphere = lens_cohomology(n, 1).map_err(|e| UsageError(e.to_string()))?;
        let mut rec =
            CheckRecord::new(format!("lens/n={n},m={m}"), table.betti() == sphere.betti())
                .value("space", format!("S^{}/Z_{m}", 2 * n + 1));
        for j in 0..=table.top_degree() {
            rec = rec.value(&format!("H^{j}"), table.get(j));
        }
        report.push(rec.value("table", table.to_string()));
    }
    Ok(report)
}
