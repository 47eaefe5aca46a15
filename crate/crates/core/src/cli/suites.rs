//! Built-in cross-check suites behind `ichom verify`.
//!
//! Every check becomes one record with `suite`, `check`, `expected`, `actual`
//! and `status`. Failed checks are report content, not errors.

use super::args::ConventionArg;
use super::report::{fmt_betti, fmt_pair, Record, Report};
use super::CliError;
use crate::control::{
    bundled_links, consistent_conventions, parity_sums, perversity_from_control, theorem0_for_floor,
    theorem3_for_floor, Convention, ControlParams, Theorem0Report,
};
use crate::cyclic::{
    algebra, connes_quotient_cyclic, cyclic_operator, hh_betti, mixed_from_algebra, mixed_from_cochain,
    reduced_complex, MixedComplex, Normalization,
};
use crate::exactalg::{rat, Betti, GradedComplex, RationalMatrix};
use crate::simplicial::{fixtures, SimplicialComplex};
use crate::stratified::{
    bundled_filtered, cone_formula_expected, duality_rank_check, intersection_betti, intersection_chain_complex,
    FilteredComplex, Perversity,
};

pub const SUITES: [&str; 13] = [
    "cone",
    "duality",
    "factorization",
    "perversity",
    "mixed",
    "hochschild",
    "reduced",
    "connes",
    "sbi",
    "derham",
    "theorem0",
    "theorem3",
    "all",
];

/// Truncation degree for the algebraic suites.
const ALGEBRA_DEGREE: usize = 5;
/// Truncation degree for periodic cyclic homology.
const PERIODIC_DEGREE: usize = 6;

struct Ctx {
    report: Report,
    max_degree: Option<usize>,
    convention: ConventionArg,
    passed: usize,
    failed: usize,
}

impl Ctx {
    fn check(&mut self, suite: &str, check: impl ToString, expected: impl ToString, actual: impl ToString, ok: bool) {
        self.report.push(
            Record::new()
                .with("suite", suite)
                .with("check", check)
                .with("expected", expected)
                .with("actual", actual)
                .with("status", if ok { "pass" } else { "fail" }),
        );
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
        }
    }

    /// Records a comparison that is informative either way, such as a cutoff
    /// convention that is expected to lose.
    fn observe(&mut self, suite: &str, check: impl ToString, expected: impl ToString, actual: impl ToString, same: bool) {
        self.report.push(
            Record::new()
                .with("suite", suite)
                .with("check", check)
                .with("expected", expected)
                .with("actual", actual)
                .with("status", if same { "match" } else { "mismatch" }),
        );
    }

    /// Records a check whose computation itself failed.
    fn error(&mut self, suite: &str, check: impl ToString, expected: impl ToString, e: impl ToString) {
        self.check(suite, check, expected, format!("error:{}", e.to_string()), false);
    }

    fn degree(&self, default: usize) -> usize {
        self.max_degree.unwrap_or(default)
    }

    fn conventions(&self) -> Vec<Convention> {
        match self.convention {
            ConventionArg::MinusOne => vec![Convention::MinusOne],
            ConventionArg::Exact => vec![Convention::Exact],
            ConventionArg::Both => Convention::ALL.to_vec(),
        }
    }
}

pub fn run_suite(name: &str, max_degree: Option<usize>, convention: ConventionArg) -> Result<Report, CliError> {
    if !SUITES.contains(&name) {
        return Err(CliError::Usage(format!(
            "unknown suite {name:?}; available suites: {}",
            SUITES.join(", ")
        )));
    }
    let mut report = Report::new("verify").param("suite", name).param(
        "cutoff_convention",
        match convention {
            ConventionArg::MinusOne => "m-1",
            ConventionArg::Exact => "m",
            ConventionArg::Both => "both",
        },
    );
    if let Some(k) = max_degree {
        report = report.param("max_degree", k);
    }
    let mut ctx = Ctx {
        report,
        max_degree,
        convention,
        passed: 0,
        failed: 0,
    };
    let selected: Vec<&str> = if name == "all" {
        SUITES[..SUITES.len() - 1].to_vec()
    } else {
        vec![name]
    };
    for s in selected {
        let (p0, f0) = (ctx.passed, ctx.failed);
        match s {
            "cone" => cone(&mut ctx),
            "duality" => duality(&mut ctx),
            "factorization" => factorization(&mut ctx),
            "perversity" => perversity(&mut ctx),
            "mixed" => mixed(&mut ctx),
            "hochschild" => hochschild(&mut ctx),
            "reduced" => reduced(&mut ctx),
            "connes" => connes(&mut ctx),
            "sbi" => sbi(&mut ctx),
            "derham" => derham(&mut ctx),
            "theorem0" => theorem0(&mut ctx),
            "theorem3" => theorem3(&mut ctx),
            _ => unreachable!("suite names are checked above"),
        }
        let (p, f) = (ctx.passed - p0, ctx.failed - f0);
        ctx.report.note(format!("{s}: {p} passed, {f} failed"));
    }
    let (p, f) = (ctx.passed, ctx.failed);
    ctx.report.note(format!("total: {p} passed, {f} failed"));
    Ok(ctx.report)
}

fn cone_links() -> Vec<(&'static str, SimplicialComplex)> {
    vec![
        ("hexagon", fixtures::hexagon()),
        ("two-hexagons", fixtures::two_hexagons()),
        ("torus", fixtures::torus7()),
    ]
}

fn cone(ctx: &mut Ctx) {
    for (name, link) in cone_links() {
        let f = FilteredComplex::cone_over(&link).expect("non-empty link");
        let link_betti = link.betti().expect("valid complex");
        for p in Perversity::all(f.n()) {
            let check = format!("cone({name})/p={p}");
            let expected = cone_formula_expected(&link_betti, f.n(), p.get(f.n()));
            match intersection_betti(&f, &p) {
                Ok(actual) => ctx.check("cone", check, fmt_betti(&expected), fmt_betti(&actual), actual == expected),
                Err(e) => ctx.error("cone", check, fmt_betti(&expected), e),
            }
        }
    }
}

fn duality(ctx: &mut Ctx) {
    for (name, link) in [("hexagon", fixtures::hexagon()), ("torus", fixtures::torus7())] {
        let f = FilteredComplex::suspension_over(&link).expect("non-empty link");
        for p in Perversity::all(f.n()) {
            let check = format!("susp({name})/p={p}");
            match duality_rank_check(&f, &p) {
                Ok(r) => {
                    let fmt = |v: Vec<usize>| format!("{v:?}").replace(' ', "");
                    let expected = fmt(r.rows.iter().map(|x| x.rank_q_dual).collect());
                    let actual = match &r.skipped {
                        Some(why) => format!("skipped:{why}"),
                        None => fmt(r.rows.iter().map(|x| x.rank_p).collect()),
                    };
                    ctx.check("duality", check, expected, actual, r.holds());
                }
                Err(e) => ctx.error("duality", check, "symmetric", e),
            }
        }
    }
}

fn factorization(ctx: &mut Ctx) {
    for (name, f) in bundled_filtered() {
        let all = Perversity::all(f.n());
        let complexes: Vec<_> = all.iter().map(|p| intersection_chain_complex(&f, p)).collect();
        for (a, p) in all.iter().enumerate() {
            for (b, q) in all.iter().enumerate() {
                if a == b || !p.le(q) {
                    continue;
                }
                let check = format!("{name}/{p}<={q}");
                match (&complexes[a], &complexes[b]) {
                    (Ok(x), Ok(y)) => {
                        let bad: Vec<usize> = (0..=f.n()).filter(|&i| !x.is_subspace_of(y, i)).collect();
                        let actual = if bad.is_empty() {
                            "contained".to_string()
                        } else {
                            format!("not-contained-in-degrees{bad:?}").replace(' ', "")
                        };
                        ctx.check("factorization", check, "contained", actual, bad.is_empty());
                    }
                    (Err(e), _) | (_, Err(e)) => ctx.error("factorization", check, "contained", e),
                }
            }
        }
    }
}

fn perversity(ctx: &mut Ctx) {
    for n in 2..=6 {
        for p in Perversity::all(n) {
            let t = Perversity::total(n);
            let zero = Perversity::zero(n);
            let ok_bounds = zero.le(&p) && p.le(&t);
            let (sum_ok, actual) = match p.complement() {
                Ok(q) => (q.sum_values(&p) == t.values(), format!("{q}")),
                Err(e) => (false, format!("error:{e}")),
            };
            ctx.check(
                "perversity",
                format!("n={n}/p={p}/complement"),
                format!("0<=p<=t,p+q={t}"),
                actual,
                ok_bounds && sum_ok,
            );
            // Every codimension active with [β_j/α_j] = j - 2 - p_j round-trips.
            let check = format!("n={n}/p={p}/control");
            let mut alpha = std::collections::BTreeMap::new();
            let mut beta = std::collections::BTreeMap::new();
            for j in 2..=n {
                let m = j as i64 - 2 - p.get(j);
                alpha.insert(j, rat(2, 1));
                beta.insert(j, rat(4 * m + 1, 2));
            }
            let derived = ControlParams::new(n, alpha, beta).and_then(|c| perversity_from_control(&c));
            match derived {
                Ok(d) => ctx.check("perversity", check, &p, &d, d == p),
                Err(e) => ctx.error("perversity", check, &p, e),
            }
        }
    }
}

fn mixed(ctx: &mut Ctx) {
    let k = ctx.degree(ALGEBRA_DEGREE);
    for (name, a) in algebra::bundled() {
        for kk in 0..=k {
            let t = cyclic_operator(&a, kk);
            let mut pow = t.clone();
            for _ in 0..kk {
                pow = t.mul(&pow);
            }
            let ok = pow == RationalMatrix::identity(t.rows());
            ctx.check("mixed", format!("{name}/tau^{}=id/k={kk}", kk + 1), "identity", if ok { "identity" } else { "differs" }, ok);
        }
        for norm in [Normalization::Full, Normalization::Reduced] {
            let label = match norm {
                Normalization::Full => "full",
                Normalization::Reduced => "reduced",
            };
            // Two extra degrees so every composite starting in degree <= k fits.
            match mixed_from_algebra(&a, k + 2, norm) {
                Ok(m) => {
                    for c in m.identity_checks().into_iter().filter(|c| c.degree <= k) {
                        let check = format!("{name}/{label}/{}/k={}", c.identity, c.degree);
                        ctx.check("mixed", check, "zero", if c.holds { "zero" } else { "nonzero" }, c.holds);
                    }
                }
                Err(e) => ctx.error("mixed", format!("{name}/{label}"), "mixed-complex", e),
            }
        }
    }
}

/// Hochschild complex of `ℚ[x]/(x²)` from its 2-periodic resolution:
/// `A <-0- A <-2x- A <-0- A <-2x- ...`.
pub fn dual_numbers_oracle(top: usize) -> Betti {
    let two_x = RationalMatrix::from_i64(2, 2, &[0, 0, 2, 0]);
    let zero = RationalMatrix::zeros(2, 2);
    let boundaries = (1..=top).map(|k| if k % 2 == 1 { zero.clone() } else { two_x.clone() }).collect();
    let c = GradedComplex::chain(0, vec![2; top + 1], boundaries).expect("squares to zero");
    let mut b = c.betti().expect("valid complex");
    b.remove(&top);
    b
}

fn leading(b: &Betti, count: usize) -> Betti {
    b.iter().filter(|(k, _)| **k < count).map(|(k, v)| (*k, *v)).collect()
}

fn hochschild(ctx: &mut Ctx) {
    let k = ctx.degree(ALGEBRA_DEGREE);
    let field = hh_betti(&algebra::ground_field(), k);
    let cases: Vec<(&str, Betti, Result<Betti, _>, usize)> = vec![
        ("ground-field", [(0, 1), (1, 0), (2, 0), (3, 0), (4, 0)].into(), field.clone(), 5),
        ("split-pair", [(0, 2), (1, 0), (2, 0), (3, 0)].into(), hh_betti(&algebra::split_pair(), k), 4),
        ("dual-numbers", leading(&dual_numbers_oracle(k.max(5)), 4), hh_betti(&algebra::dual_numbers(), k), 4),
        ("dual-numbers/by-hand", [(0, 2), (1, 1), (2, 1), (3, 1)].into(), Ok(leading(&dual_numbers_oracle(k.max(5)), 4)), 4),
        (
            "matrix-2x2/vs/ground-field",
            field.as_ref().map(|b| leading(b, 4)).unwrap_or_default(),
            hh_betti(&algebra::matrix_algebra(), k),
            4,
        ),
    ];
    for (name, expected, actual, count) in cases {
        let check = format!("{name}/degrees<{count}");
        match actual {
            Ok(b) => {
                let actual = leading(&b, count);
                let ok = actual == expected && b.len() >= count;
                ctx.check("hochschild", check, fmt_betti(&expected), fmt_betti(&actual), ok);
            }
            Err(e) => ctx.error("hochschild", check, fmt_betti(&expected), e),
        }
    }
}

fn reduced(ctx: &mut Ctx) {
    let k = ctx.degree(ALGEBRA_DEGREE);
    for (name, a) in algebra::bundled() {
        match hh_betti(&a, k) {
            Ok(full) => {
                let red = reduced_complex(&a, k).betti();
                ctx.check("reduced", format!("{name}/K={k}"), fmt_betti(&full), fmt_betti(&red), full == red);
            }
            Err(e) => ctx.error("reduced", format!("{name}/K={k}"), "equal", e),
        }
    }
}

fn connes(ctx: &mut Ctx) {
    let k = ctx.degree(ALGEBRA_DEGREE);
    for (name, a) in algebra::bundled() {
        let check = format!("{name}/K={k}");
        let mixed = mixed_from_algebra(&a, k, Normalization::Full).map(|m| leading(&m.cyclic_betti(), k - 1));
        let quotient = connes_quotient_cyclic(&a, k).map(|b| leading(&b, k - 1));
        match (mixed, quotient) {
            (Ok(m), Ok(q)) => ctx.check("connes", check, fmt_betti(&m), fmt_betti(&q), m == q),
            (Err(e), _) | (_, Err(e)) => ctx.error("connes", check, "equal", e),
        }
    }
}

fn de_rham_spaces() -> Vec<(&'static str, SimplicialComplex)> {
    vec![
        ("point", fixtures::point()),
        ("circle", fixtures::hexagon()),
        ("torus", fixtures::torus7()),
        ("sphere", fixtures::sphere2()),
    ]
}

fn sbi_record(ctx: &mut Ctx, name: &str, m: Result<MixedComplex, impl ToString>) {
    let m = match m {
        Ok(m) => m,
        Err(e) => return ctx.error("sbi", name, "exact", e),
    };
    match m.sbi_check() {
        Ok(r) => {
            for n in &r.nodes {
                let check = format!("{name}/{}/n={}", n.node, n.degree);
                let actual = format!("{}+{}", n.rank_in, n.rank_out);
                ctx.check("sbi", check, n.dim, actual, n.exact());
            }
        }
        Err(e) => ctx.error("sbi", name, "exact", e),
    }
}

fn sbi(ctx: &mut Ctx) {
    let k = ctx.degree(ALGEBRA_DEGREE);
    for (name, a) in algebra::bundled() {
        sbi_record(ctx, name, mixed_from_algebra(&a, k, Normalization::Full));
    }
    for (name, x) in de_rham_spaces() {
        let m = x
            .cochain_complex()
            .map_err(|e| e.to_string())
            .and_then(|c| mixed_from_cochain(&c, k).map_err(|e| e.to_string()));
        sbi_record(ctx, &format!("de-rham({name})"), m);
    }
}

fn derham(ctx: &mut Ctx) {
    let k = ctx.degree(PERIODIC_DEGREE);
    for (name, x) in de_rham_spaces() {
        let betti = x.betti().expect("valid complex");
        let expected = fmt_pair(parity_sums(&betti));
        let check = format!("{name}/K={k}");
        let m = x
            .cochain_complex()
            .map_err(|e| e.to_string())
            .and_then(|c| mixed_from_cochain(&c, k).map_err(|e| e.to_string()));
        match m {
            Ok(m) => {
                let hp = m.periodic_betti().stabilized();
                let actual = hp.map(fmt_pair).unwrap_or_else(|| "unstable".into());
                ctx.check("derham", check, expected, actual, hp == Some(parity_sums(&betti)));
            }
            Err(e) => ctx.error("derham", check, expected, e),
        }
    }
}

fn theorem0_reports() -> Result<Vec<(&'static str, Theorem0Report)>, String> {
    let mut out = Vec::new();
    for (name, link) in bundled_links() {
        for m in [1, 2] {
            out.push((name, theorem0_for_floor(&link, m).map_err(|e| e.to_string())?));
        }
    }
    Ok(out)
}

fn fmt_conventions(cs: &[Convention]) -> String {
    if cs.is_empty() {
        "none".into()
    } else {
        cs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
    }
}

/// The convention consistent with every cone, if exactly one is.
fn resolved(reports: &[(&str, Theorem0Report)]) -> Option<Convention> {
    let rs: Vec<Theorem0Report> = reports.iter().map(|(_, r)| r.clone()).collect();
    match consistent_conventions(&rs).as_slice() {
        [c] => Some(*c),
        _ => None,
    }
}

fn theorem0(ctx: &mut Ctx) {
    let reports = match theorem0_reports() {
        Ok(r) => r,
        Err(e) => return ctx.error("theorem0", "reports", "computed", e),
    };
    for (name, r) in &reports {
        for c in ctx.conventions() {
            let check = format!("{name}/m={}/t={c}", r.m);
            let t = &r.truncated[&c];
            ctx.observe("theorem0", check, fmt_betti(&r.intersection), fmt_betti(t), r.matches(c));
        }
    }
    let rs: Vec<Theorem0Report> = reports.iter().map(|(_, r)| r.clone()).collect();
    let consistent = consistent_conventions(&rs);
    ctx.check(
        "theorem0",
        "resolution",
        "one-convention-for-all-cases",
        fmt_conventions(&consistent),
        consistent.len() == 1,
    );
}

fn theorem3(ctx: &mut Ctx) {
    let k = ctx.degree(PERIODIC_DEGREE);
    let conventions = match ctx.convention {
        ConventionArg::Both => match theorem0_reports().ok().as_deref().and_then(resolved) {
            Some(c) => vec![c],
            None => Convention::ALL.to_vec(),
        },
        _ => ctx.conventions(),
    };
    for c in conventions {
        for (name, link) in bundled_links() {
            for m in [1, 2] {
                let check = format!("{name}/m={m}/t={c}/K={k}");
                match theorem3_for_floor(&link, m, c, k) {
                    Ok(r) => {
                        let actual = r.model.map(fmt_pair).unwrap_or_else(|| "unstable".into());
                        ctx.check("theorem3", check, fmt_pair(r.intersection), actual, r.agrees());
                    }
                    Err(e) => ctx.error("theorem3", check, "computed", e),
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dual_numbers_by_hand() {
        assert_eq!(dual_numbers_oracle(5), Betti::from([(0, 2), (1, 1), (2, 1), (3, 1), (4, 1)]));
    }

    #[test]
    fn unknown_suite_lists_names() {
        let e = run_suite("nope", None, ConventionArg::Both).unwrap_err().to_string();
        assert!(e.contains("available suites") && e.contains("theorem3"), "{e}");
    }

    #[test]
    fn cheap_suites_pass() {
        for s in ["cone", "duality", "factorization", "theorem0"] {
            let r = run_suite(s, None, ConventionArg::Both).unwrap();
            let failed: Vec<_> = r.records.iter().filter(|x| x.get("status") == Some("fail")).collect();
            assert!(failed.is_empty(), "{s}: {failed:?}");
            assert!(!r.records.is_empty());
        }
    }
}
