use std::collections::BTreeMap;
use std::path::Path;

use super::args::{ControlArgs, CyclicKind};
use super::format::{parse_rational, AlgebraFile, ComplexFile};
use super::report::{fmt_pair, sha256_hex, Record, Report};
use super::{read_input, CliError};
use crate::control::{perversity_from_control, pole_exponent, ControlParams};
use crate::cyclic::{hh_betti, mixed_from_algebra, FiniteAlgebra, HochschildComplex, Normalization};
use crate::exactalg::{Betti, Rational};
use crate::stratified::{intersection_betti, Perversity};

fn load_complex(path: &Path) -> Result<(ComplexFile, String), CliError> {
    let (text, bytes) = read_input(path)?;
    let file = ComplexFile::parse(&text).map_err(|source| CliError::Format {
        path: path.to_path_buf(),
        source,
    })?;
    Ok((file, sha256_hex(&bytes)))
}

fn load_algebra(path: &Path) -> Result<(FiniteAlgebra, String), CliError> {
    let (text, bytes) = read_input(path)?;
    let file = AlgebraFile::parse(&text).map_err(|source| CliError::Format {
        path: path.to_path_buf(),
        source,
    })?;
    Ok((file.algebra, sha256_hex(&bytes)))
}

fn push_betti(report: &mut Report, b: &Betti) {
    for (k, v) in b {
        report.push(Record::new().with("degree", k).with("rank", v));
    }
}

pub fn betti(path: &Path) -> Result<Report, CliError> {
    let (file, digest) = load_complex(path)?;
    let b = file.complex.betti().map_err(CliError::validation)?;
    let mut r = Report::new("betti")
        .param("sha256", digest)
        .param("dimension", file.dimension)
        .param("simplices", file.complex.len());
    push_betti(&mut r, &b);
    r.note(format!("betti {}", super::report::fmt_betti(&b)));
    Ok(r)
}

/// `p_0,p_1,...,p_n`.
pub fn parse_perversity(text: &str) -> Result<Perversity, CliError> {
    let values = text
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| CliError::Usage(format!("perversity value {t:?} is not an integer")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Perversity::new(values).map_err(CliError::validation)
}

/// `j:value,...` with exact rational values.
pub fn parse_codim_map(flag: &str, text: &str) -> Result<BTreeMap<usize, Rational>, CliError> {
    let mut out = BTreeMap::new();
    for item in text.split(',') {
        let (j, v) = item
            .split_once(':')
            .ok_or_else(|| CliError::Usage(format!("--{flag}: expected `j:value`, got {item:?}")))?;
        let j: usize = j
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("--{flag}: codimension {j:?} is not a non-negative integer")))?;
        let v = parse_rational(v.trim()).map_err(|e| CliError::Usage(format!("--{flag}: {e}")))?;
        if out.insert(j, v).is_some() {
            return Err(CliError::Usage(format!("--{flag}: codimension {j} given twice")));
        }
    }
    Ok(out)
}

fn control_params(n: usize, c: &ControlArgs) -> Result<Option<ControlParams>, CliError> {
    match (&c.alpha, &c.beta) {
        (None, None) => Ok(None),
        (Some(a), Some(b)) => {
            let params = ControlParams::new(n, parse_codim_map("alpha", a)?, parse_codim_map("beta", b)?)
                .map_err(CliError::validation)?;
            Ok(Some(params))
        }
        _ => Err(CliError::Usage("--alpha and --beta must be given together".into())),
    }
}

/// One record per codimension showing how `p_j` was obtained.
fn derivation_records(params: &ControlParams, p: &Perversity) -> Result<Vec<Record>, CliError> {
    let mut out = Vec::new();
    for j in 0..=params.n() {
        let (alpha, beta, floor, source) = match (params.alpha(j), params.beta(j)) {
            (Some(a), Some(b)) => {
                let m = pole_exponent(params, j).map_err(CliError::validation)?;
                (a.to_string(), b.to_string(), m.to_string(), "control")
            }
            _ => {
                let source = if j < 3 { "fixed" } else { "interpolated" };
                ("-".into(), "-".into(), "-".into(), source)
            }
        };
        out.push(
            Record::new()
                .with("codim", j)
                .with("alpha", alpha)
                .with("beta", beta)
                .with("floor", floor)
                .with("p", p.get(j))
                .with("source", source),
        );
    }
    Ok(out)
}

pub fn ih(path: &Path, perversity: Option<&str>, control: &ControlArgs) -> Result<Report, CliError> {
    let (file, digest) = load_complex(path)?;
    let f = file
        .filtration()
        .map_err(CliError::validation)?
        .ok_or_else(|| CliError::Validation("filtration required for ih".into()))?;
    let n = f.n();
    let params = control_params(n, control)?;
    let (p, source) = match (perversity, &params) {
        (Some(text), _) => (parse_perversity(text)?, "flag"),
        (None, Some(params)) => (perversity_from_control(params).map_err(CliError::validation)?, "control"),
        (None, None) => (Perversity::zero(n), "default"),
    };
    let b = intersection_betti(&f, &p).map_err(CliError::validation)?;
    let mut r = Report::new("ih")
        .param("sha256", digest)
        .param("dimension", n)
        .param("perversity", &p)
        .param("perversity_source", source);
    if let Some(params) = &params {
        for rec in derivation_records(params, &p)? {
            r.push(rec);
        }
    }
    push_betti(&mut r, &b);
    for w in f.warnings() {
        r.note(format!("warning: {w}"));
    }
    r.note(format!("IH with perversity {p}: {}", super::report::fmt_betti(&b)));
    Ok(r)
}

pub fn perversity(n: usize, control: &ControlArgs) -> Result<Report, CliError> {
    let params =
        control_params(n, control)?.ok_or_else(|| CliError::Usage("--alpha and --beta are required".into()))?;
    let p = perversity_from_control(&params).map_err(CliError::validation)?;
    let mut r = Report::new("perversity").param("dimension", n).param("perversity", &p);
    for rec in derivation_records(&params, &p)? {
        r.push(rec);
    }
    r.note(format!("perversity {p}"));
    Ok(r)
}

pub fn cyclic(which: CyclicKind, path: &Path, top: usize) -> Result<Report, CliError> {
    let (a, digest) = load_algebra(path)?;
    let name = match which {
        CyclicKind::Hh => "hh",
        CyclicKind::Hc => "hc",
        CyclicKind::Hp => "hp",
        CyclicKind::Sbi => "sbi",
    };
    let mut r = Report::new(&format!("cyclic-{name}"))
        .param("sha256", digest)
        .param("algebra_dimension", a.dim())
        .param("max_degree", top);
    match which {
        CyclicKind::Hh => {
            let b = hh_betti(&a, top).map_err(CliError::validation)?;
            for (k, v) in &b {
                r.push(Record::new().with("degree", k).with("rank", v).with("status", "exact"));
            }
            let bound = HochschildComplex::new(&a, top, Normalization::Full).top_degree_bound();
            r.push(Record::new().with("degree", top).with("rank", bound).with("status", "upper-bound"));
            r.note(format!("degrees 0..{} are exact; degree {top} is only bounded above", top - 1));
        }
        CyclicKind::Hc => {
            let m = mixed_from_algebra(&a, top, Normalization::Full).map_err(CliError::validation)?;
            push_betti(&mut r, &m.cyclic_betti());
            r.note(format!("degrees 0..{} are exact", top.saturating_sub(1)));
        }
        CyclicKind::Hp => {
            let m = mixed_from_algebra(&a, top, Normalization::Full).map_err(CliError::validation)?;
            let p = m.periodic_betti();
            for (n, s) in &p.ranks {
                r.push(Record::new().with("degree", n).with("rank_S", s));
            }
            for (parity, v) in [("even", p.even), ("odd", p.odd)] {
                let (value, status) = match v {
                    Some(v) => (v.to_string(), "stable"),
                    None => ("-".to_string(), "unstable"),
                };
                r.push(Record::new().with("parity", parity).with("rank", value).with("status", status));
            }
            r.note(match p.stabilized() {
                Some(v) => format!("HP (even,odd) = {}", fmt_pair(v)),
                None => format!("S has not stabilized by degree {top}; raise --max-degree"),
            });
        }
        CyclicKind::Sbi => {
            let m = mixed_from_algebra(&a, top, Normalization::Full).map_err(CliError::validation)?;
            let s = m.sbi_check().map_err(CliError::validation)?;
            for node in &s.nodes {
                r.push(
                    Record::new()
                        .with("node", node.node)
                        .with("degree", node.degree)
                        .with("dim", node.dim)
                        .with("rank_in", node.rank_in)
                        .with("rank_out", node.rank_out)
                        .with("status", if node.exact() { "exact" } else { "inexact" }),
                );
            }
            r.note(format!(
                "SBI sequence {} in degrees 0..={}",
                if s.exact() { "exact" } else { "NOT exact" },
                top - 2
            ));
        }
    }
    Ok(r)
}
