//! Line-oriented text formats for complexes and algebras.
//!
//! Complex files:
//!
//! ```text
//! # cone over a square
//! dimension 2
//! simplex 0 1 4
//! simplex 1 2 4
//! skeleton 0 4
//! ```
//!
//! `simplex` lines list maximal simplices; faces are implied. `skeleton i`
//! lines list maximal simplices of `X_i`; an undeclared `X_i` repeats the
//! nearest lower declared one (or is empty).
//!
//! Algebra files:
//!
//! ```text
//! dimension 2
//! basis 1 x
//! mul 1 1 1 0
//! mul 1 x 0 1
//! mul x 1 0 1
//! mul x x 0 0
//! ```
//!
//! The first basis label is the unit. Every product `mul a b c_0 ... c_{d-1}`
//! must appear exactly once. Coefficients are integers or fractions `p/q`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::cyclic::FiniteAlgebra;
use crate::exactalg::Rational;
use crate::simplicial::{Simplex, SimplicialComplex, Vertex};
use crate::stratified::{FilteredComplex, FiltrationError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub struct FormatError {
    pub line: Option<usize>,
    pub message: String,
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(l) => write!(f, "line {l}: {}", self.message),
            None => f.write_str(&self.message),
        }
    }
}

fn at(line: usize, message: impl Into<String>) -> FormatError {
    FormatError {
        line: Some(line),
        message: message.into(),
    }
}

fn whole(message: impl Into<String>) -> FormatError {
    FormatError {
        line: None,
        message: message.into(),
    }
}

/// Non-empty, non-comment lines with their 1-based numbers.
fn directives(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.trim();
        if l.is_empty() || l.starts_with('#') {
            None
        } else {
            Some((i + 1, l.split_whitespace().collect()))
        }
    })
}

fn parse_usize(line: usize, what: &str, tok: &str) -> Result<usize, FormatError> {
    tok.parse()
        .map_err(|_| at(line, format!("{what} must be a non-negative integer, got {tok:?}")))
}

fn parse_simplex(line: usize, toks: &[&str]) -> Result<Simplex, FormatError> {
    let vs = toks
        .iter()
        .map(|t| {
            t.parse::<Vertex>()
                .map_err(|_| at(line, format!("vertex must be a non-negative integer, got {t:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Simplex::new(vs).map_err(|e| at(line, e.to_string()))
}

/// A parsed complex file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexFile {
    pub dimension: usize,
    pub complex: SimplicialComplex,
    /// `X_0..X_{n-1}` when the file declares a filtration.
    pub skeleta: Option<Vec<SimplicialComplex>>,
}

impl ComplexFile {
    pub fn parse(text: &str) -> Result<Self, FormatError> {
        let mut dimension: Option<(usize, usize)> = None;
        let mut simplices = Vec::new();
        let mut skeleton_lines: BTreeMap<usize, Vec<(usize, Option<Simplex>)>> = BTreeMap::new();
        for (line, toks) in directives(text) {
            match toks[0] {
                "dimension" => {
                    if let Some((first, _)) = dimension {
                        return Err(at(line, format!("dimension already declared on line {first}")));
                    }
                    if toks.len() != 2 {
                        return Err(at(line, "expected `dimension <n>`"));
                    }
                    dimension = Some((line, parse_usize(line, "dimension", toks[1])?));
                }
                "simplex" => {
                    if toks.len() < 2 {
                        return Err(at(line, "a simplex needs at least one vertex"));
                    }
                    simplices.push(parse_simplex(line, &toks[1..])?);
                }
                "skeleton" => {
                    if toks.len() < 2 {
                        return Err(at(line, "expected `skeleton <i> [vertices...]`"));
                    }
                    let i = parse_usize(line, "skeleton index", toks[1])?;
                    let s = if toks.len() > 2 {
                        let s = parse_simplex(line, &toks[2..])?;
                        if s.dim() > i {
                            return Err(at(line, format!("simplex {s} has dimension {} > {i}", s.dim())));
                        }
                        Some(s)
                    } else {
                        None
                    };
                    skeleton_lines.entry(i).or_default().push((line, s));
                }
                other => return Err(at(line, format!("unknown directive {other:?}"))),
            }
        }
        let (dim_line, dimension) = dimension.ok_or_else(|| whole("missing `dimension` line"))?;
        let complex = SimplicialComplex::from_simplices(simplices);
        let actual = complex.dim().ok_or_else(|| whole("empty complex"))?;
        if actual != dimension {
            return Err(at(
                dim_line,
                format!("declared dimension {dimension}, but the simplices span dimension {actual}"),
            ));
        }
        for (&i, entries) in &skeleton_lines {
            if i >= dimension {
                return Err(at(entries[0].0, format!("skeleton index {i} must be below the dimension {dimension}")));
            }
            for (line, s) in entries {
                if let Some(s) = s {
                    if !complex.contains(s) {
                        return Err(at(*line, format!("skeleton simplex {s} is not a face of the complex")));
                    }
                }
            }
        }
        let skeleta = if skeleton_lines.is_empty() {
            None
        } else {
            let mut out: Vec<SimplicialComplex> = Vec::with_capacity(dimension);
            for i in 0..dimension {
                let x = match skeleton_lines.get(&i) {
                    Some(entries) => SimplicialComplex::from_simplices(entries.iter().filter_map(|(_, s)| s.clone())),
                    None => out.last().cloned().unwrap_or_else(SimplicialComplex::empty),
                };
                out.push(x);
            }
            for i in 0..dimension.saturating_sub(1) {
                if let Some(s) = out[i].iter().find(|s| !out[i + 1].contains(s)) {
                    let line = skeleton_lines
                        .range(..=i)
                        .flat_map(|(_, e)| e.iter())
                        .find(|(_, m)| m.as_ref().is_some_and(|m| s.is_face_of(m)))
                        .map(|(l, _)| *l);
                    let msg = format!("simplex {s} of X_{i} is missing from X_{}", i + 1);
                    return Err(match line {
                        Some(l) => at(l, msg),
                        None => whole(msg),
                    });
                }
            }
            Some(out)
        };
        Ok(ComplexFile {
            dimension,
            complex,
            skeleta,
        })
    }

    pub fn filtration(&self) -> Result<Option<FilteredComplex>, FiltrationError> {
        match &self.skeleta {
            None => Ok(None),
            Some(s) => FilteredComplex::new(self.complex.clone(), s.clone()).map(Some),
        }
    }

    /// Canonical text: maximal simplices in canonical order, every skeleton written out.
    pub fn to_text(&self) -> String {
        let mut out = format!("dimension {}\n", self.dimension);
        for s in self.complex.maximal_simplices() {
            out.push_str(&format!("simplex {}\n", join(s.vertices())));
        }
        if let Some(sk) = &self.skeleta {
            for (i, x) in sk.iter().enumerate() {
                let maximal = x.maximal_simplices();
                if maximal.is_empty() {
                    out.push_str(&format!("skeleton {i}\n"));
                }
                for s in maximal {
                    out.push_str(&format!("skeleton {i} {}\n", join(s.vertices())));
                }
            }
        }
        out
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

/// Parses an exact rational `n` or `p/q`. Decimal points and exponents are rejected.
pub fn parse_rational(tok: &str) -> Result<Rational, String> {
    if tok.contains(['.', 'e', 'E']) {
        return Err(format!("{tok:?} is not exact; write fractions as p/q"));
    }
    let (p, q) = match tok.split_once('/') {
        Some((p, q)) => (p, q),
        None => (tok, "1"),
    };
    let p: BigInt = p.parse().map_err(|_| format!("{tok:?} is not an integer or fraction p/q"))?;
    let q: BigInt = q.parse().map_err(|_| format!("{tok:?} is not an integer or fraction p/q"))?;
    if q.is_zero() {
        return Err(format!("{tok:?} has a zero denominator"));
    }
    Ok(Rational::new(p, q))
}

/// A parsed algebra file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraFile {
    pub algebra: FiniteAlgebra,
}

impl AlgebraFile {
    pub fn parse(text: &str) -> Result<Self, FormatError> {
        let mut dimension: Option<usize> = None;
        let mut labels: Option<Vec<String>> = None;
        let mut products: BTreeMap<(usize, usize), (usize, Vec<Rational>)> = BTreeMap::new();
        for (line, toks) in directives(text) {
            match toks[0] {
                "dimension" => {
                    if dimension.is_some() {
                        return Err(at(line, "dimension declared twice"));
                    }
                    if toks.len() != 2 {
                        return Err(at(line, "expected `dimension <d>`"));
                    }
                    let d = parse_usize(line, "dimension", toks[1])?;
                    if d == 0 {
                        return Err(at(line, "dimension must be positive"));
                    }
                    dimension = Some(d);
                }
                "basis" => {
                    let d = dimension.ok_or_else(|| at(line, "`basis` must follow `dimension`"))?;
                    if labels.is_some() {
                        return Err(at(line, "basis declared twice"));
                    }
                    if toks.len() - 1 != d {
                        return Err(at(line, format!("expected {d} basis labels, got {}", toks.len() - 1)));
                    }
                    let ls: Vec<String> = toks[1..].iter().map(|s| s.to_string()).collect();
                    for (i, l) in ls.iter().enumerate() {
                        if ls[..i].contains(l) {
                            return Err(at(line, format!("basis label {l:?} repeated")));
                        }
                    }
                    labels = Some(ls);
                }
                "mul" => {
                    let ls = labels.as_ref().ok_or_else(|| at(line, "`mul` must follow `basis`"))?;
                    let d = ls.len();
                    if toks.len() != 3 + d {
                        return Err(at(line, format!("expected `mul <a> <b>` and {d} coefficients")));
                    }
                    let find = |t: &str| {
                        ls.iter()
                            .position(|l| l == t)
                            .ok_or_else(|| at(line, format!("unknown basis label {t:?}")))
                    };
                    let (i, j) = (find(toks[1])?, find(toks[2])?);
                    let coeffs = toks[3..]
                        .iter()
                        .map(|t| parse_rational(t).map_err(|e| at(line, e)))
                        .collect::<Result<Vec<_>, _>>()?;
                    if let Some((first, _)) = products.insert((i, j), (line, coeffs)) {
                        return Err(at(line, format!("product {}*{} already given on line {first}", ls[i], ls[j])));
                    }
                }
                other => return Err(at(line, format!("unknown directive {other:?}"))),
            }
        }
        let labels = labels.ok_or_else(|| whole("missing `basis` line"))?;
        let d = labels.len();
        let mut constants = vec![vec![Vec::new(); d]; d];
        for i in 0..d {
            for j in 0..d {
                let (_, c) = products
                    .remove(&(i, j))
                    .ok_or_else(|| whole(format!("missing product {}*{}", labels[i], labels[j])))?;
                constants[i][j] = c;
            }
        }
        let algebra = FiniteAlgebra::new(labels, constants).map_err(|e| whole(e.to_string()))?;
        Ok(AlgebraFile { algebra })
    }

    pub fn to_text(&self) -> String {
        algebra_to_text(&self.algebra)
    }
}

pub fn algebra_to_text(a: &FiniteAlgebra) -> String {
    let labels = a.labels();
    let mut out = format!("dimension {}\nbasis {}\n", a.dim(), labels.join(" "));
    let c = a.structure_constants();
    for (i, row) in c.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            out.push_str(&format!("mul {} {} {}\n", labels[i], labels[j], join(v)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclic::algebra;
    use crate::exactalg::rat;

    const CONE: &str = "# cone over a square\ndimension 2\nsimplex 0 1 4\nsimplex 1 2 4\nsimplex 2 3 4\nsimplex 0 3 4\nskeleton 0 4\n";

    #[test]
    fn complex_round_trip() {
        let f = ComplexFile::parse(CONE).unwrap();
        assert_eq!(f.skeleta.as_ref().unwrap()[1].vertices(), vec![4]);
        let again = ComplexFile::parse(&f.to_text()).unwrap();
        assert_eq!(again, f);
        assert_eq!(again.to_text(), f.to_text());
        assert!(f.filtration().unwrap().is_some());
    }

    #[test]
    fn complex_diagnostics() {
        let e = ComplexFile::parse("dimension 1\n").unwrap_err();
        assert_eq!(e.message, "empty complex");
        let e = ComplexFile::parse("dimension 2\nsimplex 0 1 2\nskeleton 0 7\n").unwrap_err();
        assert_eq!(e.line, Some(3));
        assert!(e.message.contains("[7]"), "{e}");
        let e = ComplexFile::parse("dimension 1\nsimplex 0 1 2\n").unwrap_err();
        assert_eq!(e.line, Some(1));
        let e = ComplexFile::parse("dimension 2\nsimplex 0 0 1\n").unwrap_err();
        assert_eq!(e.line, Some(2));
        let e = ComplexFile::parse("dimension 2\nsimplex 0 1 2\nskeleton 0 1\nskeleton 1 0 2\n").unwrap_err();
        assert_eq!(e.line, Some(3));
        let e = ComplexFile::parse("dimension 2\nsimplex 0 1 2\nskeleton 0 0 1\n").unwrap_err();
        assert_eq!(e.line, Some(3));
        let e = ComplexFile::parse("dimension 2\nface 0 1 2\n").unwrap_err();
        assert_eq!(e.to_string(), "line 2: unknown directive \"face\"");
    }

    #[test]
    fn algebra_round_trip() {
        for (_, a) in algebra::bundled() {
            let text = algebra_to_text(&a);
            let f = AlgebraFile::parse(&text).unwrap();
            assert_eq!(f.algebra, a);
            assert_eq!(f.to_text(), text);
        }
    }

    #[test]
    fn algebra_diagnostics() {
        let base = "dimension 2\nbasis 1 x\nmul 1 1 1 0\nmul 1 x 0 1\nmul x 1 0 1\n";
        let e = AlgebraFile::parse(base).unwrap_err();
        assert_eq!(e.message, "missing product x*x");
        let e = AlgebraFile::parse(&format!("{base}mul x x 0.5 0\n")).unwrap_err();
        assert_eq!(e.line, Some(6));
        assert!(e.message.contains("p/q"));
        let e = AlgebraFile::parse(&format!("{base}mul x x 1/0 0\n")).unwrap_err();
        assert!(e.message.contains("zero denominator"));
        let a = AlgebraFile::parse(&format!("{base}mul x x 0 -3/6\n")).unwrap();
        assert_eq!(a.algebra.dense_product(1, 1), vec![rat(0, 1), rat(-1, 2)]);
        let e = AlgebraFile::parse("dimension 3\nbasis 1 x y\nmul 1 1 1 0 0\nmul 1 x 0 1 0\nmul 1 y 0 0 1\nmul x 1 0 1 0\nmul x x 0 0 0\nmul x y 0 1 0\nmul y 1 0 0 1\nmul y x 0 0 0\nmul y y 0 0 0\n")
            .unwrap_err();
        assert!(e.message.contains("(1, 2, 2)"), "{e}");
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("3/2"), Ok(rat(3, 2)));
        assert_eq!(parse_rational("-4"), Ok(rat(-4, 1)));
        assert!(parse_rational("1e3").is_err());
        assert!(parse_rational("1.5").is_err());
        assert!(parse_rational("x").is_err());
    }
}
