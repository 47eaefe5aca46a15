use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::params::{pole_exponent, ControlParams};
use super::truncate::truncate_cochain;
use super::ControlError;
use crate::cyclic::mixed_from_cochain;
use crate::exactalg::Betti;
use crate::simplicial::SimplicialComplex;
use crate::stratified::{intersection_betti_with_bounds, FilteredComplex};

/// Where the cone's cohomology is cut off, relative to `m = [β/α]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Convention {
    /// Cutoff `t = m - 1`.
    MinusOne,
    /// Cutoff `t = m`.
    Exact,
}

impl Convention {
    pub const ALL: [Convention; 2] = [Convention::MinusOne, Convention::Exact];

    pub fn cutoff(self, m: i64) -> i64 {
        match self {
            Convention::MinusOne => m - 1,
            Convention::Exact => m,
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::MinusOne => "m-1",
            Convention::Exact => "m",
        })
    }
}

impl FromStr for Convention {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "m-1" => Ok(Convention::MinusOne),
            "m" => Ok(Convention::Exact),
            other => Err(format!("unknown cutoff convention {other:?}, expected m-1 or m")),
        }
    }
}

/// Allowability bounds for a cone with isolated singular point: `p_n` in
/// codimension `n`, and `p_n - (n - j)` below so the lower codimensions add no
/// stricter condition. `p_n` may lie outside the perversity axioms.
pub fn cone_bounds(n: usize, p_n: i64) -> Vec<i64> {
    (0..=n)
        .map(|j| if j < 2 { 0 } else { p_n - (n - j) as i64 })
        .collect()
}

/// Intersection betti of the cone over `link` with top perversity value `p_n`.
pub fn cone_intersection_betti(link: &SimplicialComplex, p_n: i64) -> Result<Betti, ControlError> {
    let f = FilteredComplex::cone_over(link).map_err(|e| ControlError::Internal(e.to_string()))?;
    intersection_betti_with_bounds(&f, &cone_bounds(f.n(), p_n)).map_err(|e| ControlError::Internal(e.to_string()))
}

/// Equality of two rank tables, treating missing degrees as zero.
pub fn same_ranks(a: &Betti, b: &Betti) -> bool {
    a.keys()
        .chain(b.keys())
        .all(|k| a.get(k).copied().unwrap_or(0) == b.get(k).copied().unwrap_or(0))
}

fn link_dimension(link: &SimplicialComplex, params: &ControlParams) -> Result<usize, ControlError> {
    let d = link.dim().ok_or(ControlError::EmptyLink)?;
    let n = d + 1;
    if params.n() != n || params.active().collect::<Vec<_>>() != vec![n] {
        return Err(ControlError::SingleCodimension { n });
    }
    Ok(n)
}

/// Truncated link cohomology against chain-level intersection homology of the cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theorem0Report {
    pub n: usize,
    pub m: i64,
    /// `n - 2 - m`.
    pub p_n: i64,
    pub link_betti: Betti,
    pub intersection: Betti,
    pub truncated: BTreeMap<Convention, Betti>,
}

impl Theorem0Report {
    pub fn matches(&self, c: Convention) -> bool {
        same_ranks(&self.truncated[&c], &self.intersection)
    }

    pub fn matching(&self) -> Vec<Convention> {
        Convention::ALL.into_iter().filter(|&c| self.matches(c)).collect()
    }
}

pub fn theorem0_crosscheck(link: &SimplicialComplex, params: &ControlParams) -> Result<Theorem0Report, ControlError> {
    let n = link_dimension(link, params)?;
    theorem0_for_floor(link, pole_exponent(params, n)?)
}

/// Same check for a given `m = [β/α]`; also covers links of dimension 0,
/// where no control codimension exists.
pub fn theorem0_for_floor(link: &SimplicialComplex, m: i64) -> Result<Theorem0Report, ControlError> {
    let n = link.dim().ok_or(ControlError::EmptyLink)? + 1;
    let p_n = n as i64 - 2 - m;
    let cochains = link.cochain_complex().map_err(|e| ControlError::Internal(e.to_string()))?;
    let mut truncated = BTreeMap::new();
    for c in Convention::ALL {
        let t = truncate_cochain(&cochains, c.cutoff(m))?;
        truncated.insert(c, t.betti().map_err(|e| ControlError::Internal(e.to_string()))?);
    }
    Ok(Theorem0Report {
        n,
        m,
        p_n,
        link_betti: link.betti().map_err(|e| ControlError::Internal(e.to_string()))?,
        intersection: cone_intersection_betti(link, p_n)?,
        truncated,
    })
}

/// Conventions that match in every report. The off-by-one is resolved when
/// exactly one remains.
pub fn consistent_conventions(reports: &[Theorem0Report]) -> Vec<Convention> {
    Convention::ALL
        .into_iter()
        .filter(|&c| reports.iter().all(|r| r.matches(c)))
        .collect()
}

pub fn resolve_convention(reports: &[Theorem0Report]) -> Option<Convention> {
    match consistent_conventions(reports).as_slice() {
        [c] => Some(*c),
        _ => None,
    }
}

/// `(Σ even ranks, Σ odd ranks)`.
pub fn parity_sums(b: &Betti) -> (usize, usize) {
    b.iter().fold((0, 0), |(e, o), (&k, &v)| if k % 2 == 0 { (e + v, o) } else { (e, o + v) })
}

/// Periodic cyclic homology of the truncated cone model against parity sums
/// of chain-level intersection betti of the cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theorem3Report {
    pub n: usize,
    pub m: i64,
    pub convention: Convention,
    pub cutoff: i64,
    /// Stabilized `(even, odd)`, or `None` if `S` had not stabilized.
    pub model: Option<(usize, usize)>,
    /// Parity sums of `IH` for `p_n = n - 2 - cutoff`.
    pub intersection: (usize, usize),
    /// Parity sums of `IH` for `q_n = m - 1`.
    pub shifted: (usize, usize),
}

impl Theorem3Report {
    pub fn agrees(&self) -> bool {
        self.model == Some(self.intersection)
    }

    pub fn agrees_shifted(&self) -> bool {
        self.model == Some(self.shifted)
    }
}

pub fn theorem3_crosscheck(
    link: &SimplicialComplex,
    params: &ControlParams,
    convention: Convention,
    top: usize,
) -> Result<Theorem3Report, ControlError> {
    let n = link_dimension(link, params)?;
    theorem3_for_floor(link, pole_exponent(params, n)?, convention, top)
}

pub fn theorem3_for_floor(
    link: &SimplicialComplex,
    m: i64,
    convention: Convention,
    top: usize,
) -> Result<Theorem3Report, ControlError> {
    let n = link.dim().ok_or(ControlError::EmptyLink)? + 1;
    let cutoff = convention.cutoff(m);
    let cochains = link.cochain_complex().map_err(|e| ControlError::Internal(e.to_string()))?;
    let model = truncate_cochain(&cochains, cutoff)?;
    let mixed = mixed_from_cochain(&model, top).map_err(|e| ControlError::Internal(e.to_string()))?;
    let hp = mixed.periodic_betti().stabilized();
    let intersection = parity_sums(&cone_intersection_betti(link, n as i64 - 2 - cutoff)?);
    let shifted = parity_sums(&cone_intersection_betti(link, m - 1)?);
    Ok(Theorem3Report {
        n,
        m,
        convention,
        cutoff,
        model: hp,
        intersection,
        shifted,
    })
}

/// Links used by the cross-check suites.
pub fn bundled_links() -> Vec<(&'static str, SimplicialComplex)> {
    use crate::simplicial::fixtures;
    vec![
        ("point", fixtures::point()),
        ("hexagon", fixtures::hexagon()),
        ("two-hexagons", fixtures::two_hexagons()),
        ("torus", fixtures::torus7()),
    ]
}
