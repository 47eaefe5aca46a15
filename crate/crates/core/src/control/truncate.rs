use super::ControlError;
use crate::exactalg::{kernel, Direction, GradedComplex, RationalMatrix};

/// Canonical truncation `τ_{<=t} Ω`: degrees below `t` unchanged, `ker d^t`
/// in degree `t`, zero above. `t = -1` gives the zero complex.
pub fn truncate_cochain(omega: &GradedComplex, t: i64) -> Result<GradedComplex, ControlError> {
    if omega.direction() != Direction::Cochain {
        return Err(ControlError::NotCochain);
    }
    if t < -1 {
        return Err(ControlError::Cutoff(t));
    }
    let lo = omega.lo();
    let hi = omega.hi();
    if t >= hi as i64 {
        return Ok(omega.clone());
    }
    let zeroed = |dims: Vec<usize>, ds: Vec<Option<RationalMatrix>>| {
        GradedComplex::new(lo, dims, ds, Direction::Cochain).map_err(|e| ControlError::Internal(e.to_string()))
    };
    if t < lo as i64 {
        return zeroed(vec![0; hi - lo + 1], vec![None; hi - lo + 1]);
    }
    let t = t as usize;
    let top_kernel = kernel(omega.differential(t).expect("t < hi"));
    let mut dims = Vec::with_capacity(hi - lo + 1);
    let mut ds = Vec::with_capacity(hi - lo + 1);
    for k in lo..=hi {
        dims.push(match k.cmp(&t) {
            std::cmp::Ordering::Less => omega.dim(k),
            std::cmp::Ordering::Equal => top_kernel.dim(),
            std::cmp::Ordering::Greater => 0,
        });
        ds.push(if k + 1 < t {
            omega.differential(k).cloned()
        } else if k + 1 == t {
            // d^{t-1} lands in ker d^t; rewrite it in the kernel basis.
            let d = omega.differential(k).expect("t <= hi");
            let cols: Vec<_> = (0..d.cols()).map(|c| top_kernel.coordinates(&d.column(c))).collect();
            Some(RationalMatrix::from_columns(top_kernel.dim(), &cols))
        } else {
            None
        });
    }
    zeroed(dims, ds)
}

/// Link cochains with their canonical truncation at `cutoff`.
#[derive(Clone, Debug)]
pub struct TruncatedConeModel {
    pub link: GradedComplex,
    pub cutoff: i64,
    pub truncated: GradedComplex,
}

impl TruncatedConeModel {
    pub fn new(link: GradedComplex, cutoff: i64) -> Result<Self, ControlError> {
        let truncated = truncate_cochain(&link, cutoff)?;
        Ok(TruncatedConeModel {
            link,
            cutoff,
            truncated,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Betti;
    use crate::simplicial::fixtures;

    fn truncated_betti(k: &crate::simplicial::SimplicialComplex, t: i64) -> Betti {
        truncate_cochain(&k.cochain_complex().unwrap(), t).unwrap().betti().unwrap()
    }

    #[test]
    fn examples() {
        let s1 = fixtures::hexagon();
        assert_eq!(truncated_betti(&s1, 0), Betti::from([(0, 1), (1, 0)]));
        assert_eq!(truncated_betti(&s1, 1), Betti::from([(0, 1), (1, 1)]));
        let t2 = fixtures::torus7();
        assert_eq!(truncated_betti(&t2, 1), Betti::from([(0, 1), (1, 2), (2, 0)]));
        assert_eq!(truncated_betti(&t2, -1), Betti::from([(0, 0), (1, 0), (2, 0)]));
    }

    #[test]
    fn profile_matches_for_every_cutoff() {
        for k in [fixtures::hexagon(), fixtures::two_hexagons(), fixtures::torus7(), fixtures::sphere2()] {
            let full = k.betti().unwrap();
            let top = k.dim().unwrap() as i64;
            for t in -1..=top + 1 {
                let b = truncated_betti(&k, t);
                for (deg, &v) in &b {
                    let expected = if (*deg as i64) <= t { full[deg] } else { 0 };
                    assert_eq!(v, expected, "t={t} degree {deg}");
                }
            }
        }
    }

    #[test]
    fn rejects_chain_complexes() {
        let c = fixtures::hexagon().chain_complex().unwrap();
        assert!(matches!(truncate_cochain(&c, 0), Err(ControlError::NotCochain)));
    }
}
