use thiserror::Error;

use crate::simplicial::{cone, fresh_vertex, suspension, Simplex, SimplicialComplex, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FiltrationError {
    #[error("ambient complex is empty")]
    EmptyAmbient,
    #[error("expected {expected} skeleta X_0..X_(n-1), got {got}")]
    SkeletonCount { expected: usize, got: usize },
    #[error("X_{i} has dimension {dim}, more than {i}")]
    SkeletonTooLarge { i: usize, dim: usize },
    #[error("simplex {simplex} of X_{i} is missing from X_{next}", next = i + 1)]
    NotNested { i: usize, simplex: Simplex },
    #[error("simplex {0} of a skeleton is not in the ambient complex")]
    NotInAmbient(Simplex),
}

/// Simplicial complex with closed skeleta `X_n ⊇ X_{n-1} ⊇ ... ⊇ X_0`;
/// the singular set is `Σ = X_{n-1}`.
#[derive(Clone, Debug)]
pub struct FilteredComplex {
    ambient: SimplicialComplex,
    /// `skeleta[i]` is `X_i` for `i < n`.
    skeleta: Vec<SimplicialComplex>,
    warnings: Vec<String>,
}

impl FilteredComplex {
    pub fn new(ambient: SimplicialComplex, skeleta: Vec<SimplicialComplex>) -> Result<Self, FiltrationError> {
        let n = ambient.dim().ok_or(FiltrationError::EmptyAmbient)?;
        if skeleta.len() != n {
            return Err(FiltrationError::SkeletonCount {
                expected: n,
                got: skeleta.len(),
            });
        }
        for (i, x) in skeleta.iter().enumerate() {
            if let Some(d) = x.dim() {
                if d > i {
                    return Err(FiltrationError::SkeletonTooLarge { i, dim: d });
                }
            }
            let next = skeleta.get(i + 1).unwrap_or(&ambient);
            if let Some(s) = x.iter().find(|s| !next.contains(s)) {
                return Err(if i + 1 == n {
                    FiltrationError::NotInAmbient(s.clone())
                } else {
                    FiltrationError::NotNested { i, simplex: s.clone() }
                });
            }
        }
        let mut warnings = Vec::new();
        if n >= 1 {
            let top = &skeleta[n - 1];
            let below = if n >= 2 { Some(&skeleta[n - 2]) } else { None };
            let has_codim_one = match below {
                Some(b) => top.len() != b.len(),
                None => !top.is_empty(),
            };
            if has_codim_one {
                warnings.push(format!(
                    "X_{} differs from X_{}: the filtration has a codimension-one stratum",
                    n - 1,
                    n as i64 - 2
                ));
            }
        }
        Ok(FilteredComplex {
            ambient,
            skeleta,
            warnings,
        })
    }

    /// Filtration with empty singular set.
    pub fn trivial(ambient: SimplicialComplex) -> Result<Self, FiltrationError> {
        let n = ambient.dim().ok_or(FiltrationError::EmptyAmbient)?;
        Self::new(ambient, vec![SimplicialComplex::empty(); n])
    }

    /// Isolated singular points: `X_0 = ... = X_{n-1} = points`.
    pub fn with_point_strata(ambient: SimplicialComplex, points: &[Vertex]) -> Result<Self, FiltrationError> {
        let n = ambient.dim().ok_or(FiltrationError::EmptyAmbient)?;
        let x0 = SimplicialComplex::from_simplices(points.iter().map(|&v| Simplex::vertex(v)));
        Self::new(ambient, vec![x0; n])
    }

    /// Closed cone over `link`, stratified by its apex.
    pub fn cone_over(link: &SimplicialComplex) -> Result<Self, FiltrationError> {
        let apex = fresh_vertex(link);
        let c = cone(link, apex).expect("fresh apex");
        Self::with_point_strata(c, &[apex])
    }

    /// Suspension of `link`, stratified by its two suspension points.
    pub fn suspension_over(link: &SimplicialComplex) -> Result<Self, FiltrationError> {
        let north = fresh_vertex(link);
        let s = suspension(link, north, north + 1).expect("fresh apexes");
        Self::with_point_strata(s, &[north, north + 1])
    }

    pub fn n(&self) -> usize {
        self.skeleta.len()
    }

    pub fn ambient(&self) -> &SimplicialComplex {
        &self.ambient
    }

    /// `X_i`; `X_n` is the ambient complex.
    pub fn skeleton(&self, i: usize) -> &SimplicialComplex {
        self.skeleta.get(i).unwrap_or(&self.ambient)
    }

    pub fn singular_set(&self) -> &SimplicialComplex {
        match self.skeleta.last() {
            Some(s) => s,
            None => &self.ambient,
        }
    }

    pub fn has_empty_singular_set(&self) -> bool {
        self.skeleta.last().is_none_or(SimplicialComplex::is_empty)
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::fixtures;

    #[test]
    fn cone_filtration() {
        let f = FilteredComplex::cone_over(&fixtures::hexagon()).unwrap();
        assert_eq!(f.n(), 2);
        assert_eq!(f.skeleton(0).vertices(), vec![6]);
        assert_eq!(f.skeleton(1).vertices(), vec![6]);
        assert_eq!(f.skeleton(2).count(0), 7);
        assert!(f.warnings().is_empty());
    }

    #[test]
    fn rejects_malformed() {
        let amb = fixtures::full_simplex(2);
        let x0 = SimplicialComplex::from_vertex_lists(&[&[0]]).unwrap();
        let x1 = SimplicialComplex::from_vertex_lists(&[&[1, 2]]).unwrap();
        assert!(matches!(
            FilteredComplex::new(amb.clone(), vec![x0.clone(), x1.clone()]),
            Err(FiltrationError::NotNested { i: 0, .. })
        ));
        assert!(matches!(
            FilteredComplex::new(amb.clone(), vec![x1.clone(), x1.clone()]),
            Err(FiltrationError::SkeletonTooLarge { i: 0, dim: 1 })
        ));
        let stray = SimplicialComplex::from_vertex_lists(&[&[9]]).unwrap();
        assert!(matches!(
            FilteredComplex::new(amb.clone(), vec![stray.clone(), stray]),
            Err(FiltrationError::NotInAmbient(_))
        ));
        assert!(matches!(
            FilteredComplex::new(amb, vec![x0]),
            Err(FiltrationError::SkeletonCount { expected: 2, got: 1 })
        ));
    }

    #[test]
    fn codimension_one_is_flagged() {
        let amb = fixtures::full_simplex(2);
        let x0 = SimplicialComplex::from_vertex_lists(&[&[0], &[1]]).unwrap();
        let x1 = SimplicialComplex::from_vertex_lists(&[&[0, 1]]).unwrap();
        let f = FilteredComplex::new(amb, vec![x0, x1]).unwrap();
        assert_eq!(f.warnings().len(), 1);
    }
}
