//! Perversities, filtered complexes and intersection homology.

mod duality;
mod filtration;
mod intersection;
mod perversity;

use thiserror::Error;

pub use duality::{duality_rank_check, DualityReport, DualityRow};
pub use filtration::{FilteredComplex, FiltrationError};
pub use intersection::{
    chain_allowable, cone_formula_expected, intersection_betti, intersection_betti_with_bounds,
    intersection_chain_complex, intersection_complex_with_bounds, simplex_allowable, IntersectionComplex,
};
pub use perversity::{Perversity, PerversityError};

use crate::simplicial::{fixtures, Simplex};

/// Cones and suspensions of the standard links, stratified by their apexes.
pub fn bundled_filtered() -> Vec<(&'static str, FilteredComplex)> {
    let cone = |l| FilteredComplex::cone_over(&l).expect("non-empty link");
    let susp = |l| FilteredComplex::suspension_over(&l).expect("non-empty link");
    vec![
        ("cone(hexagon)", cone(fixtures::hexagon())),
        ("cone(two-hexagons)", cone(fixtures::two_hexagons())),
        ("cone(torus)", cone(fixtures::torus7())),
        ("susp(hexagon)", susp(fixtures::hexagon())),
        ("susp(torus)", susp(fixtures::torus7())),
    ]
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StratifiedError {
    #[error(transparent)]
    Perversity(#[from] PerversityError),
    #[error(transparent)]
    Filtration(#[from] FiltrationError),
    #[error("perversity is for dimension {perversity}, complex has dimension {complex}")]
    DimensionMismatch { perversity: usize, complex: usize },
    #[error("simplex {0} is not in the complex")]
    NotInComplex(Simplex),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, Rational};
    use crate::simplicial::Chain;
    use proptest::prelude::*;

    fn bundled() -> Vec<FilteredComplex> {
        bundled_filtered().into_iter().map(|(_, f)| f).collect()
    }

    #[test]
    fn induced_boundaries_square_to_zero() {
        for f in bundled() {
            for p in Perversity::all(f.n()) {
                let ic = intersection_chain_complex(&f, &p).unwrap();
                assert!(ic.to_graded().validate().is_ok());
            }
        }
    }

    #[test]
    fn monotone_in_perversity() {
        for f in bundled() {
            let all = Perversity::all(f.n());
            for p in &all {
                for q in all.iter().filter(|q| p.le(q)) {
                    let a = intersection_chain_complex(&f, p).unwrap();
                    let b = intersection_chain_complex(&f, q).unwrap();
                    for i in 0..=f.n() {
                        assert!(a.is_subspace_of(&b, i), "{p} <= {q} fails in degree {i}");
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn chain_allowability_is_conjunction_over_support(
            coeffs in proptest::collection::vec(-2i64..=2, 35),
            degree in 0usize..=3,
            high in any::<bool>(),
        ) {
            let f = FilteredComplex::cone_over(&fixtures::torus7()).unwrap();
            let p = Perversity::new(vec![0, 0, 0, if high { 1 } else { 0 }]).unwrap();
            let simplices = f.ambient().simplices(degree);
            let terms: Vec<(Simplex, Rational)> = simplices
                .iter()
                .zip(&coeffs)
                .filter(|(_, &c)| c != 0)
                .map(|(s, &c)| (s.clone(), int(c)))
                .collect();
            let chain = Chain::from_terms(degree, terms, f.ambient()).unwrap();
            let conj = chain
                .support()
                .all(|s| simplex_allowable(s, degree, &p, &f).unwrap());
            prop_assert_eq!(chain_allowable(&chain, &p, &f).unwrap(), conj);
        }
    }
}
