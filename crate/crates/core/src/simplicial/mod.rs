//! Finite simplicial complexes, chains, boundary operators and the cone,
//! suspension and subdivision constructions.

mod complex;
mod constructions;
pub mod fixtures;

use thiserror::Error;

pub use complex::{Chain, Simplex, SimplicialComplex, Vertex};
pub use constructions::{
    barycentric_subdivision, cone, fresh_vertex, is_pseudomanifold, suspension, PseudomanifoldReport, Subdivision,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SimplicialError {
    #[error("a simplex needs at least one vertex")]
    EmptySimplex,
    #[error("vertex {0} is repeated in a simplex")]
    RepeatedVertex(Vertex),
    #[error("boundary degree {degree} out of range for a complex of dimension {dim:?}")]
    DegreeOutOfRange { degree: usize, dim: Option<usize> },
    #[error("apex {0} is already a vertex of the complex")]
    ApexCollision(Vertex),
    #[error("simplex {0} is not in the complex")]
    NotInComplex(Simplex),
    #[error("simplex {simplex} does not have degree {degree}")]
    WrongDegree { simplex: Simplex, degree: usize },
    #[error("empty complex")]
    EmptyComplex,
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn random_complex() -> impl Strategy<Value = SimplicialComplex> {
        proptest::collection::vec(proptest::collection::btree_set(0u32..7, 1..5), 1..7).prop_map(|sets| {
            SimplicialComplex::from_simplices(
                sets.into_iter()
                    .map(|s| Simplex::new(s.into_iter().collect()).unwrap()),
            )
        })
    }

    proptest! {
        #[test]
        fn constructed_complexes_are_face_closed_and_dd_zero(k in random_complex()) {
            let c = cone(&k, 100).unwrap();
            let s = suspension(&k, 100, 101).unwrap();
            let sd = barycentric_subdivision(&k).complex;
            for x in [&k, &c, &s, &sd] {
                for simplex in x.iter() {
                    for f in simplex.faces() {
                        prop_assert!(x.contains(&f));
                    }
                }
                prop_assert!(x.chain_complex().unwrap().validate().is_ok());
            }
            let n = c.dim().unwrap();
            let mut acyclic = crate::exactalg::Betti::new();
            acyclic.insert(0, 1);
            for d in 1..=n {
                acyclic.insert(d, 0);
            }
            prop_assert_eq!(c.betti().unwrap(), acyclic);
            prop_assert_eq!(sd.betti().unwrap(), k.betti().unwrap());
            prop_assert_eq!(s.euler_characteristic(), 2 - k.euler_characteristic());
        }
    }
}
