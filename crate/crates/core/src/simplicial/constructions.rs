use std::collections::BTreeSet;

use super::complex::{Simplex, SimplicialComplex, Vertex};
use super::SimplicialError;

/// Cone with the given apex: `K ∪ {σ ∪ {apex}} ∪ {apex}`.
pub fn cone(k: &SimplicialComplex, apex: Vertex) -> Result<SimplicialComplex, SimplicialError> {
    if k.contains_vertex(apex) {
        return Err(SimplicialError::ApexCollision(apex));
    }
    let mut simplices: Vec<Simplex> = k.maximal_simplices();
    let joined: Vec<Simplex> = simplices.iter().map(|s| s.with_vertex(apex)).collect();
    simplices.extend(joined);
    simplices.push(Simplex::vertex(apex));
    Ok(SimplicialComplex::from_simplices(simplices))
}

/// Union of two cones over `K` glued along `K`.
pub fn suspension(
    k: &SimplicialComplex,
    north: Vertex,
    south: Vertex,
) -> Result<SimplicialComplex, SimplicialError> {
    if north == south {
        return Err(SimplicialError::ApexCollision(north));
    }
    Ok(cone(k, north)?.union(&cone(k, south)?))
}

/// First barycentric subdivision together with the carrier of each new vertex.
#[derive(Clone, Debug)]
pub struct Subdivision {
    pub complex: SimplicialComplex,
    /// `carriers[v]` is the simplex of the original complex whose barycentre is vertex `v`.
    pub carriers: Vec<Simplex>,
}

impl Subdivision {
    pub fn carrier(&self, v: Vertex) -> &Simplex {
        &self.carriers[v as usize]
    }

    /// Smallest original simplex containing every carrier of `s`.
    pub fn carrier_of(&self, s: &Simplex) -> Simplex {
        let mut vs: BTreeSet<Vertex> = BTreeSet::new();
        for v in s.vertices() {
            vs.extend(self.carrier(*v).vertices().iter().copied());
        }
        Simplex::new(vs.into_iter().collect()).expect("carriers are nonempty")
    }
}

/// Vertices of the subdivision are the simplices of `K` numbered in canonical
/// order; its simplices are the chains `σ_0 < σ_1 < ... < σ_k` of faces.
pub fn barycentric_subdivision(k: &SimplicialComplex) -> Subdivision {
    let carriers: Vec<Simplex> = k.iter().cloned().collect();
    let id_of = |s: &Simplex| -> Vertex {
        let offset: usize = (0..s.dim()).map(|d| k.count(d)).sum();
        (offset + k.index_of(s).expect("face of a simplex in the complex")) as Vertex
    };
    let mut flags = Vec::new();
    for top in k.maximal_simplices() {
        // Each ordering of the vertices gives one maximal flag.
        let mut order: Vec<Vertex> = top.vertices().to_vec();
        permutations(&mut order, 0, &mut |perm| {
            let ids: Vec<Vertex> = (1..=perm.len())
                .map(|len| {
                    let face = Simplex::new(perm[..len].to_vec()).expect("distinct vertices");
                    id_of(&face)
                })
                .collect();
            flags.push(Simplex::new(ids).expect("flag members are distinct"));
        });
    }
    Subdivision {
        complex: SimplicialComplex::from_simplices(flags),
        carriers,
    }
}

fn permutations<F: FnMut(&[Vertex])>(items: &mut Vec<Vertex>, start: usize, f: &mut F) {
    if start == items.len() {
        f(items);
        return;
    }
    for i in start..items.len() {
        items.swap(start, i);
        permutations(items, start + 1, f);
        items.swap(start, i);
    }
}

/// Outcome of the pseudomanifold test, naming the offending simplices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudomanifoldReport {
    pub is_pseudomanifold: bool,
    pub dim: Option<usize>,
    /// Maximal simplices of dimension below `dim`.
    pub not_pure: Vec<Simplex>,
    /// `(n-1)`-simplices whose number of `n`-dimensional cofaces is not two.
    pub bad_ridges: Vec<(Simplex, usize)>,
}

/// Dimensionally homogeneous, and every `(n-1)`-simplex has exactly two cofaces.
pub fn is_pseudomanifold(k: &SimplicialComplex) -> PseudomanifoldReport {
    let Some(n) = k.dim() else {
        return PseudomanifoldReport {
            is_pseudomanifold: false,
            dim: None,
            not_pure: Vec::new(),
            bad_ridges: Vec::new(),
        };
    };
    let not_pure: Vec<Simplex> = k
        .maximal_simplices()
        .into_iter()
        .filter(|s| s.dim() < n)
        .collect();
    let bad_ridges: Vec<(Simplex, usize)> = if n == 0 {
        Vec::new()
    } else {
        k.coface_counts(n - 1)
            .into_iter()
            .zip(k.simplices(n - 1))
            .filter(|(c, _)| *c != 2)
            .map(|(c, s)| (s.clone(), c))
            .collect()
    };
    PseudomanifoldReport {
        is_pseudomanifold: not_pure.is_empty() && bad_ridges.is_empty(),
        dim: Some(n),
        not_pure,
        bad_ridges,
    }
}

/// Smallest vertex id not used by `k`, for choosing cone apexes.
pub fn fresh_vertex(k: &SimplicialComplex) -> Vertex {
    k.vertices().last().map_or(0, |v| v + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Betti;
    use crate::simplicial::fixtures;

    #[test]
    fn cone_over_hexagon_counts() {
        let c = cone(&fixtures::hexagon(), 6).unwrap();
        assert_eq!((c.count(0), c.count(1), c.count(2)), (7, 12, 6));
        assert_eq!(c.euler_characteristic(), 1);
        assert_eq!(
            cone(&fixtures::hexagon(), 3),
            Err(SimplicialError::ApexCollision(3))
        );
    }

    #[test]
    fn cone_over_torus_is_acyclic() {
        let t = fixtures::torus7();
        let c = cone(&t, fresh_vertex(&t)).unwrap();
        assert_eq!(c.betti().unwrap(), Betti::from([(0, 1), (1, 0), (2, 0), (3, 0)]));
    }

    #[test]
    fn suspensions() {
        let s0 = SimplicialComplex::from_vertex_lists(&[&[0], &[1]]).unwrap();
        let square = suspension(&s0, 2, 3).unwrap();
        assert_eq!(square.betti().unwrap(), Betti::from([(0, 1), (1, 1)]));
        let s2 = suspension(&fixtures::hexagon(), 6, 7).unwrap();
        assert_eq!(s2.betti().unwrap(), Betti::from([(0, 1), (1, 0), (2, 1)]));
        assert_eq!(s2.euler_characteristic(), 2 - fixtures::hexagon().euler_characteristic());
        assert!(suspension(&s0, 1, 5).is_err());
        assert!(suspension(&s0, 5, 5).is_err());
    }

    #[test]
    fn subdivision_examples() {
        let edge = SimplicialComplex::from_vertex_lists(&[&[0, 1]]).unwrap();
        let sd = barycentric_subdivision(&edge);
        assert_eq!((sd.complex.count(0), sd.complex.count(1)), (3, 2));
        assert_eq!(sd.carrier(2), &Simplex::new(vec![0, 1]).unwrap());

        let tri = fixtures::full_simplex(2);
        let sd = barycentric_subdivision(&tri);
        assert_eq!(sd.complex.euler_characteristic(), 1);
        assert_eq!(sd.complex.count(2), 6);
        for s in sd.complex.simplices(2) {
            assert_eq!(sd.carrier_of(s), Simplex::new(vec![0, 1, 2]).unwrap());
        }

        let hollow = fixtures::hollow_triangle();
        let sd = barycentric_subdivision(&hollow);
        assert_eq!(sd.complex.betti().unwrap(), Betti::from([(0, 1), (1, 1)]));
    }

    #[test]
    fn pseudomanifold_examples() {
        assert!(is_pseudomanifold(&fixtures::hollow_triangle()).is_pseudomanifold);
        let full = is_pseudomanifold(&fixtures::full_simplex(2));
        assert!(!full.is_pseudomanifold);
        assert_eq!(full.bad_ridges.len(), 3);
        assert!(full.bad_ridges.iter().all(|(_, c)| *c == 1));
        assert!(is_pseudomanifold(&fixtures::torus7()).is_pseudomanifold);
        let mixed = SimplicialComplex::from_vertex_lists(&[&[0, 1, 2], &[2, 3]]).unwrap();
        let r = is_pseudomanifold(&mixed);
        assert_eq!(r.not_pure, vec![Simplex::new(vec![2, 3]).unwrap()]);
    }
}
