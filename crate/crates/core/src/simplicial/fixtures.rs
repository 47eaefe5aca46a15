//! Standard small triangulations used as test spaces.

use super::complex::{Simplex, SimplicialComplex, Vertex};

fn closure(lists: Vec<Vec<Vertex>>) -> SimplicialComplex {
    SimplicialComplex::from_simplices(
        lists
            .into_iter()
            .map(|l| Simplex::new(l).expect("fixture simplices are valid")),
    )
}

pub fn point() -> SimplicialComplex {
    closure(vec![vec![0]])
}

/// Boundary of a triangle: 3 vertices, 3 edges.
pub fn hollow_triangle() -> SimplicialComplex {
    closure(vec![vec![0, 1], vec![1, 2], vec![0, 2]])
}

/// The `n`-simplex on vertices `0..=n` with all its faces.
pub fn full_simplex(n: usize) -> SimplicialComplex {
    closure(vec![(0..=n as Vertex).collect()])
}

/// Cycle on `len` vertices starting at `first`.
pub fn cycle(first: Vertex, len: Vertex) -> SimplicialComplex {
    closure(
        (0..len)
            .map(|i| vec![first + i, first + (i + 1) % len])
            .collect(),
    )
}

/// Circle triangulated as a hexagon on vertices `0..6`.
pub fn hexagon() -> SimplicialComplex {
    cycle(0, 6)
}

/// Two disjoint hexagons on vertices `0..6` and `6..12`.
pub fn two_hexagons() -> SimplicialComplex {
    hexagon().union(&cycle(6, 6))
}

/// Seven-vertex torus: triangles `{i, i+1, i+3}` and `{i, i+2, i+3}` mod 7.
pub fn torus7() -> SimplicialComplex {
    let mut tris = Vec::new();
    for i in 0..7 {
        tris.push(vec![i, (i + 1) % 7, (i + 3) % 7]);
        tris.push(vec![i, (i + 2) % 7, (i + 3) % 7]);
    }
    closure(tris)
}

/// Boundary of the tetrahedron, a 2-sphere.
pub fn sphere2() -> SimplicialComplex {
    closure(vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Betti;
    use crate::simplicial::is_pseudomanifold;

    #[test]
    fn torus_is_a_torus() {
        let t = torus7();
        assert_eq!((t.count(0), t.count(1), t.count(2)), (7, 21, 14));
        assert_eq!(t.betti().unwrap(), Betti::from([(0, 1), (1, 2), (2, 1)]));
        assert!(is_pseudomanifold(&t).is_pseudomanifold);
    }

    #[test]
    fn small_spaces() {
        assert_eq!(point().betti().unwrap(), Betti::from([(0, 1)]));
        assert_eq!(hexagon().betti().unwrap(), Betti::from([(0, 1), (1, 1)]));
        assert_eq!(two_hexagons().betti().unwrap(), Betti::from([(0, 2), (1, 2)]));
        assert_eq!(sphere2().betti().unwrap(), Betti::from([(0, 1), (1, 0), (2, 1)]));
        assert_eq!(full_simplex(3).betti().unwrap(), Betti::from([(0, 1), (1, 0), (2, 0), (3, 0)]));
    }
}
