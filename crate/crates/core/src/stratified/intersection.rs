use num_traits::{One, Zero};

use super::filtration::FilteredComplex;
use super::perversity::Perversity;
use super::StratifiedError;
use crate::exactalg::{kernel, rank, Betti, GradedComplex, Rational, RationalMatrix};
use crate::simplicial::{Chain, Simplex, SimplicialComplex};

/// `dim(σ̄ ∩ X_{n-j}) <= i - j + bound[j]` for every `2 <= j <= n`, with
/// `dim(∅) = -∞`. `bounds` is indexed by codimension and may hold values
/// outside the perversity axioms.
fn allowable_with_bounds(sigma: &Simplex, i: usize, bounds: &[i64], f: &FilteredComplex) -> bool {
    let n = f.n();
    (2..=n).all(|j| match f.skeleton(n - j).max_face_dim_within(sigma) {
        None => true,
        Some(d) => (d as i64) <= i as i64 - j as i64 + bounds[j],
    })
}

fn check_dimension(f: &FilteredComplex, bounds: &[i64]) -> Result<(), StratifiedError> {
    if bounds.len() != f.n() + 1 {
        return Err(StratifiedError::DimensionMismatch {
            perversity: bounds.len().saturating_sub(1),
            complex: f.n(),
        });
    }
    Ok(())
}

/// Whether the closed simplex `σ` is allowable as part of an `i`-chain.
/// The chain degree `i` may differ from `dim σ`.
pub fn simplex_allowable(
    sigma: &Simplex,
    i: usize,
    p: &Perversity,
    f: &FilteredComplex,
) -> Result<bool, StratifiedError> {
    check_dimension(f, p.values())?;
    if !f.ambient().contains(sigma) {
        return Err(StratifiedError::NotInComplex(sigma.clone()));
    }
    Ok(allowable_with_bounds(sigma, i, p.values(), f))
}

/// Allowability of a whole chain, computed on the closure of its support.
pub fn chain_allowable(chain: &Chain, p: &Perversity, f: &FilteredComplex) -> Result<bool, StratifiedError> {
    check_dimension(f, p.values())?;
    let support = chain.support_closure();
    if let Some(s) = support.iter().find(|s| !f.ambient().contains(s)) {
        return Err(StratifiedError::NotInComplex(s.clone()));
    }
    let n = f.n();
    let i = chain.degree() as i64;
    Ok((2..=n).all(|j| {
        let stratum = f.skeleton(n - j);
        let meet = support.iter().filter(|s| stratum.contains(s)).map(|s| s.dim()).max();
        meet.is_none_or(|d| d as i64 <= i - j as i64 + p.get(j))
    }))
}

/// The intersection chain complex `IC^p̄_*` as subspaces of the simplicial
/// chain spaces, with the induced boundaries.
#[derive(Clone, Debug)]
pub struct IntersectionComplex {
    bounds: Vec<i64>,
    ambient: SimplicialComplex,
    /// `allowable[i][k]`: simplex `k` of dimension `i` is allowable in degree `i`.
    allowable: Vec<Vec<bool>>,
    /// Basis of `IC_i`, each vector in the canonical basis of `C_i`.
    bases: Vec<Vec<Vec<Rational>>>,
    /// Positions in `C_i` at which the basis of `IC_i` is the identity.
    coordinates: Vec<Vec<usize>>,
    /// Induced boundary `IC_i -> IC_{i-1}` for `i >= 1`, stored at index `i - 1`.
    boundaries: Vec<RationalMatrix>,
}

impl IntersectionComplex {
    pub fn n(&self) -> usize {
        self.bases.len() - 1
    }

    /// Perversity values the complex was built with.
    pub fn bounds(&self) -> &[i64] {
        &self.bounds
    }

    pub fn dim(&self, i: usize) -> usize {
        self.bases.get(i).map_or(0, Vec::len)
    }

    pub fn basis(&self, i: usize) -> &[Vec<Rational>] {
        &self.bases[i]
    }

    pub fn basis_chains(&self, i: usize) -> Vec<Chain> {
        self.bases[i]
            .iter()
            .map(|v| Chain::from_vector(i, v, &self.ambient))
            .collect()
    }

    /// Basis of `IC_i` as the columns of a `dim C_i x dim IC_i` matrix.
    pub fn basis_matrix(&self, i: usize) -> RationalMatrix {
        RationalMatrix::from_columns(self.ambient.count(i), &self.bases[i])
    }

    pub fn allowable_simplices(&self, i: usize) -> Vec<&Simplex> {
        self.ambient
            .simplices(i)
            .iter()
            .zip(&self.allowable[i])
            .filter(|(_, &a)| a)
            .map(|(s, _)| s)
            .collect()
    }

    /// Positions in `C_i` where the basis of `IC_i` restricts to the identity.
    pub fn coordinate_positions(&self, i: usize) -> &[usize] {
        &self.coordinates[i]
    }

    pub fn induced_boundary(&self, i: usize) -> &RationalMatrix {
        &self.boundaries[i - 1]
    }

    pub fn to_graded(&self) -> GradedComplex {
        let dims = (0..=self.n()).map(|i| self.dim(i)).collect();
        GradedComplex::chain(0, dims, self.boundaries.clone()).expect("induced boundaries have matching shapes")
    }

    pub fn betti(&self) -> Result<Betti, StratifiedError> {
        self.to_graded()
            .betti()
            .map_err(|e| StratifiedError::Internal(format!("intersection complex: {e}")))
    }

    /// Whether `IC_i` of `self` is a subspace of `IC_i` of `other`.
    pub fn is_subspace_of(&self, other: &IntersectionComplex, i: usize) -> bool {
        let mine = self.basis_matrix(i);
        let theirs = other.basis_matrix(i);
        rank(&theirs.hstack(&mine)) == rank(&theirs)
    }
}

/// `IC^p̄_*(F)`.
pub fn intersection_chain_complex(f: &FilteredComplex, p: &Perversity) -> Result<IntersectionComplex, StratifiedError> {
    check_dimension(f, p.values())?;
    intersection_complex_with_bounds(f, p.values())
}

/// Intersection chain complex for an arbitrary vector of allowability bounds,
/// including values outside the perversity axioms.
pub fn intersection_complex_with_bounds(
    f: &FilteredComplex,
    bounds: &[i64],
) -> Result<IntersectionComplex, StratifiedError> {
    check_dimension(f, bounds)?;
    let k = f.ambient();
    let n = f.n();
    let allowable: Vec<Vec<bool>> = (0..=n)
        .map(|i| {
            k.simplices(i)
                .iter()
                .map(|s| allowable_with_bounds(s, i, bounds, f))
                .collect()
        })
        .collect();

    let mut bases = Vec::with_capacity(n + 1);
    let mut coordinates = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let good: Vec<usize> = (0..k.count(i)).filter(|&c| allowable[i][c]).collect();
        if i == 0 {
            let basis = good
                .iter()
                .map(|&c| {
                    let mut v = vec![Rational::zero(); k.count(0)];
                    v[c] = Rational::one();
                    v
                })
                .collect();
            bases.push(basis);
            coordinates.push(good);
            continue;
        }
        // IC_i = A_i ∩ ∂⁻¹(A_{i-1}): allowable chains whose boundary has no
        // weight on non-allowable (i-1)-simplices.
        let bad: Vec<usize> = (0..k.count(i - 1)).filter(|&r| !allowable[i - 1][r]).collect();
        let d = k.boundary_matrix(i).map_err(|e| StratifiedError::Internal(e.to_string()))?;
        let constraint = d.select_rows(&bad).select_cols(&good);
        let ker = kernel(&constraint);
        let basis: Vec<Vec<Rational>> = ker
            .basis
            .iter()
            .map(|local| {
                let mut v = vec![Rational::zero(); k.count(i)];
                for (pos, &c) in good.iter().enumerate() {
                    v[c] = local[pos].clone();
                }
                v
            })
            .collect();
        bases.push(basis);
        coordinates.push(ker.free_columns.iter().map(|&fc| good[fc]).collect());
    }

    let mut boundaries = Vec::with_capacity(n);
    for i in 1..=n {
        let d = k.boundary_matrix(i).map_err(|e| StratifiedError::Internal(e.to_string()))?;
        let lower = RationalMatrix::from_columns(k.count(i - 1), &bases[i - 1]);
        let mut induced = RationalMatrix::zeros(bases[i - 1].len(), bases[i].len());
        for (col, z) in bases[i].iter().enumerate() {
            let image = d.mul_vec(z);
            let coords: Vec<Rational> = coordinates[i - 1].iter().map(|&c| image[c].clone()).collect();
            if lower.mul_vec(&coords) != image {
                return Err(StratifiedError::Internal(format!(
                    "boundary of an IC_{i} basis chain left IC_{}",
                    i - 1
                )));
            }
            for (row, v) in coords.into_iter().enumerate() {
                induced.set(row, col, v);
            }
        }
        boundaries.push(induced);
    }

    Ok(IntersectionComplex {
        bounds: bounds.to_vec(),
        ambient: k.clone(),
        allowable,
        bases,
        coordinates,
        boundaries,
    })
}

/// Ranks of `IH^p̄_*(F)` in degrees `0..=n`.
pub fn intersection_betti(f: &FilteredComplex, p: &Perversity) -> Result<Betti, StratifiedError> {
    intersection_chain_complex(f, p)?.betti()
}

pub fn intersection_betti_with_bounds(f: &FilteredComplex, bounds: &[i64]) -> Result<Betti, StratifiedError> {
    intersection_complex_with_bounds(f, bounds)?.betti()
}

/// Local cone calculation: `IH_i(cL) = H_i(L)` for `i < n - p_n - 1`, else 0,
/// reported in degrees `0..=n`.
pub fn cone_formula_expected(link_betti: &Betti, n: usize, p_n: i64) -> Betti {
    let cutoff = n as i64 - p_n - 1;
    (0..=n)
        .map(|i| {
            let v = if (i as i64) < cutoff {
                link_betti.get(&i).copied().unwrap_or(0)
            } else {
                0
            };
            (i, v)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::int;
    use crate::simplicial::fixtures;

    fn s(v: &[u32]) -> Simplex {
        Simplex::new(v.to_vec()).unwrap()
    }

    #[test]
    fn allowability_on_cone_over_hexagon() {
        let f = FilteredComplex::cone_over(&fixtures::hexagon()).unwrap();
        let zero = Perversity::zero(2);
        assert!(!simplex_allowable(&s(&[6]), 0, &zero, &f).unwrap());
        assert!(simplex_allowable(&s(&[0, 1, 6]), 2, &zero, &f).unwrap());
        assert!(!simplex_allowable(&s(&[0, 6]), 1, &zero, &f).unwrap());
        assert!(simplex_allowable(&s(&[0, 1]), 1, &zero, &f).unwrap());
        assert!(matches!(
            simplex_allowable(&s(&[0, 3]), 1, &zero, &f),
            Err(StratifiedError::NotInComplex(_))
        ));
    }

    #[test]
    fn cone_over_hexagon_complex() {
        let f = FilteredComplex::cone_over(&fixtures::hexagon()).unwrap();
        let ic = intersection_chain_complex(&f, &Perversity::zero(2)).unwrap();
        // IC_0: the six link vertices.
        assert_eq!(ic.dim(0), 6);
        assert!(ic.allowable_simplices(0).iter().all(|v| !v.contains(6)));
        // IC_1: only the six link edges survive.
        assert_eq!(ic.dim(1), 6);
        assert!(ic.allowable_simplices(1).iter().all(|e| !e.contains(6)));
        // Every triangle is allowable, but only their oriented sum has an
        // allowable boundary.
        assert_eq!(ic.allowable_simplices(2).len(), 6);
        assert_eq!(ic.dim(2), 1);
        assert_eq!(ic.betti().unwrap(), Betti::from([(0, 1), (1, 0), (2, 0)]));
    }

    #[test]
    fn empty_singular_set_gives_ordinary_chains() {
        let t = fixtures::torus7();
        let f = FilteredComplex::trivial(t.clone()).unwrap();
        for p in Perversity::all(2) {
            let ic = intersection_chain_complex(&f, &p).unwrap();
            for i in 0..=2 {
                assert_eq!(ic.dim(i), t.count(i));
            }
            assert_eq!(ic.betti().unwrap(), t.betti().unwrap());
        }
    }

    #[test]
    fn cone_over_torus() {
        let f = FilteredComplex::cone_over(&fixtures::torus7()).unwrap();
        let p0 = Perversity::new(vec![0, 0, 0, 0]).unwrap();
        let p1 = Perversity::new(vec![0, 0, 0, 1]).unwrap();
        assert_eq!(
            intersection_betti(&f, &p0).unwrap(),
            Betti::from([(0, 1), (1, 2), (2, 0), (3, 0)])
        );
        assert_eq!(
            intersection_betti(&f, &p1).unwrap(),
            Betti::from([(0, 1), (1, 0), (2, 0), (3, 0)])
        );
    }

    #[test]
    fn cone_formula_examples() {
        let s1 = Betti::from([(0, 1), (1, 1)]);
        let t2 = Betti::from([(0, 1), (1, 2), (2, 1)]);
        assert_eq!(cone_formula_expected(&s1, 2, 0), Betti::from([(0, 1), (1, 0), (2, 0)]));
        assert_eq!(
            cone_formula_expected(&t2, 3, 0),
            Betti::from([(0, 1), (1, 2), (2, 0), (3, 0)])
        );
        assert_eq!(
            cone_formula_expected(&t2, 3, 1),
            Betti::from([(0, 1), (1, 0), (2, 0), (3, 0)])
        );
    }

    #[test]
    fn chain_allowability_uses_support() {
        let f = FilteredComplex::cone_over(&fixtures::hexagon()).unwrap();
        let zero = Perversity::zero(2);
        let c = Chain::from_terms(1, [(s(&[0, 1]), int(1)), (s(&[0, 6]), int(2))], f.ambient()).unwrap();
        assert!(!chain_allowable(&c, &zero, &f).unwrap());
        let c = Chain::from_terms(1, [(s(&[0, 1]), int(1))], f.ambient()).unwrap();
        assert!(chain_allowable(&c, &zero, &f).unwrap());
    }

    #[test]
    fn dimension_mismatch() {
        let f = FilteredComplex::cone_over(&fixtures::hexagon()).unwrap();
        assert!(matches!(
            intersection_betti(&f, &Perversity::zero(3)),
            Err(StratifiedError::DimensionMismatch { perversity: 3, complex: 2 })
        ));
    }
}
