use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_traits::{One, Zero};

use super::SimplicialError;
use crate::exactalg::{Betti, GradedComplex, Rational, RationalMatrix};

/// Vertex identifier. Only the order matters.
pub type Vertex = u32;

/// Oriented simplex given by a strictly increasing vertex list.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex(Vec<Vertex>);

impl Simplex {
    /// Sorts the vertices; rejects an empty list or a repeated vertex.
    pub fn new(mut vertices: Vec<Vertex>) -> Result<Self, SimplicialError> {
        if vertices.is_empty() {
            return Err(SimplicialError::EmptySimplex);
        }
        vertices.sort_unstable();
        if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(SimplicialError::RepeatedVertex(w[0]));
        }
        Ok(Simplex(vertices))
    }

    pub fn vertex(v: Vertex) -> Self {
        Simplex(vec![v])
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        self.0.iter().all(|v| other.contains(*v))
    }

    /// Codimension-one faces; face `j` omits vertex `j` and carries sign `(-1)^j`.
    pub fn boundary_faces(&self) -> impl Iterator<Item = (Simplex, i64)> + '_ {
        let n = self.0.len();
        (0..if n > 1 { n } else { 0 }).map(move |j| {
            let mut f = self.0.clone();
            f.remove(j);
            (Simplex(f), if j % 2 == 0 { 1 } else { -1 })
        })
    }

    /// Every nonempty face, including the simplex itself.
    pub fn faces(&self) -> impl Iterator<Item = Simplex> + '_ {
        let n = self.0.len();
        (1u64..(1u64 << n)).map(move |mask| {
            Simplex(
                (0..n)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| self.0[i])
                    .collect(),
            )
        })
    }

    /// Join with a vertex not already present.
    pub fn with_vertex(&self, v: Vertex) -> Simplex {
        let mut vs = self.0.clone();
        let pos = vs.binary_search(&v).unwrap_err();
        vs.insert(pos, v);
        Simplex(vs)
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", vs.join(","))
    }
}

/// Finite face-closed simplicial complex. Simplices of each dimension are kept
/// in lexicographic order, which fixes the bases of all chain spaces.
#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    by_dim: Vec<Vec<Simplex>>,
    index: HashMap<Simplex, usize>,
}

impl SimplicialComplex {
    pub fn empty() -> Self {
        SimplicialComplex {
            by_dim: Vec::new(),
            index: HashMap::new(),
        }
    }

    /// Face closure of the given simplices.
    pub fn from_simplices<I: IntoIterator<Item = Simplex>>(simplices: I) -> Self {
        let mut all: BTreeSet<Simplex> = BTreeSet::new();
        for s in simplices {
            if all.contains(&s) {
                continue;
            }
            all.extend(s.faces());
        }
        Self::from_closed_set(all)
    }

    /// Convenience constructor from raw vertex lists.
    pub fn from_vertex_lists(lists: &[&[Vertex]]) -> Result<Self, SimplicialError> {
        let simplices = lists
            .iter()
            .map(|l| Simplex::new(l.to_vec()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_simplices(simplices))
    }

    fn from_closed_set(all: BTreeSet<Simplex>) -> Self {
        let mut by_dim: Vec<Vec<Simplex>> = Vec::new();
        for s in all {
            let d = s.dim();
            if by_dim.len() <= d {
                by_dim.resize(d + 1, Vec::new());
            }
            by_dim[d].push(s);
        }
        let index = by_dim
            .iter()
            .flat_map(|layer| layer.iter().enumerate().map(|(i, s)| (s.clone(), i)))
            .collect();
        SimplicialComplex { by_dim, index }
    }

    pub fn is_empty(&self) -> bool {
        self.by_dim.is_empty()
    }

    /// Dimension, or `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.by_dim.len().checked_sub(1)
    }

    /// Simplices of dimension `k` in canonical order.
    pub fn simplices(&self, k: usize) -> &[Simplex] {
        self.by_dim.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn count(&self, k: usize) -> usize {
        self.simplices(k).len()
    }

    /// All simplices, by dimension then lexicographically.
    pub fn iter(&self) -> impl Iterator<Item = &Simplex> {
        self.by_dim.iter().flatten()
    }

    pub fn len(&self) -> usize {
        self.index.len()
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        self.simplices(0).iter().map(|s| s.0[0]).collect()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.index.contains_key(s)
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.index.contains_key(&Simplex::vertex(v))
    }

    /// Position of `s` within the canonical basis of its dimension.
    pub fn index_of(&self, s: &Simplex) -> Option<usize> {
        self.index.get(s).copied()
    }

    /// Simplices that are not a proper face of another simplex.
    pub fn maximal_simplices(&self) -> Vec<Simplex> {
        let mut covered: BTreeSet<&Simplex> = BTreeSet::new();
        let mut faces_cache = Vec::new();
        for layer in self.by_dim.iter().skip(1) {
            for s in layer {
                faces_cache.extend(s.boundary_faces().map(|(f, _)| f));
            }
        }
        for f in &faces_cache {
            if let Some((k, _)) = self.index.get_key_value(f) {
                covered.insert(k);
            }
        }
        self.iter().filter(|s| !covered.contains(s)).cloned().collect()
    }

    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.iter().all(|s| other.contains(s))
    }

    pub fn union(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let all: BTreeSet<Simplex> = self.iter().chain(other.iter()).cloned().collect();
        Self::from_closed_set(all)
    }

    /// Largest dimension of a face of `s` lying in this complex.
    pub fn max_face_dim_within(&self, s: &Simplex) -> Option<usize> {
        if self.contains(s) {
            return Some(s.dim());
        }
        s.faces()
            .filter(|f| self.contains(f))
            .map(|f| f.dim())
            .max()
    }

    /// Matrix of `∂_i: C_i -> C_{i-1}` in the canonical bases.
    pub fn boundary_matrix(&self, i: usize) -> Result<RationalMatrix, SimplicialError> {
        let n = self.dim();
        if i == 0 || n.is_none_or(|n| i > n) {
            return Err(SimplicialError::DegreeOutOfRange {
                degree: i,
                dim: n,
            });
        }
        let mut m = RationalMatrix::zeros(self.count(i - 1), self.count(i));
        for (col, s) in self.simplices(i).iter().enumerate() {
            for (face, sign) in s.boundary_faces() {
                let row = self.index[&face];
                m.set(row, col, Rational::from_integer(sign.into()));
            }
        }
        Ok(m)
    }

    /// Simplicial chain complex over ℚ in degrees `0..=dim`.
    pub fn chain_complex(&self) -> Result<GradedComplex, SimplicialError> {
        let n = self.dim().ok_or(SimplicialError::EmptyComplex)?;
        let dims = (0..=n).map(|k| self.count(k)).collect();
        let boundaries = (1..=n)
            .map(|i| self.boundary_matrix(i))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(GradedComplex::chain(0, dims, boundaries).expect("simplicial boundaries have matching shapes"))
    }

    /// Simplicial cochain complex over ℚ; the coboundaries are the transposed boundaries.
    pub fn cochain_complex(&self) -> Result<GradedComplex, SimplicialError> {
        Ok(self.chain_complex()?.dual())
    }

    pub fn betti(&self) -> Result<Betti, SimplicialError> {
        Ok(self.chain_complex()?.betti().expect("simplicial boundary squares to zero"))
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.by_dim
            .iter()
            .enumerate()
            .map(|(k, l)| if k % 2 == 0 { l.len() as i64 } else { -(l.len() as i64) })
            .sum()
    }

    /// Cofaces of each simplex of dimension `k`, counted among dimension `k + 1`.
    pub(crate) fn coface_counts(&self, k: usize) -> Vec<usize> {
        let mut counts = vec![0; self.count(k)];
        for s in self.simplices(k + 1) {
            for (f, _) in s.boundary_faces() {
                counts[self.index[&f]] += 1;
            }
        }
        counts
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let counts: Vec<usize> = self.by_dim.iter().map(Vec::len).collect();
        write!(f, "SimplicialComplex(f-vector {counts:?})")
    }
}

/// Finitely supported ℚ-chain of a fixed degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    degree: usize,
    coefficients: BTreeMap<Simplex, Rational>,
}

impl Chain {
    pub fn zero(degree: usize) -> Self {
        Chain {
            degree,
            coefficients: BTreeMap::new(),
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (Simplex, Rational)>>(
        degree: usize,
        terms: I,
        complex: &SimplicialComplex,
    ) -> Result<Self, SimplicialError> {
        let mut c = Chain::zero(degree);
        for (s, v) in terms {
            if s.dim() != degree {
                return Err(SimplicialError::WrongDegree {
                    simplex: s,
                    degree,
                });
            }
            if !complex.contains(&s) {
                return Err(SimplicialError::NotInComplex(s));
            }
            c.add_term(s, v);
        }
        Ok(c)
    }

    fn add_term(&mut self, s: Simplex, v: Rational) {
        let e = self.coefficients.entry(s.clone()).or_insert_with(Rational::zero);
        *e += v;
        if e.is_zero() {
            self.coefficients.remove(&s);
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coefficient(&self, s: &Simplex) -> Rational {
        self.coefficients.get(s).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Simplex, &Rational)> {
        self.coefficients.iter()
    }

    /// Simplices with nonzero coefficient.
    pub fn support(&self) -> impl Iterator<Item = &Simplex> {
        self.coefficients.keys()
    }

    /// Closure of the support as a subcomplex.
    pub fn support_closure(&self) -> SimplicialComplex {
        SimplicialComplex::from_simplices(self.coefficients.keys().cloned())
    }

    pub fn boundary(&self) -> Chain {
        let mut out = Chain::zero(self.degree.saturating_sub(1));
        if self.degree == 0 {
            return out;
        }
        for (s, v) in &self.coefficients {
            for (f, sign) in s.boundary_faces() {
                let term = if sign > 0 { v.clone() } else { -v.clone() };
                out.add_term(f, term);
            }
        }
        out
    }

    /// Coordinate vector in the canonical basis of `C_degree(complex)`.
    pub fn to_vector(&self, complex: &SimplicialComplex) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); complex.count(self.degree)];
        for (s, c) in &self.coefficients {
            v[complex.index_of(s).expect("chain lives in the complex")] = c.clone();
        }
        v
    }

    pub fn from_vector(degree: usize, v: &[Rational], complex: &SimplicialComplex) -> Chain {
        let mut c = Chain::zero(degree);
        for (s, x) in complex.simplices(degree).iter().zip(v) {
            if !x.is_zero() {
                c.coefficients.insert(s.clone(), x.clone());
            }
        }
        c
    }

    /// Chain with coefficient one on each listed simplex.
    pub fn sum_of(degree: usize, simplices: &[Simplex]) -> Chain {
        let mut c = Chain::zero(degree);
        for s in simplices {
            c.add_term(s.clone(), Rational::one());
        }
        c
    }
}
