use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;

use super::algebra::FiniteAlgebra;
use super::hochschild::{boundary_matrix, connes_matrix, Normalization, TensorBasis};
use super::CyclicError;
use crate::exactalg::{nullity, rank, Betti, Direction, GradedComplex, Rational, RationalMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Identity {
    /// `b∘b = 0`.
    BSquared,
    /// `B∘B = 0`.
    BigBSquared,
    /// `bB + Bb = 0`.
    Anticommute,
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Identity::BSquared => "bb=0",
            Identity::BigBSquared => "BB=0",
            Identity::Anticommute => "bB+Bb=0",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub identity: Identity,
    /// Source degree of the composite.
    pub degree: usize,
    pub holds: bool,
}

/// Graded space `M_0, ..., M_K` with `b: M_k -> M_{k-1}` and `B: M_k -> M_{k+1}`.
#[derive(Clone, Debug)]
pub struct MixedComplex {
    dims: Vec<usize>,
    /// `b[k]` is `b_k`; `b[0]` is the zero map to nothing.
    b: Vec<RationalMatrix>,
    /// `big_b[k]` is `B_k` for `k < K`.
    big_b: Vec<RationalMatrix>,
}

impl MixedComplex {
    /// `b` holds `b_1..b_K`, `big_b` holds `B_0..B_{K-1}`. Shapes and the three
    /// identities are checked.
    pub fn new(dims: Vec<usize>, b: Vec<RationalMatrix>, big_b: Vec<RationalMatrix>) -> Result<Self, CyclicError> {
        if dims.is_empty() || b.len() + 1 != dims.len() || big_b.len() + 1 != dims.len() {
            return Err(CyclicError::Shape(format!(
                "{} degrees need {} maps of each kind, got {} and {}",
                dims.len(),
                dims.len().saturating_sub(1),
                b.len(),
                big_b.len()
            )));
        }
        for (k, m) in b.iter().enumerate() {
            let k = k + 1;
            if m.shape() != (dims[k - 1], dims[k]) {
                return Err(CyclicError::Shape(format!("b_{k} has shape {:?}", m.shape())));
            }
        }
        for (k, m) in big_b.iter().enumerate() {
            if m.shape() != (dims[k + 1], dims[k]) {
                return Err(CyclicError::Shape(format!("B_{k} has shape {:?}", m.shape())));
            }
        }
        let mut all_b = vec![RationalMatrix::zeros(0, dims[0])];
        all_b.extend(b);
        let m = MixedComplex { dims, b: all_b, big_b };
        if let Some(c) = m.identity_checks().into_iter().find(|c| !c.holds) {
            return Err(CyclicError::NotMixed {
                identity: c.identity,
                degree: c.degree,
            });
        }
        Ok(m)
    }

    /// Truncation degree `K`.
    pub fn top(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dim(&self, k: usize) -> usize {
        self.dims.get(k).copied().unwrap_or(0)
    }

    pub fn b(&self, k: usize) -> &RationalMatrix {
        &self.b[k]
    }

    pub fn big_b(&self, k: usize) -> &RationalMatrix {
        &self.big_b[k]
    }

    /// Every composite that fits inside the truncation.
    pub fn identity_checks(&self) -> Vec<IdentityCheck> {
        let top = self.top();
        let mut out = Vec::new();
        for k in 2..=top {
            out.push(IdentityCheck {
                identity: Identity::BSquared,
                degree: k,
                holds: self.b[k - 1].mul(&self.b[k]).is_zero(),
            });
        }
        for k in 0..top.saturating_sub(1) {
            out.push(IdentityCheck {
                identity: Identity::BigBSquared,
                degree: k,
                holds: self.big_b[k + 1].mul(&self.big_b[k]).is_zero(),
            });
        }
        for k in 0..top {
            let mut s = self.b[k + 1].mul(&self.big_b[k]);
            if k >= 1 {
                s = s.add(&self.big_b[k - 1].mul(&self.b[k]));
            }
            out.push(IdentityCheck {
                identity: Identity::Anticommute,
                degree: k,
                holds: s.is_zero(),
            });
        }
        out
    }

    /// The `(M, b)` chain complex.
    pub fn hochschild_complex(&self) -> GradedComplex {
        GradedComplex::chain(0, self.dims.clone(), self.b[1..].to_vec()).expect("shapes checked")
    }

    /// `H_*(M, b)` in degrees `0..K`.
    pub fn hochschild_betti(&self) -> Betti {
        let ranks: Vec<usize> = self.b.iter().map(rank).collect();
        (0..self.top())
            .map(|k| (k, self.dims[k] - ranks[k] - ranks[k + 1]))
            .collect()
    }

    /// Total complex of the bicomplex `M[u]` in degrees `0..=K`:
    /// `Tot_n = M_n ⊕ M_{n-2} ⊕ ...` with `(x_0, x_1, ...) ↦ (b x_0 + B x_1, b x_1 + B x_2, ...)`.
    pub fn total_complex(&self) -> TotalComplex {
        TotalComplex::new(self)
    }

    /// Cyclic betti numbers in degrees `0..K`.
    pub fn cyclic_betti(&self) -> Betti {
        let tot = self.total_complex();
        let ranks: Vec<usize> = (0..=self.top()).map(|n| rank(&tot.differentials[n])).collect();
        (0..self.top())
            .map(|n| (n, tot.dim(n) - ranks[n] - ranks[n + 1]))
            .collect()
    }

    /// Rank of `S: HC_n -> HC_{n-2}` for `2 <= n <= K`.
    pub fn periodicity_ranks(&self) -> BTreeMap<usize, usize> {
        let tot = self.total_complex();
        (2..=self.top())
            .map(|n| (n, induced_rank(&tot.differentials[n], &tot.shift(n), &tot.differentials[n - 1])))
            .collect()
    }

    /// Stable images of `S` on even and odd degrees.
    pub fn periodic_betti(&self) -> Periodic {
        let ranks = self.periodicity_ranks();
        let stable = |parity: usize| {
            let mut rs = ranks.iter().filter(|(n, _)| *n % 2 == parity).map(|(_, r)| *r).rev();
            match (rs.next(), rs.next()) {
                (Some(a), Some(b)) if a == b => Some(a),
                _ => None,
            }
        };
        Periodic {
            even: stable(0),
            odd: stable(1),
            ranks,
        }
    }

    /// Rank-exactness of `... -> HH_n -I-> HC_n -S-> HC_{n-2} -B-> HH_{n-1} -> ...`
    /// at every node of degree `<= K - 2`.
    pub fn sbi_check(&self) -> Result<SbiReport, CyclicError> {
        let top = self.top();
        if top < 3 {
            return Err(CyclicError::Truncation { top, min: 3 });
        }
        let tot = self.total_complex();
        let last = top - 2;
        let hh: Vec<usize> = (0..=last)
            .map(|n| nullity(&self.b[n]) - rank(&self.b[n + 1]))
            .collect();
        let hc: Vec<usize> = (0..=last)
            .map(|n| nullity(&tot.differentials[n]) - rank(&tot.differentials[n + 1]))
            .collect();
        // I_n: M_n -> Tot_n.
        let i_rank: Vec<usize> = (0..=last)
            .map(|n| induced_rank(&self.b[n], &tot.inclusion(n), &tot.differentials[n + 1]))
            .collect();
        // S_n: Tot_n -> Tot_{n-2}, for 2 <= n <= last + 2.
        let s_rank = |n: usize| -> usize {
            if n < 2 {
                0
            } else {
                induced_rank(&tot.differentials[n], &tot.shift(n), &tot.differentials[n - 1])
            }
        };
        // ∂_m: Tot_m -> M_{m+1}, z ↦ B z_0.
        let c_rank = |m: usize| -> usize { induced_rank(&tot.differentials[m], &tot.connecting(self, m), &self.b[m + 2]) };
        let mut nodes = Vec::new();
        for n in 0..=last {
            let into = if n == 0 { 0 } else { c_rank(n - 1) };
            nodes.push(SbiNode {
                node: SbiPlace::Hochschild,
                degree: n,
                dim: hh[n],
                rank_in: into,
                rank_out: i_rank[n],
            });
            nodes.push(SbiNode {
                node: SbiPlace::CyclicAfterI,
                degree: n,
                dim: hc[n],
                rank_in: i_rank[n],
                rank_out: s_rank(n),
            });
            nodes.push(SbiNode {
                node: SbiPlace::CyclicAfterS,
                degree: n,
                dim: hc[n],
                rank_in: s_rank(n + 2),
                rank_out: c_rank(n),
            });
        }
        Ok(SbiReport { top, nodes })
    }
}

/// `rank f_*: H_n(X) -> H_m(Y)` for a map of cycles that sends boundaries to
/// boundaries, from ranks only:
/// `dim Z_n - dim {x ∈ Z_n : f x ∈ B_m}`, where the second term is
/// `nullity [[d_X, 0], [f, -d_Y]] - nullity d_Y`.
pub fn induced_rank(dx: &RationalMatrix, f: &RationalMatrix, dy: &RationalMatrix) -> usize {
    let cycles = nullity(dx);
    let top = dx.hstack(&RationalMatrix::zeros(dx.rows(), dy.cols()));
    let bottom = f.hstack(&dy.scale(&-Rational::one()));
    let preimage = nullity(&top.vstack(&bottom)) - nullity(dy);
    cycles - preimage
}

/// Total complex of `M[u]`, degrees `0..=K`.
#[derive(Clone, Debug)]
pub struct TotalComplex {
    /// `offsets[n]`: `(j, degree of M, column offset)` for the component `M_{n-2j} u^j`.
    components: Vec<Vec<(usize, usize, usize)>>,
    dims: Vec<usize>,
    /// `differentials[n]: Tot_n -> Tot_{n-1}`; `differentials[0]` has no rows.
    differentials: Vec<RationalMatrix>,
}

impl TotalComplex {
    fn new(m: &MixedComplex) -> Self {
        let top = m.top();
        let mut components = Vec::with_capacity(top + 1);
        let mut dims = Vec::with_capacity(top + 1);
        for n in 0..=top {
            let mut comp = Vec::new();
            let mut off = 0;
            for j in 0..=n / 2 {
                comp.push((j, n - 2 * j, off));
                off += m.dim(n - 2 * j);
            }
            components.push(comp);
            dims.push(off);
        }
        let mut differentials = vec![RationalMatrix::zeros(0, dims[0])];
        for n in 1..=top {
            let mut d = RationalMatrix::zeros(dims[n - 1], dims[n]);
            for &(j, deg, col) in &components[n] {
                if deg >= 1 {
                    let (_, _, row) = components[n - 1][j];
                    d.place(row, col, m.b(deg));
                }
                if j >= 1 {
                    let (_, target, row) = components[n - 1][j - 1];
                    debug_assert_eq!(target, deg + 1);
                    d.place(row, col, m.big_b(deg));
                }
            }
            differentials.push(d);
        }
        TotalComplex {
            components,
            dims,
            differentials,
        }
    }

    pub fn dim(&self, n: usize) -> usize {
        self.dims[n]
    }

    pub fn differential(&self, n: usize) -> &RationalMatrix {
        &self.differentials[n]
    }

    pub fn to_graded(&self) -> GradedComplex {
        let mut ds: Vec<Option<RationalMatrix>> = vec![None];
        ds.extend(self.differentials[1..].iter().cloned().map(Some));
        GradedComplex::new(0, self.dims.clone(), ds, Direction::Chain).expect("shapes match")
    }

    /// `S: Tot_n -> Tot_{n-2}`, dropping the `u^0` column.
    pub fn shift(&self, n: usize) -> RationalMatrix {
        let mut s = RationalMatrix::zeros(self.dims[n - 2], self.dims[n]);
        for &(j, deg, col) in &self.components[n] {
            if j >= 1 {
                let (_, target, row) = self.components[n - 2][j - 1];
                debug_assert_eq!(target, deg);
                let size = self.components_size(n, j);
                for t in 0..size {
                    s.set(row + t, col + t, Rational::one());
                }
            }
        }
        s
    }

    fn components_size(&self, n: usize, j: usize) -> usize {
        let comps = &self.components[n];
        let end = comps.get(j + 1).map_or(self.dims[n], |c| c.2);
        end - comps[j].2
    }

    /// `I: M_n -> Tot_n`, the `u^0` column.
    pub fn inclusion(&self, n: usize) -> RationalMatrix {
        let size = self.components_size(n, 0);
        let mut i = RationalMatrix::zeros(self.dims[n], size);
        for t in 0..size {
            i.set(t, t, Rational::one());
        }
        i
    }

    /// `Tot_m -> M_{m+1}`, `(z_0, z_1, ...) ↦ B z_0`.
    fn connecting(&self, m: &MixedComplex, n: usize) -> RationalMatrix {
        let mut c = RationalMatrix::zeros(m.dim(n + 1), self.dims[n]);
        c.place(0, 0, m.big_b(n));
        c
    }
}

/// Stabilized periodic cyclic ranks; `None` where two successive ranks of `S`
/// disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Periodic {
    pub even: Option<usize>,
    pub odd: Option<usize>,
    /// Rank of `S: HC_n -> HC_{n-2}` for each `n`.
    pub ranks: BTreeMap<usize, usize>,
}

impl Periodic {
    pub fn stabilized(&self) -> Option<(usize, usize)> {
        Some((self.even?, self.odd?))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SbiPlace {
    /// `HC_{n-1} -> HH_n -> HC_n`.
    Hochschild,
    /// `HH_n -> HC_n -> HC_{n-2}`.
    CyclicAfterI,
    /// `HC_{n+2} -> HC_n -> HH_{n+1}`.
    CyclicAfterS,
}

impl fmt::Display for SbiPlace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SbiPlace::Hochschild => "HH",
            SbiPlace::CyclicAfterI => "HC(I,S)",
            SbiPlace::CyclicAfterS => "HC(S,B)",
        })
    }
}

/// One node of the long exact sequence: exact when the incoming and outgoing
/// ranks add up to the dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SbiNode {
    pub node: SbiPlace,
    pub degree: usize,
    pub dim: usize,
    pub rank_in: usize,
    pub rank_out: usize,
}

impl SbiNode {
    pub fn exact(&self) -> bool {
        self.rank_in + self.rank_out == self.dim
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SbiReport {
    pub top: usize,
    pub nodes: Vec<SbiNode>,
}

impl SbiReport {
    pub fn exact(&self) -> bool {
        self.nodes.iter().all(SbiNode::exact)
    }
}

/// Mixed complex `(C_*(A), b, B)` truncated at `K`.
pub fn mixed_from_algebra(a: &FiniteAlgebra, top: usize, norm: Normalization) -> Result<MixedComplex, CyclicError> {
    if top < 2 {
        return Err(CyclicError::Truncation { top, min: 2 });
    }
    let dims = (0..=top).map(|k| TensorBasis::new(a.dim(), k, norm).len()).collect();
    let b = (1..=top).map(|k| boundary_matrix(a, k, norm)).collect();
    let big_b = (0..top).map(|k| connes_matrix(a, k, norm)).collect();
    MixedComplex::new(dims, b, big_b)
}

/// Mixed complex `(Ω, 0, d)` of a cochain complex, in degrees `0..=K`.
/// Degrees outside the range of `Ω` are zero.
pub fn mixed_from_cochain(omega: &GradedComplex, top: usize) -> Result<MixedComplex, CyclicError> {
    if omega.direction() != Direction::Cochain {
        return Err(CyclicError::NotCochain);
    }
    let dims: Vec<usize> = (0..=top).map(|k| omega.dim(k)).collect();
    let b = (1..=top).map(|k| RationalMatrix::zeros(dims[k - 1], dims[k])).collect();
    let big_b = (0..top)
        .map(|k| {
            omega
                .differential(k)
                .cloned()
                .unwrap_or_else(|| RationalMatrix::zeros(dims[k + 1], dims[k]))
        })
        .collect();
    MixedComplex::new(dims, b, big_b)
}

/// Cyclic betti numbers of the mixed complex in degrees `0..K`.
pub fn cyclic_betti(m: &MixedComplex) -> Betti {
    m.cyclic_betti()
}

pub fn periodic_betti(m: &MixedComplex) -> Periodic {
    m.periodic_betti()
}

pub fn sbi_check(m: &MixedComplex) -> Result<SbiReport, CyclicError> {
    m.sbi_check()
}

#[cfg(test)]
mod tests {
    use super::super::algebra::*;
    use super::*;
    use crate::simplicial::fixtures;

    #[test]
    fn ground_field_cyclic() {
        let m = mixed_from_algebra(&ground_field(), 5, Normalization::Full).unwrap();
        assert_eq!(m.cyclic_betti(), Betti::from([(0, 1), (1, 0), (2, 1), (3, 0), (4, 1)]));
        let p = mixed_from_algebra(&ground_field(), 6, Normalization::Full).unwrap().periodic_betti();
        assert_eq!(p.stabilized(), Some((1, 0)));
    }

    #[test]
    fn point_de_rham_matches_ground_field() {
        let omega = fixtures::point().cochain_complex().unwrap();
        let m = mixed_from_cochain(&omega, 5).unwrap();
        assert_eq!(m.cyclic_betti(), Betti::from([(0, 1), (1, 0), (2, 1), (3, 0), (4, 1)]));
    }

    #[test]
    fn split_pair_cyclic() {
        let m = mixed_from_algebra(&split_pair(), 5, Normalization::Full).unwrap();
        assert_eq!(m.cyclic_betti(), Betti::from([(0, 2), (1, 0), (2, 2), (3, 0), (4, 2)]));
    }

    #[test]
    fn identities_hold() {
        for (name, a) in bundled() {
            let top = if a.dim() > 3 { 3 } else { 4 };
            let m = mixed_from_algebra(&a, top, Normalization::Full).unwrap();
            assert!(m.identity_checks().iter().all(|c| c.holds), "{name}");
            assert!(mixed_from_algebra(&a, top, Normalization::Reduced).is_ok(), "{name}");
        }
    }

    #[test]
    fn reduced_cyclic_matches_full() {
        for a in [dual_numbers(), split_pair(), upper_triangular()] {
            let full = mixed_from_algebra(&a, 4, Normalization::Full).unwrap();
            let red = mixed_from_algebra(&a, 4, Normalization::Reduced).unwrap();
            assert_eq!(full.cyclic_betti(), red.cyclic_betti());
        }
    }

    #[test]
    fn de_rham_periodic() {
        for (k, expected) in [
            (fixtures::point(), (1, 0)),
            (fixtures::hexagon(), (1, 1)),
            (fixtures::torus7(), (2, 2)),
            (fixtures::sphere2(), (2, 0)),
        ] {
            let m = mixed_from_cochain(&k.cochain_complex().unwrap(), 6).unwrap();
            assert_eq!(m.periodic_betti().stabilized(), Some(expected));
        }
    }

    #[test]
    fn sbi_exact() {
        let m = mixed_from_algebra(&dual_numbers(), 5, Normalization::Full).unwrap();
        let r = m.sbi_check().unwrap();
        assert!(r.exact(), "{r:?}");
        let m = mixed_from_cochain(&fixtures::hexagon().cochain_complex().unwrap(), 5).unwrap();
        assert!(m.sbi_check().unwrap().exact());
    }

    #[test]
    fn rejects_broken_mixed_complex() {
        let one = RationalMatrix::identity(1);
        let err = MixedComplex::new(vec![1, 1, 1], vec![one.clone(), one.clone()], vec![RationalMatrix::zeros(1, 1); 2])
            .unwrap_err();
        assert!(matches!(
            err,
            CyclicError::NotMixed {
                identity: Identity::BSquared,
                degree: 2
            }
        ));
        let chain = fixtures::hexagon().chain_complex().unwrap();
        assert!(matches!(mixed_from_cochain(&chain, 3), Err(CyclicError::NotCochain)));
    }
}
