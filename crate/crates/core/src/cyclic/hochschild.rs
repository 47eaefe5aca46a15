
use super::algebra::FiniteAlgebra;
use super::CyclicError;
use crate::exactalg::{nullity, rank, Betti, GradedComplex, Rational, RationalMatrix};

/// Which version of the Hochschild complex to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Normalization {
    /// `C_k = A^{⊗(k+1)}`.
    Full,
    /// Quotient by tensors with the unit in some position `>= 1`.
    Reduced,
}

/// Canonical basis of `C_k`: tuples `(a_0, ..., a_k)` of basis indices in
/// lexicographic order. In the reduced basis positions `>= 1` skip the unit.
#[derive(Clone, Copy, Debug)]
pub(crate) struct TensorBasis {
    d: usize,
    k: usize,
    norm: Normalization,
}

impl TensorBasis {
    pub(crate) fn new(d: usize, k: usize, norm: Normalization) -> Self {
        TensorBasis { d, k, norm }
    }

    fn tail_radix(&self) -> usize {
        match self.norm {
            Normalization::Full => self.d,
            Normalization::Reduced => self.d - 1,
        }
    }

    fn tail_offset(&self) -> usize {
        match self.norm {
            Normalization::Full => 0,
            Normalization::Reduced => 1,
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.d * self.tail_radix().pow(self.k as u32)
    }

    /// Position of a tuple, or `None` if it is degenerate in the reduced basis.
    pub(crate) fn index(&self, t: &[usize]) -> Option<usize> {
        debug_assert_eq!(t.len(), self.k + 1);
        let off = self.tail_offset();
        let radix = self.tail_radix();
        let mut idx = t[0];
        for &a in &t[1..] {
            if a < off {
                return None;
            }
            idx = idx * radix + (a - off);
        }
        Some(idx)
    }

    pub(crate) fn tuple(&self, mut idx: usize) -> Vec<usize> {
        let off = self.tail_offset();
        let radix = self.tail_radix();
        let mut t = vec![0; self.k + 1];
        for pos in (1..=self.k).rev() {
            t[pos] = idx % radix + off;
            idx /= radix;
        }
        t[0] = idx;
        t
    }
}

fn sign(odd: bool) -> Rational {
    if odd {
        -Rational::from_integer(1.into())
    } else {
        Rational::from_integer(1.into())
    }
}

/// `b(a_0 ⊗ ... ⊗ a_k) = Σ_{i<k} (-1)^i a_0 ⊗ ... ⊗ a_i a_{i+1} ⊗ ... ⊗ a_k
///  + (-1)^k a_k a_0 ⊗ a_1 ⊗ ... ⊗ a_{k-1}`.
pub(crate) fn boundary_matrix(a: &FiniteAlgebra, k: usize, norm: Normalization) -> RationalMatrix {
    assert!(k >= 1);
    let src = TensorBasis::new(a.dim(), k, norm);
    let dst = TensorBasis::new(a.dim(), k - 1, norm);
    let mut m = RationalMatrix::zeros(dst.len(), src.len());
    let mut buf = vec![0; k];
    for col in 0..src.len() {
        let t = src.tuple(col);
        for i in 0..k {
            let s = sign(i % 2 == 1);
            buf[..i].copy_from_slice(&t[..i]);
            buf[i + 1..].copy_from_slice(&t[i + 2..]);
            for (l, c) in a.product(t[i], t[i + 1]) {
                buf[i] = *l;
                if let Some(row) = dst.index(&buf) {
                    m.add_at(row, col, &(&s * c));
                }
            }
        }
        let s = sign(k % 2 == 1);
        buf[1..].copy_from_slice(&t[1..k]);
        for (l, c) in a.product(t[k], t[0]) {
            buf[0] = *l;
            if let Some(row) = dst.index(&buf) {
                m.add_at(row, col, &(&s * c));
            }
        }
    }
    m
}

/// Signed rotation of a tuple: `τ(a_0 ⊗ ... ⊗ a_k) = (-1)^k a_k ⊗ a_0 ⊗ ... ⊗ a_{k-1}`.
pub(crate) fn rotate(t: &[usize]) -> Vec<usize> {
    let k = t.len() - 1;
    let mut r = Vec::with_capacity(k + 1);
    r.push(t[k]);
    r.extend_from_slice(&t[..k]);
    r
}

/// Matrix of `τ` on the full `C_k`.
pub fn cyclic_operator(a: &FiniteAlgebra, k: usize) -> RationalMatrix {
    let basis = TensorBasis::new(a.dim(), k, Normalization::Full);
    let s = sign(k % 2 == 1);
    let mut m = RationalMatrix::zeros(basis.len(), basis.len());
    for col in 0..basis.len() {
        let row = basis.index(&rotate(&basis.tuple(col))).expect("full basis");
        m.set(row, col, s.clone());
    }
    m
}

/// Matrix of Connes' `B: C_k -> C_{k+1}`.
///
/// On the full complex `B = (1 - τ) s N` with `N = Σ_j τ^j` and
/// `s(x) = 1 ⊗ x`. On the reduced complex the `τ s N` term is degenerate and
/// `B = s N`.
pub(crate) fn connes_matrix(a: &FiniteAlgebra, k: usize, norm: Normalization) -> RationalMatrix {
    let src = TensorBasis::new(a.dim(), k, norm);
    let dst = TensorBasis::new(a.dim(), k + 1, norm);
    let mut m = RationalMatrix::zeros(dst.len(), src.len());
    let step_sign = k % 2 == 1;
    let back_sign = (k + 1) % 2 == 1;
    for col in 0..src.len() {
        let mut t = src.tuple(col);
        let mut odd = false;
        for _ in 0..=k {
            let mut lifted = Vec::with_capacity(k + 2);
            lifted.push(0);
            lifted.extend_from_slice(&t);
            if let Some(row) = dst.index(&lifted) {
                m.add_at(row, col, &sign(odd));
            }
            if norm == Normalization::Full {
                let turned = rotate(&lifted);
                let row = dst.index(&turned).expect("full basis");
                m.add_at(row, col, &sign(odd ^ back_sign ^ true));
            }
            t = rotate(&t);
            odd ^= step_sign;
        }
    }
    m
}

/// Matrix of the Hochschild boundary `b: C_k -> C_{k-1}` on the full complex.
pub fn hochschild_boundary(a: &FiniteAlgebra, k: usize) -> Result<RationalMatrix, CyclicError> {
    if k == 0 {
        return Err(CyclicError::Degree { degree: k, min: 1 });
    }
    Ok(boundary_matrix(a, k, Normalization::Full))
}

/// Matrix of `B: C_k -> C_{k+1}` on the full complex.
pub fn connes_b(a: &FiniteAlgebra, k: usize) -> RationalMatrix {
    connes_matrix(a, k, Normalization::Full)
}

/// Hochschild complex truncated at degree `K`.
#[derive(Clone, Debug)]
pub struct HochschildComplex {
    algebra: FiniteAlgebra,
    top: usize,
    norm: Normalization,
    /// `boundaries[k - 1] = b_k`.
    boundaries: Vec<RationalMatrix>,
}

impl HochschildComplex {
    pub fn new(a: &FiniteAlgebra, top: usize, norm: Normalization) -> Self {
        let boundaries = (1..=top).map(|k| boundary_matrix(a, k, norm)).collect();
        HochschildComplex {
            algebra: a.clone(),
            top,
            norm,
            boundaries,
        }
    }

    pub fn algebra(&self) -> &FiniteAlgebra {
        &self.algebra
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn normalization(&self) -> Normalization {
        self.norm
    }

    pub fn dim(&self, k: usize) -> usize {
        TensorBasis::new(self.algebra.dim(), k, self.norm).len()
    }

    pub fn boundary(&self, k: usize) -> Option<&RationalMatrix> {
        k.checked_sub(1).and_then(|i| self.boundaries.get(i))
    }

    pub fn to_graded(&self) -> GradedComplex {
        let dims = (0..=self.top).map(|k| self.dim(k)).collect();
        GradedComplex::chain(0, dims, self.boundaries.clone()).expect("tensor shapes match")
    }

    /// Betti numbers in degrees `0..K`; degree `K` lacks its incoming boundary.
    pub fn betti(&self) -> Betti {
        let ranks: Vec<usize> = self.boundaries.iter().map(rank).collect();
        (0..self.top)
            .map(|k| {
                let out = if k == 0 { 0 } else { ranks[k - 1] };
                (k, self.dim(k) - out - ranks[k])
            })
            .collect()
    }

    /// `dim ker b_K`, an upper bound for the homology in the top degree.
    pub fn top_degree_bound(&self) -> usize {
        match self.boundary(self.top) {
            Some(b) => nullity(b),
            None => self.dim(self.top),
        }
    }
}

/// Hochschild betti numbers of `A` in degrees `0..K`.
pub fn hh_betti(a: &FiniteAlgebra, top: usize) -> Result<Betti, CyclicError> {
    if top < 2 {
        return Err(CyclicError::Truncation { top, min: 2 });
    }
    Ok(HochschildComplex::new(a, top, Normalization::Full).betti())
}

/// Reduced Hochschild complex truncated at `K`.
pub fn reduced_complex(a: &FiniteAlgebra, top: usize) -> HochschildComplex {
    HochschildComplex::new(a, top, Normalization::Reduced)
}

/// Helper for tests: a dense column vector for one tensor basis element.
#[cfg(test)]
pub(crate) fn unit_tensor(a: &FiniteAlgebra, t: &[usize]) -> Vec<Rational> {
    let basis = TensorBasis::new(a.dim(), t.len() - 1, Normalization::Full);
    let mut v = vec![<Rational as num_traits::Zero>::zero(); basis.len()];
    v[basis.index(t).expect("full basis")] = Rational::from_integer(1.into());
    v
}

#[cfg(test)]
mod tests {
    use super::super::algebra::*;
    use super::*;
    use crate::exactalg::int;

    #[test]
    fn tensor_basis_round_trip() {
        for norm in [Normalization::Full, Normalization::Reduced] {
            let b = TensorBasis::new(3, 3, norm);
            for i in 0..b.len() {
                assert_eq!(b.index(&b.tuple(i)), Some(i));
            }
        }
        assert_eq!(TensorBasis::new(2, 2, Normalization::Reduced).len(), 2);
        assert_eq!(TensorBasis::new(4, 3, Normalization::Full).len(), 256);
    }

    #[test]
    fn b1_is_commutator() {
        let m = matrix_algebra();
        let b1 = hochschild_boundary(&m, 1).unwrap();
        // b(e12 ⊗ e21) = e12 e21 - e21 e12 = e11 - (1 - e11) = -1 + 2 e11
        let image = b1.mul_vec(&unit_tensor(&m, &[2, 3]));
        assert_eq!(image, vec![int(-1), int(2), int(0), int(0)]);
        assert!(hochschild_boundary(&dual_numbers(), 1).unwrap().is_zero());
        assert!(hochschild_boundary(&m, 0).is_err());
    }

    #[test]
    fn ground_field_boundaries_alternate() {
        let q = ground_field();
        for k in 1..=5 {
            let b = hochschild_boundary(&q, k).unwrap();
            let expected = if k % 2 == 0 { int(1) } else { int(0) };
            assert_eq!(b.get(0, 0), expected);
        }
        assert_eq!(hh_betti(&q, 5).unwrap(), Betti::from([(0, 1), (1, 0), (2, 0), (3, 0), (4, 0)]));
    }

    #[test]
    fn tau_examples() {
        let a = dual_numbers();
        let t1 = cyclic_operator(&a, 1);
        // τ(1 ⊗ x) = -x ⊗ 1
        assert_eq!(t1.mul_vec(&unit_tensor(&a, &[0, 1])), unit_tensor(&a, &[1, 0]).iter().map(|v| -v).collect::<Vec<_>>());
        assert_eq!(t1.mul(&t1), RationalMatrix::identity(4));
        assert_eq!(cyclic_operator(&a, 0), RationalMatrix::identity(2));
        let t2 = cyclic_operator(&a, 2);
        assert_eq!(t2.mul(&t2).mul(&t2), RationalMatrix::identity(8));
    }

    #[test]
    fn b_on_degree_zero() {
        let a = dual_numbers();
        let b0 = connes_b(&a, 0);
        // B(x) = 1 ⊗ x + x ⊗ 1
        let mut expected = unit_tensor(&a, &[0, 1]);
        expected[a.dim()] = int(1);
        assert_eq!(b0.mul_vec(&a.basis_vector(1)), expected);
    }

    #[test]
    fn dual_numbers_hochschild() {
        assert_eq!(
            hh_betti(&dual_numbers(), 5).unwrap(),
            Betti::from([(0, 2), (1, 1), (2, 1), (3, 1), (4, 1)])
        );
        assert_eq!(hh_betti(&split_pair(), 4).unwrap(), Betti::from([(0, 2), (1, 0), (2, 0), (3, 0)]));
    }

    #[test]
    fn reduced_matches_full() {
        for (_, a) in bundled().into_iter().filter(|(_, a)| a.dim() <= 3) {
            let full = HochschildComplex::new(&a, 4, Normalization::Full).betti();
            let red = reduced_complex(&a, 4);
            assert_eq!(red.betti(), full);
            assert!(red.to_graded().validate().is_ok());
        }
        assert_eq!(reduced_complex(&ground_field(), 3).dim(1), 0);
    }
}
