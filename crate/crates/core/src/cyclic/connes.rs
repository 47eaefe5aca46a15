use std::collections::HashMap;

use super::algebra::FiniteAlgebra;
use super::hochschild::{boundary_matrix, rotate, Normalization, TensorBasis};
use super::CyclicError;
use crate::exactalg::{rank, Betti, RationalMatrix};

/// Basis of `C_k / (1 - τ)`: one class per rotation orbit of tuples, minus the
/// orbits whose signed rotation returns with sign `-1` (those classes vanish).
struct OrbitBasis {
    /// For each tuple index: `(class, sign)`, or `None` when its class is zero.
    class_of: Vec<Option<(usize, bool)>>,
    /// Representative tuple index for each class.
    representatives: Vec<usize>,
}

impl OrbitBasis {
    fn new(d: usize, k: usize) -> Self {
        let basis = TensorBasis::new(d, k, Normalization::Full);
        let mut class_of = vec![None; basis.len()];
        let mut representatives = Vec::new();
        let mut rep_class: HashMap<usize, Option<usize>> = HashMap::new();
        let odd_k = k % 2 == 1;
        for idx in 0..basis.len() {
            // Rotations ρ^i t for i = 0..=k; the representative is the least one.
            let mut rots = Vec::with_capacity(k + 1);
            let mut t = basis.tuple(idx);
            for _ in 0..=k {
                rots.push(t.clone());
                t = rotate(&t);
            }
            let (i0, rep) = rots
                .iter()
                .enumerate()
                .min_by(|x, y| x.1.cmp(y.1).then(x.0.cmp(&y.0)))
                .expect("nonempty");
            let rep_idx = basis.index(rep).expect("full basis");
            let class = *rep_class.entry(rep_idx).or_insert_with(|| {
                let period = (1..=k + 1).find(|&p| rots[(i0 + p) % (k + 1)] == *rep).unwrap_or(k + 1);
                if odd_k && period % 2 == 1 {
                    None
                } else {
                    representatives.push(rep_idx);
                    Some(representatives.len() - 1)
                }
            });
            // idx = ρ^{k+1-i0} rep, and [ρ^j r] = (-1)^{kj} [r].
            let j = (k + 1 - i0) % (k + 1);
            class_of[idx] = class.map(|c| (c, odd_k && j % 2 == 1));
        }
        OrbitBasis {
            class_of,
            representatives,
        }
    }

    fn len(&self) -> usize {
        self.representatives.len()
    }
}

/// Cyclic betti numbers in degrees `0..K` from the quotient complex
/// `(C_*(A) / (1 - τ), b)`.
pub fn connes_quotient_cyclic(a: &FiniteAlgebra, top: usize) -> Result<Betti, CyclicError> {
    if top < 2 {
        return Err(CyclicError::Truncation { top, min: 2 });
    }
    let orbits: Vec<OrbitBasis> = (0..=top).map(|k| OrbitBasis::new(a.dim(), k)).collect();
    let mut ranks = vec![0; top + 2];
    for k in 1..=top {
        ranks[k] = rank(&quotient_boundary(a, k, &orbits[k], &orbits[k - 1]));
    }
    Ok((0..top)
        .map(|k| (k, orbits[k].len() - ranks[k] - ranks[k + 1]))
        .collect())
}

/// `b̄ = P b L` with `L` lifting a class to its representative tensor and `P`
/// projecting tensors onto classes.
fn quotient_boundary(a: &FiniteAlgebra, k: usize, src: &OrbitBasis, dst: &OrbitBasis) -> RationalMatrix {
    let b = boundary_matrix(a, k, Normalization::Full).transpose();
    let mut m = RationalMatrix::zeros(dst.len(), src.len());
    for (col, &rep) in src.representatives.iter().enumerate() {
        for (&row, v) in b.row(rep) {
            if let Some((class, negate)) = dst.class_of[row] {
                let v = if negate { -v.clone() } else { v.clone() };
                m.add_at(class, col, &v);
            }
        }
    }
    m
}

/// Dimension of `C_k / (1 - τ)`, for tests.
#[cfg(test)]
pub(crate) fn quotient_dim(d: usize, k: usize) -> usize {
    OrbitBasis::new(d, k).len()
}

#[cfg(test)]
mod tests {
    use super::super::algebra::*;
    use super::super::hochschild::cyclic_operator;
    use super::*;
    use crate::exactalg::RationalMatrix;

    #[test]
    fn quotient_dimension_is_corank_of_one_minus_tau() {
        for d in 1..=3 {
            for k in 0..=4 {
                let a = if d == 1 {
                    ground_field()
                } else if d == 2 {
                    dual_numbers()
                } else {
                    upper_triangular()
                };
                let t = cyclic_operator(&a, k);
                let n = t.rows();
                let one_minus = RationalMatrix::identity(n).sub(&t);
                assert_eq!(quotient_dim(d, k), n - rank(&one_minus), "d={d} k={k}");
            }
        }
    }

    #[test]
    fn ground_field_pattern() {
        assert_eq!(
            connes_quotient_cyclic(&ground_field(), 5).unwrap(),
            Betti::from([(0, 1), (1, 0), (2, 1), (3, 0), (4, 1)])
        );
    }
}
