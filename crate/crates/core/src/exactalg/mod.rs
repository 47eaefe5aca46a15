//! Exact rational linear algebra and homology of finite graded complexes.

mod complex;
mod elim;
mod matrix;
mod snf;

pub use complex::{euler_characteristic, Betti, ComplexError, Direction, GradedComplex};
pub use elim::{kernel, kernel_basis, nullity, rank, rank_dense, rank_sparse, rref, Kernel, Rref, DENSE_LIMIT};
pub use matrix::{int, rat, Rational, RationalMatrix};
pub use snf::smith_normal_form;

/// Rank of an integral matrix as the number of nonzero Smith invariants.
pub fn rank_via_snf(m: &RationalMatrix) -> Option<usize> {
    m.to_integer_rows().map(|rows| smith_normal_form(&rows).len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn permutation(n: usize, seed: &[usize]) -> RationalMatrix {
        let mut order: Vec<usize> = (0..n).collect();
        for (i, s) in seed.iter().enumerate().take(n) {
            order.swap(i, i + s % (n - i));
        }
        let mut p = RationalMatrix::zeros(n, n);
        for (i, &j) in order.iter().enumerate() {
            p.set(i, j, int(1));
        }
        p
    }

    proptest! {
        #[test]
        fn bareiss_matches_snf(rows in 1usize..7, cols in 1usize..7, v in proptest::collection::vec(-4i64..=4, 49)) {
            let m = RationalMatrix::from_i64(rows, cols, &v[..rows * cols]);
            prop_assert_eq!(Some(rank(&m)), rank_via_snf(&m));
        }

        #[test]
        fn betti_is_basis_permutation_invariant(seed in proptest::collection::vec(0usize..16, 8)) {
            // Full 2-simplex: permute each chain space and conjugate the boundaries.
            let d1 = RationalMatrix::from_i64(3, 3, &[-1, -1, 0, 1, 0, -1, 0, 1, 1]);
            let d2 = RationalMatrix::from_i64(3, 1, &[1, -1, 1]);
            let p0 = permutation(3, &seed[..3]);
            let p1 = permutation(3, &seed[3..6]);
            let p2 = permutation(1, &seed[6..]);
            let q1 = p0.mul(&d1).mul(&p1.transpose());
            let q2 = p1.mul(&d2).mul(&p2.transpose());
            let base = GradedComplex::chain(0, vec![3, 3, 1], vec![d1, d2]).unwrap();
            let permuted = GradedComplex::chain(0, vec![3, 3, 1], vec![q1, q2]).unwrap();
            prop_assert_eq!(base.betti().unwrap(), permuted.betti().unwrap());
        }
    }
}
