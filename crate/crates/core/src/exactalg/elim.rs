//! Rank and kernel computations over ℚ.
//!
//! Rank uses fraction-free elimination on row-integralised copies of the
//! input: dense Bareiss below [`DENSE_LIMIT`] in both dimensions, a sparse
//! content-normalised variant above. Both pivot on the entry of least
//! magnitude in the current column, ties going to the lowest row index.
//! Arithmetic runs in `i64` with overflow checks and restarts in `BigInt`
//! when a check fails.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::{Rational, RationalMatrix};

/// Matrices with both dimensions below this size take the dense path.
pub const DENSE_LIMIT: usize = 64;

pub(crate) trait ElimInt: Clone + Ord + Signed + Integer {
    /// `a * x - b * y`, or `None` on overflow.
    fn cross(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self>;
    fn exact_div(&self, d: &Self) -> Self {
        self.div_floor(d)
    }
}

impl ElimInt for i64 {
    fn cross(a: &i64, x: &i64, b: &i64, y: &i64) -> Option<i64> {
        a.checked_mul(*x)?.checked_sub(b.checked_mul(*y)?)
    }
}

impl ElimInt for BigInt {
    fn cross(a: &BigInt, x: &BigInt, b: &BigInt, y: &BigInt) -> Option<BigInt> {
        Some(a * x - b * y)
    }
}

type SparseRow<T> = Vec<(usize, T)>;

fn narrow(rows: &[SparseRow<BigInt>]) -> Option<Vec<SparseRow<i64>>> {
    rows.iter()
        .map(|row| {
            row.iter()
                .map(|(c, v)| i64::try_from(v).ok().map(|v| (*c, v)))
                .collect()
        })
        .collect()
}

/// Rank of `m` over ℚ.
pub fn rank(m: &RationalMatrix) -> usize {
    if m.rows() < DENSE_LIMIT && m.cols() < DENSE_LIMIT {
        rank_dense(m)
    } else {
        rank_sparse(m)
    }
}

/// `cols(m) - rank(m)`.
pub fn nullity(m: &RationalMatrix) -> usize {
    m.cols() - rank(m)
}

/// Dense Bareiss rank. Exposed so the two elimination paths can be compared.
pub fn rank_dense(m: &RationalMatrix) -> usize {
    let rows = m.integral_rows();
    let to_dense = |rows: &[SparseRow<BigInt>]| -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|row| {
                let mut d = vec![BigInt::zero(); m.cols()];
                for (c, v) in row {
                    d[*c] = v.clone();
                }
                d
            })
            .collect()
    };
    if let Some(small) = narrow(&rows) {
        let dense: Vec<Vec<i64>> = small
            .iter()
            .map(|row| {
                let mut d = vec![0i64; m.cols()];
                for (c, v) in row {
                    d[*c] = *v;
                }
                d
            })
            .collect();
        if let Some(r) = bareiss(dense, m.cols()) {
            return r;
        }
    }
    bareiss(to_dense(&rows), m.cols()).expect("bigint arithmetic cannot overflow")
}

fn bareiss<T: ElimInt>(mut a: Vec<Vec<T>>, cols: usize) -> Option<usize> {
    let nrows = a.len();
    let mut prev = T::one();
    let mut r = 0;
    for c in 0..cols {
        if r == nrows {
            break;
        }
        let pivot = (r..nrows)
            .filter(|&i| !a[i][c].is_zero())
            .min_by(|&i, &j| a[i][c].abs().cmp(&a[j][c].abs()).then(i.cmp(&j)));
        let Some(p) = pivot else { continue };
        a.swap(r, p);
        let (top, bottom) = a.split_at_mut(r + 1);
        let prow = &top[r];
        for row in bottom.iter_mut() {
            let lead = row[c].clone();
            for j in (c + 1)..cols {
                let v = T::cross(&prow[c], &row[j], &lead, &prow[j])?;
                row[j] = v.exact_div(&prev);
            }
            row[c] = T::zero();
        }
        prev = prow[c].clone();
        r += 1;
    }
    Some(r)
}

/// Sparse fraction-free rank. Exposed so the two elimination paths can be compared.
pub fn rank_sparse(m: &RationalMatrix) -> usize {
    let rows = m.integral_rows();
    if let Some(small) = narrow(&rows) {
        if let Some(r) = sparse_eliminate(small, m.cols()) {
            return r;
        }
    }
    sparse_eliminate(rows, m.cols()).expect("bigint arithmetic cannot overflow")
}

fn content_normalise<T: ElimInt>(row: &mut SparseRow<T>) {
    let mut g = T::zero();
    for (_, v) in row.iter() {
        g = g.gcd(v);
        if g.is_one() {
            return;
        }
    }
    if !g.is_zero() && !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v = v.exact_div(&g);
        }
    }
}

/// `(p / g) * row - (a / g) * pivot`, where `p` and `a` are the leading
/// entries of `pivot` and `row` and `g = gcd(p, a)`.
fn eliminate_lead<T: ElimInt>(row: &SparseRow<T>, pivot: &SparseRow<T>) -> Option<SparseRow<T>> {
    let p = &pivot[0].1;
    let a = &row[0].1;
    let g = p.gcd(a);
    let pm = p.exact_div(&g);
    let am = a.exact_div(&g);
    let zero = T::zero();
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (1, 1);
    while i < row.len() || j < pivot.len() {
        let ci = row.get(i).map_or(usize::MAX, |e| e.0);
        let cj = pivot.get(j).map_or(usize::MAX, |e| e.0);
        let (col, v) = if ci < cj {
            i += 1;
            (ci, T::cross(&pm, &row[i - 1].1, &am, &zero)?)
        } else if cj < ci {
            j += 1;
            (cj, T::cross(&pm, &zero, &am, &pivot[j - 1].1)?)
        } else {
            i += 1;
            j += 1;
            (ci, T::cross(&pm, &row[i - 1].1, &am, &pivot[j - 1].1)?)
        };
        if !v.is_zero() {
            out.push((col, v));
        }
    }
    content_normalise(&mut out);
    Some(out)
}

fn sparse_eliminate<T: ElimInt>(rows: Vec<SparseRow<T>>, cols: usize) -> Option<usize> {
    let mut buckets: Vec<Vec<SparseRow<T>>> = (0..cols).map(|_| Vec::new()).collect();
    for mut row in rows {
        if row.is_empty() {
            continue;
        }
        content_normalise(&mut row);
        buckets[row[0].0].push(row);
    }
    let mut rank = 0;
    for c in 0..cols {
        let mut bucket = std::mem::take(&mut buckets[c]);
        if bucket.is_empty() {
            continue;
        }
        // Bucket order is insertion order, so the position tie-break is deterministic.
        let p = (0..bucket.len())
            .min_by(|&i, &j| {
                bucket[i][0].1
                    .abs()
                    .cmp(&bucket[j][0].1.abs())
                    .then(bucket[i].len().cmp(&bucket[j].len()))
                    .then(i.cmp(&j))
            })
            .expect("bucket is nonempty");
        let pivot = bucket.swap_remove(p);
        rank += 1;
        for row in bucket {
            let reduced = eliminate_lead(&row, &pivot)?;
            if let Some(&(lead, _)) = reduced.first() {
                buckets[lead].push(reduced);
            }
        }
    }
    Some(rank)
}

/// Reduced row echelon form over ℚ.
#[derive(Clone, Debug)]
pub struct Rref {
    /// Nonzero rows, each with a leading 1 at the matching entry of `pivots`.
    pub rows: Vec<Vec<(usize, Rational)>>,
    pub pivots: Vec<usize>,
    pub cols: usize,
}

pub fn rref(m: &RationalMatrix) -> Rref {
    let cols = m.cols();
    let mut buckets: Vec<Vec<Vec<(usize, Rational)>>> = (0..cols).map(|_| Vec::new()).collect();
    for r in 0..m.rows() {
        let row: Vec<(usize, Rational)> = m.row(r).iter().map(|(c, v)| (*c, v.clone())).collect();
        if let Some(&(lead, _)) = row.first() {
            buckets[lead].push(row);
        }
    }
    let mut pivot_rows: Vec<Vec<(usize, Rational)>> = Vec::new();
    let mut pivots = Vec::new();
    for c in 0..cols {
        let mut bucket = std::mem::take(&mut buckets[c]);
        if bucket.is_empty() {
            continue;
        }
        let p = (0..bucket.len())
            .min_by(|&i, &j| bucket[i][0].1.abs().cmp(&bucket[j][0].1.abs()).then(i.cmp(&j)))
            .expect("bucket is nonempty");
        let mut pivot = bucket.swap_remove(p);
        let inv = pivot[0].1.recip();
        for (_, v) in pivot.iter_mut() {
            *v *= &inv;
        }
        for row in bucket {
            let reduced = axpy_drop_lead(&row, &pivot, &row[0].1);
            if let Some(&(lead, _)) = reduced.first() {
                buckets[lead].push(reduced);
            }
        }
        pivots.push(c);
        pivot_rows.push(pivot);
    }
    // Back substitution, last pivot first.
    for i in (0..pivot_rows.len()).rev() {
        let c = pivots[i];
        let (above, rest) = pivot_rows.split_at_mut(i);
        let pivot = &rest[0];
        for row in above.iter_mut() {
            if let Ok(pos) = row.binary_search_by_key(&c, |e| e.0) {
                let factor = row[pos].1.clone();
                *row = axpy(row, pivot, &factor);
            }
        }
    }
    Rref {
        rows: pivot_rows,
        pivots,
        cols,
    }
}

/// `row - factor * pivot`, dropping the leading position of both.
fn axpy_drop_lead(
    row: &[(usize, Rational)],
    pivot: &[(usize, Rational)],
    factor: &Rational,
) -> Vec<(usize, Rational)> {
    axpy(&row[1..], &pivot[1..], factor)
}

/// `row - factor * other`.
fn axpy(row: &[(usize, Rational)], other: &[(usize, Rational)], factor: &Rational) -> Vec<(usize, Rational)> {
    let mut out = Vec::with_capacity(row.len() + other.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < other.len() {
        let ci = row.get(i).map_or(usize::MAX, |e| e.0);
        let cj = other.get(j).map_or(usize::MAX, |e| e.0);
        let (col, v) = if ci < cj {
            i += 1;
            (ci, row[i - 1].1.clone())
        } else if cj < ci {
            j += 1;
            (cj, -(factor * &other[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (ci, &row[i - 1].1 - factor * &other[j - 1].1)
        };
        if !v.is_zero() {
            out.push((col, v));
        }
    }
    out
}

/// Kernel basis in free-variable form: `basis[t]` has a 1 at `free_columns[t]`
/// and a 0 at every other free column. The coordinates of any kernel vector in
/// this basis are therefore its entries at the free columns.
#[derive(Clone, Debug)]
pub struct Kernel {
    pub basis: Vec<Vec<Rational>>,
    pub free_columns: Vec<usize>,
}

impl Kernel {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Basis vectors as the columns of a matrix.
    pub fn as_matrix(&self, ambient: usize) -> RationalMatrix {
        RationalMatrix::from_columns(ambient, &self.basis)
    }

    /// Coordinates of `v` (assumed to lie in the kernel) in this basis.
    pub fn coordinates(&self, v: &[Rational]) -> Vec<Rational> {
        self.free_columns.iter().map(|&f| v[f].clone()).collect()
    }
}

pub fn kernel(m: &RationalMatrix) -> Kernel {
    let r = rref(m);
    let mut is_pivot = vec![false; r.cols];
    for &p in &r.pivots {
        is_pivot[p] = true;
    }
    let free_columns: Vec<usize> = (0..r.cols).filter(|&c| !is_pivot[c]).collect();
    let mut basis = Vec::with_capacity(free_columns.len());
    for &f in &free_columns {
        let mut v = vec![Rational::zero(); r.cols];
        v[f] = Rational::one();
        for (row, &p) in r.rows.iter().zip(&r.pivots) {
            if let Ok(pos) = row.binary_search_by_key(&f, |e| e.0) {
                v[p] = -row[pos].1.clone();
            }
        }
        basis.push(v);
    }
    Kernel {
        basis,
        free_columns,
    }
}

/// Basis of `ker m` as column vectors.
pub fn kernel_basis(m: &RationalMatrix) -> Vec<Vec<Rational>> {
    kernel(m).basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::matrix::{int, rat};
    use proptest::prelude::*;

    /// ∂₁ of the hollow triangle on vertices 0,1,2 with edges 01, 02, 12.
    fn hollow_triangle_d1() -> RationalMatrix {
        RationalMatrix::from_i64(3, 3, &[-1, -1, 0, 1, 0, -1, 0, 1, 1])
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&RationalMatrix::zeros(3, 3)), 0);
        assert_eq!(rank(&RationalMatrix::identity(4)), 4);
        assert_eq!(rank(&hollow_triangle_d1()), 2);
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&RationalMatrix::identity(3)).is_empty());
        assert_eq!(kernel_basis(&RationalMatrix::zeros(2, 5)).len(), 5);
        let d1 = hollow_triangle_d1();
        let k = kernel_basis(&d1);
        assert_eq!(k.len(), 1);
        // 01 - 02 + 12 up to scale
        let v = &k[0];
        assert_eq!(v[0], -v[1].clone());
        assert_eq!(v[0], v[2]);
        assert!(d1.mul_vec(v).iter().all(Zero::is_zero));
    }

    #[test]
    fn kernel_coordinates_read_free_entries() {
        let m = RationalMatrix::from_i64(1, 3, &[1, 2, 3]);
        let k = kernel(&m);
        assert_eq!(k.free_columns, vec![1, 2]);
        let v = vec![int(-5), int(1), int(1)];
        assert_eq!(k.coordinates(&v), vec![int(1), int(1)]);
    }

    #[test]
    fn rational_entries() {
        let m = RationalMatrix::from_rows(&[vec![rat(1, 2), rat(1, 3)], vec![rat(3, 2), int(1)]]);
        assert_eq!(rank(&m), 1);
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let big = i64::MAX / 3;
        let m = RationalMatrix::from_i64(3, 3, &[big, big - 1, 7, big - 5, big, 11, 1, 2, 3]);
        assert_eq!(rank_dense(&m), rank_sparse(&m));
        assert_eq!(rank(&m), 3);
    }

    fn small_matrix() -> impl Strategy<Value = RationalMatrix> {
        (1usize..9, 1usize..9).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-3i64..=3, r * c)
                .prop_map(move |v| RationalMatrix::from_i64(r, c, &v))
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in small_matrix()) {
            let k = kernel(&m);
            prop_assert_eq!(rank(&m) + k.dim(), m.cols());
            for v in &k.basis {
                prop_assert!(m.mul_vec(v).iter().all(Zero::is_zero));
            }
        }

        #[test]
        fn dense_and_sparse_agree(m in small_matrix()) {
            prop_assert_eq!(rank_dense(&m), rank_sparse(&m));
            prop_assert_eq!(rank_dense(&m), rref(&m).pivots.len());
            prop_assert_eq!(rank(&m), rank(&m.transpose()));
        }
    }
}
