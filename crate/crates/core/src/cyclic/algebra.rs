use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactalg::{int, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("an algebra needs at least one basis element")]
    Empty,
    #[error("{labels} labels given for a {dim}-dimensional algebra")]
    LabelCount { labels: usize, dim: usize },
    #[error("basis label {0:?} appears twice")]
    DuplicateLabel(String),
    #[error("product {left}*{right} has {got} coordinates, expected {expected}")]
    Shape {
        left: String,
        right: String,
        got: usize,
        expected: usize,
    },
    #[error("the first basis element {unit:?} is not a left unit: {unit}*{other} != {other}")]
    LeftUnit { unit: String, other: String },
    #[error("the first basis element {unit:?} is not a right unit: {other}*{unit} != {other}")]
    RightUnit { unit: String, other: String },
    #[error("basis triple ({i}, {j}, {k}) = ({a}, {b}, {c}) is not associative")]
    NotAssociative {
        i: usize,
        j: usize,
        k: usize,
        a: String,
        b: String,
        c: String,
    },
}

/// Finite-dimensional unital ℚ-algebra given by structure constants.
/// The first basis element is the unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAlgebra {
    labels: Vec<String>,
    /// `table[i][j]`: nonzero coordinates of `e_i * e_j`.
    table: Vec<Vec<Vec<(usize, Rational)>>>,
}

impl FiniteAlgebra {
    /// `constants[i][j][l]` is the coefficient of `e_l` in `e_i * e_j`.
    pub fn new(labels: Vec<String>, constants: Vec<Vec<Vec<Rational>>>) -> Result<Self, AlgebraError> {
        let d = constants.len();
        if d == 0 {
            return Err(AlgebraError::Empty);
        }
        if labels.len() != d {
            return Err(AlgebraError::LabelCount {
                labels: labels.len(),
                dim: d,
            });
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(AlgebraError::DuplicateLabel(l.clone()));
            }
        }
        let mut table = Vec::with_capacity(d);
        for (i, row) in constants.iter().enumerate() {
            let mut out = Vec::with_capacity(d);
            for j in 0..d {
                let v = row.get(j).map(Vec::as_slice).unwrap_or(&[]);
                if v.len() != d || row.len() != d {
                    return Err(AlgebraError::Shape {
                        left: labels[i].clone(),
                        right: labels[j.min(labels.len() - 1)].clone(),
                        got: v.len(),
                        expected: d,
                    });
                }
                out.push(v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(l, c)| (l, c.clone())).collect());
            }
            table.push(out);
        }
        let a = FiniteAlgebra { labels, table };
        a.check()?;
        Ok(a)
    }

    fn check(&self) -> Result<(), AlgebraError> {
        let d = self.dim();
        for i in 0..d {
            let e = self.basis_vector(i);
            if self.multiply(&self.basis_vector(0), &e) != e {
                return Err(AlgebraError::LeftUnit {
                    unit: self.labels[0].clone(),
                    other: self.labels[i].clone(),
                });
            }
            if self.multiply(&e, &self.basis_vector(0)) != e {
                return Err(AlgebraError::RightUnit {
                    unit: self.labels[0].clone(),
                    other: self.labels[i].clone(),
                });
            }
        }
        for i in 0..d {
            for j in 0..d {
                let ij = self.dense_product(i, j);
                for k in 0..d {
                    let left = self.multiply(&ij, &self.basis_vector(k));
                    let right = self.multiply(&self.basis_vector(i), &self.dense_product(j, k));
                    if left != right {
                        return Err(AlgebraError::NotAssociative {
                            i,
                            j,
                            k,
                            a: self.labels[i].clone(),
                            b: self.labels[j].clone(),
                            c: self.labels[k].clone(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Sparse coordinates of `e_i * e_j`.
    pub fn product(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.table[i][j]
    }

    pub fn dense_product(&self, i: usize, j: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        for (l, c) in &self.table[i][j] {
            v[*l] = c.clone();
        }
        v
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        v[i] = Rational::one();
        v
    }

    pub fn multiply(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim()];
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let s = xi * yj;
                for (l, c) in &self.table[i][j] {
                    out[*l] += &s * c;
                }
            }
        }
        out
    }

    /// Dense structure constants, `[i][j][l]`.
    pub fn structure_constants(&self) -> Vec<Vec<Vec<Rational>>> {
        (0..self.dim())
            .map(|i| (0..self.dim()).map(|j| self.dense_product(i, j)).collect())
            .collect()
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim()).all(|i| (0..i).all(|j| self.table[i][j] == self.table[j][i]))
    }
}

/// Builds an algebra from the products of non-unit basis elements; products
/// with the unit are filled in. Unlisted products are zero.
fn from_products(labels: &[&str], products: &[(usize, usize, &[(usize, i64)])]) -> FiniteAlgebra {
    let d = labels.len();
    let mut c = vec![vec![vec![Rational::zero(); d]; d]; d];
    for i in 0..d {
        c[0][i][i] = Rational::one();
        c[i][0][i] = Rational::one();
    }
    for &(i, j, terms) in products {
        for &(l, v) in terms {
            c[i][j][l] = int(v);
        }
    }
    FiniteAlgebra::new(labels.iter().map(|s| s.to_string()).collect(), c).expect("bundled algebra is valid")
}

/// ℚ.
pub fn ground_field() -> FiniteAlgebra {
    from_products(&["1"], &[])
}

/// ℚ × ℚ with basis `1 = (1,1)`, `e = (1,0)`.
pub fn split_pair() -> FiniteAlgebra {
    from_products(&["1", "e"], &[(1, 1, &[(1, 1)])])
}

/// ℚ[x]/(x²).
pub fn dual_numbers() -> FiniteAlgebra {
    from_products(&["1", "x"], &[])
}

/// M₂(ℚ) with basis `1, e11, e12, e21`; `e22 = 1 - e11`.
pub fn matrix_algebra() -> FiniteAlgebra {
    from_products(
        &["1", "e11", "e12", "e21"],
        &[
            (1, 1, &[(1, 1)]),
            (1, 2, &[(2, 1)]),
            (2, 3, &[(1, 1)]),
            (3, 1, &[(3, 1)]),
            (3, 2, &[(0, 1), (1, -1)]),
        ],
    )
}

/// Upper-triangular 2×2 matrices with basis `1, e11, e12`.
pub fn upper_triangular() -> FiniteAlgebra {
    from_products(&["1", "e11", "e12"], &[(1, 1, &[(1, 1)]), (1, 2, &[(2, 1)])])
}

/// Every bundled algebra with a short name.
pub fn bundled() -> Vec<(&'static str, FiniteAlgebra)> {
    vec![
        ("ground-field", ground_field()),
        ("split-pair", split_pair()),
        ("dual-numbers", dual_numbers()),
        ("matrix-2x2", matrix_algebra()),
        ("upper-triangular", upper_triangular()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_algebras_are_valid() {
        let all = bundled();
        assert_eq!(all.len(), 5);
        assert!(dual_numbers().is_commutative());
        assert!(!matrix_algebra().is_commutative());
        let m = matrix_algebra();
        // e21 * e12 = e22 = 1 - e11
        assert_eq!(m.dense_product(3, 2), vec![int(1), int(-1), int(0), int(0)]);
    }

    #[test]
    fn rejects_non_associative() {
        // 1, x, y with x*y = x and everything else zero: (x*y)*y = x but x*(y*y) = 0.
        let mut c = vec![vec![vec![Rational::zero(); 3]; 3]; 3];
        for i in 0..3 {
            c[0][i][i] = int(1);
            c[i][0][i] = int(1);
        }
        c[1][2][1] = int(1);
        let err = FiniteAlgebra::new(vec!["1".into(), "x".into(), "y".into()], c).unwrap_err();
        assert_eq!(
            err,
            AlgebraError::NotAssociative {
                i: 1,
                j: 2,
                k: 2,
                a: "x".into(),
                b: "y".into(),
                c: "y".into()
            }
        );
    }

    #[test]
    fn rejects_bad_unit() {
        let c = vec![vec![vec![int(1), int(0)], vec![int(0), int(0)]], vec![vec![int(0), int(1)], vec![int(0), int(0)]]];
        assert!(matches!(
            FiniteAlgebra::new(vec!["u".into(), "x".into()], c),
            Err(AlgebraError::LeftUnit { .. })
        ));
    }
}
