use std::collections::BTreeMap;

use thiserror::Error;

use super::elim::rank;
use super::matrix::RationalMatrix;

/// Betti numbers keyed by degree.
pub type Betti = BTreeMap<usize, usize>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    /// Differentials lower the degree by one.
    Chain,
    /// Differentials raise the degree by one.
    Cochain,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ComplexError {
    #[error("differential out of degree {degree} has shape {got:?}, expected {expected:?}")]
    Shape {
        degree: usize,
        got: (usize, usize),
        expected: (usize, usize),
    },
    #[error("composite of differentials through degree {degree} is nonzero")]
    NotAComplex { degree: usize },
    #[error("degree range [{lo}, {hi}] does not match {dims} dimensions")]
    Range { lo: usize, hi: usize, dims: usize },
}

/// Finite chain or cochain complex of ℚ-vector spaces in degrees `lo..=hi`.
///
/// `differentials[k - lo]` is the map out of degree `k`; it is `None` when
/// the target degree lies outside the range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedComplex {
    lo: usize,
    dims: Vec<usize>,
    differentials: Vec<Option<RationalMatrix>>,
    direction: Direction,
}

impl GradedComplex {
    /// Builds a complex from its dimensions and the map out of each degree.
    /// Shapes are checked here; `d∘d = 0` is checked by [`GradedComplex::validate`].
    pub fn new(
        lo: usize,
        dims: Vec<usize>,
        differentials: Vec<Option<RationalMatrix>>,
        direction: Direction,
    ) -> Result<Self, ComplexError> {
        if dims.is_empty() || differentials.len() != dims.len() {
            return Err(ComplexError::Range {
                lo,
                hi: lo + dims.len().saturating_sub(1),
                dims: differentials.len(),
            });
        }
        let c = GradedComplex {
            lo,
            dims,
            differentials,
            direction,
        };
        for k in c.degrees() {
            let target = c.target(k);
            let expected = target.map(|t| (c.dim(t), c.dim(k)));
            match (&c.differentials[k - lo], expected) {
                (Some(d), Some(exp)) if d.shape() != exp => {
                    return Err(ComplexError::Shape {
                        degree: k,
                        got: d.shape(),
                        expected: exp,
                    })
                }
                (Some(d), None) => {
                    return Err(ComplexError::Shape {
                        degree: k,
                        got: d.shape(),
                        expected: (0, c.dim(k)),
                    })
                }
                _ => {}
            }
        }
        Ok(c)
    }

    /// Chain complex `C_lo <- ... <- C_hi` from the maps `d_k: C_k -> C_{k-1}`
    /// for `k = lo + 1 ..= hi`.
    pub fn chain(lo: usize, dims: Vec<usize>, boundaries: Vec<RationalMatrix>) -> Result<Self, ComplexError> {
        let mut ds: Vec<Option<RationalMatrix>> = vec![None];
        ds.extend(boundaries.into_iter().map(Some));
        if ds.len() < dims.len() {
            ds.resize(dims.len(), None);
        }
        Self::new(lo, dims, ds, Direction::Chain)
    }

    /// Cochain complex `C^lo -> ... -> C^hi` from the maps `d^k: C^k -> C^{k+1}`
    /// for `k = lo ..= hi - 1`.
    pub fn cochain(lo: usize, dims: Vec<usize>, coboundaries: Vec<RationalMatrix>) -> Result<Self, ComplexError> {
        let mut ds: Vec<Option<RationalMatrix>> = coboundaries.into_iter().map(Some).collect();
        ds.resize(dims.len(), None);
        Self::new(lo, dims, ds, Direction::Cochain)
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn lo(&self) -> usize {
        self.lo
    }

    pub fn hi(&self) -> usize {
        self.lo + self.dims.len() - 1
    }

    pub fn degrees(&self) -> std::ops::RangeInclusive<usize> {
        self.lo..=self.hi()
    }

    /// Dimension in degree `k`, zero outside the range.
    pub fn dim(&self, k: usize) -> usize {
        if k < self.lo || k > self.hi() {
            0
        } else {
            self.dims[k - self.lo]
        }
    }

    fn target(&self, k: usize) -> Option<usize> {
        let t = match self.direction {
            Direction::Chain => k.checked_sub(1)?,
            Direction::Cochain => k + 1,
        };
        (t >= self.lo && t <= self.hi()).then_some(t)
    }

    fn source_into(&self, k: usize) -> Option<usize> {
        let s = match self.direction {
            Direction::Chain => k + 1,
            Direction::Cochain => k.checked_sub(1)?,
        };
        (s >= self.lo && s <= self.hi()).then_some(s)
    }

    /// Differential out of degree `k`, if its target is in range.
    pub fn differential(&self, k: usize) -> Option<&RationalMatrix> {
        if k < self.lo || k > self.hi() {
            return None;
        }
        self.differentials[k - self.lo].as_ref()
    }

    /// Zero-shaped differential out of `k` when none is stored.
    fn differential_or_zero(&self, k: usize) -> Option<RationalMatrix> {
        let t = self.target(k)?;
        Some(
            self.differential(k)
                .cloned()
                .unwrap_or_else(|| RationalMatrix::zeros(self.dim(t), self.dim(k))),
        )
    }

    /// Checks `d∘d = 0` through every degree.
    pub fn validate(&self) -> Result<(), ComplexError> {
        for k in self.degrees() {
            let (Some(first), Some(mid)) = (self.differential(k), self.target(k)) else {
                continue;
            };
            let Some(second) = self.differential(mid) else { continue };
            if !second.mul(first).is_zero() {
                return Err(ComplexError::NotAComplex { degree: mid });
            }
        }
        Ok(())
    }

    /// Ranks of the stored differentials, keyed by source degree.
    pub fn differential_ranks(&self) -> BTreeMap<usize, usize> {
        self.degrees()
            .map(|k| (k, self.differential(k).map_or(0, rank)))
            .collect()
    }

    /// Betti numbers in every degree of the range. Rejects non-complexes.
    pub fn betti(&self) -> Result<Betti, ComplexError> {
        self.validate()?;
        let ranks = self.differential_ranks();
        Ok(self
            .degrees()
            .map(|k| {
                let out = ranks[&k];
                let inc = self.source_into(k).map_or(0, |s| ranks[&s]);
                (k, self.dim(k) - out - inc)
            })
            .collect())
    }

    /// Same complex with the differentials transposed and the direction flipped.
    pub fn dual(&self) -> GradedComplex {
        let direction = match self.direction {
            Direction::Chain => Direction::Cochain,
            Direction::Cochain => Direction::Chain,
        };
        let mut ds: Vec<Option<RationalMatrix>> = vec![None; self.dims.len()];
        for k in self.degrees() {
            if let (Some(t), Some(d)) = (self.target(k), self.differential_or_zero(k)) {
                ds[t - self.lo] = Some(d.transpose());
            }
        }
        GradedComplex {
            lo: self.lo,
            dims: self.dims.clone(),
            differentials: ds,
            direction,
        }
    }
}

/// Euler characteristic of a Betti table.
pub fn euler_characteristic(betti: &Betti) -> i64 {
    betti
        .iter()
        .map(|(&k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::matrix::int;

    #[test]
    fn single_line() {
        let c = GradedComplex::chain(0, vec![1], vec![]).unwrap();
        assert_eq!(c.betti().unwrap(), Betti::from([(0, 1)]));
    }

    #[test]
    fn hollow_triangle_and_full_simplex() {
        let d1 = RationalMatrix::from_i64(3, 3, &[-1, -1, 0, 1, 0, -1, 0, 1, 1]);
        let hollow = GradedComplex::chain(0, vec![3, 3], vec![d1.clone()]).unwrap();
        assert_eq!(hollow.betti().unwrap(), Betti::from([(0, 1), (1, 1)]));

        let d2 = RationalMatrix::from_i64(3, 1, &[1, -1, 1]);
        let full = GradedComplex::chain(0, vec![3, 3, 1], vec![d1, d2]).unwrap();
        assert_eq!(full.betti().unwrap(), Betti::from([(0, 1), (1, 0), (2, 0)]));
        assert_eq!(full.dual().betti().unwrap(), full.betti().unwrap());
    }

    #[test]
    fn rejects_non_complex() {
        let d1 = RationalMatrix::from_i64(1, 1, &[1]);
        let d2 = RationalMatrix::from_i64(1, 1, &[1]);
        let c = GradedComplex::chain(0, vec![1, 1, 1], vec![d1, d2]).unwrap();
        assert_eq!(c.betti(), Err(ComplexError::NotAComplex { degree: 1 }));
    }

    #[test]
    fn rejects_bad_shape() {
        let d1 = RationalMatrix::from_i64(1, 2, &[1, 1]);
        assert!(matches!(
            GradedComplex::chain(0, vec![2, 2], vec![d1]),
            Err(ComplexError::Shape { degree: 1, .. })
        ));
    }

    #[test]
    fn cochain_direction() {
        let d0 = RationalMatrix::from_rows(&[vec![int(-1), int(1)]]);
        let c = GradedComplex::cochain(0, vec![2, 1], vec![d0]).unwrap();
        assert_eq!(c.betti().unwrap(), Betti::from([(0, 1), (1, 0)]));
    }
}
