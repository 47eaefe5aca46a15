use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PerversityError {
    #[error("a perversity needs values p_0..p_n, got none")]
    Empty,
    #[error("p_{j} = {value}, but p_0 = p_1 = p_2 = 0 is required")]
    LowCodimension { j: usize, value: i64 },
    #[error("step from p_{j} to p_{next} must be 0 or 1, got {step}", next = j + 1)]
    Step { j: usize, step: i64 },
    #[error("p_{j} = {value} exceeds the total perversity t_{j} = {total}")]
    ExceedsTotal { j: usize, value: i64, total: i64 },
    #[error("perversity has length {got}, expected {expected}")]
    Length { expected: usize, got: usize },
}

/// Goresky–MacPherson perversity `(p_0, ..., p_n)`.
///
/// Invariants: `p_0 = p_1 = p_2 = 0` and `p_j <= p_{j+1} <= p_j + 1` for `j >= 2`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perversity {
    values: Vec<i64>,
}

impl Perversity {
    pub fn new(values: Vec<i64>) -> Result<Self, PerversityError> {
        if values.is_empty() {
            return Err(PerversityError::Empty);
        }
        for (j, &v) in values.iter().enumerate().take(3) {
            if v != 0 {
                return Err(PerversityError::LowCodimension { j, value: v });
            }
        }
        for j in 2..values.len().saturating_sub(1) {
            let step = values[j + 1] - values[j];
            if !(0..=1).contains(&step) {
                return Err(PerversityError::Step { j, step });
            }
        }
        Ok(Perversity { values })
    }

    pub fn zero(n: usize) -> Self {
        Perversity {
            values: vec![0; n + 1],
        }
    }

    /// `t_j = j - 2` for `j >= 2`.
    pub fn total(n: usize) -> Self {
        Perversity {
            values: (0..=n).map(total_value).collect(),
        }
    }

    /// `t̄ - p̄`; fails where `p̄` exceeds `t̄`.
    pub fn complement(&self) -> Result<Self, PerversityError> {
        let values = self
            .values
            .iter()
            .enumerate()
            .map(|(j, &v)| {
                let t = total_value(j);
                if v > t {
                    Err(PerversityError::ExceedsTotal { j, value: v, total: t })
                } else {
                    Ok(t - v)
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Perversity::new(values)
    }

    /// Ambient dimension `n`.
    pub fn n(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn get(&self, j: usize) -> i64 {
        self.values[j]
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &Perversity) -> bool {
        self.values.len() == other.values.len() && self.values.iter().zip(&other.values).all(|(a, b)| a <= b)
    }

    /// `p̄ + q̄` as a raw value vector.
    pub fn sum_values(&self, other: &Perversity) -> Vec<i64> {
        self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect()
    }

    /// Every perversity in ambient dimension `n`, in lexicographic order.
    pub fn all(n: usize) -> Vec<Perversity> {
        let mut out = vec![Perversity::zero(n)];
        for j in 3..=n {
            let mut next = Vec::with_capacity(out.len() * 2);
            for p in out {
                for step in 0..=1 {
                    let mut q = p.clone();
                    q.values[j] = q.values[j - 1] + step;
                    for k in (j + 1)..=n {
                        q.values[k] = q.values[j];
                    }
                    next.push(q);
                }
            }
            out = next;
        }
        out.sort();
        out
    }
}

fn total_value(j: usize) -> i64 {
    (j as i64 - 2).max(0)
}

impl fmt::Display for Perversity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self.values.iter().map(ToString::to_string).collect();
        write!(f, "({})", vs.join(","))
    }
}

impl fmt::Debug for Perversity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perversity{self}")
    }
}
