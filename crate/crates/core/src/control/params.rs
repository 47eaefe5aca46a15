use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use super::ControlError;
use crate::exactalg::{rat, Rational};
use crate::stratified::Perversity;

/// Pinching numbers `α_j` and control numbers `β_j` for the active
/// codimensions `2 <= j <= n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ControlParams {
    n: usize,
    pairs: BTreeMap<usize, (Rational, Rational)>,
}

impl ControlParams {
    pub fn new(
        n: usize,
        alpha: BTreeMap<usize, Rational>,
        beta: BTreeMap<usize, Rational>,
    ) -> Result<Self, ControlError> {
        for &j in alpha.keys().chain(beta.keys()) {
            if j < 2 || j > n {
                return Err(ControlError::Codimension { j, n });
            }
            if !alpha.contains_key(&j) || !beta.contains_key(&j) {
                return Err(ControlError::Unpaired { j });
            }
        }
        let mut pairs = BTreeMap::new();
        for (j, a) in alpha {
            let b = beta[&j].clone();
            for (name, v) in [("alpha", &a), ("beta", &b)] {
                if !v.is_positive() {
                    return Err(ControlError::NotPositive {
                        j,
                        name,
                        value: v.to_string(),
                    });
                }
            }
            pairs.insert(j, (a, b));
        }
        Ok(ControlParams { n, pairs })
    }

    /// One active codimension `n` with `α = 1`, `β = m + 1/2`, so `[β/α] = m`.
    pub fn with_floor(n: usize, m: i64) -> Result<Self, ControlError> {
        let alpha = BTreeMap::from([(n, rat(1, 1))]);
        let beta = BTreeMap::from([(n, rat(2 * m + 1, 2))]);
        Self::new(n, alpha, beta)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn active(&self) -> impl Iterator<Item = usize> + '_ {
        self.pairs.keys().copied()
    }

    pub fn alpha(&self, j: usize) -> Option<&Rational> {
        self.pairs.get(&j).map(|p| &p.0)
    }

    pub fn beta(&self, j: usize) -> Option<&Rational> {
        self.pairs.get(&j).map(|p| &p.1)
    }

    /// Same parameters with every `α_j` and `β_j` multiplied by `c > 0`.
    pub fn scaled(&self, c: &Rational) -> Self {
        ControlParams {
            n: self.n,
            pairs: self.pairs.iter().map(|(&j, (a, b))| (j, (a * c, b * c))).collect(),
        }
    }
}

/// `[β_j / α_j]`, rejecting integral ratios.
pub fn pole_exponent(params: &ControlParams, j: usize) -> Result<i64, ControlError> {
    let (a, b) = params.pairs.get(&j).ok_or(ControlError::Inactive { j })?;
    let ratio = b / a;
    if ratio.is_integer() {
        return Err(ControlError::IntegralRatio {
            j,
            ratio: ratio.to_string(),
        });
    }
    let floor = ratio.numer().div_floor(ratio.denom());
    floor.to_i64().ok_or(ControlError::TooLarge { j })
}

/// `p_j = j - 2 - [β_j/α_j]` on active codimensions. Inactive codimensions
/// take the least values that keep the perversity steps in `{0, 1}`.
pub fn perversity_from_control(params: &ControlParams) -> Result<Perversity, ControlError> {
    let n = params.n;
    let mut floors = BTreeMap::new();
    for j in params.active() {
        floors.insert(j, pole_exponent(params, j)?);
    }
    for (&j, &m) in &floors {
        if let Some(&next) = floors.get(&(j + 1)) {
            if next < m || next > m + 1 {
                return Err(ControlError::FloorCondition {
                    j,
                    floor: m,
                    next_floor: next,
                });
            }
        }
    }
    let target: BTreeMap<usize, i64> = floors.iter().map(|(&j, &m)| (j, j as i64 - 2 - m)).collect();
    if let Some((&j, &v)) = target.iter().find(|(_, &v)| v < 0) {
        return Err(ControlError::OverControlled { j, value: v });
    }
    let mut values = vec![0i64; n + 1];
    for j in 3..=n {
        values[j] = match target.get(&j) {
            Some(&v) => v,
            None => match target.range(j..).next() {
                Some((&next, &v)) => values[j - 1].max(v - (next - j) as i64),
                None => values[j - 1],
            },
        };
    }
    Perversity::new(values).map_err(ControlError::Interpolation)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: usize, pairs: &[(usize, Rational, Rational)]) -> ControlParams {
        ControlParams::new(
            n,
            pairs.iter().map(|(j, a, _)| (*j, a.clone())).collect(),
            pairs.iter().map(|(j, _, b)| (*j, b.clone())).collect(),
        )
        .unwrap()
    }

    #[test]
    fn pole_exponents() {
        assert_eq!(pole_exponent(&params(3, &[(3, rat(1, 1), rat(3, 2))]), 3), Ok(1));
        assert_eq!(pole_exponent(&params(3, &[(3, rat(2, 1), rat(5, 1))]), 3), Ok(2));
        assert!(matches!(
            pole_exponent(&params(3, &[(3, rat(1, 1), rat(2, 1))]), 3),
            Err(ControlError::IntegralRatio { j: 3, .. })
        ));
        assert!(matches!(
            pole_exponent(&params(3, &[(3, rat(1, 1), rat(3, 2))]), 2),
            Err(ControlError::Inactive { j: 2 })
        ));
    }

    #[test]
    fn perversity_examples() {
        let p = perversity_from_control(&params(3, &[(3, rat(1, 1), rat(3, 2))])).unwrap();
        assert_eq!(p.values(), &[0, 0, 0, 0]);
        let p = perversity_from_control(&params(
            4,
            &[(3, rat(1, 1), rat(3, 2)), (4, rat(1, 1), rat(5, 2))],
        ))
        .unwrap();
        assert_eq!(p.values(), &[0, 0, 0, 0, 0]);
        let p = perversity_from_control(&params(2, &[(2, rat(1, 1), rat(1, 2))])).unwrap();
        assert_eq!(p.values(), &[0, 0, 0]);
        assert!(matches!(
            perversity_from_control(&params(4, &[(3, rat(1, 1), rat(3, 2)), (4, rat(1, 1), rat(7, 2))])),
            Err(ControlError::FloorCondition { j: 3, floor: 1, next_floor: 3 })
        ));
        assert!(matches!(
            perversity_from_control(&params(3, &[(3, rat(1, 1), rat(5, 2))])),
            Err(ControlError::OverControlled { j: 3, value: -1 })
        ));
    }

    #[test]
    fn gaps_are_interpolated() {
        // Only codimension 6 active with floor 1: p_6 = 3, reached by unit steps.
        let p = perversity_from_control(&params(6, &[(6, rat(1, 1), rat(3, 2))])).unwrap();
        assert_eq!(p.values(), &[0, 0, 0, 0, 1, 2, 3]);
        // p_3 = 0 and p_5 = 3 are too far apart for unit steps.
        assert!(matches!(
            perversity_from_control(&params(6, &[(3, rat(1, 1), rat(3, 2)), (5, rat(1, 1), rat(1, 3))])),
            Err(ControlError::Interpolation(_))
        ));
    }

    #[test]
    fn rejects_malformed() {
        let one = BTreeMap::from([(3, rat(1, 1))]);
        assert!(matches!(
            ControlParams::new(3, one.clone(), BTreeMap::new()),
            Err(ControlError::Unpaired { j: 3 })
        ));
        assert!(matches!(
            ControlParams::new(2, one.clone(), one.clone()),
            Err(ControlError::Codimension { j: 3, n: 2 })
        ));
        assert!(matches!(
            ControlParams::new(3, one, BTreeMap::from([(3, rat(-1, 2))])),
            Err(ControlError::NotPositive { j: 3, name: "beta", .. })
        ));
    }
}
