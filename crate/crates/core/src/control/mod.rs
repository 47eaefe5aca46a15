//! Pole and pinching parameters, their perversity, and a truncated-cochain
//! model of the cone used to cross-check intersection homology.

mod crosscheck;
mod params;
mod truncate;

use thiserror::Error;

pub use crosscheck::{
    bundled_links, cone_bounds, cone_intersection_betti, consistent_conventions, parity_sums, resolve_convention,
    same_ranks, theorem0_crosscheck, theorem0_for_floor, theorem3_crosscheck, theorem3_for_floor, Convention,
    Theorem0Report, Theorem3Report,
};
pub use params::{perversity_from_control, pole_exponent, ControlParams};
pub use truncate::{truncate_cochain, TruncatedConeModel};

use crate::stratified::PerversityError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ControlError {
    #[error("codimension {j} is outside 2..={n}")]
    Codimension { j: usize, n: usize },
    #[error("codimension {j} needs both alpha and beta")]
    Unpaired { j: usize },
    #[error("{name}_{j} = {value} must be positive")]
    NotPositive { j: usize, name: &'static str, value: String },
    #[error("codimension {j} has no control parameters")]
    Inactive { j: usize },
    #[error("beta_{j}/alpha_{j} = {ratio} is an integer; the ratio must not be integral")]
    IntegralRatio { j: usize, ratio: String },
    #[error("[beta_{j}/alpha_{j}] does not fit in 64 bits")]
    TooLarge { j: usize },
    #[error("floor condition fails at codimension {j}: [beta/alpha] goes from {floor} to {next_floor}, allowed {floor}..={max}", max = floor + 1)]
    FloorCondition { j: usize, floor: i64, next_floor: i64 },
    #[error("over-controlled: p_{j} = {value} is negative")]
    OverControlled { j: usize, value: i64 },
    #[error("active codimensions cannot be joined by a perversity: {0}")]
    Interpolation(PerversityError),
    #[error("expected a cochain complex")]
    NotCochain,
    #[error("cutoff {0} is below -1")]
    Cutoff(i64),
    #[error("link is empty")]
    EmptyLink,
    #[error("the cone over this link needs exactly one active codimension, {n}")]
    SingleCodimension { n: usize },
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, Rational};
    use crate::stratified::Perversity;
    use proptest::prelude::*;
    use std::collections::BTreeMap;

    fn positive() -> impl Strategy<Value = Rational> {
        (1i64..=40, 1i64..=12).prop_map(|(a, b)| rat(a, b))
    }

    fn random_params() -> impl Strategy<Value = ControlParams> {
        (2usize..=6)
            .prop_flat_map(|n| (Just(n), proptest::collection::vec((any::<bool>(), positive(), positive()), n - 1)))
            .prop_map(|(n, entries)| {
                let mut alpha = BTreeMap::new();
                let mut beta = BTreeMap::new();
                for (i, (on, a, b)) in entries.into_iter().enumerate() {
                    if on {
                        alpha.insert(i + 2, a);
                        beta.insert(i + 2, b);
                    }
                }
                ControlParams::new(n, alpha, beta).unwrap()
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn output_is_a_perversity(params in random_params()) {
            if let Ok(p) = perversity_from_control(&params) {
                prop_assert!(Perversity::new(p.values().to_vec()).is_ok());
                prop_assert_eq!(p.n(), params.n());
                for j in params.active() {
                    let m = pole_exponent(&params, j).unwrap();
                    prop_assert_eq!(p.get(j), j as i64 - 2 - m);
                }
            }
        }

        #[test]
        fn scaling_invariance(params in random_params(), c in positive()) {
            let scaled = params.scaled(&c);
            for j in params.active() {
                prop_assert_eq!(pole_exponent(&params, j), pole_exponent(&scaled, j));
            }
            prop_assert_eq!(perversity_from_control(&params), perversity_from_control(&scaled));
        }
    }
}
