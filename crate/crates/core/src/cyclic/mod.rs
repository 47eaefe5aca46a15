//! Hochschild, cyclic and periodic cyclic homology of finite-dimensional
//! algebras and of mixed complexes, truncated at a degree `K`.

pub mod algebra;
mod connes;
mod hochschild;
mod mixed;

use thiserror::Error;

pub use algebra::{AlgebraError, FiniteAlgebra};
pub use connes::connes_quotient_cyclic;
pub use hochschild::{
    connes_b, cyclic_operator, hh_betti, hochschild_boundary, reduced_complex, HochschildComplex, Normalization,
};
pub use mixed::{
    cyclic_betti, induced_rank, mixed_from_algebra, mixed_from_cochain, periodic_betti, sbi_check, Identity,
    IdentityCheck, MixedComplex, Periodic, SbiNode, SbiPlace, SbiReport, TotalComplex,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CyclicError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("degree {degree} is out of range, need at least {min}")]
    Degree { degree: usize, min: usize },
    #[error("truncation degree {top} is too small, need at least {min}")]
    Truncation { top: usize, min: usize },
    #[error("mixed complex shape mismatch: {0}")]
    Shape(String),
    #[error("{identity} fails on degree {degree}")]
    NotMixed { identity: Identity, degree: usize },
    #[error("expected a cochain complex")]
    NotCochain,
}
