//! Dimensions and weight multiplicities of irreducible rational modules for
//! `SL_{l+1}` over algebraically closed fields of positive characteristic.

pub mod dim_classifier;
pub mod error;
pub mod freudenthal;
pub mod linalg;
pub mod multiplicity_oracles;
pub mod prime;
pub mod realization;
pub mod root_system;
pub mod tensor_constructions;
pub mod verma_gram;
pub mod weyl_orbits;

pub use error::{Error, Result};
pub use prime::Prime;
pub use root_system::{PositiveRoot, Rank, RootVector, Weight};
