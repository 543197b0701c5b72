//! Exact scalar fields and univariate polynomial tools over them.

mod field;
mod roots;
mod unipoly;

use thiserror::Error;

pub use field::{Coeff, Field, Scalar};
pub use roots::{is_irreducible, univariate_roots, Root, RootSet};
pub use unipoly::UniPoly;


#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("extensions must be built over a prime field")]
    NestedExtension,
    #[error("invalid extension modulus: {0}")]
    BadModulus(String),
    #[error("zero polynomial has no finite root set")]
    ZeroPolynomial,
    #[error("could not certify irreducibility of {0}")]
    IrreducibilityUndecided(String),
}
