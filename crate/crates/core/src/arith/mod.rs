//! Exact arithmetic over the tower `Q(zeta_m)(t)`.

pub mod cyclo;
mod matrix;
mod parse;
mod poly;
mod random;
mod scalar;

pub use matrix::{poly_from_roots, ExactMatrix};
pub use parse::parse_scalar;
pub use random::{random_scalar, SeedStream};
pub use scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("singular matrix")]
    Singular,
    #[error("cyclotomic order {0} is outside the supported range 1..=240")]
    UnsupportedOrder(u32),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("cannot parse scalar {input:?} at byte {at}: {msg}")]
    Parse { input: String, at: usize, msg: String },
}
