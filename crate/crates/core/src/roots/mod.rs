//! Root systems, Weyl groups and orthogonal-root cascades.

mod cartan_type;
mod cascade;
mod system;
mod weyl;

pub use cartan_type::{CartanType, Family, MAX_CLASSICAL_RANK};
pub use cascade::{
    cascade, cascade_product, orthogonal_subsystem, pairwise_orthogonal, Cascade, CascadeKind,
    CascadeRoot, Component,
};
pub use system::{Root, RootSystem};
pub use weyl::{WeylElement, ENUMERATION_LIMIT};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootError {
    #[error("unsupported type label {0:?}")]
    UnsupportedType(String),
    #[error("{0} is not a root")]
    NotARoot(String),
    #[error("simple index {0} out of range")]
    BadIndex(usize),
    #[error("elements belong to different root systems")]
    MixedRootSystems,
    #[error("Weyl group of order {0} is too large to enumerate")]
    GroupTooLarge(u128),
    #[error("cascade kind {0:?} is not defined for {1}")]
    KindUnavailable(CascadeKind, CartanType),
    #[error("empty list of Weyl elements")]
    EmptyInput,
}
