//! Classical matrix groups, their Lie algebras and conjugacy invariants.

mod context;
mod element;
mod embed;
mod io;
mod jordan;
mod lie;

pub use context::GroupContext;
pub use element::GroupElement;
pub use io::{element_from_json, element_to_json, ElementJson, Entry};
pub use embed::{random_conjugate, tau_hat, Embedding};
pub use jordan::{
    is_semisimple, is_unipotent, jordan_type, mixed_decomposition, MixedDecomposition, Partition,
};
pub use lie::{
    class_dim, reflection_representative, root_element, torus_element, LieAlgebraElement,
};

use crate::arith::ArithError;
use crate::roots::RootError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("unsupported group: {0}")]
    BadRank(String),
    #[error("matrix is not in the group: {0}")]
    NotInGroup(String),
    #[error("{0} is not a root")]
    NotARoot(String),
    #[error("Weyl element has no representative here: {0}")]
    NotInWeylImage(String),
    #[error("incompatible recipe: {0}")]
    IncompatibleRecipe(String),
    #[error("wrong family: {0}")]
    WrongFamily(String),
    #[error("malformed element: {0}")]
    Parse(String),
    #[error("element is not unipotent")]
    NotUnipotent,
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Root(#[from] RootError),
}
