//! Exact computations with Bruhat cells of conjugacy classes in simple
//! algebraic groups, and the atlas of spherical classes.

pub mod arith;
pub mod atlas;
pub mod bruhat;
pub mod cli;
pub mod groups;
pub mod roots;
pub mod sphericity;
