//! Computations with `m`-replicated algebras of hereditary path algebras over
//! prime fields: modules, Hom and Ext, approximations, tilting modules and
//! their complement chains, and a combinatorial model of the `m`-cluster
//! category.

pub mod algebra;
pub mod approx;
pub mod cluster;
pub mod decompose;
pub mod error;
pub mod export;
pub mod harness;
pub mod homology;
pub mod linalg;
pub mod module;
pub mod par;
pub mod quiver;
pub mod repetitive;
pub mod tilting;
pub mod verify;

pub use error::{Error, Result};
