//! Verification and search toolkit for Beauville structures on finite groups.
//!
//! The [`group::FiniteGroup`] trait is the common interface; backends are permutation groups
//! ([`perm`]), `SL(2,p)`/`PSL(2,p)` ([`matrix`]) and the families in [`constructions`].
//! [`beauville`] holds the structure checks, [`reality`] the σ-operations and the reality
//! decisions, [`gallery`] the explicit generator systems and [`search`] the enumerations.

pub mod arith;
pub mod aut;
pub mod beauville;
pub mod caps;
pub mod cli;
pub mod constructions;
pub mod descriptor;
pub mod error;
pub mod gallery;
pub mod group;
pub mod matrix;
pub mod perm;
pub mod reality;
pub mod search;
pub mod structure;
pub mod verify;

pub use caps::Caps;
pub use descriptor::GroupDescriptor;
pub use error::{Error, Result};
pub use group::FiniteGroup;
