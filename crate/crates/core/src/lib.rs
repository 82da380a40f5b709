//! Finite groups, permutation groups, Cayley digraphs and their automorphism
//! groups, with exact counting of inverse-closed connection sets.

pub mod aut;
pub mod cayley;
pub mod comb;
pub mod digraph;
pub mod elements;
pub mod error;
pub mod group;
pub mod partition;
pub mod perm;

pub use digraph::Digraph;
pub use elements::{ElementSet, HalfInt, MAX_ORDER};
pub use error::{Error, Result};
pub use group::{load_group, GroupTable, Subgroup};
pub use partition::Partition;
pub use perm::{PermGroup, Permutation};
