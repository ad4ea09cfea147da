//! Finite permutation groups by element enumeration.
//!
//! Points are 1-based at the API boundary and 0-based in storage. Groups
//! keep a sorted element list; subgroup computations (normalizers, normal
//! closures, cores, coset actions, normal subgroup lattices) work on that
//! list directly.

mod group;
mod lattice;
mod permutation;
mod subgroup;
pub(crate) mod table;

pub use group::{Caps, PermGroup};
pub(crate) use lattice::NormalLattice;
pub use permutation::Permutation;
pub use subgroup::{CosetAction, SubgroupRel};
