//! Finite field extensions modeled by their Galois-correspondence pairs.
//!
//! An extension `L/K` of degree `n` is represented by the pair `(G, H)` with
//! `G = Gal(L̃/K)` and `H = Gal(L̃/L)`, so `n = [G:H]`. Fields never appear
//! directly: every intermediate field is the fixed field of a subgroup, and
//! every statement about fields is checked on the corresponding subgroups.
//!
//! - [`permcore`]: permutation groups, normalizers, normal closures, coset
//!   actions, normal subgroup lattices.
//! - [`cluster`]: the invariants `(n, r, s, t, u)` and product models.
//! - [`chains`]: descending (normalizer) and ascending (normal closure)
//!   chains and their coincidence.
//! - [`magnification`]: direct-product decompositions and the primitivity
//!   deciders built on them.
//! - [`constructions`]: the concrete group families.

pub mod chains;
pub mod cluster;
pub mod constructions;
mod error;
pub mod io;
pub mod magnification;
pub mod parallel;
pub mod permcore;

pub use chains::{AscendingChain, CoincidenceCertificate, DescendingChain};
pub use cluster::{ClusterInvariants, ExtensionModel, MagnificationTuple};
pub use constructions::FamilySpec;
pub use error::{Error, Result};
pub use magnification::{DecompositionWitness, MagnificationKind};
pub use permcore::{Caps, CosetAction, PermGroup, Permutation, SubgroupRel};
