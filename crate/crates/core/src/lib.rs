//! Finite skew braces given by explicit Cayley tables.
//!
//! A (right) skew brace is a set with two group operations, written `·`
//! (additive) and `∘` (multiplicative), sharing the identity `0` and
//! satisfying `(x·y)∘z = (x∘z)·z⁻¹·(y∘z)`. The crate provides:
//!
//! * [`finite_group`]: groups as tables, subgroup lattices, automorphisms,
//!   quotients, Hall subgroups, semidirect products;
//! * [`skew_brace`]: validation, the gamma function, sub-braces, ideals,
//!   quotients and the opposite brace;
//! * [`structure`]: supersolubility and constructive Sylow and Hall
//!   sub-skew braces with checkable proof traces;
//! * [`enumeration`]: all braces on a group through regular subgroups of its
//!   holomorph, and a catalog of small groups;
//! * [`brace_file`]: the plain-text brace file format.

pub mod arith;
pub mod brace_file;
pub mod elemset;
pub mod enumeration;
pub mod finite_group;
pub mod perm;
pub mod skew_brace;
pub mod structure;

pub use elemset::ElemSet;
pub use finite_group::{CayleyGroup, GroupError};
pub use perm::Perm;
pub use skew_brace::{BraceError, SkewBrace};
