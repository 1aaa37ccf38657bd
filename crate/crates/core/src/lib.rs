//! Finite metacyclic groups: isomorphism invariants, canonical presentations
//! and enumeration by order.
//!
//! Every finite metacyclic group has a presentation
//!
//! ```text
//! G(m,n,s,t) = < a, b | a^m = 1, b^n = a^s, a^b = a^t >
//! ```
//!
//! with `s(t-1) ≡ t^n - 1 ≡ 0 (mod m)`. The parameters are not invariants of the
//! group. This crate computes a minimal metacyclic factorization of such a
//! group, derives the total isomorphism invariant `(m_G, n_G, s_G, Δ_G)` and its
//! integer form `(m_G, n_G, s_G, t_G)`, decides isomorphism, tests which
//! invariant tuples are realized, builds a group from realizable invariants and
//! lists one representative of every isomorphism class of a given order.
//!
//! The [`oracle`] module is an independent brute-force isomorphism test over the
//! concrete element model in [`engine`]; it never touches the invariant code and
//! exists to cross-check it.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![warn(rust_2018_idioms, missing_copy_implementations, unused_qualifications)]

extern crate alloc;

pub mod arith;
pub mod engine;
pub mod enumerate;
mod error;
pub mod invariants;
pub mod minimize;
pub mod oracle;
pub mod units;

pub use engine::{GroupElement, MetacyclicGroup, MetacyclicParams};
pub use enumerate::{metacyclic_groups_by_order, parameter_tuples, RealizableTuple};
pub use error::{Error, Result};
pub use invariants::{
    are_isomorphic, construct, is_nilpotent, is_realizable, mcinv, metacyclic_id, nilpotent_id,
    MCInv, MetacyclicId,
};
pub use minimize::{is_canonical, minimize, MinimalFactorization};
pub use units::{Sign, TInvariants, UnitSubgroup};
