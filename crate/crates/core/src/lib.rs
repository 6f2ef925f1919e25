//! Computational core for finite commutative unital rings.
//!
//! Rings are stored as dense Cayley tables over element indices. On top of
//! that sit exhaustive ideal enumeration, prime/maximal/primary/semiprime
//! predicates, radicals, quotient rings, unital homomorphisms, and a small
//! symbolic model of `Z^k` for the one infinite ring the audit needs.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod bitset;
pub mod construct;
pub mod hom;
pub mod ideal;
pub mod lattice;
pub mod names;
pub mod outcome;
pub mod quotient;
pub mod ring;
pub mod zmodel;

pub use bitset::ElementSet;
pub use construct::{make_algebra, make_boolean, make_product, make_zn};
pub use hom::{audit_thm3, endomorphisms, HomError, HomKind, RingHom, DEFAULT_ENDO_CAP};
pub use ideal::{Ideal, IdealError};
pub use lattice::{all_ideals, classify_ring, Classification, IdealLattice};
pub use outcome::ClaimOutcome;
pub use quotient::{audit_thm1, quotient_ring, QuotientPresentation};
pub use ring::{make_table_ring, Axiom, ElementId, FiniteRing, RingError, MAX_ORDER};
pub use zmodel::{audit_ex2, ZModelError, ZProductIdeal};
