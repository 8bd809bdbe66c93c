//! Exact computational group theory for compact Lie group classifying spaces.
//!
//! Everything here is computed over the rationals with arbitrary-precision
//! integers: Weyl groups are materialized as integer matrix groups, finite
//! group predicates (Sylow subgroups, nilpotence, normal p-complements,
//! quotients, complements) are decided by enumeration, and invariant theory
//! (Molien series, invariant degrees, the reflection-generation criterion)
//! is done with exact polynomial arithmetic.  The `pcompact` module combines
//! these into the prime-set classification routines; the companion CLI crate
//! adds IO, caching and serialization on top.
//!
//! The crate is `no_std` compatible (requires `alloc`); the `std` feature,
//! enabled by default, is only forwarded to the numeric dependencies.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod catalog;
pub mod fingroup;
pub mod hom;
pub mod matrix;
pub mod pcompact;
pub mod poly;
pub mod primes;
pub mod rational;
pub mod reflect;
pub mod weyl;

pub use catalog::CatalogName;
pub use fingroup::{FinGroup, GroupError, GroupTable, QuotientGroup, Subgroup};
pub use hom::Homomorphism;
pub use matrix::{ExactMatrix, MatrixError};
pub use pcompact::{
    LieDesc, PairRealization, PairVerdict, PcError, PrimeSpec, ToralDesc, WreathVerdict,
};
pub use poly::{ExactPoly, RationalFn};
pub use rational::Rational;
pub use reflect::{DegreeVector, MolienSeries, ReflectError};
pub use weyl::{Family, LieType, RootSystem, SubsystemKind, WeylError};
