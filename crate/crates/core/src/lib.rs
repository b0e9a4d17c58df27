//! Exact construction and verification engine for a two-prime amalgam of
//! finite local groups.
//!
//! For distinct odd primes p and q the crate builds the two semidirect
//! products A (an extraspecial q-group of exponent q extended by an
//! order-p symplectic automorphism) and B (the mirror image), glues them
//! along their common cyclic subgroup C of order pq, and works with the
//! resulting infinite group through canonical alternating normal forms.
//! On top of the word arithmetic sit exhaustive finite-group checks
//! (Carter subgroups, bracket generation, abelianizations), seeded
//! sampling suites for the word-level structural claims, the exact Euler
//! characteristic and free-subgroup ranks, and the counting bound ruling
//! out a finite group with the same local structure.

pub mod abelian;
pub mod cache;
pub mod context;
pub mod counting;
pub mod error;
pub mod euler;
pub mod extraspecial;
pub mod field;
pub mod local;
pub mod params;
pub mod rational;
pub mod snf;
pub mod symplectic;
pub mod verify;
pub mod word;

pub use context::{AmalgamContext, CElem, Letter};
pub use error::{Error, Result};
pub use local::{LocalElement, LocalFactor, Side};
pub use params::AmalgamParams;
pub use rational::ExactRational;
pub use word::{AmalgamWord, ElementOrder};
