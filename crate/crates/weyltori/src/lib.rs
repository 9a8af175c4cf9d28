//! Exact representation-theoretic statistics for Weyl groups of types
//! A, B and C.
//!
//! The crate computes, in exact rational arithmetic:
//!
//! - conjugacy-class data of symmetric and hyperoctahedral groups
//!   ([`weyl`]);
//! - character tables of those groups, built from Murnaghan–Nakayama
//!   evaluation plus parabolic induction ([`characters`]);
//! - character polynomials: class functions of every rank at once, written
//!   in binomial coordinates of cycle-multiplicity variables ([`charpoly`]);
//! - graded multiplicities of irreducibles in coinvariant algebras, via a
//!   flag-major-index statistic on double standard tableaux and,
//!   independently, via Molien series ([`tableaux`], [`coinvariant`]);
//! - expected numbers of stable maximal tori of reductive groups over finite
//!   fields weighted by a character polynomial, with exact dependence on
//!   `q`, together with their rank → ∞ limits ([`tori`]);
//! - counting of coloured partitions and of monomial orbits in polynomial
//!   rings under Weyl-group actions, used to bound and to contrast the
//!   stable behaviour above ([`coloured`]).
//!
//! Everything is deterministic and exact; floating point appears only in
//! one clearly-marked diagnostic (a logarithmic growth probe whose ordering
//! statements are still decided in integer arithmetic).
//!
//! The `examples/` directory contains one runnable walkthrough per major
//! capability; the `weyltori` binary exposes the same functionality as a
//! command-line tool.

pub mod charpoly;
pub mod characters;
pub mod coinvariant;
pub mod coloured;
pub mod error;
pub mod partitions;
pub mod rational;
pub mod report;
pub mod series;
pub mod tableaux;
pub mod tori;
pub mod weyl;

pub use error::{Error, Result};
