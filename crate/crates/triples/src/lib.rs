//! A toolkit for linear triple systems.
//!
//! Linear triple systems are 3-uniform hypergraphs in which any two triples
//! share at most one vertex; Steiner triple systems are the complete case
//! where every pair lies in exactly one block. This crate provides:
//!
//! - core types for systems, pair maps and canonical forms ([`system`], [`canon`]),
//! - the pattern calculus of properly edge-colored forests, their matching
//!   orders, augmentation to configurations, and the inverse classification
//!   problem ([`patterns`], [`classify`]),
//! - constructors for Steiner systems, named configurations and extremal
//!   witness objects ([`generators`], [`catalog`]),
//! - a backtracking subsystem embedder with a brute-force oracle and a
//!   constructive wicket finder ([`search`]),
//! - block colorings and monochromatic-configuration censuses ([`ramsey`]).

pub mod canon;
pub mod catalog;
pub mod classify;
pub mod error;
pub mod generators;
pub mod patterns;
pub mod ramsey;
pub mod search;
pub mod system;

pub use canon::{canonical_form, isomorphic, CanonicalForm};
pub use error::{Error, Result};
pub use system::{admissible, Block, PairMap, Point, TripleSystem};
