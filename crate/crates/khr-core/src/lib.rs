//! Exact-arithmetic gl(N) link homology at desk scale.
//!
//! The crate computes framed-graded cube-of-resolutions complexes for link
//! diagrams over exact coefficient rings (integers, rationals with a chosen
//! deformation, or the symbolic equivariant ring), their integral, rational
//! and filtered homology, and the surface-grading calculus attached to
//! 4-manifold data: tridegrees, genus bounds, homological diversity and the
//! coloring decomposition of deformed homology.
//!
//! The core is `no_std` (allocation only); IO, file formats and the command
//! line live in the companion `khr-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod epoly;
pub mod frobenius;
pub mod homology;
pub mod khcomplex;
pub mod lasagna;
pub mod linkdiag;
pub mod matrix;
pub mod ring;
pub mod unipoly;

pub use ring::{Int, Rat};
