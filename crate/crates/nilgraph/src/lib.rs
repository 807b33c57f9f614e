//! Exact computational toolkit for the 2-step nilpotent groups attached to
//! edge-weighted graphs.
//!
//! Given a finite simple graph with positive integer edge weights, the crate
//! builds the group generated by the vertices together with central edge
//! generators (commutator of an adjacent pair = edge generator raised to the
//! edge weight), analyzes its automorphisms through exact linear algebra on
//! the associated graded Lie ring, and decides or certifies whether every
//! automorphism has infinitely many twisted conjugacy classes.
//!
//! Everything is computed with arbitrary-precision integer and rational
//! arithmetic; no floating point is involved anywhere.

// index loops over parallel matrix data stay as index loops
#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod scalar;
pub mod poly;
pub mod matrix;
pub mod snf;
pub mod graph;
pub mod weighted;
pub mod group;
pub mod lie;
pub mod reidemeister;
pub mod io;
pub mod catalog;

pub use error::{Error, Result};
pub use matrix::{IntMatrix, Matrix, QuadMatrix, RatMatrix};
pub use poly::{IntPoly, RatPoly};
pub use scalar::{Int, QuadExt, Rat};
pub use snf::{determinant_divisors, hermite_normal_form, smith_normal_form, Lattice, SnfResult};
