//! Exact-arithmetic workbench for Laplacian energies of non-commuting graphs.
//!
//! The crate builds finite non-abelian groups as explicit multiplication
//! tables, derives their non-commuting graphs, and computes Laplacian spectra
//! and Laplacian energies exactly (as reduced big rationals) along two fully
//! independent routes:
//!
//! * a structural route that decomposes the commuting graph into cliques and
//!   applies the complement spectrum rule, and
//! * a numeric route (cyclic Jacobi) whose integer eigenvalue claims are
//!   certified by exact fraction-free rank computations.
//!
//! A catalog of closed-form energy claims ([`formulas`]) is evaluated verbatim
//! and diffed against the computed ground truth by the [`harness`].

pub mod bareiss;
pub mod error;
pub mod formulas;
pub mod gf;
pub mod graph;
pub mod group;
pub mod harness;
pub mod jacobi;
pub mod numeric;
pub mod planar;
pub mod rat;
pub mod spectrum;

pub use error::Error;
pub use rat::Rat;

/// Convenience result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
