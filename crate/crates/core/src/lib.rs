//! Combinatorial verification for height maps on three-dimensional cube
//! complexes.
//!
//! The crate builds the two families of complexes it cares about (products of
//! theta graphs and the complexes `X_Γ` cut out of `(A*B)^3` by a bipartite
//! graph `Γ`), computes vertex links, and checks the connectivity conditions
//! on ascending and descending living links that feed a BNSR-style argument.
//! Everything is exact: residues are `u128`, weights are big rationals, and
//! homology is computed over the integers.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the command
//! line and parallel scheduling live in the `cubemorse` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod arith;
pub mod bigraph;
pub mod cover;
pub mod cubeworld;
pub mod morse;
pub mod simplicial;
mod verdict;

pub use verdict::{Budget, Verdict};
