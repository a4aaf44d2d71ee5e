//! Exact combinatorics of fully packed loop (FPL) configurations on square grids.
//!
//! The library provides, with exact integer arithmetic throughout:
//!
//! * non-crossing matchings (link patterns), their binary words, and the
//!   associated Young diagrams ([`matching`], [`diagram`]);
//! * hook-content product formulas and brute-force tableau oracles ([`diagram`]);
//! * lattice-path determinants for rhombus tiling counts of notched regions
//!   ([`lgv`]) together with direct tiling enumerators used as oracles
//!   ([`tiling`]);
//! * exhaustive enumeration of FPL configurations on small grids, boundary-link
//!   censuses, and the standard placements of a matching plus nested arches
//!   ([`grid`]);
//! * solvers for the bounded regions that appear when many nested arches force
//!   most of the grid, including the two-interface triangle ([`region`]);
//! * closed-form polynomial counts `A_X(m)` and `A_{X,Y}(m)` assembled from the
//!   region data ([`formulas`]).
//!
//! The crate is `no_std` (with `alloc`); all IO lives in the companion CLI crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod arith;
pub mod diagram;
pub mod error;
pub mod formulas;
pub mod grid;
pub mod lgv;
pub mod matching;
pub mod poly;
pub mod region;
pub mod tiling;

pub use error::Error;
