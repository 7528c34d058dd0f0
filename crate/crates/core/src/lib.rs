//! Exact solvers and generators for position-type graph invariants.
//!
//! The crate computes general position numbers (largest and smallest
//! maximal), geodetic numbers, monophonic position numbers, clique and
//! independent-union-of-cliques invariants, independent domination, and
//! line/universal-line structure — all exactly, on graphs small enough
//! for complete search. Deterministic generators for the graph families
//! used in the test sweeps live in [`families`], and [`reduction`] builds
//! the gadget tying independent domination to the lower general position
//! number.

pub mod bitset;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod metric;
pub mod position;
pub mod reduction;
pub mod smallgraphs;
pub mod solvers;
pub mod verify;
