//! Normal quotients of hypercubes.
//!
//! Builds `(Q_n)_K` for subgroups `K ≤ Aut(Q_n)`, computes the generalized
//! minimum distance `d_K`, constructs halved, doubled and distance-2 graphs,
//! tests isomorphism and computes automorphism groups, lifts coverings
//! `Q_n → Π`, and runs a seeded verification suite over all of it.

pub mod covering;
pub mod cube_symmetry;
pub mod error;
pub mod graph_core;
pub mod iso_aut;
pub mod perm_group;
pub mod quotient;
pub mod verify;

pub use error::{Error, Result};
