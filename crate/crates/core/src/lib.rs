//! Symmetry tools for hypercubes, hypercube powers and augmented cubes.
//!
//! The crate is split along the lines of the computation:
//!
//! * [`graphs`] builds the graph families on bitstring-labelled vertices and
//!   answers distance queries.
//! * [`perm`] computes (vertex-coloured) automorphism groups by equitable
//!   partition refinement and backtracking, and stores them as stabilizer
//!   chains with exact order, membership and orbits.
//! * [`coloring`] holds vertex colourings, the distinguishing test, and the
//!   explicit colourings and neighbour-count signatures for augmented cubes.
//! * [`solver`] computes distinguishing numbers exactly on small graphs and
//!   brackets them with verified witnesses on larger ones.

pub mod coloring;
pub mod error;
pub mod graphs;
pub mod perm;
pub mod solver;

pub use coloring::{Coloring, VertexSignature};
pub use error::{Error, Result};
pub use graphs::{BitLabel, DistanceMatrix, Family, Graph};
pub use perm::{
    automorphism_group, is_automorphism, Budget, OrderedPartition, PermGroup, Permutation,
};
pub use solver::{Method, SolveResult, Strategy};
