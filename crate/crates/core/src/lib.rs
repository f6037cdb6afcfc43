//! Planar map coloring toolkit.
//!
//! Maps are handled through their dual graphs ([`graph::MapGraph`]). The
//! crate provides Euler-characteristic checks on rotation-system embeddings,
//! planarity testing with Kuratowski witnesses, the single-face extension rule
//! and inductive colorer, exact chromatic oracles, generators for the named
//! instances, a voxel model for three-dimensional maps, and a harness that
//! records a verdict for each claim it is asked to check.

pub mod claims;
pub mod cli;
pub mod coloring;
pub mod dot;
pub mod embedding;
pub mod error;
pub mod generators;
pub mod graph;
pub mod hyperdim;
pub mod planarity;

pub use error::{Error, Result};
pub use graph::{Color, Coloring, FaceId, MapGraph};
