//! Multipacking / broadcast-domination toolkit: exact desk-scale oracles,
//! guaranteed approximation constructions for chordal, hyperbolic and cactus
//! graphs, certificate-family generators, hardness-reduction gadget builders
//! with solution round-trips, and an exact geometric minimum-dominating-
//! broadcast solver for Euclidean point sets.
//!
//! Start with [`graph::Graph`], the oracles in [`oracle`], and the runnable
//! programs under `examples/`.

pub mod cactus;
pub mod error;
pub mod family;
pub mod gadget;
pub mod geometry;
pub mod graph;
pub mod multipacking;
pub mod oracle;
pub mod random;
pub mod selftest;

pub use error::{Error, Result};
pub use graph::{Graph, HalfInt, Metric, Path};
pub use oracle::{Broadcast, PackingWitness, SetSystem};
