//! Exact combinatorics of the faces of the supermodular cone.
//!
//! A supermodular game over a finite set `N` determines a face of the cone of
//! supermodular games. That face is described equally well by the partition
//! of enumerations of `N` by marginal vector, by the posets of that partition,
//! by the tightness classes of the core vertices, by the set of vanishing
//! elementary differences, and by a subgraph of the permutohedral graph.
//! This crate computes all of them in exact rational arithmetic and checks
//! their equivalences by brute force on small ground sets.

pub mod cli;
pub mod cones;
pub mod error;
pub mod faces;
pub mod games;
pub mod ground;
pub mod json;
pub mod linalg;
pub mod permutograph;
pub mod rational;
pub mod relations;
pub mod setsystems;
pub mod worked;

pub use error::{Error, Result};
pub use games::Game;
pub use ground::{GroundSet, Subset};
pub use permutograph::{EnumSet, Enumeration, LabelPair};
pub use rational::Rational;
pub use relations::Relation;
pub use setsystems::SetSystem;
