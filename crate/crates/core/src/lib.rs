//! Power graphs of finite groups and their embeddings on surfaces.
//!
//! The crate is organised bottom-up:
//!
//! * [`group`]: finite groups as multiplication tables, built from
//!   permutations, named families, direct and semidirect products.
//! * [`catalog`]: validated small-group catalog with GAP-style labels.
//! * [`graph`]: simple labelled graphs, power graphs and text exports.
//! * [`genus`]: blocks, genus formulas, Euler bounds, planarity, face
//!   tracing and exact (non)orientable genus search with certificates.
//! * [`classifier`]: the group-theoretic decision procedure for genus two
//!   with a replayable trail of rule applications.
//! * [`cli`]: the command implementations behind the `powergenus` binary.

pub mod catalog;
pub mod classifier;
pub mod cli;
pub mod error;
pub mod genus;
pub mod graph;
pub mod group;

pub use error::{Error, Result};
pub use graph::Graph;
pub use group::{ElementSet, FiniteGroup, OrderSpectrum, Perm, SixProfile};
