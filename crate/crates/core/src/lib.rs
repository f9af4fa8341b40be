//! Forest cuts and independent cuts in small graphs.
//!
//! A vertex cut `S` of a connected graph is a *forest cut* when `G[S]` is
//! acyclic and an *independent cut* when `G[S]` has no edges. The crate finds
//! such cuts (or proves there are none), builds cuts constructively in plane
//! triangulations minus an edge, certifies the linear-programming edge bound
//! `m ≥ 11n/5` with exact rationals, and sweeps density claims over
//! exhaustively enumerated small graphs.
//!
//! With the default `parallel` feature, sweeps and enumeration run on a rayon
//! pool; without it everything is sequential and produces identical output.

pub mod constructions;
pub mod cut;
pub mod error;
pub mod graph;
pub mod lp;
pub mod par;
pub mod planar;
pub mod verify;

pub use cut::{find_forest_cut, find_forest_cut_exhaustive, find_independent_cut, CutKind, CutWitness};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
