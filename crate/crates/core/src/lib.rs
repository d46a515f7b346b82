//! Regular multigraphs with odd-cut conditions (`r`-graphs): recognition,
//! perfect matchings and class, canonical forms, colourings of one
//! `r`-graph by the edges of another, and the constructions that build them.
//!
//! Graphs are loopless multigraphs with dense ids: vertices `0..n`, edges
//! `0..m`. Every operation is a pure function of its inputs.

pub mod construct;
pub mod cuts;
pub mod enumerate;
pub mod error;
pub mod experiments;
pub mod factors;
pub mod graph;
pub mod hcoloring;
pub mod io;
pub mod iso;
pub mod random;

pub use error::{Error, Result};
pub use graph::{EdgeCut, EdgeId, Multigraph, VertexId, VertexSet};
