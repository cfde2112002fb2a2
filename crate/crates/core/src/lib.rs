//! Multi-pass node-sampling algorithms for four-cycle detection and
//! (1±ε)-approximate counting over arbitrary-order edge streams.
//!
//! The crate is organized around three layers:
//!
//! * exact, desk-scale combinatorial oracles ([`graph`]) that every
//!   randomized component is validated against,
//! * the deterministic configuration algebra ([`config`]): labelings,
//!   per-labeling heaviness thresholds, refined heaviness and LLM
//!   (light, locally minimal, valid) configurations,
//! * the streaming algorithms themselves: two-pass detection
//!   ([`detect`]), three-pass counting ([`count`]) with either the exact
//!   reference LLM check or the sampling-based oracle stack
//!   ([`oracles`]), and the prior-work edge-sampling baseline
//!   ([`baseline`]).
//!
//! Scalar formula work (sampling probabilities, heaviness thresholds,
//! threshold shift grids) is generic over [`real::Real`]; the concrete
//! `f64` instantiations used by the algorithms are aliased at the crate
//! root.

pub mod baseline;
pub mod config;
pub mod count;
pub mod detect;
pub mod error;
pub mod generators;
pub mod graph;
pub mod oracles;
pub mod params;
pub mod real;
pub mod sampling;
pub mod stream;

pub use error::{Error, Result};
pub use graph::{Edge, FourCycle, Graph, NodeId, Substructure, Wedge};
pub use stream::{EdgeStream, SpaceMeter};

/// κ grid over `f64`, the instantiation used by all algorithms.
pub type IndexSet = sampling::KappaGrid<f64>;
/// Per-κ sampling probability pair over `f64`.
pub type ProbPair = params::ProbPair<f64>;
/// Threshold shift triple over `f64`.
pub type Shifts = sampling::Shifts<f64>;
