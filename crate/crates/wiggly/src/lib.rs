//! Multiscale wiggliness analysis for point-sampled planar sets.
//!
//! The library measures how far a set deviates from lines across scales
//! (beta numbers over balls and dyadic squares), aggregates those
//! measurements into scale densities and integral functionals, builds
//! multiscale stopping-time measures whose decay encodes the wiggliness,
//! and converts everything into dimension estimates. A registry of
//! deterministic generators provides the reference corpus the estimators
//! are validated against.

pub mod corona;
pub mod dataset;
pub mod dimension;
pub mod dyadic;
pub mod error;
pub mod generators;
pub mod geom;
pub mod grid;
pub mod kernel;
pub mod multiscale;
pub mod pipeline;
pub mod plot;
pub mod sample;

pub use error::{Error, Result};
pub use geom::{Point, StripFit};
pub use kernel::{BetaValue, PorosityResult, DEFAULT_RESOLUTION_GUARD};
pub use multiscale::{BetaProfile, DensityEstimate, ScaleGrid};
pub use sample::{Ball, Tag, TaggedSample};
