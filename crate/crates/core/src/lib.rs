//! Sedentary-vertex analysis for continuous-time quantum walks on weighted graphs.

pub mod error;
pub mod families;
pub mod graph;
pub mod reproduce;
pub mod scalar;
pub mod sedentary;
pub mod spectral;

pub use error::{FamilyError, GraphError, SedentaryError, SpectralError};
pub use graph::{Bipartition, Edge, GraphJson, MatchingReport, PendantGroup, Side, TwinKind, TwinSet, WeightedGraph};
pub use scalar::Scalar;

pub type Graph = WeightedGraph<f64>;
pub type Graph32 = WeightedGraph<f32>;
pub type Decomposition = spectral::SpectralDecomposition<f64>;
pub type Decomposition32 = spectral::SpectralDecomposition<f32>;
