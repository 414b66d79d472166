//! Exact domination numbers with respect to graph properties, the effect of
//! deleting and subdividing edges on them, and a corpus-driven harness that
//! checks the known structural results on small graphs.

pub mod canon;
pub mod criticality;
pub mod exec;
pub mod generators;
pub mod graph;
pub mod io;
pub mod multisubdivision;
pub mod properties;
pub mod solver;
pub mod verifier;

pub use exec::Execution;
pub use graph::{Edge, Graph, GraphError, VertexMap, VertexSet};
pub use properties::Property;
pub use solver::{gamma, gamma_oracle, Gamma, GammaResult};
