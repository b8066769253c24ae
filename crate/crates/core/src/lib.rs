//! Signed-graph analysis: exact frustration, minimum T-joins, and
//! signed-circuit covers with machine-checkable certificates.

pub mod balance;
pub mod bridges;
pub mod cycles;
pub mod format;
pub mod graph;
pub mod tjoin;

pub use balance::{is_balanced, is_flow_admissible, negativeness, AdmissibilityReport};
pub use graph::{Edge, EdgeId, EdgeSet, Sign, SignedGraph, Switching, VertexId};
