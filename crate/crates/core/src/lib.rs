//! Dense-graph toolkit for spectral extremal problems on vertex-disjoint
//! cycles: constructions, Perron roots, packing search, the structural
//! procedures, closed-form extremal numbers, small-n search and the
//! verification suites built from them.

pub mod canon;
pub mod constructions;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod graph6;
pub mod procedures;
pub mod search;
pub mod spectral;
pub mod subgraphs;
pub mod suites;

pub use constructions::{FamilyParams, SVariant};
pub use error::{FamilyError, FormulaError, Graph6Error, GraphError, ProcedureError, SearchError, SpectralError};
pub use graph::{Graph, VertexSet, CAPACITY};
pub use spectral::SpectralResult;
pub use subgraphs::{CyclePacking, PackingStatus};
pub use formulas::FormulaValue;
