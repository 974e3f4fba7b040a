//! Metrically homogeneous graph classes of generic type: parameter
//! admissibility, the completion algorithms, a brute-force oracle and
//! forbidden-cycle catalogues.
//!
//! Graphs are edge-labelled: a label is a distance in `1..=δ`, and missing
//! edges are the pairs to be completed.

pub mod completion;
pub mod graph;
pub mod obstacles;
pub mod oracle;
pub mod params;

pub use completion::{dispatch_complete, CompletionResult, CompletionStatus, DispatchOptions, TraceEntry};
pub use graph::{membership_check, EdgeLabelledGraph, Membership, PodedGraph};
pub use params::{admissibility_verdict, Ext, HensonConstraint, Kind, ParameterSet};
