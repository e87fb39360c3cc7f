//! Construction and metric analysis of fused hollow coronoid / starphene
//! graphs (FCS), plus baseline families and the closed-form code audit.
//!
//! The crate splits into four layers:
//!
//! * [`graph`]: plain undirected graphs, BFS distances, girth.
//! * [`generators`]: the labeled FCS construction and the baselines.
//! * [`resolvability`]: landmark codes, resolving-set checks, and exhaustive
//!   dimension certification.
//! * [`closed_form`]: verbatim piecewise code tables and the oracle audit
//!   that grades them.

pub mod closed_form;
pub mod generators;
pub mod graph;
pub mod resolvability;

pub use generators::{build_complete, build_cycle, build_fcs, build_path, FcsParams, LabeledGraph};
pub use graph::{all_pairs_distances, DistanceMatrix, Edge, Graph};
pub use resolvability::{certify_dimension, is_resolving, Landmarks, Mode};
