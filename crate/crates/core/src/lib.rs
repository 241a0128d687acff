//! Exact upper domination of graphs and their Cartesian products.
//!
//! The crate computes γ, Γ and α exactly at desk scale, checks minimality of
//! dominating sets through per-vertex certificates, and builds certified
//! minimal dominating sets of products that witness lower bounds on Γ.

pub mod bitset;
pub mod domset;
pub mod error;
pub mod exact;
pub mod family;
pub mod graph;
pub mod io;
pub mod witness;

pub use bitset::{VertexSet, CAPACITY};
pub use error::{DomsetError, ExactError, GraphError, WitnessError};
pub use family::FamilySpec;
pub use graph::{cartesian_product, disjoint_union, Graph, ProductGraph};
pub use witness::{ConstructionRegistry, WitnessOutcome};
