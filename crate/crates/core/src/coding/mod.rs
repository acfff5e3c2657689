//! Trees with coding nodes and the graphs they code.

mod antichain;
mod build;
mod fbc;
mod graph;
mod tree;

pub use antichain::{graph_to_antichains, CodingAntichain};
pub use build::{build_sk, build_tk, build_tr};
pub use fbc::{check_kfbc, forbidden_one_extension, project, FbcReport, FbcViolation};
pub use graph::{decode_graph, FiniteGraph};
pub use tree::{CodingTree, TreeKind};
