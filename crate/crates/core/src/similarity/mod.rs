//! Strong and strict similarity of finite node sets, canonical types, and
//! type enumeration for antichains coding a graph.

mod map;
mod order;
mod types;

pub use map::{similarity_type, strong_similarity_map, NodeForm, NodeSet, SimilarityType};
pub use order::{devlin_pair_types, triangle_order_cmp, DevlinType};
pub use types::{canonical_type, enumerate_types, Mode, TraceEntry, TypeEnumeration};
