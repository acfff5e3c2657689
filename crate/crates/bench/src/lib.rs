//! Shared inputs for the criterion benchmarks.

use rct_core::coding::{build_sk, build_tr};
use rct_core::{CodingTree, FiniteGraph};

/// A single edge, the smallest graph with more than one similarity type.
pub fn edge() -> FiniteGraph {
    FiniteGraph::from_edges(2, &[(0, 1)]).expect("valid edge")
}

pub fn henson_host(k: usize, coding: usize) -> CodingTree {
    build_sk(k, coding).expect("valid parameters")
}

pub fn rado_host(coding: usize) -> CodingTree {
    build_tr(coding)
}
