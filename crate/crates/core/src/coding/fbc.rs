//! The `K_k`-Free Branching Criterion.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::graph::FiniteGraph;
use super::tree::{CodingTree, TreeKind};
use crate::error::{Error, Result};
use crate::seqtree::{BinSeq, LevelTree};

/// Coding positions `j` (into `coding`) with `|c_j| ≤ |t|` at which `t⌢1`
/// passes 1.
fn passing_set_of_one_extension(coding: &[BinSeq], t: &BinSeq) -> Vec<usize> {
    coding
        .iter()
        .enumerate()
        .take_while(|(_, c)| c.len() <= t.len())
        .filter(|(_, c)| c.len() == t.len() || t.bit(c.len()))
        .map(|(j, _)| j)
        .collect()
}

/// Shared core of the criterion, usable while a tree is still being built.
pub(crate) fn one_extension_forbidden(graph: &FiniteGraph, coding: &[BinSeq], t: &BinSeq, k: usize) -> bool {
    let passing = passing_set_of_one_extension(coding, t);
    passing.len() >= k - 1 && graph.has_clique_within(&passing, k - 1)
}

/// Whether `t⌢1` must stay out of the tree: the coding nodes of length at
/// most `|t|` at which `t⌢1` passes 1 already contain a `(k-1)`-clique, so
/// any coding node above `t⌢1` would complete a `k`-clique.
pub fn forbidden_one_extension(tree: &CodingTree, t: &BinSeq, k: usize) -> bool {
    let graph = tree.decode(true);
    one_extension_forbidden(&graph, tree.all_coding(), t, k)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FbcViolation {
    pub node: BinSeq,
    pub reason: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FbcReport {
    pub violations: Vec<FbcViolation>,
}

impl FbcReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks a Henson tree against the criterion.
///
/// Every node below the top level must have its 0-extension, and has its
/// 1-extension exactly when [`forbidden_one_extension`] is false. A skew
/// tree cannot branch at every level, so it is checked through its
/// projection onto passing numbers at coding nodes: each node is replaced
/// by the sequence of its bits at the coding-node lengths, which turns a
/// skew tree into the unskewed tree with the same branching of types.
pub fn check_kfbc(tree: &CodingTree, k: usize) -> Result<FbcReport> {
    if tree.kind() != (TreeKind::Henson { k }) {
        return Err(Error::KindMismatch(format!(
            "k-FBC with k = {k} needs a henson({k}) tree, got {:?}",
            tree.kind()
        )));
    }
    if tree.is_skew() {
        let projected = project(tree)?;
        return Ok(check_literal(&projected, k));
    }
    Ok(check_literal(tree, k))
}

fn check_literal(tree: &CodingTree, k: usize) -> FbcReport {
    let graph = tree.decode(true);
    let t = tree.tree();
    let mut violations = Vec::new();
    for h in 0..t.height().saturating_sub(1) {
        for node in t.level(h) {
            if !t.contains(&node.child(false)) {
                violations.push(FbcViolation {
                    node: node.clone(),
                    reason: "0-extension missing".into(),
                });
            }
            let has_one = t.contains(&node.child(true));
            let forbidden = one_extension_forbidden(&graph, tree.all_coding(), node, k);
            let reason = match (has_one, forbidden) {
                (true, true) => "1-extension present but would complete a k-clique",
                (false, false) => "1-extension permitted but missing",
                _ => continue,
            };
            violations.push(FbcViolation {
                node: node.clone(),
                reason: reason.into(),
            });
        }
    }
    FbcReport { violations }
}

/// Bits of `t` at the given positions below `|t|`.
pub(crate) fn project_node(t: &BinSeq, positions: &[usize]) -> BinSeq {
    BinSeq::from_bits(positions.iter().take_while(|&&p| p < t.len()).map(|&p| t.bit(p)))
}

/// Replaces each node by its passing numbers at the coding nodes.
pub fn project(tree: &CodingTree) -> Result<CodingTree> {
    let positions: Vec<usize> = tree.all_coding().iter().map(BinSeq::len).collect();
    let nodes: BTreeSet<BinSeq> = tree.tree().nodes().map(|t| project_node(t, &positions)).collect();
    let top = nodes.iter().map(BinSeq::len).max().unwrap_or(0);
    let levels: Vec<usize> = (0..=top).collect();
    let projected = LevelTree::close(nodes, &levels)?.tree;
    let coding = tree.all_coding().iter().map(|c| project_node(c, &positions)).collect();
    CodingTree::assemble(projected, coding, tree.pseudo_count(), tree.kind(), false)
}
