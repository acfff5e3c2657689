use serde::{Deserialize, Serialize};

use super::types::TraceEntry;
use crate::coding::CodingTree;
use crate::seqtree::{meet, meet_closure, BinSeq};

/// A meet-closed finite node set with designated coding nodes, in
/// lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeSet {
    nodes: Vec<BinSeq>,
    coding: Vec<bool>,
}

impl NodeSet {
    /// Meet-closes `nodes`; members listed in `coding` become coding nodes.
    pub fn new<I: IntoIterator<Item = BinSeq>>(nodes: I, coding: &[BinSeq]) -> Self {
        let raw: Vec<BinSeq> = nodes.into_iter().collect();
        let nodes = meet_closure(&raw);
        let coding = nodes.iter().map(|t| coding.contains(t)).collect();
        Self { nodes, coding }
    }

    /// Meet-closes `nodes`; coding flags come from the host.
    pub fn in_host<I: IntoIterator<Item = BinSeq>>(nodes: I, host: &CodingTree) -> Self {
        let raw: Vec<BinSeq> = nodes.into_iter().collect();
        let nodes = meet_closure(&raw);
        let coding = nodes.iter().map(|t| host.is_coding(t)).collect();
        Self { nodes, coding }
    }

    pub fn nodes(&self) -> &[BinSeq] {
        &self.nodes
    }

    pub fn is_coding(&self, i: usize) -> bool {
        self.coding[i]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Position of `t` in the set.
    pub fn position(&self, t: &BinSeq) -> Option<usize> {
        self.nodes.binary_search(t).ok()
    }
}

/// The strong similarity map from `s` onto `t`, if there is one.
///
/// Such a map preserves lex order, so it can only be the bijection pairing
/// both sets in lex order; the remaining conditions (meets, relative
/// lengths, initial segments, coding flags, passing numbers at coding
/// nodes) are then checked pair by pair.
pub fn strong_similarity_map(s: &NodeSet, t: &NodeSet) -> Option<Vec<(BinSeq, BinSeq)>> {
    if s.len() != t.len() {
        return None;
    }
    let n = s.len();
    let (a, b) = (&s.nodes, &t.nodes);
    for i in 0..n {
        if s.coding[i] != t.coding[i] {
            return None;
        }
        for j in 0..n {
            if a[i].len().cmp(&a[j].len()) != b[i].len().cmp(&b[j].len()) {
                return None;
            }
            if a[i].is_prefix_of(&a[j]) != b[i].is_prefix_of(&b[j]) {
                return None;
            }
            if s.coding[j] && a[j].len() < a[i].len() && a[i].bit(a[j].len()) != b[i].bit(b[j].len()) {
                return None;
            }
            if j > i {
                let m = s.position(&meet(&a[i], &a[j])).expect("set is meet-closed");
                if t.position(&meet(&b[i], &b[j])) != Some(m) {
                    return None;
                }
            }
        }
    }
    Some(a.iter().cloned().zip(b.iter().cloned()).collect())
}

/// One node of a canonical form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct NodeForm {
    pub coding: bool,
    /// Position of the longest proper initial segment within the set.
    pub parent: Option<usize>,
    /// Passing numbers at the shorter coding nodes of the set, in lex order
    /// of those coding nodes.
    pub passing: String,
    /// Dense rank of the node's length among the lengths in the set.
    pub rank: usize,
}

/// Canonical description of a node set up to strong similarity, with an
/// optional trace of pre-cliques for strict similarity.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SimilarityType {
    pub nodes: Vec<NodeForm>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub strict: Option<Vec<TraceEntry>>,
}

/// The canonical strong-similarity type of a node set.
pub fn similarity_type(set: &NodeSet) -> SimilarityType {
    let nodes = &set.nodes;
    let mut lengths: Vec<usize> = nodes.iter().map(BinSeq::len).collect();
    lengths.sort_unstable();
    lengths.dedup();
    let forms = nodes
        .iter()
        .enumerate()
        .map(|(i, u)| {
            let parent = nodes
                .iter()
                .enumerate()
                .filter(|(_, v)| v.is_proper_prefix_of(u))
                .max_by_key(|(_, v)| v.len())
                .map(|(j, _)| j);
            let passing = nodes
                .iter()
                .enumerate()
                .filter(|&(j, c)| set.coding[j] && c.len() < u.len())
                .map(|(_, c)| if u.bit(c.len()) { '1' } else { '0' })
                .collect();
            NodeForm {
                coding: set.coding[i],
                parent,
                passing,
                rank: lengths.binary_search(&u.len()).expect("length is listed"),
            }
        })
        .collect();
    SimilarityType {
        nodes: forms,
        strict: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seqtree::seq;

    fn set(nodes: &[&str], coding: &[&str]) -> NodeSet {
        let c: Vec<BinSeq> = coding.iter().map(|s| seq(s)).collect();
        NodeSet::new(nodes.iter().map(|s| seq(s)), &c)
    }

    #[test]
    fn identity() {
        let s = set(&["001", "01", "1"], &["01"]);
        let f = strong_similarity_map(&s, &s).unwrap();
        assert!(f.iter().all(|(a, b)| a == b));
    }

    #[test]
    fn level_shift() {
        let s = set(&["0", "1"], &[]);
        let t = set(&["00", "01"], &[]);
        let f = strong_similarity_map(&s, &t).unwrap();
        assert_eq!(
            f,
            vec![(seq(""), seq("0")), (seq("0"), seq("00")), (seq("1"), seq("01"))]
        );
        assert_eq!(similarity_type(&s), similarity_type(&t));
    }

    #[test]
    fn passing_numbers_at_coding_nodes() {
        let s = set(&["0", "11"], &["0"]);
        let t = set(&["0", "10"], &["0"]);
        assert!(strong_similarity_map(&s, &t).is_none());
        assert_ne!(similarity_type(&s), similarity_type(&t));
    }

    #[test]
    fn meets_are_added() {
        let s = set(&["010", "011"], &[]);
        assert_eq!(s.nodes(), &[seq("01"), seq("010"), seq("011")]);
    }
}
