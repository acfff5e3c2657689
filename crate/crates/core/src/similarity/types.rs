use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::map::{similarity_type, NodeSet, SimilarityType};
use crate::cliques::clique_position_sets;
use crate::coding::{graph_to_antichains, CodingTree, FiniteGraph, TreeKind};
use crate::error::{Error, Result};
use crate::seqtree::BinSeq;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Mode {
    #[default]
    Strong,
    /// Strong similarity refined by where pre-cliques first appear.
    Strict,
}

/// A pre-clique among the members of an antichain.
///
/// `level` locates the first length at which two of the members separate
/// above all the coding nodes involved, relative to the lengths of the
/// meet-closure: `2j` means the `j`-th length, `2j - 1` strictly between
/// the `(j-1)`-th and `j`-th (or above the last when `j` is their count).
/// `members` are positions in the meet-closure.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct TraceEntry {
    pub a: usize,
    pub level: usize,
    pub members: Vec<usize>,
}

struct StrictContext {
    k: usize,
    graph: FiniteGraph,
}

impl StrictContext {
    fn new(host: &CodingTree) -> Result<Self> {
        match host.kind() {
            TreeKind::Henson { k } => Ok(Self {
                k,
                graph: host.decode(true),
            }),
            other => Err(Error::KindMismatch(format!(
                "strict similarity needs a henson host, got {other:?}"
            ))),
        }
    }

    fn trace(&self, host: &CodingTree, members: &[BinSeq], set: &NodeSet) -> Vec<TraceEntry> {
        let mut lengths: Vec<usize> = set.nodes().iter().map(BinSeq::len).collect();
        lengths.sort_unstable();
        lengths.dedup();
        let max_len = members.iter().map(BinSeq::len).max().unwrap_or(0);
        let coding = host.all_coding();
        let mut out = BTreeSet::new();
        for a in 3..=self.k {
            for positions in clique_position_sets(host, &self.graph, max_len, a - 2) {
                let lens: Vec<usize> = positions.iter().map(|&p| coding[p].len()).collect();
                let star = *lens.last().expect("a >= 3 gives a nonempty index set");
                let p: Vec<&BinSeq> = members
                    .iter()
                    .filter(|z| z.len() > star && lens.iter().all(|&l| z.bit(l)))
                    .collect();
                if p.len() < 2 {
                    continue;
                }
                let split = p
                    .iter()
                    .enumerate()
                    .flat_map(|(i, x)| p[i + 1..].iter().map(move |y| x.common_prefix_len(y) + 1))
                    .min()
                    .expect("two members");
                let level = star.max(split);
                let j = lengths.partition_point(|&l| l < level);
                let code = if lengths.get(j) == Some(&level) {
                    2 * j
                } else {
                    2 * j - 1
                };
                let members = p
                    .iter()
                    .map(|z| set.position(z).expect("member of its closure"))
                    .collect();
                out.insert(TraceEntry {
                    a,
                    level: code,
                    members,
                });
            }
        }
        out.into_iter().collect()
    }
}

/// The canonical type of `nodes` (meet-closed first) with coding flags
/// taken from `host`. Strict mode needs a Henson host.
pub fn canonical_type(nodes: &[BinSeq], mode: Mode, host: &CodingTree) -> Result<SimilarityType> {
    let set = NodeSet::in_host(nodes.iter().cloned(), host);
    let mut ty = similarity_type(&set);
    if mode == Mode::Strict {
        let ctx = StrictContext::new(host)?;
        ty.strict = Some(ctx.trace(host, nodes, &set));
    }
    Ok(ty)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypeEnumeration {
    pub types: Vec<SimilarityType>,
    /// Number of types realized using only the first `d` coding nodes, for
    /// `d = 0..=max_depth`.
    pub counts_by_depth: Vec<usize>,
    /// No new type appeared over the last two depth increments.
    pub saturated: bool,
    pub antichains: usize,
}

impl TypeEnumeration {
    pub fn count(&self) -> usize {
        self.types.len()
    }
}

/// Types of all antichains among the first `max_depth` coding nodes of
/// `host` that code `g`.
///
/// Saturation is only a heuristic: the type set did not grow from depth
/// `max_depth - 2` to `max_depth`.
pub fn enumerate_types(g: &FiniteGraph, host: &CodingTree, mode: Mode, max_depth: usize) -> Result<TypeEnumeration> {
    if max_depth > host.real_count() {
        return Err(Error::InvalidParameter(format!(
            "depth {max_depth} exceeds the {} coding nodes of the host",
            host.real_count()
        )));
    }
    let ctx = match mode {
        Mode::Strict => Some(StrictContext::new(host)?),
        Mode::Strong => None,
    };
    let antichains = graph_to_antichains(g, host, max_depth);
    let typed: Vec<(usize, SimilarityType)> = antichains
        .par_iter()
        .map(|ac| {
            let set = NodeSet::in_host(ac.nodes.iter().cloned(), host);
            let mut ty = similarity_type(&set);
            if let Some(ctx) = &ctx {
                ty.strict = Some(ctx.trace(host, &ac.nodes, &set));
            }
            let depth = ac.indices.last().map_or(0, |&i| i as usize + 1);
            (depth, ty)
        })
        .collect();
    let mut first: BTreeMap<SimilarityType, usize> = BTreeMap::new();
    for (depth, ty) in typed {
        let d = first.entry(ty).or_insert(depth);
        *d = (*d).min(depth);
    }
    let counts_by_depth: Vec<usize> = (0..=max_depth)
        .map(|d| first.values().filter(|&&f| f <= d).count())
        .collect();
    let saturated = max_depth >= 2 && counts_by_depth[max_depth - 2] == counts_by_depth[max_depth];
    Ok(TypeEnumeration {
        types: first.into_keys().collect(),
        counts_by_depth,
        saturated,
        antichains: antichains.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coding::{build_sk, build_tk, build_tr};
    use crate::seqtree::seq;

    #[test]
    fn singletons_have_one_type() {
        let host = build_tr(6);
        let e = enumerate_types(&FiniteGraph::empty(1), &host, Mode::Strong, 6).unwrap();
        assert_eq!(e.count(), 1);
        assert_eq!(e.antichains, 6);
    }

    #[test]
    fn non_coding_singleton() {
        let host = build_tr(4);
        let a = canonical_type(&[seq("11")], Mode::Strong, &host).unwrap();
        let b = canonical_type(&[seq("0110")], Mode::Strong, &host).unwrap();
        assert_eq!(a, b);
        assert!(!a.nodes[0].coding);
    }

    #[test]
    fn strict_needs_henson() {
        let host = build_tr(4);
        let edge = FiniteGraph::complete(2);
        assert!(matches!(
            enumerate_types(&edge, &host, Mode::Strict, 4),
            Err(Error::KindMismatch(_))
        ));
        assert!(enumerate_types(&edge, &host, Mode::Strong, 5).is_err());
    }

    #[test]
    fn edges_in_t3_have_no_preclique_trace() {
        let host = build_tk(3, 8).unwrap();
        let e = enumerate_types(&FiniteGraph::complete(2), &host, Mode::Strict, 8).unwrap();
        assert!(e.count() >= 2);
        assert!(e.types.iter().all(|t| t.strict.as_deref() == Some(&[][..])));
    }

    #[test]
    fn non_edges_in_s3_can_carry_a_trace() {
        // Two non-adjacent vertices both adjacent to an earlier one form a
        // pre-3-clique.
        let host = build_sk(3, 8).unwrap();
        let e = enumerate_types(&FiniteGraph::empty(2), &host, Mode::Strict, 8).unwrap();
        assert!(e.types.iter().any(|t| t.strict.as_ref().is_some_and(|s| !s.is_empty())));
    }
}
