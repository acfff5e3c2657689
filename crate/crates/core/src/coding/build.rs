//! Deterministic prefix builders for `S_k`, the skew `T_k`, and `T_R`.
//!
//! Coding-node placement for the Henson trees uses a FIFO queue of
//! unserved nodes: every split enqueues both children, and each new coding
//! node is placed above the oldest node in the queue that no coding node
//! extends yet. From that node the coding node climbs to the current level
//! taking the 1-branch wherever the tree has one, so it passes 1 at as
//! many earlier coding nodes as the criterion allows.

use std::collections::VecDeque;

use super::fbc::one_extension_forbidden;
use super::graph::decode_unchecked;
use super::tree::{CodingTree, TreeKind};
use crate::error::{Error, Result};
use crate::seqtree::{BinSeq, LevelTree};

/// Per-level node lists of a tree closed under initial segments.
struct Levels(Vec<Vec<BinSeq>>);

impl Levels {
    fn contains(&self, t: &BinSeq) -> bool {
        self.0.get(t.len()).is_some_and(|l| l.binary_search(t).is_ok())
    }

    fn into_tree(self) -> LevelTree {
        let levels = (0..self.0.len()).collect();
        LevelTree::from_sorted_levels(levels, self.0)
    }
}

struct Unskewed {
    levels: Levels,
    coding: Vec<BinSeq>,
    pseudo: usize,
}

fn grow_henson(k: usize, n_coding: usize) -> Result<Unskewed> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!("Henson trees need k >= 3, got {k}")));
    }
    let pseudo = k - 2;
    let mut levels = Levels(vec![vec![BinSeq::empty()]]);
    let mut coding: Vec<BinSeq> = Vec::new();
    let mut queue: VecDeque<BinSeq> = VecDeque::new();
    let mut level = 0;
    loop {
        let next_coding = if level < pseudo {
            // Pseudo-coding nodes 1^0, ..., 1^{k-3}; with c_0 = 1^{k-2}
            // they code a (k-1)-clique.
            BinSeq::ones(level)
        } else if coding.len() - pseudo == n_coding {
            break;
        } else if level == pseudo {
            BinSeq::ones(level)
        } else {
            let start = next_unserved(&mut queue, &coding[pseudo..]).unwrap_or_else(|| levels.0[level][0].clone());
            climb(&start, level, &levels)
        };
        coding.push(next_coding);
        let graph = decode_unchecked(&coding);

        let mut next = Vec::with_capacity(levels.0[level].len() * 2);
        for t in &levels.0[level] {
            next.push(t.child(false));
            if !one_extension_forbidden(&graph, &coding, t, k) {
                next.push(t.child(true));
                queue.push_back(t.child(false));
                queue.push_back(t.child(true));
            }
        }
        levels.0.push(next);
        level += 1;
    }
    Ok(Unskewed { levels, coding, pseudo })
}

fn next_unserved(queue: &mut VecDeque<BinSeq>, placed: &[BinSeq]) -> Option<BinSeq> {
    while let Some(u) = queue.pop_front() {
        if !placed.iter().any(|c| u.is_prefix_of(c)) {
            return Some(u);
        }
    }
    None
}

/// Extends `start` to length `len` inside the tree, preferring 1.
fn climb(start: &BinSeq, len: usize, levels: &Levels) -> BinSeq {
    let mut c = start.clone();
    while c.len() < len {
        let one = c.child(true);
        c = if levels.contains(&one) { one } else { c.child(false) };
    }
    c
}

/// The strong `K_k`-free coding tree `S_k`, built through `n_coding` coding
/// nodes (after its `k-2` pseudo-coding nodes). Every level below the top
/// holds one coding node, and branching follows the criterion exactly.
pub fn build_sk(k: usize, n_coding: usize) -> Result<CodingTree> {
    let u = grow_henson(k, n_coding)?;
    CodingTree::new(u.levels.into_tree(), u.coding, u.pseudo, TreeKind::Henson { k }, false)
}

/// The skew tree `T_k`: the same coded graph as [`build_sk`], with at most
/// one coding or splitting node per level.
///
/// Each level of `S_k` becomes a block of levels: one level per node that
/// splits there (in lex order), then one level for the coding node. On a
/// split level only the splitting node branches and every other node
/// extends by 0. On the coding level no node branches; a node extends by 1
/// exactly when it descends from the 1-side of a split in that block.
pub fn build_tk(k: usize, n_coding: usize) -> Result<CodingTree> {
    let u = grow_henson(k, n_coding)?;
    let s_levels = &u.levels.0;

    struct Entry {
        source: BinSeq,
        side: Option<bool>,
        node: BinSeq,
    }

    let mut out: Vec<Vec<BinSeq>> = vec![vec![BinSeq::empty()]];
    let mut coding = Vec::with_capacity(u.coding.len());
    let mut frontier: Vec<(BinSeq, BinSeq)> = vec![(BinSeq::empty(), BinSeq::empty())];
    for (level, c) in u.coding.iter().enumerate() {
        let next_s = &s_levels[level + 1];
        let splitters: Vec<BinSeq> = s_levels[level]
            .iter()
            .filter(|t| next_s.binary_search(&t.child(true)).is_ok())
            .cloned()
            .collect();
        let mut entries: Vec<Entry> = frontier
            .drain(..)
            .map(|(source, node)| Entry {
                source,
                side: None,
                node,
            })
            .collect();
        for s in &splitters {
            let mut next = Vec::with_capacity(entries.len() + 1);
            for e in entries {
                if e.side.is_none() && &e.source == s {
                    next.push(Entry {
                        source: e.source.clone(),
                        side: Some(false),
                        node: e.node.child(false),
                    });
                    next.push(Entry {
                        source: e.source,
                        side: Some(true),
                        node: e.node.child(true),
                    });
                } else {
                    next.push(Entry {
                        node: e.node.child(false),
                        ..e
                    });
                }
            }
            entries = next;
            out.push(sorted(entries.iter().map(|e| e.node.clone())));
        }
        let coding_node = entries
            .iter()
            .find(|e| &e.source == c && e.side != Some(true))
            .expect("coding node lies in the frontier")
            .node
            .clone();
        coding.push(coding_node);
        frontier = entries
            .into_iter()
            .map(|e| {
                let b = e.side == Some(true);
                (e.source.child(b), e.node.child(b))
            })
            .collect();
        out.push(sorted(frontier.iter().map(|(_, t)| t.clone())));
    }
    let tree = Levels(out).into_tree();
    CodingTree::new(tree, coding, u.pseudo, TreeKind::Henson { k }, true)
}

fn sorted<I: Iterator<Item = BinSeq>>(it: I) -> Vec<BinSeq> {
    let mut v: Vec<BinSeq> = it.collect();
    v.sort_unstable();
    v
}

/// The Rado coding tree `T_R` through `n_coding` coding nodes: the full
/// binary tree with `c_n` of length `n`.
///
/// Coding nodes run through every pattern of passing numbers over the
/// earlier coding nodes: for `j = 0, 1, 2, ...` and each `p ∈ 2^j` in
/// lexicographic order, the next coding node is `p` padded with zeros. So
/// every pattern over `c_0, ..., c_{j-1}` is realized by `c_{2^{j+1}-2}`.
pub fn build_tr(n_coding: usize) -> CodingTree {
    let mut coding = Vec::with_capacity(n_coding);
    'outer: for j in 0.. {
        for p in BinSeq::all_of_length(j) {
            if coding.len() == n_coding {
                break 'outer;
            }
            let len = coding.len();
            coding.push(p.extended(false, len - j));
        }
    }
    let tree = LevelTree::full_binary(n_coding + 1);
    CodingTree::new(tree, coding, 0, TreeKind::Rado, false).expect("full binary tree holds every coding node")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seqtree::seq;

    fn strings(v: &[BinSeq]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn s3_matches_the_drawn_prefix() {
        // The first coding nodes agree with the usual picture of S_3:
        // c_{-1} = root, c_0 = 1, c_1 = 01, c_2 = 001.
        let t = build_sk(3, 3).unwrap();
        assert_eq!(strings(t.all_coding()), ["", "1", "01", "001"]);
        assert!(!t.tree().contains(&seq("11")));
    }

    #[test]
    fn s4_matches_the_drawn_prefix() {
        let t = build_sk(4, 3).unwrap();
        assert_eq!(strings(t.all_coding()), ["", "1", "11", "011", "0011"]);
    }

    #[test]
    fn degenerate_sizes() {
        let t = build_sk(3, 0).unwrap();
        assert_eq!(strings(t.all_coding()), [""]);
        assert_eq!(t.real_count(), 0);
        let r = build_tr(0);
        assert_eq!(r.tree().len(), 1);
        assert!(build_sk(2, 3).is_err());
    }

    #[test]
    fn rado_schedule_is_the_binary_counter() {
        let r = build_tr(7);
        assert_eq!(
            strings(r.all_coding()),
            ["", "0", "10", "000", "0100", "10000", "110000"]
        );
    }

    #[test]
    fn skew_tree_codes_the_same_graph() {
        for (k, n) in [(3, 4), (4, 3), (5, 2)] {
            let s = build_sk(k, n).unwrap();
            let t = build_tk(k, n).unwrap();
            assert!(t.is_skew());
            assert!(t.critical_counts().iter().all(|&c| c <= 1));
            assert_eq!(s.decode(true), t.decode(true));
        }
    }
}
