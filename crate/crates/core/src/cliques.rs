//! Pre-cliques in level sets and the Witnessing Property.
//!
//! A level set `X` has a pre-`a`-clique at an index set `I` of coding
//! nodes when the nodes `{c_i : i ∈ I}` code an `(a-2)`-clique, all of them
//! are no longer than `X`, and every member of `X` passes 1 at each of
//! them. Any two future coding nodes above such a set would then close an
//! `a`-clique.
//!
//! When the longest `c_i` has exactly the length of `X`, the bit at that
//! position is not defined yet. We then ask for the 1-extension `x⌢1` to be
//! present in the host, since that is the only way to pass 1 there.

use std::collections::BTreeMap;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::coding::{CodingTree, FiniteGraph, TreeKind};
use crate::error::{Error, Result};
use crate::seqtree::BinSeq;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PreClique {
    /// Common length `ℓ_X` of the level set.
    pub level: usize,
    pub a: usize,
    /// Coding-node indices `I`, increasing; pseudo-coding nodes are negative.
    pub witness: Vec<i64>,
    pub level_set: Vec<BinSeq>,
}

/// Whether `x` passes 1 at a coding node of length `len ≤ |x|`, reading
/// the 1-extension when `len = |x|`.
pub(crate) fn passes_one(host: &CodingTree, x: &BinSeq, len: usize) -> bool {
    if len < x.len() {
        x.bit(len)
    } else {
        host.tree().contains(&x.child(true))
    }
}

/// Position sets (into `host.all_coding()`) of size `size` among coding
/// nodes of length at most `max_len` that code a clique, in lex order.
pub(crate) fn clique_position_sets(
    host: &CodingTree,
    graph: &FiniteGraph,
    max_len: usize,
    size: usize,
) -> Vec<Vec<usize>> {
    let avail = host.all_coding().iter().take_while(|c| c.len() <= max_len).count();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(size);
    fn go(g: &FiniteGraph, avail: usize, size: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for p in start..avail {
            if cur.iter().all(|&q| g.adjacent(p, q)) {
                cur.push(p);
                go(g, avail, size, p + 1, cur, out);
                cur.pop();
            }
        }
    }
    go(graph, avail, size, 0, &mut cur, &mut out);
    out
}

fn check_a(host: &CodingTree, a: usize) -> Result<()> {
    let ok = match host.kind() {
        TreeKind::Henson { k } => (3..=k).contains(&a),
        _ => a >= 3,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "clique parameter a = {a} is out of range for a {:?} host",
            host.kind()
        )))
    }
}

fn level_of(x: &[BinSeq]) -> Result<usize> {
    let len = x.first().map_or(0, BinSeq::len);
    match x.iter().find(|t| t.len() != len) {
        Some(t) => Err(Error::Length(format!("level set mixes lengths {len} and {}", t.len()))),
        None => Ok(len),
    }
}

/// Every pre-`a`-clique of the level set `x` in `host`, by increasing
/// index set.
pub fn find_precliques(x: &[BinSeq], host: &CodingTree, a: usize) -> Result<Vec<PreClique>> {
    let level = level_of(x)?;
    check_a(host, a)?;
    if x.is_empty() {
        return Ok(Vec::new());
    }
    let graph = host.decode(true);
    let coding = host.all_coding();
    let pseudo = host.pseudo_count() as i64;
    Ok(clique_position_sets(host, &graph, level, a - 2)
        .into_iter()
        .filter(|set| {
            set.iter()
                .all(|&p| x.iter().all(|t| passes_one(host, t, coding[p].len())))
        })
        .map(|set| PreClique {
            level,
            a,
            witness: set.iter().map(|&p| p as i64 - pseudo).collect(),
            level_set: x.to_vec(),
        })
        .collect())
}

/// Which pre-cliques of a subtree must be witnessed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum WitnessMode {
    /// Every pre-clique at every level of the subtree.
    #[default]
    All,
    /// Only pre-cliques appearing for the first time: no lower level of
    /// the subtree (at or above the longest coding node involved) already
    /// separates two members.
    NewOnly,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WitnessReport {
    pub unwitnessed: Vec<PreClique>,
}

impl WitnessReport {
    pub fn is_ok(&self) -> bool {
        self.unwitnessed.is_empty()
    }
}

impl Serialize for WitnessReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            a: usize,
            level: usize,
            witness: &'a [i64],
        }
        if self.is_ok() {
            let mut st = s.serialize_struct("WitnessReport", 1)?;
            st.serialize_field("status", "ok")?;
            st.end()
        } else {
            let entries: Vec<Entry> = self
                .unwitnessed
                .iter()
                .map(|p| Entry {
                    a: p.a,
                    level: p.level,
                    witness: &p.witness,
                })
                .collect();
            let mut st = s.serialize_struct("WitnessReport", 1)?;
            st.serialize_field("unwitnessed", &entries)?;
            st.end()
        }
    }
}

/// Checks that every pre-clique among the level sets of `subtree` is
/// witnessed by coding nodes from `subtree_coding`.
///
/// For a level `ℓ` of the subtree and a clique-coding index set `I` of the
/// host, let `X_I` be the members of that level passing 1 at every
/// `c_i, i ∈ I`. If `X_I` has two or more members it is a pre-clique, and
/// it is witnessed when some `I'` of the same size, drawn from
/// `subtree_coding`, codes a clique, has all its nodes no longer than `ℓ`,
/// and has `X_I ⊆ X_{I'}`. Non-Henson hosts forbid no cliques and always
/// pass.
pub fn check_witnessing(
    tree: &CodingTree,
    subtree: &[BinSeq],
    subtree_coding: &[BinSeq],
    mode: WitnessMode,
) -> Result<WitnessReport> {
    let TreeKind::Henson { k } = tree.kind() else {
        return Ok(WitnessReport::default());
    };
    if let Some(t) = subtree.iter().find(|t| !tree.tree().contains(t)) {
        return Err(Error::InvalidParameter(format!("subtree node {t} is not in the tree")));
    }
    let mut own = Vec::with_capacity(subtree_coding.len());
    for c in subtree_coding {
        match tree.all_coding().iter().position(|d| d == c) {
            Some(p) => own.push(p),
            None => return Err(Error::InvalidParameter(format!("{c} is not a coding node of the tree"))),
        }
    }
    own.sort_unstable();
    own.dedup();

    let mut levels: BTreeMap<usize, Vec<BinSeq>> = BTreeMap::new();
    for t in subtree {
        levels.entry(t.len()).or_default().push(t.clone());
    }
    for v in levels.values_mut() {
        v.sort_unstable();
        v.dedup();
    }
    let lengths: Vec<usize> = levels.keys().copied().collect();

    let graph = tree.decode(true);
    let coding = tree.all_coding();
    let pseudo = tree.pseudo_count() as i64;
    let mut unwitnessed = Vec::new();
    for (&level, members) in &levels {
        for a in 3..=k {
            let own_sets: Vec<Vec<usize>> = clique_position_sets(tree, &graph, level, a - 2)
                .into_iter()
                .filter(|s| s.iter().all(|p| own.binary_search(p).is_ok()))
                .collect();
            for set in clique_position_sets(tree, &graph, level, a - 2) {
                let lens: Vec<usize> = set.iter().map(|&p| coding[p].len()).collect();
                let x: Vec<BinSeq> = members
                    .iter()
                    .filter(|t| lens.iter().all(|&l| passes_one(tree, t, l)))
                    .cloned()
                    .collect();
                if x.len() < 2 {
                    continue;
                }
                if mode == WitnessMode::NewOnly {
                    let star = *lens.last().expect("a >= 3 gives a nonempty index set");
                    let seen_before = lengths
                        .iter()
                        .take_while(|&&l| l < level)
                        .any(|&l| l >= star && separates(&x, l));
                    if seen_before {
                        continue;
                    }
                }
                let witnessed = own_sets.iter().any(|w| {
                    w.iter()
                        .all(|&p| x.iter().all(|t| passes_one(tree, t, coding[p].len())))
                });
                if !witnessed {
                    unwitnessed.push(PreClique {
                        level,
                        a,
                        witness: set.iter().map(|&p| p as i64 - pseudo).collect(),
                        level_set: x,
                    });
                }
            }
        }
    }
    Ok(WitnessReport { unwitnessed })
}

/// Whether two members of `x` differ below length `l`.
pub(crate) fn separates(x: &[BinSeq], l: usize) -> bool {
    let first = x[0].prefix(l);
    x[1..].iter().any(|t| t.prefix(l) != first)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coding::{build_sk, build_tr};
    use crate::seqtree::seq;

    #[test]
    fn single_coding_node_pre_three_clique() {
        let host = build_sk(3, 4).unwrap();
        // c_0 = "1"; both nodes pass 1 there and nowhere else together.
        let x = [seq("0100"), seq("0101")];
        let found = find_precliques(&x, &host, 3).unwrap();
        assert_eq!(
            found.iter().map(|p| p.witness.clone()).collect::<Vec<_>>(),
            vec![vec![0]]
        );
    }

    #[test]
    fn disagreeing_pair_has_none() {
        let host = build_sk(3, 4).unwrap();
        let x = [seq("000"), seq("101")];
        assert!(find_precliques(&x, &host, 3).unwrap().is_empty());
    }

    #[test]
    fn ragged_and_out_of_range() {
        let host = build_sk(3, 2).unwrap();
        assert!(matches!(
            find_precliques(&[seq("0"), seq("00")], &host, 3),
            Err(Error::Length(_))
        ));
        assert!(matches!(
            find_precliques(&[seq("0")], &host, 4),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn pre_four_clique_needs_an_edge() {
        // S_4: c_{-2} = "", c_{-1} = "1", c_0 = "11", c_1 = "011". The pair
        // passes 1 at c_0 and c_1, and v_0 E v_1.
        let host = build_sk(4, 4).unwrap();
        let x = [seq("00110"), seq("10110")];
        let found = find_precliques(&x, &host, 4).unwrap();
        assert!(found.iter().any(|p| p.witness == vec![0, 1]), "{found:?}");
    }

    #[test]
    fn full_prefix_is_witnessed() {
        let host = build_sk(3, 6).unwrap();
        let nodes: Vec<BinSeq> = host.tree().nodes().cloned().collect();
        let r = check_witnessing(&host, &nodes, host.all_coding(), WitnessMode::All).unwrap();
        assert!(r.is_ok());
        assert_eq!(serde_json::to_value(&r).unwrap(), serde_json::json!({"status": "ok"}));
    }

    #[test]
    fn removing_the_witness_is_reported() {
        let host = build_sk(3, 4).unwrap();
        let pair = [seq("0100"), seq("0101")];
        let with = check_witnessing(&host, &pair, &[seq("1")], WitnessMode::All).unwrap();
        assert!(with.is_ok());
        let without = check_witnessing(&host, &pair, &[], WitnessMode::All).unwrap();
        assert_eq!(without.unwitnessed.len(), 1);
        assert_eq!(
            serde_json::to_value(&without).unwrap(),
            serde_json::json!({"unwitnessed": [{"level": 4, "a": 3, "witness": [0]}]})
        );
    }

    #[test]
    fn rado_hosts_pass() {
        let host = build_tr(4);
        let nodes: Vec<BinSeq> = host.tree().nodes().cloned().collect();
        assert!(check_witnessing(&host, &nodes, &[], WitnessMode::All).unwrap().is_ok());
    }
}
