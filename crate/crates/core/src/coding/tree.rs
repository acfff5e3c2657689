use serde::{Deserialize, Serialize};

use super::graph::{decode_unchecked, FiniteGraph};
use crate::error::{Error, Result};
use crate::seqtree::{BinSeq, LevelTree};

/// What a coding tree is meant to code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TreeKind {
    /// The `K_k`-free Henson graph `H_k`, `k ≥ 3`.
    Henson {
        k: usize,
    },
    /// The Rado graph.
    Rado,
    Generic,
}

impl TreeKind {
    pub fn name(&self) -> &'static str {
        match self {
            TreeKind::Henson { .. } => "henson",
            TreeKind::Rado => "rado",
            TreeKind::Generic => "generic",
        }
    }
}

/// A tree with coding nodes `⟨T, N; ⊆, <, c⟩`.
///
/// The underlying tree is closed under all initial segments (its levels
/// are `0..=h`). Coding nodes are stored in order; the first
/// `pseudo_count` of them are the pseudo-coding nodes of a Henson tree,
/// carrying indices `-(k-2), ..., -1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodingTree {
    tree: LevelTree,
    coding: Vec<BinSeq>,
    pseudo: usize,
    kind: TreeKind,
    skew: bool,
}

impl CodingTree {
    /// Validates and assembles a coding tree.
    ///
    /// `coding` lists the coding nodes in order, pseudo-coding nodes first.
    pub fn new(tree: LevelTree, coding: Vec<BinSeq>, pseudo: usize, kind: TreeKind, skew: bool) -> Result<Self> {
        let t = Self::assemble(tree, coding, pseudo, kind, skew)?;
        t.validate()?;
        Ok(t)
    }

    /// Structural checks only; branching rules are left to the checkers.
    pub(crate) fn assemble(
        tree: LevelTree,
        coding: Vec<BinSeq>,
        pseudo: usize,
        kind: TreeKind,
        skew: bool,
    ) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidCodingTree(m));
        if tree.levels().iter().enumerate().any(|(i, &l)| i != l) {
            return bad("coding trees must have levels 0, 1, ..., h".into());
        }
        if let Some(c) = coding.iter().find(|c| !tree.contains(c)) {
            return bad(format!("coding node {c} is not in the tree"));
        }
        if coding.windows(2).any(|w| w[0].len() >= w[1].len()) {
            return bad("coding node lengths must strictly increase".into());
        }
        if pseudo > coding.len() {
            return bad("more pseudo-coding nodes than coding nodes".into());
        }
        match kind {
            TreeKind::Henson { k } if k < 3 => return bad(format!("Henson trees need k >= 3, got {k}")),
            TreeKind::Henson { k } if pseudo != 0 && pseudo != k - 2 => {
                return bad(format!("a Henson({k}) tree carries 0 or {} pseudo-coding nodes", k - 2))
            }
            TreeKind::Rado | TreeKind::Generic if pseudo != 0 => {
                return bad("only Henson trees carry pseudo-coding nodes".into())
            }
            _ => {}
        }
        Ok(Self {
            tree,
            coding,
            pseudo,
            kind,
            skew,
        })
    }

    fn validate(&self) -> Result<()> {
        if self.pseudo > 0 {
            // The pseudo-coding nodes together with c_0 code a (k-1)-clique.
            let with_first = (self.pseudo + 1).min(self.coding.len());
            let g = decode_unchecked(&self.coding[..with_first]);
            if g.edges().len() != with_first * (with_first - 1) / 2 {
                return Err(Error::InvalidCodingTree(
                    "pseudo-coding nodes and c_0 must code a clique".into(),
                ));
            }
        }
        if self.skew {
            if let Some(level) = self.crowded_levels().first() {
                return Err(Error::InvalidCodingTree(format!(
                    "skew tree has more than one critical node at level {level}"
                )));
            }
        }
        Ok(())
    }

    pub fn tree(&self) -> &LevelTree {
        &self.tree
    }

    pub fn kind(&self) -> TreeKind {
        self.kind
    }

    /// `k` for Henson trees.
    pub fn k(&self) -> Option<usize> {
        match self.kind {
            TreeKind::Henson { k } => Some(k),
            _ => None,
        }
    }

    pub fn is_skew(&self) -> bool {
        self.skew
    }

    pub fn pseudo_count(&self) -> usize {
        self.pseudo
    }

    /// Number of coding nodes with index `≥ 0`.
    pub fn real_count(&self) -> usize {
        self.coding.len() - self.pseudo
    }

    /// All coding nodes including pseudo-coding nodes, in order.
    pub fn all_coding(&self) -> &[BinSeq] {
        &self.coding
    }

    /// Coding nodes with index `≥ 0`.
    pub fn real_coding(&self) -> &[BinSeq] {
        &self.coding[self.pseudo..]
    }

    /// `(index, node)` pairs, pseudo-coding nodes first with negative index.
    pub fn coding_nodes(&self) -> impl Iterator<Item = (i64, &BinSeq)> {
        let p = self.pseudo as i64;
        self.coding.iter().enumerate().map(move |(j, c)| (j as i64 - p, c))
    }

    /// The coding node `c_i`; negative indices address pseudo-coding nodes.
    pub fn coding(&self, index: i64) -> Option<&BinSeq> {
        let j = index + self.pseudo as i64;
        usize::try_from(j).ok().and_then(|j| self.coding.get(j))
    }

    /// Index of `t` if it is a coding node.
    pub fn coding_index_of(&self, t: &BinSeq) -> Option<i64> {
        self.coding_position_at_length(t.len())
            .filter(|&j| &self.coding[j] == t)
            .map(|j| j as i64 - self.pseudo as i64)
    }

    /// Position (into [`all_coding`](Self::all_coding)) of the coding node of length `len`.
    pub(crate) fn coding_position_at_length(&self, len: usize) -> Option<usize> {
        self.coding.binary_search_by_key(&len, BinSeq::len).ok()
    }

    pub fn is_coding(&self, t: &BinSeq) -> bool {
        self.coding_index_of(t).is_some()
    }

    /// Length of the longest node.
    pub fn top(&self) -> usize {
        self.tree.height().saturating_sub(1)
    }

    /// The graph coded by the coding nodes; pseudo-coding vertices only on request.
    pub fn decode(&self, include_pseudo: bool) -> FiniteGraph {
        let start = if include_pseudo { 0 } else { self.pseudo };
        let labels = (start..self.coding.len())
            .map(|j| j as i64 - self.pseudo as i64)
            .collect();
        decode_unchecked(&self.coding[start..]).with_labels(labels)
    }

    /// Whether `t` has both one-step extensions in the tree.
    pub fn splits(&self, t: &BinSeq) -> bool {
        self.tree.contains(&t.child(false)) && self.tree.contains(&t.child(true))
    }

    /// Critical nodes (coding or splitting) at each level.
    pub fn critical_counts(&self) -> Vec<usize> {
        (0..self.tree.height())
            .map(|h| {
                let coding = usize::from(self.coding_position_at_length(h).is_some());
                let splitting = self.tree.level(h).iter().filter(|t| self.splits(t)).count();
                coding + splitting
            })
            .collect()
    }

    /// Levels holding more than one critical node.
    pub fn crowded_levels(&self) -> Vec<usize> {
        self.critical_counts()
            .into_iter()
            .enumerate()
            .filter(|&(_, c)| c > 1)
            .map(|(h, _)| h)
            .collect()
    }
}

#[derive(Serialize, Deserialize)]
struct CodingRepr {
    index: i64,
    node: BinSeq,
}

/// Fields in key order so the derived output is already canonical.
#[derive(Serialize, Deserialize)]
struct CodingTreeRepr {
    coding: Vec<CodingRepr>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    kind: String,
    levels: Vec<usize>,
    nodes: Vec<BinSeq>,
    skew: bool,
}

impl Serialize for CodingTree {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CodingTreeRepr {
            coding: self
                .coding_nodes()
                .map(|(index, node)| CodingRepr {
                    index,
                    node: node.clone(),
                })
                .collect(),
            k: self.k(),
            kind: self.kind.name().to_string(),
            levels: self.tree.levels().to_vec(),
            nodes: self.tree.nodes().cloned().collect(),
            skew: self.skew,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CodingTree {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = CodingTreeRepr::deserialize(d)?;
        let kind = match (repr.kind.as_str(), repr.k) {
            ("henson", Some(k)) => TreeKind::Henson { k },
            ("henson", None) => return Err(D::Error::custom("henson trees need `k`")),
            ("rado", _) => TreeKind::Rado,
            ("generic", _) => TreeKind::Generic,
            (other, _) => return Err(D::Error::custom(format!("unknown kind `{other}`"))),
        };
        let pseudo = repr.coding.iter().take_while(|c| c.index < 0).count();
        for (j, c) in repr.coding.iter().enumerate() {
            if c.index != j as i64 - pseudo as i64 {
                return Err(D::Error::custom(
                    "coding indices must run consecutively up from -pseudo",
                ));
            }
        }
        let closure = LevelTree::close(repr.nodes, &repr.levels).map_err(D::Error::custom)?;
        if !closure.was_closed {
            return Err(D::Error::custom("node set is not closed under its levels"));
        }
        let coding = repr.coding.into_iter().map(|c| c.node).collect();
        CodingTree::new(closure.tree, coding, pseudo, kind, repr.skew).map_err(D::Error::custom)
    }
}
