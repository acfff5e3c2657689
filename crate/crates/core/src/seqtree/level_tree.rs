use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::BinSeq;
use crate::error::{Error, Result};

/// A finite tree in the level sense: a set of nodes `T` together with a
/// strictly increasing list of levels `L` such that `T = {t↾l : t ∈ T, l ∈ L}`.
///
/// Nodes are stored per level, sorted lexicographically. `T(n)` is the set
/// of nodes of height `n`, which is the set of nodes whose length is the
/// `n`-th entry of `L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelTree {
    levels: Vec<usize>,
    by_level: Vec<Vec<BinSeq>>,
}

/// Result of [`LevelTree::close`].
#[derive(Clone, Debug)]
pub struct Closure {
    pub tree: LevelTree,
    /// Whether the input node set was already closed.
    pub was_closed: bool,
}

impl LevelTree {
    /// Closes `nodes` under restriction to `levels`.
    ///
    /// Levels are sorted and deduplicated; levels above the longest node are
    /// dropped so that every level is inhabited.
    pub fn close<I>(nodes: I, levels: &[usize]) -> Result<Closure>
    where
        I: IntoIterator<Item = BinSeq>,
    {
        let mut levels: Vec<usize> = levels.to_vec();
        levels.sort_unstable();
        levels.dedup();
        let input: BTreeSet<BinSeq> = nodes.into_iter().collect();
        for t in &input {
            if levels.binary_search(&t.len()).is_err() {
                return Err(Error::LevelMismatch { length: t.len() });
            }
        }
        let top = input.iter().map(BinSeq::len).max();
        levels.retain(|&l| top.is_some_and(|top| l <= top));

        let mut closed = input.clone();
        for t in &input {
            for &l in levels.iter().take_while(|&&l| l < t.len()) {
                closed.insert(t.prefix(l));
            }
        }
        let was_closed = closed.len() == input.len();
        let mut by_level = vec![Vec::new(); levels.len()];
        for t in closed {
            let h = levels.binary_search(&t.len()).expect("checked above");
            by_level[h].push(t);
        }
        Ok(Closure {
            tree: LevelTree { levels, by_level },
            was_closed,
        })
    }

    /// Builds a tree from per-level node lists already known to be closed.
    /// Each list must be sorted and hold nodes of the matching length.
    pub(crate) fn from_sorted_levels(levels: Vec<usize>, by_level: Vec<Vec<BinSeq>>) -> Self {
        debug_assert_eq!(levels.len(), by_level.len());
        debug_assert!(by_level
            .iter()
            .zip(&levels)
            .all(|(v, &l)| v.windows(2).all(|w| w[0] < w[1]) && v.iter().all(|t| t.len() == l)));
        Self { levels, by_level }
    }

    /// The full binary tree `2^{<height}`, with levels `0..height`.
    pub fn full_binary(height: usize) -> Self {
        let levels: Vec<usize> = (0..height).collect();
        let by_level = levels.iter().map(|&l| BinSeq::all_of_length(l).collect()).collect();
        Self { levels, by_level }
    }

    pub fn levels(&self) -> &[usize] {
        &self.levels
    }

    /// Number of levels.
    pub fn height(&self) -> usize {
        self.levels.len()
    }

    /// `T(n)`, sorted lexicographically. Empty past the top.
    pub fn level(&self, n: usize) -> &[BinSeq] {
        self.by_level.get(n).map(Vec::as_slice).unwrap_or(&[])
    }

    /// The nodes of a given length, if that length is a level.
    pub fn nodes_of_length(&self, len: usize) -> &[BinSeq] {
        match self.levels.binary_search(&len) {
            Ok(h) => &self.by_level[h],
            Err(_) => &[],
        }
    }

    /// `height_T(t)` for a node of the tree.
    pub fn height_of(&self, t: &BinSeq) -> Option<usize> {
        let h = self.levels.binary_search(&t.len()).ok()?;
        self.by_level[h].binary_search(t).ok().map(|_| h)
    }

    pub fn contains(&self, t: &BinSeq) -> bool {
        self.height_of(t).is_some()
    }

    pub fn len(&self) -> usize {
        self.by_level.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    /// All nodes, level by level.
    pub fn nodes(&self) -> impl Iterator<Item = &BinSeq> {
        self.by_level.iter().flatten()
    }

    /// Nodes of `T(n)` extending `t`.
    pub fn extensions_at(&self, t: &BinSeq, n: usize) -> &[BinSeq] {
        let lv = self.level(n);
        let start = lv.partition_point(|u| u < t);
        let end = start + lv[start..].partition_point(|u| t.is_prefix_of(u));
        &lv[start..end]
    }

    /// `Succ_T(t) = {u↾(|t|+1) : u ∈ T, u ⊃ t}`, sorted.
    pub fn successors(&self, t: &BinSeq) -> Vec<BinSeq> {
        let Some(h) = self.height_of(t) else {
            return Vec::new();
        };
        let mut out: Vec<BinSeq> = Vec::new();
        for u in self.extensions_at(t, h + 1) {
            let s = u.prefix(t.len() + 1);
            if out.last() != Some(&s) {
                out.push(s);
            }
        }
        out
    }

    /// Whether `t` has no extension in the tree.
    pub fn is_maximal(&self, t: &BinSeq) -> bool {
        match self.height_of(t) {
            Some(h) => self.extensions_at(t, h + 1).is_empty(),
            None => false,
        }
    }

    /// Restates the closure invariant directly; used by tests and loaders.
    pub fn check_closed(&self) -> bool {
        self.nodes().all(|t| {
            self.levels
                .iter()
                .take_while(|&&l| l < t.len())
                .all(|&l| self.contains(&t.prefix(l)))
        })
    }
}

/// Serialized form: `{"levels":[...], "nodes":["bitstring", ...]}`.
#[derive(Serialize, Deserialize)]
pub(crate) struct LevelTreeRepr {
    pub levels: Vec<usize>,
    pub nodes: Vec<BinSeq>,
}

impl Serialize for LevelTree {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        LevelTreeRepr {
            levels: self.levels.clone(),
            nodes: self.nodes().cloned().collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LevelTree {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = LevelTreeRepr::deserialize(d)?;
        let closure = LevelTree::close(repr.nodes, &repr.levels).map_err(D::Error::custom)?;
        if !closure.was_closed {
            return Err(D::Error::custom("node set is not closed under its levels"));
        }
        Ok(closure.tree)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seqtree::seq;

    fn set(t: &LevelTree) -> Vec<String> {
        t.nodes().map(|n| n.to_string()).collect()
    }

    #[test]
    fn closure_examples() {
        let c = LevelTree::close([seq("00"), seq("11")], &[0, 1, 2]).unwrap();
        assert!(!c.was_closed);
        assert_eq!(set(&c.tree), ["", "0", "1", "00", "11"]);

        let c = LevelTree::close([seq("")], &[0]).unwrap();
        assert!(c.was_closed);
        assert_eq!(set(&c.tree), [""]);

        let c = LevelTree::close([seq("01")], &[1, 2]).unwrap();
        assert_eq!(set(&c.tree), ["0", "01"]);
        assert_eq!(c.tree.height_of(&seq("01")), Some(1));
    }

    #[test]
    fn level_mismatch() {
        assert_eq!(
            LevelTree::close([seq("010")], &[0, 2]).unwrap_err(),
            Error::LevelMismatch { length: 3 }
        );
    }

    #[test]
    fn successors_through_skipped_lengths() {
        let t = LevelTree::close([seq("000"), seq("011"), seq("110")], &[0, 3])
            .unwrap()
            .tree;
        assert_eq!(t.successors(&seq("")), vec![seq("0"), seq("1")]);
        assert!(t.is_maximal(&seq("011")));
        assert!(!t.is_maximal(&seq("")));
    }

    #[test]
    fn json_shape() {
        let t = LevelTree::full_binary(2);
        let v = serde_json::to_value(&t).unwrap();
        assert_eq!(v, serde_json::json!({"levels": [0, 1], "nodes": ["", "0", "1"]}));
        let back: LevelTree = serde_json::from_value(v).unwrap();
        assert_eq!(back, t);
        let bad = serde_json::json!({"levels": [0, 1], "nodes": ["1"]});
        assert!(serde_json::from_value::<LevelTree>(bad).is_err());
    }
}
