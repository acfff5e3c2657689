use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use super::strong::{enumerate_strong_subtrees, level_maps, visit_strong_subtrees};
use super::{BinSeq, LevelTree, StrongSubtree};

/// Searches `host` for a strong subtree with `target_height` levels all of
/// whose `k`-strong subtrees receive the same color.
///
/// Finite hosts need not contain such a subtree, in which case the result
/// is `None`. Candidates are tried in enumeration order and the first
/// witness is returned.
pub fn milliken_search<C>(host: &LevelTree, k: usize, coloring: C, target_height: usize) -> Option<StrongSubtree>
where
    C: Fn(&StrongSubtree) -> usize,
{
    let mut found = None;
    let _ = visit_strong_subtrees(host, target_height, None, |candidate| {
        if is_monochromatic(candidate, k, &coloring) {
            found = Some(candidate.clone());
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    found
}

/// Colors every `k`-strong subtree of `s` (level maps reported in host
/// heights) and checks that a single color occurs.
pub(crate) fn is_monochromatic<C>(s: &StrongSubtree, k: usize, coloring: &C) -> bool
where
    C: Fn(&StrongSubtree) -> usize,
{
    let own = s.to_level_tree();
    let mut color = None;
    let flow = visit_strong_subtrees(&own, k, None, |sub| {
        let lifted = StrongSubtree {
            level_map: sub.level_map.iter().map(|&i| s.level_map[i]).collect(),
            level_sets: sub.level_sets.clone(),
        };
        let c = coloring(&lifted);
        match color {
            None => {
                color = Some(c);
                ControlFlow::Continue(())
            }
            Some(prev) if prev == c => ControlFlow::Continue(()),
            Some(_) => ControlFlow::Break(()),
        }
    });
    flow.is_continue()
}

/// A Halpern–Läuchli witness: one strong subtree per host tree, all on
/// the same level map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HlWitness {
    pub level_map: Vec<usize>,
    pub subtrees: Vec<StrongSubtree>,
}

/// Searches for strong subtrees `S_i ≤ T_i` sharing a level map of length
/// `target_height` such that `coloring` is constant on the level products
/// `⋃_n ∏_i S_i(n)`.
pub fn hl_search<C>(forest: &[LevelTree], coloring: C, target_height: usize) -> Option<HlWitness>
where
    C: Fn(&[BinSeq]) -> usize,
{
    if forest.is_empty() {
        return None;
    }
    let height = forest.iter().map(LevelTree::height).min().unwrap_or(0);
    for map in level_maps(height, target_height) {
        let per_tree: Vec<Vec<StrongSubtree>> = forest
            .iter()
            .map(|t| enumerate_strong_subtrees(t, target_height, Some(&map)))
            .collect();
        if per_tree.iter().any(Vec::is_empty) {
            continue;
        }
        let mut idx = vec![0usize; per_tree.len()];
        loop {
            let choice: Vec<&StrongSubtree> = idx.iter().zip(&per_tree).map(|(&i, v)| &v[i]).collect();
            if product_constant(&choice, &coloring) {
                return Some(HlWitness {
                    level_map: map,
                    subtrees: choice.into_iter().cloned().collect(),
                });
            }
            if !advance(&mut idx, &per_tree) {
                break;
            }
        }
    }
    None
}

fn advance<T>(idx: &mut [usize], lists: &[Vec<T>]) -> bool {
    for pos in (0..idx.len()).rev() {
        idx[pos] += 1;
        if idx[pos] < lists[pos].len() {
            return true;
        }
        idx[pos] = 0;
    }
    false
}

fn product_constant<C>(choice: &[&StrongSubtree], coloring: &C) -> bool
where
    C: Fn(&[BinSeq]) -> usize,
{
    let mut color = None;
    let height = choice[0].height();
    for n in 0..height {
        let sets: Vec<Vec<BinSeq>> = choice.iter().map(|s| s.level_sets[n].clone()).collect();
        let mut idx = vec![0usize; sets.len()];
        loop {
            let tuple: Vec<BinSeq> = idx.iter().zip(&sets).map(|(&i, s)| s[i].clone()).collect();
            let c = coloring(&tuple);
            if *color.get_or_insert(c) != c {
                return false;
            }
            if !advance(&mut idx, &sets) {
                break;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seqtree::seq;

    #[test]
    fn constant_coloring_returns_first_subtree() {
        let t = LevelTree::full_binary(3);
        let w = milliken_search(&t, 2, |_| 0, 2).unwrap();
        assert_eq!(w, enumerate_strong_subtrees(&t, 2, None)[0]);
    }

    #[test]
    fn unique_two_strong_subtree_is_trivially_monochromatic() {
        let t = LevelTree::full_binary(2);
        let w = milliken_search(&t, 2, |s| s.level_sets[1].len(), 2).unwrap();
        assert_eq!(w.level_sets, vec![vec![seq("")], vec![seq("0"), seq("1")]]);
    }

    #[test]
    fn root_only_forest() {
        let t = LevelTree::full_binary(1);
        let w = hl_search(&[t], |_| 7, 1).unwrap();
        assert_eq!(w.level_map, vec![0]);
        assert_eq!(w.subtrees[0].level_sets, vec![vec![seq("")]]);
    }

    #[test]
    fn impossible_search_gives_none() {
        // Every 2-level strong subtree of 2^{<2} contains both a node of
        // even and of odd weight.
        let t = LevelTree::full_binary(2);
        assert!(milliken_search(&t, 1, |s| s.level_sets[0][0].count_ones() % 2, 2).is_none());
        assert!(hl_search(&[], |_| 0, 1).is_none());
    }
}
