use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use super::{BinSeq, LevelTree};

/// A strong subtree `S` of a host tree `T`: `S(n) ⊆ T(m_n)` and every
/// immediate successor in `T` of a node of `S(n)` is extended by exactly one
/// node of `S(n+1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct StrongSubtree {
    /// Host heights `m_0 < m_1 < ...`.
    pub level_map: Vec<usize>,
    /// `S(n)` for each `n`, sorted.
    pub level_sets: Vec<Vec<BinSeq>>,
}

impl StrongSubtree {
    /// Number of levels `N`.
    pub fn height(&self) -> usize {
        self.level_sets.len()
    }

    pub fn root(&self) -> Option<&BinSeq> {
        self.level_sets.first().and_then(|l| l.first())
    }

    pub fn nodes(&self) -> impl Iterator<Item = &BinSeq> {
        self.level_sets.iter().flatten()
    }

    /// `S` viewed as a level tree in its own right.
    pub fn to_level_tree(&self) -> LevelTree {
        let levels = self
            .level_sets
            .iter()
            .map(|l| l.first().map_or(0, BinSeq::len))
            .collect();
        LevelTree::from_sorted_levels(levels, self.level_sets.clone())
    }

    /// Checks the defining conditions against `host`.
    pub fn is_strong_subtree_of(&self, host: &LevelTree) -> bool {
        let n = self.height();
        if n == 0 || self.level_map.len() != n || self.level_sets[0].len() != 1 {
            return false;
        }
        if self.level_map.windows(2).any(|w| w[0] >= w[1]) {
            return false;
        }
        for (set, &m) in self.level_sets.iter().zip(&self.level_map) {
            if set.iter().any(|s| host.height_of(s) != Some(m)) {
                return false;
            }
        }
        for i in 0..n - 1 {
            let next = &self.level_sets[i + 1];
            let mut covered = 0;
            for s in &self.level_sets[i] {
                for u in host.successors(s) {
                    let hits = next.iter().filter(|v| u.is_prefix_of(v)).count();
                    if hits != 1 {
                        return false;
                    }
                    covered += 1;
                }
            }
            if covered != next.len() {
                return false;
            }
        }
        true
    }
}

/// All strictly increasing `k`-tuples from `0..height`, lexicographically.
pub fn level_maps(height: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, height: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for m in start..height {
            if height - m < k - cur.len() {
                break;
            }
            cur.push(m);
            go(m + 1, height, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k > 0 {
        go(0, height, k, &mut Vec::new(), &mut out);
    }
    out
}

fn valid_level_map(host: &LevelTree, map: &[usize]) -> bool {
    !map.is_empty() && map.windows(2).all(|w| w[0] < w[1]) && map.iter().all(|&m| m < host.height())
}

/// Visits every strong subtree of `host` with the given level map, in
/// the deterministic order (root, then level sets lexicographically).
pub(crate) fn visit_with_level_map<F>(host: &LevelTree, map: &[usize], f: &mut F) -> ControlFlow<()>
where
    F: FnMut(&StrongSubtree) -> ControlFlow<()>,
{
    if !valid_level_map(host, map) {
        return ControlFlow::Continue(());
    }
    for root in host.level(map[0]) {
        let mut st = StrongSubtree {
            level_map: map.to_vec(),
            level_sets: vec![vec![root.clone()]],
        };
        grow(host, &mut st, f)?;
    }
    ControlFlow::Continue(())
}

fn grow<F>(host: &LevelTree, st: &mut StrongSubtree, f: &mut F) -> ControlFlow<()>
where
    F: FnMut(&StrongSubtree) -> ControlFlow<()>,
{
    let n = st.level_sets.len();
    if n == st.level_map.len() {
        return f(st);
    }
    let target = st.level_map[n];
    let mut options: Vec<&[BinSeq]> = Vec::new();
    for s in &st.level_sets[n - 1] {
        for u in host.successors(s) {
            options.push(host.extensions_at(&u, target));
        }
    }
    if options.iter().any(|o| o.is_empty()) {
        return ControlFlow::Continue(());
    }
    // Odometer over one choice per successor; the first successor varies
    // slowest so the resulting sorted level sets come out in lex order.
    let mut idx = vec![0usize; options.len()];
    loop {
        let set: Vec<BinSeq> = idx.iter().zip(&options).map(|(&i, o)| o[i].clone()).collect();
        st.level_sets.push(set);
        let flow = grow(host, st, f);
        st.level_sets.pop();
        flow?;
        let mut pos = options.len();
        loop {
            if pos == 0 {
                return ControlFlow::Continue(());
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < options[pos].len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// Visits all `k`-strong subtrees, over the given level map or over all of
/// them in lexicographic order of level maps.
pub(crate) fn visit_strong_subtrees<F>(
    host: &LevelTree,
    k: usize,
    level_map: Option<&[usize]>,
    mut f: F,
) -> ControlFlow<()>
where
    F: FnMut(&StrongSubtree) -> ControlFlow<()>,
{
    match level_map {
        Some(map) if map.len() == k => visit_with_level_map(host, map, &mut f),
        Some(_) => ControlFlow::Continue(()),
        None => {
            for map in level_maps(host.height(), k) {
                visit_with_level_map(host, &map, &mut f)?;
            }
            ControlFlow::Continue(())
        }
    }
}

/// All `k`-strong subtrees of `host`, ordered by level map, then root, then
/// level sets. A supplied level map whose length differs from `k`, or which
/// is not strictly increasing within the host, yields nothing.
pub fn enumerate_strong_subtrees(host: &LevelTree, k: usize, level_map: Option<&[usize]>) -> Vec<StrongSubtree> {
    let mut out = Vec::new();
    let _ = visit_strong_subtrees(host, k, level_map, |s| {
        out.push(s.clone());
        ControlFlow::Continue(())
    });
    out
}
