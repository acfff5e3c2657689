use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::graph::FiniteGraph;
use super::tree::CodingTree;
use crate::seqtree::BinSeq;

/// An antichain of coding nodes, listed in coding order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CodingAntichain {
    pub indices: Vec<i64>,
    pub nodes: Vec<BinSeq>,
}

/// All antichains among the first `max_depth` coding nodes (index
/// `0..max_depth`, pseudo-coding nodes excluded) that code `g` as an
/// ordered graph. Results come in lexicographic order of index lists.
pub fn graph_to_antichains(g: &FiniteGraph, host: &CodingTree, max_depth: usize) -> Vec<CodingAntichain> {
    let real = host.real_coding();
    let pool = &real[..max_depth.min(real.len())];
    let order = g.order();
    if order == 0 {
        return vec![CodingAntichain {
            indices: vec![],
            nodes: vec![],
        }];
    }
    (0..pool.len())
        .into_par_iter()
        .flat_map_iter(|first| {
            let mut found = Vec::new();
            let mut chosen = vec![first];
            extend(g, pool, &mut chosen, &mut found);
            found
        })
        .map(|positions| CodingAntichain {
            indices: positions.iter().map(|&p| p as i64).collect(),
            nodes: positions.iter().map(|&p| pool[p].clone()).collect(),
        })
        .collect()
}

fn extend(g: &FiniteGraph, pool: &[BinSeq], chosen: &mut Vec<usize>, found: &mut Vec<Vec<usize>>) {
    let q = chosen.len();
    if q == g.order() {
        found.push(chosen.clone());
        return;
    }
    let last = *chosen.last().expect("search starts from a first node");
    for next in last + 1..pool.len() {
        let t = &pool[next];
        let fits = chosen.iter().enumerate().all(|(p, &i)| {
            let s = &pool[i];
            !s.is_prefix_of(t) && t.bit(s.len()) == g.adjacent(p, q)
        });
        if fits {
            chosen.push(next);
            extend(g, pool, chosen, found);
            chosen.pop();
        }
    }
}
