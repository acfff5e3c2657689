use serde::Serialize;

use crate::error::{Error, Result};
use crate::seqtree::{enumerate_strong_subtrees, BinSeq, LevelTree, StrongSubtree};
use crate::similarity::triangle_order_cmp;

/// Largest height swept by [`verify_sierpinski_persistence`].
pub const PERSISTENCE_MAX_DEPTH: usize = 7;

/// The Sierpiński coloring of the unordered pair `{s, t}`: 0 when the
/// shorter node is `◁`-below the longer, 1 otherwise. Pairs of equal length
/// are read with the lex-smaller node first.
pub fn sierpinski_color(s: &BinSeq, t: &BinSeq) -> Result<u8> {
    if s == t {
        return Err(Error::EqualInput);
    }
    let (a, b) = if (s.len(), s) <= (t.len(), t) { (s, t) } else { (t, s) };
    Ok(if triangle_order_cmp(a, b)?.is_lt() { 0 } else { 1 })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Persistence {
    Holds { subtrees: usize },
    Counterexample { subtree: StrongSubtree },
}

/// Checks that every strong subtree of `2^{<n}` with at least two levels
/// contains pairs of both colors.
///
/// Every such subtree contains a two-level strong subtree (its first two
/// levels), so only those are swept.
pub fn verify_sierpinski_persistence(n: usize) -> Result<Persistence> {
    if n > PERSISTENCE_MAX_DEPTH {
        return Err(Error::BudgetExceeded {
            required: n as u128,
            budget: PERSISTENCE_MAX_DEPTH as u128,
        });
    }
    let host = LevelTree::full_binary(n);
    let subtrees = enumerate_strong_subtrees(&host, 2, None);
    for s in &subtrees {
        let nodes: Vec<&BinSeq> = s.nodes().collect();
        let mut seen = [false; 2];
        for (i, x) in nodes.iter().enumerate() {
            for y in &nodes[i + 1..] {
                seen[sierpinski_color(x, y)? as usize] = true;
            }
        }
        if !seen[0] || !seen[1] {
            return Ok(Persistence::Counterexample { subtree: s.clone() });
        }
    }
    Ok(Persistence::Holds {
        subtrees: subtrees.len(),
    })
}
