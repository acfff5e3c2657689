//! Binary sequences, level trees, strong subtrees and finite
//! Halpern–Läuchli / Milliken witness search.

mod binseq;
mod level_tree;
mod search;
mod strong;

use std::cmp::Ordering;

pub use binseq::{seq, BinSeq};
pub use level_tree::{Closure, LevelTree};
pub use search::{hl_search, milliken_search, HlWitness};
pub use strong::{enumerate_strong_subtrees, level_maps, StrongSubtree};

use crate::error::{Error, Result};

/// Lexicographic order on `2^{<ω}`.
///
/// Incomparable sequences are ordered by their first differing bit; a
/// proper initial segment sorts before its extensions.
pub fn lex_cmp(s: &BinSeq, t: &BinSeq) -> Ordering {
    s.cmp(t)
}

/// The passing number of `t` at `s`: the bit `t(|s|)`.
pub fn passing_number(t: &BinSeq, s: &BinSeq) -> Result<bool> {
    t.get(s.len()).ok_or_else(|| {
        Error::Length(format!(
            "passing number needs |s| < |t|, got |s| = {} and |t| = {}",
            s.len(),
            t.len()
        ))
    })
}

/// Longest common initial segment.
pub fn meet(s: &BinSeq, t: &BinSeq) -> BinSeq {
    s.prefix(s.common_prefix_len(t))
}

/// Closes `nodes` under pairwise meets.
pub fn meet_closure<'a, I: IntoIterator<Item = &'a BinSeq>>(nodes: I) -> Vec<BinSeq> {
    let mut set: std::collections::BTreeSet<BinSeq> = nodes.into_iter().cloned().collect();
    // In string order the meet of any two nodes is the meet of two
    // neighbours between them, so adjacent pairs suffice.
    let sorted: Vec<BinSeq> = set.iter().cloned().collect();
    for w in sorted.windows(2) {
        set.insert(meet(&w[0], &w[1]));
    }
    set.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_examples() {
        assert_eq!(lex_cmp(&seq("0"), &seq("10")), Ordering::Less);
        assert_eq!(lex_cmp(&seq(""), &seq("")), Ordering::Equal);
        assert_eq!(lex_cmp(&seq("011"), &seq("010")), Ordering::Greater);
    }

    #[test]
    fn passing_number_examples() {
        assert_eq!(passing_number(&seq("10"), &seq("0")), Ok(false));
        assert_eq!(passing_number(&seq("011"), &seq("01")), Ok(true));
        assert!(matches!(passing_number(&seq("1"), &seq("1")), Err(Error::Length(_))));
    }

    #[test]
    fn meet_examples() {
        assert_eq!(meet(&seq("001"), &seq("01")), seq("0"));
        assert_eq!(meet(&seq("0110"), &seq("0110")), seq("0110"));
        assert_eq!(meet(&seq("1"), &seq("0")), seq(""));
    }

    #[test]
    fn meet_closure_adds_branching_points() {
        let c = meet_closure(&[seq("000"), seq("011"), seq("1")]);
        assert_eq!(c, vec![seq(""), seq("0"), seq("000"), seq("011"), seq("1")]);
    }
}
