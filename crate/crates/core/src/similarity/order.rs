use std::cmp::Ordering;
use std::collections::BTreeMap;

use serde::Serialize;

use super::map::{similarity_type, NodeSet, SimilarityType};
use crate::error::{Error, Result};
use crate::seqtree::BinSeq;

/// The order `◁` on `2^{<ω}`, under which the tree is a copy of the
/// rationals: `s ◁ t` when `s` and `t` are incomparable and `s` is
/// lexicographically smaller, or `s ⊏ t` and `t(|s|) = 1`, or `t ⊏ s` and
/// `s(|t|) = 0`.
pub fn triangle_order_cmp(s: &BinSeq, t: &BinSeq) -> Result<Ordering> {
    if s == t {
        return Err(Error::EqualInput);
    }
    let less = if s.is_prefix_of(t) {
        t.bit(s.len())
    } else if t.is_prefix_of(s) {
        !s.bit(t.len())
    } else {
        s < t
    };
    Ok(if less { Ordering::Less } else { Ordering::Greater })
}

/// A similarity type of pairs of rationals together with a pair realizing it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DevlinType {
    pub ty: SimilarityType,
    pub witness: [BinSeq; 2],
}

/// The similarity types of pairs of rationals.
///
/// Pairs are antichains `{s, t}` of different lengths in which the longer
/// node passes 0 at the length of the shorter. They fall into two types
/// according to whether the longer node lies to the left or to the right.
/// Witnesses are the first pairs found in `2^{≤4}` in string order.
pub fn devlin_pair_types() -> Vec<DevlinType> {
    let all: Vec<BinSeq> = BinSeq::all_up_to(4).collect();
    let mut found: BTreeMap<SimilarityType, [BinSeq; 2]> = BTreeMap::new();
    for (i, s) in all.iter().enumerate() {
        for t in &all[i + 1..] {
            if !s.incomparable(t) || s.len() == t.len() {
                continue;
            }
            let (short, long) = if s.len() < t.len() { (s, t) } else { (t, s) };
            if long.bit(short.len()) {
                continue;
            }
            let ty = similarity_type(&NodeSet::new([s.clone(), t.clone()], &[]));
            found.entry(ty).or_insert_with(|| [s.clone(), t.clone()]);
        }
    }
    found
        .into_iter()
        .map(|(ty, witness)| DevlinType { ty, witness })
        .collect()
}
