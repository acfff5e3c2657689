use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

const WORD: usize = 64;

/// A finite 0/1 sequence, i.e. a node of the full binary tree.
///
/// Bits are packed most-significant first so that comparing the word
/// vectors agrees with the string order of the bits (a proper prefix sorts
/// before its extensions). Unused trailing bits are always zero.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BinSeq {
    len: usize,
    words: Vec<u64>,
}

impl BinSeq {
    /// The root of the tree.
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let mut s = Self::empty();
        for b in bits {
            s.push(b);
        }
        s
    }

    /// `len` zero bits.
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; len.div_ceil(WORD)],
        }
    }

    /// `len` one bits.
    pub fn ones(len: usize) -> Self {
        let mut s = Self::zeros(len);
        for i in 0..len {
            s.set(i, true);
        }
        s
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Bit at position `i`, or `None` past the end.
    pub fn get(&self, i: usize) -> Option<bool> {
        (i < self.len).then(|| self.words[i / WORD] >> (WORD - 1 - i % WORD) & 1 == 1)
    }

    /// Bit at position `i`. Panics if `i >= len`.
    pub fn bit(&self, i: usize) -> bool {
        self.get(i).expect("bit index out of range")
    }

    fn set(&mut self, i: usize, b: bool) {
        let mask = 1u64 << (WORD - 1 - i % WORD);
        if b {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    pub fn push(&mut self, b: bool) {
        if self.len.is_multiple_of(WORD) {
            self.words.push(0);
        }
        self.len += 1;
        self.set(self.len - 1, b);
    }

    /// `self⌢b`
    pub fn child(&self, b: bool) -> Self {
        let mut c = self.clone();
        c.push(b);
        c
    }

    /// `self` followed by `n` copies of `b`.
    pub fn extended(&self, b: bool, n: usize) -> Self {
        let mut c = self.clone();
        for _ in 0..n {
            c.push(b);
        }
        c
    }

    /// The restriction `self↾l`. Panics if `l > len`.
    pub fn prefix(&self, l: usize) -> Self {
        assert!(l <= self.len, "restriction longer than sequence");
        let mut words = self.words[..l.div_ceil(WORD)].to_vec();
        if !l.is_multiple_of(WORD) {
            let last = words.len() - 1;
            words[last] &= !0u64 << (WORD - l % WORD);
        }
        Self { len: l, words }
    }

    /// Whether `self ⊑ other` (not necessarily proper).
    pub fn is_prefix_of(&self, other: &Self) -> bool {
        self.len <= other.len && self.common_prefix_len(other) == self.len
    }

    /// Whether `self ⊏ other`.
    pub fn is_proper_prefix_of(&self, other: &Self) -> bool {
        self.len < other.len && self.is_prefix_of(other)
    }

    /// Neither is an initial segment of the other.
    pub fn incomparable(&self, other: &Self) -> bool {
        !self.is_prefix_of(other) && !other.is_prefix_of(self)
    }

    /// Length of the longest common initial segment.
    pub fn common_prefix_len(&self, other: &Self) -> usize {
        let limit = self.len.min(other.len);
        for (i, (a, b)) in self.words.iter().zip(&other.words).enumerate() {
            let x = a ^ b;
            if x != 0 {
                return (i * WORD + x.leading_zeros() as usize).min(limit);
            }
        }
        limit
    }

    pub fn bits(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.bit(i))
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// All sequences of length exactly `len`, in lexicographic order.
    pub fn all_of_length(len: usize) -> impl Iterator<Item = BinSeq> {
        assert!(len < 64, "level too large to enumerate");
        (0..1u64 << len).map(move |v| BinSeq::from_bits((0..len).rev().map(|i| v >> i & 1 == 1)))
    }

    /// All sequences of length at most `max_len`, shortest first.
    pub fn all_up_to(max_len: usize) -> impl Iterator<Item = BinSeq> {
        (0..=max_len).flat_map(Self::all_of_length)
    }
}

impl Ord for BinSeq {
    fn cmp(&self, other: &Self) -> Ordering {
        self.words.cmp(&other.words).then(self.len.cmp(&other.len))
    }
}

impl PartialOrd for BinSeq {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BinSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.bits() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

impl FromStr for BinSeq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Parse(format!("invalid bit `{other}` in `{s}`"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(BinSeq::from_bits)
    }
}

/// Shorthand for tests and examples. Panics on anything but `0`/`1`.
pub fn seq(s: &str) -> BinSeq {
    s.parse().expect("bitstring")
}

impl Serialize for BinSeq {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BinSeq {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_matches_string_order() {
        let all: Vec<BinSeq> = BinSeq::all_up_to(5).collect();
        for a in &all {
            for b in &all {
                assert_eq!(a.cmp(b), a.to_string().cmp(&b.to_string()), "{a} vs {b}");
            }
        }
    }

    #[test]
    fn prefix_and_meet_cross_word_boundary() {
        let long = BinSeq::from_bits((0..150).map(|i| i % 3 == 0));
        let p = long.prefix(70);
        assert_eq!(p.len(), 70);
        assert!(p.is_proper_prefix_of(&long));
        let mut other = long.prefix(100);
        other.push(!long.bit(100));
        assert_eq!(long.common_prefix_len(&other), 100);
        assert_eq!(p, long.prefix(70));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(seq("0110").to_string(), "0110");
        assert_eq!(seq(""), BinSeq::empty());
        assert!("012".parse::<BinSeq>().is_err());
    }
}
