//! Brute-force oracles. These work on plain strings and index lists and
//! share no code with the library beyond parsing.
#![allow(dead_code)]

use std::collections::BTreeSet;

pub fn meet(s: &str, t: &str) -> String {
    s.chars()
        .zip(t.chars())
        .take_while(|(a, b)| a == b)
        .map(|(a, _)| a)
        .collect()
}

pub fn meet_close(nodes: &[String]) -> Vec<String> {
    let mut set: BTreeSet<String> = nodes.iter().cloned().collect();
    loop {
        let v: Vec<String> = set.iter().cloned().collect();
        let before = set.len();
        for a in &v {
            for b in &v {
                set.insert(meet(a, b));
            }
        }
        if set.len() == before {
            return set.into_iter().collect();
        }
    }
}

pub fn bit(s: &str, i: usize) -> bool {
    s.as_bytes()[i] == b'1'
}

pub fn all_strings(max_len: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    for len in 1..=max_len {
        for x in 0..(1u32 << len) {
            out.push(
                (0..len)
                    .rev()
                    .map(|i| if x >> i & 1 == 1 { '1' } else { '0' })
                    .collect(),
            );
        }
    }
    out
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                go(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// A node set with coding flags, closed under meets.
#[derive(Clone, Debug)]
pub struct Marked {
    pub nodes: Vec<String>,
    pub coding: Vec<bool>,
}

impl Marked {
    pub fn new(nodes: &[String], coding: &dyn Fn(&str) -> bool) -> Self {
        let nodes = meet_close(nodes);
        let coding = nodes.iter().map(|t| coding(t)).collect();
        Self { nodes, coding }
    }
}

/// Whether the bijection `f` (positions of `s` to positions of `t`)
/// satisfies the six defining conditions of a strong similarity map.
pub fn is_strong_map(s: &Marked, t: &Marked, f: &[usize]) -> bool {
    let n = s.nodes.len();
    let (a, b) = (&s.nodes, &t.nodes);
    let pos = |set: &[String], x: &str| set.iter().position(|y| y == x);
    for i in 0..n {
        if s.coding[i] != t.coding[f[i]] {
            return false;
        }
        for j in 0..n {
            let (x, y) = (&a[i], &a[j]);
            let (fx, fy) = (&b[f[i]], &b[f[j]]);
            if (x < y) != (fx < fy) {
                return false;
            }
            if x.len().cmp(&y.len()) != fx.len().cmp(&fy.len()) {
                return false;
            }
            if y.starts_with(x.as_str()) != fy.starts_with(fx.as_str()) {
                return false;
            }
            match pos(a, &meet(x, y)) {
                Some(m) if b[f[m]] == meet(fx, fy) => {}
                _ => return false,
            }
            if s.coding[j] && y.len() < x.len() && bit(x, y.len()) != bit(fx, fy.len()) {
                return false;
            }
        }
    }
    true
}

/// Tries every bijection.
pub fn brute_strong_map(s: &Marked, t: &Marked) -> Option<Vec<usize>> {
    if s.nodes.len() != t.nodes.len() {
        return None;
    }
    permutations(s.nodes.len()).into_iter().find(|f| is_strong_map(s, t, f))
}

/// Exhaustive clique search over vertex subsets.
pub fn brute_has_clique(order: usize, adjacent: &dyn Fn(usize, usize) -> bool, r: usize) -> bool {
    if r > order {
        return false;
    }
    (0u64..1 << order).any(|mask| {
        if mask.count_ones() as usize != r {
            return false;
        }
        let v: Vec<usize> = (0..order).filter(|&i| mask >> i & 1 == 1).collect();
        v.iter().all(|&i| v.iter().all(|&j| i == j || adjacent(i, j)))
    })
}

/// Subsets of the full binary tree `2^{<height}` (as strings) that form
/// strong subtrees with `k` levels, found by checking every subset.
pub fn brute_strong_subtrees(height: usize, k: usize) -> Vec<Vec<String>> {
    let all: Vec<String> = all_strings(height.saturating_sub(1));
    let mut out = Vec::new();
    for mask in 1u64..1 << all.len() {
        let sub: Vec<&String> = (0..all.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| &all[i])
            .collect();
        let lengths: BTreeSet<usize> = sub.iter().map(|s| s.len()).collect();
        if lengths.len() != k {
            continue;
        }
        let lengths: Vec<usize> = lengths.into_iter().collect();
        let level = |l: usize| -> Vec<&String> { sub.iter().copied().filter(|s| s.len() == l).collect() };
        if level(lengths[0]).len() != 1 {
            continue;
        }
        let mut ok = true;
        for w in lengths.windows(2) {
            let upper = level(w[1]);
            let mut covered = 0;
            for s in level(w[0]) {
                for b in ['0', '1'] {
                    let u = format!("{s}{b}");
                    let hits = upper.iter().filter(|v| v.starts_with(u.as_str())).count();
                    ok &= hits == 1;
                    covered += 1;
                }
            }
            ok &= covered == upper.len();
        }
        if ok {
            let mut v: Vec<String> = sub.into_iter().cloned().collect();
            v.sort();
            out.push(v);
        }
    }
    out
}
