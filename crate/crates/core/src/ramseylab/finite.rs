use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

/// Largest number of colorings swept exhaustively.
pub const EXHAUSTIVE_BUDGET: u128 = 1 << 24;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum RamseyOutcome {
    /// Every coloring has a monochromatic `m`-set.
    Holds { colorings: u128 },
    /// A coloring of the `k`-subsets (in lex order) with no monochromatic
    /// `m`-set.
    Counterexample {
        subsets: Vec<Vec<usize>>,
        coloring: Vec<usize>,
    },
}

/// All `k`-subsets of `0..n`, lexicographically.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Each `m`-subset of `0..n` as positions of its `k`-subsets in
/// [`k_subsets`] order.
fn subset_index(n: usize, k: usize, m: usize) -> Vec<Vec<usize>> {
    let small = k_subsets(n, k);
    k_subsets(n, m)
        .into_iter()
        .map(|big| {
            k_subsets(m, k)
                .into_iter()
                .map(|pick| {
                    let sub: Vec<usize> = pick.iter().map(|&p| big[p]).collect();
                    small.binary_search(&sub).expect("k-subset is listed")
                })
                .collect()
        })
        .collect()
}

/// The first `m`-subset of `0..n` on whose `k`-subsets `coloring` is
/// constant, if any. `coloring` is indexed in [`k_subsets`] order.
pub fn monochromatic_subset(n: usize, k: usize, m: usize, coloring: &[usize]) -> Result<Option<Vec<usize>>> {
    check_params(n, k, m)?;
    let expected = k_subsets(n, k).len();
    if coloring.len() != expected {
        return Err(Error::InvalidParameter(format!(
            "coloring has {} entries, there are {expected} {k}-subsets",
            coloring.len()
        )));
    }
    let index = subset_index(n, k, m);
    Ok(k_subsets(n, m)
        .into_iter()
        .zip(&index)
        .find(|(_, idx)| is_constant(idx, coloring))
        .map(|(set, _)| set))
}

fn is_constant(idx: &[usize], coloring: &[usize]) -> bool {
    idx.windows(2).all(|w| coloring[w[0]] == coloring[w[1]])
}

fn check_params(n: usize, k: usize, m: usize) -> Result<()> {
    if k <= m && m <= n {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "need k <= m <= n, got n = {n}, k = {k}, m = {m}"
        )))
    }
}

/// Decides `n → (m)^k_r` by sweeping all `r`-colorings of the `k`-subsets
/// of `n`. The first counterexample in base-`r` counting order is returned.
pub fn finite_ramsey_check(n: usize, k: usize, r: usize, m: usize) -> Result<RamseyOutcome> {
    check_params(n, k, m)?;
    let subsets = k_subsets(n, k);
    let cells = subsets.len() as u32;
    let total = (r as u128).checked_pow(cells).unwrap_or(u128::MAX);
    if total > EXHAUSTIVE_BUDGET {
        return Err(Error::BudgetExceeded {
            required: total,
            budget: EXHAUSTIVE_BUDGET,
        });
    }
    let index = subset_index(n, k, m);
    let decode = |mut code: u64| -> Vec<usize> {
        (0..cells)
            .map(|_| {
                let c = (code % r as u64) as usize;
                code /= r as u64;
                c
            })
            .collect()
    };
    let bad = (0..total as u64).into_par_iter().find_first(|&code| {
        let coloring = decode(code);
        !index.iter().any(|idx| is_constant(idx, &coloring))
    });
    Ok(match bad {
        Some(code) => RamseyOutcome::Counterexample {
            subsets,
            coloring: decode(code),
        },
        None => RamseyOutcome::Holds { colorings: total },
    })
}
