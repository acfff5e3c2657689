use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::finite::{k_subsets, monochromatic_subset};
use super::sierpinski::sierpinski_color;
use crate::error::{Error, Result};
use crate::seqtree::{enumerate_strong_subtrees, milliken_search, BinSeq, LevelTree, StrongSubtree};

/// Largest universe an experiment will color.
const UNIVERSE_BUDGET: u128 = 1 << 22;

/// A named universe of colored objects.
///
/// * `k-subsets`: the `k`-subsets of `0..n`;
/// * `node-pairs`: unordered pairs of distinct nodes of `2^{<n}`;
/// * `strong-subtrees`: the `k`-level strong subtrees of `2^{<n}`;
/// * `empty`: nothing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniverseSpec {
    pub name: String,
    pub n: usize,
    pub k: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ColoringSpec {
    /// Parity of the sum of elements, or of the number of 1s over all nodes.
    ParitySum,
    /// Sierpiński coloring; node pairs only.
    Sierpinski,
    Constant {
        color: usize,
    },
    Random {
        colors: usize,
        seed: u64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SearchSpec {
    /// Record which colors occur.
    BothColors,
    /// An `m`-subset all of whose `k`-subsets share a color (`k-subsets`).
    MonochromaticSubset { m: usize },
    /// A strong subtree of the given height all of whose `k`-strong
    /// subtrees share a color (`strong-subtrees`).
    Milliken { target_height: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum ExperimentResult {
    Vacuous,
    ColorsFound { colors: Vec<usize> },
    Witness { objects: Vec<String> },
    NoWitness,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub seed: Option<u64>,
    pub depth: usize,
    pub budget: u128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringExperiment {
    pub universe: UniverseSpec,
    pub coloring: ColoringSpec,
    pub search: SearchSpec,
    /// Number of colors available.
    pub colors: usize,
    /// One color per object, in universe order.
    pub assignment: Vec<usize>,
    pub result: ExperimentResult,
    pub provenance: Provenance,
}

enum Universe {
    Subsets(Vec<Vec<usize>>),
    Pairs(Vec<(BinSeq, BinSeq)>),
    Subtrees(Vec<StrongSubtree>),
}

impl Universe {
    fn len(&self) -> usize {
        match self {
            Universe::Subsets(v) => v.len(),
            Universe::Pairs(v) => v.len(),
            Universe::Subtrees(v) => v.len(),
        }
    }
}

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1u128, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

fn build_universe(spec: &UniverseSpec) -> Result<Universe> {
    let over = |required: u128| Error::BudgetExceeded {
        required,
        budget: UNIVERSE_BUDGET,
    };
    match spec.name.as_str() {
        "empty" => Ok(Universe::Subsets(Vec::new())),
        "k-subsets" => {
            let size = if spec.k > spec.n {
                0
            } else {
                binomial(spec.n as u128, spec.k as u128)
            };
            if size > UNIVERSE_BUDGET {
                return Err(over(size));
            }
            Ok(Universe::Subsets(k_subsets(spec.n, spec.k)))
        }
        "node-pairs" => {
            let nodes = 1u128.checked_shl(spec.n as u32).unwrap_or(u128::MAX) - 1;
            let size = binomial(nodes, 2.min(nodes));
            if size > UNIVERSE_BUDGET {
                return Err(over(size));
            }
            let all: Vec<BinSeq> = match spec.n {
                0 => Vec::new(),
                n => BinSeq::all_up_to(n - 1).collect(),
            };
            let mut pairs = Vec::new();
            for (i, s) in all.iter().enumerate() {
                for t in &all[i + 1..] {
                    pairs.push((s.clone(), t.clone()));
                }
            }
            Ok(Universe::Pairs(pairs))
        }
        "strong-subtrees" => {
            if spec.n > 8 {
                return Err(over(spec.n as u128));
            }
            let host = LevelTree::full_binary(spec.n);
            Ok(Universe::Subtrees(enumerate_strong_subtrees(&host, spec.k, None)))
        }
        other => Err(Error::UnknownUniverse(other.to_string())),
    }
}

fn parity_of_subtree(s: &StrongSubtree) -> usize {
    s.nodes().map(BinSeq::count_ones).sum::<usize>() % 2
}

fn describe_subtree(s: &StrongSubtree) -> Vec<String> {
    s.nodes().map(|t| t.to_string()).collect()
}

/// Colors a named universe and runs the requested search on it.
pub fn color_experiment(
    universe: &UniverseSpec,
    coloring: &ColoringSpec,
    search: &SearchSpec,
) -> Result<ColoringExperiment> {
    let objects = build_universe(universe)?;
    let colors = match coloring {
        ColoringSpec::ParitySum | ColoringSpec::Sierpinski => 2,
        ColoringSpec::Constant { color } => color + 1,
        ColoringSpec::Random { colors, .. } => {
            if *colors == 0 {
                return Err(Error::InvalidParameter(
                    "a random coloring needs at least one color".into(),
                ));
            }
            *colors
        }
    };
    let mut rng = match coloring {
        ColoringSpec::Random { seed, .. } => Some(ChaCha8Rng::seed_from_u64(*seed)),
        _ => None,
    };
    let mut assignment = Vec::with_capacity(objects.len());
    for i in 0..objects.len() {
        let c = match (coloring, &objects) {
            (ColoringSpec::Constant { color }, _) => *color,
            (ColoringSpec::Random { colors, .. }, _) => rng.as_mut().expect("seeded").random_range(0..*colors),
            (ColoringSpec::ParitySum, Universe::Subsets(v)) => v[i].iter().sum::<usize>() % 2,
            (ColoringSpec::ParitySum, Universe::Pairs(v)) => (v[i].0.count_ones() + v[i].1.count_ones()) % 2,
            (ColoringSpec::ParitySum, Universe::Subtrees(v)) => parity_of_subtree(&v[i]),
            (ColoringSpec::Sierpinski, Universe::Pairs(v)) => sierpinski_color(&v[i].0, &v[i].1)? as usize,
            (ColoringSpec::Sierpinski, _) => {
                return Err(Error::InvalidParameter(
                    "the Sierpiński coloring applies to node pairs".into(),
                ))
            }
        };
        assignment.push(c);
    }

    let result = if objects.len() == 0 {
        ExperimentResult::Vacuous
    } else {
        match (search, &objects) {
            (SearchSpec::BothColors, _) => {
                let mut found = assignment.clone();
                found.sort_unstable();
                found.dedup();
                ExperimentResult::ColorsFound { colors: found }
            }
            (SearchSpec::MonochromaticSubset { m }, Universe::Subsets(_)) => {
                match monochromatic_subset(universe.n, universe.k, *m, &assignment)? {
                    Some(set) => ExperimentResult::Witness {
                        objects: set.iter().map(usize::to_string).collect(),
                    },
                    None => ExperimentResult::NoWitness,
                }
            }
            (SearchSpec::Milliken { target_height }, Universe::Subtrees(v)) => {
                let host = LevelTree::full_binary(universe.n);
                let color: HashMap<&StrongSubtree, usize> = v.iter().zip(assignment.iter().copied()).collect();
                let lookup = |s: &StrongSubtree| color[s];
                match milliken_search(&host, universe.k, lookup, *target_height) {
                    Some(s) => ExperimentResult::Witness {
                        objects: describe_subtree(&s),
                    },
                    None => ExperimentResult::NoWitness,
                }
            }
            _ => {
                return Err(Error::InvalidParameter(format!(
                    "search {search:?} does not apply to universe `{}`",
                    universe.name
                )))
            }
        }
    };
    Ok(ColoringExperiment {
        universe: universe.clone(),
        coloring: coloring.clone(),
        search: search.clone(),
        colors,
        assignment,
        result,
        provenance: Provenance {
            seed: match coloring {
                ColoringSpec::Random { seed, .. } => Some(*seed),
                _ => None,
            },
            depth: universe.n,
            budget: UNIVERSE_BUDGET,
        },
    })
}
