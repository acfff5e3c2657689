use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::seqtree::BinSeq;

/// A finite ordered graph. Vertex order is part of the identity; labels
/// carry the coding index each vertex came from.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteGraph {
    labels: Vec<i64>,
    adj: Vec<Vec<bool>>,
}

impl FiniteGraph {
    /// The edgeless graph on `order` vertices labelled `0..order`.
    pub fn empty(order: usize) -> Self {
        Self {
            labels: (0..order as i64).collect(),
            adj: vec![vec![false; order]; order],
        }
    }

    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(order);
        for &(i, j) in edges {
            if i == j {
                return Err(Error::InvalidParameter(format!("loop at vertex {i}")));
            }
            if i >= order || j >= order {
                return Err(Error::InvalidParameter(format!(
                    "edge ({i}, {j}) out of range for order {order}"
                )));
            }
            g.adj[i][j] = true;
            g.adj[j][i] = true;
        }
        Ok(g)
    }

    pub fn complete(order: usize) -> Self {
        let mut g = Self::empty(order);
        for i in 0..order {
            for j in 0..order {
                g.adj[i][j] = i != j;
            }
        }
        g
    }

    pub fn with_labels(mut self, labels: Vec<i64>) -> Self {
        assert_eq!(labels.len(), self.order());
        self.labels = labels;
        self
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    /// Adjacency by vertex position.
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i][j]
    }

    /// Edges as position pairs `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.order();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.adj[i][j])
            .collect()
    }

    /// Equality as ordered graphs, ignoring labels.
    pub fn same_ordered_graph(&self, other: &Self) -> bool {
        self.adj == other.adj
    }

    /// Induced subgraph on the given positions, in the given order.
    pub fn induced(&self, positions: &[usize]) -> Self {
        let adj = positions
            .iter()
            .map(|&i| positions.iter().map(|&j| self.adj[i][j]).collect())
            .collect();
        Self {
            labels: positions.iter().map(|&i| self.labels[i]).collect(),
            adj,
        }
    }

    /// Whether some `r` of the vertices in `within` are pairwise adjacent.
    pub fn has_clique_within(&self, within: &[usize], r: usize) -> bool {
        fn go(g: &FiniteGraph, cand: &[usize], r: usize) -> bool {
            if r == 0 {
                return true;
            }
            if cand.len() < r {
                return false;
            }
            for (pos, &v) in cand.iter().enumerate() {
                if cand.len() - pos < r {
                    break;
                }
                let next: Vec<usize> = cand[pos + 1..].iter().copied().filter(|&w| g.adj[v][w]).collect();
                if go(g, &next, r - 1) {
                    return true;
                }
            }
            false
        }
        go(self, within, r)
    }

    pub fn has_clique(&self, r: usize) -> bool {
        let all: Vec<usize> = (0..self.order()).collect();
        self.has_clique_within(&all, r)
    }
}

/// Decodes a chain of nodes with strictly increasing lengths: `v_n E v_m`
/// (`m < n`) iff `t_n(|t_m|) = 1`.
pub fn decode_graph(chain: &[BinSeq]) -> Result<FiniteGraph> {
    if let Some(w) = chain.windows(2).find(|w| w[0].len() >= w[1].len()) {
        return Err(Error::Length(format!(
            "coding chain lengths must strictly increase, got {} then {}",
            w[0].len(),
            w[1].len()
        )));
    }
    Ok(decode_unchecked(chain))
}

pub(crate) fn decode_unchecked(chain: &[BinSeq]) -> FiniteGraph {
    let mut g = FiniteGraph::empty(chain.len());
    for (n, t) in chain.iter().enumerate() {
        for (m, s) in chain[..n].iter().enumerate() {
            if t.get(s.len()) == Some(true) {
                g.adj[n][m] = true;
                g.adj[m][n] = true;
            }
        }
    }
    g
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<i64>>,
    order: usize,
}

impl Serialize for FiniteGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let default_labels = self.labels.iter().enumerate().all(|(i, &l)| l == i as i64);
        GraphRepr {
            edges: self.edges().into_iter().map(|(i, j)| [i, j]).collect(),
            labels: (!default_labels).then(|| self.labels.clone()),
            order: self.order(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FiniteGraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = GraphRepr::deserialize(d)?;
        let edges: Vec<(usize, usize)> = repr.edges.iter().map(|e| (e[0], e[1])).collect();
        let g = FiniteGraph::from_edges(repr.order, &edges).map_err(D::Error::custom)?;
        match repr.labels {
            Some(l) if l.len() != repr.order => Err(D::Error::custom("label count differs from order")),
            Some(l) => Ok(g.with_labels(l)),
            None => Ok(g),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seqtree::seq;

    fn chain(s: &[&str]) -> Vec<BinSeq> {
        s.iter().map(|x| seq(x)).collect()
    }

    #[test]
    fn path_of_length_two() {
        let g = decode_graph(&chain(&["1", "01", "001"])).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn isolated_pair() {
        let g = decode_graph(&chain(&["0", "10"])).unwrap();
        assert!(g.edges().is_empty());
        assert_eq!(g.order(), 2);
    }

    #[test]
    fn triangle() {
        let g = decode_graph(&chain(&["0", "11", "111"])).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (1, 2)]);
        assert!(g.has_clique(3));
        assert!(!g.has_clique(4));
    }

    #[test]
    fn non_increasing_lengths_rejected() {
        assert!(matches!(decode_graph(&chain(&["01", "10"])), Err(Error::Length(_))));
    }

    #[test]
    fn json_round_trip() {
        let g = FiniteGraph::from_edges(3, &[(0, 2)]).unwrap();
        let v = serde_json::to_value(&g).unwrap();
        assert_eq!(v, serde_json::json!({"order": 3, "edges": [[0, 2]]}));
        assert_eq!(serde_json::from_value::<FiniteGraph>(v).unwrap(), g);
        assert!(serde_json::from_value::<FiniteGraph>(serde_json::json!({"order": 2, "edges": [[1, 1]]})).is_err());
    }
}
