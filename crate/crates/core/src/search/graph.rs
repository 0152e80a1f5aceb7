use std::collections::HashSet;

use super::bitset::BitSet;
use crate::error::{Error, Result};
use crate::vector::{all_joker_vectors, distance_unchecked, JokerVector};

/// Default cap on the adjacency matrix size.
pub const DEFAULT_MAX_ADJACENCY_BYTES: usize = 1 << 28;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphOptions {
    /// Drop `*^d`, which is at distance zero from every word.
    pub prune_all_jokers: bool,
    pub max_adjacency_bytes: usize,
}

impl Default for GraphOptions {
    fn default() -> Self {
        Self {
            prune_all_jokers: false,
            max_adjacency_bytes: DEFAULT_MAX_ADJACENCY_BYTES,
        }
    }
}

/// Vertices are joker vectors; `u ~ v` iff their distance lies in `1..=k`.
/// Cliques are exactly the `k`-neighborly families on the vertex set.
#[derive(Debug, Clone)]
pub struct CompatGraph {
    k: usize,
    d: usize,
    vertices: Vec<JokerVector>,
    adjacency: Vec<BitSet>,
}

pub(crate) fn check_adjacency_budget(n: usize, max_bytes: usize) -> Result<()> {
    let bytes = (n as u128) * (n.div_ceil(64) as u128) * 8;
    if bytes > max_bytes as u128 {
        return Err(Error::Resource(format!(
            "adjacency for {n} vertices needs {bytes} bytes (limit {max_bytes})"
        )));
    }
    Ok(())
}

impl CompatGraph {
    /// Graph on an explicit vertex list, kept in the given order.
    pub fn from_vertices(k: usize, d: usize, vertices: Vec<JokerVector>) -> Result<Self> {
        Self::from_vertices_with(k, d, vertices, DEFAULT_MAX_ADJACENCY_BYTES)
    }

    pub fn from_vertices_with(
        k: usize,
        d: usize,
        vertices: Vec<JokerVector>,
        max_adjacency_bytes: usize,
    ) -> Result<Self> {
        if k == 0 || k > d {
            return Err(Error::Domain(format!("need 1 <= k <= d, got k={k}, d={d}")));
        }
        let mut seen = HashSet::with_capacity(vertices.len());
        for v in &vertices {
            if v.len() != d {
                return Err(Error::Dimension {
                    expected: d,
                    found: v.len(),
                });
            }
            if !seen.insert(*v) {
                return Err(Error::Duplicate(v.to_string()));
            }
        }
        let n = vertices.len();
        check_adjacency_budget(n, max_adjacency_bytes)?;
        let mut adjacency = vec![BitSet::new(n); n];
        for i in 0..n {
            for j in i + 1..n {
                let dist = distance_unchecked(&vertices[i], &vertices[j]);
                if dist >= 1 && dist <= k {
                    adjacency[i].insert(j);
                    adjacency[j].insert(i);
                }
            }
        }
        Ok(Self {
            k,
            d,
            vertices,
            adjacency,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[JokerVector] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> JokerVector {
        self.vertices[i]
    }

    pub fn index_of(&self, v: &JokerVector) -> Option<usize> {
        self.vertices.iter().position(|u| u == v)
    }

    pub fn neighbors(&self, i: usize) -> &BitSet {
        &self.adjacency[i]
    }

    pub(crate) fn adjacency(&self) -> &[BitSet] {
        &self.adjacency
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacency[i].contains(j)
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adjacency[i].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(BitSet::len).sum::<usize>() / 2
    }
}

/// The graph on all of `{0,1,*}^d` in lexicographic order.
pub fn build_graph(k: usize, d: usize) -> Result<CompatGraph> {
    build_graph_with(k, d, &GraphOptions::default())
}

pub fn build_graph_with(k: usize, d: usize, options: &GraphOptions) -> Result<CompatGraph> {
    if k == 0 || k > d {
        return Err(Error::Domain(format!("need 1 <= k <= d, got k={k}, d={d}")));
    }
    let n = 3u128.pow(d.min(80) as u32);
    if n > usize::MAX as u128 || d > 16 {
        return Err(Error::Resource(format!("3^{d} vertices")));
    }
    check_adjacency_budget(n as usize, options.max_adjacency_bytes)?;
    let mut vertices = all_joker_vectors(d)?;
    if options.prune_all_jokers {
        vertices.retain(|v| v.joker_count() < d);
    }
    CompatGraph::from_vertices_with(k, d, vertices, options.max_adjacency_bytes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vector::hamming_distance;

    #[test]
    fn small_graph() {
        let g = build_graph(1, 2).unwrap();
        assert_eq!(g.len(), 9);
        let star = g.index_of(&"**".parse().unwrap()).unwrap();
        assert_eq!(g.degree(star), 0);
        // brute-force edge count over all 36 pairs
        let vs = all_joker_vectors(2).unwrap();
        let mut edges = 0;
        for i in 0..9 {
            for j in i + 1..9 {
                let dist = hamming_distance(&vs[i], &vs[j]).unwrap();
                if dist == 1 {
                    edges += 1;
                }
            }
        }
        assert_eq!(g.edge_count(), edges);
    }

    #[test]
    fn symmetric_and_irreflexive() {
        for d in 1..=4 {
            for k in 1..=d {
                let g = build_graph(k, d).unwrap();
                for i in 0..g.len() {
                    assert!(!g.adjacent(i, i));
                    for j in g.neighbors(i).iter() {
                        assert!(g.adjacent(j, i));
                    }
                }
            }
        }
    }

    #[test]
    fn pruning_and_budget() {
        let opts = GraphOptions {
            prune_all_jokers: true,
            ..GraphOptions::default()
        };
        assert_eq!(build_graph_with(2, 3, &opts).unwrap().len(), 26);
        let tiny = GraphOptions {
            max_adjacency_bytes: 100,
            ..GraphOptions::default()
        };
        assert!(matches!(build_graph_with(2, 4, &tiny), Err(Error::Resource(_))));
        assert!(matches!(build_graph(1, 20), Err(Error::Resource(_))));
        assert!(build_graph(0, 3).is_err());
    }
}
