//! The Goldberg snark `G_n`: `n` isomorphic eight-vertex blocks linked in a
//! cycle.
//!
//! Vertex `v_{i,j}` (block `i` in `1..=n`, slot `j` in `1..=8`) has ID
//! `8(i - 1) + (j - 1)`, so each block is a contiguous range of IDs.

use std::collections::BTreeMap;

use crate::certificate::{certify_snark, CertifyOptions, SnarkCertificate};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexCoord};

pub const SLOTS: usize = 8;

/// Edges inside each block, as slot pairs.
pub const INTRA_BLOCK_EDGES: [(usize, usize); 9] = [
    // (j, j + 2) for j = 1, 2, 3, 5
    (1, 3),
    (2, 4),
    (3, 5),
    (5, 7),
    // (j, j + 5) for j = 1, 3
    (1, 6),
    (3, 8),
    // (j, j + 1) for j = 1, 4, 6
    (1, 2),
    (4, 5),
    (6, 7),
];

/// Edges from block `i` (first slot) to block `i + 1` (second slot), with
/// block `n + 1` read as block 1.
pub const INTER_BLOCK_EDGES: [(usize, usize); 3] = [(8, 8), (6, 7), (4, 2)];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldbergGraph {
    n: usize,
    graph: Graph,
}

/// Checks that `n` is an odd block count of at least 3.
pub fn validate_block_count(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "n must be at least 3, got {n}"
        )));
    }
    if n.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("n must be odd, got {n}")));
    }
    Ok(())
}

/// Builds `G_n` for odd `n >= 3`.
///
/// `n = 3` is built like any other value; it is not a snark (its slot-8
/// vertices form a triangle), which [`GoldbergGraph::snark_certificate`]
/// reports.
pub fn goldberg(n: usize) -> Result<GoldbergGraph> {
    validate_block_count(n)?;
    let mut graph = Graph::new(SLOTS * n);
    for i in 1..=n {
        for &(a, b) in &INTRA_BLOCK_EDGES {
            graph.add_edge(vertex_id(i, a), vertex_id(i, b))?;
        }
        let next = i % n + 1;
        for &(a, b) in &INTER_BLOCK_EDGES {
            graph.add_edge(vertex_id(i, a), vertex_id(next, b))?;
        }
    }
    let coords: BTreeMap<_, _> = (0..SLOTS * n)
        .map(|v| {
            let (i, j) = block_slot(v);
            (v, VertexCoord::block(i, j))
        })
        .collect();
    graph.set_coords(coords)?;
    Ok(GoldbergGraph { n, graph })
}

/// ID of `v_{i,j}`. Both indices are 1-based.
pub fn vertex_id(i: usize, j: usize) -> usize {
    debug_assert!(i >= 1 && (1..=SLOTS).contains(&j));
    SLOTS * (i - 1) + (j - 1)
}

/// Inverse of [`vertex_id`].
pub fn block_slot(v: usize) -> (usize, usize) {
    (v / SLOTS + 1, v % SLOTS + 1)
}

impl GoldbergGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    /// Whether `n` lies outside the range covered by the labeling results
    /// (`n = 3`).
    pub fn is_flagged(&self) -> bool {
        self.n == 3
    }

    /// ID of `v_{i,j}`, or `None` when out of range.
    pub fn id_of(&self, i: usize, j: usize) -> Option<usize> {
        ((1..=self.n).contains(&i) && (1..=SLOTS).contains(&j)).then(|| vertex_id(i, j))
    }

    pub fn coord_of(&self, v: usize) -> Option<(usize, usize)> {
        (v < self.graph.vertex_count()).then(|| block_slot(v))
    }

    /// Induced subgraph `H_i` on `v_{i,1}, ..., v_{i,8}`, relabelled so slot
    /// `j` is vertex `j - 1`.
    pub fn block_subgraph(&self, i: usize) -> Result<Graph> {
        if !(1..=self.n).contains(&i) {
            return Err(Error::InvalidParameter(format!(
                "block index {i} outside 1..={}",
                self.n
            )));
        }
        let ids: Vec<usize> = (1..=SLOTS).map(|j| vertex_id(i, j)).collect();
        Ok(self.graph.induced_subgraph(&ids)?)
    }

    pub fn snark_certificate(&self, options: &CertifyOptions) -> SnarkCertificate {
        certify_snark(&self.graph, options)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{are_isomorphic, find_bridges, girth, Girth};

    #[test]
    fn rejects_bad_n() {
        assert!(matches!(goldberg(4), Err(Error::InvalidParameter(_))));
        assert!(matches!(goldberg(1), Err(Error::InvalidParameter(_))));
        assert!(matches!(goldberg(0), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn cardinalities() {
        for n in [3, 5, 7, 9, 11] {
            let g = goldberg(n).unwrap();
            assert_eq!(g.graph().vertex_count(), 8 * n);
            assert_eq!(g.graph().edge_count(), 12 * n);
            assert!(g.graph().is_cubic());
            assert!(g.graph().is_connected());
            assert!(find_bridges(g.graph()).is_empty());
        }
    }

    #[test]
    fn girth_by_n() {
        assert_eq!(girth(goldberg(3).unwrap().graph()), Girth::Finite(3));
        for n in [5, 7, 9] {
            assert_eq!(girth(goldberg(n).unwrap().graph()), Girth::Finite(5));
        }
    }

    #[test]
    fn every_slot_has_degree_three_in_the_edge_tables() {
        let mut deg = [0usize; SLOTS + 1];
        for (a, b) in INTRA_BLOCK_EDGES.iter().chain(INTER_BLOCK_EDGES.iter()) {
            deg[*a] += 1;
            deg[*b] += 1;
        }
        assert!(deg[1..].iter().all(|&d| d == 3));
    }

    #[test]
    fn blocks() {
        let g = goldberg(5).unwrap();
        let h1 = g.block_subgraph(1).unwrap();
        assert_eq!((h1.vertex_count(), h1.edge_count()), (8, 9));
        assert!(are_isomorphic(&h1, &g.block_subgraph(3).unwrap()).unwrap());
        let deg = h1.degree_sequence();
        let full: Vec<usize> = (0..8).filter(|&v| deg[v] == 3).map(|v| v + 1).collect();
        assert_eq!(full, vec![1, 3, 5]);
        assert!(g.block_subgraph(0).is_err());
        assert!(g.block_subgraph(6).is_err());
    }

    #[test]
    fn coordinate_round_trip() {
        let g = goldberg(7).unwrap();
        for i in 1..=7 {
            for j in 1..=8 {
                let v = g.id_of(i, j).unwrap();
                assert_eq!(g.coord_of(v), Some((i, j)));
                assert_eq!(g.graph().coord(v), Some(&VertexCoord::block(i, j)));
            }
        }
        assert_eq!(g.id_of(8, 1), None);
        assert_eq!(g.id_of(1, 9), None);
    }

    #[test]
    fn wrap_around_edges() {
        let g = goldberg(5).unwrap();
        let gr = g.graph();
        assert!(gr.has_edge(vertex_id(5, 8), vertex_id(1, 8)));
        assert!(gr.has_edge(vertex_id(5, 6), vertex_id(1, 7)));
        assert!(gr.has_edge(vertex_id(5, 4), vertex_id(1, 2)));
    }
}
