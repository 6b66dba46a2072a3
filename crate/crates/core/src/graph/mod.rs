//! Simple undirected graphs with dense vertex IDs and optional coordinate
//! metadata, plus the structural predicates used to certify snarks.

mod bridges;
mod coloring;
mod cyclic;
mod girth;
mod isomorphism;

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

pub use bridges::find_bridges;
pub use coloring::{
    find_3_edge_coloring, find_3_edge_coloring_with_progress, ColoringOutcome, EdgeColoring,
    SearchStats,
};
pub use cyclic::{cyclic_edge_connectivity_ge, find_cyclic_cut, CutBudget, MAX_CYCLIC_CUT_K};
pub use girth::{girth, Girth};
pub use isomorphism::{are_isomorphic, MAX_ISOMORPHISM_VERTICES};

use crate::error::GraphError;

/// An undirected edge stored with its endpoints in ascending order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(usize, usize);

impl Edge {
    /// Normalizes the endpoint order. Does not reject self-loops; `Graph`
    /// does that on insertion.
    pub fn new(u: usize, v: usize) -> Self {
        if u <= v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }

    pub fn lo(self) -> usize {
        self.0
    }

    pub fn hi(self) -> usize {
        self.1
    }

    pub fn endpoints(self) -> (usize, usize) {
        (self.0, self.1)
    }

    /// The endpoint that is not `v`. `v` must be an endpoint.
    pub fn other(self, v: usize) -> usize {
        if v == self.0 {
            self.1
        } else {
            self.0
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.0, self.1)
    }
}

/// Structured address of a vertex inside one of the constructed families.
///
/// `i` is the block, `j` the slot within the block (1..=8). Composite
/// families add the copy index `k`, and one-point unions also the arm `l`
/// and the position `m` along the arm. The apex of a star-shaped family
/// carries only `apex = true`.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize,
)]
pub struct VertexCoord {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub i: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub j: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub apex: bool,
}

impl VertexCoord {
    pub fn block(i: usize, j: usize) -> Self {
        VertexCoord {
            i: Some(i),
            j: Some(j),
            ..Default::default()
        }
    }

    pub fn apex() -> Self {
        VertexCoord {
            apex: true,
            ..Default::default()
        }
    }

    pub fn with_copy(mut self, k: usize) -> Self {
        self.k = Some(k);
        self
    }

    pub fn with_arm(mut self, l: usize, m: usize) -> Self {
        self.l = Some(l);
        self.m = Some(m);
        self
    }
}

/// A simple undirected graph on vertices `0..vertex_count`.
///
/// Self-loops and parallel edges are rejected on insertion, so every value
/// of this type is a simple graph. Equality compares vertex count, edge
/// set and coordinates, not adjacency order.
#[derive(Debug, Clone)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edges: BTreeSet<Edge>,
    coords: Option<BTreeMap<usize, VertexCoord>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj.len() == other.adj.len()
            && self.edges == other.edges
            && self.coords == other.coords
    }
}

impl Eq for Graph {}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edges: BTreeSet::new(),
            coords: None,
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical (lexicographic) order.
    pub fn edges(&self) -> impl ExactSizeIterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_list(&self) -> Vec<Edge> {
        self.edges.iter().copied().collect()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&Edge::new(u, v))
    }

    pub fn coords(&self) -> Option<&BTreeMap<usize, VertexCoord>> {
        self.coords.as_ref()
    }

    pub fn coord(&self, v: usize) -> Option<&VertexCoord> {
        self.coords.as_ref().and_then(|c| c.get(&v))
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.vertex_count() {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                vertex_count: self.vertex_count(),
            })
        } else {
            Ok(())
        }
    }

    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if !self.edges.insert(Edge::new(u, v)) {
            return Err(GraphError::DuplicateEdge(u, v));
        }
        self.adj[u].push(v);
        self.adj[v].push(u);
        Ok(())
    }

    fn remove_edge(&mut self, e: Edge) -> Result<(), GraphError> {
        if !self.edges.remove(&e) {
            return Err(GraphError::NotAnEdge(e.lo(), e.hi()));
        }
        let (u, v) = e.endpoints();
        self.adj[u].retain(|&w| w != v);
        self.adj[v].retain(|&w| w != u);
        Ok(())
    }

    /// Attaches coordinate metadata. The map must be injective and its keys
    /// must be vertex IDs of this graph.
    pub fn set_coords(&mut self, coords: BTreeMap<usize, VertexCoord>) -> Result<(), GraphError> {
        let mut seen = BTreeSet::new();
        for (&v, c) in &coords {
            self.check_vertex(v)?;
            if !seen.insert(*c) {
                return Err(GraphError::DuplicateCoord(v));
            }
        }
        self.coords = Some(coords);
        Ok(())
    }

    pub fn clear_coords(&mut self) {
        self.coords = None;
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn is_cubic(&self) -> bool {
        self.adj.iter().all(|a| a.len() == 3)
    }

    /// True iff a single traversal from vertex 0 reaches every vertex.
    /// Graphs with at most one vertex are connected.
    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n <= 1 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached == n
    }

    /// Number of connected components.
    pub fn component_count(&self) -> usize {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            stack.push(s);
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    /// Adds a twin `v'` of `v` with `N(v') = N(v)`. Returns the new graph;
    /// the twin gets ID `vertex_count()`.
    pub fn duplicate_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        let mut g = self.clone();
        let twin = g.add_vertex();
        for &w in &self.adj[v] {
            g.add_edge(twin, w)?;
        }
        g.coords = None;
        Ok(g)
    }

    /// Removes every edge in `edges`, keeping the vertex set.
    pub fn delete_edges<I>(&self, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = self.clone();
        for (u, v) in edges {
            g.remove_edge(Edge::new(u, v))?;
        }
        Ok(g)
    }

    /// Replaces edge `(u, v)` by a path `u - x - v` through a new vertex `x`
    /// with ID `vertex_count()`.
    pub fn subdivide_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        g.remove_edge(Edge::new(u, v))?;
        let x = g.add_vertex();
        g.add_edge(u, x)?;
        g.add_edge(x, v)?;
        g.coords = None;
        Ok(g)
    }

    /// Induced subgraph on `vertices`, relabelled `0..vertices.len()` in the
    /// order given. Coordinates are carried over.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph, GraphError> {
        let mut index = BTreeMap::new();
        for (new, &old) in vertices.iter().enumerate() {
            self.check_vertex(old)?;
            if index.insert(old, new).is_some() {
                return Err(GraphError::DuplicateVertex(old));
            }
        }
        let mut g = Graph::new(vertices.len());
        for e in &self.edges {
            if let (Some(&a), Some(&b)) = (index.get(&e.lo()), index.get(&e.hi())) {
                g.add_edge(a, b)?;
            }
        }
        if let Some(coords) = &self.coords {
            let sub: BTreeMap<_, _> = vertices
                .iter()
                .enumerate()
                .filter_map(|(new, old)| coords.get(old).map(|c| (new, *c)))
                .collect();
            g.coords = Some(sub);
        }
        Ok(g)
    }

    /// Disjoint union; `other`'s vertices are shifted by `self.vertex_count()`.
    /// Coordinates are dropped.
    pub(crate) fn append_disjoint(&mut self, other: &Graph) -> usize {
        let offset = self.vertex_count();
        for _ in 0..other.vertex_count() {
            self.add_vertex();
        }
        for e in &other.edges {
            self.add_edge(e.lo() + offset, e.hi() + offset)
                .expect("disjoint copy cannot collide");
        }
        offset
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).expect("complete graph edges are distinct");
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Graph {
        let mut g = Graph::new(n);
        if n >= 3 {
            for u in 0..n {
                g.add_edge(u, (u + 1) % n)
                    .expect("cycle edges are distinct");
            }
        }
        g
    }

    pub fn path(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 1..n {
            g.add_edge(u - 1, u).expect("path edges are distinct");
        }
        g
    }
}

/// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`, and
/// spokes `i - (i + 5)`.
pub fn petersen() -> Graph {
    let mut g = Graph::new(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5).unwrap();
        g.add_edge(5 + i, 5 + (i + 2) % 5).unwrap();
        g.add_edge(i, i + 5).unwrap();
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn new_graph_is_edgeless() {
        let g = Graph::new(0);
        assert_eq!((g.vertex_count(), g.edge_count()), (0, 0));
        let g = Graph::new(10);
        assert_eq!((g.vertex_count(), g.edge_count()), (10, 0));
        assert_eq!(Graph::new(5).degree_sequence(), vec![0; 5]);
    }

    #[test]
    fn add_edge_errors_are_distinct() {
        let mut g = Graph::new(2);
        g.add_edge(0, 1).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.add_edge(0, 0), Err(GraphError::SelfLoop(0)));
        assert_eq!(g.add_edge(1, 0), Err(GraphError::DuplicateEdge(1, 0)));
        assert_eq!(
            g.add_edge(0, 2),
            Err(GraphError::VertexOutOfRange {
                vertex: 2,
                vertex_count: 2
            })
        );
    }

    #[test]
    fn degree_sequences() {
        assert_eq!(Graph::path(3).degree_sequence(), vec![1, 2, 1]);
        assert!(petersen().degree_sequence().iter().all(|&d| d == 3));
        assert!(petersen().is_cubic());
        assert!(!Graph::path(3).is_cubic());
    }

    #[test]
    fn connectivity() {
        assert!(Graph::new(1).is_connected());
        assert!(Graph::new(0).is_connected());
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!g.is_connected());
        assert_eq!(g.component_count(), 2);
        assert!(petersen().is_connected());
    }

    #[test]
    fn petersen_counts() {
        let p = petersen();
        assert_eq!(p.vertex_count(), 10);
        assert_eq!(p.edge_count(), 15);
    }

    #[test]
    fn duplicate_vertex_counts() {
        let g = Graph::new(3).duplicate_vertex(1).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (4, 0));

        let k4 = Graph::complete(4);
        let g = k4.duplicate_vertex(2).unwrap();
        assert_eq!(g.edge_count(), 9);
        let mut twin: Vec<_> = g.neighbors(4).to_vec();
        twin.sort();
        let mut orig: Vec<_> = k4.neighbors(2).to_vec();
        orig.sort();
        assert_eq!(twin, orig);

        for v in 0..10 {
            let g = petersen().duplicate_vertex(v).unwrap();
            assert_eq!((g.vertex_count(), g.edge_count()), (11, 18));
        }
        assert!(matches!(
            k4.duplicate_vertex(4),
            Err(GraphError::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn delete_edges_cases() {
        let p = petersen();
        assert_eq!(p.delete_edges([]).unwrap(), p);
        let all: Vec<_> = p.edges().map(Edge::endpoints).collect();
        let bare = p.delete_edges(all).unwrap();
        assert_eq!((bare.vertex_count(), bare.edge_count()), (10, 0));

        let g = p.delete_edges([(0, 5)]).unwrap();
        assert_eq!(g.edge_count(), 14);
        assert_eq!(g.degree_sequence().iter().filter(|&&d| d == 2).count(), 2);
        assert_eq!(p.delete_edges([(0, 2)]), Err(GraphError::NotAnEdge(0, 2)));
    }

    #[test]
    fn subdivision() {
        let tri = Graph::cycle(3);
        let sq = tri.subdivide_edge(0, 1).unwrap();
        assert_eq!((sq.vertex_count(), sq.edge_count()), (4, 4));
        assert!(sq.degree_sequence().iter().all(|&d| d == 2));
        assert!(sq.is_connected());
        assert_eq!(girth(&tri), Girth::Finite(3));
        assert_eq!(girth(&sq), Girth::Finite(4));

        let mut g = Graph::complete(4);
        for (u, v) in Graph::complete(4).edges().map(Edge::endpoints) {
            g = g.subdivide_edge(u, v).unwrap();
        }
        assert_eq!((g.vertex_count(), g.edge_count()), (10, 12));
        assert_eq!(tri.subdivide_edge(0, 0), Err(GraphError::NotAnEdge(0, 0)));
    }

    #[test]
    fn coords_must_be_injective() {
        let mut g = Graph::new(2);
        let c = VertexCoord::block(1, 1);
        let dup = BTreeMap::from([(0, c), (1, c)]);
        assert_eq!(g.set_coords(dup), Err(GraphError::DuplicateCoord(1)));
        let ok = BTreeMap::from([(0, c), (1, VertexCoord::apex())]);
        g.set_coords(ok).unwrap();
        assert_eq!(g.coord(1), Some(&VertexCoord::apex()));
    }

    #[test]
    fn induced_subgraph_keeps_inner_edges() {
        let p = petersen();
        let outer = p.induced_subgraph(&[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(outer, Graph::cycle(5));
    }
}
