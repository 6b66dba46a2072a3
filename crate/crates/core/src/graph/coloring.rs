use std::collections::VecDeque;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use super::{Edge, Graph};
use crate::error::{Error, Result};

const UNCOLORED: u8 = u8::MAX;
const PROGRESS_EVERY: u64 = 1 << 16;

/// A proper 3-edge-coloring; `colors[e]` is the color of the `e`-th edge in
/// canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeColoring {
    pub colors: Vec<u8>,
}

impl EdgeColoring {
    pub fn color_of(&self, g: &Graph, e: Edge) -> Option<u8> {
        g.edges().position(|x| x == e).map(|i| self.colors[i])
    }

    /// Independent scan: every color is in `0..3` and no two edges sharing
    /// an endpoint have the same color.
    pub fn is_proper(&self, g: &Graph) -> bool {
        if self.colors.len() != g.edge_count() || self.colors.iter().any(|&c| c > 2) {
            return false;
        }
        let edges = g.edge_list();
        for (a, ea) in edges.iter().enumerate() {
            for (b, eb) in edges.iter().enumerate().skip(a + 1) {
                let adjacent = ea.lo() == eb.lo()
                    || ea.lo() == eb.hi()
                    || ea.hi() == eb.lo()
                    || ea.hi() == eb.hi();
                if adjacent && self.colors[a] == self.colors[b] {
                    return false;
                }
            }
        }
        true
    }
}

/// Node count and wall time of an exact search.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColoringOutcome {
    Colorable(EdgeColoring),
    /// The search tree was exhausted without finding a coloring.
    Uncolorable,
}

impl ColoringOutcome {
    pub fn coloring(&self) -> Option<&EdgeColoring> {
        match self {
            ColoringOutcome::Colorable(c) => Some(c),
            ColoringOutcome::Uncolorable => None,
        }
    }

    pub fn is_colorable(&self) -> bool {
        matches!(self, ColoringOutcome::Colorable(_))
    }
}

/// Complete backtracking search for a proper 3-edge-coloring of a cubic
/// graph.
///
/// Edges are branched on in breadth-first order from vertex 0. After each
/// assignment, any vertex with two colored edges forces the third edge to
/// the remaining color. Only the smallest unused color is tried when
/// opening a new color class.
pub fn find_3_edge_coloring(g: &Graph) -> Result<(ColoringOutcome, SearchStats)> {
    find_3_edge_coloring_with_progress(g, None, &mut |_| {})
}

/// As [`find_3_edge_coloring`], giving up with [`Error::BudgetExceeded`]
/// once `node_limit` branches have been tried, and calling `progress`
/// periodically with the running statistics.
pub fn find_3_edge_coloring_with_progress(
    g: &Graph,
    node_limit: Option<u64>,
    progress: &mut dyn FnMut(&SearchStats),
) -> Result<(ColoringOutcome, SearchStats)> {
    if !g.is_cubic() {
        return Err(Error::NotCubic);
    }
    let start = Instant::now();
    let mut search = Search::new(g, progress, start);
    search.node_limit = node_limit.unwrap_or(u64::MAX);
    let found = search.solve(0);
    let stats = SearchStats {
        nodes: search.nodes,
        elapsed: start.elapsed(),
    };
    if search.aborted {
        return Err(Error::BudgetExceeded(format!(
            "3-edge-coloring search stopped after {} nodes",
            stats.nodes
        )));
    }
    let outcome = if found {
        let coloring = EdgeColoring {
            colors: search.color,
        };
        debug_assert!(coloring.is_proper(g));
        ColoringOutcome::Colorable(coloring)
    } else {
        ColoringOutcome::Uncolorable
    };
    Ok((outcome, stats))
}

struct Search<'a> {
    ends: Vec<(usize, usize)>,
    incident: Vec<[usize; 3]>,
    order: Vec<usize>,
    color: Vec<u8>,
    class_size: [usize; 3],
    trail: Vec<usize>,
    queue: VecDeque<usize>,
    nodes: u64,
    node_limit: u64,
    aborted: bool,
    progress: &'a mut dyn FnMut(&SearchStats),
    start: Instant,
}

impl<'a> Search<'a> {
    fn new(g: &Graph, progress: &'a mut dyn FnMut(&SearchStats), start: Instant) -> Self {
        let edges = g.edge_list();
        let n = g.vertex_count();
        let mut incident = vec![[usize::MAX; 3]; n];
        let mut fill = vec![0usize; n];
        for (e, edge) in edges.iter().enumerate() {
            for v in [edge.lo(), edge.hi()] {
                incident[v][fill[v]] = e;
                fill[v] += 1;
            }
        }
        let order = bfs_edge_order(g, &edges, &incident);
        Search {
            ends: edges.iter().map(|e| e.endpoints()).collect(),
            incident,
            order,
            color: vec![UNCOLORED; edges.len()],
            class_size: [0; 3],
            trail: Vec::with_capacity(edges.len()),
            queue: VecDeque::new(),
            nodes: 0,
            node_limit: u64::MAX,
            aborted: false,
            progress,
            start,
        }
    }

    fn solve(&mut self, mut pos: usize) -> bool {
        while pos < self.order.len() && self.color[self.order[pos]] != UNCOLORED {
            pos += 1;
        }
        let Some(&e) = self.order.get(pos) else {
            return true;
        };
        let mut opened_new_class = false;
        for c in 0..3u8 {
            if self.class_size[c as usize] == 0 {
                if opened_new_class {
                    continue;
                }
                opened_new_class = true;
            }
            if self.nodes >= self.node_limit {
                self.aborted = true;
                return false;
            }
            self.nodes += 1;
            if self.nodes.is_multiple_of(PROGRESS_EVERY) {
                let stats = SearchStats {
                    nodes: self.nodes,
                    elapsed: self.start.elapsed(),
                };
                (self.progress)(&stats);
            }
            let mark = self.trail.len();
            if self.assign(e, c) && self.solve(pos + 1) {
                return true;
            }
            self.undo(mark);
        }
        false
    }

    fn set(&mut self, e: usize, c: u8) {
        self.color[e] = c;
        self.class_size[c as usize] += 1;
        self.trail.push(e);
        self.queue.push_back(e);
    }

    /// Colors `e` and propagates forced colors. False on conflict; the
    /// caller undoes to its mark either way.
    fn assign(&mut self, e: usize, c: u8) -> bool {
        self.queue.clear();
        self.set(e, c);
        while let Some(e) = self.queue.pop_front() {
            let (a, b) = self.ends[e];
            for v in [a, b] {
                let inc = self.incident[v];
                let mut used = 0u8;
                let mut free = None;
                for &f in &inc {
                    match self.color[f] {
                        UNCOLORED => free = Some(f),
                        col => {
                            let bit = 1 << col;
                            if used & bit != 0 {
                                return false;
                            }
                            used |= bit;
                        }
                    }
                }
                if let Some(f) = free {
                    if used.count_ones() == 2 {
                        let forced = (!used & 0b111).trailing_zeros() as u8;
                        self.set(f, forced);
                    }
                }
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let e = self.trail.pop().unwrap();
            self.class_size[self.color[e] as usize] -= 1;
            self.color[e] = UNCOLORED;
        }
    }
}

/// Edges in the order they are first seen by a breadth-first sweep that
/// starts at vertex 0 and restarts at the lowest unvisited vertex.
fn bfs_edge_order(g: &Graph, edges: &[Edge], incident: &[[usize; 3]]) -> Vec<usize> {
    let n = g.vertex_count();
    let mut seen_vertex = vec![false; n];
    let mut seen_edge = vec![false; edges.len()];
    let mut order = Vec::with_capacity(edges.len());
    let mut queue = VecDeque::new();
    for root in 0..n {
        if seen_vertex[root] {
            continue;
        }
        seen_vertex[root] = true;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            for &e in &incident[u] {
                if !seen_edge[e] {
                    seen_edge[e] = true;
                    order.push(e);
                }
                let w = edges[e].other(u);
                if !seen_vertex[w] {
                    seen_vertex[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}
