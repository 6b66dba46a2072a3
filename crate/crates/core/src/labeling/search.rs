//! Search for a cordial labeling of an arbitrary graph.
//!
//! Small graphs are enumerated completely; larger ones get a seeded local
//! search that may give up.

use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{induce_edge_labels, Labeling};
use crate::graph::Graph;

/// Graphs with at most this many vertices are searched exhaustively.
pub const EXHAUSTIVE_VERTEX_LIMIT: usize = 24;

const PROGRESS_EVERY: u64 = 1 << 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    /// Flip moves allowed to the local search. Exhaustive enumeration
    /// ignores it.
    pub max_nodes: u64,
    pub seed: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_nodes: 1_000_000,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub exhaustive: bool,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Labeling),
    /// Complete enumeration found no cordial labeling.
    Absent,
    /// The local search ran out of budget.
    Unknown,
}

impl SearchOutcome {
    pub fn labeling(&self) -> Option<&Labeling> {
        match self {
            SearchOutcome::Found(l) => Some(l),
            _ => None,
        }
    }
}

pub fn search_cordial(g: &Graph, budget: &SearchBudget) -> (SearchOutcome, SearchStats) {
    search_cordial_with_progress(g, budget, &mut |_| {})
}

/// Searches for a cordial labeling, reporting progress periodically.
///
/// Up to [`EXHAUSTIVE_VERTEX_LIMIT`] vertices every labeling with vertex 0
/// labelled 0 is visited in Gray-code order; complementing a labeling keeps
/// it cordial, so this covers the whole space. Above the limit a
/// best-improvement flip search runs from a seeded balanced start.
pub fn search_cordial_with_progress(
    g: &Graph,
    budget: &SearchBudget,
    progress: &mut dyn FnMut(&SearchStats),
) -> (SearchOutcome, SearchStats) {
    let start = Instant::now();
    let mut state = FlipState::new(g);
    let (outcome, nodes, exhaustive) = if g.vertex_count() <= EXHAUSTIVE_VERTEX_LIMIT {
        let (found, nodes) = enumerate(&mut state, start, progress);
        let outcome = if found {
            SearchOutcome::Found(state.labeling(g))
        } else {
            SearchOutcome::Absent
        };
        (outcome, nodes, true)
    } else {
        let (found, nodes) = local_search(&mut state, budget, start, progress);
        let outcome = if found {
            SearchOutcome::Found(state.labeling(g))
        } else {
            SearchOutcome::Unknown
        };
        (outcome, nodes, false)
    };
    let stats = SearchStats {
        nodes,
        exhaustive,
        elapsed: start.elapsed(),
    };
    (outcome, stats)
}

/// Labels with incrementally maintained counts.
struct FlipState {
    adj: Vec<Vec<usize>>,
    labels: Vec<u8>,
    /// Neighbors whose label differs from this vertex's.
    differing: Vec<usize>,
    ones: usize,
    cut_edges: usize,
    edge_count: usize,
}

impl FlipState {
    fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        FlipState {
            adj: (0..n).map(|v| g.neighbors(v).to_vec()).collect(),
            labels: vec![0; n],
            differing: vec![0; n],
            ones: 0,
            cut_edges: 0,
            edge_count: g.edge_count(),
        }
    }

    fn set_all(&mut self, labels: Vec<u8>) {
        self.labels = labels;
        self.ones = self.labels.iter().filter(|&&x| x == 1).count();
        self.cut_edges = 0;
        for v in 0..self.labels.len() {
            self.differing[v] = self.adj[v]
                .iter()
                .filter(|&&w| self.labels[w] != self.labels[v])
                .count();
            self.cut_edges += self.differing[v];
        }
        self.cut_edges /= 2;
    }

    fn n(&self) -> usize {
        self.labels.len()
    }

    fn cost_with(&self, ones: usize, cut: usize) -> usize {
        self.n().abs_diff(2 * ones) + self.edge_count.abs_diff(2 * cut)
    }

    fn cost(&self) -> usize {
        self.cost_with(self.ones, self.cut_edges)
    }

    fn is_cordial(&self) -> bool {
        self.n().abs_diff(2 * self.ones) <= 1 && self.edge_count.abs_diff(2 * self.cut_edges) <= 1
    }

    fn cost_after_flip(&self, v: usize) -> usize {
        let ones = if self.labels[v] == 1 {
            self.ones - 1
        } else {
            self.ones + 1
        };
        let deg = self.adj[v].len();
        let cut = self.cut_edges + deg - 2 * self.differing[v];
        self.cost_with(ones, cut)
    }

    fn flip(&mut self, v: usize) {
        let deg = self.adj[v].len();
        self.cut_edges = self.cut_edges + deg - 2 * self.differing[v];
        self.differing[v] = deg - self.differing[v];
        if self.labels[v] == 1 {
            self.ones -= 1;
        } else {
            self.ones += 1;
        }
        self.labels[v] ^= 1;
        for i in 0..deg {
            let w = self.adj[v][i];
            if self.labels[w] == self.labels[v] {
                self.differing[w] -= 1;
            } else {
                self.differing[w] += 1;
            }
        }
    }

    fn labeling(&self, g: &Graph) -> Labeling {
        induce_edge_labels(g, self.labels.clone()).expect("labels are 0/1 and sized to the graph")
    }
}

fn report(nodes: u64, exhaustive: bool, start: Instant, progress: &mut dyn FnMut(&SearchStats)) {
    if nodes.is_multiple_of(PROGRESS_EVERY) {
        progress(&SearchStats {
            nodes,
            exhaustive,
            elapsed: start.elapsed(),
        });
    }
}

/// Gray-code walk over vertices `1..n`, vertex 0 fixed to 0.
fn enumerate(
    state: &mut FlipState,
    start: Instant,
    progress: &mut dyn FnMut(&SearchStats),
) -> (bool, u64) {
    let n = state.n();
    state.set_all(vec![0; n]);
    let mut nodes = 1u64;
    if state.is_cordial() {
        return (true, nodes);
    }
    if n <= 1 {
        return (false, nodes);
    }
    let free = n - 1;
    for step in 1u64..(1u64 << free) {
        // The bit that changes between Gray codes step-1 and step.
        let v = 1 + step.trailing_zeros() as usize;
        state.flip(v);
        nodes += 1;
        report(nodes, true, start, progress);
        if state.is_cordial() {
            return (true, nodes);
        }
    }
    (false, nodes)
}

/// Best-improvement flips from a random balanced labeling. When no flip
/// improves the cost, a random vertex is flipped. Ties go to the lowest ID.
fn local_search(
    state: &mut FlipState,
    budget: &SearchBudget,
    start: Instant,
    progress: &mut dyn FnMut(&SearchStats),
) -> (bool, u64) {
    let n = state.n();
    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
    let mut labels: Vec<u8> = (0..n).map(|v| (v < n / 2) as u8).collect();
    labels.shuffle(&mut rng);
    state.set_all(labels);

    let mut nodes = 0u64;
    while !state.is_cordial() {
        if nodes >= budget.max_nodes {
            return (false, nodes);
        }
        nodes += 1;
        report(nodes, false, start, progress);
        let current = state.cost();
        let (best_v, best_cost) = (0..n)
            .map(|v| (v, state.cost_after_flip(v)))
            .min_by_key(|&(v, c)| (c, v))
            .expect("graph has vertices");
        if best_cost < current {
            state.flip(best_v);
        } else {
            state.flip(rng.gen_range(0..n));
        }
    }
    (true, nodes)
}
