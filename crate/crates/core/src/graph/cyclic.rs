use super::{Edge, Graph};
use crate::error::{Error, Result};

/// Largest threshold accepted by [`cyclic_edge_connectivity_ge`].
pub const MAX_CYCLIC_CUT_K: usize = 4;

/// Limits the number of edge subsets the cut enumeration may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CutBudget {
    pub max_subsets: u64,
}

impl Default for CutBudget {
    fn default() -> Self {
        CutBudget {
            max_subsets: 5_000_000,
        }
    }
}

/// True iff no set of fewer than `k` edges separates `g` into two parts that
/// each contain a cycle.
///
/// Every edge subset of size `< k` is removed in turn and the remaining
/// components are inspected; a cyclic cut exists iff some removal leaves at
/// least two components with a cycle.
pub fn cyclic_edge_connectivity_ge(g: &Graph, k: usize, budget: &CutBudget) -> Result<bool> {
    find_cyclic_cut(g, k, budget).map(|cut| cut.is_none())
}

/// Smallest-first search for a cyclic edge cut of size `< k`.
pub fn find_cyclic_cut(g: &Graph, k: usize, budget: &CutBudget) -> Result<Option<Vec<Edge>>> {
    if k > MAX_CYCLIC_CUT_K {
        return Err(Error::UnsupportedBudget(format!(
            "cyclic edge connectivity threshold {k} exceeds {MAX_CYCLIC_CUT_K}"
        )));
    }
    let edges = g.edge_list();
    let m = edges.len();
    let total: u128 = (1..k).map(|s| binomial(m as u128, s as u128)).sum();
    if total > budget.max_subsets as u128 {
        return Err(Error::BudgetExceeded(format!(
            "{total} candidate cuts on {m} edges exceed the limit of {}",
            budget.max_subsets
        )));
    }

    let n = g.vertex_count();
    let mut dsu = Dsu::new(n);
    let mut removed = vec![false; m];
    for size in (1..k).take_while(|&s| s <= m) {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            for &i in &idx {
                removed[i] = true;
            }
            dsu.reset();
            for (e, edge) in edges.iter().enumerate() {
                if !removed[e] {
                    dsu.union(edge.lo(), edge.hi());
                }
            }
            for &i in &idx {
                removed[i] = false;
            }
            if dsu.cyclic_components() >= 2 {
                return Ok(Some(idx.iter().map(|&i| edges[i]).collect()));
            }
            if !next_combination(&mut idx, m) {
                break;
            }
        }
    }
    Ok(None)
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Advances `idx` to the next `idx.len()`-subset of `0..n` in lexicographic
/// order. Returns false after the last one.
fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let r = idx.len();
    let mut i = r;
    while i > 0 {
        i -= 1;
        if idx[i] < n - r + i {
            idx[i] += 1;
            for j in i + 1..r {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

struct Dsu {
    parent: Vec<usize>,
    cyclic: Vec<bool>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
            cyclic: vec![false; n],
        }
    }

    fn reset(&mut self) {
        for (i, p) in self.parent.iter_mut().enumerate() {
            *p = i;
        }
        self.cyclic.iter_mut().for_each(|c| *c = false);
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            self.cyclic[ra] = true;
        } else {
            self.parent[rb] = ra;
            self.cyclic[ra] |= self.cyclic[rb];
        }
    }

    fn cyclic_components(&mut self) -> usize {
        (0..self.parent.len())
            .filter(|&v| self.parent[v] == v && self.cyclic[v])
            .count()
    }
}
