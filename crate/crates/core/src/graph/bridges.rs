use super::{Edge, Graph};

/// Edges whose removal increases the number of connected components.
///
/// Iterative lowpoint DFS, linear in `|V| + |E|`. The result is sorted.
pub fn find_bridges(g: &Graph) -> Vec<Edge> {
    let n = g.vertex_count();
    const UNSEEN: usize = usize::MAX;
    let mut order = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut bridges = Vec::new();
    let mut clock = 0;

    // (vertex, parent, next neighbor index)
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();
    for root in 0..n {
        if order[root] != UNSEEN {
            continue;
        }
        order[root] = clock;
        low[root] = clock;
        clock += 1;
        stack.push((root, UNSEEN, 0));
        // Simple graphs have no parallel edges, so skipping the parent
        // vertex once is the same as skipping the tree edge.
        while let Some(top) = stack.last_mut() {
            let (u, parent, idx) = *top;
            if let Some(&w) = g.neighbors(u).get(idx) {
                top.2 += 1;
                if w == parent {
                    continue;
                }
                if order[w] == UNSEEN {
                    order[w] = clock;
                    low[w] = clock;
                    clock += 1;
                    stack.push((w, u, 0));
                } else {
                    low[u] = low[u].min(order[w]);
                }
            } else {
                stack.pop();
                if parent != UNSEEN {
                    low[parent] = low[parent].min(low[u]);
                    if low[u] > order[parent] {
                        bridges.push(Edge::new(parent, u));
                    }
                }
            }
        }
    }
    bridges.sort();
    bridges
}
