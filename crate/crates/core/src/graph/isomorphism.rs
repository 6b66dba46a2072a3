use super::Graph;
use crate::error::{Error, Result};

/// Size cap for [`are_isomorphic`].
pub const MAX_ISOMORPHISM_VERTICES: usize = 16;

/// Whether an edge-preserving bijection between `a` and `b` exists.
///
/// Backtracking over candidate images with matching degree, checking
/// adjacency to every already-mapped vertex. Inputs are capped at
/// [`MAX_ISOMORPHISM_VERTICES`] vertices.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    for g in [a, b] {
        if g.vertex_count() > MAX_ISOMORPHISM_VERTICES {
            return Err(Error::UnsupportedBudget(format!(
                "isomorphism test limited to {MAX_ISOMORPHISM_VERTICES} vertices, got {}",
                g.vertex_count()
            )));
        }
    }
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    let mut da = a.degree_sequence();
    let mut db = b.degree_sequence();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return Ok(false);
    }

    let n = a.vertex_count();
    let adj_a = adjacency_masks(a);
    let adj_b = adjacency_masks(b);
    // Map high-degree vertices first; their constraints prune hardest.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(a.degree(v)));

    let mut image = vec![usize::MAX; n];
    let mut used = 0u32;
    Ok(extend(
        0, &order, a, b, &adj_a, &adj_b, &mut image, &mut used,
    ))
}

fn adjacency_masks(g: &Graph) -> Vec<u32> {
    (0..g.vertex_count())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn extend(
    depth: usize,
    order: &[usize],
    a: &Graph,
    b: &Graph,
    adj_a: &[u32],
    adj_b: &[u32],
    image: &mut [usize],
    used: &mut u32,
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for w in 0..b.vertex_count() {
        if *used & (1 << w) != 0 || a.degree(v) != b.degree(w) {
            continue;
        }
        let consistent = order[..depth].iter().all(|&u| {
            let in_a = adj_a[v] & (1 << u) != 0;
            let in_b = adj_b[w] & (1 << image[u]) != 0;
            in_a == in_b
        });
        if !consistent {
            continue;
        }
        image[v] = w;
        *used |= 1 << w;
        if extend(depth + 1, order, a, b, adj_a, adj_b, image, used) {
            return true;
        }
        *used &= !(1 << w);
        image[v] = usize::MAX;
    }
    false
}
