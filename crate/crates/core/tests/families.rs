//! Invariants of the constructed families and their labelings.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use snark_core::compositions::{one_point_union_paths, open_star, path_union, AttachmentPolicy};
use snark_core::goldberg::{block_slot, goldberg, vertex_id};
use snark_core::graph::{are_isomorphic, find_bridges, girth, Girth};
use snark_core::io::graph_to_json;
use snark_core::labeling::{
    complement, cordiality_report, induce_edge_labels, label_goldberg, label_one_point_union,
    label_open_star, label_path_union, search_cordial, Pattern, SearchBudget,
};
use snark_core::{certify_snark, CertifyOptions, Graph, Verdict};

/// Independent count of labels straight from the vertex labels.
fn recount(g: &Graph, labels: &[u8]) -> (usize, usize, usize, usize) {
    let v1 = labels.iter().filter(|&&x| x == 1).count();
    let e1 = g
        .edges()
        .filter(|e| labels[e.lo()] != labels[e.hi()])
        .count();
    (g.vertex_count() - v1, v1, g.edge_count() - e1, e1)
}

#[test]
fn goldberg_structure_for_odd_n() {
    for n in [3, 5, 7, 9, 11] {
        let g = goldberg(n).unwrap();
        let gr = g.graph();
        assert_eq!((gr.vertex_count(), gr.edge_count()), (8 * n, 12 * n));
        assert!(gr.is_cubic() && gr.is_connected());
        assert!(find_bridges(gr).is_empty());
        assert_eq!(2 * gr.edge_count(), 3 * gr.vertex_count());
        for i in 1..=n {
            assert_eq!(g.block_subgraph(i).unwrap().edge_count(), 9);
        }
        let inter = gr
            .edges()
            .filter(|e| block_slot(e.lo()).0 != block_slot(e.hi()).0)
            .count();
        assert_eq!(inter, 3 * n);
    }
    for n in [5, 7, 9] {
        assert_eq!(girth(goldberg(n).unwrap().graph()), Girth::Finite(5));
    }
}

#[test]
fn all_blocks_pairwise_isomorphic() {
    let g = goldberg(9).unwrap();
    let blocks: Vec<_> = (1..=9).map(|i| g.block_subgraph(i).unwrap()).collect();
    for a in &blocks {
        for b in &blocks {
            assert!(are_isomorphic(a, b).unwrap());
        }
    }
}

#[test]
fn coordinate_index_is_a_bijection() {
    for n in [3, 7, 11] {
        let g = goldberg(n).unwrap();
        let mut seen = vec![false; 8 * n];
        for i in 1..=n {
            for j in 1..=8 {
                let v = vertex_id(i, j);
                assert_eq!(g.id_of(i, j), Some(v));
                assert!(!seen[v]);
                seen[v] = true;
                assert_eq!(block_slot(v), (i, j));
            }
        }
        assert!(seen.into_iter().all(|s| s));
    }
}

#[test]
fn construction_is_deterministic() {
    for n in [5, 7] {
        assert_eq!(
            graph_to_json(goldberg(n).unwrap().graph()),
            graph_to_json(goldberg(n).unwrap().graph())
        );
    }
    let d = AttachmentPolicy::default();
    assert_eq!(
        graph_to_json(one_point_union_paths(5, 3, 2, d).unwrap().graph()),
        graph_to_json(one_point_union_paths(5, 3, 2, d).unwrap().graph())
    );
}

#[test]
fn goldberg_three_is_not_certified() {
    let cert = certify_snark(goldberg(3).unwrap().graph(), &CertifyOptions::default());
    assert_eq!(cert.verdict, Verdict::NotSnark);
    assert_eq!(cert.girth, Girth::Finite(3));
}

#[test]
fn both_patterns_balance_exactly() {
    for n in [5, 7, 9, 11] {
        let g = goldberg(n).unwrap();
        for p in [Pattern::P1, Pattern::P2] {
            let l = label_goldberg(n, p).unwrap();
            assert_eq!(
                recount(g.graph(), &l.vertex_labels),
                (4 * n, 4 * n, 6 * n, 6 * n)
            );
            let r = cordiality_report(g.graph(), &l).unwrap();
            assert_eq!((r.v0, r.v1, r.e0, r.e1), (4 * n, 4 * n, 6 * n, 6 * n));
        }
    }
}

#[test]
fn composite_cardinalities() {
    let d = AttachmentPolicy::default();
    for n in [5, 7] {
        for m in 1..=6 {
            let g = path_union(n, m, d).unwrap();
            assert_eq!(g.graph().vertex_count(), m * 8 * n);
            assert_eq!(g.graph().edge_count(), m * 12 * n + m - 1);
        }
        for t in 2..=6 {
            let g = open_star(n, t, d).unwrap();
            assert_eq!(g.graph().vertex_count(), t * 8 * n + 1);
            assert_eq!(g.graph().edge_count(), t * 12 * n + t);
        }
        for (t, p) in [(2, 1), (3, 2), (4, 3)] {
            let g = one_point_union_paths(n, t, p, d).unwrap();
            assert_eq!(g.graph().vertex_count(), t * p * 8 * n + 1);
            assert_eq!(g.graph().edge_count(), t * p * 12 * n + t * p);
        }
    }
}

#[test]
fn every_copy_looks_like_goldberg() {
    let d = AttachmentPolicy::default();
    let g = path_union(5, 3, d).unwrap();
    let base = goldberg(5).unwrap();
    let mut base_deg = base.graph().degree_sequence();
    base_deg.sort();
    for c in 1..=3 {
        let sub = g.copy_subgraph(c).unwrap();
        assert_eq!(sub.edge_count(), 60);
        let mut deg = sub.degree_sequence();
        deg.sort();
        assert_eq!(deg, base_deg);
    }
    let h = g.copy_subgraph(2).unwrap();
    let blk: Vec<usize> = (0..8).collect();
    assert!(are_isomorphic(
        &h.induced_subgraph(&blk).unwrap(),
        &base.block_subgraph(1).unwrap()
    )
    .unwrap());
}

#[test]
fn path_union_edge_balance_alternates() {
    let d = AttachmentPolicy::default();
    for n in [5, 7] {
        for m in 2..=6 {
            let (g, _, l) = label_path_union(n, m, d).unwrap();
            let r = cordiality_report(g.graph(), &l).unwrap();
            assert_eq!(r.vertex_diff, 0);
            assert_eq!(r.edge_diff, (m - 1) % 2, "n={n} m={m}");
            assert!(r.is_cordial);
            // Joining edges alternate 0, 1, 0, 1, ... along the path.
            for k in 1..m {
                let a = g.attachment_vertex(k).unwrap();
                let b = g.attachment_vertex(k + 1).unwrap();
                let label = l.vertex_labels[a] ^ l.vertex_labels[b];
                assert_eq!(label as usize, (k + 1) % 2);
            }
        }
    }
}

#[test]
fn open_star_balance() {
    let d = AttachmentPolicy::default();
    for n in [5, 7] {
        for t in 2..=6 {
            let (g, _, l) = label_open_star(n, t, d).unwrap();
            let r = cordiality_report(g.graph(), &l).unwrap();
            assert_eq!(r.vertex_diff, 1);
            assert_eq!(r.v0, r.v1 + 1);
            assert_eq!(r.edge_diff, t % 2, "n={n} t={t}");
            assert_eq!(l.vertex_labels[0], 0);
        }
    }
}

#[test]
fn attaching_at_slot_eight_breaks_long_path_unions() {
    let at8 = AttachmentPolicy { block: 1, slot: 8 };
    let (g, _, l) = label_path_union(5, 3, at8).unwrap();
    let r = cordiality_report(g.graph(), &l).unwrap();
    assert_eq!(r.edge_diff, 2);
    assert!(!r.is_cordial);
}

#[test]
fn complement_invariance() {
    let d = AttachmentPolicy::default();
    let (g, _, l) = label_path_union(5, 2, d).unwrap();
    let (a, b) = (
        cordiality_report(g.graph(), &l).unwrap(),
        cordiality_report(g.graph(), &complement(&l)).unwrap(),
    );
    assert_eq!(a.is_cordial, b.is_cordial);
    let (g, _, l) = label_open_star(5, 3, d).unwrap();
    let (a, b) = (
        cordiality_report(g.graph(), &l).unwrap(),
        cordiality_report(g.graph(), &complement(&l)).unwrap(),
    );
    assert_eq!(a.vertex_diff, b.vertex_diff);
    assert_eq!(a.edge_diff, b.edge_diff);
}

#[test]
fn induced_label_identity_on_random_labelings() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let g = goldberg(7).unwrap();
    for _ in 0..50 {
        let labels: Vec<u8> = (0..56).map(|_| rng.gen_range(0..2)).collect();
        let l = induce_edge_labels(g.graph(), labels.clone()).unwrap();
        for (e, &x) in g.graph().edges().zip(&l.edge_labels) {
            assert_eq!(x, labels[e.lo()] ^ labels[e.hi()]);
            assert_eq!(
                x as i32,
                (labels[e.lo()] as i32 - labels[e.hi()] as i32).abs()
            );
        }
    }
}

#[test]
fn family_schedules_never_contradict_search() {
    let d = AttachmentPolicy::default();
    let budget = SearchBudget::default();
    let (g, _, l) = label_one_point_union(5, 3, 3, d).unwrap();
    assert!(cordiality_report(g.graph(), &l).unwrap().is_cordial);
    let (outcome, _) = search_cordial(g.graph(), &budget);
    let found = outcome
        .labeling()
        .expect("search agrees a cordial labeling exists");
    assert!(cordiality_report(g.graph(), found).unwrap().is_cordial);

    let g = goldberg(5).unwrap();
    let (outcome, _) = search_cordial(g.graph(), &budget);
    assert!(
        cordiality_report(g.graph(), outcome.labeling().unwrap())
            .unwrap()
            .is_cordial
    );
}
