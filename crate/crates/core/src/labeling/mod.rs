//! Binary vertex labelings, their induced edge labels, and cordiality.
//!
//! An edge `uv` receives `|f(u) - f(v)|`, which for 0/1 labels is
//! `f(u) XOR f(v)`. A labeling is cordial when both the vertex labels and
//! the induced edge labels are balanced to within one.

mod schedule;
mod search;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use schedule::{
    label_goldberg, label_one_point_union, label_open_star, label_path_union,
    one_point_union_schedule, open_star_schedule, path_union_schedule, pattern1, pattern2, Pattern,
    PatternSchedule, ScheduleEntry,
};
pub use search::{
    search_cordial, search_cordial_with_progress, SearchBudget, SearchOutcome, SearchStats,
    EXHAUSTIVE_VERTEX_LIMIT,
};

/// Vertex labels indexed by vertex ID and edge labels aligned with the
/// graph's canonical edge order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Labeling {
    pub vertex_labels: Vec<u8>,
    pub edge_labels: Vec<u8>,
}

impl Labeling {
    pub fn vertex_label(&self, v: usize) -> u8 {
        self.vertex_labels[v]
    }
}

/// Derives edge labels from vertex labels.
pub fn induce_edge_labels(g: &Graph, vertex_labels: Vec<u8>) -> Result<Labeling> {
    if vertex_labels.len() != g.vertex_count() {
        return Err(Error::LabelingMismatch(format!(
            "{} vertex labels for {} vertices",
            vertex_labels.len(),
            g.vertex_count()
        )));
    }
    if let Some(v) = vertex_labels.iter().position(|&x| x > 1) {
        return Err(Error::LabelingMismatch(format!(
            "vertex {v} has label {}, expected 0 or 1",
            vertex_labels[v]
        )));
    }
    let edge_labels = g
        .edges()
        .map(|e| vertex_labels[e.lo()] ^ vertex_labels[e.hi()])
        .collect();
    Ok(Labeling {
        vertex_labels,
        edge_labels,
    })
}

/// Flips every vertex label. Edge labels are unchanged.
pub fn complement(labeling: &Labeling) -> Labeling {
    Labeling {
        vertex_labels: labeling.vertex_labels.iter().map(|&x| 1 - x).collect(),
        edge_labels: labeling.edge_labels.clone(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CordialityReport {
    pub v0: usize,
    pub v1: usize,
    pub e0: usize,
    pub e1: usize,
    pub vertex_diff: usize,
    pub edge_diff: usize,
    pub is_cordial: bool,
}

impl CordialityReport {
    pub fn from_counts(v0: usize, v1: usize, e0: usize, e1: usize) -> Self {
        let vertex_diff = v0.abs_diff(v1);
        let edge_diff = e0.abs_diff(e1);
        CordialityReport {
            v0,
            v1,
            e0,
            e1,
            vertex_diff,
            edge_diff,
            is_cordial: vertex_diff <= 1 && edge_diff <= 1,
        }
    }
}

/// Counts labels and decides cordiality. The labeling must match `g` in
/// size, and its edge labels must be the induced ones.
pub fn cordiality_report(g: &Graph, labeling: &Labeling) -> Result<CordialityReport> {
    if labeling.edge_labels.len() != g.edge_count() {
        return Err(Error::LabelingMismatch(format!(
            "{} edge labels for {} edges",
            labeling.edge_labels.len(),
            g.edge_count()
        )));
    }
    let induced = induce_edge_labels(g, labeling.vertex_labels.clone())?;
    if let Some(i) = induced
        .edge_labels
        .iter()
        .zip(&labeling.edge_labels)
        .position(|(a, b)| a != b)
    {
        return Err(Error::LabelingMismatch(format!(
            "edge {} carries label {}, induced label is {}",
            g.edge_list()[i],
            labeling.edge_labels[i],
            induced.edge_labels[i]
        )));
    }
    let v1 = labeling.vertex_labels.iter().filter(|&&x| x == 1).count();
    let e1 = labeling.edge_labels.iter().filter(|&&x| x == 1).count();
    Ok(CordialityReport::from_counts(
        g.vertex_count() - v1,
        v1,
        g.edge_count() - e1,
        e1,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::petersen;

    #[test]
    fn induced_labels() {
        let p = petersen();
        let l = induce_edge_labels(&p, vec![0; 10]).unwrap();
        assert!(l.edge_labels.iter().all(|&x| x == 0));

        let single = Graph::from_edges(2, [(0, 1)]).unwrap();
        let l = induce_edge_labels(&single, vec![1, 0]).unwrap();
        assert_eq!(l.edge_labels, vec![1]);
    }

    #[test]
    fn induce_rejects_bad_input() {
        let g = Graph::path(3);
        assert!(matches!(
            induce_edge_labels(&g, vec![0, 1]),
            Err(Error::LabelingMismatch(_))
        ));
        assert!(matches!(
            induce_edge_labels(&g, vec![0, 2, 1]),
            Err(Error::LabelingMismatch(_))
        ));
    }

    #[test]
    fn reports() {
        let p = petersen();
        let zero = induce_edge_labels(&p, vec![0; 10]).unwrap();
        let r = cordiality_report(&p, &zero).unwrap();
        assert!(!r.is_cordial);
        assert_eq!(r.edge_diff, 15);

        let single = Graph::from_edges(2, [(0, 1)]).unwrap();
        let l = induce_edge_labels(&single, vec![0, 1]).unwrap();
        let r = cordiality_report(&single, &l).unwrap();
        assert_eq!((r.vertex_diff, r.edge_diff, r.is_cordial), (0, 1, true));
    }

    #[test]
    fn report_rejects_tampered_edge_labels() {
        let g = Graph::path(3);
        let mut l = induce_edge_labels(&g, vec![0, 1, 1]).unwrap();
        l.edge_labels[1] = 1;
        assert!(matches!(
            cordiality_report(&g, &l),
            Err(Error::LabelingMismatch(_))
        ));
        l.edge_labels.pop();
        assert!(cordiality_report(&g, &l).is_err());
    }

    #[test]
    fn complement_swaps_vertex_counts() {
        let p = petersen();
        let l = induce_edge_labels(&p, vec![1, 1, 1, 0, 0, 0, 0, 1, 0, 1]).unwrap();
        let c = complement(&l);
        let (a, b) = (
            cordiality_report(&p, &l).unwrap(),
            cordiality_report(&p, &c).unwrap(),
        );
        assert_eq!((a.v0, a.v1), (b.v1, b.v0));
        assert_eq!(c.edge_labels, l.edge_labels);
        assert_eq!(complement(&c), l);
    }
}
