//! Slot patterns for one copy of `G_n` and schedules that assign a pattern
//! to every copy of a composite graph.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{induce_edge_labels, Labeling};
use crate::compositions::{
    one_point_union_paths, open_star, path_union, AttachmentPolicy, CompositeGraph, Layout,
};
use crate::error::{Error, Result};
use crate::goldberg::{goldberg, SLOTS};

/// Labels of slots `1..=8` within every block of one copy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Pattern {
    /// 0 on even slots, 1 on odd slots.
    P1,
    /// 0 on slots 4, 6, 7, 8; 1 on slots 1, 2, 3, 5.
    P2,
}

impl Pattern {
    const P1_SLOTS: [u8; SLOTS] = [1, 0, 1, 0, 1, 0, 1, 0];
    const P2_SLOTS: [u8; SLOTS] = [1, 1, 1, 0, 1, 0, 0, 0];

    /// Label of slot `j` (1-based).
    pub fn label(self, j: usize) -> u8 {
        match self {
            Pattern::P1 => Self::P1_SLOTS[j - 1],
            Pattern::P2 => Self::P2_SLOTS[j - 1],
        }
    }

    /// Labels of one copy of `G_n`, in vertex-ID order.
    pub fn copy_labels(self, n: usize) -> Vec<u8> {
        let table = match self {
            Pattern::P1 => &Self::P1_SLOTS,
            Pattern::P2 => &Self::P2_SLOTS,
        };
        table.iter().copied().cycle().take(SLOTS * n).collect()
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Pattern::P1 => "p1",
            Pattern::P2 => "p2",
        })
    }
}

/// Vertex labels of `G_n` under pattern 1.
pub fn pattern1(n: usize) -> Vec<u8> {
    Pattern::P1.copy_labels(n)
}

/// Vertex labels of `G_n` under pattern 2.
pub fn pattern2(n: usize) -> Vec<u8> {
    Pattern::P2.copy_labels(n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScheduleEntry {
    pub copy: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub arm: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub position: Option<usize>,
    pub pattern: Pattern,
}

/// One pattern per copy, plus the apex label when there is an apex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternSchedule {
    pub entries: Vec<ScheduleEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub apex_label: Option<u8>,
}

impl PatternSchedule {
    /// Same pattern on every copy of `layout`; the apex, if any, gets 0.
    pub fn uniform(layout: &Layout, pattern: Pattern) -> Self {
        Self::from_fn(layout, |_, _, _| pattern)
    }

    /// Builds a schedule by calling `pick(copy, arm, position)` for each
    /// copy of `layout`. The apex, if any, gets 0.
    pub fn from_fn<F>(layout: &Layout, mut pick: F) -> Self
    where
        F: FnMut(usize, Option<usize>, Option<usize>) -> Pattern,
    {
        PatternSchedule {
            entries: layout
                .copies
                .iter()
                .map(|c| ScheduleEntry {
                    copy: c.copy,
                    arm: c.arm,
                    position: c.position,
                    pattern: pick(c.copy, c.arm, c.position),
                })
                .collect(),
            apex_label: layout.apex.map(|_| 0),
        }
    }

    pub fn pattern_of(&self, copy: usize) -> Option<Pattern> {
        self.entries
            .iter()
            .find(|e| e.copy == copy)
            .map(|e| e.pattern)
    }

    /// Vertex labels for `layout`. Every copy must be scheduled exactly
    /// once and the apex must be labelled iff the layout has one.
    pub fn vertex_labels(&self, layout: &Layout) -> Result<Vec<u8>> {
        let mut by_copy = BTreeMap::new();
        for e in &self.entries {
            if by_copy.insert(e.copy, e.pattern).is_some() {
                return Err(Error::LabelingMismatch(format!(
                    "copy {} scheduled twice",
                    e.copy
                )));
            }
        }
        if by_copy.len() != layout.copies.len() {
            return Err(Error::LabelingMismatch(format!(
                "schedule covers {} copies, graph has {}",
                by_copy.len(),
                layout.copies.len()
            )));
        }
        let mut labels = vec![u8::MAX; layout.vertex_count];
        match (layout.apex, self.apex_label) {
            (Some(a), Some(x)) if x <= 1 => labels[a] = x,
            (None, None) => {}
            _ => {
                return Err(Error::LabelingMismatch(
                    "apex label does not match the graph".into(),
                ))
            }
        }
        for c in &layout.copies {
            let pattern = by_copy.get(&c.copy).ok_or_else(|| {
                Error::LabelingMismatch(format!("copy {} has no pattern", c.copy))
            })?;
            let copy_labels = pattern.copy_labels(layout.n);
            labels[c.offset..c.offset + copy_labels.len()].copy_from_slice(&copy_labels);
        }
        if let Some(v) = labels.iter().position(|&x| x == u8::MAX) {
            return Err(Error::LabelingMismatch(format!(
                "vertex {v} left unlabelled"
            )));
        }
        Ok(labels)
    }
}

/// Copy `k` of a path union gets pattern 1 when `k mod 4` is 1 or 2 and
/// pattern 2 otherwise, so the joining edges alternate 1-1, 1-2, 2-2, 2-1.
pub fn path_union_schedule(layout: &Layout) -> PatternSchedule {
    PatternSchedule::from_fn(layout, |k, _, _| match k % 4 {
        1 | 2 => Pattern::P1,
        _ => Pattern::P2,
    })
}

/// Apex 0; the first `ceil(t/2)` branches use pattern 1, the rest pattern 2.
pub fn open_star_schedule(layout: &Layout) -> PatternSchedule {
    let first = layout.copies.len().div_ceil(2);
    PatternSchedule::from_fn(
        layout,
        |k, _, _| {
            if k <= first {
                Pattern::P1
            } else {
                Pattern::P2
            }
        },
    )
}

/// Apex 0; arms `1..=ceil(t/2)` use pattern 1 throughout, the remaining
/// arms use pattern 2 at odd positions and pattern 1 at even positions.
pub fn one_point_union_schedule(layout: &Layout) -> PatternSchedule {
    let arms = layout
        .copies
        .iter()
        .filter_map(|c| c.arm)
        .max()
        .unwrap_or(0);
    let first = arms.div_ceil(2);
    PatternSchedule::from_fn(layout, |_, arm, position| {
        let arm = arm.unwrap_or(1);
        let position = position.unwrap_or(1);
        if arm <= first || position % 2 == 0 {
            Pattern::P1
        } else {
            Pattern::P2
        }
    })
}

fn apply(composite: &CompositeGraph, schedule: &PatternSchedule) -> Result<Labeling> {
    let labels = schedule.vertex_labels(composite.layout())?;
    induce_edge_labels(composite.graph(), labels)
}

/// Builds the path union and labels it with [`path_union_schedule`].
pub fn label_path_union(
    n: usize,
    m: usize,
    policy: AttachmentPolicy,
) -> Result<(CompositeGraph, PatternSchedule, Labeling)> {
    let g = path_union(n, m, policy)?;
    let schedule = path_union_schedule(g.layout());
    let labeling = apply(&g, &schedule)?;
    Ok((g, schedule, labeling))
}

/// Builds the open star and labels it with [`open_star_schedule`].
pub fn label_open_star(
    n: usize,
    t: usize,
    policy: AttachmentPolicy,
) -> Result<(CompositeGraph, PatternSchedule, Labeling)> {
    let g = open_star(n, t, policy)?;
    let schedule = open_star_schedule(g.layout());
    let labeling = apply(&g, &schedule)?;
    Ok((g, schedule, labeling))
}

/// Builds the one-point union and labels it with
/// [`one_point_union_schedule`].
pub fn label_one_point_union(
    n: usize,
    t: usize,
    p: usize,
    policy: AttachmentPolicy,
) -> Result<(CompositeGraph, PatternSchedule, Labeling)> {
    let g = one_point_union_paths(n, t, p, policy)?;
    let schedule = one_point_union_schedule(g.layout());
    let labeling = apply(&g, &schedule)?;
    Ok((g, schedule, labeling))
}

/// Labels `G_n` with one pattern on every block.
pub fn label_goldberg(n: usize, pattern: Pattern) -> Result<Labeling> {
    let g = goldberg(n)?;
    induce_edge_labels(g.graph(), pattern.copy_labels(n))
}
