//! Composite families built from disjoint copies of `G_n`: path unions,
//! open stars and one-point unions of paths.
//!
//! Copies are joined through one chosen vertex per copy, the attachment
//! vertex `v_{i*,j*}` given by an [`AttachmentPolicy`]. The apex of the
//! star-shaped families is always vertex 0.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::goldberg::{self, goldberg, GoldbergGraph, SLOTS};
use crate::graph::{Graph, VertexCoord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AttachmentPolicy {
    pub block: usize,
    pub slot: usize,
}

impl Default for AttachmentPolicy {
    fn default() -> Self {
        AttachmentPolicy { block: 1, slot: 7 }
    }
}

impl AttachmentPolicy {
    pub fn validate(&self, n: usize) -> Result<()> {
        if !(1..=n).contains(&self.block) || !(1..=SLOTS).contains(&self.slot) {
            return Err(Error::InvalidParameter(format!(
                "attachment vertex ({}, {}) outside blocks 1..={n}, slots 1..={SLOTS}",
                self.block, self.slot
            )));
        }
        Ok(())
    }

    /// Offset of the attachment vertex inside one copy of `G_n`.
    pub fn local_id(&self) -> usize {
        goldberg::vertex_id(self.block, self.slot)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilyParams {
    PathUnion { n: usize, m: usize },
    OpenStar { n: usize, t: usize },
    OnePointUnion { n: usize, t: usize, p: usize },
}

impl FamilyParams {
    pub fn n(&self) -> usize {
        match *self {
            FamilyParams::PathUnion { n, .. }
            | FamilyParams::OpenStar { n, .. }
            | FamilyParams::OnePointUnion { n, .. } => n,
        }
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilyParams::PathUnion { n, m } => write!(f, "path union of {m} copies of G_{n}"),
            FamilyParams::OpenStar { n, t } => write!(f, "S({t}, G_{n})"),
            FamilyParams::OnePointUnion { n, t, p } => write!(f, "P_{p}^{t}({t}_{p}, G_{n})"),
        }
    }
}

/// Where one copy of `G_n` sits inside a composite graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CopyPlacement {
    /// 1-based copy index across the whole graph.
    pub copy: usize,
    /// Arm of a one-point union.
    pub arm: Option<usize>,
    /// 1-based position along the arm, counted outward from the apex.
    pub position: Option<usize>,
    /// ID of `v_{1,1}` of this copy; the copy spans `offset..offset + 8n`.
    pub offset: usize,
}

/// Vertex layout shared by `G_n` and its composites: copies of `G_n` plus
/// an optional apex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layout {
    pub n: usize,
    pub vertex_count: usize,
    pub copies: Vec<CopyPlacement>,
    pub apex: Option<usize>,
}

impl Layout {
    pub fn copy_len(&self) -> usize {
        SLOTS * self.n
    }
}

impl GoldbergGraph {
    pub fn layout(&self) -> Layout {
        Layout {
            n: self.n(),
            vertex_count: self.graph().vertex_count(),
            copies: vec![CopyPlacement {
                copy: 1,
                arm: None,
                position: None,
                offset: 0,
            }],
            apex: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositeGraph {
    graph: Graph,
    params: FamilyParams,
    policy: AttachmentPolicy,
    layout: Layout,
}

impl CompositeGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn params(&self) -> FamilyParams {
        self.params
    }

    pub fn policy(&self) -> AttachmentPolicy {
        self.policy
    }

    pub fn layout(&self) -> &Layout {
        &self.layout
    }

    pub fn apex(&self) -> Option<usize> {
        self.layout.apex
    }

    pub fn copies(&self) -> &[CopyPlacement] {
        &self.layout.copies
    }

    /// ID of `v_{i,j}` in the given 1-based copy.
    pub fn vertex_id(&self, copy: usize, i: usize, j: usize) -> Option<usize> {
        let placement = self.layout.copies.get(copy.checked_sub(1)?)?;
        let n = self.layout.n;
        ((1..=n).contains(&i) && (1..=SLOTS).contains(&j))
            .then(|| placement.offset + goldberg::vertex_id(i, j))
    }

    pub fn attachment_vertex(&self, copy: usize) -> Option<usize> {
        self.vertex_id(copy, self.policy.block, self.policy.slot)
    }

    /// Induced subgraph on one copy, relabelled like `G_n`.
    pub fn copy_subgraph(&self, copy: usize) -> Result<Graph> {
        let placement = copy
            .checked_sub(1)
            .and_then(|c| self.layout.copies.get(c))
            .ok_or_else(|| Error::InvalidParameter(format!("no copy {copy}")))?;
        let ids: Vec<usize> =
            (placement.offset..placement.offset + self.layout.copy_len()).collect();
        Ok(self.graph.induced_subgraph(&ids)?)
    }
}

/// Composite families require `n >= 5` (odd), unlike `G_n` itself.
fn validate_n(n: usize) -> Result<()> {
    goldberg::validate_block_count(n)?;
    if n < 5 {
        return Err(Error::InvalidParameter(format!(
            "composite families need n >= 5, got {n}"
        )));
    }
    Ok(())
}

/// Accumulates copies of `G_n` and their coordinates.
struct Builder {
    base: GoldbergGraph,
    graph: Graph,
    coords: BTreeMap<usize, VertexCoord>,
    copies: Vec<CopyPlacement>,
    apex: Option<usize>,
}

impl Builder {
    fn new(n: usize, with_apex: bool) -> Result<Self> {
        let base = goldberg(n)?;
        let mut graph = Graph::new(0);
        let mut coords = BTreeMap::new();
        let apex = with_apex.then(|| {
            coords.insert(0, VertexCoord::apex());
            graph.add_vertex()
        });
        Ok(Builder {
            base,
            graph,
            coords,
            copies: Vec::new(),
            apex,
        })
    }

    fn push_copy(&mut self, arm: Option<usize>, position: Option<usize>) -> CopyPlacement {
        let offset = self.graph.append_disjoint(self.base.graph());
        let copy = self.copies.len() + 1;
        for local in 0..self.base.graph().vertex_count() {
            let (i, j) = goldberg::block_slot(local);
            let mut c = VertexCoord::block(i, j).with_copy(copy);
            if let (Some(l), Some(m)) = (arm, position) {
                c = c.with_arm(l, m);
            }
            self.coords.insert(offset + local, c);
        }
        let placement = CopyPlacement {
            copy,
            arm,
            position,
            offset,
        };
        self.copies.push(placement);
        placement
    }

    fn finish(mut self, params: FamilyParams, policy: AttachmentPolicy) -> Result<CompositeGraph> {
        self.graph.set_coords(self.coords)?;
        Ok(CompositeGraph {
            layout: Layout {
                n: params.n(),
                vertex_count: self.graph.vertex_count(),
                copies: self.copies,
                apex: self.apex,
            },
            graph: self.graph,
            params,
            policy,
        })
    }
}

/// `m` copies of `G_n` in a row, consecutive copies joined by one edge
/// between their attachment vertices.
pub fn path_union(n: usize, m: usize, policy: AttachmentPolicy) -> Result<CompositeGraph> {
    validate_n(n)?;
    policy.validate(n)?;
    if m < 1 {
        return Err(Error::InvalidParameter("path union needs m >= 1".into()));
    }
    let mut b = Builder::new(n, false)?;
    let local = policy.local_id();
    let mut prev: Option<usize> = None;
    for _ in 0..m {
        let placement = b.push_copy(None, None);
        let here = placement.offset + local;
        if let Some(p) = prev {
            b.graph.add_edge(p, here)?;
        }
        prev = Some(here);
    }
    b.finish(FamilyParams::PathUnion { n, m }, policy)
}

/// Apex `v_0` joined to the attachment vertex of each of `t` copies.
pub fn open_star(n: usize, t: usize, policy: AttachmentPolicy) -> Result<CompositeGraph> {
    validate_n(n)?;
    policy.validate(n)?;
    if t < 2 {
        return Err(Error::InvalidParameter("open star needs t >= 2".into()));
    }
    let mut b = Builder::new(n, true)?;
    let apex = b.apex.expect("apex requested");
    for _ in 0..t {
        let placement = b.push_copy(None, None);
        b.graph
            .add_edge(apex, placement.offset + policy.local_id())?;
    }
    b.finish(FamilyParams::OpenStar { n, t }, policy)
}

/// Apex `v_0` with `t` arms; each arm is a path union of `p` copies whose
/// first copy is joined to the apex. All joins use attachment vertices.
pub fn one_point_union_paths(
    n: usize,
    t: usize,
    p: usize,
    policy: AttachmentPolicy,
) -> Result<CompositeGraph> {
    validate_n(n)?;
    policy.validate(n)?;
    if t < 2 {
        return Err(Error::InvalidParameter(
            "one-point union needs t >= 2".into(),
        ));
    }
    if p < 1 {
        return Err(Error::InvalidParameter(
            "one-point union needs p >= 1".into(),
        ));
    }
    let mut b = Builder::new(n, true)?;
    let apex = b.apex.expect("apex requested");
    for arm in 1..=t {
        let mut prev = apex;
        for position in 1..=p {
            let placement = b.push_copy(Some(arm), Some(position));
            let here = placement.offset + policy.local_id();
            b.graph.add_edge(prev, here)?;
            prev = here;
        }
    }
    b.finish(FamilyParams::OnePointUnion { n, t, p }, policy)
}
