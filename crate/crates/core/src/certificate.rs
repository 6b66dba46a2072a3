//! Snark certification: the six structural checks bundled into one record.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::{
    cyclic_edge_connectivity_ge, find_3_edge_coloring_with_progress, find_bridges, girth,
    ColoringOutcome, CutBudget, Girth, Graph, SearchStats,
};

/// Limits for the two exhaustive checks.
#[derive(Debug, Clone, Copy, Default)]
pub struct CertifyOptions {
    pub cut_budget: CutBudget,
    /// Abort the coloring search after this many branches.
    pub coloring_node_limit: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Snark,
    NotSnark,
    /// No check failed, but at least one could not be run.
    Undetermined,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct CertificateStats {
    /// Branches explored by the coloring search, when it ran.
    pub coloring_nodes: Option<u64>,
    /// Wall time of all checks in milliseconds. Not reproducible, so callers
    /// that need byte-stable output clear it.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

/// Outcome of every snark check. `None` marks a check that was not run,
/// with the reason recorded in `notes`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SnarkCertificate {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub is_cubic: bool,
    pub is_connected: bool,
    pub bridge_edges: Vec<[usize; 2]>,
    pub girth: Girth,
    pub cyclic_edge_connectivity_ge_4: Option<bool>,
    pub three_edge_colorable: Option<bool>,
    pub search_stats: CertificateStats,
    pub notes: Vec<String>,
    pub verdict: Verdict,
}

impl SnarkCertificate {
    pub fn is_snark(&self) -> bool {
        self.verdict == Verdict::Snark
    }

    /// Whether any check was skipped for budget or precondition reasons.
    pub fn has_unchecked(&self) -> bool {
        self.cyclic_edge_connectivity_ge_4.is_none() || self.three_edge_colorable.is_none()
    }

    fn decide(&mut self) {
        let girth_ok = matches!(self.girth, Girth::Finite(g) if g >= 5);
        let known_fail = !self.is_cubic
            || !self.is_connected
            || !self.bridge_edges.is_empty()
            || !girth_ok
            || self.cyclic_edge_connectivity_ge_4 == Some(false)
            || self.three_edge_colorable == Some(true);
        self.verdict = if known_fail {
            Verdict::NotSnark
        } else if self.has_unchecked() {
            Verdict::Undetermined
        } else {
            Verdict::Snark
        };
    }
}

pub fn certify_snark(g: &Graph, options: &CertifyOptions) -> SnarkCertificate {
    certify_snark_with_progress(g, options, &mut |_| {})
}

/// Runs every check. The exhaustive ones are skipped with a note when their
/// preconditions fail (a non-cubic or disconnected graph) or their budget
/// is exceeded.
pub fn certify_snark_with_progress(
    g: &Graph,
    options: &CertifyOptions,
    progress: &mut dyn FnMut(&SearchStats),
) -> SnarkCertificate {
    let start = std::time::Instant::now();
    let is_cubic = g.is_cubic();
    let is_connected = g.is_connected();
    let mut notes = Vec::new();
    let mut stats = CertificateStats::default();

    let cyclic = if is_cubic && is_connected {
        match cyclic_edge_connectivity_ge(g, 4, &options.cut_budget) {
            Ok(v) => Some(v),
            Err(e) => {
                notes.push(format!("cyclic edge connectivity unchecked: {e}"));
                None
            }
        }
    } else {
        notes.push("cyclic edge connectivity unchecked: requires a connected cubic graph".into());
        None
    };

    let colorable =
        match find_3_edge_coloring_with_progress(g, options.coloring_node_limit, progress) {
            Ok((outcome, s)) => {
                stats.coloring_nodes = Some(s.nodes);
                Some(matches!(outcome, ColoringOutcome::Colorable(_)))
            }
            Err(Error::NotCubic) => {
                notes.push("3-edge-colorability unchecked: requires a cubic graph".into());
                None
            }
            Err(e) => {
                notes.push(format!("3-edge-colorability unchecked: {e}"));
                None
            }
        };

    let mut cert = SnarkCertificate {
        vertex_count: g.vertex_count(),
        edge_count: g.edge_count(),
        is_cubic,
        is_connected,
        bridge_edges: find_bridges(g)
            .into_iter()
            .map(|e| [e.lo(), e.hi()])
            .collect(),
        girth: girth(g),
        cyclic_edge_connectivity_ge_4: cyclic,
        three_edge_colorable: colorable,
        search_stats: stats,
        notes,
        verdict: Verdict::Undetermined,
    };
    cert.search_stats.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    cert.decide();
    cert
}
