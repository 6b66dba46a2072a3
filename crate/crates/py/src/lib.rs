//! Python bindings. Graphs, labelings and reports are wrapped as classes;
//! certificates come back as plain dicts.

// The pyo3 0.22 macros expand to `PyErr::from(PyErr)` on every fallible
// signature.
#![allow(clippy::useless_conversion)]

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use snark_core::compositions::{self, AttachmentPolicy};
use snark_core::graph::{self, Girth};
use snark_core::labeling::{self, Pattern, SearchBudget, SearchOutcome};
use snark_core::{io, CertifyOptions};

fn err(e: snark_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn pattern(name: &str) -> PyResult<Pattern> {
    match name {
        "p1" => Ok(Pattern::P1),
        "p2" => Ok(Pattern::P2),
        other => Err(PyValueError::new_err(format!(
            "unknown pattern {other:?}, expected 'p1' or 'p2'"
        ))),
    }
}

#[pyclass(name = "Graph", module = "snark_cordial")]
#[derive(Clone)]
struct PyGraph(snark_core::Graph);

#[pymethods]
impl PyGraph {
    #[new]
    fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        snark_core::Graph::from_edges(vertex_count, edges)
            .map(PyGraph)
            .map_err(|e| err(e.into()))
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        io::graph_from_json(text).map(PyGraph).map_err(err)
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.0.vertex_count()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.0.edge_count()
    }

    /// Edges as ascending pairs in canonical order.
    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges().map(|e| e.endpoints()).collect()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.0.vertex_count() {
            return Err(PyValueError::new_err(format!("vertex {v} out of range")));
        }
        let mut n = self.0.neighbors(v).to_vec();
        n.sort_unstable();
        Ok(n)
    }

    fn is_cubic(&self) -> bool {
        self.0.is_cubic()
    }

    fn is_connected(&self) -> bool {
        self.0.is_connected()
    }

    fn bridges(&self) -> Vec<(usize, usize)> {
        graph::find_bridges(&self.0)
            .into_iter()
            .map(|e| e.endpoints())
            .collect()
    }

    /// Length of a shortest cycle, or None for a forest.
    fn girth(&self) -> Option<usize> {
        match graph::girth(&self.0) {
            Girth::Finite(g) => Some(g),
            Girth::Infinite => None,
        }
    }

    fn to_json(&self) -> String {
        io::graph_to_json(&self.0)
    }

    #[pyo3(signature = (labeling=None))]
    fn to_dot(&self, labeling: Option<&PyLabeling>) -> PyResult<String> {
        io::graph_to_dot(&self.0, labeling.map(|l| &l.0)).map_err(err)
    }

    #[pyo3(signature = (labeling=None))]
    fn to_graphml(&self, labeling: Option<&PyLabeling>) -> PyResult<String> {
        io::graph_to_graphml(&self.0, labeling.map(|l| &l.0)).map_err(err)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(vertex_count={}, edge_count={})",
            self.0.vertex_count(),
            self.0.edge_count()
        )
    }
}

#[pyclass(name = "Labeling", module = "snark_cordial")]
#[derive(Clone)]
struct PyLabeling(labeling::Labeling);

#[pymethods]
impl PyLabeling {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        io::labeling_from_json(text).map(PyLabeling).map_err(err)
    }

    #[getter]
    fn vertex_labels(&self) -> Vec<u8> {
        self.0.vertex_labels.clone()
    }

    #[getter]
    fn edge_labels(&self) -> Vec<u8> {
        self.0.edge_labels.clone()
    }

    fn complement(&self) -> Self {
        PyLabeling(labeling::complement(&self.0))
    }

    fn to_json(&self) -> String {
        io::labeling_to_json(&self.0)
    }

    fn __repr__(&self) -> String {
        format!(
            "Labeling(vertices={}, edges={})",
            self.0.vertex_labels.len(),
            self.0.edge_labels.len()
        )
    }
}

#[pyclass(name = "CordialityReport", module = "snark_cordial", get_all)]
#[derive(Clone)]
struct PyReport {
    v0: usize,
    v1: usize,
    e0: usize,
    e1: usize,
    vertex_diff: usize,
    edge_diff: usize,
    is_cordial: bool,
}

#[pymethods]
impl PyReport {
    fn __repr__(&self) -> String {
        format!(
            "CordialityReport(v0={}, v1={}, e0={}, e1={}, is_cordial={})",
            self.v0,
            self.v1,
            self.e0,
            self.e1,
            if self.is_cordial { "True" } else { "False" }
        )
    }
}

impl From<labeling::CordialityReport> for PyReport {
    fn from(r: labeling::CordialityReport) -> Self {
        PyReport {
            v0: r.v0,
            v1: r.v1,
            e0: r.e0,
            e1: r.e1,
            vertex_diff: r.vertex_diff,
            edge_diff: r.edge_diff,
            is_cordial: r.is_cordial,
        }
    }
}

#[pyfunction]
fn goldberg(n: usize) -> PyResult<PyGraph> {
    snark_core::goldberg(n)
        .map(|g| PyGraph(g.into_graph()))
        .map_err(err)
}

#[pyfunction]
fn petersen() -> PyGraph {
    PyGraph(snark_core::petersen())
}

#[pyfunction]
#[pyo3(signature = (n, m, attach_block=1, attach_slot=7))]
fn path_union(n: usize, m: usize, attach_block: usize, attach_slot: usize) -> PyResult<PyGraph> {
    let policy = AttachmentPolicy {
        block: attach_block,
        slot: attach_slot,
    };
    compositions::path_union(n, m, policy)
        .map(|c| PyGraph(c.into_graph()))
        .map_err(err)
}

#[pyfunction]
#[pyo3(signature = (n, t, attach_block=1, attach_slot=7))]
fn open_star(n: usize, t: usize, attach_block: usize, attach_slot: usize) -> PyResult<PyGraph> {
    let policy = AttachmentPolicy {
        block: attach_block,
        slot: attach_slot,
    };
    compositions::open_star(n, t, policy)
        .map(|c| PyGraph(c.into_graph()))
        .map_err(err)
}

#[pyfunction]
#[pyo3(signature = (n, t, p, attach_block=1, attach_slot=7))]
fn one_point_union_paths(
    n: usize,
    t: usize,
    p: usize,
    attach_block: usize,
    attach_slot: usize,
) -> PyResult<PyGraph> {
    let policy = AttachmentPolicy {
        block: attach_block,
        slot: attach_slot,
    };
    compositions::one_point_union_paths(n, t, p, policy)
        .map(|c| PyGraph(c.into_graph()))
        .map_err(err)
}

/// Labels of one copy of `G_n` under pattern "p1" or "p2".
#[pyfunction]
fn pattern_labels(n: usize, name: &str) -> PyResult<Vec<u8>> {
    snark_core::goldberg::validate_block_count(n).map_err(err)?;
    Ok(pattern(name)?.copy_labels(n))
}

#[pyfunction]
#[pyo3(signature = (n, pattern_name="p1"))]
fn label_goldberg(n: usize, pattern_name: &str) -> PyResult<(PyGraph, PyLabeling)> {
    let l = labeling::label_goldberg(n, pattern(pattern_name)?).map_err(err)?;
    Ok((goldberg(n)?, PyLabeling(l)))
}

#[pyfunction]
#[pyo3(signature = (n, m, attach_block=1, attach_slot=7))]
fn label_path_union(
    n: usize,
    m: usize,
    attach_block: usize,
    attach_slot: usize,
) -> PyResult<(PyGraph, PyLabeling)> {
    let policy = AttachmentPolicy {
        block: attach_block,
        slot: attach_slot,
    };
    let (g, _, l) = labeling::label_path_union(n, m, policy).map_err(err)?;
    Ok((PyGraph(g.into_graph()), PyLabeling(l)))
}

#[pyfunction]
#[pyo3(signature = (n, t, attach_block=1, attach_slot=7))]
fn label_open_star(
    n: usize,
    t: usize,
    attach_block: usize,
    attach_slot: usize,
) -> PyResult<(PyGraph, PyLabeling)> {
    let policy = AttachmentPolicy {
        block: attach_block,
        slot: attach_slot,
    };
    let (g, _, l) = labeling::label_open_star(n, t, policy).map_err(err)?;
    Ok((PyGraph(g.into_graph()), PyLabeling(l)))
}

#[pyfunction]
#[pyo3(signature = (n, t, p, attach_block=1, attach_slot=7))]
fn label_one_point_union(
    n: usize,
    t: usize,
    p: usize,
    attach_block: usize,
    attach_slot: usize,
) -> PyResult<(PyGraph, PyLabeling)> {
    let policy = AttachmentPolicy {
        block: attach_block,
        slot: attach_slot,
    };
    let (g, _, l) = labeling::label_one_point_union(n, t, p, policy).map_err(err)?;
    Ok((PyGraph(g.into_graph()), PyLabeling(l)))
}

#[pyfunction]
fn induce_edge_labels(g: &PyGraph, vertex_labels: Vec<u8>) -> PyResult<PyLabeling> {
    labeling::induce_edge_labels(&g.0, vertex_labels)
        .map(PyLabeling)
        .map_err(err)
}

#[pyfunction]
fn cordiality_report(g: &PyGraph, l: &PyLabeling) -> PyResult<PyReport> {
    labeling::cordiality_report(&g.0, &l.0)
        .map(PyReport::from)
        .map_err(err)
}

/// Returns `(status, labeling)` with status "found", "absent" or "unknown".
#[pyfunction]
#[pyo3(signature = (g, max_nodes=1_000_000, seed=0))]
fn search_cordial(
    py: Python<'_>,
    g: &PyGraph,
    max_nodes: u64,
    seed: u64,
) -> (&'static str, Option<PyLabeling>) {
    let budget = SearchBudget { max_nodes, seed };
    let (outcome, _) = py.allow_threads(|| labeling::search_cordial(&g.0, &budget));
    match outcome {
        SearchOutcome::Found(l) => ("found", Some(PyLabeling(l))),
        SearchOutcome::Absent => ("absent", None),
        SearchOutcome::Unknown => ("unknown", None),
    }
}

/// Runs every snark check; the certificate is returned as a dict.
#[pyfunction]
#[pyo3(signature = (g, max_nodes=None))]
fn snark_certificate<'py>(
    py: Python<'py>,
    g: &PyGraph,
    max_nodes: Option<u64>,
) -> PyResult<Bound<'py, PyDict>> {
    let options = CertifyOptions {
        coloring_node_limit: max_nodes,
        ..CertifyOptions::default()
    };
    let mut cert = py.allow_threads(|| snark_core::certify_snark(&g.0, &options));
    cert.search_stats.elapsed_ms = None;
    let text = serde_json::to_string(&cert).expect("certificate serializes");
    py.import_bound("json")?
        .call_method1("loads", (text,))?
        .downcast_into::<PyDict>()
        .map_err(Into::into)
}

#[pyfunction]
fn are_isomorphic(a: &PyGraph, b: &PyGraph) -> PyResult<bool> {
    graph::are_isomorphic(&a.0, &b.0).map_err(err)
}

#[pymodule]
fn snark_cordial(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyLabeling>()?;
    m.add_class::<PyReport>()?;
    m.add_function(wrap_pyfunction!(goldberg, m)?)?;
    m.add_function(wrap_pyfunction!(petersen, m)?)?;
    m.add_function(wrap_pyfunction!(path_union, m)?)?;
    m.add_function(wrap_pyfunction!(open_star, m)?)?;
    m.add_function(wrap_pyfunction!(one_point_union_paths, m)?)?;
    m.add_function(wrap_pyfunction!(pattern_labels, m)?)?;
    m.add_function(wrap_pyfunction!(label_goldberg, m)?)?;
    m.add_function(wrap_pyfunction!(label_path_union, m)?)?;
    m.add_function(wrap_pyfunction!(label_open_star, m)?)?;
    m.add_function(wrap_pyfunction!(label_one_point_union, m)?)?;
    m.add_function(wrap_pyfunction!(induce_edge_labels, m)?)?;
    m.add_function(wrap_pyfunction!(cordiality_report, m)?)?;
    m.add_function(wrap_pyfunction!(search_cordial, m)?)?;
    m.add_function(wrap_pyfunction!(snark_certificate, m)?)?;
    m.add_function(wrap_pyfunction!(are_isomorphic, m)?)?;
    Ok(())
}
