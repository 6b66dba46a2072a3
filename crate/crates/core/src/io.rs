//! Canonical JSON interchange plus DOT and GraphML export.
//!
//! Graph JSON is compact, with edges as ascending pairs in lexicographic
//! order and coordinates keyed by the decimal vertex ID. Writing a loaded
//! canonical file reproduces it byte for byte.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexCoord};
use crate::labeling::{CordialityReport, Labeling};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphJson {
    vertex_count: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    coords: Option<BTreeMap<usize, VertexCoord>>,
}

pub fn graph_to_json(g: &Graph) -> String {
    let doc = GraphJson {
        vertex_count: g.vertex_count(),
        edges: g.edges().map(|e| [e.lo(), e.hi()]).collect(),
        coords: g.coords().cloned(),
    };
    let mut s = serde_json::to_string(&doc).expect("graph JSON serializes");
    s.push('\n');
    s
}

pub fn graph_from_json(text: &str) -> Result<Graph> {
    let doc: GraphJson = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    let mut g = Graph::new(doc.vertex_count);
    for [u, v] in doc.edges {
        g.add_edge(u, v)?;
    }
    if let Some(coords) = doc.coords {
        g.set_coords(coords)?;
    }
    Ok(g)
}

pub fn labeling_to_json(l: &Labeling) -> String {
    let mut s = serde_json::to_string(l).expect("labeling JSON serializes");
    s.push('\n');
    s
}

pub fn labeling_from_json(text: &str) -> Result<Labeling> {
    serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))
}

pub fn report_to_json(r: &CordialityReport) -> String {
    let mut s = serde_json::to_string(r).expect("report JSON serializes");
    s.push('\n');
    s
}

pub fn report_from_json(text: &str) -> Result<CordialityReport> {
    serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))
}

fn coord_attrs(c: &VertexCoord) -> Vec<(&'static str, String)> {
    let mut attrs = Vec::new();
    if c.apex {
        attrs.push(("apex", "true".to_string()));
    }
    for (name, value) in [
        ("block", c.i),
        ("slot", c.j),
        ("copy", c.k),
        ("arm", c.l),
        ("position", c.m),
    ] {
        if let Some(x) = value {
            attrs.push((name, x.to_string()));
        }
    }
    attrs
}

/// Graphviz DOT. Vertices are grouped into one cluster per copy (or per
/// block for a single `G_n`); with a labeling, label-0 vertices are white
/// and label-1 vertices black, and edges carry their induced label.
pub fn graph_to_dot(g: &Graph, labeling: Option<&Labeling>) -> Result<String> {
    check_labeling_size(g, labeling)?;
    let mut out =
        String::from("graph G {\n  node [shape=circle, style=filled, fillcolor=white];\n");

    let cluster_of = |v: usize| -> Option<(&'static str, usize)> {
        let c = g.coord(v)?;
        c.k.map(|k| ("copy", k)).or(c.i.map(|i| ("block", i)))
    };
    let mut clusters: BTreeMap<(&str, usize), Vec<usize>> = BTreeMap::new();
    let mut loose = Vec::new();
    for v in 0..g.vertex_count() {
        match cluster_of(v) {
            Some(key) => clusters.entry(key).or_default().push(v),
            None => loose.push(v),
        }
    }

    let node_line = |v: usize, indent: &str| -> String {
        let mut attrs: Vec<(&str, String)> = g.coord(v).map(coord_attrs).unwrap_or_default();
        if let Some(l) = labeling {
            let x = l.vertex_labels[v];
            attrs.push(("label", format!("\"{v}:{x}\"")));
            if x == 1 {
                attrs.push(("fillcolor", "black".into()));
                attrs.push(("fontcolor", "white".into()));
            }
        }
        let body: Vec<String> = attrs.iter().map(|(k, v)| format!("{k}={v}")).collect();
        if body.is_empty() {
            format!("{indent}{v};\n")
        } else {
            format!("{indent}{v} [{}];\n", body.join(", "))
        }
    };

    for v in loose {
        out.push_str(&node_line(v, "  "));
    }
    for ((kind, idx), members) in &clusters {
        let _ = writeln!(out, "  subgraph cluster_{kind}_{idx} {{");
        let _ = writeln!(out, "    label=\"{kind} {idx}\";");
        for &v in members {
            out.push_str(&node_line(v, "    "));
        }
        out.push_str("  }\n");
    }
    for (idx, e) in g.edges().enumerate() {
        match labeling {
            Some(l) => {
                let _ = writeln!(
                    out,
                    "  {} -- {} [label={}];",
                    e.lo(),
                    e.hi(),
                    l.edge_labels[idx]
                );
            }
            None => {
                let _ = writeln!(out, "  {} -- {};", e.lo(), e.hi());
            }
        }
    }
    out.push_str("}\n");
    Ok(out)
}

/// GraphML with coordinate and label data keys.
pub fn graph_to_graphml(g: &Graph, labeling: Option<&Labeling>) -> Result<String> {
    check_labeling_size(g, labeling)?;
    let mut out = String::from(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n\
         <graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n",
    );
    for key in ["apex", "block", "slot", "copy", "arm", "position", "label"] {
        let ty = if key == "apex" { "boolean" } else { "int" };
        let _ = writeln!(
            out,
            "  <key id=\"{key}\" for=\"node\" attr.name=\"{key}\" attr.type=\"{ty}\"/>"
        );
    }
    out.push_str("  <key id=\"elabel\" for=\"edge\" attr.name=\"label\" attr.type=\"int\"/>\n");
    out.push_str("  <graph id=\"G\" edgedefault=\"undirected\">\n");
    for v in 0..g.vertex_count() {
        let mut data: Vec<(&str, String)> = g.coord(v).map(coord_attrs).unwrap_or_default();
        if let Some(l) = labeling {
            data.push(("label", l.vertex_labels[v].to_string()));
        }
        if data.is_empty() {
            let _ = writeln!(out, "    <node id=\"n{v}\"/>");
        } else {
            let _ = writeln!(out, "    <node id=\"n{v}\">");
            for (k, x) in data {
                let _ = writeln!(out, "      <data key=\"{k}\">{x}</data>");
            }
            out.push_str("    </node>\n");
        }
    }
    for (idx, e) in g.edges().enumerate() {
        match labeling {
            Some(l) => {
                let _ = writeln!(
                    out,
                    "    <edge source=\"n{}\" target=\"n{}\"><data key=\"elabel\">{}</data></edge>",
                    e.lo(),
                    e.hi(),
                    l.edge_labels[idx]
                );
            }
            None => {
                let _ = writeln!(
                    out,
                    "    <edge source=\"n{}\" target=\"n{}\"/>",
                    e.lo(),
                    e.hi()
                );
            }
        }
    }
    out.push_str("  </graph>\n</graphml>\n");
    Ok(out)
}

fn check_labeling_size(g: &Graph, labeling: Option<&Labeling>) -> Result<()> {
    if let Some(l) = labeling {
        if l.vertex_labels.len() != g.vertex_count() || l.edge_labels.len() != g.edge_count() {
            return Err(Error::LabelingMismatch(
                "labeling size does not match the graph".into(),
            ));
        }
    }
    Ok(())
}
