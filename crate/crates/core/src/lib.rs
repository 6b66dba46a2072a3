//! Goldberg snarks, their composite families, and cordial labelings.
//!
//! The crate builds `G_n` and its path unions, open stars and one-point
//! unions of paths, labels them with the slot patterns from which their
//! cordiality follows, and checks every claim by direct counting. Snark
//! properties (cubic, connected, bridgeless, girth, cyclic edge
//! connectivity, 3-edge-colorability) are certified by exact search.

pub mod certificate;
pub mod compositions;
pub mod error;
pub mod goldberg;
pub mod graph;
pub mod io;
pub mod labeling;

pub use certificate::{certify_snark, CertifyOptions, SnarkCertificate, Verdict};
pub use compositions::{
    one_point_union_paths, open_star, path_union, AttachmentPolicy, CompositeGraph, FamilyParams,
};
pub use error::{Error, GraphError, Result};
pub use goldberg::{goldberg, GoldbergGraph};
pub use graph::{petersen, Edge, Girth, Graph, VertexCoord};
pub use labeling::{cordiality_report, induce_edge_labels, CordialityReport, Labeling};
