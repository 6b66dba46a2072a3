use std::fs;
use std::path::PathBuf;

use clap::{Args, ValueEnum};
use snark_core::compositions::{
    one_point_union_paths, open_star, path_union, AttachmentPolicy, CompositeGraph, Layout,
};
use snark_core::io::graph_from_json;
use snark_core::{goldberg, petersen, GoldbergGraph, Graph};

use crate::Failure;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Goldberg,
    PathUnion,
    OpenStar,
    OnePointUnion,
    Petersen,
}

/// Where the graph comes from: a named family or a canonical JSON file.
#[derive(Debug, Clone, Args)]
pub struct GraphSource {
    #[arg(long, value_enum, conflicts_with = "input")]
    pub family: Option<Family>,
    /// Number of blocks of G_n (odd).
    #[arg(short = 'n')]
    pub n: Option<usize>,
    /// Copies in a path union.
    #[arg(short = 'm')]
    pub m: Option<usize>,
    /// Branches of an open star, or arms of a one-point union.
    #[arg(short = 't')]
    pub t: Option<usize>,
    /// Copies per arm of a one-point union.
    #[arg(short = 'p')]
    pub p: Option<usize>,
    /// Block of the attachment vertex in compositions [default: 1].
    #[arg(long)]
    pub attach_block: Option<usize>,
    /// Slot of the attachment vertex in compositions [default: 7].
    #[arg(long)]
    pub attach_slot: Option<usize>,
    /// Canonical graph JSON file.
    #[arg(long)]
    pub input: Option<PathBuf>,
}

pub enum Target {
    Goldberg(GoldbergGraph),
    Composite(CompositeGraph),
    Plain(Graph),
}

impl Target {
    pub fn graph(&self) -> &Graph {
        match self {
            Target::Goldberg(g) => g.graph(),
            Target::Composite(c) => c.graph(),
            Target::Plain(g) => g,
        }
    }

    pub fn layout(&self) -> Option<Layout> {
        match self {
            Target::Goldberg(g) => Some(g.layout()),
            Target::Composite(c) => Some(c.layout().clone()),
            Target::Plain(_) => None,
        }
    }
}

fn require(value: Option<usize>, flag: &str, family: &str) -> Result<usize, Failure> {
    value.ok_or_else(|| Failure::invalid(format!("--family {family} requires {flag}")))
}

fn reject(value: Option<usize>, flag: &str, family: &str) -> Result<(), Failure> {
    match value {
        Some(_) => Err(Failure::invalid(format!(
            "{flag} does not apply to --family {family}"
        ))),
        None => Ok(()),
    }
}

impl GraphSource {
    /// Validates the whole parameter set, then builds the graph.
    pub fn build(&self) -> Result<Target, Failure> {
        let default = AttachmentPolicy::default();
        let policy = AttachmentPolicy {
            block: self.attach_block.unwrap_or(default.block),
            slot: self.attach_slot.unwrap_or(default.slot),
        };
        let attach = [
            (self.attach_block, "--attach-block"),
            (self.attach_slot, "--attach-slot"),
        ];
        if let Some(path) = &self.input {
            for (v, flag) in [
                (self.n, "-n"),
                (self.m, "-m"),
                (self.t, "-t"),
                (self.p, "-p"),
            ]
            .into_iter()
            .chain(attach)
            {
                reject(v, flag, "(file input)")?;
            }
            let text = fs::read_to_string(path)
                .map_err(|e| Failure::invalid(format!("{}: {e}", path.display())))?;
            return Ok(Target::Plain(graph_from_json(&text)?));
        }
        let family = self
            .family
            .ok_or_else(|| Failure::invalid("either --family or --input is required"))?;
        let target = match family {
            Family::Goldberg => {
                let name = "goldberg";
                reject(self.m, "-m", name)?;
                reject(self.t, "-t", name)?;
                reject(self.p, "-p", name)?;
                for (v, flag) in attach {
                    reject(v, flag, name)?;
                }
                Target::Goldberg(goldberg(require(self.n, "-n", name)?)?)
            }
            Family::Petersen => {
                let name = "petersen";
                for (v, flag) in [
                    (self.n, "-n"),
                    (self.m, "-m"),
                    (self.t, "-t"),
                    (self.p, "-p"),
                ]
                .into_iter()
                .chain(attach)
                {
                    reject(v, flag, name)?;
                }
                Target::Plain(petersen())
            }
            Family::PathUnion => {
                let name = "path-union";
                reject(self.t, "-t", name)?;
                reject(self.p, "-p", name)?;
                let n = require(self.n, "-n", name)?;
                let m = require(self.m, "-m", name)?;
                Target::Composite(path_union(n, m, policy)?)
            }
            Family::OpenStar => {
                let name = "open-star";
                reject(self.m, "-m", name)?;
                reject(self.p, "-p", name)?;
                let n = require(self.n, "-n", name)?;
                let t = require(self.t, "-t", name)?;
                Target::Composite(open_star(n, t, policy)?)
            }
            Family::OnePointUnion => {
                let name = "one-point-union";
                reject(self.m, "-m", name)?;
                let n = require(self.n, "-n", name)?;
                let t = require(self.t, "-t", name)?;
                let p = require(self.p, "-p", name)?;
                Target::Composite(one_point_union_paths(n, t, p, policy)?)
            }
        };
        Ok(target)
    }
}
