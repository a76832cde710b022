//! Error types shared across the search pipeline.

use crate::grid::Cell;
use thiserror::Error;

/// Which configured resource cap was exceeded during an automaton build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResourceKind {
    Nodes,
    Edges,
    Memory,
}

impl std::fmt::Display for ResourceKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ResourceKind::Nodes => write!(f, "nodes"),
            ResourceKind::Edges => write!(f, "edges"),
            ResourceKind::Memory => write!(f, "memory"),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("period ({0}, {1}) is not in the translation lattice of grid '{2}'")]
    NotInLattice(i64, i64, String),

    #[error("period ({0}, {1}) is degenerate: horizontal and zero periods are rejected")]
    DegeneratePeriod(i64, i64),

    #[error("vertices {0} and {1} have identical radius-{2} balls; no code exists")]
    TwinVertices(Cell, Cell, u32),

    #[error("resource cap exceeded: {kind} limit {limit} reached {reached}")]
    ResourceLimit {
        kind: ResourceKind,
        limit: u64,
        reached: u64,
    },

    #[error("graph has no cycle reachable from the start node")]
    NoCycle,

    #[error("lattice index {index} exceeds the brute-force cap {cap}")]
    IndexTooLarge { index: u64, cap: u64 },

    #[error("weights too large: n * max_weight = {0} would overflow the path-weight type")]
    WeightOverflow(i128),

    #[error("invalid grid description: {0}")]
    BadGrid(String),

    #[error("invalid input: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
