use thiserror::Error;

use crate::graph::Edge;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("graph too large for graph6 encoding: {n} vertices")]
    Graph6TooLarge { n: usize },
    #[error("invalid edge ({u}, {v}): {reason}")]
    InvalidEdge {
        u: usize,
        v: usize,
        reason: &'static str,
    },
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("duplicate edge {edge}")]
    DuplicateEdge { edge: Edge },
    #[error("edge {edge} is not in the graph")]
    EdgeNotInGraph { edge: Edge },
    #[error("edges ({x0},{x1}) and ({y0},{y1}) share an endpoint")]
    SharedEndpoint {
        x0: usize,
        x1: usize,
        y0: usize,
        y1: usize,
    },
    #[error("pattern has no edges")]
    EmptyPattern,
    #[error("contradictory pins on edge {edge}")]
    ContradictoryPins { edge: Edge },
    #[error("pin repeated on edge {edge}")]
    DuplicatePin { edge: Edge },
    #[error("coloring is not total: edge {edge} is uncolored")]
    PartialColoring { edge: Edge },
    #[error("coloring mentions edge {edge} that is not in the host")]
    UnknownColoredEdge { edge: Edge },
    #[error("host has {edges} edges; the clause engine supports at most {max}")]
    HostTooLarge { edges: usize, max: usize },
    #[error("host has {edges} edges; the exhaustive oracle supports at most {max}")]
    OracleTooLarge { edges: usize, max: usize },
    #[error("node budget exhausted after {nodes} nodes")]
    BudgetExhausted { nodes: u64 },
    #[error("invalid claim: {0}")]
    InvalidClaim(String),
    #[error("certificate invalid: {0}")]
    CertificateInvalid(String),
    #[error("signal edge distance {distance} is too small for a cycle of length {requested} (need distance >= length - 1)")]
    DistanceTooSmall { distance: usize, requested: usize },
    #[error("signal edges lie in different components")]
    InfiniteSignalDistance,
    #[error("order {requested} exceeds the enumeration cap of {cap} vertices")]
    OrderTooLarge { requested: usize, cap: usize },
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
