use thiserror::Error;

use crate::hypergraph::Vertex;

/// Which hypothesis of the main bound an input failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hypothesis {
    Uniform,
    Linear,
    TriangleFree,
}

impl std::fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Hypothesis::Uniform => "uniform",
            Hypothesis::Linear => "linear",
            Hypothesis::TriangleFree => "triangle-free",
        })
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a hypergraph on {n} vertices")]
    InvalidVertex { vertex: Vertex, n: usize },
    #[error("edges must contain at least one vertex")]
    EmptyEdge,
    #[error("hypergraph has no vertices")]
    EmptyHypergraph,
    #[error("edge {edge:?} has {size} vertices, expected {expected}")]
    NotUniform {
        edge: Vec<Vertex>,
        size: usize,
        expected: usize,
    },
    #[error("hypergraph is not linear")]
    NotLinear,
    #[error("vertex {0} has degree 0")]
    IsolatedVertex(Vertex),
    #[error("uniformity must be at least 2, got {0}")]
    BadUniformity(usize),
    #[error("degree must be non-negative, got {0}")]
    NegativeDegree(f64),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("integral kernel has a pole inside (0, 1) at argument {argument}")]
    InteriorPole { argument: f64 },
    #[error("quadrature did not reach tolerance {tol:e} (best error estimate {estimate:e})")]
    NonConvergent { tol: f64, estimate: f64 },
    #[error("{0:?} is not a slot of the partition at vertex {1}")]
    InvalidSlot(Vec<Vertex>, Vertex),
    #[error("input violates the {0} hypothesis")]
    HypothesisViolated(Hypothesis),
    #[error("bad instance spec: {0}")]
    BadSpec(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
