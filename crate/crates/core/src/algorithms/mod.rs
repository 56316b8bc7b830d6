//! Independent-set construction and verification.

pub mod exact;
pub mod greedy;

pub use exact::{exact_alpha, AlphaResult, DEFAULT_BUDGET};
pub use greedy::{candidate_delta, greedy_extract, ExtractOptions, ExtractionCertificate, Step};

use crate::error::Result;
use crate::hypergraph::{Hypergraph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Independence {
    Independent,
    /// An edge lying entirely inside the set.
    Violated(Vec<Vertex>),
}

impl Independence {
    pub fn holds(&self) -> bool {
        matches!(self, Independence::Independent)
    }
}

/// Checks that no edge of `h` is contained in `set`.
pub fn verify_independent(h: &Hypergraph, set: &[Vertex]) -> Result<Independence> {
    let mut member = vec![false; h.order()];
    for &v in set {
        h.degree(v)?;
        member[v] = true;
    }
    Ok(h.edges()
        .iter()
        .find(|e| e.iter().all(|&v| member[v]))
        .map_or(Independence::Independent, |e| Independence::Violated(e.clone())))
}
