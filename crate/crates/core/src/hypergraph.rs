//! Finite hypergraphs on dense vertex ids `0..n`.
//!
//! A [`Hypergraph`] is immutable once built. Edges are stored as ascending
//! vertex lists, the edge list itself in ascending lexicographic order, so
//! two hypergraphs with the same edge *set* compare equal and serialize to
//! the same bytes.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<Vertex>>,
    incidence: Vec<Vec<usize>>,
    neighbors: Vec<Vec<Vertex>>,
}

/// Result of [`Hypergraph::remove`]: the residual hypergraph plus the id maps
/// between the old and new vertex numbering.
#[derive(Debug, Clone)]
pub struct Removal {
    pub hypergraph: Hypergraph,
    /// `old_to_new[v]` is `None` for removed vertices.
    pub old_to_new: Vec<Option<Vertex>>,
    pub new_to_old: Vec<Vertex>,
}

/// The family of `r - 1` neighbor sets around a vertex `x` such that every
/// edge through `x` meets every slot in exactly one vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlotPartition {
    pub center: Vertex,
    /// Each slot is sorted ascending and has exactly `d(x)` vertices.
    pub slots: Vec<Vec<Vertex>>,
}

impl Hypergraph {
    /// Builds a hypergraph on `n` vertices. Repeated vertices inside an edge and
    /// repeated edges are collapsed.
    pub fn new<E, I>(n: usize, edges: E) -> Result<Self>
    where
        E: IntoIterator<Item = I>,
        I: IntoIterator<Item = Vertex>,
    {
        let mut set: BTreeSet<Vec<Vertex>> = BTreeSet::new();
        for edge in edges {
            let mut e: Vec<Vertex> = edge.into_iter().collect();
            if e.is_empty() {
                return Err(Error::EmptyEdge);
            }
            if let Some(&bad) = e.iter().find(|&&v| v >= n) {
                return Err(Error::InvalidVertex { vertex: bad, n });
            }
            e.sort_unstable();
            e.dedup();
            set.insert(e);
        }
        Ok(Self::from_canonical(n, set.into_iter().collect()))
    }

    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Self::from_canonical(n, Vec::new())
    }

    /// `edges` must already be sorted, deduplicated and in range.
    fn from_canonical(n: usize, edges: Vec<Vec<Vertex>>) -> Self {
        let mut incidence = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            for &v in e {
                incidence[v].push(i);
            }
        }
        let neighbors = (0..n)
            .map(|u| {
                let mut nb: Vec<Vertex> = incidence[u]
                    .iter()
                    .flat_map(|&i| edges[i].iter().copied())
                    .filter(|&v| v != u)
                    .collect();
                nb.sort_unstable();
                nb.dedup();
                nb
            })
            .collect();
        Hypergraph {
            n,
            edges,
            incidence,
            neighbors,
        }
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of (distinct) edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<Vertex>] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> &[Vertex] {
        &self.edges[index]
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    fn check(&self, u: Vertex) -> Result<()> {
        if u < self.n {
            Ok(())
        } else {
            Err(Error::InvalidVertex { vertex: u, n: self.n })
        }
    }

    pub fn degree(&self, u: Vertex) -> Result<usize> {
        self.check(u)?;
        Ok(self.incidence[u].len())
    }

    /// Degree sequence indexed by vertex id.
    pub fn degrees(&self) -> Vec<usize> {
        self.incidence.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.incidence.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Indices (into [`Hypergraph::edges`]) of the edges containing `u`, ascending.
    pub fn incident_edges(&self, u: Vertex) -> Result<&[usize]> {
        self.check(u)?;
        Ok(&self.incidence[u])
    }

    /// `N(u)`, sorted ascending; never contains `u`.
    pub fn neighborhood(&self, u: Vertex) -> Result<&[Vertex]> {
        self.check(u)?;
        Ok(&self.neighbors[u])
    }

    pub(crate) fn incidence_unchecked(&self, u: Vertex) -> &[usize] {
        &self.incidence[u]
    }

    pub(crate) fn neighbors_unchecked(&self, u: Vertex) -> &[Vertex] {
        &self.neighbors[u]
    }

    pub fn has_edge(&self, edge: &[Vertex]) -> bool {
        let mut e = edge.to_vec();
        e.sort_unstable();
        e.dedup();
        self.edges.binary_search(&e).is_ok()
    }

    /// `H - X`: drops the vertices in `removed` and every edge meeting them.
    /// Surviving vertices keep their relative order in the new numbering.
    pub fn remove(&self, removed: &[Vertex]) -> Result<Removal> {
        let mut gone = vec![false; self.n];
        for &v in removed {
            self.check(v)?;
            gone[v] = true;
        }
        let mut old_to_new = vec![None; self.n];
        let mut new_to_old = Vec::with_capacity(self.n);
        for v in 0..self.n {
            if !gone[v] {
                old_to_new[v] = Some(new_to_old.len());
                new_to_old.push(v);
            }
        }
        // Relabeling is monotone, so canonical order is preserved.
        let edges = self
            .edges
            .iter()
            .filter(|e| e.iter().all(|&v| !gone[v]))
            .map(|e| e.iter().map(|&v| old_to_new[v].unwrap()).collect())
            .collect();
        Ok(Removal {
            hypergraph: Self::from_canonical(new_to_old.len(), edges),
            old_to_new,
            new_to_old,
        })
    }

    /// Exact arithmetic mean of the degrees.
    pub fn average_degree(&self) -> Result<BigRational> {
        if self.n == 0 {
            return Err(Error::EmptyHypergraph);
        }
        let total: usize = self.edges.iter().map(Vec::len).sum();
        Ok(BigRational::new(BigInt::from(total), BigInt::from(self.n)))
    }

    /// Canonical slot partition around `x`: the `j`-th smallest vertex of each
    /// edge `e ∖ {x}` goes to slot `j`.
    pub fn slot_partition(&self, x: Vertex, r: usize) -> Result<SlotPartition> {
        self.check(x)?;
        if r < 2 {
            return Err(Error::BadUniformity(r));
        }
        let inc = &self.incidence[x];
        if inc.is_empty() {
            return Err(Error::IsolatedVertex(x));
        }
        let mut slots = vec![Vec::with_capacity(inc.len()); r - 1];
        for &i in inc {
            let e = &self.edges[i];
            if e.len() != r {
                return Err(Error::NotUniform {
                    edge: e.clone(),
                    size: e.len(),
                    expected: r,
                });
            }
            for (slot, &v) in slots.iter_mut().zip(e.iter().filter(|&&v| v != x)) {
                slot.push(v);
            }
        }
        let mut seen = BTreeSet::new();
        for slot in &mut slots {
            slot.sort_unstable();
            for &v in slot.iter() {
                if !seen.insert(v) {
                    return Err(Error::NotLinear);
                }
            }
        }
        Ok(SlotPartition { center: x, slots })
    }
}
