//! Greedy extraction following the induction behind the `Σ f_r(d(u))` bound.
//!
//! Each step either takes an isolated vertex, or picks a vertex `x` and one
//! slot `R` of its slot partition, puts `x` into the independent set and
//! continues on `H - ({x} ∪ R)`. Every edge through `x` meets `R`, so the
//! set stays independent. With potential `Φ(H) = Σ_u f_r(d(u))`, the step
//! gain is
//!
//! ```text
//! delta(x, R) = 1 + Φ(H - ({x} ∪ R)) - Φ(H)
//! ```
//!
//! For r-uniform linear triangle-free input the deltas over all `(x, R)` sum
//! to a non-negative number, so the best one is `>= 0` and the final set has
//! at least `Φ(H)` vertices.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::bounds::{rational_string, theorem1_rhs, FrSequence};
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Vertex};
use crate::properties::check_hypotheses;

fn ser_rational<S: Serializer>(q: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&rational_string(q))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Step {
    /// Chosen vertex, original id.
    pub x: Vertex,
    /// Removed slot, original ids; empty when `x` was isolated.
    #[serde(rename = "R")]
    pub slot: Vec<Vertex>,
    #[serde(serialize_with = "ser_rational")]
    pub delta: BigRational,
    pub delta_approx: f64,
    #[serde(serialize_with = "ser_rational")]
    pub potential_before: BigRational,
    #[serde(serialize_with = "ser_rational")]
    pub potential_after: BigRational,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExtractionCertificate {
    pub independent_set: Vec<Vertex>,
    #[serde(serialize_with = "ser_rational")]
    pub guarantee: BigRational,
    pub guaranteed: bool,
    pub steps: Vec<Step>,
}

impl ExtractionCertificate {
    pub fn size(&self) -> usize {
        self.independent_set.len()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ExtractOptions {
    /// Run on inputs that fail the hypotheses; the certificate is then unguaranteed.
    pub allow_violations: bool,
    /// Recompute each chosen delta on an explicitly built `H - X` and re-check
    /// the hypotheses on every residual hypergraph.
    pub cross_check: bool,
}

/// `1 + Φ(H - ({x} ∪ R)) - Φ(H)`, computed on the explicitly built residual.
///
/// `slot` must be one of the slots of `h.slot_partition(x, r)`, or empty when
/// `x` is isolated.
pub fn candidate_delta(h: &Hypergraph, r: usize, x: Vertex, slot: &[Vertex]) -> Result<BigRational> {
    h.degree(x)?;
    let mut sorted = slot.to_vec();
    sorted.sort_unstable();
    let valid = if h.degree(x)? == 0 {
        sorted.is_empty()
    } else {
        h.slot_partition(x, r)?.slots.contains(&sorted)
    };
    if !valid {
        return Err(Error::InvalidSlot(slot.to_vec(), x));
    }
    delta_from_scratch(h, r, x, &sorted)
}

fn delta_from_scratch(h: &Hypergraph, r: usize, x: Vertex, slot: &[Vertex]) -> Result<BigRational> {
    let mut removed = slot.to_vec();
    removed.push(x);
    let residual = h.remove(&removed)?.hypergraph;
    Ok(BigRational::from_integer(1.into()) + theorem1_rhs(&residual, r)? - theorem1_rhs(h, r)?)
}

/// `f_r` values over one common denominator, for cheap exact deltas.
struct ScaledFr {
    scaled: Vec<BigInt>,
    denom: BigInt,
}

impl ScaledFr {
    fn at(&self, d: usize) -> &BigInt {
        &self.scaled[d]
    }

    fn to_rational(&self, v: &BigInt) -> BigRational {
        BigRational::new(v.clone(), self.denom.clone())
    }
}

/// Scaled delta by direct edge counting: the degree loss of a surviving
/// vertex is the number of removed edges through it.
fn scaled_delta(h: &Hypergraph, fr: &ScaledFr, x: Vertex, slot: &[Vertex]) -> BigInt {
    let in_removed = |v: Vertex| v == x || slot.binary_search(&v).is_ok();
    let mut edges: Vec<usize> = std::iter::once(x)
        .chain(slot.iter().copied())
        .flat_map(|v| h.incidence_unchecked(v).iter().copied())
        .collect();
    edges.sort_unstable();
    edges.dedup();
    let mut touched: Vec<Vertex> = edges
        .iter()
        .flat_map(|&i| h.edge(i).iter().copied())
        .filter(|&z| !in_removed(z))
        .collect();
    touched.sort_unstable();

    let mut delta = fr.denom.clone();
    for v in std::iter::once(x).chain(slot.iter().copied()) {
        delta -= fr.at(h.incidence_unchecked(v).len());
    }
    for run in touched.chunk_by(|a, b| a == b) {
        let z = run[0];
        let d = h.incidence_unchecked(z).len();
        delta += fr.at(d - run.len());
        delta -= fr.at(d);
    }
    delta
}

fn candidate_slots(h: &Hypergraph, r: usize, x: Vertex, strict: bool) -> Result<Vec<Vec<Vertex>>> {
    match h.slot_partition(x, r) {
        Ok(p) => Ok(p.slots),
        Err(e) if strict => Err(e),
        // Best effort: dropping all of N(x) still hits every edge through x.
        Err(_) => Ok(vec![h.neighbors_unchecked(x).to_vec()]),
    }
}

/// Best `(scaled delta, slot index, slot)` at `x`; ties go to the lower slot index.
fn best_at(
    h: &Hypergraph,
    r: usize,
    fr: &ScaledFr,
    x: Vertex,
    strict: bool,
) -> Result<(BigInt, usize, Vec<Vertex>)> {
    let mut best: Option<(BigInt, usize, Vec<Vertex>)> = None;
    for (j, slot) in candidate_slots(h, r, x, strict)?.into_iter().enumerate() {
        let d = scaled_delta(h, fr, x, &slot);
        if best.as_ref().is_none_or(|(b, _, _)| d > *b) {
            best = Some((d, j, slot));
        }
    }
    Ok(best.expect("non-isolated vertex has at least one slot"))
}

pub fn greedy_extract(h: &Hypergraph, r: usize, opts: ExtractOptions) -> Result<ExtractionCertificate> {
    let hypotheses = check_hypotheses(h, r);
    let guaranteed = hypotheses.is_ok();
    if let Err(e) = hypotheses {
        if !opts.allow_violations {
            return Err(e);
        }
    }
    let guarantee = theorem1_rhs(h, r)?;
    let fr = {
        let mut seq = FrSequence::new(r)?;
        let (scaled, denom) = seq.common_denominator(h.max_degree());
        ScaledFr { scaled, denom }
    };

    let mut current = h.clone();
    let mut ids: Vec<Vertex> = h.vertices().collect();
    let mut independent = Vec::new();
    let mut steps = Vec::new();

    if !guaranteed {
        // Vertices of singleton edges can never be chosen.
        let forced: Vec<Vertex> = current
            .edges()
            .iter()
            .filter(|e| e.len() == 1)
            .map(|e| e[0])
            .collect();
        if !forced.is_empty() {
            let removal = current.remove(&forced)?;
            ids = removal.new_to_old.iter().map(|&v| ids[v]).collect();
            current = removal.hypergraph;
        }
    }

    let mut potential: BigInt = current.degrees().iter().map(|&d| fr.at(d)).sum();

    while current.order() > 0 {
        let isolated: Vec<Vertex> = current.vertices().filter(|&v| current.incidence_unchecked(v).is_empty()).collect();
        if !isolated.is_empty() {
            for &v in &isolated {
                let before = fr.to_rational(&potential);
                potential -= &fr.denom;
                steps.push(Step {
                    x: ids[v],
                    slot: Vec::new(),
                    delta: BigRational::zero(),
                    delta_approx: 0.0,
                    potential_before: before,
                    potential_after: fr.to_rational(&potential),
                });
                independent.push(ids[v]);
            }
            let removal = current.remove(&isolated)?;
            ids = removal.new_to_old.iter().map(|&v| ids[v]).collect();
            current = removal.hypergraph;
            continue;
        }

        let g = &current;
        let per_vertex = g
            .vertices()
            .into_par_iter()
            .map(|x| best_at(g, r, &fr, x, guaranteed).map(|(d, j, s)| (d, x, j, s)))
            .collect::<Result<Vec<_>>>()?;
        // Largest delta, then smallest vertex, then smallest slot index.
        let (delta, x, _, slot) = per_vertex
            .into_iter()
            .reduce(|a, b| if b.0 > a.0 { b } else { a })
            .expect("non-empty hypergraph");

        let delta_q = fr.to_rational(&delta);
        if opts.cross_check {
            let direct = delta_from_scratch(&current, r, x, &slot)?;
            assert_eq!(direct, delta_q, "incremental delta disagrees at x={}", ids[x]);
        }
        debug_assert!(!guaranteed || delta >= BigInt::zero());

        let before = fr.to_rational(&potential);
        potential += &delta - &fr.denom;
        steps.push(Step {
            x: ids[x],
            slot: slot.iter().map(|&v| ids[v]).collect(),
            delta_approx: delta_q.to_f64().unwrap_or(f64::NAN),
            delta: delta_q,
            potential_before: before,
            potential_after: fr.to_rational(&potential),
        });
        independent.push(ids[x]);

        let mut removed = slot;
        removed.push(x);
        let removal = current.remove(&removed)?;
        ids = removal.new_to_old.iter().map(|&v| ids[v]).collect();
        current = removal.hypergraph;
        if opts.cross_check && guaranteed {
            check_hypotheses(&current, r).expect("residual keeps the hypotheses");
        }
    }

    independent.sort_unstable();
    Ok(ExtractionCertificate {
        independent_set: independent,
        guarantee,
        guaranteed,
        steps,
    })
}
