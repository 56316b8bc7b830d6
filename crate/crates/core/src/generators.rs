//! Reproducible instance families.
//!
//! Random instances use xoshiro256** seeded through SplitMix64 (the
//! `seed_from_u64` expansion of `rand_xoshiro`). Each candidate edge is drawn
//! as the first `r` entries of a partial Fisher–Yates shuffle of `0..n`,
//! restarted from the identity permutation, with bounded integers taken by
//! Lemire's multiply-and-reject method. A rejected candidate still consumes
//! its draws.

use std::collections::{BTreeSet, HashSet};

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
#[value(rename_all = "snake_case")]
pub enum Family {
    Random,
    #[value(alias = "loose-path")]
    LoosePath,
    #[value(alias = "loose-cycle")]
    LooseCycle,
    Matching,
    Fano,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceSpec {
    pub family: Family,
    pub n: usize,
    pub r: usize,
    pub m_target: usize,
    pub seed: u64,
}

#[derive(Debug, Clone)]
pub struct Generated {
    pub hypergraph: Hypergraph,
    /// The random generator stopped on the rejection cap before `m_target`.
    pub underfilled: bool,
}

/// Consecutive rejections allowed per requested edge.
pub const REJECTION_FACTOR: usize = 50;

fn below(rng: &mut impl RngCore, bound: u64) -> u64 {
    let threshold = bound.wrapping_neg() % bound;
    loop {
        let m = (rng.next_u64() as u128) * (bound as u128);
        if (m as u64) >= threshold {
            return (m >> 64) as u64;
        }
    }
}

fn random_subset(rng: &mut impl RngCore, n: usize, r: usize, perm: &mut Vec<Vertex>) -> Vec<Vertex> {
    perm.clear();
    perm.extend(0..n);
    for i in 0..r {
        let j = i + below(rng, (n - i) as u64) as usize;
        perm.swap(i, j);
    }
    let mut e = perm[..r].to_vec();
    e.sort_unstable();
    e
}

/// Random r-uniform linear triangle-free hypergraph by rejection sampling.
pub fn random_linear_triangle_free(spec: &InstanceSpec) -> Result<Generated> {
    let InstanceSpec { n, r, m_target, seed, .. } = *spec;
    if r < 2 || n < r {
        return Err(Error::BadSpec(format!("random family needs n >= r >= 2, got n={n}, r={r}")));
    }
    let mut rng = Xoshiro256StarStar::seed_from_u64(seed);
    let mut covered: HashSet<(Vertex, Vertex)> = HashSet::new();
    let mut adj: Vec<BTreeSet<Vertex>> = vec![BTreeSet::new(); n];
    let mut edges = Vec::with_capacity(m_target);
    let mut perm = Vec::with_capacity(n);
    let mut rejections = 0;

    while edges.len() < m_target && rejections < REJECTION_FACTOR * m_target {
        let e = random_subset(&mut rng, n, r, &mut perm);
        let pairs = e.iter().enumerate().flat_map(|(i, &a)| e[i + 1..].iter().map(move |&b| (a, b)));
        // Linear: no pair already covered. Triangle-free: no two vertices of
        // the new edge have a common neighbor.
        let ok = pairs.clone().all(|p| !covered.contains(&p))
            && pairs.clone().all(|(a, b)| adj[a].intersection(&adj[b]).next().is_none());
        if !ok {
            rejections += 1;
            continue;
        }
        rejections = 0;
        for (a, b) in pairs {
            covered.insert((a, b));
            adj[a].insert(b);
            adj[b].insert(a);
        }
        edges.push(e);
    }
    let underfilled = edges.len() < m_target;
    Ok(Generated { hypergraph: Hypergraph::new(n, edges)?, underfilled })
}

/// Vertex count the named families need for `k` edges.
pub fn required_order(family: Family, k: usize, r: usize) -> usize {
    match family {
        Family::LoosePath => k * (r - 1) + 1,
        Family::LooseCycle => k * (r - 1),
        Family::Matching => k * r,
        Family::Fano => 7,
        Family::Random => r,
    }
}

fn check_named(k: usize, r: usize, min_k: usize) -> Result<()> {
    if r < 2 {
        return Err(Error::BadSpec(format!("uniformity must be >= 2, got {r}")));
    }
    if k < min_k {
        return Err(Error::BadSpec(format!("need at least {min_k} edges, got {k}")));
    }
    Ok(())
}

/// `k` edges, consecutive ones sharing exactly one vertex, read left to right.
pub fn loose_path(k: usize, r: usize) -> Result<Hypergraph> {
    check_named(k, r, 1)?;
    Hypergraph::new(k * (r - 1) + 1, (0..k).map(|i| (i * (r - 1)..=i * (r - 1) + r - 1).collect::<Vec<_>>()))
}

/// The loose path with its last vertex identified with vertex 0.
pub fn loose_cycle(k: usize, r: usize) -> Result<Hypergraph> {
    check_named(k, r, 3)?;
    let n = k * (r - 1);
    Hypergraph::new(n, (0..k).map(|i| (i * (r - 1)..=i * (r - 1) + r - 1).map(|v| v % n).collect::<Vec<_>>()))
}

pub fn matching(k: usize, r: usize) -> Result<Hypergraph> {
    check_named(k, r, 1)?;
    Hypergraph::new(k * r, (0..k).map(|i| (i * r..(i + 1) * r).collect::<Vec<_>>()))
}

/// The Fano plane on points `0..7`.
pub fn fano() -> Hypergraph {
    Hypergraph::new(
        7,
        [[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [1, 4, 6], [2, 3, 6], [2, 4, 5]],
    )
    .expect("valid construction")
}

fn pad(h: Hypergraph, n: usize) -> Result<Hypergraph> {
    if n < h.order() {
        return Err(Error::BadSpec(format!("family needs at least {} vertices, got n={n}", h.order())));
    }
    Hypergraph::new(n, h.edges().iter().cloned())
}

/// Builds the instance described by `spec`. For the named families `m_target`
/// is the edge count and `n` may exceed the required order, in which case the
/// extra vertices are isolated; `n = 0` means "exactly the required order".
pub fn generate(spec: &InstanceSpec) -> Result<Generated> {
    let named = |h: Hypergraph| -> Result<Generated> {
        let n = if spec.n == 0 { h.order() } else { spec.n };
        Ok(Generated { hypergraph: pad(h, n)?, underfilled: false })
    };
    match spec.family {
        Family::Random => random_linear_triangle_free(spec),
        Family::LoosePath => named(loose_path(spec.m_target, spec.r)?),
        Family::LooseCycle => named(loose_cycle(spec.m_target, spec.r)?),
        Family::Matching => named(matching(spec.m_target, spec.r)?),
        Family::Fano => named(fano()),
    }
}
