//! Instance corpora and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashSet;
use std::path::PathBuf;

use hyperind::generators::{loose_cycle, loose_path, matching, generate, fano, Family, InstanceSpec};
use hyperind::Hypergraph;
use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;

pub struct Instance {
    pub name: String,
    pub r: usize,
    pub h: Hypergraph,
}

impl Instance {
    fn new(name: impl Into<String>, r: usize, h: Hypergraph) -> Self {
        Instance { name: name.into(), r, h }
    }
}

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("corpus")
}

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

/// Seeded random instances satisfying the hypotheses: `count` of them with
/// `r` cycling through 2, 3, 4 and `n` between `r` and `n_max`.
pub fn random_instances(count: usize, n_max: usize) -> Vec<Instance> {
    (0..count)
        .map(|i| {
            let r = 2 + i % 3;
            let n = r + (i * 7919) % (n_max - r + 1);
            let m = 1 + (i * 31) % (2 * n / r + 1);
            let spec = InstanceSpec { family: Family::Random, n, r, m_target: m, seed: 1000 + i as u64 };
            let g = generate(&spec).unwrap();
            Instance::new(format!("random(n={n},r={r},m={m},seed={})", spec.seed), r, g.hypergraph)
        })
        .collect()
}

pub fn loose_paths(k_max: usize, r_max: usize) -> Vec<Instance> {
    let mut out = Vec::new();
    for k in 1..=k_max {
        for r in 2..=r_max {
            out.push(Instance::new(format!("loose_path({k},{r})"), r, loose_path(k, r).unwrap()));
        }
    }
    out
}

pub fn matchings(k_max: usize, r_max: usize) -> Vec<Instance> {
    let mut out = Vec::new();
    for k in 1..=k_max {
        for r in 2..=r_max {
            out.push(Instance::new(format!("matching({k},{r})"), r, matching(k, r).unwrap()));
        }
    }
    out
}

/// Linear r-uniform instances that may contain triangles: loose cycles, the
/// Fano plane and random linear hypergraphs drawn without the triangle filter.
pub fn linear_with_triangles() -> Vec<Instance> {
    let mut out = vec![Instance::new("fano", 3, fano())];
    for k in 3..=8 {
        for r in 2..=4 {
            out.push(Instance::new(format!("loose_cycle({k},{r})"), r, loose_cycle(k, r).unwrap()));
        }
    }
    for seed in 0..60u64 {
        let r = 2 + (seed % 3) as usize;
        let n = 6 + (seed as usize * 5) % 20;
        let m = 2 + (seed as usize * 3) % (n + 1);
        out.push(Instance::new(format!("random_linear(n={n},r={r},seed={seed})"), r, random_linear(n, r, m, seed)));
    }
    out
}

/// Rejection sampler for linear r-uniform hypergraphs, independent of the library generator.
pub fn random_linear(n: usize, r: usize, m: usize, seed: u64) -> Hypergraph {
    let mut rng = Xoshiro256StarStar::seed_from_u64(seed ^ 0x5eed);
    let mut covered = HashSet::new();
    let mut edges = Vec::new();
    let mut tries = 0;
    while edges.len() < m && tries < 200 * m {
        tries += 1;
        let mut e: Vec<usize> = Vec::new();
        while e.len() < r {
            let v = (rng.next_u64() % n as u64) as usize;
            if !e.contains(&v) {
                e.push(v);
            }
        }
        e.sort_unstable();
        let pairs: Vec<(usize, usize)> =
            (0..r).flat_map(|i| ((i + 1)..r).map(move |j| (i, j))).map(|(i, j)| (e[i], e[j])).collect();
        if pairs.iter().any(|p| covered.contains(p)) {
            continue;
        }
        covered.extend(pairs);
        edges.push(e);
    }
    Hypergraph::new(n, edges).unwrap()
}

/// The `.hg` files under `tests/corpus` that parse.
pub fn file_corpus() -> Vec<(String, Hypergraph)> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(corpus_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "hg"))
        .collect();
    paths.sort();
    paths
        .into_iter()
        .filter_map(|p| {
            let h = hyperind::format::read_file(&p).ok()?;
            Some((p.file_name().unwrap().to_string_lossy().into_owned(), h))
        })
        .collect()
}

/// `α(H)` by enumerating all `2^n` vertex subsets.
pub fn brute_alpha(h: &Hypergraph) -> usize {
    let n = h.order();
    assert!(n <= 24, "enumeration oracle is for small instances");
    let masks: Vec<u32> = h.edges().iter().map(|e| e.iter().map(|&v| 1u32 << v).sum()).collect();
    (0u32..1 << n)
        .filter(|s| masks.iter().all(|m| s & m != *m))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Triangle detection by trying every vertex triple and every choice of three distinct edges.
pub fn brute_has_triangle(h: &Hypergraph) -> bool {
    let n = h.order();
    let covering = |a: usize, b: usize| -> Vec<usize> {
        (0..h.size()).filter(|&i| h.edge(i).contains(&a) && h.edge(i).contains(&b)).collect()
    };
    for a in 0..n {
        for b in a + 1..n {
            let ab = covering(a, b);
            if ab.is_empty() {
                continue;
            }
            for c in b + 1..n {
                let (bc, ca) = (covering(b, c), covering(c, a));
                for &x in &ab {
                    for &y in &bc {
                        for &z in &ca {
                            if x != y && y != z && x != z {
                                return true;
                            }
                        }
                    }
                }
            }
        }
    }
    false
}
