//! Structural predicates: uniformity, linearity, triangle-freeness, double
//! linearity and the maximum degree inside vertex neighborhoods.
//!
//! Every failed predicate comes with a witness that can be re-checked
//! against the hypergraph independently.

use std::collections::HashMap;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Uniformity {
    /// No edges: r-uniform for every r.
    Vacuous,
    Uniform(usize),
    Mixed,
}

impl Uniformity {
    pub fn admits(self, r: usize) -> bool {
        match self {
            Uniformity::Vacuous => true,
            Uniformity::Uniform(s) => s == r,
            Uniformity::Mixed => false,
        }
    }
}

impl Serialize for Uniformity {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Uniformity::Vacuous => s.serialize_str("vacuous"),
            Uniformity::Uniform(r) => s.serialize_u64(*r as u64),
            Uniformity::Mixed => s.serialize_none(),
        }
    }
}

pub fn is_uniform(h: &Hypergraph) -> Uniformity {
    let mut sizes = h.edges().iter().map(Vec::len);
    match sizes.next() {
        None => Uniformity::Vacuous,
        Some(r) if sizes.all(|s| s == r) => Uniformity::Uniform(r),
        Some(_) => Uniformity::Mixed,
    }
}

/// Two distinct edges sharing at least two vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinearityWitness {
    pub edges: [Vec<Vertex>; 2],
}

/// Vertices `u1 < u2 < u3` and distinct edges with `{u1,u2,u3} ∖ {ui} ⊆ edges[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TriangleWitness {
    pub vertices: [Vertex; 3],
    pub edges: [Vec<Vertex>; 3],
}

/// Non-adjacent `u`, `v` and an edge through `u` holding two neighbors of `v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DoubleLinearWitness {
    pub u: Vertex,
    pub v: Vertex,
    pub edge: Vec<Vertex>,
    pub neighbors_of_v: [Vertex; 2],
}

pub fn linearity_witness(h: &Hypergraph) -> Option<LinearityWitness> {
    let mut owner: HashMap<(Vertex, Vertex), usize> = HashMap::new();
    for (i, e) in h.edges().iter().enumerate() {
        for (a, &p) in e.iter().enumerate() {
            for &q in &e[a + 1..] {
                if let Some(&j) = owner.get(&(p, q)) {
                    return Some(LinearityWitness {
                        edges: [h.edge(j).to_vec(), e.clone()],
                    });
                }
                owner.insert((p, q), i);
            }
        }
    }
    None
}

pub fn is_linear(h: &Hypergraph) -> bool {
    linearity_witness(h).is_none()
}

/// Map from each adjacent pair `(p, q)`, `p < q`, to the edges containing it.
fn pair_index(h: &Hypergraph) -> HashMap<(Vertex, Vertex), Vec<usize>> {
    let mut idx: HashMap<(Vertex, Vertex), Vec<usize>> = HashMap::new();
    for (i, e) in h.edges().iter().enumerate() {
        for (a, &p) in e.iter().enumerate() {
            for &q in &e[a + 1..] {
                idx.entry((p, q)).or_default().push(i);
            }
        }
    }
    idx
}

pub fn triangle_witness(h: &Hypergraph) -> Option<TriangleWitness> {
    let pairs = pair_index(h);
    for a in h.vertices() {
        let na = h.neighbors_unchecked(a);
        let upper = &na[na.partition_point(|&v| v <= a)..];
        for (i, &b) in upper.iter().enumerate() {
            for &c in &upper[i + 1..] {
                let Some(bc) = pairs.get(&(b, c)) else { continue };
                let ab = &pairs[&(a, b)];
                let ac = &pairs[&(a, c)];
                // Linear inputs have one edge per pair; otherwise try all choices.
                for &e1 in bc {
                    for &e2 in ac {
                        if e2 == e1 {
                            continue;
                        }
                        if let Some(&e3) = ab.iter().find(|&&e3| e3 != e1 && e3 != e2) {
                            return Some(TriangleWitness {
                                vertices: [a, b, c],
                                edges: [h.edge(e1).to_vec(), h.edge(e2).to_vec(), h.edge(e3).to_vec()],
                            });
                        }
                    }
                }
            }
        }
    }
    None
}

pub fn is_triangle_free(h: &Hypergraph) -> bool {
    triangle_witness(h).is_none()
}

/// Errors with [`Error::NotLinear`] on non-linear input, since double
/// linearity is only defined for linear hypergraphs.
pub fn double_linear_witness(h: &Hypergraph) -> Result<Option<DoubleLinearWitness>> {
    if !is_linear(h) {
        return Err(Error::NotLinear);
    }
    let mut is_nb = vec![false; h.order()];
    for v in h.vertices() {
        let nv = h.neighbors_unchecked(v);
        for &w in nv {
            is_nb[w] = true;
        }
        for e in h.edges() {
            if e.binary_search(&v).is_ok() {
                continue;
            }
            let mut hits = e.iter().copied().filter(|&w| is_nb[w]);
            let (Some(w1), Some(w2)) = (hits.next(), hits.next()) else {
                continue;
            };
            if let Some(&u) = e.iter().find(|&&u| !is_nb[u]) {
                for &w in nv {
                    is_nb[w] = false;
                }
                return Ok(Some(DoubleLinearWitness {
                    u,
                    v,
                    edge: e.clone(),
                    neighbors_of_v: [w1, w2],
                }));
            }
        }
        for &w in nv {
            is_nb[w] = false;
        }
    }
    Ok(None)
}

pub fn is_double_linear(h: &Hypergraph) -> Result<bool> {
    Ok(double_linear_witness(h)?.is_none())
}

/// Max over `u` of the maximum degree of the subhypergraph induced by `N(u)`,
/// i.e. counting only edges lying entirely inside `N(u)`.
pub fn neighborhood_max_degree(h: &Hypergraph) -> usize {
    let mut in_nb = vec![false; h.order()];
    let mut deg = vec![0usize; h.order()];
    let mut best = 0;
    for u in h.vertices() {
        let nu = h.neighbors_unchecked(u);
        for &w in nu {
            in_nb[w] = true;
        }
        for &w in nu {
            for &i in h.incidence_unchecked(w) {
                let e = h.edge(i);
                // Count each inside edge once, from its smallest vertex.
                if e[0] == w && e.iter().all(|&z| in_nb[z]) {
                    for &z in e {
                        deg[z] += 1;
                    }
                }
            }
        }
        for &w in nu {
            best = best.max(deg[w]);
            deg[w] = 0;
            in_nb[w] = false;
        }
    }
    best
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Witnesses {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub linear: Option<LinearityWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub triangle: Option<TriangleWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub double_linear: Option<DoubleLinearWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub uniform_r: Uniformity,
    pub linear: bool,
    pub triangle_free: bool,
    /// False for non-linear input.
    pub double_linear: bool,
    #[serde(rename = "nbhd_max_degree")]
    pub neighborhood_max_degree: usize,
    pub witness: Witnesses,
}

impl PropertyReport {
    pub fn of(h: &Hypergraph) -> Self {
        let lin = linearity_witness(h);
        let tri = triangle_witness(h);
        let dl = match &lin {
            None => double_linear_witness(h).expect("linear"),
            Some(_) => None,
        };
        PropertyReport {
            uniform_r: is_uniform(h),
            linear: lin.is_none(),
            triangle_free: tri.is_none(),
            double_linear: lin.is_none() && dl.is_none(),
            neighborhood_max_degree: neighborhood_max_degree(h),
            witness: Witnesses {
                linear: lin,
                triangle: tri,
                double_linear: dl,
            },
        }
    }

    /// Whether the input is r-uniform (for its inferred r), linear and triangle-free.
    pub fn satisfies_hypotheses(&self) -> bool {
        self.uniform_r != Uniformity::Mixed && self.linear && self.triangle_free
    }
}

/// Checks the three hypotheses of the main bound in order, reporting the first failure.
pub fn check_hypotheses(h: &Hypergraph, r: usize) -> Result<()> {
    use crate::error::Hypothesis;
    if !is_uniform(h).admits(r) {
        return Err(Error::HypothesisViolated(Hypothesis::Uniform));
    }
    if !is_linear(h) {
        return Err(Error::HypothesisViolated(Hypothesis::Linear));
    }
    if !is_triangle_free(h) {
        return Err(Error::HypothesisViolated(Hypothesis::TriangleFree));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hg(n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(n, edges.iter().map(|e| e.to_vec())).unwrap()
    }

    fn fano() -> Hypergraph {
        hg(
            7,
            &[&[0, 1, 2], &[0, 3, 4], &[0, 5, 6], &[1, 3, 5], &[1, 4, 6], &[2, 3, 6], &[2, 4, 5]],
        )
    }

    fn path() -> Hypergraph {
        hg(5, &[&[0, 1, 2], &[2, 3, 4]])
    }

    /// Literal definition: three distinct vertices, three distinct edges.
    fn brute_triangle(h: &Hypergraph) -> bool {
        let n = h.order();
        let m = h.size();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    let u = [a, b, c];
                    for e1 in 0..m {
                        for e2 in 0..m {
                            for e3 in 0..m {
                                if e1 == e2 || e2 == e3 || e1 == e3 {
                                    continue;
                                }
                                let es = [e1, e2, e3];
                                let ok = (0..3).all(|i| {
                                    (0..3)
                                        .filter(|&j| j != i)
                                        .all(|j| h.edge(es[i]).contains(&u[j]))
                                });
                                if ok {
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

    #[test]
    fn uniformity() {
        assert_eq!(is_uniform(&hg(3, &[&[0, 1, 2]])), Uniformity::Uniform(3));
        assert_eq!(is_uniform(&hg(5, &[&[0, 1, 2], &[3, 4]])), Uniformity::Mixed);
        assert_eq!(is_uniform(&Hypergraph::empty(4)), Uniformity::Vacuous);
        assert!(Uniformity::Vacuous.admits(7));
    }

    #[test]
    fn linearity() {
        assert!(is_linear(&path()));
        let w = linearity_witness(&hg(4, &[&[0, 1, 2], &[0, 1, 3]])).unwrap();
        assert_eq!(w.edges, [vec![0, 1, 2], vec![0, 1, 3]]);
        let f = fano();
        for i in 0..7 {
            for j in i + 1..7 {
                let shared = f.edge(i).iter().filter(|v| f.edge(j).contains(v)).count();
                assert!(shared <= 1);
            }
        }
        assert!(is_linear(&f));
    }

    #[test]
    fn triangles() {
        assert!(is_triangle_free(&path()));
        assert!(!brute_triangle(&path()));

        let cyc = hg(6, &[&[0, 1, 2], &[2, 3, 4], &[4, 5, 0]]);
        let w = triangle_witness(&cyc).unwrap();
        assert_eq!(w.vertices, [0, 2, 4]);
        assert!(brute_triangle(&cyc));

        assert!(!is_triangle_free(&fano()));
        assert!(brute_triangle(&fano()));
        // Non-linear: the shared pair alone is not a triangle.
        let nl = hg(4, &[&[0, 1, 2], &[0, 1, 3]]);
        assert_eq!(is_triangle_free(&nl), !brute_triangle(&nl));
        // Graph triangle.
        assert!(!is_triangle_free(&hg(3, &[&[0, 1], &[1, 2], &[0, 2]])));
    }

    #[test]
    fn nonlinear_triangle_needs_distinct_edges() {
        // Two edges cover all three pairs of {0,1,2} but not with three distinct edges.
        let h = hg(4, &[&[0, 1, 2], &[0, 1, 3]]);
        assert!(is_triangle_free(&h));
        // Adding {1,2} as its own edge gives three distinct edges.
        let h = hg(4, &[&[0, 1, 3], &[0, 2], &[1, 2]]);
        assert!(!is_triangle_free(&h));
        assert!(brute_triangle(&h));
    }

    #[test]
    fn triangle_matches_brute_force_on_small_families() {
        let cases = vec![
            hg(4, &[&[0, 1], &[1, 2], &[2, 3], &[3, 0]]),
            hg(4, &[&[0, 1], &[1, 2], &[2, 0], &[2, 3]]),
            hg(6, &[&[0, 1, 2], &[2, 3, 4], &[4, 5, 0], &[1, 3, 5]]),
            hg(7, &[&[0, 1, 2], &[0, 3, 4], &[1, 3, 5], &[2, 4, 6]]),
            hg(5, &[&[0, 1, 2, 3], &[1, 2, 4], &[0, 3, 4]]),
        ];
        for h in &cases {
            assert_eq!(is_triangle_free(h), !brute_triangle(h), "{:?}", h.edges());
        }
    }

    #[test]
    fn double_linearity() {
        assert!(is_double_linear(&hg(3, &[&[0, 1, 2]])).unwrap());
        assert!(is_double_linear(&path()).unwrap());
        let h = hg(6, &[&[0, 1, 2], &[3, 1, 4], &[3, 2, 5]]);
        let w = double_linear_witness(&h).unwrap().unwrap();
        let nv = h.neighborhood(w.v).unwrap();
        assert!(h.has_edge(&w.edge));
        assert!(w.edge.contains(&w.u) && !w.edge.contains(&w.v));
        assert!(!nv.contains(&w.u));
        assert!(w.neighbors_of_v.iter().all(|z| nv.contains(z) && w.edge.contains(z)));
        assert!(matches!(
            is_double_linear(&hg(4, &[&[0, 1, 2], &[0, 1, 3]])),
            Err(Error::NotLinear)
        ));
    }

    #[test]
    fn neighborhood_degrees() {
        assert_eq!(neighborhood_max_degree(&path()), 0);
        assert_eq!(neighborhood_max_degree(&Hypergraph::empty(3)), 0);
        let f = fano();
        // Point 0's neighborhood is everything else; lines avoiding 0 lie inside it.
        assert!(neighborhood_max_degree(&f) >= 1);
        assert_eq!(neighborhood_max_degree(&f), 2);
    }

    #[test]
    fn report_json_field_names() {
        let v = serde_json::to_value(PropertyReport::of(&fano())).unwrap();
        for key in ["uniform_r", "linear", "triangle_free", "double_linear", "nbhd_max_degree", "witness"] {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert_eq!(v["uniform_r"], 3);
        assert_eq!(v["triangle_free"], false);
        assert!(v["witness"]["triangle"].is_object());
        let e = serde_json::to_value(PropertyReport::of(&Hypergraph::empty(2))).unwrap();
        assert_eq!(e["uniform_r"], "vacuous");
        let mixed = serde_json::to_value(PropertyReport::of(&hg(3, &[&[0, 1, 2], &[0, 1]]))).unwrap();
        assert!(mixed["uniform_r"].is_null());
    }
}
