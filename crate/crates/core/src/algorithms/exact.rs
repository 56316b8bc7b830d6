//! Exact independence number by branch and bound.
//!
//! Vertices are `In`, `Out` or undecided. An edge is *open* while none of its
//! vertices is `Out`. The search branches on the maximum-degree undecided
//! vertex of an open edge with the fewest undecided vertices; when no open
//! edge is left, every undecided vertex can join the set.

use crate::hypergraph::{Hypergraph, Vertex};

pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaResult {
    /// `α(H)` when `exact`, otherwise the best lower bound found.
    pub alpha: usize,
    pub set: Vec<Vertex>,
    pub exact: bool,
    pub nodes: u64,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum State {
    Undecided,
    In,
    Out,
}

struct Search<'a> {
    h: &'a Hypergraph,
    degree: Vec<usize>,
    state: Vec<State>,
    undecided_in_edge: Vec<usize>,
    out_in_edge: Vec<usize>,
    in_count: usize,
    undecided: usize,
    best: Vec<Vertex>,
    nodes: u64,
    budget: u64,
    aborted: bool,
}

impl<'a> Search<'a> {
    fn new(h: &'a Hypergraph, budget: u64) -> Self {
        Search {
            h,
            degree: h.degrees(),
            state: vec![State::Undecided; h.order()],
            undecided_in_edge: h.edges().iter().map(Vec::len).collect(),
            out_in_edge: vec![0; h.size()],
            in_count: 0,
            undecided: h.order(),
            best: Vec::new(),
            nodes: 0,
            budget,
            aborted: false,
        }
    }

    fn assign(&mut self, v: Vertex, s: State) {
        self.state[v] = s;
        self.undecided -= 1;
        for &e in self.h.incidence_unchecked(v) {
            self.undecided_in_edge[e] -= 1;
            if s == State::Out {
                self.out_in_edge[e] += 1;
            }
        }
        if s == State::In {
            self.in_count += 1;
        }
    }

    fn unassign(&mut self, v: Vertex) {
        let s = self.state[v];
        self.state[v] = State::Undecided;
        self.undecided += 1;
        for &e in self.h.incidence_unchecked(v) {
            self.undecided_in_edge[e] += 1;
            if s == State::Out {
                self.out_in_edge[e] -= 1;
            }
        }
        if s == State::In {
            self.in_count -= 1;
        }
    }

    /// Putting `v` in would fill an open edge.
    fn completes_edge(&self, v: Vertex) -> bool {
        self.h
            .incidence_unchecked(v)
            .iter()
            .any(|&e| self.out_in_edge[e] == 0 && self.undecided_in_edge[e] == 1)
    }

    /// Upper bound: undecided vertices minus a greedy packing of open edges
    /// that are disjoint on their undecided vertices.
    fn upper_bound(&self) -> usize {
        let mut used = vec![false; self.h.order()];
        let mut packed = 0;
        for (e, edge) in self.h.edges().iter().enumerate() {
            if self.out_in_edge[e] > 0 {
                continue;
            }
            let mut free = edge.iter().filter(|&&v| self.state[v] == State::Undecided);
            if free.clone().all(|&v| !used[v]) {
                for &v in free.by_ref() {
                    used[v] = true;
                }
                packed += 1;
            }
        }
        self.in_count + self.undecided - packed
    }

    fn record(&mut self) {
        let size = self.in_count + self.undecided;
        if size > self.best.len() {
            self.best = (0..self.h.order()).filter(|&v| self.state[v] != State::Out).collect();
        }
    }

    fn branch_vertex(&self) -> Option<Vertex> {
        let mut chosen: Option<usize> = None;
        for e in 0..self.h.size() {
            if self.out_in_edge[e] > 0 {
                continue;
            }
            let k = self.undecided_in_edge[e];
            if chosen.is_none_or(|c| k < self.undecided_in_edge[c]) {
                chosen = Some(e);
            }
        }
        let e = chosen?;
        self.h
            .edge(e)
            .iter()
            .copied()
            .filter(|&v| self.state[v] == State::Undecided)
            .max_by(|&a, &b| self.degree[a].cmp(&self.degree[b]).then(b.cmp(&a)))
    }

    fn run(&mut self) {
        if self.aborted {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            self.aborted = true;
            return;
        }
        let Some(v) = self.branch_vertex() else {
            self.record();
            return;
        };
        if self.upper_bound() <= self.best.len() {
            return;
        }
        if !self.completes_edge(v) {
            self.assign(v, State::In);
            self.run();
            self.unassign(v);
        }
        self.assign(v, State::Out);
        self.run();
        self.unassign(v);
    }
}

/// Maximal independent set by first-fit, used to seed the search.
fn first_fit(h: &Hypergraph) -> Vec<Vertex> {
    let mut missing: Vec<usize> = h.edges().iter().map(Vec::len).collect();
    let mut set = Vec::new();
    for v in h.vertices() {
        let inc = h.incidence_unchecked(v);
        if inc.iter().all(|&e| missing[e] > 1) {
            for &e in inc {
                missing[e] -= 1;
            }
            set.push(v);
        }
    }
    set
}

/// `α(H)` with an optimal set, or the best set found within `budget` search nodes.
pub fn exact_alpha(h: &Hypergraph, budget: u64) -> AlphaResult {
    let mut search = Search::new(h, budget);
    search.best = first_fit(h);
    search.run();
    AlphaResult {
        alpha: search.best.len(),
        exact: !search.aborted,
        nodes: search.nodes,
        set: search.best,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algorithms::verify_independent;

    fn brute_alpha(h: &Hypergraph) -> usize {
        let n = h.order();
        let masks: Vec<u32> = h.edges().iter().map(|e| e.iter().map(|&v| 1u32 << v).sum()).collect();
        (0u32..1 << n)
            .filter(|s| masks.iter().all(|m| s & m != *m))
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    fn fano() -> Hypergraph {
        Hypergraph::new(
            7,
            [[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [1, 4, 6], [2, 3, 6], [2, 4, 5]],
        )
        .unwrap()
    }

    #[test]
    fn named_instances() {
        let single = Hypergraph::new(3, [vec![0, 1, 2]]).unwrap();
        assert_eq!(exact_alpha(&single, DEFAULT_BUDGET).alpha, 2);
        let f = exact_alpha(&fano(), DEFAULT_BUDGET);
        assert!(f.exact);
        assert_eq!(f.alpha, 4);
        assert_eq!(brute_alpha(&fano()), 4);
        assert!(verify_independent(&fano(), &f.set).unwrap().holds());
        let path = Hypergraph::new(5, [vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
        assert_eq!(exact_alpha(&path, DEFAULT_BUDGET).alpha, 4);
        assert_eq!(brute_alpha(&path), 4);
    }

    #[test]
    fn degenerate_inputs() {
        assert_eq!(exact_alpha(&Hypergraph::empty(0), 10).alpha, 0);
        assert_eq!(exact_alpha(&Hypergraph::empty(4), 10).alpha, 4);
        let loops = Hypergraph::new(3, [vec![0], vec![1, 2]]).unwrap();
        let res = exact_alpha(&loops, 100);
        assert_eq!(res.alpha, 1);
        assert!(!res.set.contains(&0));
    }

    #[test]
    fn matches_enumeration_on_mixed_edges() {
        let h = Hypergraph::new(
            9,
            [vec![0, 1], vec![1, 2, 3], vec![3, 4, 5, 6], vec![0, 6], vec![5, 7, 8], vec![2, 8], vec![4, 7]],
        )
        .unwrap();
        let res = exact_alpha(&h, DEFAULT_BUDGET);
        assert!(res.exact);
        assert_eq!(res.alpha, brute_alpha(&h));
        assert!(verify_independent(&h, &res.set).unwrap().holds());
    }

    #[test]
    fn budget_exhaustion_is_flagged() {
        let h = Hypergraph::new(
            12,
            (0..12).flat_map(|a| ((a + 1)..12).map(move |b| vec![a, b])),
        )
        .unwrap();
        let res = exact_alpha(&h, 2);
        assert!(!res.exact);
        assert!(res.alpha >= 1);
        assert!(verify_independent(&h, &res.set).unwrap().holds());
    }
}
