//! Exhaustive thickness search for small graphs.
//!
//! Page counts are tried upward from the Euler bound. For each count the
//! edges are assigned one at a time, highest endpoint-degree sum first, and
//! a branch is cut as soon as its page stops being planar. A new page is
//! only opened right after the highest one in use, which removes page
//! relabelings. Every assignment tried counts as one node against the
//! budget.

use serde::{Deserialize, Serialize};

use crate::planarity::{is_planar, SimpleGraph};

pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", content = "value", rename_all = "snake_case")]
pub enum OracleKind {
    /// The thickness, with a witness.
    Exact(u32),
    /// Every count up to `k_max` was refuted; the thickness is at least this.
    LowerBoundOnly(u32),
    /// The node budget ran out before a count was settled.
    BudgetExhausted,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleResult {
    pub kind: OracleKind,
    /// Largest value proven to be a lower bound.
    pub lower_bound: u32,
    pub nodes_explored: u64,
    /// Pages as edge lists over the input's vertex indices, for `Exact`.
    pub witness: Option<Vec<Vec<(usize, usize)>>>,
}

/// `ceil(E / (3V - 6))`, or `ceil(E / (2V - 4))` for triangle-free graphs,
/// over non-isolated vertices; 0 without edges, and at least 1 otherwise.
pub fn thickness_lower_bound(g: &SimpleGraph) -> u32 {
    let e = g.edge_count() as u64;
    if e == 0 {
        return 0;
    }
    let v = (0..g.vertex_count()).filter(|&x| g.degree(x) > 0).count() as u64;
    if v < 3 {
        return 1;
    }
    let per_page = if g.has_triangle() {
        3 * v - 6
    } else {
        2 * v - 4
    };
    e.div_ceil(per_page).max(1) as u32
}

enum Search {
    Found(Vec<Vec<(usize, usize)>>),
    Refuted,
    OutOfBudget,
}

struct Dfs<'a> {
    edges: &'a [(usize, usize)],
    pages: Vec<SimpleGraph>,
    nodes: u64,
    budget: u64,
}

impl Dfs<'_> {
    fn run(&mut self, i: usize, used: usize) -> Search {
        if i == self.edges.len() {
            return Search::Found(self.pages[..used].iter().map(SimpleGraph::edges).collect());
        }
        let (a, b) = self.edges[i];
        let limit = (used + 1).min(self.pages.len());
        for j in 0..limit {
            if self.nodes >= self.budget {
                return Search::OutOfBudget;
            }
            self.nodes += 1;
            self.pages[j].add_edge(a, b).expect("edge list is simple");
            if is_planar(&self.pages[j]) {
                match self.run(i + 1, used.max(j + 1)) {
                    Search::Refuted => {}
                    done => return done,
                }
            }
            self.pages[j].remove_edge(a, b);
        }
        Search::Refuted
    }
}

/// Thickness of `g` if it is at most `k_max` and the search fits in
/// `node_budget` nodes.
pub fn exact_thickness(g: &SimpleGraph, k_max: u32, node_budget: u64) -> OracleResult {
    let start = thickness_lower_bound(g);
    if start == 0 {
        return OracleResult {
            kind: OracleKind::Exact(0),
            lower_bound: 0,
            nodes_explored: 0,
            witness: Some(Vec::new()),
        };
    }
    let mut edges = g.edges();
    edges.sort_by_key(|&(a, b)| std::cmp::Reverse(g.degree(a) + g.degree(b)));
    let mut nodes = 0;
    let mut lower = start;
    for k in start..=k_max {
        let mut dfs = Dfs {
            edges: &edges,
            pages: (0..k).map(|_| SimpleGraph::new(g.vertex_count())).collect(),
            nodes,
            budget: node_budget,
        };
        let outcome = dfs.run(0, 0);
        nodes = dfs.nodes;
        match outcome {
            Search::Found(witness) => {
                return OracleResult {
                    kind: OracleKind::Exact(k),
                    lower_bound: k,
                    nodes_explored: nodes,
                    witness: Some(witness),
                }
            }
            Search::Refuted => lower = k + 1,
            Search::OutOfBudget => {
                return OracleResult {
                    kind: OracleKind::BudgetExhausted,
                    lower_bound: lower,
                    nodes_explored: nodes,
                    witness: None,
                }
            }
        }
    }
    OracleResult {
        kind: OracleKind::LowerBoundOnly(lower),
        lower_bound: lower,
        nodes_explored: nodes,
        witness: None,
    }
}
