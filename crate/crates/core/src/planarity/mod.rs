//! Planarity testing.
//!
//! [`is_planar`] and [`planar_embedding`] use the left-right criterion and
//! run in near-linear time. [`naive_is_planar`] is an exhaustive minor
//! search for small graphs, kept deliberately independent of the fast test
//! so that the two can cross-check each other.

mod embedding;
pub mod graphs;
mod lr;
mod naive;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::multipartite::{Page, VertexRef};

pub use embedding::{validate_embedding, RotationSystem};
pub use naive::{naive_is_planar, NAIVE_VERTEX_LIMIT};

/// Undirected simple graph on vertices `0..vertex_count`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl SimpleGraph {
    pub fn new(vertex_count: usize) -> Self {
        SimpleGraph {
            adj: vec![Vec::new(); vertex_count],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list; loops, repeats and out-of-range
    /// endpoints are errors.
    pub fn from_edges(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut g = SimpleGraph::new(vertex_count);
        for (a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    /// Relabels arbitrary vertex labels to dense indices, in sorted label
    /// order. Repeated edges are collapsed.
    pub fn from_labeled<L: Ord + Clone>(
        edges: impl IntoIterator<Item = (L, L)>,
    ) -> Result<(Self, Vec<L>)> {
        let edges: Vec<(L, L)> = edges.into_iter().collect();
        let mut index: BTreeMap<L, usize> = BTreeMap::new();
        for (a, b) in &edges {
            index.entry(a.clone()).or_insert(0);
            index.entry(b.clone()).or_insert(0);
        }
        for (i, slot) in index.values_mut().enumerate() {
            *slot = i;
        }
        let mut g = SimpleGraph::new(index.len());
        for (a, b) in &edges {
            let (ia, ib) = (index[a], index[b]);
            if ia == ib {
                return Err(Error::invalid("self-loop in edge list"));
            }
            if !g.has_edge(ia, ib) {
                g.add_edge(ia, ib)?;
            }
        }
        Ok((g, index.into_keys().collect()))
    }

    /// The subgraph formed by a page's edges, with its vertex labels.
    pub fn from_page(page: &Page) -> (Self, Vec<VertexRef>) {
        SimpleGraph::from_labeled(page.iter().map(|e| (e.a(), e.b())))
            .expect("page edges are loop-free")
    }

    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        let n = self.adj.len();
        if a >= n || b >= n {
            return Err(Error::invalid(format!(
                "edge ({a},{b}) out of range for {n} vertices"
            )));
        }
        if a == b {
            return Err(Error::invalid(format!("self-loop at {a}")));
        }
        if self.has_edge(a, b) {
            return Err(Error::invalid(format!("repeated edge ({a},{b})")));
        }
        self.adj[a].push(b);
        self.adj[b].push(a);
        self.edge_count += 1;
        Ok(())
    }

    /// Removes an edge if present.
    pub fn remove_edge(&mut self, a: usize, b: usize) -> bool {
        let Some(i) = self.adj.get(a).and_then(|l| l.iter().position(|&x| x == b)) else {
            return false;
        };
        self.adj[a].swap_remove(i);
        let j = self.adj[b]
            .iter()
            .position(|&x| x == a)
            .expect("adjacency is symmetric");
        self.adj[b].swap_remove(j);
        self.edge_count -= 1;
        true
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj.get(a).is_some_and(|l| l.contains(&b))
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges as `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .adj
            .iter()
            .enumerate()
            .flat_map(|(a, l)| l.iter().filter(move |&&b| a < b).map(move |&b| (a, b)))
            .collect();
        out.sort_unstable();
        out
    }

    /// Component id per vertex, and the number of components.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let n = self.adj.len();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    pub fn has_triangle(&self) -> bool {
        for (a, b) in self.edges() {
            let (small, big) = if self.degree(a) <= self.degree(b) {
                (a, b)
            } else {
                (b, a)
            };
            if self.adj[small]
                .iter()
                .any(|&c| c != big && self.has_edge(big, c))
            {
                return true;
            }
        }
        false
    }
}

/// Left-right planarity test. Disconnected graphs are planar iff every
/// component is.
pub fn is_planar(g: &SimpleGraph) -> bool {
    lr::run(g, false).is_some()
}

/// A rotation system certifying planarity, or `None` for non-planar input.
pub fn planar_embedding(g: &SimpleGraph) -> Option<RotationSystem> {
    lr::run(g, true).map(RotationSystem::from_orders)
}

#[cfg(test)]
mod tests {
    use super::graphs::*;
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_graph(rng: &mut ChaCha8Rng, n: usize, density: f64) -> SimpleGraph {
        let mut g = SimpleGraph::new(n);
        for a in 0..n {
            for b in a + 1..n {
                if rng.gen_bool(density) {
                    g.add_edge(a, b).unwrap();
                }
            }
        }
        g
    }

    #[test]
    fn named_graphs() {
        assert!(is_planar(&complete(4)));
        assert!(!is_planar(&complete(5)));
        assert!(!is_planar(&complete_bipartite(3, 3)));
        assert!(is_planar(&octahedron()));
        assert!(!is_planar(&petersen()));
        assert!(is_planar(&grid(3, 3)));
        let mut k33 = complete_bipartite(3, 3);
        k33.remove_edge(0, 3);
        assert!(is_planar(&k33));
        assert!(is_planar(&SimpleGraph::new(0)));
        assert!(is_planar(&SimpleGraph::new(1)));
        assert!(is_planar(&complete(2)));
    }

    #[test]
    fn disconnected_inputs() {
        let mut g = SimpleGraph::new(10);
        for (a, b) in complete(5).edges() {
            g.add_edge(a + 5, b + 5).unwrap();
        }
        assert!(!is_planar(&g));
        let mut h = SimpleGraph::new(12);
        for (a, b) in complete(4).edges() {
            h.add_edge(a, b).unwrap();
            h.add_edge(a + 6, b + 6).unwrap();
        }
        assert!(is_planar(&h));
        assert!(validate_embedding(&h, &planar_embedding(&h).unwrap()).unwrap());
    }

    #[test]
    fn edge_count_guard_agrees() {
        // every graph with E > 3V - 6 is rejected by the full test too
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let n = rng.gen_range(5..=9);
            let g = random_graph(&mut rng, n, 0.85);
            if g.edge_count() > 3 * n - 6 {
                assert!(!is_planar(&g));
                assert!(!naive_is_planar(&g).unwrap());
            }
        }
    }

    #[test]
    fn agrees_with_naive_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x7e57);
        let mut planar = 0;
        for i in 0..1500 {
            let n = rng.gen_range(1..=9);
            let density = rng.gen_range(0.15..0.75);
            let g = random_graph(&mut rng, n, density);
            let fast = is_planar(&g);
            assert_eq!(
                fast,
                naive_is_planar(&g).unwrap(),
                "graph {i}: {:?}",
                g.edges()
            );
            if fast {
                planar += 1;
                let rot = planar_embedding(&g).unwrap();
                assert!(validate_embedding(&g, &rot).unwrap(), "graph {i}");
            } else {
                assert!(planar_embedding(&g).is_none());
            }
        }
        assert!(planar > 300 && planar < 1400, "{planar}");
    }

    #[test]
    fn removing_an_edge_keeps_planarity() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..300 {
            let n = rng.gen_range(4..=12);
            let g = random_graph(&mut rng, n, 0.35);
            if !is_planar(&g) {
                continue;
            }
            for (a, b) in g.edges() {
                let mut h = g.clone();
                h.remove_edge(a, b);
                assert!(is_planar(&h));
            }
        }
    }

    #[test]
    fn maximal_planar_and_one_more() {
        // triangulated wheel plus one chord is non-planar
        let mut g = wheel(8);
        assert!(is_planar(&g));
        for v in 2..7 {
            g.add_edge(1, v + 1).ok();
        }
        assert!(is_planar(&g));
        assert_eq!(g.edge_count(), 3 * 9 - 6);
        let missing = (3..9).find(|&v| !g.has_edge(2, v)).unwrap();
        g.add_edge(2, missing).unwrap();
        assert!(!is_planar(&g));
    }

    #[test]
    fn labeled_construction() {
        let (g, labels) = SimpleGraph::from_labeled([("b", "a"), ("a", "c"), ("b", "a")]).unwrap();
        assert_eq!(labels, ["a", "b", "c"]);
        assert_eq!(g.edge_count(), 2);
        assert!(SimpleGraph::from_labeled([("a", "a")]).is_err());
        assert!(SimpleGraph::from_edges(2, [(0, 2)]).is_err());
        assert!(SimpleGraph::from_edges(2, [(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn triangles() {
        assert!(complete(3).has_triangle());
        assert!(!complete_bipartite(4, 4).has_triangle());
        assert!(!grid(3, 3).has_triangle());
        assert!(!petersen().has_triangle());
    }
}
