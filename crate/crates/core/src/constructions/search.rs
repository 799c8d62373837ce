//! Seeded randomized search for planar decompositions of small graphs.
//!
//! Used to look for decompositions of sizes without a recipe. The search is
//! a restarted greedy: edges are shuffled and each goes to the first page
//! (in a shuffled order) that stays planar. It finds nothing it cannot
//! verify, and a failure says nothing about the thickness.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::planarity::{is_planar, SimpleGraph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    /// Edge lists of the pages, when a decomposition was found.
    pub pages: Option<Vec<Vec<(usize, usize)>>>,
    pub attempts: u32,
}

/// Tries up to `attempts` greedy passes to split `g` into `k` planar pages.
pub fn greedy_search(g: &SimpleGraph, k: usize, attempts: u32, seed: u64) -> SearchOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = g.edges();
    let n = g.vertex_count();
    for attempt in 1..=attempts {
        edges.shuffle(&mut rng);
        let mut pages: Vec<SimpleGraph> = (0..k).map(|_| SimpleGraph::new(n)).collect();
        let mut order: Vec<usize> = (0..k).collect();
        let mut ok = true;
        for &(a, b) in &edges {
            order.shuffle(&mut rng);
            let placed = order.iter().any(|&i| {
                pages[i].add_edge(a, b).expect("edges of a simple graph");
                if is_planar(&pages[i]) {
                    true
                } else {
                    pages[i].remove_edge(a, b);
                    false
                }
            });
            if !placed {
                ok = false;
                break;
            }
        }
        if ok {
            return SearchOutcome {
                pages: Some(pages.iter().map(SimpleGraph::edges).collect()),
                attempts: attempt,
            };
        }
    }
    SearchOutcome {
        pages: None,
        attempts,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planarity::graphs;

    #[test]
    fn finds_two_pages_for_k7() {
        let g = graphs::complete(7);
        let out = greedy_search(&g, 2, 200, 7);
        let pages = out.pages.expect("K7 has thickness 2");
        assert_eq!(pages.iter().map(Vec::len).sum::<usize>(), 21);
        for p in &pages {
            assert!(is_planar(
                &SimpleGraph::from_edges(7, p.iter().copied()).unwrap()
            ));
        }
    }

    #[test]
    fn deterministic_for_a_seed() {
        let g = graphs::complete_bipartite(5, 5);
        assert_eq!(greedy_search(&g, 2, 50, 3), greedy_search(&g, 2, 50, 3));
    }

    #[test]
    fn one_page_of_k5_fails() {
        let out = greedy_search(&graphs::complete(5), 1, 5, 0);
        assert_eq!(out.pages, None);
        assert_eq!(out.attempts, 5);
    }
}
