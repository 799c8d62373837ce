//! Fixtures shared by the benchmarks.

use thickness_core::constructions::generate;
use thickness_core::{GraphFamily, SimpleGraph};

/// The largest page of a generated decomposition, as a graph.
pub fn largest_page(family: &GraphFamily, n: u32) -> SimpleGraph {
    let d = generate(family, n).expect("supported size");
    let page = d
        .pages
        .iter()
        .max_by_key(|p| p.len())
        .expect("at least one page");
    SimpleGraph::from_page(page).0
}
