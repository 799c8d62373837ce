//! Decomposition checking.
//!
//! The target edge set is recomputed from the part list alone; nothing here
//! depends on how the pages were produced.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multipartite::{Page, PartLayout, VertexRef};
use crate::planarity::{is_planar, naive_is_planar, SimpleGraph, NAIVE_VERTEX_LIMIT};

/// Outcome of checking a candidate decomposition. Edges are reported as
/// label pairs, every offending edge listed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub is_partition: bool,
    /// Edges placed more than once, with the (1-based) pages holding them.
    pub duplicate_edges: Vec<DuplicateEdge>,
    pub missing_edges: Vec<[String; 2]>,
    /// Edges not in the target graph (including within-part pairs).
    pub foreign_edges: Vec<[String; 2]>,
    pub pages_planar: Vec<bool>,
    /// Pages where the fast test and the small-graph oracle disagreed.
    pub oracle_disagreements: Vec<usize>,
    pub page_count: usize,
    pub expected_count: Option<usize>,
    pub count_matches: Option<bool>,
    pub overall: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DuplicateEdge {
    pub edge: [String; 2],
    pub pages: Vec<usize>,
}

impl VerificationReport {
    /// One line per problem; empty when the report is clean.
    pub fn problems(&self) -> Vec<String> {
        let mut out = Vec::new();
        for d in &self.duplicate_edges {
            out.push(format!(
                "duplicate edge {}-{} on pages {:?}",
                d.edge[0], d.edge[1], d.pages
            ));
        }
        for e in &self.missing_edges {
            out.push(format!("missing edge {}-{}", e[0], e[1]));
        }
        for e in &self.foreign_edges {
            out.push(format!("foreign edge {}-{}", e[0], e[1]));
        }
        for (i, ok) in self.pages_planar.iter().enumerate() {
            if !ok {
                out.push(format!("page {} is not planar", i + 1));
            }
        }
        for i in &self.oracle_disagreements {
            out.push(format!(
                "page {i}: planarity oracle disagrees with the fast test"
            ));
        }
        if let (Some(false), Some(k)) = (self.count_matches, self.expected_count) {
            out.push(format!(
                "page count {} differs from expected {k}",
                self.page_count
            ));
        }
        out
    }
}

/// Checks labeled pages against the complete multipartite graph on `parts`.
///
/// Labels not appearing in any part are an input error, not a failed check.
pub fn verify_partition(
    parts: &[Vec<String>],
    pages: &[Vec<[String; 2]>],
    expected_count: Option<usize>,
) -> Result<VerificationReport> {
    let mut seen: BTreeSet<&str> = BTreeSet::new();
    for label in parts.iter().flatten() {
        if !seen.insert(label.as_str()) {
            return Err(Error::invalid(format!(
                "label {label} appears in two parts"
            )));
        }
    }
    for label in pages.iter().flatten().flatten() {
        if !seen.contains(label.as_str()) {
            return Err(Error::invalid(format!("unknown vertex label {label}")));
        }
    }
    let mut target = BTreeSet::new();
    for (i, pi) in parts.iter().enumerate() {
        for pj in &parts[i + 1..] {
            for a in pi {
                for b in pj {
                    target.insert(canonical([a.clone(), b.clone()]));
                }
            }
        }
    }
    check(&target, pages, expected_count)
}

/// Checks typed pages against `K_{part_sizes}`.
///
/// Edges between two vertices of the same part, or touching a vertex the
/// layout does not have, are reported as foreign.
pub fn verify_decomposition(
    part_sizes: &[u32],
    pages: &[Page],
    expected_count: Option<usize>,
) -> Result<VerificationReport> {
    let layout = PartLayout::from_sizes(part_sizes)?;
    let target: BTreeSet<[String; 2]> = layout.edges().iter().map(|e| e.labels()).collect();
    let labeled: Vec<Vec<[String; 2]>> = pages
        .iter()
        .map(|p| p.iter().map(|e| e.labels()).collect())
        .collect();
    check(&target, &labeled, expected_count)
}

fn check(
    target: &BTreeSet<[String; 2]>,
    pages: &[Vec<[String; 2]>],
    expected_count: Option<usize>,
) -> Result<VerificationReport> {
    let mut placed: BTreeMap<[String; 2], Vec<usize>> = BTreeMap::new();
    let mut foreign = BTreeSet::new();
    let mut pages_planar = Vec::with_capacity(pages.len());
    let mut disagreements = Vec::new();
    for (pi, page) in pages.iter().enumerate() {
        let mut local = Vec::with_capacity(page.len());
        for e in page {
            let k = canonical(e.clone());
            if !target.contains(&k) {
                foreign.insert(k.clone());
            }
            placed.entry(k.clone()).or_default().push(pi + 1);
            if k[0] != k[1] {
                local.push((k[0].clone(), k[1].clone()));
            }
        }
        let (g, _) = SimpleGraph::from_labeled(local)?;
        let planar = is_planar(&g);
        if g.vertex_count() <= NAIVE_VERTEX_LIMIT && naive_is_planar(&g)? != planar {
            disagreements.push(pi + 1);
        }
        pages_planar.push(planar);
    }

    let duplicate_edges: Vec<DuplicateEdge> = placed
        .iter()
        .filter(|(_, on)| on.len() > 1)
        .map(|(edge, on)| DuplicateEdge {
            edge: edge.clone(),
            pages: on.clone(),
        })
        .collect();
    let missing_edges: Vec<[String; 2]> = target
        .iter()
        .filter(|k| !placed.contains_key(*k))
        .cloned()
        .collect();
    let foreign_edges: Vec<[String; 2]> = foreign.into_iter().collect();

    let is_partition =
        duplicate_edges.is_empty() && missing_edges.is_empty() && foreign_edges.is_empty();
    let count_matches = expected_count.map(|k| k == pages.len());
    let overall = is_partition
        && pages_planar.iter().all(|&b| b)
        && disagreements.is_empty()
        && count_matches.unwrap_or(true);
    Ok(VerificationReport {
        is_partition,
        duplicate_edges,
        missing_edges,
        foreign_edges,
        pages_planar,
        oracle_disagreements: disagreements,
        page_count: pages.len(),
        expected_count,
        count_matches,
        overall,
    })
}

// Label pairs are compared as vertex labels where possible so that typed
// and untyped callers agree on orientation.
fn canonical(mut e: [String; 2]) -> [String; 2] {
    let swap = match (e[0].parse::<VertexRef>(), e[1].parse::<VertexRef>()) {
        (Ok(a), Ok(b)) => a > b,
        _ => e[0] > e[1],
    };
    if swap {
        e.swap(0, 1);
    }
    e
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::base_pages;
    use crate::multipartite::{Edge, VertexRef};

    fn s(x: &str) -> String {
        x.to_string()
    }

    #[test]
    fn base_decomposition_passes() {
        let r = verify_decomposition(&[4, 4], &base_pages(1).unwrap(), Some(2)).unwrap();
        assert!(r.overall, "{:?}", r.problems());
        assert_eq!(r.count_matches, Some(true));
        assert!(r.problems().is_empty());
    }

    #[test]
    fn k5_single_page() {
        let parts: Vec<Vec<String>> = ["a", "b", "c", "d", "e"]
            .iter()
            .map(|l| vec![s(l)])
            .collect();
        let mut page = Vec::new();
        for i in 0..5 {
            for j in i + 1..5 {
                page.push([parts[i][0].clone(), parts[j][0].clone()]);
            }
        }
        let r = verify_partition(&parts, &[page], None).unwrap();
        assert!(r.is_partition);
        assert_eq!(r.pages_planar, [false]);
        assert!(!r.overall);
    }

    #[test]
    fn planted_duplicate_is_reported() {
        let mut pages = base_pages(1).unwrap();
        let e = *pages[0].iter().next().unwrap();
        pages[1].insert(e).unwrap();
        let r = verify_decomposition(&[4, 4], &pages, Some(2)).unwrap();
        assert!(!r.overall && !r.is_partition);
        assert_eq!(r.duplicate_edges.len(), 1);
        assert_eq!(r.duplicate_edges[0].edge, e.labels());
        assert_eq!(r.duplicate_edges[0].pages, [1, 2]);
    }

    #[test]
    fn missing_and_foreign() {
        let mut pages = base_pages(1).unwrap();
        let gone = Edge::of(VertexRef::u(1), VertexRef::v(1));
        assert!(pages[1].remove(&gone));
        pages[1]
            .insert(Edge::of(VertexRef::u(1), VertexRef::u(2)))
            .unwrap();
        pages[1]
            .insert(Edge::of(VertexRef::u(1), VertexRef::v(9)))
            .unwrap();
        let r = verify_decomposition(&[4, 4], &pages, None).unwrap();
        assert_eq!(r.missing_edges, [gone.labels()]);
        assert_eq!(r.foreign_edges, [[s("u1"), s("u2")], [s("u1"), s("v9")]]);
        assert!(!r.overall);
    }

    #[test]
    fn count_mismatch_fails_overall() {
        let r = verify_decomposition(&[4, 4], &base_pages(1).unwrap(), Some(1)).unwrap();
        assert!(r.is_partition);
        assert_eq!(r.count_matches, Some(false));
        assert!(!r.overall);
    }

    #[test]
    fn unknown_label_is_input_error() {
        let parts = vec![vec![s("a")], vec![s("b")]];
        assert!(verify_partition(&parts, &[vec![[s("a"), s("z")]]], None).is_err());
    }

    #[test]
    fn report_round_trips_through_json() {
        let mut pages = base_pages(1).unwrap();
        let e = *pages[0].iter().next().unwrap();
        pages[1].insert(e).unwrap();
        let r = verify_decomposition(&[4, 4], &pages, Some(3)).unwrap();
        let text = serde_json::to_string(&r).unwrap();
        let back: VerificationReport = serde_json::from_str(&text).unwrap();
        assert_eq!(r, back);
    }
}
