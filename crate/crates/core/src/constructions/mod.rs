//! Decomposition generators.
//!
//! Every family is reached through an anchor size with a direct
//! construction, followed by vertex deletion:
//!
//! * `K_{1,n,n}` anchors at `m = 4p + 2`, built by [`k1_anchor`];
//! * `K_{2,n,n}` anchors at `m = 4p + 1`, built by [`k2_anchor`];
//! * `K_{1,1,n,n}` takes the `K_{2,m,m}` anchor and adds `x1x2` to its last
//!   page ([`add_edge_x1x2`]).
//!
//! Generic anchors start from the base pages of `K_{4p,4p}`, delete a few
//! edges per page and add apex and new-vertex edges from fixed recipes; the
//! last page collects everything left over. Anchors with `p <= 3` come from
//! curated data. All outputs pass through the verifier before they are
//! returned, and a failing check is an error, never repaired.

mod k1;
mod k2;
mod recipe;
pub mod search;
mod small;

use std::fmt;

use crate::base::base_pages;
use crate::error::{Error, Result};
use crate::multipartite::{
    thickness_formula, Edge, GraphFamily, Page, Part, PartLayout, VertexRef,
};
use crate::planarity::{is_planar, SimpleGraph};
use crate::verify::{verify_decomposition, VerificationReport};

pub use k1::{k1_anchor, k1_last_page, k1_modified_page};
pub use k2::{k2_anchor, k2_last_page, k2_modified_page};
pub use small::{curated, small_case_k1, small_case_k2, CuratedCase, CURATED};

/// A planar decomposition candidate together with the graph it covers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub family: GraphFamily,
    pub n: u32,
    pub part_sizes: Vec<u32>,
    pub pages: Vec<Page>,
    /// Free-text lineage: anchor, recipe, transformations applied.
    pub provenance: String,
}

impl Decomposition {
    pub fn page_count(&self) -> usize {
        self.pages.len()
    }

    pub fn edge_total(&self) -> usize {
        self.pages.iter().map(Page::len).sum()
    }

    pub fn verify(&self, expected_count: Option<usize>) -> Result<VerificationReport> {
        verify_decomposition(&self.part_sizes, &self.pages, expected_count)
    }

    /// The 1-based page holding `e`, if any.
    pub fn page_of(&self, e: &Edge) -> Option<usize> {
        self.pages.iter().position(|p| p.contains(e)).map(|i| i + 1)
    }
}

/// Recipe selection for an anchor with parameter `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Case {
    /// `p` even, `p >= 4`.
    Generic1,
    /// `p` odd, `p >= 5`.
    Generic2,
    /// `p <= 3`: curated data.
    Small,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CaseSelector {
    pub p: u32,
    pub case: Case,
}

impl CaseSelector {
    pub fn for_p(p: u32) -> Self {
        let case = match p {
            0..=3 => Case::Small,
            _ if p % 2 == 0 => Case::Generic1,
            _ => Case::Generic2,
        };
        CaseSelector { p, case }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Case::Generic1 => "generic case 1 (p even)",
            Case::Generic2 => "generic case 2 (p odd)",
            Case::Small => "small case",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AnchorKind {
    /// `K_{1,4p+2,4p+2}`.
    OneApex,
    /// `K_{2,4p+1,4p+1}`.
    TwoApex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Anchor {
    pub m: u32,
    pub p: u32,
    pub kind: AnchorKind,
}

/// Smallest anchor size `m >= n` for the family. The formula value at `m`
/// equals the one at `n`; this is checked, not assumed.
pub fn anchor_for(family: &GraphFamily, n: u32) -> Result<Anchor> {
    if n == 0 {
        return Err(Error::invalid("n must be at least 1"));
    }
    let (residue, kind) = match family {
        GraphFamily::K1nn => (2, AnchorKind::OneApex),
        GraphFamily::K2nn | GraphFamily::K11nn => (1, AnchorKind::TwoApex),
        other => {
            return Err(Error::UnsupportedFamily(format!(
                "no anchor ladder for {other}"
            )))
        }
    };
    let m = n + (residue + 4 - n % 4) % 4;
    let at_n = thickness_formula(family, n)?;
    let at_m = thickness_formula(family, m)?;
    if at_n != at_m {
        return Err(Error::construction(
            format!("anchor for {family} n={n}"),
            format!("formula changes from {at_n} to {at_m} between n and m={m}"),
        ));
    }
    Ok(Anchor {
        m,
        p: (m - residue) / 4,
        kind,
    })
}

/// Base pages with the matching page extended by `apex_count` apexes joined
/// to every `u_j` and `v_j`: a decomposition of `K_{apex_count,4p,4p}`.
pub fn apex_base_pages(p: u32, apex_count: u32) -> Result<Decomposition> {
    if p < 1 {
        return Err(Error::invalid("p must be at least 1"));
    }
    let (family, apexes) = match apex_count {
        1 => (GraphFamily::K1nn, vec![VertexRef::x1()]),
        2 => (GraphFamily::K2nn, vec![VertexRef::x1(), VertexRef::x2()]),
        _ => {
            return Err(Error::invalid(format!(
                "apex count must be 1 or 2, got {apex_count}"
            )))
        }
    };
    let n = 4 * p;
    let mut pages = base_pages(p)?;
    let last = pages.last_mut().expect("p + 1 pages");
    for &x in &apexes {
        for j in 1..=n {
            last.insert(Edge::of(x, VertexRef::u(j)))?;
            last.insert(Edge::of(x, VertexRef::v(j)))?;
        }
    }
    let d = Decomposition {
        part_sizes: family.part_sizes(n),
        family,
        n,
        pages,
        provenance: format!(
            "base decomposition of K_{{{n},{n}}} with {apex_count} apex(es) on the matching page"
        ),
    };
    gate(&d, Some(p as usize + 1), "apex-extended base")?;
    Ok(d)
}

/// Adds `x1x2` to the last page of a `K_{2,m,m}` decomposition, producing
/// one of `K_{1,1,m,m}`. The last page must stay planar.
pub fn add_edge_x1x2(d: &Decomposition) -> Result<Decomposition> {
    let e = Edge::of(VertexRef::x1(), VertexRef::x2());
    if let Some(page) = d.page_of(&e) {
        return Err(Error::invalid(format!(
            "edge x1x2 already present on page {page}"
        )));
    }
    let m = match *d.part_sizes.as_slice() {
        [2, a, b] if a == b => a,
        _ => {
            return Err(Error::invalid(format!(
                "expected part sizes [2, m, m], got {:?}",
                d.part_sizes
            )))
        }
    };
    let mut pages = d.pages.clone();
    let last = pages
        .last_mut()
        .ok_or_else(|| Error::invalid("decomposition has no pages"))?;
    last.insert(e)?;
    let (g, _) = SimpleGraph::from_page(last);
    if !is_planar(&g) {
        return Err(Error::construction(
            "x1x2 augmentation",
            format!("last page of K_{{1,1,{m},{m}}} is not planar after adding x1x2"),
        ));
    }
    Ok(Decomposition {
        family: GraphFamily::K11nn,
        n: m,
        part_sizes: vec![1, 1, m, m],
        pages,
        provenance: format!("{}; x1x2 added to the last page", d.provenance),
    })
}

/// Removes `u_j, v_j` for `j > n_target` from every page and drops pages
/// that become empty.
pub fn delete_to_n(d: &Decomposition, n_target: u32) -> Result<Decomposition> {
    if n_target < 1 {
        return Err(Error::invalid("n_target must be at least 1"));
    }
    if n_target > d.n {
        return Err(Error::invalid(format!(
            "n_target {n_target} exceeds n = {}",
            d.n
        )));
    }
    if n_target == d.n {
        return Ok(d.clone());
    }
    let layout = PartLayout::from_sizes(&d.part_sizes)?;
    let k = d.part_sizes.len();
    let uv_tail = k >= 2
        && layout.parts()[k - 2].first().map(VertexRef::part) == Some(Part::U)
        && layout.parts()[k - 1].first().map(VertexRef::part) == Some(Part::V);
    if !uv_tail {
        return Err(Error::invalid(format!(
            "part list {:?} has no u/v parts",
            d.part_sizes
        )));
    }
    let keep = |v: VertexRef| matches!(v.part(), Part::X1 | Part::X2) || v.index() <= n_target;
    let mut pages = Vec::with_capacity(d.pages.len());
    for page in &d.pages {
        let mut p = page.clone();
        p.retain(|e| keep(e.a()) && keep(e.b()));
        if !p.is_empty() {
            pages.push(p);
        }
    }
    let mut part_sizes = d.part_sizes.clone();
    part_sizes[k - 2] = part_sizes[k - 2].min(n_target);
    part_sizes[k - 1] = part_sizes[k - 1].min(n_target);
    let family = match &d.family {
        GraphFamily::Custom(_) => GraphFamily::Custom(part_sizes.clone()),
        named => named.clone(),
    };
    Ok(Decomposition {
        family,
        n: n_target,
        part_sizes,
        pages,
        provenance: format!("{}; deleted u_j, v_j for j > {n_target}", d.provenance),
    })
}

/// Decomposition of the family graph at `n` with exactly the formula's
/// page count, verified.
pub fn generate(family: &GraphFamily, n: u32) -> Result<Decomposition> {
    if n == 0 {
        return Err(Error::invalid("n must be at least 1"));
    }
    let d = match family {
        GraphFamily::Knn => {
            if n % 4 != 0 {
                return Err(Error::UnsupportedFamily(format!(
                    "K_{{n,n}} is only generated for n divisible by 4, got {n}"
                )));
            }
            Decomposition {
                family: GraphFamily::Knn,
                n,
                part_sizes: vec![n, n],
                pages: base_pages(n / 4)?,
                provenance: format!("base decomposition of K_{{{n},{n}}}"),
            }
        }
        GraphFamily::K1nn => {
            let a = anchor_for(family, n)?;
            delete_to_n(&k1_anchor(a.p)?, n)?
        }
        GraphFamily::K2nn => {
            let a = anchor_for(family, n)?;
            delete_to_n(&k2_anchor(a.p)?, n)?
        }
        GraphFamily::K11nn => {
            let a = anchor_for(family, n)?;
            delete_to_n(&add_edge_x1x2(&k2_anchor(a.p)?)?, n)?
        }
        GraphFamily::Custom(sizes) => {
            return Err(Error::UnsupportedFamily(format!(
                "no generator for part list {sizes:?}"
            )))
        }
    };
    let expected = thickness_formula(family, n)? as usize;
    gate(&d, Some(expected), &format!("{family} n={n}"))?;
    Ok(d)
}

/// Runs the verifier and turns any failed check into a construction error.
pub(crate) fn gate(
    d: &Decomposition,
    expected: Option<usize>,
    context: &str,
) -> Result<VerificationReport> {
    if let Some(i) = d.pages.iter().position(Page::is_empty) {
        return Err(Error::construction(
            context,
            format!("page {} is empty", i + 1),
        ));
    }
    let report = d.verify(expected)?;
    if !report.overall {
        let mut problems = report.problems();
        let more = problems.len().saturating_sub(10);
        problems.truncate(10);
        if more > 0 {
            problems.push(format!("... and {more} more"));
        }
        return Err(Error::construction(context, problems.join("; ")));
    }
    Ok(report)
}

/// Every vertex `u_j`, `v_j` (`j <= max_index`) must meet each apex in
/// exactly one page.
pub(crate) fn check_apex_coverage(
    pages: &[Page],
    apexes: &[VertexRef],
    max_index: u32,
    context: &str,
) -> Result<()> {
    let mut problems = Vec::new();
    for &x in apexes {
        for j in 1..=max_index {
            for w in [VertexRef::u(j), VertexRef::v(j)] {
                let e = Edge::of(x, w);
                let hits: Vec<usize> = pages
                    .iter()
                    .enumerate()
                    .filter(|(_, p)| p.contains(&e))
                    .map(|(i, _)| i + 1)
                    .collect();
                if hits.len() != 1 {
                    problems.push(format!("{x}{w} on pages {hits:?}"));
                }
            }
        }
    }
    if problems.is_empty() {
        Ok(())
    } else {
        Err(Error::construction(
            format!("{context}: apex coverage"),
            problems.join(", "),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn case_selector() {
        let cases: Vec<Case> = (0..10).map(|p| CaseSelector::for_p(p).case).collect();
        use Case::*;
        assert_eq!(
            cases,
            [
                Small, Small, Small, Small, Generic1, Generic2, Generic1, Generic2, Generic1,
                Generic2
            ]
        );
    }

    #[test]
    fn anchors() {
        assert_eq!(anchor_for(&GraphFamily::K1nn, 18).unwrap().m, 18);
        assert_eq!(anchor_for(&GraphFamily::K2nn, 4).unwrap().m, 5);
        assert_eq!(anchor_for(&GraphFamily::K11nn, 7).unwrap().m, 9);
        assert_eq!(anchor_for(&GraphFamily::K1nn, 3).unwrap().m, 6);
        assert_eq!(anchor_for(&GraphFamily::K1nn, 3).unwrap().p, 1);
        assert_eq!(anchor_for(&GraphFamily::K2nn, 1).unwrap().p, 0);
        assert!(anchor_for(&GraphFamily::Knn, 4).is_err());
        for n in 1..=100 {
            for fam in [GraphFamily::K1nn, GraphFamily::K2nn, GraphFamily::K11nn] {
                let a = anchor_for(&fam, n).unwrap();
                assert!(a.m >= n && a.m - n < 4);
            }
        }
    }

    #[test]
    fn apex_base_shapes() {
        let d = apex_base_pages(1, 2).unwrap();
        assert_eq!(d.pages.len(), 2);
        assert_eq!(d.pages[1].len(), 20);
        assert_eq!(d.part_sizes, [2, 4, 4]);
        let d = apex_base_pages(1, 1).unwrap();
        assert_eq!(d.part_sizes, [1, 4, 4]);
        let d = apex_base_pages(2, 2).unwrap();
        let (g, _) = SimpleGraph::from_page(&d.pages[2]);
        assert!(is_planar(&g));
        assert!(apex_base_pages(0, 1).is_err());
        assert!(apex_base_pages(1, 3).is_err());
    }

    #[test]
    fn apex_base_one_apex_is_two_apex_without_x2() {
        for p in 1..=5 {
            let one = apex_base_pages(p, 1).unwrap();
            let two = apex_base_pages(p, 2).unwrap();
            let stripped: Vec<Page> = two
                .pages
                .iter()
                .map(|pg| {
                    let mut pg = pg.clone();
                    pg.retain(|e| !e.contains(VertexRef::x2()));
                    pg
                })
                .collect();
            assert_eq!(one.pages, stripped);
        }
    }

    #[test]
    fn x1x2_augmentation() {
        let d = add_edge_x1x2(&k2_anchor(1).unwrap()).unwrap();
        assert_eq!(d.part_sizes, [1, 1, 5, 5]);
        assert!(d.verify(Some(2)).unwrap().overall);
        assert_eq!(
            d.page_of(&Edge::of(VertexRef::x1(), VertexRef::x2())),
            Some(2)
        );
        assert!(matches!(add_edge_x1x2(&d), Err(Error::InvalidInput(_))));

        let d = add_edge_x1x2(&k2_anchor(0).unwrap()).unwrap();
        assert_eq!(d.pages.len(), 1);
        assert!(d.verify(Some(1)).unwrap().overall);
    }

    #[test]
    fn deletion() {
        let d = k2_anchor(1).unwrap();
        let e = delete_to_n(&d, 4).unwrap();
        assert_eq!(e.part_sizes, [2, 4, 4]);
        assert!(e.verify(Some(2)).unwrap().overall);
        assert_eq!(delete_to_n(&d, 5).unwrap(), d);
        let two = delete_to_n(&d, 2).unwrap();
        assert_eq!(two.pages.len(), 2);
        assert!(two.verify(Some(2)).unwrap().overall);
        assert!(delete_to_n(&d, 0).is_err());
        assert!(delete_to_n(&d, 6).is_err());
    }

    #[test]
    fn deletion_composes() {
        let d = k1_anchor(4).unwrap();
        for n in [17, 12, 9, 3] {
            for n2 in [1, 2, n] {
                let once = delete_to_n(&d, n2).unwrap();
                let twice = delete_to_n(&delete_to_n(&d, n).unwrap(), n2).unwrap();
                assert_eq!(once.pages, twice.pages);
                assert_eq!(once.part_sizes, twice.part_sizes);
            }
        }
    }

    #[test]
    fn generate_small_and_spot_values() {
        let d = generate(&GraphFamily::K11nn, 5).unwrap();
        assert_eq!(d.pages.len(), 2);
        assert_eq!(
            d.page_of(&Edge::of(VertexRef::x1(), VertexRef::x2())),
            Some(d.pages.len())
        );
        let d = generate(&GraphFamily::K2nn, 2).unwrap();
        assert_eq!(d.pages.len(), 2);
        assert!(generate(&GraphFamily::Knn, 6).is_err());
        assert_eq!(generate(&GraphFamily::Knn, 8).unwrap().pages.len(), 3);
        assert!(generate(&GraphFamily::K1nn, 0).is_err());
        assert!(generate(&GraphFamily::Custom(vec![1, 2]), 2).is_err());
    }

    #[test]
    fn generate_sweep_small() {
        for fam in [GraphFamily::K1nn, GraphFamily::K2nn, GraphFamily::K11nn] {
            for n in 1..=24 {
                let d = generate(&fam, n).unwrap_or_else(|e| panic!("{fam} n={n}: {e}"));
                assert_eq!(d.pages.len() as u32, thickness_formula(&fam, n).unwrap());
                assert_eq!(
                    d.edge_total() as u64,
                    crate::multipartite::edge_count(&d.part_sizes).unwrap()
                );
                if fam == GraphFamily::K11nn {
                    let e = Edge::of(VertexRef::x1(), VertexRef::x2());
                    let hits = d.pages.iter().filter(|p| p.contains(&e)).count();
                    assert_eq!(hits, 1);
                    assert!(d.pages.last().unwrap().contains(&e));
                }
            }
        }
    }
}
