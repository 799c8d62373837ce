//! The planar decomposition of `K_{4p,4p}` into `p + 1` pages, and the
//! subscript and block-group helpers used by the anchor recipes.
//!
//! Page `r` is built on the eight local vertices of block `r`
//! (subscripts `4r-3 ..= 4r`): an outer 4-cycle, an inner 4-cycle, four
//! chords between them, and the four bundles of parallel paths through the
//! other blocks' vertices. The last page is the matching `u_j v_j`.

use crate::error::{Error, Result};
use crate::multipartite::{Edge, Page, VertexRef};

/// Representative of `j` modulo `4p` in `1..=4p`. Panics if `p == 0`.
pub fn normalize_subscript(j: i64, p: u32) -> u32 {
    assert!(p >= 1, "p must be at least 1");
    let m = 4 * i64::from(p);
    ((j - 1).rem_euclid(m) + 1) as u32
}

/// Which of the four bundles of block `r` a vertex belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Group {
    U1,
    U2,
    V1,
    V2,
}

/// The vertices of all blocks other than `r`, split by role in page `r`.
///
/// `U1 = {u_{4i-3}, u_{4i-2}}`, `U2 = {u_{4i-1}, u_{4i}}`,
/// `V1 = {v_{4i-3}, v_{4i-1}}`, `V2 = {v_{4i-2}, v_{4i}}`, each over `i != r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockGroups {
    pub p: u32,
    pub r: u32,
    pub u1: Vec<VertexRef>,
    pub u2: Vec<VertexRef>,
    pub v1: Vec<VertexRef>,
    pub v2: Vec<VertexRef>,
}

impl BlockGroups {
    pub fn new(r: u32, p: u32) -> Result<Self> {
        check_block(r, p)?;
        let mut g = BlockGroups {
            p,
            r,
            u1: Vec::new(),
            u2: Vec::new(),
            v1: Vec::new(),
            v2: Vec::new(),
        };
        for i in (1..=p).filter(|&i| i != r) {
            g.u1.extend([VertexRef::u(4 * i - 3), VertexRef::u(4 * i - 2)]);
            g.u2.extend([VertexRef::u(4 * i - 1), VertexRef::u(4 * i)]);
            g.v1.extend([VertexRef::v(4 * i - 3), VertexRef::v(4 * i - 1)]);
            g.v2.extend([VertexRef::v(4 * i - 2), VertexRef::v(4 * i)]);
        }
        Ok(g)
    }

    pub fn members(&self, group: Group) -> &[VertexRef] {
        match group {
            Group::U1 => &self.u1,
            Group::U2 => &self.u2,
            Group::V1 => &self.v1,
            Group::V2 => &self.v2,
        }
    }

    pub fn contains(&self, group: Group, v: VertexRef) -> bool {
        self.members(group).contains(&v)
    }
}

fn check_block(r: u32, p: u32) -> Result<()> {
    if p < 1 {
        return Err(Error::invalid("p must be at least 1"));
    }
    if r < 1 || r > p {
        return Err(Error::invalid(format!("block r={r} outside 1..={p}")));
    }
    Ok(())
}

/// Page `r` (`1 <= r <= p`) of the base decomposition.
pub fn base_page(r: u32, p: u32) -> Result<Page> {
    let g = BlockGroups::new(r, p)?;
    let (a, b, c, d) = (4 * r - 3, 4 * r - 2, 4 * r - 1, 4 * r);
    let (u, v) = (VertexRef::u, VertexRef::v);
    let mut edges = vec![
        // outer cycle
        (v(a), u(c)),
        (u(c), v(d)),
        (v(d), u(b)),
        (u(b), v(a)),
        // inner cycle
        (v(c), u(d)),
        (u(d), v(b)),
        (v(b), u(a)),
        (u(a), v(c)),
        // chords
        (v(a), u(d)),
        (u(c), v(b)),
        (v(d), u(a)),
        (u(b), v(c)),
    ];
    for &w in &g.u1 {
        edges.extend([(w, v(a)), (w, v(c))]);
    }
    for &w in &g.u2 {
        edges.extend([(w, v(b)), (w, v(d))]);
    }
    for &w in &g.v1 {
        edges.extend([(w, u(c)), (w, u(d))]);
    }
    for &w in &g.v2 {
        edges.extend([(w, u(b)), (w, u(a))]);
    }
    Page::from_edges(edges.into_iter().map(|(x, y)| Edge::of(x, y)))
}

/// The matching `u_j v_j`, `1 <= j <= count`.
pub fn matching_page(count: u32) -> Page {
    Page::from_edges((1..=count).map(|j| Edge::of(VertexRef::u(j), VertexRef::v(j))))
        .expect("matching edges are distinct")
}

/// The `p + 1` pages of the base decomposition of `K_{4p,4p}`.
pub fn base_pages(p: u32) -> Result<Vec<Page>> {
    if p < 1 {
        return Err(Error::invalid("p must be at least 1"));
    }
    let mut pages = (1..=p)
        .map(|r| base_page(r, p))
        .collect::<Result<Vec<_>>>()?;
    pages.push(matching_page(4 * p));
    Ok(pages)
}

/// A labeled face of page `r`. `boundary` lists the fixed corners in cyclic
/// order; for faces 1 to 4 the face closes through any one member of
/// `via`, which sits between the last two listed corners.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub label: u8,
    pub boundary: Vec<VertexRef>,
    pub via: Option<Group>,
}

/// The five faces of page `r` that the anchor recipes place new vertices in.
pub fn faces_of_interest(r: u32, p: u32) -> Result<[Face; 5]> {
    check_block(r, p)?;
    let (a, b, c, d) = (4 * r - 3, 4 * r - 2, 4 * r - 1, 4 * r);
    let (u, v) = (VertexRef::u, VertexRef::v);
    let face = |label, boundary: Vec<VertexRef>, via| Face {
        label,
        boundary,
        via,
    };
    Ok([
        face(1, vec![v(a), u(d), u(c)], Some(Group::V1)),
        face(2, vec![u(c), v(b), v(d)], Some(Group::U2)),
        face(3, vec![v(d), u(a), u(b)], Some(Group::V2)),
        face(4, vec![u(b), v(c), v(a)], Some(Group::U1)),
        face(5, vec![u(d), v(c), u(a), v(b)], None),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipartite::{complete_multipartite_edges, thickness_formula, GraphFamily};
    use crate::planarity::{is_planar, naive_is_planar, SimpleGraph};
    use std::collections::BTreeSet;

    #[test]
    fn normalize() {
        assert_eq!(normalize_subscript(16 + 10, 4), 10);
        assert_eq!(normalize_subscript(16, 4), 16);
        assert_eq!(normalize_subscript(1, 4), 1);
        assert_eq!(normalize_subscript(0, 4), 16);
        assert_eq!(normalize_subscript(-3, 4), 13);
    }

    #[test]
    fn groups_are_disjoint_and_sized() {
        for p in 1..=6 {
            for r in 1..=p {
                let g = BlockGroups::new(r, p).unwrap();
                let all: Vec<_> = [&g.u1, &g.u2, &g.v1, &g.v2].into_iter().flatten().collect();
                let set: BTreeSet<_> = all.iter().collect();
                assert_eq!(all.len(), set.len());
                for s in [&g.u1, &g.u2, &g.v1, &g.v2] {
                    assert_eq!(s.len() as u32, 2 * (p - 1));
                }
                for j in 4 * r - 3..=4 * r {
                    assert!(!set.contains(&&VertexRef::u(j)) && !set.contains(&&VertexRef::v(j)));
                }
            }
        }
        assert!(BlockGroups::new(3, 2).is_err());
    }

    #[test]
    fn small_page_sizes() {
        let pages = base_pages(1).unwrap();
        assert_eq!(pages.iter().map(Page::len).collect::<Vec<_>>(), [12, 4]);
        let pages = base_pages(2).unwrap();
        assert_eq!(pages.iter().map(Page::len).collect::<Vec<_>>(), [28, 28, 8]);
        assert!(base_pages(0).is_err());
    }

    #[test]
    fn pages_partition_and_are_planar() {
        for p in 1..=10u32 {
            let pages = base_pages(p).unwrap();
            assert_eq!(
                pages.len() as u32,
                thickness_formula(&GraphFamily::Knn, 4 * p).unwrap()
            );
            let mut union = BTreeSet::new();
            for (i, page) in pages.iter().enumerate() {
                let expected = if i as u32 == p { 4 * p } else { 16 * p - 4 };
                assert_eq!(page.len() as u32, expected);
                for e in page {
                    assert!(union.insert(*e), "p={p}: {e} repeated");
                }
                let (g, _) = SimpleGraph::from_page(page);
                assert!(is_planar(&g), "p={p} page {}", i + 1);
                if p <= 2 && g.vertex_count() <= 12 {
                    assert!(naive_is_planar(&g).unwrap());
                }
            }
            assert_eq!(union, complete_multipartite_edges(&[4 * p, 4 * p]).unwrap());
        }
    }

    #[test]
    fn face_boundaries_are_edges_of_the_page() {
        for p in 2..=5 {
            for r in 1..=p {
                let page = base_page(r, p).unwrap();
                let groups = BlockGroups::new(r, p).unwrap();
                for face in faces_of_interest(r, p).unwrap() {
                    let closures: Vec<Vec<VertexRef>> = match face.via {
                        None => vec![face.boundary.clone()],
                        Some(gr) => groups
                            .members(gr)
                            .iter()
                            .map(|&w| {
                                let mut cyc = face.boundary.clone();
                                cyc.insert(2, w);
                                cyc
                            })
                            .collect(),
                    };
                    for cyc in closures {
                        for k in 0..cyc.len() {
                            let e = Edge::of(cyc[k], cyc[(k + 1) % cyc.len()]);
                            assert!(page.contains(&e), "face {} of r={r} p={p}: {e}", face.label);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn face_one_and_five() {
        let faces = faces_of_interest(1, 2).unwrap();
        for w in [VertexRef::v(1), VertexRef::u(4), VertexRef::u(3)] {
            assert!(faces[0].boundary.contains(&w));
        }
        let inner: BTreeSet<_> = faces[4].boundary.iter().copied().collect();
        let expected: BTreeSet<_> = [
            VertexRef::u(4),
            VertexRef::v(3),
            VertexRef::u(1),
            VertexRef::v(2),
        ]
        .into();
        assert_eq!(inner, expected);
    }

    #[test]
    fn face_three_mirrors_face_one() {
        // reflect local subscripts 4r-3 <-> 4r, 4r-2 <-> 4r-1
        for p in 1..=4 {
            for r in 1..=p {
                let faces = faces_of_interest(r, p).unwrap();
                let reflect = |w: VertexRef| {
                    let j = 8 * r - 3 - w.index();
                    VertexRef::new(w.part(), j).unwrap()
                };
                let mirrored: Vec<_> = faces[0].boundary.iter().map(|&w| reflect(w)).collect();
                assert_eq!(mirrored, faces[2].boundary);
                assert_eq!(faces[0].via, Some(Group::V1));
                assert_eq!(faces[2].via, Some(Group::V2));
            }
        }
    }
}
