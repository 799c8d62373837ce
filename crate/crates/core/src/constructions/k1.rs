// Anchor decompositions of K_{1,4p+2,4p+2}.
//
// Page r keeps base page r except for two (case 2, r = 1: three) edges and
// gains edges from x and from the four new vertices u_{4p+1}, u_{4p+2},
// v_{4p+1}, v_{4p+2}. The last page takes the matching, the deleted edges
// and whatever the new vertices still miss.

use super::recipe::{annotated, modified_page, row, PageBuilder, Row};
use super::{check_apex_coverage, gate, small, Case, CaseSelector, Decomposition};
use crate::base::Group::{U1, U2, V1, V2};
use crate::error::{Error, Result};
use crate::multipartite::{Edge, GraphFamily, Page, Part, VertexRef};

fn check_case(p: u32, case: Case) -> Result<()> {
    let expected = CaseSelector::for_p(p).case;
    if case == Case::Small || case != expected {
        return Err(Error::invalid(format!(
            "p={p} selects {expected}, not {case}"
        )));
    }
    Ok(())
}

fn deletions(r: u32, case: Case) -> Vec<Edge> {
    let (u, v) = (VertexRef::u, VertexRef::v);
    let mut out = if r % 2 == 1 {
        vec![
            Edge::of(v(4 * r - 3), u(4 * r)),
            Edge::of(u(4 * r), v(4 * r - 1)),
        ]
    } else {
        vec![
            Edge::of(v(4 * r), u(4 * r - 3)),
            Edge::of(u(4 * r - 3), v(4 * r - 2)),
        ]
    };
    if case == Case::Generic2 && r == 1 {
        out.push(Edge::of(v(2), u(1)));
    }
    out
}

fn rows(r: u32, p: u32, case: Case) -> Vec<Row> {
    let n = 4 * p;
    let x = VertexRef::x1();
    let (un1, un2) = (VertexRef::u(n + 1), VertexRef::u(n + 2));
    let (vn1, vn2) = (VertexRef::v(n + 1), VertexRef::v(n + 2));
    let q = 4 * i64::from(r);
    let c2 = case == Case::Generic2;
    if r % 2 == 1 {
        let last = c2 && r == p;
        let mut out = vec![
            row("xu", x, Part::U, &[q - 3, q - 1, q]),
            annotated("xu", x, Part::U, &[if last { 2 } else { q + 6 }], U1),
            row("xv", x, Part::V, &[q - 3, q - 2, q - 1]),
        ];
        if !c2 {
            out.push(annotated("xv", x, Part::V, &[q + 1], V1));
        } else if r == 1 {
            out.push(row("xv", x, Part::V, &[4, 5]));
        } else if r != p {
            out.push(annotated("xv", x, Part::V, &[q + 1], V1));
        }
        if last {
            out.extend([
                annotated("v(4p+1)u", vn1, Part::U, &[5, 6], U1),
                annotated("v(4p+2)u", vn2, Part::U, &[q + 7, q + 8], U2),
                annotated("u(4p+1)v", un1, Part::V, &[6, 8], V2),
                annotated("u(4p+2)v", un2, Part::V, &[5, 7], V1),
            ]);
        } else {
            out.extend([
                annotated("v(4p+1)u", vn1, Part::U, &[q + 11, q + 12], U2),
                annotated("v(4p+2)u", vn2, Part::U, &[q + 7, q + 8], U2),
                annotated("u(4p+1)v", un1, Part::V, &[q + 10, q + 12], V2),
                annotated("u(4p+2)v", un2, Part::V, &[q + 6, q + 8], V2),
            ]);
        }
        out
    } else {
        let fourth = if c2 && r + 1 == p { 7 } else { q + 7 };
        vec![
            row("xu", x, Part::U, &[q - 3, q - 2, q]),
            annotated("xu", x, Part::U, &[fourth], U2),
            row("xv", x, Part::V, &[q - 2, q - 1, q]),
            annotated("xv", x, Part::V, &[q + 4], V2),
            annotated("v(4p+1)u", vn1, Part::U, &[q + 5, q + 6], U1),
            annotated("v(4p+2)u", vn2, Part::U, &[q + 1, q + 2], U1),
            annotated("u(4p+1)v", un1, Part::V, &[q + 5, q + 7], V1),
            annotated("u(4p+2)v", un2, Part::V, &[q + 1, q + 3], V1),
        ]
    }
}

/// Page `r` of the generic `K_{1,4p+2,4p+2}` anchor.
pub fn k1_modified_page(r: u32, p: u32, case: Case) -> Result<Page> {
    check_case(p, case)?;
    if r < 1 || r > p {
        return Err(Error::invalid(format!("r={r} outside 1..={p}")));
    }
    let table = if case == Case::Generic1 {
        "K1 case 1 additions"
    } else {
        "K1 case 2 additions"
    };
    modified_page(r, p, &deletions(r, case), &rows(r, p, case), table)
}

/// Last page of the generic `K_{1,4p+2,4p+2}` anchor.
pub fn k1_last_page(p: u32, case: Case) -> Result<Page> {
    check_case(p, case)?;
    let n = 4 * p;
    let x = VertexRef::x1();
    let (un1, un2) = (VertexRef::u(n + 1), VertexRef::u(n + 2));
    let (vn1, vn2) = (VertexRef::v(n + 1), VertexRef::v(n + 2));
    let block = |r: u32| 4 * r - 3..=4 * r;
    let mut b = PageBuilder::new(format!("K1 last page, p={p}, {case}"));
    match case {
        Case::Generic1 => {
            for r in (1..p).step_by(2) {
                b.star(vn1, Part::U, block(r))?;
                b.star(un1, Part::V, block(r))?;
            }
            b.add(x, vn1)?;
            b.add(x, un1)?;
            b.add(vn1, un2)?;
            b.add(un1, vn2)?;
            for r in (2..=p).step_by(2) {
                b.star(vn2, Part::U, block(r))?;
                b.star(un2, Part::V, block(r))?;
            }
            b.add(x, vn2)?;
            b.add(x, un2)?;
            // v(4p+2)u(4p+1) and u(4p+2)v(4p+1) are the two edges above
        }
        Case::Generic2 => {
            b.add(x, vn1)?;
            b.add(x, un1)?;
            b.add(x, vn2)?;
            b.add(x, un2)?;
            for r in (3..=p).step_by(2) {
                b.star(vn1, Part::U, block(r))?;
                b.star(un1, Part::V, block(r))?;
            }
            b.star(vn1, Part::U, [7, 8, n + 2])?;
            b.star(un1, Part::V, [5, 7, n + 2])?;
            for r in std::iter::once(1).chain((4..p).step_by(2)) {
                b.star(vn2, Part::U, block(r))?;
                b.star(un2, Part::V, block(r))?;
            }
            b.star(vn2, Part::U, [5, 6])?;
            b.star(un2, Part::V, [6, 8])?;
        }
        Case::Small => unreachable!("rejected by check_case"),
    }
    for r in 1..=p {
        for e in deletions(r, case) {
            b.add(e.a(), e.b())?;
        }
    }
    for j in 1..=n + 2 {
        b.add(VertexRef::u(j), VertexRef::v(j))?;
    }
    Ok(b.finish())
}

/// Decomposition of `K_{1,4p+2,4p+2}` into `p + 1` planar pages.
pub fn k1_anchor(p: u32) -> Result<Decomposition> {
    let sel = CaseSelector::for_p(p);
    let m = 4 * p + 2;
    let d = match sel.case {
        Case::Small => small::small_case_k1(p)?,
        case => {
            let mut pages = (1..=p)
                .map(|r| k1_modified_page(r, p, case))
                .collect::<Result<Vec<_>>>()?;
            pages.push(k1_last_page(p, case)?);
            Decomposition {
                family: GraphFamily::K1nn,
                n: m,
                part_sizes: vec![1, m, m],
                pages,
                provenance: format!("anchor K_{{1,{m},{m}}} (p={p}), {case} recipe"),
            }
        }
    };
    check_apex_coverage(&d.pages, &[VertexRef::x1()], m, &format!("K1 anchor p={p}"))?;
    gate(&d, Some(p as usize + 1), &format!("K1 anchor p={p}"))?;
    Ok(d)
}
