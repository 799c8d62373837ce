// Anchor decompositions of K_{2,4p+1,4p+1}.
//
// Same scheme as the one-apex anchor with apexes x1, x2 and the two new
// vertices u_{4p+1}, v_{4p+1}.

use super::recipe::{annotated, modified_page, row, PageBuilder, Row};
use super::{check_apex_coverage, gate, small, Case, CaseSelector, Decomposition};
use crate::base::normalize_subscript;
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

fn deletions(r: u32) -> [Edge; 2] {
    let (u, v) = (VertexRef::u, VertexRef::v);
    if r % 2 == 1 {
        [
            Edge::of(v(4 * r - 3), u(4 * r)),
            Edge::of(u(4 * r - 1), v(4 * r - 2)),
        ]
    } else {
        [
            Edge::of(v(4 * r), u(4 * r - 3)),
            Edge::of(u(4 * r - 2), v(4 * r - 1)),
        ]
    }
}

fn rows(r: u32, p: u32, case: Case) -> Vec<Row> {
    let n = 4 * p;
    let (x1, x2) = (VertexRef::x1(), VertexRef::x2());
    let (un, vn) = (VertexRef::u(n + 1), VertexRef::v(n + 1));
    let q = 4 * i64::from(r);
    let c2 = case == Case::Generic2;
    let mut out = Vec::new();
    if r % 2 == 1 {
        let last = c2 && r == p;
        out.push(row("x1u", x1, Part::U, &[q - 1, q]));
        out.push(annotated(
            "x1u",
            x1,
            Part::U,
            &[if last { 1 } else { q + 5 }],
            U1,
        ));
        out.push(row("x1v", x1, Part::V, &[q - 3, q - 1]));
        if !last {
            out.push(annotated("x1v", x1, Part::V, &[q + 1], V1));
        }
        out.push(row("x2u", x2, Part::U, &[q - 1, q]));
        out.push(annotated(
            "x2u",
            x2,
            Part::U,
            &[if last { 8 } else { q + 3 }],
            U2,
        ));
        out.push(row("x2v", x2, Part::V, &[q - 2, q]));
        out.push(annotated(
            "x2v",
            x2,
            Part::V,
            &[if last { 3 } else { q + 7 }],
            V1,
        ));
        let vn_row: &[i64] = if last { &[4] } else { &[q + 4, q + 8] };
        out.push(annotated("v(4p+1)u", vn, Part::U, vn_row, U2));
    } else {
        let pm1 = c2 && r + 1 == p;
        out.push(row("x1u", x1, Part::U, &[q - 3, q - 2]));
        out.push(annotated(
            "x1u",
            x1,
            Part::U,
            &[if pm1 { 8 } else { q + 8 }],
            U2,
        ));
        out.push(row("x1v", x1, Part::V, &[q - 2, q]));
        out.push(annotated("x1v", x1, Part::V, &[q + 4], V2));
        out.push(row("x2u", x2, Part::U, &[q - 3, q - 2]));
        out.push(annotated("x2u", x2, Part::U, &[q + 2], U1));
        out.push(row("x2v", x2, Part::V, &[q - 3, q - 1]));
        out.push(annotated(
            "x2v",
            x2,
            Part::V,
            &[if pm1 { 6 } else { q + 6 }],
            V2,
        ));
        out.push(annotated("v(4p+1)u", vn, Part::U, &[q - 11, q - 7], U1));
    }
    out.push(row("u(4p+1)v", un, Part::V, &[q - 2, q - 1]));
    out
}

/// Page `r` of the generic `K_{2,4p+1,4p+1}` anchor.
pub fn k2_modified_page(r: u32, p: u32, case: Case) -> Result<Page> {
    check_case(p, case)?;
    if r < 1 || r > p {
        return Err(Error::invalid(format!("r={r} outside 1..={p}")));
    }
    let table = if case == Case::Generic1 {
        "K2 case 1 additions"
    } else {
        "K2 case 2 additions"
    };
    modified_page(r, p, &deletions(r), &rows(r, p, case), table)
}

/// Last page of the generic `K_{2,4p+1,4p+1}` anchor.
pub fn k2_last_page(p: u32, case: Case) -> Result<Page> {
    check_case(p, case)?;
    let n = 4 * p;
    let norm = |j: i64| normalize_subscript(j, p);
    let (x1, x2) = (VertexRef::x1(), VertexRef::x2());
    let (un, vn) = (VertexRef::u(n + 1), VertexRef::v(n + 1));
    let mut b = PageBuilder::new(format!("K2 last page, p={p}, {case}"));
    let both = |b: &mut PageBuilder, x: VertexRef, js: &[u32]| -> Result<()> {
        b.star(x, Part::U, js.iter().copied())?;
        b.star(x, Part::V, js.iter().copied())
    };
    match case {
        Case::Generic1 => {
            for r in (1..p).step_by(2) {
                let q = 4 * i64::from(r);
                both(&mut b, x1, &[norm(q - 2), norm(q + 3)])?;
            }
            both(&mut b, x1, &[n + 1])?;
            for r in (2..=p).step_by(2) {
                let q = 4 * i64::from(r);
                both(&mut b, x2, &[norm(q - 7), norm(q)])?;
            }
            both(&mut b, x2, &[n + 1])?;
        }
        Case::Generic2 => {
            let odd: Vec<u32> = (1..p.saturating_sub(1)).step_by(2).map(|r| 4 * r).collect();
            let tail: Vec<u32> = odd
                .iter()
                .flat_map(|&q| [norm(i64::from(q) + 3), norm(i64::from(q) + 6)])
                .collect();
            b.star(
                x1,
                Part::U,
                [2, n + 1].into_iter().chain(tail.iter().copied()),
            )?;
            b.star(
                x1,
                Part::V,
                [2, 4, n + 1].into_iter().chain(tail.iter().copied()),
            )?;
            let even: Vec<u32> = (4..p).step_by(2).map(|r| 4 * r).collect();
            let tail: Vec<u32> = even
                .iter()
                .flat_map(|&q| [norm(i64::from(q)), norm(i64::from(q) + 1)])
                .collect();
            b.star(
                x2,
                Part::U,
                [1, 2, 9, n + 1].into_iter().chain(tail.iter().copied()),
            )?;
            b.star(
                x2,
                Part::V,
                [1, 8, 9, n + 1].into_iter().chain(tail.iter().copied()),
            )?;
            b.add(vn, VertexRef::u(4 * p - 7))?;
        }
        Case::Small => unreachable!("rejected by check_case"),
    }
    for r in 1..=p {
        b.star(un, Part::V, [4 * r - 3, 4 * r])?;
        b.star(vn, Part::U, [4 * r - 2, 4 * r - 1])?;
        for e in deletions(r) {
            b.add(e.a(), e.b())?;
        }
    }
    for j in 1..=n + 1 {
        b.add(VertexRef::u(j), VertexRef::v(j))?;
    }
    Ok(b.finish())
}

/// Decomposition of `K_{2,4p+1,4p+1}` into `p + 1` planar pages.
pub fn k2_anchor(p: u32) -> Result<Decomposition> {
    let m = 4 * p + 1;
    let d = match CaseSelector::for_p(p).case {
        Case::Small => small::small_case_k2(p)?,
        case => {
            let mut pages = (1..=p)
                .map(|r| k2_modified_page(r, p, case))
                .collect::<Result<Vec<_>>>()?;
            pages.push(k2_last_page(p, case)?);
            Decomposition {
                family: GraphFamily::K2nn,
                n: m,
                part_sizes: vec![2, m, m],
                pages,
                provenance: format!("anchor K_{{2,{m},{m}}} (p={p}), {case} recipe"),
            }
        }
    };
    let context = format!("K2 anchor p={p}");
    check_apex_coverage(&d.pages, &[VertexRef::x1(), VertexRef::x2()], m, &context)?;
    gate(&d, Some(p as usize + 1), &context)?;
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(page: &Page, w: VertexRef) -> Vec<String> {
        page.neighbors(w).iter().map(ToString::to_string).collect()
    }

    #[test]
    fn first_page_p4() {
        let page = k2_modified_page(1, 4, Case::Generic1).unwrap();
        assert_eq!(
            names(&page, VertexRef::x1()),
            ["u3", "u4", "u9", "v1", "v3", "v5"]
        );
        assert_eq!(
            names(&page, VertexRef::x2()),
            ["u3", "u4", "u7", "v2", "v4", "v11"]
        );
        assert_eq!(names(&page, VertexRef::u(17)), ["v2", "v3"]);
        assert_eq!(names(&page, VertexRef::v(17)), ["u8", "u12"]);
    }

    #[test]
    fn even_page_wraps_around() {
        // u_{4r-11} and u_{4r-7} for r = 2 wrap around to u13 and u1
        let page = k2_modified_page(2, 4, Case::Generic1).unwrap();
        assert_eq!(names(&page, VertexRef::v(17)), ["u1", "u13"]);
    }

    #[test]
    fn last_page_p5() {
        let page = k2_last_page(5, Case::Generic2).unwrap();
        assert!(page.contains(&Edge::of(VertexRef::v(21), VertexRef::u(13))));
        assert!(page.contains(&Edge::of(VertexRef::x2(), VertexRef::u(9))));
        for j in 1..=21 {
            assert!(page.contains(&Edge::of(VertexRef::u(j), VertexRef::v(j))));
        }
    }

    #[test]
    fn wrong_case_is_rejected() {
        assert!(k2_modified_page(1, 5, Case::Generic1).is_err());
        assert!(k2_last_page(2, Case::Small).is_err());
        assert!(k2_modified_page(0, 4, Case::Generic1).is_err());
    }

    #[test]
    fn anchors_verify() {
        for p in 0..=12 {
            let d = k2_anchor(p).unwrap_or_else(|e| panic!("p={p}: {e}"));
            assert_eq!(d.pages.len() as u32, p + 1);
            assert_eq!(d.part_sizes, [2, 4 * p + 1, 4 * p + 1]);
        }
    }
}
