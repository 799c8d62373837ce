// Shared machinery for the table-driven anchor pages.

use crate::base::{base_page, normalize_subscript, BlockGroups, Group};
use crate::error::{Error, Result};
use crate::multipartite::{Edge, Page, Part, VertexRef};

/// Edges from `center` to `u_j` or `v_j` for each listed subscript.
/// Subscripts are raw table values and get normalized modulo `4p`;
/// `group`, when set, is the membership the table annotates for them.
pub(super) struct Row {
    pub label: &'static str,
    pub center: VertexRef,
    pub side: Part,
    pub subscripts: Vec<i64>,
    pub group: Option<Group>,
}

pub(super) fn row(label: &'static str, center: VertexRef, side: Part, subscripts: &[i64]) -> Row {
    Row {
        label,
        center,
        side,
        subscripts: subscripts.to_vec(),
        group: None,
    }
}

pub(super) fn annotated(
    label: &'static str,
    center: VertexRef,
    side: Part,
    subscripts: &[i64],
    group: Group,
) -> Row {
    Row {
        label,
        center,
        side,
        subscripts: subscripts.to_vec(),
        group: Some(group),
    }
}

pub(super) fn side_vertex(side: Part, j: u32) -> VertexRef {
    match side {
        Part::U => VertexRef::u(j),
        Part::V => VertexRef::v(j),
        _ => unreachable!("rows target u or v"),
    }
}

/// Base page `r`, minus `deletions`, plus the rows' edges.
pub(super) fn modified_page(
    r: u32,
    p: u32,
    deletions: &[Edge],
    rows: &[Row],
    table: &str,
) -> Result<Page> {
    let context = |label: &str| format!("{table}, r={r}, p={p}, row {label}");
    let mut page = base_page(r, p)?;
    let groups = BlockGroups::new(r, p)?;
    for e in deletions {
        if !page.remove(e) {
            return Err(Error::construction(
                context("deletions"),
                format!("{e} is not on the base page"),
            ));
        }
    }
    for row in rows {
        for &raw in &row.subscripts {
            let w = side_vertex(row.side, normalize_subscript(raw, p));
            if let Some(g) = row.group {
                if !groups.contains(g, w) {
                    return Err(Error::construction(
                        context(row.label),
                        format!("{w} (from {raw}) is not in {g:?} of block {r}"),
                    ));
                }
            }
            page.insert(Edge::of(row.center, w)).map_err(|_| {
                Error::construction(
                    context(row.label),
                    format!("{}{w} already on the page", row.center),
                )
            })?;
        }
    }
    Ok(page)
}

/// Accumulates a last page; a repeated edge is a recipe bug.
pub(super) struct PageBuilder {
    page: Page,
    context: String,
}

impl PageBuilder {
    pub fn new(context: impl Into<String>) -> Self {
        PageBuilder {
            page: Page::new(),
            context: context.into(),
        }
    }

    pub fn add(&mut self, a: VertexRef, b: VertexRef) -> Result<()> {
        self.page
            .insert(Edge::of(a, b))
            .map_err(|e| Error::construction(self.context.clone(), e.to_string()))
    }

    pub fn star(
        &mut self,
        center: VertexRef,
        side: Part,
        subscripts: impl IntoIterator<Item = u32>,
    ) -> Result<()> {
        for j in subscripts {
            self.add(center, side_vertex(side, j))?;
        }
        Ok(())
    }

    pub fn finish(self) -> Page {
        self.page
    }
}
