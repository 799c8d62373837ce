//! JSON documents and DOT export.
//!
//! Decomposition documents are written by hand rather than through a
//! serializer so that key order and line layout are fixed: one page per
//! line, edges sorted. `save(load(doc)) == doc` byte for byte for any
//! document this module wrote.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::constructions::Decomposition;
use crate::error::{Error, Result};
use crate::multipartite::{Edge, GraphFamily, Page, PartLayout, VertexRef};
use crate::planarity::SimpleGraph;

pub const DECOMPOSITION_SCHEMA: &str = "thickness-decomposition/v1";
pub const GRAPH_SCHEMA: &str = "thickness-graph/v1";

/// On-disk form of a decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DecompositionDocument {
    pub schema: String,
    pub family: String,
    pub n: u32,
    pub part_sizes: Vec<u32>,
    pub pages: Vec<Vec<[String; 2]>>,
    pub provenance: String,
}

impl DecompositionDocument {
    pub fn from_decomposition(d: &Decomposition) -> Self {
        DecompositionDocument {
            schema: DECOMPOSITION_SCHEMA.to_string(),
            family: d.family.name().to_string(),
            n: d.n,
            part_sizes: d.part_sizes.clone(),
            pages: d
                .pages
                .iter()
                .map(|p| p.iter().map(Edge::labels).collect())
                .collect(),
            provenance: d.provenance.clone(),
        }
    }

    /// Deterministic JSON text, newline-terminated.
    pub fn to_json(&self) -> String {
        let q = |s: &str| serde_json::to_string(s).expect("strings always serialize");
        let mut out = String::new();
        out.push_str("{\n");
        let _ = writeln!(out, "  \"schema\": {},", q(&self.schema));
        let _ = writeln!(out, "  \"family\": {},", q(&self.family));
        let _ = writeln!(out, "  \"n\": {},", self.n);
        let sizes: Vec<String> = self.part_sizes.iter().map(u32::to_string).collect();
        let _ = writeln!(out, "  \"part_sizes\": [{}],", sizes.join(", "));
        out.push_str("  \"pages\": [\n");
        for (i, page) in self.pages.iter().enumerate() {
            let edges: Vec<String> = page
                .iter()
                .map(|[a, b]| format!("[{}, {}]", q(a), q(b)))
                .collect();
            let sep = if i + 1 < self.pages.len() { "," } else { "" };
            let _ = writeln!(out, "    [{}]{sep}", edges.join(", "));
        }
        out.push_str("  ],\n");
        let _ = writeln!(out, "  \"provenance\": {}", q(&self.provenance));
        out.push_str("}\n");
        out
    }

    /// Parses JSON text, checking only the schema tag.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: DecompositionDocument = serde_json::from_str(text).map_err(|e| {
            Error::parse(
                format!("line {}, column {}", e.line(), e.column()),
                e.to_string(),
            )
        })?;
        if doc.schema != DECOMPOSITION_SCHEMA {
            return Err(Error::parse(
                "schema",
                format!(
                    "unsupported schema {:?}, expected {DECOMPOSITION_SCHEMA:?}",
                    doc.schema
                ),
            ));
        }
        Ok(doc)
    }

    /// Validates labels and edges and builds the typed decomposition.
    ///
    /// Rejected: malformed labels, loops, edges inside one part, an edge
    /// repeated within a page, and a family inconsistent with the part list.
    /// Edges repeated across pages and vertices outside the layout are left
    /// for the verifier to report.
    pub fn into_decomposition(self) -> Result<Decomposition> {
        let layout = PartLayout::from_sizes(&self.part_sizes)
            .map_err(|e| Error::parse("part_sizes", e.to_string()))?;
        let family = match self.family.as_str() {
            "custom" => GraphFamily::Custom(self.part_sizes.clone()),
            name => {
                let fam: GraphFamily = name
                    .parse()
                    .map_err(|_| Error::parse("family", format!("unknown family {name:?}")))?;
                if fam.part_sizes(self.n) != self.part_sizes {
                    return Err(Error::parse(
                        "family",
                        format!(
                            "{name} with n={} needs part_sizes {:?}",
                            self.n,
                            fam.part_sizes(self.n)
                        ),
                    ));
                }
                fam
            }
        };
        let mut pages = Vec::with_capacity(self.pages.len());
        for (pi, raw) in self.pages.iter().enumerate() {
            let mut page = Page::new();
            for (ei, [a, b]) in raw.iter().enumerate() {
                let loc = || format!("page {}, edge {}", pi + 1, ei + 1);
                let va: VertexRef = a
                    .parse()
                    .map_err(|e: Error| Error::parse(loc(), e.to_string()))?;
                let vb: VertexRef = b
                    .parse()
                    .map_err(|e: Error| Error::parse(loc(), e.to_string()))?;
                let edge = Edge::new(va, vb).map_err(|e| Error::parse(loc(), e.to_string()))?;
                if let (Some(pa), Some(pb)) = (layout.part_of(va), layout.part_of(vb)) {
                    if pa == pb {
                        return Err(Error::parse(
                            loc(),
                            format!("edge {a}-{b} joins two vertices of one part"),
                        ));
                    }
                }
                page.insert(edge).map_err(|_| {
                    Error::parse(loc(), format!("edge {a}-{b} repeated within the page"))
                })?;
            }
            pages.push(page);
        }
        Ok(Decomposition {
            family,
            n: self.n,
            part_sizes: self.part_sizes,
            pages,
            provenance: self.provenance,
        })
    }
}

/// Serializes a decomposition to its document text.
pub fn save(d: &Decomposition) -> String {
    DecompositionDocument::from_decomposition(d).to_json()
}

pub fn load(text: &str) -> Result<Decomposition> {
    DecompositionDocument::from_json(text)?.into_decomposition()
}

pub fn save_to_path(d: &Decomposition, path: &Path) -> Result<()> {
    fs::write(path, save(d))?;
    Ok(())
}

pub fn load_from_path(path: &Path) -> Result<Decomposition> {
    load(&fs::read_to_string(path)?)
}

/// Input graph for the exact-thickness oracle: either an explicit edge list
/// over arbitrary labels, or a complete multipartite part list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub schema: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<[String; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub part_sizes: Option<Vec<u32>>,
}

/// A graph with a label per vertex index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: SimpleGraph,
    pub labels: Vec<String>,
    /// Set when the graph came from a part list.
    pub part_sizes: Option<Vec<u32>>,
}

impl LabeledGraph {
    /// Complete multipartite graph. Supported layouts use `x1/x2/u/v`
    /// labels; other part lists get `p<i>_<k>` labels.
    pub fn complete_multipartite(part_sizes: &[u32]) -> Result<Self> {
        crate::multipartite::edge_count(part_sizes)?;
        let parts: Vec<Vec<String>> = match PartLayout::from_sizes(part_sizes) {
            Ok(layout) => layout
                .parts()
                .iter()
                .map(|p| p.iter().map(ToString::to_string).collect())
                .collect(),
            Err(Error::UnsupportedLayout(_)) => part_sizes
                .iter()
                .enumerate()
                .map(|(i, &s)| (1..=s).map(|k| format!("p{}_{k}", i + 1)).collect())
                .collect(),
            Err(e) => return Err(e),
        };
        let labels: Vec<String> = parts.iter().flatten().cloned().collect();
        let mut graph = SimpleGraph::new(labels.len());
        let mut start = 0;
        let bounds: Vec<(usize, usize)> = parts
            .iter()
            .map(|p| {
                let b = (start, start + p.len());
                start += p.len();
                b
            })
            .collect();
        for (i, &(s0, e0)) in bounds.iter().enumerate() {
            for &(s1, e1) in &bounds[i + 1..] {
                for a in s0..e0 {
                    for b in s1..e1 {
                        graph.add_edge(a, b)?;
                    }
                }
            }
        }
        Ok(LabeledGraph {
            graph,
            labels,
            part_sizes: Some(part_sizes.to_vec()),
        })
    }
}

pub fn load_graph(text: &str) -> Result<LabeledGraph> {
    let doc: GraphDocument = serde_json::from_str(text).map_err(|e| {
        Error::parse(
            format!("line {}, column {}", e.line(), e.column()),
            e.to_string(),
        )
    })?;
    if doc.schema != GRAPH_SCHEMA {
        return Err(Error::parse(
            "schema",
            format!(
                "unsupported schema {:?}, expected {GRAPH_SCHEMA:?}",
                doc.schema
            ),
        ));
    }
    match (doc.part_sizes, doc.edges) {
        (Some(sizes), None) if doc.vertices.is_none() => {
            LabeledGraph::complete_multipartite(&sizes)
        }
        (None, Some(edges)) => {
            let mut labels: Vec<String> = doc.vertices.unwrap_or_default();
            let mut index = std::collections::HashMap::new();
            for (i, l) in labels.iter().enumerate() {
                if index.insert(l.clone(), i).is_some() {
                    return Err(Error::parse(
                        "vertices",
                        format!("vertex {l:?} listed twice"),
                    ));
                }
            }
            let mut pairs = Vec::with_capacity(edges.len());
            for (ei, [a, b]) in edges.iter().enumerate() {
                let mut idx = |l: &String| {
                    let next = index.len();
                    *index.entry(l.clone()).or_insert_with(|| {
                        labels.push(l.clone());
                        next
                    })
                };
                let (ia, ib) = (idx(a), idx(b));
                if ia == ib {
                    return Err(Error::parse(
                        format!("edge {}", ei + 1),
                        format!("self-loop at {a}"),
                    ));
                }
                pairs.push((ia, ib));
            }
            let mut graph = SimpleGraph::new(labels.len());
            for (ei, (a, b)) in pairs.into_iter().enumerate() {
                graph
                    .add_edge(a, b)
                    .map_err(|_| Error::parse(format!("edge {}", ei + 1), "edge listed twice"))?;
            }
            Ok(LabeledGraph {
                graph,
                labels,
                part_sizes: None,
            })
        }
        _ => Err(Error::parse(
            "document",
            "give either \"part_sizes\" or \"edges\" (with optional \"vertices\")",
        )),
    }
}

pub fn load_graph_from_path(path: &Path) -> Result<LabeledGraph> {
    load_graph(&fs::read_to_string(path)?)
}

/// Labeled pages over arbitrary vertex names, written in the decomposition
/// layout with family `custom` and an empty part list.
pub fn witness_document(pages: &[Vec<[String; 2]>], provenance: &str) -> DecompositionDocument {
    DecompositionDocument {
        schema: DECOMPOSITION_SCHEMA.to_string(),
        family: "custom".to_string(),
        n: 0,
        part_sizes: Vec::new(),
        pages: pages.to_vec(),
        provenance: provenance.to_string(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DotMode {
    /// One graph per page.
    PerPage,
    /// One graph, every edge tagged with its page.
    ColoredUnion,
}

impl std::str::FromStr for DotMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "per-page" => Ok(DotMode::PerPage),
            "colored-union" => Ok(DotMode::ColoredUnion),
            _ => Err(Error::invalid(format!(
                "unknown DOT mode {s:?}, expected per-page or colored-union"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DotFile {
    pub name: String,
    pub contents: String,
}

const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2",
];

pub fn export_dot(d: &Decomposition, mode: DotMode) -> Vec<DotFile> {
    match mode {
        DotMode::PerPage => d
            .pages
            .iter()
            .enumerate()
            .map(|(i, page)| {
                let mut s = format!("graph page_{} {{\n", i + 1);
                for e in page {
                    let _ = writeln!(s, "  \"{}\" -- \"{}\";", e.a(), e.b());
                }
                s.push_str("}\n");
                DotFile {
                    name: format!("page_{}.dot", i + 1),
                    contents: s,
                }
            })
            .collect(),
        DotMode::ColoredUnion => {
            let mut s = String::from("graph decomposition {\n");
            for (i, page) in d.pages.iter().enumerate() {
                let color = PALETTE[i % PALETTE.len()];
                for e in page {
                    let _ = writeln!(
                        s,
                        "  \"{}\" -- \"{}\" [page={}, color=\"{color}\"];",
                        e.a(),
                        e.b(),
                        i + 1
                    );
                }
            }
            s.push_str("}\n");
            vec![DotFile {
                name: "union.dot".to_string(),
                contents: s,
            }]
        }
    }
}

/// Writes the files into `dir`, creating it if needed.
pub fn write_dot_files(files: &[DotFile], dir: &Path) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir)?;
    files
        .iter()
        .map(|f| {
            let path = dir.join(&f.name);
            fs::write(&path, &f.contents)?;
            Ok(path)
        })
        .collect()
}
