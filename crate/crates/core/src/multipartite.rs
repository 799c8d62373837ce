//! Vertex and edge model for complete multipartite graphs, plus the
//! closed-form thickness values for the supported families.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Part tag of a vertex. The derived order (`X1 < X2 < U < V`) is the
/// canonical vertex order used for edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Part {
    X1,
    X2,
    U,
    V,
}

/// A symbolic vertex label: `x1`, `x2`, `u<k>` or `v<k>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexRef {
    part: Part,
    index: u32,
}

impl VertexRef {
    pub fn new(part: Part, index: u32) -> Result<Self> {
        match part {
            Part::X1 | Part::X2 if index != 1 => Err(Error::invalid(format!(
                "apex vertices carry index 1, got {index}"
            ))),
            _ if index == 0 => Err(Error::invalid("vertex index must be at least 1")),
            _ => Ok(VertexRef { part, index }),
        }
    }

    pub const fn x1() -> Self {
        VertexRef {
            part: Part::X1,
            index: 1,
        }
    }

    pub const fn x2() -> Self {
        VertexRef {
            part: Part::X2,
            index: 1,
        }
    }

    /// `u_k`. Panics if `k == 0`.
    pub fn u(k: u32) -> Self {
        assert!(k >= 1, "u index must be at least 1");
        VertexRef {
            part: Part::U,
            index: k,
        }
    }

    /// `v_k`. Panics if `k == 0`.
    pub fn v(k: u32) -> Self {
        assert!(k >= 1, "v index must be at least 1");
        VertexRef {
            part: Part::V,
            index: k,
        }
    }

    pub fn part(&self) -> Part {
        self.part
    }

    pub fn index(&self) -> u32 {
        self.index
    }
}

impl fmt::Display for VertexRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.part {
            Part::X1 => f.write_str("x1"),
            Part::X2 => f.write_str("x2"),
            Part::U => write!(f, "u{}", self.index),
            Part::V => write!(f, "v{}", self.index),
        }
    }
}

impl FromStr for VertexRef {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "x1" => return Ok(VertexRef::x1()),
            "x2" => return Ok(VertexRef::x2()),
            _ => {}
        }
        let bad = || Error::invalid(format!("malformed vertex label {s:?}"));
        let (part, digits) = match s.split_at_checked(1) {
            Some(("u", d)) => (Part::U, d),
            Some(("v", d)) => (Part::V, d),
            _ => return Err(bad()),
        };
        // no sign, no leading zeros
        if digits.is_empty()
            || digits.starts_with('0')
            || !digits.bytes().all(|b| b.is_ascii_digit())
        {
            return Err(bad());
        }
        let index: u32 = digits.parse().map_err(|_| bad())?;
        VertexRef::new(part, index)
    }
}

impl Serialize for VertexRef {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for VertexRef {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An undirected edge stored with `a < b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    a: VertexRef,
    b: VertexRef,
}

impl Edge {
    pub fn new(a: VertexRef, b: VertexRef) -> Result<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Edge { a, b }),
            std::cmp::Ordering::Greater => Ok(Edge { a: b, b: a }),
            std::cmp::Ordering::Equal => Err(Error::invalid(format!("self-loop at {a}"))),
        }
    }

    /// Like [`Edge::new`] but panics on a loop. For use with endpoints that
    /// are distinct by construction.
    pub(crate) fn of(a: VertexRef, b: VertexRef) -> Self {
        Edge::new(a, b).expect("endpoints are distinct")
    }

    pub fn a(&self) -> VertexRef {
        self.a
    }

    pub fn b(&self) -> VertexRef {
        self.b
    }

    pub fn endpoints(&self) -> [VertexRef; 2] {
        [self.a, self.b]
    }

    pub fn contains(&self, v: VertexRef) -> bool {
        self.a == v || self.b == v
    }

    pub fn labels(&self) -> [String; 2] {
        [self.a.to_string(), self.b.to_string()]
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.a, self.b)
    }
}

/// One subgraph of a decomposition, as a set of canonical edges.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Page {
    edges: BTreeSet<Edge>,
}

impl Page {
    pub fn new() -> Self {
        Page::default()
    }

    /// Builds a page, rejecting repeated edges.
    pub fn from_edges(edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut page = Page::new();
        for e in edges {
            page.insert(e)?;
        }
        Ok(page)
    }

    /// Inserts `e`; a second insertion of the same edge is an error.
    pub fn insert(&mut self, e: Edge) -> Result<()> {
        if self.edges.insert(e) {
            Ok(())
        } else {
            Err(Error::invalid(format!("duplicate edge {e}")))
        }
    }

    pub fn remove(&mut self, e: &Edge) -> bool {
        self.edges.remove(e)
    }

    pub fn contains(&self, e: &Edge) -> bool {
        self.edges.contains(e)
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Edge> + '_ {
        self.edges.iter()
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn vertices(&self) -> BTreeSet<VertexRef> {
        self.edges.iter().flat_map(|e| e.endpoints()).collect()
    }

    /// Edges incident to `v`, as the opposite endpoints.
    pub fn neighbors(&self, v: VertexRef) -> BTreeSet<VertexRef> {
        self.edges
            .iter()
            .filter_map(|e| {
                if e.a == v {
                    Some(e.b)
                } else if e.b == v {
                    Some(e.a)
                } else {
                    None
                }
            })
            .collect()
    }

    pub(crate) fn retain(&mut self, f: impl FnMut(&Edge) -> bool) {
        self.edges.retain(f);
    }
}

impl<'a> IntoIterator for &'a Page {
    type Item = &'a Edge;
    type IntoIter = std::collections::btree_set::Iter<'a, Edge>;

    fn into_iter(self) -> Self::IntoIter {
        self.edges.iter()
    }
}

/// The graph families with a closed-form thickness formula, plus arbitrary
/// part lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GraphFamily {
    Knn,
    K1nn,
    K2nn,
    K11nn,
    Custom(Vec<u32>),
}

impl GraphFamily {
    pub fn part_sizes(&self, n: u32) -> Vec<u32> {
        match self {
            GraphFamily::Knn => vec![n, n],
            GraphFamily::K1nn => vec![1, n, n],
            GraphFamily::K2nn => vec![2, n, n],
            GraphFamily::K11nn => vec![1, 1, n, n],
            GraphFamily::Custom(sizes) => sizes.clone(),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            GraphFamily::Knn => "knn",
            GraphFamily::K1nn => "k1nn",
            GraphFamily::K2nn => "k2nn",
            GraphFamily::K11nn => "k11nn",
            GraphFamily::Custom(_) => "custom",
        }
    }

    /// Recognizes a named family from a part list, returning it with `n`.
    pub fn recognize(part_sizes: &[u32]) -> Option<(GraphFamily, u32)> {
        match *part_sizes {
            [a, b] if a == b && a >= 1 => Some((GraphFamily::Knn, a)),
            [1, a, b] if a == b && a >= 1 => Some((GraphFamily::K1nn, a)),
            [2, a, b] if a == b && a >= 1 => Some((GraphFamily::K2nn, a)),
            [1, 1, a, b] if a == b && a >= 1 => Some((GraphFamily::K11nn, a)),
            _ => None,
        }
    }
}

impl fmt::Display for GraphFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphFamily::Custom(sizes) => write!(f, "custom{sizes:?}"),
            named => f.write_str(named.name()),
        }
    }
}

impl FromStr for GraphFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "knn" => Ok(GraphFamily::Knn),
            "k1nn" => Ok(GraphFamily::K1nn),
            "k2nn" => Ok(GraphFamily::K2nn),
            "k11nn" => Ok(GraphFamily::K11nn),
            _ => Err(Error::UnsupportedFamily(s.to_string())),
        }
    }
}

/// Assignment of labeled vertices to parts for a part list.
///
/// Supported shapes: `[a,b]` gives parts U, V; `[1,a,b]` adds apex `x1`;
/// `[2,a,b]` puts `x1, x2` in one part; `[1,1,a,b]` gives `x1` and `x2`
/// their own parts. The degenerate `[1,1]` is the single edge `x1x2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartLayout {
    sizes: Vec<u32>,
    parts: Vec<Vec<VertexRef>>,
}

impl PartLayout {
    pub fn from_sizes(sizes: &[u32]) -> Result<Self> {
        validate_sizes(sizes)?;
        let us = |k: u32| (1..=k).map(VertexRef::u).collect::<Vec<_>>();
        let vs = |k: u32| (1..=k).map(VertexRef::v).collect::<Vec<_>>();
        let x1 = VertexRef::x1();
        let x2 = VertexRef::x2();
        let parts = match *sizes {
            [1, 1] => vec![vec![x1], vec![x2]],
            [a, b] => vec![us(a), vs(b)],
            [1, a, b] => vec![vec![x1], us(a), vs(b)],
            [2, a, b] => vec![vec![x1, x2], us(a), vs(b)],
            [1, 1, a, b] => vec![vec![x1], vec![x2], us(a), vs(b)],
            _ => return Err(Error::UnsupportedLayout(sizes.to_vec())),
        };
        Ok(PartLayout {
            sizes: sizes.to_vec(),
            parts,
        })
    }

    pub fn sizes(&self) -> &[u32] {
        &self.sizes
    }

    pub fn parts(&self) -> &[Vec<VertexRef>] {
        &self.parts
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexRef> + '_ {
        self.parts.iter().flatten().copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.parts.iter().map(Vec::len).sum()
    }

    pub fn part_of(&self, v: VertexRef) -> Option<usize> {
        self.parts.iter().position(|p| p.contains(&v))
    }

    /// Every cross-part pair, canonical.
    pub fn edges(&self) -> BTreeSet<Edge> {
        let mut out = BTreeSet::new();
        for (i, pi) in self.parts.iter().enumerate() {
            for pj in &self.parts[i + 1..] {
                for &a in pi {
                    for &b in pj {
                        out.insert(Edge::of(a, b));
                    }
                }
            }
        }
        out
    }
}

fn validate_sizes(sizes: &[u32]) -> Result<()> {
    if sizes.is_empty() {
        return Err(Error::invalid("empty part list"));
    }
    if sizes.contains(&0) {
        return Err(Error::invalid(format!("zero-size part in {sizes:?}")));
    }
    let total: u64 = sizes.iter().map(|&s| u64::from(s)).sum();
    if total < 2 {
        return Err(Error::invalid("at least two vertices required"));
    }
    Ok(())
}

/// All cross-part pairs for a supported part list.
pub fn complete_multipartite_edges(part_sizes: &[u32]) -> Result<BTreeSet<Edge>> {
    Ok(PartLayout::from_sizes(part_sizes)?.edges())
}

/// `sum_{i<j} p_i p_j`, for any part list.
pub fn edge_count(part_sizes: &[u32]) -> Result<u64> {
    validate_sizes(part_sizes)?;
    let mut total = 0u64;
    let mut seen = 0u64;
    for &s in part_sizes {
        total += seen * u64::from(s);
        seen += u64::from(s);
    }
    Ok(total)
}

/// Closed-form thickness for the named families.
///
/// `Knn` and `K1nn` give `ceil((n+2)/4)`; `K2nn` and `K11nn` give
/// `ceil((n+3)/4)`.
pub fn thickness_formula(family: &GraphFamily, n: u32) -> Result<u32> {
    if n == 0 {
        return Err(Error::invalid("n must be at least 1"));
    }
    match family {
        GraphFamily::Knn | GraphFamily::K1nn => Ok((n + 2).div_ceil(4)),
        GraphFamily::K2nn | GraphFamily::K11nn => Ok((n + 3).div_ceil(4)),
        GraphFamily::Custom(sizes) => Err(Error::UnsupportedFamily(format!(
            "no formula for custom part list {sizes:?}"
        ))),
    }
}

/// `max(1, ceil(e / (3v - 6)))`, and 1 when `v < 3`.
pub fn euler_lower_bound(v: u64, e: u64) -> u64 {
    if v < 3 {
        return 1;
    }
    e.div_ceil(3 * v - 6).max(1)
}
