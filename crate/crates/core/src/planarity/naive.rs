// Exhaustive Kuratowski minor search.
//
// A connected graph has a K5 (resp. K3,3) minor iff its vertex set splits
// into exactly 5 (resp. 6) connected blocks whose quotient contains K5
// (resp. K3,3) as a subgraph: leftover vertices can always be absorbed into
// a neighboring block without losing adjacency. Each component is searched
// over all such partitions, with vertex sets as bitmasks.

use super::SimpleGraph;
use crate::error::{Error, Result};

/// Largest graph accepted by [`naive_is_planar`].
pub const NAIVE_VERTEX_LIMIT: usize = 12;

/// Decides planarity by searching for a K5 or K3,3 minor (Wagner's
/// theorem). Exponential; limited to [`NAIVE_VERTEX_LIMIT`] vertices.
pub fn naive_is_planar(g: &SimpleGraph) -> Result<bool> {
    let n = g.vertex_count();
    if n > NAIVE_VERTEX_LIMIT {
        return Err(Error::UnsupportedSize {
            vertices: n,
            limit: NAIVE_VERTEX_LIMIT,
        });
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect();
    let (comp, c) = g.components();
    for k in 0..c {
        let verts: Vec<usize> = (0..n).filter(|&v| comp[v] == k).collect();
        if verts.len() >= 5 && has_kuratowski_minor(&adj, &verts) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn has_kuratowski_minor(adj: &[u32], verts: &[usize]) -> bool {
    let mut search = Search {
        adj,
        verts,
        blocks: Vec::with_capacity(6),
        target: 5,
    };
    if search.assign(0) {
        return true;
    }
    if verts.len() >= 6 {
        search.target = 6;
        search.blocks.clear();
        return search.assign(0);
    }
    false
}

struct Search<'a> {
    adj: &'a [u32],
    verts: &'a [usize],
    blocks: Vec<u32>,
    target: usize,
}

impl Search<'_> {
    // restricted-growth enumeration of set partitions into `target` blocks
    fn assign(&mut self, i: usize) -> bool {
        let remaining = self.verts.len() - i;
        if self.blocks.len() + remaining < self.target {
            return false;
        }
        if i == self.verts.len() {
            return self.check();
        }
        let bit = 1u32 << self.verts[i];
        for b in 0..self.blocks.len() {
            self.blocks[b] |= bit;
            let found = self.assign(i + 1);
            self.blocks[b] &= !bit;
            if found {
                return true;
            }
        }
        if self.blocks.len() < self.target {
            self.blocks.push(bit);
            let found = self.assign(i + 1);
            self.blocks.pop();
            if found {
                return true;
            }
        }
        false
    }

    fn check(&self) -> bool {
        if !self.blocks.iter().all(|&b| connected(self.adj, b)) {
            return false;
        }
        let k = self.blocks.len();
        let mut quotient = [0u8; 6];
        for (i, &block) in self.blocks.iter().enumerate() {
            let reach = neighborhood(self.adj, block);
            for j in 0..k {
                if i != j && reach & self.blocks[j] != 0 {
                    quotient[i] |= 1 << j;
                }
            }
        }
        match k {
            5 => (0..5).all(|i| quotient[i].count_ones() == 4),
            6 => has_k33(&quotient),
            _ => false,
        }
    }
}

fn neighborhood(adj: &[u32], set: u32) -> u32 {
    let mut out = 0;
    let mut rest = set;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        out |= adj[v];
        rest &= rest - 1;
    }
    out
}

fn connected(adj: &[u32], set: u32) -> bool {
    let start = set & set.wrapping_neg();
    let mut seen = start;
    let mut frontier = start;
    while frontier != 0 {
        let next = neighborhood(adj, frontier) & set & !seen;
        seen |= next;
        frontier = next;
    }
    seen == set
}

fn has_k33(q: &[u8; 6]) -> bool {
    // block 0 on side A with two of the other five
    for a in 1..6 {
        for b in a + 1..6 {
            let side_a = [0, a, b];
            let side_b: Vec<usize> = (1..6).filter(|&x| x != a && x != b).collect();
            if side_a
                .iter()
                .all(|&x| side_b.iter().all(|&y| q[x] & (1 << y) != 0))
            {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::super::graphs::*;
    use super::*;

    #[test]
    fn kuratowski_graphs() {
        assert!(!naive_is_planar(&complete(5)).unwrap());
        assert!(!naive_is_planar(&complete_bipartite(3, 3)).unwrap());
        assert!(naive_is_planar(&complete(4)).unwrap());
    }

    #[test]
    fn examples() {
        assert!(!naive_is_planar(&petersen()).unwrap());
        assert!(naive_is_planar(&grid(3, 3)).unwrap());
        let mut g = complete_bipartite(3, 3);
        g.remove_edge(0, 3);
        assert!(naive_is_planar(&g).unwrap());
        assert!(naive_is_planar(&octahedron()).unwrap());
    }

    #[test]
    fn subdivisions_are_found() {
        // K3,3 with every edge subdivided has 15 vertices; use K5 with
        // three edges subdivided instead (8 vertices)
        let mut g = SimpleGraph::new(8);
        let mut extra = 5;
        for (a, b) in complete(5).edges() {
            if extra < 8 && a == 0 {
                g.add_edge(a, extra).unwrap();
                g.add_edge(extra, b).unwrap();
                extra += 1;
            } else {
                g.add_edge(a, b).unwrap();
            }
        }
        assert!(!naive_is_planar(&g).unwrap());
    }

    #[test]
    fn size_guard() {
        assert!(matches!(
            naive_is_planar(&SimpleGraph::new(13)),
            Err(Error::UnsupportedSize { vertices: 13, .. })
        ));
        assert!(naive_is_planar(&SimpleGraph::new(12)).unwrap());
    }

    #[test]
    fn disconnected_components_are_searched_separately() {
        // two disjoint K4s on 8 vertices contain no minor even though the
        // union has enough vertices for one
        let mut g = SimpleGraph::new(8);
        for (a, b) in complete(4).edges() {
            g.add_edge(a, b).unwrap();
            g.add_edge(a + 4, b + 4).unwrap();
        }
        assert!(naive_is_planar(&g).unwrap());
    }
}
