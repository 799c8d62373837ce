use std::collections::HashMap;

use super::SimpleGraph;
use crate::error::{Error, Result};

/// Cyclic neighbor order at every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationSystem {
    orders: Vec<Vec<usize>>,
}

impl RotationSystem {
    pub fn from_orders(orders: Vec<Vec<usize>>) -> Self {
        RotationSystem { orders }
    }

    pub fn order(&self, v: usize) -> &[usize] {
        &self.orders[v]
    }

    pub fn orders(&self) -> &[Vec<usize>] {
        &self.orders
    }

    pub fn vertex_count(&self) -> usize {
        self.orders.len()
    }

    /// Traces every face as a closed walk of vertices. A half-edge `(v, w)`
    /// is followed by `(w, x)` where `x` comes after `v` in the order at `w`.
    pub fn faces(&self) -> Result<Vec<Vec<usize>>> {
        let n = self.orders.len();
        let mut slot: HashMap<(usize, usize), usize> = HashMap::new();
        let mut offset = vec![0usize; n + 1];
        for v in 0..n {
            offset[v + 1] = offset[v] + self.orders[v].len();
            for (i, &w) in self.orders[v].iter().enumerate() {
                if w >= n || w == v {
                    return Err(Error::invalid(format!(
                        "rotation at {v} names bad neighbor {w}"
                    )));
                }
                if slot.insert((v, w), i).is_some() {
                    return Err(Error::invalid(format!(
                        "rotation at {v} repeats neighbor {w}"
                    )));
                }
            }
        }
        for &(v, w) in slot.keys() {
            if !slot.contains_key(&(w, v)) {
                return Err(Error::invalid(format!("half-edge {v}->{w} has no twin")));
            }
        }
        let mut seen = vec![false; offset[n]];
        let mut faces = Vec::new();
        for v in 0..n {
            for i in 0..self.orders[v].len() {
                if seen[offset[v] + i] {
                    continue;
                }
                let mut face = Vec::new();
                let (mut a, mut ia) = (v, i);
                while !seen[offset[a] + ia] {
                    seen[offset[a] + ia] = true;
                    face.push(a);
                    let b = self.orders[a][ia];
                    let back = slot[&(b, a)];
                    let next = (back + 1) % self.orders[b].len();
                    a = b;
                    ia = next;
                }
                faces.push(face);
            }
        }
        Ok(faces)
    }

    /// Face count with the outer face shared across components, so that
    /// `V - E + F = 1 + C` holds for a planar embedding.
    pub fn face_count(&self) -> Result<usize> {
        let faces = self.faces()?;
        let g = self.to_graph()?;
        let (comp, c) = g.components();
        let mut has_edges = vec![false; c];
        for v in 0..g.vertex_count() {
            if g.degree(v) > 0 {
                has_edges[comp[v]] = true;
            }
        }
        let edgeless = has_edges.iter().filter(|&&b| !b).count();
        // each component contributes its own outer face; merge them into one
        Ok(faces.len() + edgeless + 1 - c)
    }

    fn to_graph(&self) -> Result<SimpleGraph> {
        let mut g = SimpleGraph::new(self.orders.len());
        for (v, order) in self.orders.iter().enumerate() {
            for &w in order {
                if v < w {
                    g.add_edge(v, w)?;
                }
            }
        }
        Ok(g)
    }
}

/// Checks that `rot` is a rotation system of `g` and that face tracing
/// satisfies `V - E + F = 2` in every component.
///
/// Returns an error when `rot` does not describe `g`'s edges.
pub fn validate_embedding(g: &SimpleGraph, rot: &RotationSystem) -> Result<bool> {
    let n = g.vertex_count();
    if rot.vertex_count() != n {
        return Err(Error::invalid(format!(
            "rotation covers {} vertices, graph has {n}",
            rot.vertex_count()
        )));
    }
    for v in 0..n {
        let mut a: Vec<usize> = rot.order(v).to_vec();
        let mut b: Vec<usize> = g.neighbors(v).to_vec();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return Err(Error::invalid(format!(
                "rotation at {v} does not match its neighbors"
            )));
        }
    }
    let faces = rot.faces()?;
    let (comp, c) = g.components();
    let mut verts = vec![0i64; c];
    let mut half_edges = vec![0i64; c];
    let mut face_count = vec![0i64; c];
    for v in 0..n {
        verts[comp[v]] += 1;
        half_edges[comp[v]] += g.degree(v) as i64;
    }
    for f in &faces {
        face_count[comp[f[0]]] += 1;
    }
    for k in 0..c {
        let e = half_edges[k] / 2;
        // an isolated vertex has one face and no traced walks
        let f = if e == 0 { 1 } else { face_count[k] };
        if verts[k] - e + f != 2 {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::super::graphs::*;
    use super::super::planar_embedding;
    use super::*;

    #[test]
    fn cycle_has_two_faces() {
        let g = cycle(4);
        let rot = planar_embedding(&g).unwrap();
        assert!(validate_embedding(&g, &rot).unwrap());
        assert_eq!(rot.face_count().unwrap(), 2);
    }

    #[test]
    fn tree_has_one_face() {
        let g =
            SimpleGraph::from_edges(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)]).unwrap();
        let rot = planar_embedding(&g).unwrap();
        assert!(validate_embedding(&g, &rot).unwrap());
        assert_eq!(rot.face_count().unwrap(), 1);
    }

    #[test]
    fn k4_and_octahedron() {
        let g = complete(4);
        let rot = planar_embedding(&g).unwrap();
        assert!(validate_embedding(&g, &rot).unwrap());
        assert_eq!(rot.face_count().unwrap(), 4);
        let g = octahedron();
        let rot = planar_embedding(&g).unwrap();
        assert!(validate_embedding(&g, &rot).unwrap());
        assert_eq!(rot.face_count().unwrap(), 8);
    }

    #[test]
    fn k5_has_no_embedding() {
        assert!(planar_embedding(&complete(5)).is_none());
    }

    #[test]
    fn swapped_cycle_rotation_is_still_planar() {
        let g = cycle(4);
        let mut orders = planar_embedding(&g).unwrap().orders().to_vec();
        orders[0].reverse();
        assert!(validate_embedding(&g, &RotationSystem::from_orders(orders)).unwrap());
    }

    #[test]
    fn bad_rotation_of_k4_fails_euler() {
        // K4 with one vertex's order flipped is a torus-like embedding
        let g = complete(4);
        let mut orders = planar_embedding(&g).unwrap().orders().to_vec();
        orders[0].swap(0, 1);
        assert!(!validate_embedding(&g, &RotationSystem::from_orders(orders)).unwrap());
    }

    #[test]
    fn inconsistent_rotation_is_an_error() {
        let g = cycle(4);
        let rot = RotationSystem::from_orders(vec![vec![1], vec![0, 2], vec![1, 3], vec![2, 0]]);
        assert!(validate_embedding(&g, &rot).is_err());
        let short = RotationSystem::from_orders(vec![vec![1], vec![0]]);
        assert!(validate_embedding(&g, &short).is_err());
    }

    #[test]
    fn disconnected_face_count() {
        let mut g = SimpleGraph::new(9);
        for (a, b) in cycle(4).edges() {
            g.add_edge(a, b).unwrap();
            g.add_edge(a + 4, b + 4).unwrap();
        }
        let rot = planar_embedding(&g).unwrap();
        assert!(validate_embedding(&g, &rot).unwrap());
        // V - E + F = 1 + C: 9 - 8 + F = 4
        assert_eq!(rot.face_count().unwrap(), 3);
    }
}
