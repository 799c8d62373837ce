//! Small named graphs for tests, benchmarks and the oracle.

use super::SimpleGraph;

fn build(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> SimpleGraph {
    SimpleGraph::from_edges(n, edges).expect("generator edges are simple")
}

/// `K_n`.
pub fn complete(n: usize) -> SimpleGraph {
    build(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))))
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> SimpleGraph {
    build(a + b, (0..a).flat_map(|x| (a..a + b).map(move |y| (x, y))))
}

/// Complete multipartite graph; parts are consecutive index ranges.
pub fn complete_multipartite(sizes: &[usize]) -> SimpleGraph {
    let n: usize = sizes.iter().sum();
    let mut part = Vec::with_capacity(n);
    for (i, &s) in sizes.iter().enumerate() {
        part.extend(std::iter::repeat(i).take(s));
    }
    let part = &part;
    build(
        n,
        (0..n).flat_map(|a| {
            (a + 1..n)
                .filter(move |&b| part[a] != part[b])
                .map(move |b| (a, b))
        }),
    )
}

/// `K_{2,2,2}`.
pub fn octahedron() -> SimpleGraph {
    complete_multipartite(&[2, 2, 2])
}

pub fn petersen() -> SimpleGraph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
    build(10, outer.chain(spokes).chain(inner))
}

/// `rows x cols` grid.
pub fn grid(rows: usize, cols: usize) -> SimpleGraph {
    let id = move |r: usize, c: usize| r * cols + c;
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    build(rows * cols, edges)
}

/// Panics if `n < 3`.
pub fn cycle(n: usize) -> SimpleGraph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    build(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn path(n: usize) -> SimpleGraph {
    build(n, (1..n).map(|i| (i - 1, i)))
}

/// Hub `0` joined to the cycle `1..=rim`.
pub fn wheel(rim: usize) -> SimpleGraph {
    assert!(rim >= 3, "a wheel needs at least 3 rim vertices");
    let spokes = (1..=rim).map(|i| (0, i));
    let rim_edges = (1..=rim).map(move |i| (i, i % rim + 1));
    build(rim + 1, spokes.chain(rim_edges))
}
