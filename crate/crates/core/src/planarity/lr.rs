// Left-right planarity test with embedding extraction.
//
// Three DFS passes: orientation (heights, lowpoints, nesting depths),
// testing (conflict pairs of return-edge intervals), and embedding (which
// turns the sides assigned during testing into rotations). All passes use
// explicit stacks so recursion depth does not grow with the input.

use super::SimpleGraph;

const NONE: usize = usize::MAX;

#[derive(Clone, Copy, Debug, Default)]
struct Interval {
    low: Option<usize>,
    high: Option<usize>,
}

impl Interval {
    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }

    fn conflicting(&self, b: usize, lowpt: &[usize]) -> bool {
        match self.high {
            Some(h) => lowpt[h] > lowpt[b],
            None => false,
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }

    fn lowest(&self, lowpt: &[usize]) -> Option<usize> {
        let l = self.left.low.map(|e| lowpt[e]);
        let r = self.right.low.map(|e| lowpt[e]);
        match (l, r) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }
}

struct Scratch {
    oriented: Vec<Vec<bool>>,
    next: Vec<usize>,
    // pending[v]: tree edge out of v whose subtree is being explored
    pending: Vec<usize>,
    resumed: Vec<bool>,
}

struct State<'g> {
    g: &'g SimpleGraph,
    // per vertex
    height: Vec<usize>,
    parent_edge: Vec<usize>,
    ordered: Vec<Vec<usize>>,
    // per oriented edge; edge ids are assigned in orientation order
    src: Vec<usize>,
    dst: Vec<usize>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting: Vec<i64>,
    reference: Vec<Option<usize>>,
    side: Vec<i8>,
    lowpt_edge: Vec<usize>,
    stack_bottom: Vec<usize>,
    stack: Vec<ConflictPair>,
    roots: Vec<usize>,
}

/// Returns per-vertex clockwise neighbor orders when `g` is planar. With
/// `embed == false` the orders are left empty.
pub(super) fn run(g: &SimpleGraph, embed: bool) -> Option<Vec<Vec<usize>>> {
    let n = g.vertex_count();
    let m = g.edge_count();
    if n > 2 && m > 3 * n - 6 {
        return None;
    }
    let mut st = State {
        g,
        height: vec![NONE; n],
        parent_edge: vec![NONE; n],
        ordered: vec![Vec::new(); n],
        src: Vec::with_capacity(m),
        dst: Vec::with_capacity(m),
        lowpt: Vec::with_capacity(m),
        lowpt2: Vec::with_capacity(m),
        nesting: Vec::with_capacity(m),
        reference: vec![None; m],
        side: vec![1; m],
        lowpt_edge: vec![NONE; m],
        stack_bottom: vec![0; m],
        stack: Vec::new(),
        roots: Vec::new(),
    };

    let mut scratch = Scratch {
        oriented: (0..n).map(|v| vec![false; g.degree(v)]).collect(),
        next: vec![0; n],
        pending: vec![NONE; n],
        resumed: vec![false; n],
    };
    for v in 0..n {
        if st.height[v] == NONE {
            st.height[v] = 0;
            st.roots.push(v);
            st.orient(v, &mut scratch);
        }
    }

    let mut out_edges: Vec<Vec<usize>> = vec![Vec::new(); n];
    for e in 0..st.src.len() {
        out_edges[st.src[e]].push(e);
    }
    for (v, list) in out_edges.iter().enumerate() {
        let mut l = list.clone();
        l.sort_by_key(|&e| st.nesting[e]);
        st.ordered[v] = l;
    }

    scratch.next.fill(0);
    for i in 0..st.roots.len() {
        let root = st.roots[i];
        if !st.test(root, &mut scratch) {
            return None;
        }
    }
    if !embed {
        return Some(Vec::new());
    }

    for e in 0..st.src.len() {
        let s = st.sign(e);
        st.nesting[e] *= i64::from(s);
    }
    for v in 0..n {
        st.ordered[v].sort_by_key(|&e| st.nesting[e]);
    }
    Some(st.embed())
}

impl State<'_> {
    fn orient(&mut self, root: usize, scratch: &mut Scratch) {
        let g = self.g;
        let Scratch {
            oriented,
            next,
            pending,
            ..
        } = scratch;
        let mut dfs = vec![root];
        'outer: while let Some(v) = dfs.pop() {
            let e = self.parent_edge[v];
            while next[v] < g.degree(v) {
                let idx = next[v];
                let w = g.neighbors(v)[idx];
                let vw;
                if pending[v] != NONE {
                    vw = pending[v];
                    pending[v] = NONE;
                } else {
                    if oriented[v][idx] {
                        next[v] += 1;
                        continue;
                    }
                    oriented[v][idx] = true;
                    let back = g
                        .neighbors(w)
                        .iter()
                        .position(|&x| x == v)
                        .expect("symmetric adjacency");
                    oriented[w][back] = true;
                    vw = self.src.len();
                    self.src.push(v);
                    self.dst.push(w);
                    self.lowpt.push(self.height[v]);
                    self.lowpt2.push(self.height[v]);
                    self.nesting.push(0);
                    if self.height[w] == NONE {
                        self.parent_edge[w] = vw;
                        self.height[w] = self.height[v] + 1;
                        pending[v] = vw;
                        dfs.push(v);
                        dfs.push(w);
                        continue 'outer;
                    }
                    self.lowpt[vw] = self.height[w];
                }
                self.nesting[vw] = 2 * self.lowpt[vw] as i64;
                if self.lowpt2[vw] < self.height[v] {
                    self.nesting[vw] += 1;
                }
                if e != NONE {
                    if self.lowpt[vw] < self.lowpt[e] {
                        self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[vw]);
                        self.lowpt[e] = self.lowpt[vw];
                    } else if self.lowpt[vw] > self.lowpt[e] {
                        self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[vw]);
                    } else {
                        self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[vw]);
                    }
                }
                next[v] += 1;
            }
        }
    }

    fn test(&mut self, root: usize, scratch: &mut Scratch) -> bool {
        let Scratch { next, resumed, .. } = scratch;
        let mut dfs = vec![root];
        'outer: while let Some(v) = dfs.pop() {
            let e = self.parent_edge[v];
            while next[v] < self.ordered[v].len() {
                let ei = self.ordered[v][next[v]];
                let w = self.dst[ei];
                if resumed[v] {
                    resumed[v] = false;
                } else {
                    self.stack_bottom[ei] = self.stack.len();
                    if ei == self.parent_edge[w] {
                        resumed[v] = true;
                        dfs.push(v);
                        dfs.push(w);
                        continue 'outer;
                    }
                    self.lowpt_edge[ei] = ei;
                    self.stack.push(ConflictPair {
                        left: Interval::default(),
                        right: Interval {
                            low: Some(ei),
                            high: Some(ei),
                        },
                    });
                }
                if self.lowpt[ei] < self.height[v] {
                    if next[v] == 0 {
                        self.lowpt_edge[e] = self.lowpt_edge[ei];
                    } else if !self.add_constraints(ei, e) {
                        return false;
                    }
                }
                next[v] += 1;
            }
            if e != NONE {
                self.remove_back_edges(e);
            }
        }
        true
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p = ConflictPair::default();
        while let Some(mut q) = self.stack.pop() {
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            let qlow = q.right.low.expect("non-empty interval has a low edge");
            if self.lowpt[qlow] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else if let Some(l) = p.right.low {
                    self.reference[l] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.reference[qlow] = Some(self.lowpt_edge[e]);
            }
            if self.stack.len() == self.stack_bottom[ei] {
                break;
            }
        }
        while let Some(top) = self.stack.last() {
            if !(top.left.conflicting(ei, &self.lowpt) || top.right.conflicting(ei, &self.lowpt)) {
                break;
            }
            let mut q = self.stack.pop().expect("checked non-empty");
            if q.right.conflicting(ei, &self.lowpt) {
                q.swap();
            }
            if q.right.conflicting(ei, &self.lowpt) {
                return false;
            }
            if let Some(l) = p.right.low {
                self.reference[l] = q.right.high;
            }
            if q.right.low.is_some() {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else if let Some(l) = p.left.low {
                self.reference[l] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: usize) {
        let u = self.src[e];
        while let Some(top) = self.stack.last() {
            if top.lowest(&self.lowpt) != Some(self.height[u]) {
                break;
            }
            let p = self.stack.pop().expect("checked non-empty");
            if let Some(l) = p.left.low {
                self.side[l] = -1;
            }
        }
        if let Some(mut p) = self.stack.pop() {
            while let Some(h) = p.left.high {
                if self.dst[h] != u {
                    break;
                }
                p.left.high = self.reference[h];
            }
            if p.left.high.is_none() {
                if let Some(l) = p.left.low.take() {
                    self.reference[l] = p.right.low;
                    self.side[l] = -1;
                }
            }
            while let Some(h) = p.right.high {
                if self.dst[h] != u {
                    break;
                }
                p.right.high = self.reference[h];
            }
            if p.right.high.is_none() {
                if let Some(l) = p.right.low.take() {
                    self.reference[l] = p.left.low;
                    self.side[l] = -1;
                }
            }
            self.stack.push(p);
        }
        if self.lowpt[e] < self.height[u] {
            if let Some(top) = self.stack.last() {
                let (hl, hr) = (top.left.high, top.right.high);
                self.reference[e] = match (hl, hr) {
                    (Some(l), None) => Some(l),
                    (Some(l), Some(r)) if self.lowpt[l] > self.lowpt[r] => Some(l),
                    _ => hr,
                };
            }
        }
    }

    fn sign(&mut self, e: usize) -> i8 {
        let mut chain = vec![e];
        while let Some(r) = self.reference[*chain.last().expect("non-empty")] {
            chain.push(r);
        }
        for i in (0..chain.len() - 1).rev() {
            let (a, b) = (chain[i], chain[i + 1]);
            self.side[a] *= self.side[b];
            self.reference[a] = None;
        }
        self.side[e]
    }

    fn embed(&mut self) -> Vec<Vec<usize>> {
        let n = self.g.vertex_count();
        let mut rot: Vec<Vec<usize>> = self
            .ordered
            .iter()
            .map(|es| es.iter().map(|&e| self.dst[e]).collect())
            .collect();
        let mut left_ref = vec![NONE; n];
        let mut right_ref = vec![NONE; n];
        let mut next = vec![0usize; n];
        for i in 0..self.roots.len() {
            let mut dfs = vec![self.roots[i]];
            'outer: while let Some(v) = dfs.pop() {
                while next[v] < self.ordered[v].len() {
                    let ei = self.ordered[v][next[v]];
                    next[v] += 1;
                    let w = self.dst[ei];
                    if ei == self.parent_edge[w] {
                        rot[w].insert(0, v);
                        left_ref[v] = w;
                        right_ref[v] = w;
                        dfs.push(v);
                        dfs.push(w);
                        continue 'outer;
                    }
                    if self.side[ei] == 1 {
                        let pos = position(&rot[w], right_ref[w]);
                        rot[w].insert(pos + 1, v);
                    } else {
                        let pos = position(&rot[w], left_ref[w]);
                        rot[w].insert(pos, v);
                        left_ref[w] = v;
                    }
                }
            }
        }
        rot
    }
}

fn position(list: &[usize], x: usize) -> usize {
    list.iter()
        .position(|&y| y == x)
        .expect("reference neighbor is already in the rotation")
}
