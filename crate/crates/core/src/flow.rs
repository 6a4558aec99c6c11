//! Internally vertex-disjoint paths by unit-capacity max flow.
//!
//! Every vertex other than the two endpoints is split into an in-node and an
//! out-node joined by an arc of capacity one. Augmenting paths are found by
//! breadth-first search, so each round adds one path and at most `n` rounds
//! are needed.

use std::collections::VecDeque;

use crate::graph::Vertex;

#[derive(Clone, Debug)]
struct Arc {
    to: usize,
    cap: u32,
    /// Capacity before any flow was pushed.
    original: u32,
}

/// Undirected graph on `0..n`, edges added one at a time.
#[derive(Clone, Debug)]
pub struct DisjointPaths {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
}

impl DisjointPaths {
    pub fn new(n: usize) -> Self {
        DisjointPaths { n, edges: Vec::new() }
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) {
        self.edges.push((u, v));
    }

    /// A maximum set of `s`-`t` paths sharing no vertex other than `s` and
    /// `t`. A direct edge `{s, t}` contributes the path `[s, t]` once.
    pub fn solve(&self, s: Vertex, t: Vertex) -> Vec<Vec<Vertex>> {
        self.solve_up_to(s, t, usize::MAX)
    }

    /// Stops after `limit` paths.
    pub fn solve_up_to(&self, s: Vertex, t: Vertex, limit: usize) -> Vec<Vec<Vertex>> {
        assert!(s != t && s < self.n && t < self.n);
        let mut net = Network::new(2 * self.n);
        let inn = |v: Vertex| 2 * v;
        let out = |v: Vertex| 2 * v + 1;
        for v in 0..self.n {
            if v != s && v != t {
                net.add_arc(inn(v), out(v));
            }
        }
        for &(u, v) in &self.edges {
            if u == v {
                continue;
            }
            // No arc into s or out of t is ever useful.
            if v != s && u != t {
                net.add_arc(out(u), inn(v));
            }
            if u != s && v != t {
                net.add_arc(out(v), inn(u));
            }
        }
        let (src, sink) = (out(s), inn(t));
        let mut count = 0;
        while count < limit && net.augment(src, sink) {
            count += 1;
        }
        net.decompose(src, sink)
            .into_iter()
            .map(|nodes| {
                let mut path = vec![s];
                path.extend(nodes.iter().filter(|&&x| x % 2 == 0).map(|&x| x / 2));
                path
            })
            .collect()
    }
}

#[derive(Clone, Debug)]
struct Network {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
}

impl Network {
    fn new(nodes: usize) -> Self {
        Network { arcs: Vec::new(), out: vec![Vec::new(); nodes] }
    }

    fn add_arc(&mut self, from: usize, to: usize) {
        self.out[from].push(self.arcs.len());
        self.arcs.push(Arc { to, cap: 1, original: 1 });
        self.out[to].push(self.arcs.len());
        self.arcs.push(Arc { to: from, cap: 0, original: 0 });
    }

    fn augment(&mut self, src: usize, sink: usize) -> bool {
        let mut via = vec![usize::MAX; self.out.len()];
        let mut seen = vec![false; self.out.len()];
        seen[src] = true;
        let mut queue = VecDeque::from([src]);
        while let Some(x) = queue.pop_front() {
            for &a in &self.out[x] {
                let y = self.arcs[a].to;
                if self.arcs[a].cap > 0 && !seen[y] {
                    seen[y] = true;
                    via[y] = a;
                    if y == sink {
                        let mut node = sink;
                        while node != src {
                            let a = via[node];
                            self.arcs[a].cap -= 1;
                            self.arcs[a ^ 1].cap += 1;
                            node = self.arcs[a ^ 1].to;
                        }
                        return true;
                    }
                    queue.push_back(y);
                }
            }
        }
        false
    }

    /// Splits the flow into node sequences from `src` (exclusive) to `sink`.
    fn decompose(&self, src: usize, sink: usize) -> Vec<Vec<usize>> {
        let mut flow: Vec<u32> =
            self.arcs.iter().map(|a| a.original.saturating_sub(a.cap)).collect();
        let mut paths = Vec::new();
        loop {
            let mut node = src;
            let mut nodes = Vec::new();
            while node != sink {
                let Some(&a) = self.out[node].iter().find(|&&a| a % 2 == 0 && flow[a] > 0) else {
                    return paths;
                };
                flow[a] -= 1;
                node = self.arcs[a].to;
                nodes.push(node);
            }
            paths.push(nodes);
        }
    }
}
