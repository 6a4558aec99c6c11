//! Maximum bipartite matching (Hopcroft–Karp).

use std::collections::VecDeque;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BipartiteGraph {
    left: usize,
    right: usize,
    adjacency: Vec<Vec<usize>>,
}

impl BipartiteGraph {
    pub fn new(left: usize, right: usize) -> Self {
        BipartiteGraph { left, right, adjacency: vec![Vec::new(); left] }
    }

    pub fn add_edge(&mut self, l: usize, r: usize) {
        assert!(l < self.left && r < self.right, "edge ({l}, {r}) out of range");
        if !self.adjacency[l].contains(&r) {
            self.adjacency[l].push(r);
            self.adjacency[l].sort_unstable();
        }
    }

    pub fn left_count(&self) -> usize {
        self.left
    }

    pub fn right_count(&self) -> usize {
        self.right
    }

    pub fn neighbors(&self, l: usize) -> &[usize] {
        &self.adjacency[l]
    }

    pub fn has_edge(&self, l: usize, r: usize) -> bool {
        self.adjacency[l].binary_search(&r).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum()
    }
}

/// Pairs `(left, right)` of a maximum matching, sorted by left index.
pub fn maximum_bipartite_matching(bg: &BipartiteGraph) -> Vec<(usize, usize)> {
    const FREE: usize = usize::MAX;
    let mut match_left = vec![FREE; bg.left];
    let mut match_right = vec![FREE; bg.right];
    let mut dist = vec![0usize; bg.left];

    loop {
        // Layer the free left vertices and everything reachable by alternating paths.
        let mut queue = VecDeque::new();
        for l in 0..bg.left {
            if match_left[l] == FREE {
                dist[l] = 0;
                queue.push_back(l);
            } else {
                dist[l] = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(l) = queue.pop_front() {
            for &r in &bg.adjacency[l] {
                let next = match_right[r];
                if next == FREE {
                    found = true;
                } else if dist[next] == usize::MAX {
                    dist[next] = dist[l] + 1;
                    queue.push_back(next);
                }
            }
        }
        if !found {
            break;
        }
        for l in 0..bg.left {
            if match_left[l] == FREE {
                augment(l, bg, &mut match_left, &mut match_right, &mut dist);
            }
        }
    }

    (0..bg.left).filter(|&l| match_left[l] != FREE).map(|l| (l, match_left[l])).collect()
}

fn augment(
    l: usize,
    bg: &BipartiteGraph,
    match_left: &mut [usize],
    match_right: &mut [usize],
    dist: &mut [usize],
) -> bool {
    for &r in &bg.adjacency[l] {
        let next = match_right[r];
        let ok = next == usize::MAX
            || (dist[next] == dist[l] + 1 && augment(next, bg, match_left, match_right, dist));
        if ok {
            match_left[l] = r;
            match_right[r] = l;
            return true;
        }
    }
    dist[l] = usize::MAX;
    false
}
