//! Edge-colored graphs and the plain simple graphs used by the source
//! problems of the reductions.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;

pub type Vertex = usize;

/// Dense index of a color in a graph's color list.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Color(pub usize);

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Sorted, duplicate-free set of colors carried by one edge.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ColorSet(Vec<Color>);

impl ColorSet {
    pub fn new<I: IntoIterator<Item = Color>>(colors: I) -> Self {
        let mut v: Vec<Color> = colors.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        ColorSet(v)
    }

    pub fn contains(&self, c: Color) -> bool {
        self.0.binary_search(&c).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Color> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Color] {
        &self.0
    }

    pub fn intersection(&self, other: &ColorSet) -> ColorSet {
        ColorSet(self.0.iter().copied().filter(|&c| other.contains(c)).collect())
    }

    /// Smallest color shared with `other`.
    pub fn first_common(&self, other: &ColorSet) -> Option<Color> {
        self.0.iter().copied().find(|&c| other.contains(c))
    }

    fn retain<F: FnMut(Color) -> bool>(&mut self, mut keep: F) {
        self.0.retain(|&c| keep(c));
    }
}

impl FromIterator<Color> for ColorSet {
    fn from_iter<I: IntoIterator<Item = Color>>(iter: I) -> Self {
        ColorSet::new(iter)
    }
}

fn edge_key(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Undirected graph whose edges each carry a nonempty set of colors.
///
/// Colors are opaque string identifiers mapped to dense [`Color`] indices in
/// declaration order. Parallel relations between the same pair of vertices
/// are modeled as several colors on one edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoredGraph {
    vertex_count: usize,
    colors: Vec<String>,
    edges: BTreeMap<(Vertex, Vertex), ColorSet>,
    adjacency: Vec<Vec<Vertex>>,
}

impl EdgeColoredGraph {
    /// Graph on `vertex_count` isolated vertices with the given color list.
    pub fn new<S: Into<String>>(
        vertex_count: usize,
        colors: impl IntoIterator<Item = S>,
    ) -> Result<Self, GraphError> {
        let colors: Vec<String> = colors.into_iter().map(Into::into).collect();
        let mut seen = BTreeSet::new();
        for name in &colors {
            if name.is_empty() || name.contains(|ch: char| ch.is_whitespace() || ch == ',' || ch == '#') {
                return Err(GraphError::InvalidColorName(name.clone()));
            }
            if !seen.insert(name.as_str()) {
                return Err(GraphError::DuplicateColor(name.clone()));
            }
        }
        Ok(EdgeColoredGraph {
            vertex_count,
            colors,
            edges: BTreeMap::new(),
            adjacency: vec![Vec::new(); vertex_count],
        })
    }

    /// Assembles a graph without checking any invariant. Out-of-range
    /// endpoints and self-loops are kept in the edge list but left out of
    /// the adjacency lists; `validate_instance` reports them.
    pub fn from_parts_unchecked(
        vertex_count: usize,
        colors: Vec<String>,
        edges: impl IntoIterator<Item = (Vertex, Vertex, ColorSet)>,
    ) -> Self {
        let mut g = EdgeColoredGraph {
            vertex_count,
            colors,
            edges: BTreeMap::new(),
            adjacency: vec![Vec::new(); vertex_count],
        };
        for (u, v, set) in edges {
            g.edges.insert(edge_key(u, v), set);
        }
        g.rebuild_adjacency();
        g
    }

    fn rebuild_adjacency(&mut self) {
        let n = self.vertex_count;
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in self.edges.keys() {
            if u != v && u < n && v < n {
                adjacency[u].push(v);
                adjacency[v].push(u);
            }
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        self.adjacency = adjacency;
    }

    pub fn add_edge<I: IntoIterator<Item = Color>>(
        &mut self,
        u: Vertex,
        v: Vertex,
        colors: I,
    ) -> Result<(), GraphError> {
        let set = ColorSet::new(colors);
        for w in [u, v] {
            if w >= self.vertex_count {
                return Err(GraphError::VertexOutOfRange { vertex: w, vertex_count: self.vertex_count });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if set.is_empty() {
            return Err(GraphError::EmptyColorSet(u, v));
        }
        if let Some(c) = set.iter().find(|c| c.0 >= self.colors.len()) {
            return Err(GraphError::UnknownColor(c.to_string()));
        }
        let key = edge_key(u, v);
        if self.edges.contains_key(&key) {
            return Err(GraphError::DuplicateEdge(key.0, key.1));
        }
        self.edges.insert(key, set);
        let pos = self.adjacency[u].binary_search(&v).unwrap_err();
        self.adjacency[u].insert(pos, v);
        let pos = self.adjacency[v].binary_search(&u).unwrap_err();
        self.adjacency[v].insert(pos, u);
        Ok(())
    }

    /// Adds an edge whose colors are given by name.
    pub fn add_edge_named(&mut self, u: Vertex, v: Vertex, names: &[&str]) -> Result<(), GraphError> {
        let colors = names
            .iter()
            .map(|name| self.color_id(name).ok_or_else(|| GraphError::UnknownColor(name.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        self.add_edge(u, v, colors)
    }

    /// Adds `colors` to the edge `{u, v}`, creating the edge if needed.
    pub fn add_colors<I: IntoIterator<Item = Color>>(
        &mut self,
        u: Vertex,
        v: Vertex,
        colors: I,
    ) -> Result<(), GraphError> {
        let key = edge_key(u, v);
        match self.edges.get(&key) {
            None => self.add_edge(u, v, colors),
            Some(existing) => {
                let merged = ColorSet::new(existing.iter().chain(colors));
                if let Some(c) = merged.iter().find(|c| c.0 >= self.colors.len()) {
                    return Err(GraphError::UnknownColor(c.to_string()));
                }
                self.edges.insert(key, merged);
                Ok(())
            }
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn color_count(&self) -> usize {
        self.colors.len()
    }

    pub fn color_names(&self) -> &[String] {
        &self.colors
    }

    pub fn color_name(&self, c: Color) -> &str {
        &self.colors[c.0]
    }

    pub fn color_id(&self, name: &str) -> Option<Color> {
        self.colors.iter().position(|c| c == name).map(Color)
    }

    pub fn colors(&self) -> impl Iterator<Item = Color> {
        (0..self.colors.len()).map(Color)
    }

    pub fn neighbors(&self, u: Vertex) -> &[Vertex] {
        &self.adjacency[u]
    }

    pub fn degree(&self, u: Vertex) -> usize {
        self.adjacency[u].len()
    }

    pub fn edge_colors(&self, u: Vertex, v: Vertex) -> Option<&ColorSet> {
        self.edges.get(&edge_key(u, v))
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edges.contains_key(&edge_key(u, v))
    }

    pub fn edge_has_color(&self, u: Vertex, v: Vertex, c: Color) -> bool {
        self.edge_colors(u, v).is_some_and(|set| set.contains(c))
    }

    /// Neighbors of `u` joined to it by an edge carrying `c`.
    pub fn neighbors_with_color(&self, u: Vertex, c: Color) -> impl Iterator<Item = Vertex> + '_ {
        self.adjacency[u].iter().copied().filter(move |&w| self.edge_has_color(u, w, c))
    }

    /// Edges as `(u, v, colors)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex, &ColorSet)> {
        self.edges.iter().map(|(&(u, v), set)| (u, v, set))
    }

    fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v >= self.vertex_count {
            return Err(GraphError::VertexOutOfRange { vertex: v, vertex_count: self.vertex_count });
        }
        Ok(())
    }

    /// Drops every edge incident to a vertex of `removed`. Vertex indices are
    /// preserved, so removed vertices stay behind as isolated vertices.
    pub fn remove_vertices(&self, removed: &[Vertex]) -> Result<Self, GraphError> {
        let mut mask = vec![false; self.vertex_count];
        for &v in removed {
            self.check_vertex(v)?;
            mask[v] = true;
        }
        Ok(self.filter_edges(|u, v, set| (!mask[u] && !mask[v]).then(|| set.clone())))
    }

    /// Deletes the listed colors from every edge; edges left without colors
    /// disappear.
    pub fn remove_colors(&self, colors: &[Color]) -> Result<Self, GraphError> {
        for c in colors {
            if c.0 >= self.colors.len() {
                return Err(GraphError::UnknownColor(c.to_string()));
            }
        }
        Ok(self.filter_edges(|_, _, set| {
            let mut set = set.clone();
            set.retain(|c| !colors.contains(&c));
            (!set.is_empty()).then_some(set)
        }))
    }

    /// Keeps only the listed colors on every edge.
    pub fn keep_colors(&self, colors: &[Color]) -> Result<Self, GraphError> {
        let dropped: Vec<Color> = self.colors().filter(|c| !colors.contains(c)).collect();
        for c in colors {
            if c.0 >= self.colors.len() {
                return Err(GraphError::UnknownColor(c.to_string()));
            }
        }
        self.remove_colors(&dropped)
    }

    pub fn remove_edge(&self, u: Vertex, v: Vertex) -> Self {
        let key = edge_key(u, v);
        self.filter_edges(|a, b, set| ((a, b) != key).then(|| set.clone()))
    }

    fn filter_edges<F>(&self, mut f: F) -> Self
    where
        F: FnMut(Vertex, Vertex, &ColorSet) -> Option<ColorSet>,
    {
        let edges = self
            .edges
            .iter()
            .filter_map(|(&(u, v), set)| f(u, v, set).map(|s| ((u, v), s)))
            .collect();
        let mut g = EdgeColoredGraph {
            vertex_count: self.vertex_count,
            colors: self.colors.clone(),
            edges,
            adjacency: Vec::new(),
        };
        g.rebuild_adjacency();
        g
    }

    /// Underlying simple graph, forgetting colors.
    pub fn to_simple(&self) -> SimpleGraph {
        let mut g = SimpleGraph::new(self.vertex_count);
        for (u, v, _) in self.edges() {
            if u != v && u < self.vertex_count && v < self.vertex_count {
                g.add_edge(u, v);
            }
        }
        g
    }
}

/// Undirected simple graph with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    adjacency: Vec<Vec<Vertex>>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        SimpleGraph { adjacency: vec![Vec::new(); n] }
    }

    /// Builds a graph from an edge list; loops and repeated edges are ignored.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Self {
        let mut g = SimpleGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Inserts `{u, v}`; returns false for loops and edges already present.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> bool {
        if u == v || self.has_edge(u, v) {
            return false;
        }
        let pos = self.adjacency[u].binary_search(&v).unwrap_err();
        self.adjacency[u].insert(pos, v);
        let pos = self.adjacency[v].binary_search(&u).unwrap_err();
        self.adjacency[v].insert(pos, u);
        true
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, u: Vertex) -> &[Vertex] {
        &self.adjacency[u]
    }

    pub fn degree(&self, u: Vertex) -> usize {
        self.adjacency[u].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for (u, list) in self.adjacency.iter().enumerate() {
            for &v in list {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_independent(&self, set: &[Vertex]) -> bool {
        set.iter().enumerate().all(|(i, &u)| set[i + 1..].iter().all(|&v| u != v && !self.has_edge(u, v)))
    }

    pub fn is_vertex_cover(&self, cover: &[Vertex]) -> bool {
        let mut inside = vec![false; self.vertex_count()];
        for &v in cover {
            inside[v] = true;
        }
        self.edges().into_iter().all(|(u, v)| inside[u] || inside[v])
    }
}
