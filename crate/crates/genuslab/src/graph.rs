//! Simple undirected graphs: commuting / non-commuting graph builders,
//! complements, induced subgraphs, disjoint unions, block decomposition, and
//! the edge-list / DOT exports used by the CLI.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::group::FiniteGroup;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("vertex index {index} out of range (vertex count {vertex_count})")]
    VertexOutOfRange { index: usize, vertex_count: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("label count {labels} does not match vertex count {vertex_count}")]
    LabelMismatch { labels: usize, vertex_count: usize },
    #[error("edge list parse error on line {line}: {reason}")]
    EdgeListParse { line: usize, reason: String },
}

/// An undirected simple graph over indexed vertices. Immutable after
/// construction; edges are stored normalized (u < v) in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    labels: Option<Vec<String>>,
    adjacency: Vec<Vec<usize>>,
}

impl SimpleGraph {
    pub fn new(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            for v in [a, b] {
                if v >= vertex_count {
                    return Err(GraphError::VertexOutOfRange {
                        index: v,
                        vertex_count,
                    });
                }
            }
            set.insert((a.min(b), a.max(b)));
        }
        let edges: Vec<(usize, usize)> = set.into_iter().collect();
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(SimpleGraph {
            vertex_count,
            edges,
            labels: None,
            adjacency,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GraphError> {
        if labels.len() != self.vertex_count {
            return Err(GraphError::LabelMismatch {
                labels: labels.len(),
                vertex_count: self.vertex_count,
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn complete(n: usize) -> SimpleGraph {
        let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
        SimpleGraph::new(n, edges).unwrap()
    }

    pub fn complete_bipartite(m: usize, n: usize) -> SimpleGraph {
        let edges = (0..m).flat_map(|i| (m..m + n).map(move |j| (i, j)));
        SimpleGraph::new(m + n, edges).unwrap()
    }

    pub fn complement(&self) -> SimpleGraph {
        let n = self.vertex_count;
        let edges = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !self.has_edge(i, j));
        let g = SimpleGraph::new(n, edges).unwrap();
        match &self.labels {
            Some(labels) => g.with_labels(labels.clone()).unwrap(),
            None => g,
        }
    }

    /// Subgraph induced by `vertices`; local indices follow the order of the
    /// (deduplicated, ascending) vertex list.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<SimpleGraph, GraphError> {
        let mut verts: Vec<usize> = vertices.to_vec();
        verts.sort_unstable();
        verts.dedup();
        if let Some(&max) = verts.last() {
            if max >= self.vertex_count {
                return Err(GraphError::VertexOutOfRange {
                    index: max,
                    vertex_count: self.vertex_count,
                });
            }
        }
        let mut local = vec![usize::MAX; self.vertex_count];
        for (i, &v) in verts.iter().enumerate() {
            local[v] = i;
        }
        let edges = self.edges.iter().filter_map(|&(u, v)| {
            if local[u] != usize::MAX && local[v] != usize::MAX {
                Some((local[u], local[v]))
            } else {
                None
            }
        });
        let g = SimpleGraph::new(verts.len(), edges)?;
        match &self.labels {
            Some(labels) => {
                let picked = verts.iter().map(|&v| labels[v].clone()).collect();
                Ok(g.with_labels(picked)?)
            }
            None => Ok(g),
        }
    }

    pub fn disjoint_union(graphs: &[SimpleGraph]) -> SimpleGraph {
        let vertex_count = graphs.iter().map(|g| g.vertex_count).sum();
        let mut edges = Vec::new();
        let mut offset = 0;
        for g in graphs {
            edges.extend(g.edges.iter().map(|&(u, v)| (u + offset, v + offset)));
            offset += g.vertex_count;
        }
        let out = SimpleGraph::new(vertex_count, edges).unwrap();
        if graphs.iter().all(|g| g.labels.is_some()) && !graphs.is_empty() {
            let labels = graphs
                .iter()
                .flat_map(|g| g.labels.as_ref().unwrap().iter().cloned())
                .collect();
            out.with_labels(labels).unwrap()
        } else {
            out
        }
    }

    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.vertex_count];
        let mut components = Vec::new();
        for start in 0..self.vertex_count {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            let mut comp = Vec::new();
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count <= 1 || self.connected_components().len() == 1
    }

    /// `Some(n)` when the graph is the complete graph on its n vertices.
    pub fn as_complete(&self) -> Option<usize> {
        let n = self.vertex_count;
        if self.edges.len() == n * (n - 1) / 2 {
            Some(n)
        } else {
            None
        }
    }

    /// `Some((m, n))` with m <= n when the graph is a complete bipartite
    /// graph with both parts nonempty.
    pub fn as_complete_bipartite(&self) -> Option<(usize, usize)> {
        if self.vertex_count == 0 || self.edges.is_empty() || !self.is_connected() {
            return None;
        }
        // 2-color by BFS, then check all cross pairs are present.
        let mut color = vec![usize::MAX; self.vertex_count];
        let mut queue = std::collections::VecDeque::from([0usize]);
        color[0] = 0;
        while let Some(v) = queue.pop_front() {
            for &w in self.neighbors(v) {
                if color[w] == usize::MAX {
                    color[w] = 1 - color[v];
                    queue.push_back(w);
                } else if color[w] == color[v] {
                    return None;
                }
            }
        }
        let a = color.iter().filter(|&&c| c == 0).count();
        let b = self.vertex_count - a;
        if a == 0 || b == 0 || self.edges.len() != a * b {
            return None;
        }
        Some((a.min(b), a.max(b)))
    }

    /// One "u v" pair per line, 0-based, lexicographic.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    pub fn from_edge_list(text: &str) -> Result<SimpleGraph, GraphError> {
        let mut edges = Vec::new();
        let mut max_vertex = None;
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut parts = line.split_whitespace();
            let parse = |tok: Option<&str>| -> Result<usize, GraphError> {
                tok.and_then(|t| t.parse().ok())
                    .ok_or_else(|| GraphError::EdgeListParse {
                        line: i + 1,
                        reason: format!("expected two vertex indices, got {line:?}"),
                    })
            };
            let u = parse(parts.next())?;
            let v = parse(parts.next())?;
            if parts.next().is_some() {
                return Err(GraphError::EdgeListParse {
                    line: i + 1,
                    reason: format!("trailing tokens in {line:?}"),
                });
            }
            if u == v {
                return Err(GraphError::EdgeListParse {
                    line: i + 1,
                    reason: format!("self-loop on {u}"),
                });
            }
            max_vertex = Some(max_vertex.unwrap_or(0).max(u).max(v));
            edges.push((u, v));
        }
        let vertex_count = max_vertex.map_or(0, |m| m + 1);
        SimpleGraph::new(vertex_count, edges)
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph {name} {{\n");
        for v in 0..self.vertex_count {
            match self.label(v) {
                Some(l) => {
                    let _ = writeln!(out, "  {v} [label=\"{l}\"];");
                }
                None => {
                    let _ = writeln!(out, "  {v};");
                }
            }
        }
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}

/// The commuting graph: vertices are the non-central elements of `g` in
/// ascending index order, edges join commuting pairs, labels carry the
/// element indices. Abelian input yields the empty graph.
pub fn commuting_graph(g: &FiniteGroup) -> SimpleGraph {
    let center = g.center();
    let vertices: Vec<usize> = (0..g.order()).filter(|&x| !center.contains(x)).collect();
    let mut edges = Vec::new();
    for (i, &x) in vertices.iter().enumerate() {
        for (j, &y) in vertices.iter().enumerate().skip(i + 1) {
            if g.commutes(x, y) {
                edges.push((i, j));
            }
        }
    }
    let labels = vertices.iter().map(|x| x.to_string()).collect();
    SimpleGraph::new(vertices.len(), edges)
        .unwrap()
        .with_labels(labels)
        .unwrap()
}

/// Complement of the commuting graph on the same vertex set.
pub fn non_commuting_graph(g: &FiniteGroup) -> SimpleGraph {
    commuting_graph(g).complement()
}

/// Both sides of the identity 2|E(non-commuting graph)| = |G|^2 - |G| k(G).
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct EdgeCountIdentity {
    pub lhs: u64,
    pub rhs: u64,
    pub equal: bool,
}

pub fn edge_count_identity(g: &FiniteGroup) -> EdgeCountIdentity {
    let lhs = 2 * non_commuting_graph(g).edge_count() as u64;
    let order = g.order() as u64;
    let k = g.conjugacy_classes().len() as u64;
    let rhs = order * order - order * k;
    EdgeCountIdentity {
        lhs,
        rhs,
        equal: lhs == rhs,
    }
}

/// One block (maximal subgraph without a cut vertex) of a parent graph,
/// carrying the map from local vertices back to parent indices.
#[derive(Clone, Debug)]
pub struct Block {
    pub graph: SimpleGraph,
    /// `vertices[local]` is the parent index of block-local vertex `local`.
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    pub cut_vertices: Vec<usize>,
}

/// Biconnected components by depth-first lowpoint computation. Isolated
/// vertices yield single-vertex blocks; bridges yield K2 blocks.
pub fn blocks(g: &SimpleGraph) -> BlockDecomposition {
    let n = g.vertex_count();
    const UNSET: usize = usize::MAX;
    let mut disc = vec![UNSET; n];
    let mut low = vec![0usize; n];
    let mut parent = vec![UNSET; n];
    let mut child_count = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut timer = 0usize;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut raw_blocks: Vec<Vec<(usize, usize)>> = Vec::new();

    // next_neighbor[v] = cursor into g.neighbors(v) for the iterative walk
    let mut cursor = vec![0usize; n];
    for root in 0..n {
        if disc[root] != UNSET {
            continue;
        }
        if g.degree(root) == 0 {
            disc[root] = timer;
            timer += 1;
            raw_blocks.push(Vec::new()); // placeholder for the isolated vertex
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut stack = vec![root];
        while let Some(&v) = stack.last() {
            if cursor[v] < g.degree(v) {
                let w = g.neighbors(v)[cursor[v]];
                cursor[v] += 1;
                if disc[w] == UNSET {
                    parent[w] = v;
                    child_count[v] += 1;
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    edge_stack.push((v, w));
                    stack.push(w);
                } else if w != parent[v] && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&p) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        // Edges down to (p, v) form one block.
                        let mut block_edges = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block_edges.push(e);
                            if e == (p, v) {
                                break;
                            }
                        }
                        raw_blocks.push(block_edges);
                        if parent[p] != UNSET || child_count[p] >= 2 {
                            is_cut[p] = true;
                        }
                    }
                }
            }
        }
    }

    // Convert raw edge groups into local graphs with vertex maps. Placeholder
    // entries (isolated vertices) are re-derived below in vertex order.
    let mut result = Vec::new();
    let mut isolated: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 0).collect();
    isolated.reverse();
    for raw in raw_blocks {
        if raw.is_empty() {
            let v = isolated.pop().unwrap();
            result.push(Block {
                graph: SimpleGraph::new(1, []).unwrap(),
                vertices: vec![v],
            });
            continue;
        }
        let mut verts: Vec<usize> = raw.iter().flat_map(|&(a, b)| [a, b]).collect();
        verts.sort_unstable();
        verts.dedup();
        let mut local = std::collections::HashMap::new();
        for (i, &v) in verts.iter().enumerate() {
            local.insert(v, i);
        }
        let edges = raw.iter().map(|&(a, b)| (local[&a], local[&b]));
        result.push(Block {
            graph: SimpleGraph::new(verts.len(), edges).unwrap(),
            vertices: verts,
        });
    }
    result.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    let cut_vertices = (0..n).filter(|&v| is_cut[v]).collect();
    BlockDecomposition {
        blocks: result,
        cut_vertices,
    }
}
