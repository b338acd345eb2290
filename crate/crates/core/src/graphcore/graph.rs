use std::fmt;

use super::vertex_set::{VertexSet, MAX_VERTICES};
use crate::{Error, Result};

/// A simple undirected graph whose vertices are a subset of `{1, .., n}`.
///
/// Graphs built with [`Graph::new`] live on all of `[n]`. Induced subgraphs
/// keep the original labels and the original `n`, only the vertex set shrinks.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    vertices: VertexSet,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph on `[n]` from an edge list.
    ///
    /// Self-loops, duplicate edges (in either orientation) and endpoints
    /// outside `1..=n` are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { got: n, max: MAX_VERTICES });
        }
        let mut g = Graph { n, vertices: VertexSet::full(n), adj: vec![VertexSet::EMPTY; n] };
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// The graph on `[n]` without edges.
    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, &[])
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            self.check_vertex(w)?;
        }
        if u == v {
            return Err(Error::InvalidEdge(u, v, "self-loop"));
        }
        if self.adj[u - 1].contains(v) {
            return Err(Error::InvalidEdge(u.min(v), u.max(v), "duplicate edge"));
        }
        self.adj[u - 1].insert(v);
        self.adj[v - 1].insert(u);
        Ok(())
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(())
    }

    pub(crate) fn check_subset(&self, s: VertexSet) -> Result<()> {
        match (s - VertexSet::full(self.n)).min() {
            Some(v) => Err(Error::VertexOutOfRange { vertex: v, n: self.n }),
            None => Ok(()),
        }
    }

    /// Label bound: vertices are drawn from `1..=n`.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        if self.vertices.contains(v) {
            self.adj[v - 1]
        } else {
            VertexSet::EMPTY
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbors(u).contains(v)
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in self.vertices.iter() {
            for v in self.adj[u - 1].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.iter().map(|v| self.adj[v - 1].len()).sum::<usize>() / 2
    }

    /// The subgraph induced on `w`, keeping original vertex labels.
    pub fn induced_subgraph(&self, w: VertexSet) -> Result<Graph> {
        self.check_subset(w)?;
        let w = w & self.vertices;
        let adj = (1..=self.n)
            .map(|v| if w.contains(v) { self.adj[v - 1] & w } else { VertexSet::EMPTY })
            .collect();
        Ok(Graph { n: self.n, vertices: w, adj })
    }

    /// Connected components of the subgraph induced on `w`, sorted by their
    /// smallest vertex. No graph is materialised.
    pub fn components_within(&self, w: VertexSet) -> Vec<VertexSet> {
        let mut rest = w & self.vertices;
        let mut out = Vec::new();
        while let Some(start) = rest.min() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier.iter() {
                    next |= self.adj[v - 1] & w;
                }
                frontier = next - comp;
                comp |= next;
            }
            rest = rest - comp;
            out.push(comp);
        }
        out
    }

    pub fn component_count_within(&self, w: VertexSet) -> usize {
        self.components_within(w).len()
    }

    /// Partition of the vertex set into maximal connected pieces, sorted by
    /// smallest vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices)
    }

    /// True iff the graph has at most one component. The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    pub fn is_connected_within(&self, w: VertexSet) -> bool {
        self.component_count_within(w) <= 1
    }

    pub fn is_complete(&self) -> bool {
        self.vertices.iter().all(|v| self.adj[v - 1] == self.vertices.without(v))
    }

    /// Applies a relabelling: vertex `v` becomes `perm[v - 1]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::pre("relabelling must list one image per vertex"));
        }
        let edges: Vec<_> = self.edges().iter().map(|&(u, v)| (perm[u - 1], perm[v - 1])).collect();
        let g = Graph::new(self.n, &edges)?;
        let vertices = self.vertices.iter().map(|v| perm[v - 1]).collect();
        g.induced_subgraph(vertices)
    }

    /// Parses the line-oriented graph format: a header `n <count>`, then one
    /// `u v` line per edge with `1 <= u < v <= n`. `#` starts a comment.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut n = None;
        let mut edges = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: String| Error::GraphParse { line: lineno + 1, msg };
            let fields: Vec<&str> = line.split_whitespace().collect();
            match n {
                None => {
                    let [kw, count] = fields[..] else {
                        return Err(err(format!("expected `n <count>`, found `{line}`")));
                    };
                    if kw != "n" {
                        return Err(err(format!("expected `n <count>`, found `{line}`")));
                    }
                    let count: usize = count.parse().map_err(|_| err(format!("bad vertex count `{count}`")))?;
                    if count > MAX_VERTICES {
                        return Err(err(format!("at most {MAX_VERTICES} vertices are supported")));
                    }
                    n = Some(count);
                }
                Some(n) => {
                    let [a, b] = fields[..] else {
                        return Err(err(format!("expected `u v`, found `{line}`")));
                    };
                    let u: usize = a.parse().map_err(|_| err(format!("bad vertex `{a}`")))?;
                    let v: usize = b.parse().map_err(|_| err(format!("bad vertex `{b}`")))?;
                    if u < 1 || v > n || u >= v {
                        return Err(err(format!("edge `{u} {v}` must satisfy 1 <= u < v <= {n}")));
                    }
                    if edges.contains(&(u, v)) {
                        return Err(err(format!("duplicate edge `{u} {v}`")));
                    }
                    edges.push((u, v));
                }
            }
        }
        let n = n.ok_or(Error::GraphParse { line: 0, msg: "missing `n <count>` header".into() })?;
        Graph::new(n, &edges)
    }
}

/// Serialises to the text format accepted by [`Graph::parse`].
impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n {}", self.n)?;
        for (u, v) in self.edges() {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, V={}, E={:?})", self.n, self.vertices, self.edges())
    }
}
