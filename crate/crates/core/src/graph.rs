//! Simple undirected graphs on vertices 0..n with bitset adjacency rows.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph { n, adj: vec![VertexSet::empty(n); n] }
    }

    /// Build from an edge list. Endpoints must be < n and distinct;
    /// duplicate edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::input(format!(
                "edge ({u}, {v}) has an endpoint outside 0..{}",
                self.n
            )));
        }
        if u == v {
            return Err(Error::input(format!("loop at vertex {u} is not allowed")));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.adj.iter().map(|row| row.len()).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges as (u, v) with u < v, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// True when `set` induces a complete subgraph.
    pub fn is_clique(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| {
            let mut rest = set.clone();
            rest.remove(v);
            rest.is_subset_of(&self.adj[v])
        })
    }

    pub fn complement(&self) -> Graph {
        let mut adj = Vec::with_capacity(self.n);
        for v in 0..self.n {
            let mut row = self.adj[v].complement();
            row.remove(v);
            adj.push(row);
        }
        Graph { n: self.n, adj }
    }

    /// Disjoint union; `other`'s vertices are shifted up by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut g = Graph::empty(n);
        for (u, v) in self.edges() {
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        for (u, v) in other.edges() {
            g.adj[u + self.n].insert(v + self.n);
            g.adj[v + self.n].insert(u + self.n);
        }
        g
    }

    /// Join: disjoint union plus all edges between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        for u in 0..self.n {
            for v in self.n..g.n {
                g.adj[u].insert(v);
                g.adj[v].insert(u);
            }
        }
        g
    }

    /// Cartesian product; vertex (i, j) of G x H maps to index i * H.n() + j.
    pub fn cartesian_product(&self, other: &Graph) -> Graph {
        let (r, s) = (self.n, other.n);
        let mut g = Graph::empty(r * s);
        for i in 0..r {
            for j in 0..s {
                let a = i * s + j;
                // same row: H-edges; same column: G-edges
                for j2 in other.adj[j].iter() {
                    g.adj[a].insert(i * s + j2);
                }
                for i2 in self.adj[i].iter() {
                    g.adj[a].insert(i2 * s + j);
                }
            }
        }
        g
    }

    /// Direct (tensor) product; (i, j) adjacent to (i', j') iff both
    /// coordinates are adjacent. Same index layout as `cartesian_product`.
    pub fn direct_product(&self, other: &Graph) -> Graph {
        let (r, s) = (self.n, other.n);
        let mut g = Graph::empty(r * s);
        for i in 0..r {
            for j in 0..s {
                let a = i * s + j;
                for i2 in self.adj[i].iter() {
                    for j2 in other.adj[j].iter() {
                        g.adj[a].insert(i2 * s + j2);
                    }
                }
            }
        }
        g
    }

    /// Line graph. Vertex k of the result is edge `map[k]` of `self`;
    /// two result vertices are adjacent iff the edges share an endpoint.
    pub fn line_graph(&self) -> (Graph, Vec<(usize, usize)>) {
        let edges = self.edges();
        let mut lg = Graph::empty(edges.len());
        for (a, &(u1, v1)) in edges.iter().enumerate() {
            for (b, &(u2, v2)) in edges.iter().enumerate().skip(a + 1) {
                if u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2 {
                    lg.adj[a].insert(b);
                    lg.adj[b].insert(a);
                }
            }
        }
        (lg, edges)
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = VertexSet::singleton(self.n, 0);
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            for w in self.adj[v].iter() {
                if !seen.contains(w) {
                    seen.insert(w);
                    stack.push(w);
                }
            }
        }
        seen.len() == self.n
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut unvisited = VertexSet::full(self.n);
        let mut out = Vec::new();
        while let Some(start) = unvisited.first() {
            let mut comp = VertexSet::singleton(self.n, start);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for w in self.adj[v].iter() {
                    if !comp.contains(w) {
                        comp.insert(w);
                        stack.push(w);
                    }
                }
            }
            unvisited.subtract(&comp);
            out.push(comp);
        }
        out
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// K_n.
pub fn complete_graph(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for v in 0..n {
        let mut row = VertexSet::full(n);
        row.remove(v);
        g.adj[v] = row;
    }
    g
}

/// P_n: 0 - 1 - ... - n-1.
pub fn path_graph(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges).expect("path edges are valid")
}

/// C_n for n >= 3.
pub fn cycle_graph(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    edges.push((n - 1, 0));
    Graph::from_edges(n, &edges).expect("cycle edges are valid")
}
