//! Simple undirected graphs on the vertex set `0..n`.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// A simple undirected graph: vertex count plus symmetric adjacency sets.
///
/// Values are immutable once built; every operation returns a new graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![BTreeSet::new(); n],
        }
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|v| (0..n).filter(|&w| w != v).collect())
            .collect();
        Graph { adj }
    }

    /// The path on `n` vertices, `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.insert_edge(v - 1, v);
        }
        g
    }

    /// The cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.insert_edge(0, n - 1);
        }
        g
    }

    /// Builds a graph from 0-based edge pairs. Repeated edges collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    /// Neighbors of `v` in increasing order.
    ///
    /// # Panics
    /// If `v >= n`.
    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u).is_some_and(|s| s.contains(&v))
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, s)| s.range(u + 1..).map(move |&v| (u, v)))
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    /// The complement: `{i, j}` is an edge iff it is not one here.
    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|v| (0..n).filter(|&w| w != v && !self.adj[v].contains(&w)).collect())
            .collect();
        Graph { adj }
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|s| s.iter().map(|&w| w + off).collect::<BTreeSet<_>>()),
        );
        Graph { adj }
    }

    /// Join: the disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        let (n1, n2) = (self.n(), other.n());
        let mut g = self.disjoint_union(other);
        for v in 0..n1 {
            for w in n1..n1 + n2 {
                g.insert_edge(v, w);
            }
        }
        g
    }

    /// Connected components, each sorted, ordered by their minimum vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let all: Vec<usize> = (0..self.n()).collect();
        components_within(self.n(), &all, |u, v| self.has_edge(u, v))
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Subgraph induced on `vs`, relabeled `0..vs.len()` in increasing order
    /// of the original labels.
    pub fn induced_subgraph(&self, vs: &[usize]) -> Result<Graph> {
        for &v in vs {
            self.check_vertex(v)?;
        }
        let sorted: Vec<usize> = vs.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
        let mut g = Graph::empty(sorted.len());
        for (i, &u) in sorted.iter().enumerate() {
            for (j, &v) in sorted.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.insert_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Maximum vertex degree; 0 for edgeless graphs.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).max().unwrap_or(0)
    }

    /// True iff all pairs of distinct vertices are adjacent.
    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.adj.iter().all(|s| s.len() + 1 == n)
    }

    /// True iff some vertex is adjacent to every other vertex, i.e. the graph is a cone.
    pub fn has_universal_vertex(&self) -> bool {
        let n = self.n();
        self.adj.iter().any(|s| s.len() + 1 == n)
    }

    /// True iff the neighborhood of `v` induces a complete subgraph.
    pub fn is_simplicial(&self, v: usize) -> Result<bool> {
        self.check_vertex(v)?;
        let nb = &self.adj[v];
        Ok(nb
            .iter()
            .all(|&a| nb.range(a + 1..).all(|&b| self.adj[a].contains(&b))))
    }

    /// Applies the vertex map `v -> perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        let mut g = Graph::empty(self.n());
        for &p in perm {
            g.check_vertex(p)?;
        }
        for (u, v) in self.edges() {
            g.insert_edge(perm[u], perm[v]);
        }
        Ok(g)
    }
}

/// Connected components of the graph induced on `vs` under the adjacency
/// predicate `adjacent`. Used both for `G` and, with a negated predicate, for
/// its complement, without materializing either subgraph.
pub(crate) fn components_within<F>(n: usize, vs: &[usize], adjacent: F) -> Vec<Vec<usize>>
where
    F: Fn(usize, usize) -> bool,
{
    let mut in_set = vec![false; n];
    for &v in vs {
        in_set[v] = true;
    }
    let mut seen = vec![false; n];
    let mut comps = Vec::new();
    let mut order: Vec<usize> = vs.to_vec();
    order.sort_unstable();
    for &start in &order {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &w in &order {
                if !seen[w] && in_set[w] && adjacent(u, w) {
                    seen[w] = true;
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}
