//! Simple undirected graphs over `0..n` with bitset adjacency rows, the
//! family generators used throughout, and the independence / chordality
//! primitives that feed every complex construction.

use crate::error::{Error, Result};
use crate::vset::VertexSet;
use crate::MAX_VERTICES;

/// A simple graph: no loops, no multi-edges, symmetric adjacency.
///
/// Immutable after construction; all operations are pure.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    name: Option<String>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}", self.n)?;
        if let Some(name) = &self.name {
            write!(f, ", {name}")?;
        }
        write!(f, ", edges=[")?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// Generator specs for the graph families of interest.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Edgeless(usize),
    CompleteBipartite(usize, usize),
    Prism(usize),
    Grid(usize, usize),
    SquaredCycle(usize),
}

pub fn make_graph(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n, MAX_VERTICES));
    }
    let mut adj = vec![VertexSet::EMPTY; n];
    for &(i, j) in edges {
        if i == j {
            return Err(Error::LoopEdge(i));
        }
        for v in [i, j] {
            if v >= n {
                return Err(Error::VertexOutOfRange { v, n });
            }
        }
        adj[i] = adj[i].with(j);
        adj[j] = adj[j].with(i);
    }
    Ok(Graph { n, adj, name: None })
}

/// Builds a family member with the vertex labelings fixed by convention:
/// grids group vertices in rows of `n` (vertex `(i-1)n + j` in 1-based
/// terms), prisms map `i+` to `i-1` and `i-` to `n+i-1`.
pub fn family(spec: Family) -> Result<Graph> {
    use Family::*;
    let (name, n, edges): (String, usize, Vec<(usize, usize)>) = match spec {
        Path(n) => {
            require(n >= 1, "path needs n >= 1")?;
            (format!("P{n}"), n, (1..n).map(|i| (i - 1, i)).collect())
        }
        Cycle(n) => {
            require(n >= 3, "cycle needs n >= 3")?;
            (format!("C{n}"), n, (0..n).map(|i| (i, (i + 1) % n)).collect())
        }
        Complete(n) => {
            require(n >= 1, "complete graph needs n >= 1")?;
            let mut e = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    e.push((i, j));
                }
            }
            (format!("K{n}"), n, e)
        }
        Edgeless(n) => {
            require(n >= 1, "edgeless graph needs n >= 1")?;
            (format!("E{n}"), n, Vec::new())
        }
        CompleteBipartite(m, n) => {
            require(m >= 1 && n >= 1, "complete bipartite needs m, n >= 1")?;
            let mut e = Vec::new();
            for i in 0..m {
                for j in 0..n {
                    e.push((i, m + j));
                }
            }
            (format!("K{m},{n}"), m + n, e)
        }
        Prism(n) => {
            require(n >= 1, "prism needs n >= 1")?;
            let mut e = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    e.push((i, j));
                    e.push((n + i, n + j));
                }
                e.push((i, n + i));
            }
            (format!("G{n}"), 2 * n, e)
        }
        Grid(m, n) => {
            require(m >= 1 && n >= 1, "grid needs m, n >= 1")?;
            let mut e = Vec::new();
            for i in 0..m {
                for j in 0..n {
                    let v = i * n + j;
                    if j + 1 < n {
                        e.push((v, v + 1));
                    }
                    if i + 1 < m {
                        e.push((v, v + n));
                    }
                }
            }
            (format!("G({m},{n})"), m * n, e)
        }
        SquaredCycle(n) => {
            require(n >= 3, "squared cycle needs n >= 3")?;
            let mut e = Vec::new();
            for i in 0..n {
                e.push((i, (i + 1) % n));
                e.push((i, (i + 2) % n));
            }
            (format!("W{n}"), n, e)
        }
    };
    let mut g = make_graph(n, &edges)?;
    g.name = Some(name);
    Ok(g)
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::BadFamily(msg.to_string()))
    }
}

impl Graph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges as ordered pairs (u, v) with u < v, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.without(v).is_subset_of(self.adj[v]))
    }

    /// True iff no pair of vertices in `s` forms an edge. Every singleton
    /// and the empty set are independent.
    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| !self.adj[v].intersects(s))
    }

    /// The exact independence number, by branch and bound on bitsets.
    pub fn independence_number(&self) -> usize {
        fn go(g: &Graph, avail: VertexSet, size: usize, best: &mut usize) {
            if size + avail.len() <= *best {
                return;
            }
            let Some(v) = avail.min_vertex() else {
                *best = (*best).max(size);
                return;
            };
            // branch: take v, or discard v
            go(g, (avail.without(v)) - g.adj[v], size + 1, best);
            go(g, avail.without(v), size, best);
        }
        let mut best = 0;
        go(self, self.vertex_set(), 0, &mut best);
        best
    }

    /// All independent sets of size exactly `k`, in ascending bitmask order.
    pub fn independent_sets(&self, k: usize) -> Vec<VertexSet> {
        assert!(k >= 1, "independent_sets needs k >= 1");
        let mut out = Vec::new();
        let mut stack = vec![(VertexSet::EMPTY, self.vertex_set(), 0usize)];
        while let Some((chosen, avail, size)) = stack.pop() {
            if size == k {
                out.push(chosen);
                continue;
            }
            if size + avail.len() < k {
                continue;
            }
            if let Some(v) = avail.min_vertex() {
                stack.push((chosen, avail.without(v), size));
                stack.push((chosen.with(v), (avail.without(v)) - self.adj[v], size + 1));
            }
        }
        out.sort_unstable();
        out
    }

    /// Vertices whose neighborhood is a clique. Isolated vertices qualify.
    pub fn simplicial_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.is_clique(self.adj[v])).collect()
    }

    /// A perfect elimination ordering if the graph is chordal, `None`
    /// otherwise. Computed by maximum-cardinality search and then verified
    /// against the definition, so the answer does not depend on MCS
    /// subtleties.
    pub fn perfect_elimination_order(&self) -> Option<Vec<usize>> {
        if self.n == 0 {
            return Some(Vec::new());
        }
        // MCS: repeatedly pick an unvisited vertex with the most visited
        // neighbors; the reverse visit order is a candidate elimination order.
        let mut visited = VertexSet::EMPTY;
        let mut weight = vec![0usize; self.n];
        let mut order = Vec::with_capacity(self.n);
        for _ in 0..self.n {
            let v = (0..self.n)
                .filter(|&v| !visited.contains(v))
                .max_by_key(|&v| weight[v])
                .unwrap();
            visited = visited.with(v);
            order.push(v);
            for u in self.adj[v].iter() {
                weight[u] += 1;
            }
        }
        order.reverse();
        // verify: each vertex is simplicial in the graph induced on itself
        // and its successors
        let mut remaining = self.vertex_set();
        for &v in &order {
            if !self.is_clique(self.adj[v] & remaining.without(v)) {
                return None;
            }
            remaining = remaining.without(v);
        }
        Some(order)
    }

    pub fn is_chordal(&self) -> bool {
        self.perfect_elimination_order().is_some()
    }

    /// Induced subgraph on `w`, with the kept vertices relabeled
    /// order-preservingly to `0..|w|`.
    pub fn induced_subgraph(&self, w: VertexSet) -> Graph {
        let verts: Vec<usize> = w.iter().collect();
        let mut rank = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            rank[v] = i;
        }
        let adj = verts
            .iter()
            .map(|&v| (self.adj[v] & w).iter().map(|u| rank[u]).collect())
            .collect();
        Graph { n: verts.len(), adj, name: None }
    }

    /// The graph with vertex `v` removed (labels above `v` shift down).
    pub fn remove_vertex(&self, v: usize) -> Graph {
        self.induced_subgraph(self.vertex_set().without(v))
    }

    /// Appends a fresh isolated vertex `n`.
    pub fn add_isolated_vertex(&self) -> Result<Graph> {
        if self.n + 1 > MAX_VERTICES {
            return Err(Error::TooManyVertices(self.n + 1, MAX_VERTICES));
        }
        let mut adj = self.adj.clone();
        adj.push(VertexSet::EMPTY);
        Ok(Graph { n: self.n + 1, adj, name: None })
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for v in 0..self.n {
            if seen.contains(v) {
                continue;
            }
            let mut comp = VertexSet::singleton(v);
            let mut frontier = vec![v];
            while let Some(u) = frontier.pop() {
                for w in self.adj[u].iter() {
                    if !comp.contains(w) {
                        comp = comp.with(w);
                        frontier.push(w);
                    }
                }
            }
            seen = seen | comp;
            out.push(comp);
        }
        out
    }
}
