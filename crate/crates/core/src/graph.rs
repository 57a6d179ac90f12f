//! Undirected simple graphs, matchings and distant independent sets.
//!
//! Vertex ids are `0..n`. Vertex `v` is identified with variable `x_v` of the
//! graph's monotone 2-CNF, so no separate variable map exists.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// Undirected simple graph stored as sorted adjacency lists.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list, rejecting self-loops, repeated edges
    /// and out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Err(Error::ParallelEdge(u.min(v), u.max(v))),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                Ok(())
            }
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            g.adj[u] = (0..n).filter(|&v| v != u).collect();
        }
        g
    }

    /// Cycle `0-1-...-(n-1)-0`. Needs `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).expect("cycle edges are simple")
    }

    /// Path `0-1-...-(n-1)` on `n` vertices.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("path edges are simple")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn isolated_vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.n()).filter(|&v| self.adj[v].is_empty())
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        let mut seen = vec![false; self.n()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == self.n()
    }

    /// Whether `u` and `v` have a common neighbour (sorted-list merge).
    pub fn share_neighbor(&self, u: Vertex, v: Vertex) -> bool {
        let (a, b) = (&self.adj[u], &self.adj[v]);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return true,
            }
        }
        false
    }

    /// Distinct vertices at distance at most two.
    #[inline]
    pub fn are_close(&self, u: Vertex, v: Vertex) -> bool {
        u != v && (self.has_edge(u, v) || self.share_neighbor(u, v))
    }

    /// Adjacency bitmask of `v`. Only meaningful for graphs with at most 64 vertices.
    pub fn neighbor_mask(&self, v: Vertex) -> u64 {
        self.adj[v].iter().fold(0u64, |m, &u| m | (1 << u))
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }
}

/// A set of vertex-disjoint edges. Edges are stored with the smaller endpoint first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Matching {
    edges: Vec<(Vertex, Vertex)>,
}

impl Matching {
    pub fn new(edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let edges: Vec<_> = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        let mut ends: Vec<Vertex> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        ends.sort_unstable();
        if let Some(w) = ends.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::SharedEndpoint(w[0]));
        }
        Ok(Matching { edges })
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Checks that every edge of the matching is an edge of `g`.
    pub fn check_in(&self, g: &Graph) -> Result<()> {
        for &(u, v) in &self.edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if !g.has_edge(u, v) {
                return Err(Error::NotAnEdge(u, v));
            }
        }
        Ok(())
    }
}

/// Distant independent set test: `s` is independent and no two members share a neighbour.
pub fn is_dis(g: &Graph, s: &[Vertex]) -> Result<bool> {
    for &v in s {
        g.check_vertex(v)?;
    }
    for (i, &u) in s.iter().enumerate() {
        for &v in &s[i + 1..] {
            if u == v || g.are_close(u, v) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether two vertex-disjoint edges may both belong to a distant matching.
pub(crate) fn edges_compatible(g: &Graph, e: (Vertex, Vertex), f: (Vertex, Vertex)) -> bool {
    [e.0, e.1]
        .iter()
        .all(|&x| [f.0, f.1].iter().all(|&y| x != y && !g.are_close(x, y)))
}

/// Tests whether `m` is a distant matching of `g`: induced, and endpoints of
/// distinct edges have no common neighbour.
pub fn is_distant_matching(g: &Graph, m: &Matching) -> Result<bool> {
    m.check_in(g)?;
    let es = m.edges();
    for (i, &e) in es.iter().enumerate() {
        for &f in &es[i + 1..] {
            if !edges_compatible(g, e, f) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: BFS distances.
    fn dist(g: &Graph, s: Vertex, t: Vertex) -> usize {
        let mut d = vec![usize::MAX; g.n()];
        d[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for &v in g.neighbors(u) {
                if d[v] == usize::MAX {
                    d[v] = d[u] + 1;
                    q.push_back(v);
                }
            }
        }
        d[t]
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::from_edges(2, &[(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(
            Graph::from_edges(2, &[(0, 1), (1, 0)]),
            Err(Error::ParallelEdge(0, 1))
        );
        assert!(matches!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        ));
    }

    #[test]
    fn dis_examples() {
        let c6 = Graph::cycle(6);
        assert!(is_dis(&c6, &[0, 3]).unwrap());
        assert!(!is_dis(&c6, &[0, 2]).unwrap());
        assert!(is_dis(&c6, &[]).unwrap());
        assert!(is_dis(&c6, &[4]).unwrap());
        assert!(is_dis(&c6, &[9]).is_err());
        // agrees with the distance >= 3 characterisation
        for u in 0..6 {
            for v in 0..6 {
                if u != v {
                    assert_eq!(is_dis(&c6, &[u, v]).unwrap(), dist(&c6, u, v) >= 3);
                }
            }
        }
    }

    #[test]
    fn distant_matching_examples() {
        let c8 = Graph::cycle(8);
        let m = Matching::new([(0, 1), (4, 5)]).unwrap();
        assert!(is_distant_matching(&c8, &m).unwrap());
        let c6 = Graph::cycle(6);
        let m = Matching::new([(0, 1), (3, 4)]).unwrap();
        assert!(!is_distant_matching(&c6, &m).unwrap());
        let single = Matching::new([(2, 3)]).unwrap();
        assert!(is_distant_matching(&c6, &single).unwrap());
    }

    #[test]
    fn distant_matching_errors_are_distinguished() {
        let c6 = Graph::cycle(6);
        assert_eq!(Matching::new([(0, 1), (1, 2)]), Err(Error::SharedEndpoint(1)));
        let m = Matching::new([(0, 2)]).unwrap();
        assert_eq!(is_distant_matching(&c6, &m), Err(Error::NotAnEdge(0, 2)));
    }

    #[test]
    fn edges_are_sorted_and_counted() {
        let g = Graph::from_edges(4, &[(3, 1), (0, 2), (1, 0)]).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (1, 3)]);
        assert_eq!(g.num_edges(), 3);
        assert_eq!(g.max_degree(), 2);
        assert!(g.is_connected());
        assert!(!Graph::empty(2).is_connected());
    }
}
