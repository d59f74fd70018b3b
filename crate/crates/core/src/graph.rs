use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::vertex_set::VertexSet;

/// Largest supported order. One adjacency row fits in a machine word.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph would have {n} vertices, the limit is {MAX_VERTICES}")]
    TooLarge { n: usize },
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },
    #[error("adjacency is not symmetric at ({u}, {v})")]
    Asymmetric { u: usize, v: usize },
    #[error("vertex {v} is not in D")]
    VertexNotInD { v: usize },
    #[error("vertex {v} appears twice in an ordering")]
    DuplicateVertex { v: usize },
}

/// Simple undirected graph on the vertices `0..n`, `n <= 64`.
///
/// Row `v` of the adjacency matrix is the bitmask of neighbours of `v`. The
/// matrix is symmetric with an empty diagonal; every constructor maintains
/// that, and there is no way to mutate a graph after it has been built.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge { n });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { v: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { v });
            }
            g.link(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, checking symmetry and the diagonal.
    pub fn from_rows(rows: &[u64]) -> Result<Graph, GraphError> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge { n });
        }
        let mask = VertexSet::full(n).bits();
        for (u, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                let v = (row & !mask).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            if row >> u & 1 == 1 {
                return Err(GraphError::SelfLoop { v: u });
            }
            for v in VertexSet::from_bits(row) {
                if rows[v] >> u & 1 == 0 {
                    return Err(GraphError::Asymmetric { u, v });
                }
            }
        }
        Ok(Graph { n, adj: rows.to_vec() })
    }

    pub(crate) fn link(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    /// Open neighbourhood of `v`.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Edges `(u, v)` with `u < v`, ordered by `v` then `u`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |v| {
            VertexSet::from_bits(self.adj[v] & ((1u64 << v) - 1))
                .iter()
                .map(move |u| (u, v))
        })
    }

    /// True when every member of `s` is a vertex of this graph.
    pub fn contains_set(&self, s: VertexSet) -> bool {
        s.is_subset(self.vertices())
    }

    pub fn check_set(&self, s: VertexSet) -> Result<(), GraphError> {
        match (s - self.vertices()).first() {
            Some(v) => Err(GraphError::VertexOutOfRange { v, n: self.n }),
            None => Ok(()),
        }
    }

    /// `N(s)`: vertices with at least one neighbour in `s`. May overlap `s`.
    pub fn open_neighborhood(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(VertexSet::EMPTY, |acc, v| acc | self.neighbors(v))
    }

    /// `N[s] = s ∪ N(s)`.
    pub fn closed_neighborhood(&self, s: VertexSet) -> VertexSet {
        s | self.open_neighborhood(s)
    }

    pub fn is_dominating(&self, s: VertexSet) -> bool {
        self.dominates(s, self.vertices())
    }

    /// True when every vertex of `target` is in `s` or adjacent to `s`.
    pub fn dominates(&self, s: VertexSet, target: VertexSet) -> bool {
        target.is_subset(self.closed_neighborhood(s))
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| !self.neighbors(v).intersects(s))
    }

    /// `{w ∉ d_set : N(w) ∩ d_set = {v}}`.
    pub fn private_neighbors(&self, d_set: VertexSet, v: usize) -> Result<VertexSet, GraphError> {
        if !d_set.contains(v) {
            return Err(GraphError::VertexNotInD { v });
        }
        let others = d_set.without(v);
        Ok(self
            .neighbors(v)
            .iter()
            .filter(|&w| !d_set.contains(w) && !self.neighbors(w).intersects(others))
            .collect())
    }

    /// Members of `s` with no neighbour in `s`.
    pub fn induced_isolates(&self, s: VertexSet) -> VertexSet {
        s.iter().filter(|&v| !self.neighbors(v).intersects(s)).collect()
    }

    /// `|E(G[s])|`.
    pub fn induced_edge_count(&self, s: VertexSet) -> usize {
        s.iter().map(|v| (self.neighbors(v) & s).len()).sum::<usize>() / 2
    }

    /// `G[s]` relabelled to `0..|s|` in increasing order of the original ids.
    pub fn induced_subgraph(&self, s: VertexSet) -> Graph {
        let verts = s.to_vec();
        let mut g = Graph {
            n: verts.len(),
            adj: vec![0; verts.len()],
        };
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.link(i, j);
                }
            }
        }
        g
    }

    /// True for the complete graph `K_n`, including `K_0` and `K_1`.
    pub fn is_clique(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) + 1 == self.n)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.contains(&0)
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.adj[v] == 0).collect()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = VertexSet::singleton(0);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = self.open_neighborhood(frontier) - seen;
            seen |= next;
            frontier = next;
        }
        seen == self.vertices()
    }

    /// True when `G[s]` has no odd cycle, by BFS 2-colouring.
    pub fn induces_bipartite(&self, s: VertexSet) -> bool {
        let mut uncolored = s;
        while let Some(root) = uncolored.first() {
            let mut sides = [VertexSet::singleton(root), VertexSet::EMPTY];
            let mut frontier = sides[0];
            let mut side = 0;
            uncolored.remove(root);
            while !frontier.is_empty() {
                let reach = self.open_neighborhood(frontier) & s;
                if reach.intersects(sides[side]) {
                    return false;
                }
                side ^= 1;
                frontier = reach & uncolored;
                sides[side] |= frontier;
                uncolored -= frontier;
            }
        }
        true
    }

    /// `G ∪ H` with the vertices of `h` shifted up by `self.order()`.
    pub fn disjoint_union(&self, h: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + h.n;
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge { n });
        }
        let mut adj = self.adj.clone();
        adj.extend(h.adj.iter().map(|&r| r << self.n));
        Ok(Graph { n, adj })
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    ///
    /// # Panics
    /// If `perm` is not a permutation of `0..n`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length");
        let mut adj = vec![0u64; self.n];
        for (u, &pu) in perm.iter().enumerate() {
            adj[pu] = self.neighbors(u).iter().fold(0, |acc, v| acc | 1u64 << perm[v]);
        }
        let g = Graph { n: self.n, adj };
        debug_assert!(Graph::from_rows(&g.adj).is_ok());
        g
    }

    // Fixture families. These panic past the vertex cap.

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n).expect("order within cap");
        for v in 0..n {
            g.adj[v] = VertexSet::full(n).without(v).bits();
        }
        g
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("order within cap")
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("order within cap")
    }

    /// `K_{1,leaves}` with the centre at vertex 0.
    pub fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("order within cap")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}

/// A sequence of distinct vertices, such as an ordering `(d_1, .., d_k)` of
/// a dominating set.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize)]
pub struct OrderedVertexList(Vec<usize>);

impl OrderedVertexList {
    pub fn new(verts: Vec<usize>, n: usize) -> Result<Self, GraphError> {
        let mut seen = VertexSet::EMPTY;
        for &v in &verts {
            if v >= n {
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            if seen.contains(v) {
                return Err(GraphError::DuplicateVertex { v });
            }
            seen.insert(v);
        }
        Ok(OrderedVertexList(verts))
    }

    /// Members of `s` in increasing order.
    pub fn ascending(s: VertexSet) -> Self {
        OrderedVertexList(s.to_vec())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn to_set(&self) -> VertexSet {
        self.0.iter().collect()
    }
}

impl std::ops::Index<usize> for OrderedVertexList {
    type Output = usize;

    fn index(&self, i: usize) -> &usize {
        &self.0[i]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set<const N: usize>(v: [usize; N]) -> VertexSet {
        VertexSet::from(v)
    }

    #[test]
    fn closed_neighborhood_examples() {
        let c4 = Graph::cycle(4);
        assert_eq!(c4.closed_neighborhood(set([0])), set([3, 0, 1]));
        assert_eq!(c4.closed_neighborhood(VertexSet::EMPTY), VertexSet::EMPTY);
        assert_eq!(Graph::complete(4).closed_neighborhood(set([2])), set([0, 1, 2, 3]));
    }

    #[test]
    fn domination_examples() {
        let c4 = Graph::cycle(4);
        assert!(c4.is_dominating(set([0, 2])));
        assert!(!c4.is_dominating(set([0])));
        assert!(Graph::empty(0).unwrap().is_dominating(VertexSet::EMPTY));
    }

    #[test]
    fn independence_examples() {
        assert!(Graph::cycle(4).is_independent(set([0, 2])));
        assert!(!Graph::complete(3).is_independent(set([0, 1])));
        assert!(Graph::complete(3).is_independent(VertexSet::EMPTY));
    }

    #[test]
    fn private_neighbor_examples() {
        let star = Graph::star(3);
        assert_eq!(star.private_neighbors(set([0]), 0).unwrap(), set([1, 2, 3]));
        let c4 = Graph::cycle(4);
        assert_eq!(c4.private_neighbors(set([0, 2]), 0).unwrap(), VertexSet::EMPTY);
        let p4 = Graph::path(4);
        assert_eq!(p4.private_neighbors(set([1, 2]), 1).unwrap(), set([0]));
        assert_eq!(
            p4.private_neighbors(set([1, 2]), 3),
            Err(GraphError::VertexNotInD { v: 3 })
        );
    }

    #[test]
    fn induced_isolate_examples() {
        assert_eq!(Graph::cycle(4).induced_isolates(set([0, 2])), set([0, 2]));
        assert_eq!(Graph::complete(2).induced_isolates(set([0, 1])), VertexSet::EMPTY);
        assert_eq!(Graph::path(4).induced_isolates(set([0, 1, 3])), set([3]));
    }

    #[test]
    fn utility_predicates() {
        assert!(Graph::complete(5).is_clique());
        assert!(!Graph::cycle(4).is_clique());
        let k1_k2 = Graph::complete(1).disjoint_union(&Graph::complete(2)).unwrap();
        assert!(k1_k2.has_isolated_vertex());
        let two_k2 = Graph::complete(2).disjoint_union(&Graph::complete(2)).unwrap();
        assert_eq!(two_k2.order(), 4);
        assert_eq!(two_k2.edges().collect::<Vec<_>>(), vec![(0, 1), (2, 3)]);
        assert!(!two_k2.is_connected());
        assert_eq!(Graph::star(4).degree(0), 4);
    }

    #[test]
    fn union_rejects_oversized_result() {
        let big = Graph::empty(40).unwrap();
        assert_eq!(big.disjoint_union(&big), Err(GraphError::TooLarge { n: 80 }));
    }

    #[test]
    fn from_edges_validates() {
        assert_eq!(Graph::from_edges(3, [(0, 0)]), Err(GraphError::SelfLoop { v: 0 }));
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { v: 3, n: 3 })
        );
        assert!(Graph::from_rows(&[0b10, 0b00]).is_err());
    }

    #[test]
    fn bipartite_detection() {
        assert!(Graph::cycle(4).induces_bipartite(VertexSet::full(4)));
        assert!(!Graph::cycle(5).induces_bipartite(VertexSet::full(5)));
        assert!(Graph::cycle(5).induces_bipartite(set([0, 1, 2, 3])));
        assert!(!Graph::complete(4).induces_bipartite(set([0, 1, 3])));
    }

    #[test]
    fn permutation_preserves_structure() {
        let p = Graph::path(4).permuted(&[3, 1, 0, 2]);
        assert_eq!(p.size(), 3);
        assert!(p.has_edge(3, 1) && p.has_edge(1, 0) && p.has_edge(0, 2));
    }

    #[test]
    fn ordered_list_rejects_duplicates() {
        assert_eq!(
            OrderedVertexList::new(vec![1, 2, 1], 4),
            Err(GraphError::DuplicateVertex { v: 1 })
        );
        assert!(OrderedVertexList::new(vec![4], 4).is_err());
    }
}
