//! Simple undirected graphs on dense vertex labels `0..n`, stored as one
//! adjacency bitset per vertex.

mod build;
mod canon;
mod format;
mod props;

use std::fmt;

use crate::error::{Error, Result};

pub use build::{
    blowup, complete, complete_bipartite, complete_multipartite, cycle, empty, make_graph, path,
    petersen, star, turan_graph,
};
pub use canon::{canonical_form, canonical_graph, canonical_labeling, CanonicalForm};
pub use format::{graph6_decode, graph6_encode, parse_edge_list, parse_graphs, write_edge_list};
pub use props::{
    chromatic_number, clique_number, contains_subgraph, has_homomorphism, is_bipartite,
    odd_girth, shortest_odd_cycle,
};
pub(crate) use canon::canonical_form_of_canonical;
pub(crate) use props::contains_subgraph_through;

/// Largest supported vertex count (one `u64` word per adjacency row).
pub const MAX_VERTICES: usize = 64;

/// An unordered vertex pair, smaller label first.
pub type Edge = (usize, usize);

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of a word, lowest first.
#[derive(Clone, Copy)]
pub(crate) struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

/// A labeled simple undirected graph.
///
/// Values are immutable from the outside: every transformation returns a new
/// graph, so traces can keep all intermediate states.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from an edge list. Duplicate pairs collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows. Rows must be symmetric and loop-free.
    pub(crate) fn from_rows(adj: Vec<u64>) -> Self {
        let g = Graph { n: adj.len(), adj };
        debug_assert!(g.n <= MAX_VERTICES);
        debug_assert!((0..g.n).all(|v| g.adj[v] & bit(v) == 0));
        debug_assert!((0..g.n).all(|v| Bits(g.adj[v]).all(|w| w < g.n && g.adj[w] & bit(v) != 0)));
        g
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    pub(crate) fn clear_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    /// Neighborhood of `v` as a bitset.
    pub fn neighbors_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        Bits(self.adj[v])
    }

    /// Bitset of all vertices.
    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.n).flat_map(move |u| Bits(self.adj[u] & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    /// Pairs `(u, v)` with `u < v` that are not edges.
    pub fn non_edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let all = self.vertex_mask();
        (0..self.n).flat_map(move |u| {
            Bits(all & !self.adj[u] & !low_mask(u + 1)).map(move |v| (u, v))
        })
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let mut g = self.clone();
        g.set_edge(u, v);
        Ok(g)
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let mut g = self.clone();
        g.clear_edge(u, v);
        Ok(g)
    }

    /// Appends a vertex adjacent to the vertices in `neighbors`.
    pub fn with_vertex(&self, neighbors: u64) -> Result<Graph> {
        if self.n + 1 > MAX_VERTICES {
            return Err(Error::TooManyVertices { n: self.n + 1 });
        }
        debug_assert_eq!(neighbors & !self.vertex_mask(), 0);
        let mut adj = self.adj.clone();
        let v = self.n;
        for w in Bits(neighbors) {
            adj[w] |= bit(v);
        }
        adj.push(neighbors);
        Ok(Graph { n: v + 1, adj })
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        let adj = (0..self.n).map(|v| all & !self.adj[v] & !bit(v)).collect();
        Graph { n: self.n, adj }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, got: perm.len() });
        }
        let mut seen = 0u64;
        for &p in perm {
            self.check_vertex(p)?;
            if seen & bit(p) != 0 {
                return Err(Error::Precondition("relabeling is not a permutation".into()));
            }
            seen |= bit(p);
        }
        let mut adj = vec![0u64; self.n];
        for (u, v) in self.edges() {
            adj[perm[u]] |= bit(perm[v]);
            adj[perm[v]] |= bit(perm[u]);
        }
        Ok(Graph { n: self.n, adj })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&graph6_encode(self))
    }
}

/// Part sizes of a complete multipartite graph or of a vertex partition.
///
/// Insertion order is preserved; [`PartComposition::normalized`] gives the
/// descending form used for comparisons.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartComposition {
    parts: Vec<usize>,
}

impl PartComposition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if let Some(index) = parts.iter().position(|&p| p == 0) {
            return Err(Error::ZeroEntry { index });
        }
        let n: usize = parts.iter().sum();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n });
        }
        Ok(PartComposition { parts })
    }

    /// Sizes of the Turán graph `T(n, r)`, largest first; zero-size parts are dropped.
    pub fn turan(n: usize, r: usize) -> Result<Self> {
        if r == 0 {
            return Err(Error::ZeroParts);
        }
        let (q, rem) = (n / r, n % r);
        let parts = (0..r)
            .map(|i| if i < rem { q + 1 } else { q })
            .filter(|&p| p > 0)
            .collect();
        PartComposition::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn normalized(&self) -> PartComposition {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        PartComposition { parts }
    }

    pub fn min_part(&self) -> Option<usize> {
        self.parts.iter().copied().min()
    }
}

impl fmt::Display for PartComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

/// An ordered, finite family of graphs. Order matters for nice sequences.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GraphFamily {
    members: Vec<Graph>,
}

impl GraphFamily {
    pub fn new(members: Vec<Graph>) -> Self {
        GraphFamily { members }
    }

    pub fn members(&self) -> &[Graph] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// True iff `g` contains no member as a subgraph.
    pub fn is_free(&self, g: &Graph) -> bool {
        self.members.iter().all(|f| !contains_subgraph(g, f))
    }

    /// Odd cycles `C_3, C_5, ..., C_{2k+1}`.
    pub fn odd_cycles(k: usize) -> Self {
        GraphFamily::new((1..=k).map(|i| cycle(2 * i + 1).expect("small cycle")).collect())
    }
}

impl From<Vec<Graph>> for GraphFamily {
    fn from(members: Vec<Graph>) -> Self {
        GraphFamily::new(members)
    }
}

impl<'a> IntoIterator for &'a GraphFamily {
    type Item = &'a Graph;
    type IntoIter = std::slice::Iter<'a, Graph>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn make_graph_collapses_duplicates() {
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn make_graph_rejects_bad_pairs() {
        assert_eq!(Graph::from_edges(3, [(0, 3)]), Err(Error::VertexOutOfRange { vertex: 3, n: 3 }));
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(Graph::empty(65), Err(Error::TooManyVertices { n: 65 }));
    }

    #[test]
    fn degree_sum_is_twice_edge_count() {
        let g = petersen();
        assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
        assert_eq!(g.non_edges().count() + g.edge_count(), 45);
    }

    #[test]
    fn c5_basics() {
        let g = make_graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(g.edge_count(), 5);
        assert_eq!(g.min_degree(), Some(2));
    }

    #[test]
    fn composition_rules() {
        assert!(matches!(PartComposition::new(vec![2, 0]), Err(Error::ZeroEntry { index: 1 })));
        let p = PartComposition::new(vec![1, 3, 2]).unwrap();
        assert_eq!(p.normalized().parts(), &[3, 2, 1]);
        assert_eq!(p.parts(), &[1, 3, 2]);
        assert_eq!(p.n(), 6);
        assert_eq!(PartComposition::turan(7, 3).unwrap().parts(), &[3, 2, 2]);
        assert_eq!(PartComposition::turan(2, 4).unwrap().parts(), &[1, 1]);
        assert_eq!(PartComposition::turan(3, 0), Err(Error::ZeroParts));
    }

    #[test]
    fn relabel_requires_permutation() {
        let g = path(3).unwrap();
        assert!(g.relabel(&[0, 0, 1]).is_err());
        let h = g.relabel(&[2, 0, 1]).unwrap();
        assert!(h.has_edge(2, 0) && h.has_edge(0, 1) && !h.has_edge(2, 1));
    }
}
