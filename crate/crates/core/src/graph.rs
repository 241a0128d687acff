//! Simple undirected graphs over bitset adjacency rows, Cartesian products,
//! and structural helpers.

use std::fmt;

use crate::bitset::{VertexSet, CAPACITY};
use crate::error::GraphError;

/// An immutable simple graph on vertices `0..n`.
///
/// Adjacency is symmetric and irreflexive and every row is clear above `n`;
/// all constructors enforce this.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    label: Option<String>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn edgeless(n: usize) -> Result<Self, GraphError> {
        check_capacity(n)?;
        Ok(Graph { n, adj: vec![VertexSet::new(); n], label: None })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::edgeless(n)?;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::InvalidParameter(format!("self-loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Open neighborhood of `v`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighborhood of `v`.
    #[inline]
    pub fn closed(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v];
        s.insert(v);
        s
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.adj[v].is_empty()).collect()
    }

    pub fn is_isolate_free(&self) -> bool {
        self.isolated_vertices().is_empty()
    }

    /// At least one edge.
    pub fn is_nontrivial(&self) -> bool {
        self.adj.iter().any(|a| !a.is_empty())
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) + 1 == self.n)
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| !self.adj[v].intersects(s))
    }

    /// `s` together with every vertex adjacent to a member of `s`.
    pub fn closed_neighborhood(&self, s: &VertexSet) -> VertexSet {
        s.iter().fold(*s, |acc, v| acc | self.adj[v])
    }

    /// Subgraph induced by `keep`, relabelled to `0..|keep|` in increasing
    /// order. The second value maps new indices back to old ones.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = keep.iter().filter(|&v| v < self.n).collect();
        let mut new_of = vec![usize::MAX; self.n];
        for (i, &v) in old.iter().enumerate() {
            new_of[v] = i;
        }
        let mut g = Graph { n: old.len(), adj: vec![VertexSet::new(); old.len()], label: None };
        for (i, &v) in old.iter().enumerate() {
            for w in (self.adj[v] & *keep).iter() {
                g.adj[i].insert(new_of[w]);
            }
        }
        (g, old)
    }

    /// Connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::new();
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let grown = self.closed_neighborhood(&frontier);
                frontier = grown - comp;
                comp |= grown;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Applies `perm` (old index -> new index).
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph { n: self.n, adj: vec![VertexSet::new(); self.n], label: self.label.clone() };
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("label", &self.label)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

fn check_capacity(n: usize) -> Result<(), GraphError> {
    if n > CAPACITY {
        Err(GraphError::CapacityExceeded { requested: n, capacity: CAPACITY })
    } else {
        Ok(())
    }
}

/// Block-diagonal union; the i-th graph occupies the next `n_i` indices.
pub fn disjoint_union(gs: &[Graph]) -> Result<Graph, GraphError> {
    let total: usize = gs.iter().map(Graph::n).sum();
    let mut out = Graph::edgeless(total)?;
    let mut offset = 0;
    for g in gs {
        for (u, v) in g.edges() {
            out.add_edge(u + offset, v + offset);
        }
        offset += g.n();
    }
    Ok(out)
}

/// `G □ H` with vertex `(u, v)` stored at index `u * n_h + v`.
#[derive(Clone, Debug)]
pub struct ProductGraph {
    graph: Graph,
    n_g: usize,
    n_h: usize,
}

impl ProductGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn factor_sizes(&self) -> (usize, usize) {
        (self.n_g, self.n_h)
    }

    #[inline]
    pub fn index(&self, u: usize, v: usize) -> usize {
        debug_assert!(u < self.n_g && v < self.n_h);
        u * self.n_h + v
    }

    #[inline]
    pub fn coords(&self, i: usize) -> (usize, usize) {
        (i / self.n_h, i % self.n_h)
    }

    /// `{u} × V(H)`
    pub fn row(&self, u: usize) -> VertexSet {
        (0..self.n_h).map(|v| self.index(u, v)).collect()
    }

    /// `V(G) × {v}`
    pub fn column(&self, v: usize) -> VertexSet {
        (0..self.n_g).map(|u| self.index(u, v)).collect()
    }

    /// `a × b` for `a ⊆ V(G)`, `b ⊆ V(H)`.
    pub fn block(&self, a: &VertexSet, b: &VertexSet) -> VertexSet {
        let mut s = VertexSet::new();
        for u in a {
            for v in b {
                s.insert(self.index(u, v));
            }
        }
        s
    }

    /// Maps a set of this product to the same vertices of `H □ G`.
    pub fn transpose_set(&self, s: &VertexSet) -> VertexSet {
        s.iter()
            .map(|i| {
                let (u, v) = self.coords(i);
                v * self.n_g + u
            })
            .collect()
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }
}

pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<ProductGraph, GraphError> {
    let (n_g, n_h) = (g.n(), h.n());
    let n = n_g.checked_mul(n_h).ok_or(GraphError::CapacityExceeded { requested: usize::MAX, capacity: CAPACITY })?;
    let mut graph = Graph::edgeless(n)?;
    for u in 0..n_g {
        for (v1, v2) in h.edges() {
            graph.add_edge(u * n_h + v1, u * n_h + v2);
        }
    }
    for (u1, u2) in g.edges() {
        for v in 0..n_h {
            graph.add_edge(u1 * n_h + v, u2 * n_h + v);
        }
    }
    if let (Some(a), Some(b)) = (g.label(), h.label()) {
        graph.label = Some(format!("{a} x {b}"));
    }
    Ok(ProductGraph { graph, n_g, n_h })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::FamilySpec;

    fn gen(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().generate().unwrap()
    }

    #[test]
    fn closed_neighborhood_examples() {
        let set = |v: &[usize]| v.iter().copied().collect::<VertexSet>();
        assert_eq!(gen("k:3").closed_neighborhood(&set(&[0])), set(&[0, 1, 2]));
        assert_eq!(gen("empty:4").closed_neighborhood(&set(&[2])), set(&[2]));
        assert_eq!(gen("path:4").closed_neighborhood(&set(&[1])), set(&[0, 1, 2]));
        assert!(gen("path:4").closed_neighborhood(&VertexSet::new()).is_empty());
    }

    #[test]
    fn k2_square_k2_is_c4() {
        let p = cartesian_product(&gen("k:2"), &gen("k:2")).unwrap();
        assert_eq!(p.graph().edge_count(), 4);
        assert_eq!(p.graph().degree_sequence(), vec![2; 4]);
        assert!(p.graph().is_connected());
    }

    #[test]
    fn k1_factor_is_identity() {
        let h = gen("x:2");
        let p = cartesian_product(&gen("k:1"), &h).unwrap();
        assert_eq!(p.graph(), &h);
        let p = cartesian_product(&h, &gen("k:1")).unwrap();
        assert_eq!(p.graph(), &h);
    }

    #[test]
    fn k3_square_k3() {
        let p = cartesian_product(&gen("k:3"), &gen("k:3")).unwrap();
        assert_eq!(p.graph().n(), 9);
        assert_eq!(p.graph().edge_count(), 18);
        assert_eq!(p.graph().degree_sequence(), vec![4; 9]);
    }

    #[test]
    fn product_adjacency_rule() {
        let (g, h) = (gen("path:3"), gen("star:3"));
        let p = cartesian_product(&g, &h).unwrap();
        for a in 0..p.graph().n() {
            for b in 0..p.graph().n() {
                let ((u1, v1), (u2, v2)) = (p.coords(a), p.coords(b));
                let expect = (u1 == u2 && h.has_edge(v1, v2)) || (v1 == v2 && g.has_edge(u1, u2));
                assert_eq!(p.graph().has_edge(a, b), expect);
            }
        }
        assert_eq!(p.row(1).len(), 4);
        assert_eq!(p.column(2).len(), 3);
    }

    #[test]
    fn product_capacity_error() {
        let big = Graph::edgeless(200).unwrap();
        assert!(matches!(
            cartesian_product(&big, &gen("k:2")),
            Err(GraphError::CapacityExceeded { requested: 400, .. })
        ));
        assert!(Graph::edgeless(CAPACITY + 1).is_err());
    }

    #[test]
    fn disjoint_union_examples() {
        let u = disjoint_union(&[gen("k:2"), gen("k:2")]).unwrap();
        assert_eq!((u.n(), u.edge_count(), u.components().len()), (4, 2, 2));
        let u = disjoint_union(&[]).unwrap();
        assert_eq!(u.n(), 0);
        let u = disjoint_union(&[gen("k:3"), gen("empty:1")]).unwrap();
        assert_eq!((u.n(), u.edge_count()), (4, 3));
    }

    #[test]
    fn components_examples() {
        let set = |v: &[usize]| v.iter().copied().collect::<VertexSet>();
        assert_eq!(gen("k:3").components(), vec![set(&[0, 1, 2])]);
        assert_eq!(gen("empty:3").components(), vec![set(&[0]), set(&[1]), set(&[2])]);
        let u = disjoint_union(&[gen("path:4"), gen("k:2")]).unwrap();
        assert_eq!(u.components(), vec![set(&[0, 1, 2, 3]), set(&[4, 5])]);
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert!(matches!(
            Graph::from_edges(3, [(0, 1), (1, 5)]),
            Err(GraphError::VertexOutOfRange { vertex: 5, n: 3 })
        ));
        assert!(Graph::from_edges(3, [(1, 1)]).is_err());
    }

    #[test]
    fn transpose_set_swaps_coordinates() {
        let (g, h) = (gen("path:3"), gen("k:2"));
        let p = cartesian_product(&g, &h).unwrap();
        let q = cartesian_product(&h, &g).unwrap();
        let s = p.row(1);
        assert_eq!(p.transpose_set(&s), q.column(1));
    }
}
