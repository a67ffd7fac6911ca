//! Dense simple graphs on at most [`CAPACITY`] vertices, stored as bit rows.

use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not, Sub};

use crate::error::GraphError;

/// Largest vertex count a dense [`Graph`] can hold.
pub const CAPACITY: usize = 512;

const WORDS: usize = CAPACITY / 64;

/// A subset of `{0, .., CAPACITY-1}` stored as a fixed-width bit vector.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet([u64; WORDS]);

impl VertexSet {
    pub const fn new() -> Self {
        VertexSet([0; WORDS])
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= CAPACITY);
        let mut s = VertexSet::new();
        for w in 0..n / 64 {
            s.0[w] = u64::MAX;
        }
        if !n.is_multiple_of(64) {
            s.0[n / 64] = (1u64 << (n % 64)) - 1;
        }
        s
    }

    pub fn singleton(v: usize) -> Self {
        let mut s = VertexSet::new();
        s.insert(v);
        s
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0[v >> 6] |= 1u64 << (v & 63);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0[v >> 6] &= !(1u64 << (v & 63));
    }

    #[inline]
    pub fn toggle(&mut self, v: usize) {
        self.0[v >> 6] ^= 1u64 << (v & 63);
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < CAPACITY && self.0[v >> 6] & (1u64 << (v & 63)) != 0
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    /// Smallest member.
    #[inline]
    pub fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    /// Largest member.
    pub fn last(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + 63 - w.leading_zeros() as usize)
    }

    #[inline]
    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a & b == 0)
    }

    #[inline]
    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a & !b == 0)
    }

    /// Number of members of `self & other` without materializing it.
    #[inline]
    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Number of members strictly below `v`.
    pub fn rank(&self, v: usize) -> usize {
        let w = v >> 6;
        let mut r: usize = self.0[..w].iter().map(|x| x.count_ones() as usize).sum();
        r += (self.0[w] & ((1u64 << (v & 63)) - 1)).count_ones() as usize;
        r
    }

    pub fn iter(&self) -> Members {
        Members {
            words: self.0,
            word: 0,
        }
    }

    /// True when every member is below `n`.
    pub fn within(&self, n: usize) -> bool {
        self.is_subset(&VertexSet::full(n))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for &VertexSet {
    type Item = usize;
    type IntoIter = Members;
    fn into_iter(self) -> Members {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
pub struct Members {
    words: [u64; WORDS],
    word: usize,
}

impl Iterator for Members {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        while self.word < WORDS {
            let w = self.words[self.word];
            if w != 0 {
                self.words[self.word] = w & (w - 1);
                return Some(self.word * 64 + w.trailing_zeros() as usize);
            }
            self.word += 1;
        }
        None
    }
}

macro_rules! set_binop {
    ($tr:ident, $f:ident, $atr:ident, $af:ident, $op:tt) => {
        impl $tr for VertexSet {
            type Output = VertexSet;
            #[inline]
            fn $f(mut self, rhs: VertexSet) -> VertexSet {
                self.$af(rhs);
                self
            }
        }
        impl $atr for VertexSet {
            #[inline]
            fn $af(&mut self, rhs: VertexSet) {
                for (a, b) in self.0.iter_mut().zip(rhs.0) {
                    *a = *a $op b;
                }
            }
        }
    };
}

set_binop!(BitAnd, bitand, BitAndAssign, bitand_assign, &);
set_binop!(BitOr, bitor, BitOrAssign, bitor_assign, |);

impl Sub for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn sub(mut self, rhs: VertexSet) -> VertexSet {
        for i in 0..WORDS {
            self.0[i] &= !rhs.0[i];
        }
        self
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    fn not(mut self) -> VertexSet {
        for w in self.0.iter_mut() {
            *w = !*w;
        }
        self
    }
}

/// A simple undirected graph with vertices `0..n`.
///
/// Row `u` of the adjacency holds the neighbourhood of `u`. Rows are kept
/// symmetric and loop free by every constructor and mutator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > CAPACITY {
            return Err(GraphError::CapacityExceeded { requested: n });
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::new(); n],
        })
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        let all = VertexSet::full(n);
        for u in 0..n {
            let mut row = all;
            row.remove(u);
            g.adj[u] = row;
        }
        Ok(g)
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    /// Cycle `0-1-..-(n-1)-0`.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::Infeasible(format!("a cycle needs at least 3 vertices, got {n}")));
        }
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// Path `0-1-..-(n-1)`.
    pub fn path(n: usize) -> Result<Self, GraphError> {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    fn check_set(&self, s: &VertexSet) -> Result<(), GraphError> {
        match s.last() {
            Some(v) if v >= self.n => Err(GraphError::VertexOutOfRange { vertex: v, n: self.n }),
            _ => Ok(()),
        }
    }

    /// Adds `uv` in place. Adding an existing edge is a no-op.
    pub fn insert_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::Loop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    /// Removes `uv` in place. Removing a missing edge is a no-op.
    pub fn delete_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.adj[u].remove(v);
        self.adj[v].remove(u);
        Ok(())
    }

    /// Copy of `self` with the edge `uv` present.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        g.insert_edge(u, v)?;
        Ok(g)
    }

    /// Copy of `self` with the edge `uv` absent.
    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        g.delete_edge(u, v)?;
        Ok(g)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    /// Neighbourhood of `u`. Panics if `u` is out of range.
    #[inline]
    pub fn neighbors(&self, u: usize) -> &VertexSet {
        &self.adj[u]
    }

    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(VertexSet::len).collect()
    }

    /// Minimum degree; zero for the graph on no vertices.
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(VertexSet::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Missing pairs `(u, v)` with `u < v` in lexicographic order.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| ((u + 1)..self.n).filter(move |&v| !self.adj[u].contains(v)).map(move |v| (u, v)))
    }

    /// Number of edges with both endpoints in `s`.
    pub fn e_within(&self, s: &VertexSet) -> Result<usize, GraphError> {
        self.check_set(s)?;
        Ok(s.iter().map(|u| self.adj[u].intersection_len(s)).sum::<usize>() / 2)
    }

    /// Number of edges with one endpoint in `s` and the other in `t`.
    pub fn e_between(&self, s: &VertexSet, t: &VertexSet) -> Result<usize, GraphError> {
        self.check_set(s)?;
        self.check_set(t)?;
        if !s.is_disjoint(t) {
            return Err(GraphError::OverlappingSets);
        }
        Ok(s.iter().map(|u| self.adj[u].intersection_len(t)).sum())
    }

    /// The subgraph induced by `keep`, relabelled `0..|keep|` in ascending
    /// order of the original labels.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Result<Graph, GraphError> {
        self.check_set(keep)?;
        let order: Vec<usize> = keep.iter().collect();
        let mut h = Graph::empty(order.len())?;
        for (i, &u) in order.iter().enumerate() {
            let row = self.adj[u] & *keep;
            for v in row.iter() {
                h.adj[i].insert(keep.rank(v));
            }
        }
        Ok(h)
    }

    /// `G - S`, relabelled as in [`Graph::induced_subgraph`].
    pub fn delete_vertices(&self, s: &VertexSet) -> Result<Graph, GraphError> {
        self.check_set(s)?;
        self.induced_subgraph(&(self.vertices() - *s))
    }

    /// Vertex sets of the connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::new();
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen.contains(s) {
                continue;
            }
            let mut comp = VertexSet::singleton(s);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::new();
                for u in frontier.iter() {
                    next |= self.adj[u];
                }
                frontier = next - comp;
                comp |= next;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Adjacency lists, ascending.
    pub fn adjacency_lists(&self) -> Vec<Vec<u32>> {
        self.adj
            .iter()
            .map(|row| row.iter().map(|v| v as u32).collect())
            .collect()
    }

    /// Graph on the same vertices with `perm[v]` as the new label of `v`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut h = Graph::empty(self.n).expect("same size");
        for (u, v) in self.edges() {
            h.adj[perm[u]].insert(perm[v]);
            h.adj[perm[v]].insert(perm[u]);
        }
        h
    }

    /// Checks symmetry, loop freeness and range of every row.
    pub fn validate(&self) -> Result<(), GraphError> {
        if self.adj.len() != self.n {
            return Err(GraphError::Corrupt(format!("{} rows for n = {}", self.adj.len(), self.n)));
        }
        for u in 0..self.n {
            let row = &self.adj[u];
            if !row.within(self.n) {
                return Err(GraphError::Corrupt(format!("row {u} has bits beyond n")));
            }
            if row.contains(u) {
                return Err(GraphError::Loop(u));
            }
            for v in row.iter() {
                if !self.adj[v].contains(u) {
                    return Err(GraphError::Corrupt(format!("asymmetric pair ({u}, {v})")));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, e={}, {})", self.n, self.edge_count(), crate::graph6::encode(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Graph {
        Graph::complete(n).unwrap()
    }

    #[test]
    fn add_edge_examples() {
        let g = Graph::empty(3).unwrap().add_edge(0, 1).unwrap();
        assert_eq!(g.edge_count(), 1);

        let k3 = k(3);
        assert_eq!(k3.add_edge(0, 1).unwrap(), k3);
        assert_eq!(k3.add_edge(0, 1).unwrap().edge_count(), 3);

        let p = Graph::path(3).unwrap();
        assert_eq!(p.add_edge(0, 2).unwrap(), Graph::cycle(3).unwrap());
    }

    #[test]
    fn add_edge_errors() {
        let g = Graph::empty(3).unwrap();
        assert_eq!(g.add_edge(1, 1), Err(GraphError::Loop(1)));
        assert_eq!(
            g.add_edge(0, 3),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert!(matches!(
            Graph::empty(CAPACITY + 1),
            Err(GraphError::CapacityExceeded { .. })
        ));
    }

    #[test]
    fn induced_subgraph_examples() {
        let k5 = k(5);
        let keep: VertexSet = [0, 2, 4].into_iter().collect();
        assert_eq!(k5.induced_subgraph(&keep).unwrap(), k(3));

        let c5 = Graph::cycle(5).unwrap();
        let keep: VertexSet = [0, 1, 2].into_iter().collect();
        assert_eq!(c5.induced_subgraph(&keep).unwrap(), Graph::path(3).unwrap());

        // relabelling keeps ascending order: {1, 3, 4} of C_5 -> 3-4 edge only
        let keep: VertexSet = [1, 3, 4].into_iter().collect();
        let h = c5.induced_subgraph(&keep).unwrap();
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(1, 2)]);
    }

    #[test]
    fn induced_subgraph_rejects_out_of_range() {
        let keep: VertexSet = [0, 7].into_iter().collect();
        assert!(k(5).induced_subgraph(&keep).is_err());
    }

    #[test]
    fn counting_queries() {
        assert_eq!(k(4).edge_count(), 6);
        let k54 = Graph::from_edges(9, (0..5).flat_map(|a| (5..9).map(move |b| (a, b)))).unwrap();
        assert_eq!(k54.min_degree(), 4);
        assert_eq!(k54.max_degree(), 5);
        let s = VertexSet::full(5);
        let t = VertexSet::full(9) - s;
        assert_eq!(k54.e_between(&s, &t).unwrap(), 20);
        assert_eq!(k54.e_within(&s).unwrap(), 0);
        assert_eq!(k54.e_between(&s, &s), Err(GraphError::OverlappingSets));
    }

    #[test]
    fn components_and_neighbors() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (3, 4)]).unwrap();
        let comps = g.components();
        assert_eq!(comps.len(), 3);
        assert_eq!(comps[0].iter().collect::<Vec<_>>(), vec![0, 1, 2]);
        assert_eq!(comps[2].iter().collect::<Vec<_>>(), vec![5]);
        assert_eq!(g.neighbors(1).iter().collect::<Vec<_>>(), vec![0, 2]);
        assert!(!g.is_connected());
    }

    #[test]
    fn vertex_set_ops() {
        let a: VertexSet = [1, 70, 300].into_iter().collect();
        assert_eq!(a.len(), 3);
        assert_eq!(a.first(), Some(1));
        assert_eq!(a.last(), Some(300));
        assert_eq!(a.rank(300), 2);
        assert_eq!(VertexSet::full(130).len(), 130);
        assert_eq!(VertexSet::full(128).len(), 128);
        let b: VertexSet = [70].into_iter().collect();
        assert!(b.is_subset(&a));
        assert_eq!((a - b).iter().collect::<Vec<_>>(), vec![1, 300]);
    }

    #[test]
    fn large_capacity_graph() {
        let g = Graph::cycle(CAPACITY).unwrap();
        assert_eq!(g.edge_count(), CAPACITY);
        assert!(g.validate().is_ok());
        assert!(g.is_connected());
    }
}
