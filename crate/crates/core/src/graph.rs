//! Finite simple graphs over named vertices.
//!
//! Vertices are addressed by their position in the declared order; a
//! [`VertexSet`] is a bitmask over those positions. Every derived graph
//! (induced subgraph, complement, join factor) is a fresh value whose
//! vertices keep the relative order of the parent.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 64;

/// A set of vertex positions, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        VertexSet(1 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 & (1 << i) != 0
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn with(self, i: usize) -> Self {
        VertexSet(self.0 | (1 << i))
    }

    pub fn without(self, i: usize) -> Self {
        VertexSet(self.0 & !(1 << i))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in increasing order.
    pub fn iter(self) -> VertexSetIter {
        VertexSetIter(self.0)
    }

    /// All subsets of `self`, starting with the empty set.
    pub fn subsets(self) -> SubsetIter {
        SubsetIter {
            mask: self.0,
            next: Some(0),
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

pub struct VertexSetIter(u64);

impl Iterator for VertexSetIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexSetIter {}

/// Subset enumeration by the standard `(s - mask) & mask` walk.
pub struct SubsetIter {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for SubsetIter {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let cur = self.next?;
        let succ = cur.wrapping_sub(self.mask) & self.mask;
        self.next = (succ != 0).then_some(succ);
        Some(VertexSet(cur))
    }
}

/// A set of pairwise adjacent vertices. The empty set is a clique.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Clique(VertexSet);

impl Clique {
    pub fn members(self) -> VertexSet {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.len()
    }

    pub fn is_empty(self) -> bool {
        self.0.is_empty()
    }
}

/// Finite simple undirected graph.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    names: Vec<String>,
    adj: Vec<VertexSet>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<(&str, &str)> = self
            .edges()
            .into_iter()
            .map(|(i, j)| (self.name(i), self.name(j)))
            .collect();
        f.debug_struct("Graph")
            .field("vertices", &self.names)
            .field("edges", &edges)
            .finish()
    }
}

impl Graph {
    /// Build a graph from declared vertices and an edge list over their names.
    ///
    /// Repeated edges (in either orientation) collapse to one.
    pub fn new<V, E>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator,
        V::Item: AsRef<str>,
        E: IntoIterator,
        E::Item: EdgeRef,
    {
        let names: Vec<String> = vertices.into_iter().map(|v| v.as_ref().to_string()).collect();
        if names.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices(names.len()));
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::DuplicateVertex(n.clone()));
            }
        }
        let mut g = Graph {
            adj: alloc::vec![VertexSet::EMPTY; names.len()],
            names,
        };
        for e in edges {
            let (a, b) = e.endpoints();
            let i = g.require(a)?;
            let j = g.require(b)?;
            if i == j {
                return Err(Error::SelfLoop(a.to_string()));
            }
            g.adj[i].insert(j);
            g.adj[j].insert(i);
        }
        Ok(g)
    }

    /// Build from vertex names and index pairs. Panics on out-of-range
    /// indices or self-loops.
    pub fn from_index_edges<V>(vertices: V, edges: &[(usize, usize)]) -> Self
    where
        V: IntoIterator,
        V::Item: AsRef<str>,
    {
        let names: Vec<String> = vertices.into_iter().map(|v| v.as_ref().to_string()).collect();
        assert!(names.len() <= MAX_VERTICES);
        let mut adj = alloc::vec![VertexSet::EMPTY; names.len()];
        for &(i, j) in edges {
            assert!(i != j && i < names.len() && j < names.len());
            adj[i].insert(j);
            adj[j].insert(i);
        }
        Graph { names, adj }
    }

    /// Graph on `n` vertices named `0..n`.
    pub fn numbered(n: usize, edges: &[(usize, usize)]) -> Self {
        Self::from_index_edges((0..n).map(|i| alloc::format!("{i}")), edges)
    }

    pub fn edgeless<V>(vertices: V) -> Self
    where
        V: IntoIterator,
        V::Item: AsRef<str>,
    {
        Self::from_index_edges(vertices, &[])
    }

    pub fn complete<V>(vertices: V) -> Self
    where
        V: IntoIterator,
        V::Item: AsRef<str>,
    {
        let mut g = Self::edgeless(vertices);
        let all = g.all();
        for i in 0..g.len() {
            g.adj[i] = all.without(i);
        }
        g
    }

    /// Path through the vertices in the given order.
    pub fn path<V>(vertices: V) -> Self
    where
        V: IntoIterator,
        V::Item: AsRef<str>,
    {
        let mut g = Self::edgeless(vertices);
        for i in 1..g.len() {
            g.adj[i].insert(i - 1);
            g.adj[i - 1].insert(i);
        }
        g
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn vertices(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    /// Positions of the named vertices.
    pub fn vertex_set<I>(&self, names: I) -> Result<VertexSet>
    where
        I: IntoIterator,
        I::Item: AsRef<str>,
    {
        names
            .into_iter()
            .map(|n| self.require(n.as_ref()))
            .collect()
    }

    pub fn all(&self) -> VertexSet {
        VertexSet::full(self.len())
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i].contains(j)
    }

    pub fn neighbors(&self, i: usize) -> VertexSet {
        self.adj[i]
    }

    /// Edges as index pairs `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            for j in self.adj[i].iter().filter(|&j| j > i) {
                out.push((i, j));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|v| set.without(v).is_subset(self.adj[v]))
    }

    pub fn is_complete(&self) -> bool {
        self.is_clique(self.all())
    }

    /// Subgraph induced by a set of positions; vertex order is preserved.
    pub fn induced(&self, set: VertexSet) -> Graph {
        let keep: Vec<usize> = set.iter().filter(|&i| i < self.len()).collect();
        let names = keep.iter().map(|&i| self.names[i].clone()).collect();
        let adj = keep
            .iter()
            .map(|&i| {
                keep.iter()
                    .enumerate()
                    .filter(|&(_, &j)| self.adj[i].contains(j))
                    .map(|(k, _)| k)
                    .collect()
            })
            .collect();
        Graph { names, adj }
    }

    /// Subgraph induced by the named vertices.
    pub fn induced_subgraph<I>(&self, names: I) -> Result<Graph>
    where
        I: IntoIterator,
        I::Item: AsRef<str>,
    {
        Ok(self.induced(self.vertex_set(names)?))
    }

    /// Induced subgraph on the neighbours of `j` (excluding `j`).
    pub fn neighborhood(&self, j: usize) -> Graph {
        self.induced(self.adj[j])
    }

    pub fn neighborhood_subgraph(&self, name: &str) -> Result<Graph> {
        Ok(self.neighborhood(self.require(name)?))
    }

    pub fn complement(&self) -> Graph {
        let all = self.all();
        let adj = (0..self.len())
            .map(|i| all.difference(self.adj[i]).without(i))
            .collect();
        Graph {
            names: self.names.clone(),
            adj,
        }
    }

    /// Graph join: disjoint union plus every cross edge. Vertex names must
    /// be disjoint.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        if let Some(dup) = other.names.iter().find(|n| self.names.contains(n)) {
            return Err(Error::DuplicateVertex(dup.clone()));
        }
        let n = self.len();
        let total = n + other.len();
        if total > MAX_VERTICES {
            return Err(Error::TooManyVertices(total));
        }
        let left = VertexSet::full(n);
        let right = VertexSet::full(total).difference(left);
        let mut adj: Vec<VertexSet> = self.adj.iter().map(|a| a.union(right)).collect();
        adj.extend(
            other
                .adj
                .iter()
                .map(|a| VertexSet::from_bits(a.bits() << n).union(left)),
        );
        let names = self.names.iter().chain(&other.names).cloned().collect();
        Ok(Graph { names, adj })
    }

    /// All cliques, including the empty set and singletons, each once.
    ///
    /// Cliques are produced by extending in vertex order, which lists them
    /// lexicographically by sorted member positions.
    pub fn enumerate_cliques(&self) -> Vec<Clique> {
        let mut out = Vec::new();
        self.extend_cliques(VertexSet::EMPTY, self.all(), &mut out);
        out
    }

    fn extend_cliques(&self, current: VertexSet, candidates: VertexSet, out: &mut Vec<Clique>) {
        out.push(Clique(current));
        for v in candidates.iter() {
            let rest = VertexSet::from_bits(candidates.bits() & !((2u64 << v).wrapping_sub(1)));
            self.extend_cliques(current.with(v), rest.intersection(self.adj[v]), out);
        }
    }

    /// Vertex sets of the join-irreducible factors: the connected components
    /// of the complement, ordered by smallest member.
    pub fn join_factor_sets(&self) -> Vec<VertexSet> {
        self.join_factor_sets_within(self.all())
    }

    /// Join-irreducible factors of the subgraph induced by `all`, as sets of
    /// positions in `self`.
    pub fn join_factor_sets_within(&self, all: VertexSet) -> Vec<VertexSet> {
        let mut unseen = all;
        let mut factors = Vec::new();
        while let Some(start) = unseen.first() {
            let mut component = VertexSet::singleton(start);
            let mut frontier = component;
            while let Some(v) = frontier.first() {
                frontier = frontier.without(v);
                let non_neighbors = all.difference(self.adj[v]).without(v);
                let fresh = non_neighbors.difference(component);
                component = component.union(fresh);
                frontier = frontier.union(fresh);
            }
            unseen = unseen.difference(component);
            factors.push(component);
        }
        factors
    }

    /// The join-irreducible factors as graphs. The empty graph has no factors.
    pub fn join_decomposition(&self) -> Vec<Graph> {
        self.join_factor_sets()
            .into_iter()
            .map(|s| self.induced(s))
            .collect()
    }

    pub fn is_join_irreducible(&self) -> bool {
        self.join_factor_sets().len() == 1
    }

    /// Reorder a named assignment into vertex order.
    pub fn assignment<K, S, I>(&self, values: I) -> Result<Vec<S>>
    where
        I: IntoIterator<Item = (K, S)>,
        K: AsRef<str>,
    {
        let mut slots: Vec<Option<S>> = (0..self.len()).map(|_| None).collect();
        for (k, v) in values {
            let i = self.require(k.as_ref())?;
            slots[i] = Some(v);
        }
        slots
            .into_iter()
            .enumerate()
            .map(|(i, s)| s.ok_or_else(|| Error::MissingAssignment(self.names[i].clone())))
            .collect()
    }

    /// Values of `x` on the members of `set`, in vertex order.
    pub fn restrict<S: Clone>(&self, set: VertexSet, x: &[S]) -> Vec<S> {
        set.iter().map(|i| x[i].clone()).collect()
    }

    pub(crate) fn check_len<T>(&self, x: &[T]) -> Result<()> {
        if x.len() != self.len() {
            return Err(Error::AssignmentLength {
                expected: self.len(),
                got: x.len(),
            });
        }
        Ok(())
    }
}

/// Anything that names the two endpoints of an edge.
pub trait EdgeRef {
    fn endpoints(&self) -> (&str, &str);
}

impl<A: AsRef<str>, B: AsRef<str>> EdgeRef for (A, B) {
    fn endpoints(&self) -> (&str, &str) {
        (self.0.as_ref(), self.1.as_ref())
    }
}

impl<A: AsRef<str>, B: AsRef<str>> EdgeRef for &(A, B) {
    fn endpoints(&self) -> (&str, &str) {
        (self.0.as_ref(), self.1.as_ref())
    }
}

impl<A: AsRef<str>> EdgeRef for [A; 2] {
    fn endpoints(&self) -> (&str, &str) {
        (self[0].as_ref(), self[1].as_ref())
    }
}

impl<A: AsRef<str>> EdgeRef for &[A; 2] {
    fn endpoints(&self) -> (&str, &str) {
        (self[0].as_ref(), self[1].as_ref())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn members(g: &Graph, cliques: &[Clique]) -> Vec<Vec<String>> {
        cliques
            .iter()
            .map(|c| c.members().iter().map(|i| g.name(i).to_string()).collect())
            .collect()
    }

    #[test]
    fn rejects_bad_input() {
        let e: [(&str, &str); 0] = [];
        assert_eq!(
            Graph::new(["a", "a"], e),
            Err(Error::DuplicateVertex("a".into()))
        );
        assert_eq!(
            Graph::new(["a", "b"], [("a", "a")]),
            Err(Error::SelfLoop("a".into()))
        );
        assert_eq!(
            Graph::new(["a", "b"], [("a", "z")]),
            Err(Error::UnknownVertex("z".into()))
        );
    }

    #[test]
    fn induced_subgraph_examples() {
        let path = Graph::path(["a", "b", "c"]);
        let ac = path.induced_subgraph(["a", "c"]).unwrap();
        assert_eq!(ac.vertices(), ["a", "c"]);
        assert_eq!(ac.edge_count(), 0);
        assert_eq!(path.induced_subgraph(["a", "b", "c"]).unwrap(), path);

        let tri = Graph::complete(["a", "b", "c"]);
        let ab = tri.induced_subgraph(["a", "b"]).unwrap();
        assert_eq!(ab, Graph::complete(["a", "b"]));
        assert!(matches!(
            tri.induced_subgraph(["q"]),
            Err(Error::UnknownVertex(_))
        ));
    }

    #[test]
    fn clique_enumeration_examples() {
        let g = Graph::edgeless(["a", "b"]);
        assert_eq!(
            members(&g, &g.enumerate_cliques()),
            vec![vec![], vec!["a".to_string()], vec!["b".to_string()]]
        );

        assert_eq!(Graph::complete(["a", "b", "c"]).enumerate_cliques().len(), 8);

        let p = Graph::path(["a", "b", "c"]);
        let got = members(&p, &p.enumerate_cliques());
        let want: Vec<Vec<String>> = [&[][..], &["a"], &["a", "b"], &["b"], &["b", "c"], &["c"]]
            .iter()
            .map(|c| c.iter().map(|s| s.to_string()).collect())
            .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn join_decomposition_examples() {
        assert_eq!(Graph::edgeless(["a", "b", "c"]).join_decomposition().len(), 1);

        let factors = Graph::complete(["a", "b", "c"]).join_decomposition();
        assert_eq!(factors.len(), 3);
        assert!(factors.iter().all(|f| f.len() == 1));

        let g = Graph::new(["1", "2", "3", "4"], [("1", "2"), ("3", "4")]).unwrap();
        assert_eq!(g.join_decomposition(), vec![g.clone()]);
    }

    #[test]
    fn neighborhood_examples() {
        let p = Graph::path(["a", "b", "c"]);
        let s = p.neighborhood_subgraph("b").unwrap();
        assert_eq!(s, Graph::edgeless(["a", "c"]));
        assert!(Graph::edgeless(["a", "b"])
            .neighborhood_subgraph("a")
            .unwrap()
            .is_empty());
        assert_eq!(
            Graph::complete(["a", "b", "c"]).neighborhood_subgraph("a").unwrap(),
            Graph::complete(["b", "c"])
        );
        assert!(p.neighborhood_subgraph("x").is_err());
    }

    #[test]
    fn join_of_edgeless_pairs() {
        let g = Graph::edgeless(["a", "b"])
            .join(&Graph::edgeless(["c", "d"]))
            .unwrap();
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.join_factor_sets().len(), 2);
    }

    #[test]
    fn subset_iteration_covers_powerset() {
        let s: VertexSet = [1, 3, 4].into_iter().collect();
        let subs: Vec<VertexSet> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert_eq!(subs[0], VertexSet::EMPTY);
        assert!(subs.iter().all(|t| t.is_subset(s)));
    }

    #[test]
    fn assignment_reorders_and_reports_missing() {
        let g = Graph::path(["a", "b", "c"]);
        assert_eq!(
            g.assignment([("c", 3), ("a", 1), ("b", 2)]).unwrap(),
            vec![1, 2, 3]
        );
        assert_eq!(
            g.assignment([("c", 3), ("a", 1)]),
            Err(Error::MissingAssignment("b".into()))
        );
    }
}
