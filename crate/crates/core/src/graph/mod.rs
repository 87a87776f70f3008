//! Finite simple graphs on vertices `1..=n` and the cut-set combinatorics
//! built on top of them.
//!
//! Edges are stored as pairs `(i, j)` with `i < j`, sorted lexicographically.
//! That order fixes the coordinate index of every edge in cut vectors, the
//! exponent matrix and cut polytopes.

mod catalog;
mod iso;
mod minor;

pub use catalog::{parse_graph, Catalog, CatalogEntry};
pub use iso::{canonical_form, is_isomorphic, CanonicalForm, MAX_ISO_VERTICES};
pub use minor::{
    combinatorial_retracts, has_minor, is_crf, is_k4_minor_free, MAX_MINOR_VERTICES,
};

use crate::error::{Error, Result};
use std::fmt;

pub const MAX_VERTICES: usize = 32;

/// An edge `{i, j}` with `i < j`, vertices 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(pub usize, pub usize);

impl Edge {
    pub fn new(a: usize, b: usize) -> Edge {
        if a < b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0 == v || self.1 == v
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    /// `adj[v - 1]` has bit `w - 1` set iff `{v, w}` is an edge.
    adj: Vec<u32>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(MAX_VERTICES));
        }
        let mut adj = vec![0u32; n];
        let mut list = Vec::new();
        for (a, b) in edges {
            for v in [a, b] {
                if v == 0 || v > n {
                    return Err(Error::InvalidVertex { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::Loop(a));
            }
            let e = Edge::new(a, b);
            if adj[e.0 - 1] & bit(e.1) != 0 {
                return Err(Error::DuplicateEdge(e.0, e.1));
            }
            adj[e.0 - 1] |= bit(e.1);
            adj[e.1 - 1] |= bit(e.0);
            list.push(e);
        }
        list.sort();
        Ok(Graph { n, edges: list, adj })
    }

    /// Builds a graph, collapsing repeated edges and dropping loops.
    pub(crate) fn simple_from(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
        let mut adj = vec![0u32; n];
        for (a, b) in edges {
            if a != b {
                adj[a - 1] |= bit(b);
                adj[b - 1] |= bit(a);
            }
        }
        Graph::from_adjacency(adj)
    }

    pub(crate) fn from_adjacency(adj: Vec<u32>) -> Graph {
        let n = adj.len();
        let mut edges = Vec::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                if adj[i - 1] & bit(j) != 0 {
                    edges.push(Edge(i, j));
                }
            }
        }
        Graph { n, edges, adj }
    }

    pub fn empty(n: usize) -> Result<Graph> {
        Graph::new(n, std::iter::empty())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        1..=self.n
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a != b && a >= 1 && a <= self.n && b >= 1 && b <= self.n && self.adj[a - 1] & bit(b) != 0
    }

    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    /// Neighbourhood of `v` as a bitmask (bit `w - 1` for neighbour `w`).
    pub fn neighbor_mask(&self, v: usize) -> u32 {
        self.adj[v - 1]
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        mask_to_vertices(self.adj[v - 1])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].count_ones() as usize
    }

    pub fn full_mask(&self) -> u32 {
        full_mask(self.n)
    }

    /// Union of the neighbourhoods of the vertices in `set`.
    pub fn neighborhood_of_set(&self, set: u32) -> u32 {
        mask_to_vertices(set)
            .into_iter()
            .fold(0, |acc, v| acc | self.adj[v - 1])
    }

    pub fn components(&self) -> Vec<u32> {
        let mut seen = 0u32;
        let mut comps = Vec::new();
        for v in 1..=self.n {
            if seen & bit(v) != 0 {
                continue;
            }
            let mut comp = bit(v);
            let mut frontier = bit(v);
            while frontier != 0 {
                let next = self.neighborhood_of_set(frontier) & !comp;
                comp |= next;
                frontier = next;
            }
            seen |= comp;
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        self.vertices().filter(|&v| self.adj[v - 1] == 0).collect()
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            Err(Error::InvalidVertex { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    fn check_edge(&self, e: Edge) -> Result<()> {
        if self.has_edge(e.0, e.1) {
            Ok(())
        } else {
            Err(Error::NotAnEdge(e.0, e.1))
        }
    }

    pub fn cut_set(&self, p: &Partition) -> Result<CutSet> {
        if p.graph_n() != self.n {
            return Err(Error::VertexCountMismatch {
                partition: p.graph_n(),
                graph: self.n,
            });
        }
        let a = p.mask();
        let members = self
            .edges
            .iter()
            .enumerate()
            .filter(|(_, e)| ((a >> (e.0 - 1)) ^ (a >> (e.1 - 1))) & 1 == 1)
            .map(|(i, _)| i)
            .collect();
        Ok(CutSet { edges: members })
    }

    pub fn cut_vector(&self, p: &Partition) -> Result<CutVector> {
        let cs = self.cut_set(p)?;
        let mut coords = vec![0u8; self.edges.len()];
        for &i in &cs.edges {
            coords[i] = 1;
        }
        Ok(CutVector { coords })
    }

    /// All `2^(n-1)` canonical partitions in ascending bitmask order.
    pub fn partitions(&self) -> Vec<Partition> {
        enumerate_partitions(self.n)
    }

    pub fn delete_edge(&self, e: Edge) -> Result<Graph> {
        self.check_edge(e)?;
        let mut adj = self.adj.clone();
        adj[e.0 - 1] &= !bit(e.1);
        adj[e.1 - 1] &= !bit(e.0);
        Ok(Graph::from_adjacency(adj))
    }

    /// Induced subgraph on `w`, relabelled to `1..=|w|` in increasing order.
    pub fn induced_subgraph(&self, w: &[usize]) -> Result<Graph> {
        let mask = self.vertex_set_mask(w)?;
        if mask == 0 {
            return Err(Error::InvalidVertexSet("empty".into()));
        }
        Ok(self.induced_on_mask(mask))
    }

    pub(crate) fn induced_on_mask(&self, mask: u32) -> Graph {
        let keep = mask_to_vertices(mask);
        let mut new_label = vec![0usize; self.n + 1];
        for (i, &v) in keep.iter().enumerate() {
            new_label[v] = i + 1;
        }
        let adj = keep
            .iter()
            .map(|&v| {
                mask_to_vertices(self.adj[v - 1] & mask)
                    .into_iter()
                    .fold(0u32, |acc, w| acc | bit(new_label[w]))
            })
            .collect();
        Graph::from_adjacency(adj)
    }

    pub(crate) fn vertex_set_mask(&self, w: &[usize]) -> Result<u32> {
        let mut mask = 0u32;
        for &v in w {
            self.check_vertex(v)?;
            if mask & bit(v) != 0 {
                return Err(Error::InvalidVertexSet(format!("vertex {v} repeated")));
            }
            mask |= bit(v);
        }
        Ok(mask)
    }

    /// Vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        let edges = self
            .edges
            .iter()
            .map(|e| (e.0, e.1))
            .chain(other.edges.iter().map(|e| (e.0 + self.n, e.1 + self.n)));
        Graph::new(n, edges)
    }

    /// Merges `u` and `v` into one vertex, collapsing parallel edges.
    ///
    /// The merged vertex takes the smaller of the two labels; the labels above
    /// the larger one shift down by one. The returned map sends each old vertex
    /// to its new label (index 0 unused).
    pub fn identify_vertices(&self, u: usize, v: usize) -> Result<(Graph, Vec<usize>)> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SameVertex);
        }
        let (keep, drop) = (u.min(v), u.max(v));
        let relabel: Vec<usize> = (0..=self.n)
            .map(|x| match x {
                0 => 0,
                x if x == drop => keep,
                x if x > drop => x - 1,
                x => x,
            })
            .collect();
        let g = Graph::simple_from(
            self.n - 1,
            self.edges.iter().map(|e| (relabel[e.0], relabel[e.1])),
        );
        Ok((g, relabel))
    }

    pub fn contract_edge(&self, e: Edge) -> Result<(Graph, Vec<usize>)> {
        self.check_edge(e)?;
        self.identify_vertices(e.0, e.1)
    }

    /// Adds a vertex `n + 1` with the same neighbourhood as `v`.
    pub fn duplicate_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let new = self.n + 1;
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|e| (e.0, e.1))
            .chain(self.neighbors(v).into_iter().map(|w| (w, new)))
            .collect();
        Graph::new(new, edges)
    }

    /// Glues `self` and `other` along the vertices `emb_self[k] ~ emb_other[k]`.
    ///
    /// Vertices of `self` keep their labels; the unshared vertices of `other`
    /// follow in increasing order.
    pub fn clique_sum(&self, other: &Graph, emb_self: &[usize], emb_other: &[usize]) -> Result<Graph> {
        if emb_self.len() != emb_other.len() || emb_self.is_empty() {
            return Err(Error::EmbeddingMismatch);
        }
        self.vertex_set_mask(emb_self)?;
        other.vertex_set_mask(emb_other)?;
        for a in 0..emb_self.len() {
            for b in (a + 1)..emb_self.len() {
                if self.has_edge(emb_self[a], emb_self[b]) != other.has_edge(emb_other[a], emb_other[b]) {
                    return Err(Error::EmbeddingMismatch);
                }
            }
        }
        let mut map = vec![0usize; other.n + 1];
        for (k, &w) in emb_other.iter().enumerate() {
            map[w] = emb_self[k];
        }
        let mut next = self.n;
        for w in 1..=other.n {
            if map[w] == 0 {
                next += 1;
                map[w] = next;
            }
        }
        let edges = self
            .edges
            .iter()
            .map(|e| (e.0, e.1))
            .chain(other.edges.iter().map(|e| (map[e.0], map[e.1])));
        Ok(Graph::simple_from(next, edges))
    }

    /// Returns a witness `v ∈ W` with `W ∩ N_G(W') ⊆ N_{G_W}[v]`, if any.
    pub fn neighborhood_minor_witness(&self, w: &[usize]) -> Result<Option<usize>> {
        let mask = self.vertex_set_mask(w)?;
        if mask == 0 || mask == self.full_mask() {
            return Err(Error::InvalidVertexSet(
                "W must be a nonempty proper subset".into(),
            ));
        }
        Ok(self.nm_witness_mask(mask))
    }

    pub(crate) fn nm_witness_mask(&self, mask: u32) -> Option<usize> {
        let rest = self.full_mask() & !mask;
        let boundary = mask & self.neighborhood_of_set(rest);
        mask_to_vertices(mask).into_iter().find(|&v| {
            let closed = (self.adj[v - 1] & mask) | bit(v);
            boundary & !closed == 0
        })
    }

    /// Short `n=..; a-b, ...` form accepted by [`parse_graph`].
    pub fn to_dsl(&self) -> String {
        let es: Vec<String> = self.edges.iter().map(|e| e.to_string()).collect();
        if es.is_empty() {
            return format!("n={};", self.n);
        }
        format!("n={}; {}", self.n, es.join(","))
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_dsl())
    }
}

#[inline]
pub(crate) fn bit(v: usize) -> u32 {
    1u32 << (v - 1)
}

pub(crate) fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

pub(crate) fn mask_to_vertices(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()
}

/// The unordered bipartition `A | A^c`, stored by the side avoiding vertex 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    n: usize,
    a: u32,
}

impl Partition {
    /// Canonicalises any subset of `1..=n` by passing to the complement when
    /// it contains vertex 1.
    pub fn from_subset(n: usize, vertices: &[usize]) -> Result<Partition> {
        let mut mask = 0u32;
        for &v in vertices {
            if v == 0 || v > n {
                return Err(Error::InvalidVertex { vertex: v, n });
            }
            mask |= bit(v);
        }
        Ok(Partition::from_mask(n, mask))
    }

    pub fn from_mask(n: usize, mask: u32) -> Partition {
        let full = full_mask(n);
        let mask = mask & full;
        let a = if mask & 1 == 1 { full & !mask } else { mask };
        Partition { n, a }
    }

    pub fn graph_n(&self) -> usize {
        self.n
    }

    pub fn mask(&self) -> u32 {
        self.a
    }

    pub fn vertices(&self) -> Vec<usize> {
        mask_to_vertices(self.a)
    }

    /// Digit-string label: `0` for the empty side, else the vertices of `A`.
    ///
    /// Vertex labels above 9 are wrapped in braces so the label stays
    /// unambiguous.
    pub fn label(&self) -> String {
        if self.a == 0 {
            return "0".into();
        }
        self.vertices()
            .iter()
            .map(|v| if *v < 10 { v.to_string() } else { format!("{{{v}}}") })
            .collect()
    }

    pub fn parse_label(n: usize, s: &str) -> Result<Partition> {
        if s == "0" {
            return Ok(Partition::from_mask(n, 0));
        }
        let mut vs = Vec::new();
        let mut chars = s.chars();
        while let Some(c) = chars.next() {
            if c == '{' {
                let num: String = chars.by_ref().take_while(|&c| c != '}').collect();
                vs.push(num.parse().map_err(|_| Error::Parse(format!("bad label {s}")))?);
            } else {
                vs.push(
                    c.to_digit(10)
                        .filter(|&d| d > 0)
                        .ok_or_else(|| Error::Parse(format!("bad label {s}")))? as usize,
                );
            }
        }
        Partition::from_subset(n, &vs)
    }
}

pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    (0..(1u32 << (n - 1)))
        .map(|k| Partition { n, a: k << 1 })
        .collect()
}

/// Edge indices (into the host graph's edge list) of a cut set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CutSet {
    pub edges: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CutVector {
    pub coords: Vec<u8>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::new(4, [(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap()
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert_eq!(Graph::new(0, []), Err(Error::EmptyGraph));
        assert_eq!(Graph::new(3, [(1, 1)]), Err(Error::Loop(1)));
        assert_eq!(Graph::new(3, [(1, 2), (2, 1)]), Err(Error::DuplicateEdge(1, 2)));
        assert!(matches!(Graph::new(3, [(1, 4)]), Err(Error::InvalidVertex { .. })));
    }

    #[test]
    fn cut_set_examples() {
        let g = c4();
        let p = Partition::from_subset(4, &[2, 3, 4]).unwrap();
        assert_eq!(p.vertices(), vec![2, 3, 4]);
        let cs = g.cut_set(&p).unwrap();
        let es: Vec<Edge> = cs.edges.iter().map(|&i| g.edges()[i]).collect();
        assert_eq!(es, vec![Edge(1, 2), Edge(1, 4)]);
        assert!(g.cut_set(&Partition::from_mask(4, 0)).unwrap().edges.is_empty());

        let p3 = Graph::new(3, [(1, 2), (2, 3)]).unwrap();
        let cs = p3.cut_set(&Partition::from_subset(3, &[2]).unwrap()).unwrap();
        assert_eq!(cs.edges, vec![0, 1]);
        assert!(matches!(
            p3.cut_set(&Partition::from_mask(4, 2)),
            Err(Error::VertexCountMismatch { .. })
        ));
    }

    #[test]
    fn complement_gives_same_partition() {
        let a = Partition::from_subset(4, &[1, 3]).unwrap();
        let b = Partition::from_subset(4, &[2, 4]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.label(), "24");
        assert_eq!(Partition::parse_label(4, "13").unwrap(), a);
    }

    #[test]
    fn partition_enumeration() {
        assert_eq!(enumerate_partitions(1).len(), 1);
        let three: Vec<Vec<usize>> = enumerate_partitions(3).iter().map(|p| p.vertices()).collect();
        assert_eq!(three, vec![vec![], vec![2], vec![3], vec![2, 3]]);
        assert_eq!(enumerate_partitions(5).len(), 16);
    }

    #[test]
    fn contraction_and_identification() {
        let p3 = Graph::new(3, [(1, 2), (2, 3)]).unwrap();
        let (k2, map) = p3.contract_edge(Edge(1, 2)).unwrap();
        assert_eq!(k2, Graph::new(2, [(1, 2)]).unwrap());
        assert_eq!(map, vec![0, 1, 1, 2]);
        let (k2b, _) = p3.identify_vertices(1, 3).unwrap();
        assert_eq!(k2b, Graph::new(2, [(1, 2)]).unwrap());
        assert_eq!(p3.identify_vertices(2, 2), Err(Error::SameVertex));
        assert_eq!(p3.contract_edge(Edge(1, 3)).unwrap_err(), Error::NotAnEdge(1, 3));
        // adjacent identification coincides with contraction
        let g = c4();
        assert_eq!(g.identify_vertices(2, 3).unwrap(), g.contract_edge(Edge(2, 3)).unwrap());
    }

    #[test]
    fn deletion_union_induced() {
        let g = c4();
        let p4 = g.delete_edge(Edge(1, 4)).unwrap();
        assert_eq!(p4.edges(), &[Edge(1, 2), Edge(2, 3), Edge(3, 4)]);
        let k4 = Graph::new(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap();
        let k3 = k4.induced_subgraph(&[1, 2, 3]).unwrap();
        assert_eq!(k3.num_edges(), 3);
        let u = Graph::new(2, [(1, 2)]).unwrap().disjoint_union(&Graph::empty(1).unwrap()).unwrap();
        assert_eq!((u.n(), u.num_edges()), (3, 1));
        assert!(!u.is_connected());
        assert!(g.induced_subgraph(&[]).is_err());
    }

    #[test]
    fn duplicate_vertex_basic() {
        let k2 = Graph::new(2, [(1, 2)]).unwrap();
        let d = k2.duplicate_vertex(1).unwrap();
        assert_eq!(d.edges(), &[Edge(1, 2), Edge(2, 3)]);
        assert_eq!(d.neighbors(3), d.neighbors(1));
    }

    #[test]
    fn clique_sum_checks_embedding() {
        let k2 = Graph::new(2, [(1, 2)]).unwrap();
        let p3 = Graph::new(3, [(1, 2), (2, 3)]).unwrap();
        assert_eq!(p3.clique_sum(&k2, &[1, 3], &[1, 2]), Err(Error::EmbeddingMismatch));
        let s = p3.clique_sum(&k2, &[2], &[1]).unwrap();
        assert_eq!(s.edges(), &[Edge(1, 2), Edge(2, 3), Edge(2, 4)]);
    }

    #[test]
    fn neighborhood_minor_of_c4() {
        let g = c4();
        assert_eq!(g.neighborhood_minor_witness(&[1, 2, 3]).unwrap(), Some(2));
        assert!(g.neighborhood_minor_witness(&[1, 2, 3, 4]).is_err());
        // two opposite vertices: boundary {1,3}, no vertex of W dominates both
        assert_eq!(g.neighborhood_minor_witness(&[1, 3]).unwrap(), None);
    }

    #[test]
    fn connected_cut_sets_are_distinct() {
        // connected graphs: canonical partitions give distinct cut sets
        for g in [c4(), Graph::new(4, [(1, 2), (2, 3), (3, 4)]).unwrap()] {
            let mut seen = std::collections::HashSet::new();
            for p in g.partitions() {
                assert!(seen.insert(g.cut_set(&p).unwrap()));
            }
        }
    }
}
