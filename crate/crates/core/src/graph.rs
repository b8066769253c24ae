//! Signed multigraph model: vertices `0..n`, edges identified by dense ids in
//! insertion order, each carrying a sign. Loops and parallel edges are allowed.

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type VertexId = usize;
pub type EdgeId = usize;

/// Edge sign. Balance and circuit signs are parities of `Minus` edges.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn is_negative(self) -> bool {
        self == Sign::Minus
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub sign: Sign,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    /// The endpoint that is not `w`; for a loop returns `w` itself.
    pub fn other(&self, w: VertexId) -> VertexId {
        if w == self.u {
            self.v
        } else {
            self.u
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("endpoint {endpoint} out of range for {vertices} vertices")]
    EndpointOutOfRange { endpoint: VertexId, vertices: usize },
    #[error("edge id {0} out of range")]
    EdgeOutOfRange(EdgeId),
    #[error("vertex id {0} out of range")]
    VertexOutOfRange(VertexId),
    #[error("edge set size {set} does not match edge count {edges}")]
    SetSizeMismatch { set: usize, edges: usize },
    #[error("vertex {0} has odd degree in the edge set")]
    OddDegree(VertexId),
}

/// Undirected signed multigraph. Immutable after construction apart from
/// `add_edge`; all derived views (adjacency, subgraphs) are built on demand.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignedGraph {
    n: usize,
    edges: Vec<Edge>,
}

impl SignedGraph {
    pub fn new(n: usize) -> Self {
        SignedGraph { n, edges: Vec::new() }
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId, sign: Sign) -> Result<EdgeId, GraphError> {
        for &w in &[u, v] {
            if w >= self.n {
                return Err(GraphError::EndpointOutOfRange { endpoint: w, vertices: self.n });
            }
        }
        self.edges.push(Edge { u, v, sign });
        Ok(self.edges.len() - 1)
    }

    /// Builds a graph from an edge list in one call; ids follow list order.
    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (VertexId, VertexId, Sign)>,
    ) -> Result<Self, GraphError> {
        let mut g = SignedGraph::new(n);
        for (u, v, s) in edges {
            g.add_edge(u, v, s)?;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn sign(&self, e: EdgeId) -> Sign {
        self.edges[e].sign
    }

    pub fn is_loop(&self, e: EdgeId) -> bool {
        self.edges[e].is_loop()
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        (self.edges[e].u, self.edges[e].v)
    }

    /// Adjacency lists as `(neighbor, edge id)`, edge ids ascending. A loop
    /// appears once in its vertex's list.
    pub fn adjacency(&self) -> Vec<Vec<(VertexId, EdgeId)>> {
        let mut adj = vec![Vec::new(); self.n];
        for (e, edge) in self.edges.iter().enumerate() {
            if edge.is_loop() {
                adj[edge.u].push((edge.u, e));
            } else {
                adj[edge.u].push((edge.v, e));
                adj[edge.v].push((edge.u, e));
            }
        }
        adj
    }

    /// Degree with loops counting twice.
    pub fn degree(&self, v: VertexId) -> usize {
        self.edges
            .iter()
            .map(|e| {
                if e.is_loop() {
                    if e.u == v { 2 } else { 0 }
                } else {
                    (e.u == v) as usize + (e.v == v) as usize
                }
            })
            .sum()
    }

    pub fn negative_edges(&self) -> EdgeSet {
        let mut s = EdgeSet::empty(self.edge_count());
        for (e, edge) in self.edges.iter().enumerate() {
            if edge.sign.is_negative() {
                s.insert(e);
            }
        }
        s
    }

    pub fn positive_edges(&self) -> EdgeSet {
        self.negative_edges().complement()
    }

    /// Component label per vertex plus component count. Loops are irrelevant
    /// to connectivity; isolated vertices form their own components.
    pub fn components(&self) -> (Vec<usize>, usize) {
        self.components_within(&EdgeSet::full(self.edge_count()))
    }

    /// Components of the subgraph restricted to `active` edges (all vertices kept).
    pub fn components_within(&self, active: &EdgeSet) -> (Vec<usize>, usize) {
        let mut label = vec![usize::MAX; self.n];
        let adj = self.adjacency();
        let mut next = 0;
        for start in 0..self.n {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = next;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &(w, e) in &adj[v] {
                    if active.contains(e) && label[w] == usize::MAX {
                        label[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        (label, next)
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().1 == 1
    }

    /// Subgraph keeping the full vertex set and the edges of `keep`, re-numbered
    /// densely in ascending host order. Second value maps new ids to host ids.
    pub fn edge_subgraph(&self, keep: &EdgeSet) -> (SignedGraph, Vec<EdgeId>) {
        let mut g = SignedGraph::new(self.n);
        let mut map = Vec::with_capacity(keep.len());
        for e in keep.iter() {
            let edge = &self.edges[e];
            g.edges.push(*edge);
            map.push(e);
        }
        (g, map)
    }
}

/// Subset of a host graph's edges, dense bit representation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EdgeSet {
    bits: Vec<bool>,
    count: usize,
}

impl EdgeSet {
    pub fn empty(m: usize) -> Self {
        EdgeSet { bits: vec![false; m], count: 0 }
    }

    pub fn full(m: usize) -> Self {
        EdgeSet { bits: vec![true; m], count: m }
    }

    pub fn from_ids(m: usize, ids: impl IntoIterator<Item = EdgeId>) -> Self {
        let mut s = EdgeSet::empty(m);
        for e in ids {
            s.insert(e);
        }
        s
    }

    /// Host edge count this set is sized for.
    pub fn capacity(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.bits[e]
    }

    pub fn insert(&mut self, e: EdgeId) -> bool {
        if !self.bits[e] {
            self.bits[e] = true;
            self.count += 1;
            true
        } else {
            false
        }
    }

    pub fn remove(&mut self, e: EdgeId) -> bool {
        if self.bits[e] {
            self.bits[e] = false;
            self.count -= 1;
            true
        } else {
            false
        }
    }

    /// Flips membership of `e`; the parity operation behind symmetric differences.
    pub fn toggle(&mut self, e: EdgeId) {
        if self.bits[e] {
            self.remove(e);
        } else {
            self.insert(e);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.bits.iter().enumerate().filter(|(_, b)| **b).map(|(e, _)| e)
    }

    pub fn union(&self, other: &EdgeSet) -> EdgeSet {
        debug_assert_eq!(self.capacity(), other.capacity());
        let mut out = self.clone();
        for e in other.iter() {
            out.insert(e);
        }
        out
    }

    pub fn intersection(&self, other: &EdgeSet) -> EdgeSet {
        debug_assert_eq!(self.capacity(), other.capacity());
        let mut out = EdgeSet::empty(self.capacity());
        for e in self.iter() {
            if other.contains(e) {
                out.insert(e);
            }
        }
        out
    }

    pub fn difference(&self, other: &EdgeSet) -> EdgeSet {
        let mut out = self.clone();
        for e in other.iter() {
            out.remove(e);
        }
        out
    }

    pub fn symmetric_difference(&self, other: &EdgeSet) -> EdgeSet {
        debug_assert_eq!(self.capacity(), other.capacity());
        let mut out = self.clone();
        for e in other.iter() {
            out.toggle(e);
        }
        out
    }

    pub fn complement(&self) -> EdgeSet {
        EdgeSet {
            bits: self.bits.iter().map(|b| !b).collect(),
            count: self.capacity() - self.count,
        }
    }

    pub fn is_subset_of(&self, other: &EdgeSet) -> bool {
        self.iter().all(|e| other.contains(e))
    }

    pub fn to_vec(&self) -> Vec<EdgeId> {
        self.iter().collect()
    }
}

/// Edge set with even degree at every vertex (loops contribute two, so they
/// never affect parity). Constructed only through validation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EvenSubgraph {
    edges: EdgeSet,
}

impl EvenSubgraph {
    pub fn new(g: &SignedGraph, edges: EdgeSet) -> Result<Self, GraphError> {
        if edges.capacity() != g.edge_count() {
            return Err(GraphError::SetSizeMismatch { set: edges.capacity(), edges: g.edge_count() });
        }
        if let Some(v) = odd_degree_vertices(g, &edges).first() {
            return Err(GraphError::OddDegree(*v));
        }
        Ok(EvenSubgraph { edges })
    }

    pub fn edges(&self) -> &EdgeSet {
        &self.edges
    }

    pub fn into_edges(self) -> EdgeSet {
        self.edges
    }
}

/// Vertices with odd non-loop degree in `edges`, ascending.
pub fn odd_degree_vertices(g: &SignedGraph, edges: &EdgeSet) -> Vec<VertexId> {
    let mut parity = vec![false; g.vertex_count()];
    for e in edges.iter() {
        let edge = g.edge(e);
        if !edge.is_loop() {
            parity[edge.u] = !parity[edge.u];
            parity[edge.v] = !parity[edge.v];
        }
    }
    parity
        .iter()
        .enumerate()
        .filter(|(_, p)| **p)
        .map(|(v, _)| v)
        .collect()
}

/// Vertex subset describing a switching. Switching at `z` flips the sign of
/// every edge with exactly one endpoint in `z`; loops are untouched.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Switching {
    in_set: Vec<bool>,
}

impl Switching {
    pub fn empty(n: usize) -> Self {
        Switching { in_set: vec![false; n] }
    }

    pub fn from_vertices(n: usize, vs: impl IntoIterator<Item = VertexId>) -> Result<Self, GraphError> {
        let mut z = Switching::empty(n);
        for v in vs {
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v));
            }
            z.in_set[v] = true;
        }
        Ok(z)
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.in_set[v]
    }

    pub fn vertices(&self) -> Vec<VertexId> {
        self.in_set
            .iter()
            .enumerate()
            .filter(|(_, b)| **b)
            .map(|(v, _)| v)
            .collect()
    }

    pub fn crosses(&self, edge: &Edge) -> bool {
        !edge.is_loop() && self.in_set[edge.u] != self.in_set[edge.v]
    }
}

/// The switched graph: same vertices, same edge ids, signs flipped on the cut.
pub fn apply_switching(g: &SignedGraph, z: &Switching) -> SignedGraph {
    let edges = g
        .edges()
        .iter()
        .map(|e| Edge {
            sign: if z.crosses(e) { e.sign.flipped() } else { e.sign },
            ..*e
        })
        .collect();
    SignedGraph { n: g.vertex_count(), edges }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn digon() -> SignedGraph {
        SignedGraph::from_edges(2, [(0, 1, Sign::Plus), (0, 1, Sign::Minus)]).unwrap()
    }

    #[test]
    fn add_edge_rejects_bad_endpoint() {
        let mut g = SignedGraph::new(2);
        assert_eq!(
            g.add_edge(0, 2, Sign::Plus),
            Err(GraphError::EndpointOutOfRange { endpoint: 2, vertices: 2 })
        );
    }

    #[test]
    fn degree_counts_loops_twice() {
        let g = SignedGraph::from_edges(2, [(0, 0, Sign::Minus), (0, 1, Sign::Plus)]).unwrap();
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.degree(1), 1);
    }

    #[test]
    fn switching_flips_cut_only() {
        let g = SignedGraph::from_edges(3, [(0, 1, Sign::Plus), (1, 2, Sign::Plus), (1, 1, Sign::Minus)])
            .unwrap();
        let z = Switching::from_vertices(3, [1]).unwrap();
        let h = apply_switching(&g, &z);
        assert_eq!(h.sign(0), Sign::Minus);
        assert_eq!(h.sign(1), Sign::Minus);
        // loops never switch
        assert_eq!(h.sign(2), Sign::Minus);
        // involution
        assert_eq!(apply_switching(&h, &z), g);
    }

    #[test]
    fn even_subgraph_validation() {
        let g = digon();
        let both = EdgeSet::full(2);
        assert!(EvenSubgraph::new(&g, both).is_ok());
        let one = EdgeSet::from_ids(2, [0]);
        assert_eq!(EvenSubgraph::new(&g, one), Err(GraphError::OddDegree(0)));
    }

    #[test]
    fn edge_set_ops() {
        let a = EdgeSet::from_ids(5, [0, 2, 4]);
        let b = EdgeSet::from_ids(5, [2, 3]);
        assert_eq!(a.symmetric_difference(&b).to_vec(), vec![0, 3, 4]);
        assert_eq!(a.intersection(&b).to_vec(), vec![2]);
        assert_eq!(a.union(&b).len(), 4);
        assert_eq!(a.complement().to_vec(), vec![1, 3]);
    }

    #[test]
    fn components_ignore_loops() {
        let g = SignedGraph::from_edges(3, [(0, 0, Sign::Plus), (1, 2, Sign::Minus)]).unwrap();
        let (label, count) = g.components();
        assert_eq!(count, 2);
        assert_eq!(label[1], label[2]);
        assert_ne!(label[0], label[1]);
    }
}
