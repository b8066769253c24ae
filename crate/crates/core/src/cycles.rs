//! Cycles, paths, and barbells, plus the cycle machinery the cover
//! construction rests on: even-subgraph decomposition, an exchange step that
//! maximizes positive cycles, exhaustive cycle enumeration, and shortest
//! negative cycles through a signed double cover.

use crate::graph::{EdgeId, EdgeSet, Sign, SignedGraph, VertexId};
use std::collections::VecDeque;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CircuitError {
    #[error("a cycle needs at least one edge")]
    EmptyCycle,
    #[error("edge {0} appears more than once")]
    RepeatedEdge(EdgeId),
    #[error("loop {0} cannot be part of a longer cycle")]
    LoopInCycle(EdgeId),
    #[error("vertex {0} has degree {1} in the edge list, cycles need exactly 2")]
    CycleDegree(VertexId, usize),
    #[error("edge list does not form a single connected piece")]
    DisconnectedEdges,
    #[error("a path needs at least one edge")]
    EmptyPath,
    #[error("a path cannot contain loop {0}")]
    LoopInPath(EdgeId),
    #[error("edge list has {0} vertices of odd degree, paths need exactly 2 endpoints")]
    PathEndpoints(usize),
    #[error("vertex {0} has degree {1} in the edge list, path vertices have at most 2")]
    PathDegree(VertexId, usize),
    #[error("barbell cycles must both be negative")]
    PositiveCycleInBarbell,
    #[error("cycles of a short barbell must share exactly one vertex, these share {0}")]
    ShortBarbellOverlap(usize),
    #[error("cycles of a long barbell must be vertex-disjoint, these share {0}")]
    LongBarbellOverlap(usize),
    #[error("connecting path must run from one cycle to the other")]
    PathDetached,
    #[error("connecting path touches a cycle at interior vertex {0}")]
    PathTouchesCycle(VertexId),
    #[error("connecting path reuses edge {0} of a cycle")]
    PathReusesCycleEdge(EdgeId),
    #[error("vertex {0} has odd degree, the edge set is not even")]
    OddVertexInEvenSet(VertexId),
    #[error("cycle enumeration exceeded the ceiling of {0} cycles")]
    EnumerationCeiling(usize),
}

/// A simple cycle stored in canonical traversal order: the walk starts at the
/// smallest vertex and first follows the smaller of its two incident cycle
/// edges. Loops are one-edge cycles, digons two-edge ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cycle {
    edges: Vec<EdgeId>,
    verts: Vec<VertexId>,
}

impl Cycle {
    pub fn new(g: &SignedGraph, edges: Vec<EdgeId>) -> Result<Self, CircuitError> {
        if edges.is_empty() {
            return Err(CircuitError::EmptyCycle);
        }
        let mut sorted = edges.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(CircuitError::RepeatedEdge(w[0]));
        }
        if edges.len() == 1 {
            let e = edges[0];
            let (u, v) = g.endpoints(e);
            if u != v {
                return Err(CircuitError::CycleDegree(u, 1));
            }
            return Ok(Cycle { edges, verts: vec![u] });
        }
        let mut incident: std::collections::HashMap<VertexId, Vec<EdgeId>> = Default::default();
        for &e in &edges {
            let (u, v) = g.endpoints(e);
            if u == v {
                return Err(CircuitError::LoopInCycle(e));
            }
            incident.entry(u).or_default().push(e);
            incident.entry(v).or_default().push(e);
        }
        for (&v, inc) in &incident {
            if inc.len() != 2 {
                return Err(CircuitError::CycleDegree(v, inc.len()));
            }
        }
        // canonical walk; finishing with every edge used proves connectivity
        let start = *incident.keys().min().expect("nonempty");
        let mut inc_sorted: std::collections::HashMap<VertexId, Vec<EdgeId>> = incident;
        for inc in inc_sorted.values_mut() {
            inc.sort_unstable();
        }
        let mut walk_edges = Vec::with_capacity(edges.len());
        let mut walk_verts = vec![start];
        let mut used = std::collections::HashSet::new();
        let mut at = start;
        loop {
            let Some(&e) = inc_sorted[&at].iter().find(|e| !used.contains(*e)) else {
                break;
            };
            used.insert(e);
            walk_edges.push(e);
            at = g.edge(e).other(at);
            if at == start {
                break;
            }
            walk_verts.push(at);
        }
        if walk_edges.len() != edges.len() || at != start {
            return Err(CircuitError::DisconnectedEdges);
        }
        Ok(Cycle { edges: walk_edges, verts: walk_verts })
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    /// Vertices in traversal order; edge `i` joins vertex `i` to vertex
    /// `(i + 1) mod len`.
    pub fn vertex_sequence(&self) -> &[VertexId] {
        &self.verts
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn sign(&self, g: &SignedGraph) -> Sign {
        let negs = self.edges.iter().filter(|&&e| g.sign(e).is_negative()).count();
        if negs % 2 == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn is_negative(&self, g: &SignedGraph) -> bool {
        self.sign(g).is_negative()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.verts.contains(&v)
    }

    pub fn edge_set(&self, m: usize) -> EdgeSet {
        EdgeSet::from_ids(m, self.edges.iter().copied())
    }

    /// Splits the cycle at two of its vertices into the two connecting arcs,
    /// each a nonempty edge list. The first arc runs from `a` to `b` in
    /// traversal order.
    pub fn arcs_between(&self, a: VertexId, b: VertexId) -> (Vec<EdgeId>, Vec<EdgeId>) {
        let pa = self.verts.iter().position(|&v| v == a).expect("a on cycle");
        let pb = self.verts.iter().position(|&v| v == b).expect("b on cycle");
        assert_ne!(pa, pb, "arc split needs distinct vertices");
        let k = self.edges.len();
        let slice = |from: usize, to: usize| -> Vec<EdgeId> {
            let mut out = Vec::new();
            let mut i = from;
            while i != to {
                out.push(self.edges[i]);
                i = (i + 1) % k;
            }
            out
        };
        (slice(pa, pb), slice(pb, pa))
    }
}

/// A simple path stored from its smaller endpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphPath {
    edges: Vec<EdgeId>,
    verts: Vec<VertexId>,
}

impl GraphPath {
    pub fn new(g: &SignedGraph, edges: Vec<EdgeId>) -> Result<Self, CircuitError> {
        if edges.is_empty() {
            return Err(CircuitError::EmptyPath);
        }
        let mut sorted = edges.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(CircuitError::RepeatedEdge(w[0]));
        }
        let mut incident: std::collections::HashMap<VertexId, Vec<EdgeId>> = Default::default();
        for &e in &edges {
            let (u, v) = g.endpoints(e);
            if u == v {
                return Err(CircuitError::LoopInPath(e));
            }
            incident.entry(u).or_default().push(e);
            incident.entry(v).or_default().push(e);
        }
        let mut ends: Vec<VertexId> = Vec::new();
        for (&v, inc) in &incident {
            match inc.len() {
                1 => ends.push(v),
                2 => {}
                d => return Err(CircuitError::PathDegree(v, d)),
            }
        }
        if ends.len() != 2 {
            return Err(CircuitError::PathEndpoints(ends.len()));
        }
        ends.sort_unstable();
        let start = ends[0];
        let mut walk_edges = Vec::with_capacity(edges.len());
        let mut walk_verts = vec![start];
        let mut used = std::collections::HashSet::new();
        let mut at = start;
        while let Some(&e) = incident[&at].iter().find(|e| !used.contains(*e)) {
            used.insert(e);
            walk_edges.push(e);
            at = g.edge(e).other(at);
            walk_verts.push(at);
        }
        if walk_edges.len() != edges.len() {
            return Err(CircuitError::DisconnectedEdges);
        }
        Ok(GraphPath { edges: walk_edges, verts: walk_verts })
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn vertex_sequence(&self) -> &[VertexId] {
        &self.verts
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn from_vertex(&self) -> VertexId {
        self.verts[0]
    }

    pub fn to_vertex(&self) -> VertexId {
        *self.verts.last().expect("paths are nonempty")
    }

    pub fn interior(&self) -> &[VertexId] {
        &self.verts[1..self.verts.len() - 1]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BarbellKind {
    Short,
    Long,
}

/// Two negative cycles joined at a single shared vertex (short) or by a
/// nonempty path between vertex-disjoint cycles whose interior avoids both
/// (long). Together with positive cycles these are the signed circuits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Barbell {
    c1: Cycle,
    c2: Cycle,
    path: Option<GraphPath>,
}

impl Barbell {
    pub fn new(
        g: &SignedGraph,
        c1: Cycle,
        c2: Cycle,
        path: Option<GraphPath>,
    ) -> Result<Self, CircuitError> {
        if !c1.is_negative(g) || !c2.is_negative(g) {
            return Err(CircuitError::PositiveCycleInBarbell);
        }
        let shared: Vec<VertexId> = c1
            .vertex_sequence()
            .iter()
            .filter(|v| c2.contains_vertex(**v))
            .copied()
            .collect();
        match &path {
            None => {
                if shared.len() != 1 {
                    return Err(CircuitError::ShortBarbellOverlap(shared.len()));
                }
                for e in c1.edges() {
                    if c2.edges().contains(e) {
                        return Err(CircuitError::RepeatedEdge(*e));
                    }
                }
            }
            Some(p) => {
                if !shared.is_empty() {
                    return Err(CircuitError::LongBarbellOverlap(shared.len()));
                }
                let (a, b) = (p.from_vertex(), p.to_vertex());
                let ends_ok = (c1.contains_vertex(a) && c2.contains_vertex(b))
                    || (c2.contains_vertex(a) && c1.contains_vertex(b));
                if !ends_ok {
                    return Err(CircuitError::PathDetached);
                }
                for &v in p.interior() {
                    if c1.contains_vertex(v) || c2.contains_vertex(v) {
                        return Err(CircuitError::PathTouchesCycle(v));
                    }
                }
                for e in p.edges() {
                    if c1.edges().contains(e) || c2.edges().contains(e) {
                        return Err(CircuitError::PathReusesCycleEdge(*e));
                    }
                }
            }
        }
        Ok(Barbell { c1, c2, path })
    }

    pub fn kind(&self) -> BarbellKind {
        if self.path.is_some() {
            BarbellKind::Long
        } else {
            BarbellKind::Short
        }
    }

    pub fn cycles(&self) -> (&Cycle, &Cycle) {
        (&self.c1, &self.c2)
    }

    pub fn path(&self) -> Option<&GraphPath> {
        self.path.as_ref()
    }

    /// All edges, each exactly once.
    pub fn edges(&self) -> Vec<EdgeId> {
        let mut out: Vec<EdgeId> = self.c1.edges().to_vec();
        out.extend_from_slice(self.c2.edges());
        if let Some(p) = &self.path {
            out.extend_from_slice(p.edges());
        }
        out
    }

    pub fn len(&self) -> usize {
        self.c1.len() + self.c2.len() + self.path.as_ref().map_or(0, |p| p.len())
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Splits an even edge set into edge-disjoint cycles by deterministic walks:
/// loops peel first by id, then walks start at the smallest live vertex and
/// follow smallest edge ids until a vertex repeats.
pub fn decompose_even(g: &SignedGraph, even: &EdgeSet) -> Result<Vec<Cycle>, CircuitError> {
    if let Some(&v) = crate::tjoin::odd_degree_vertices(g, even).first() {
        return Err(CircuitError::OddVertexInEvenSet(v));
    }
    let mut remaining = even.clone();
    let mut out = Vec::new();
    let adj = g.adjacency();
    'peel: while !remaining.is_empty() {
        let live_loop = remaining.iter().find(|&e| g.is_loop(e));
        if let Some(e) = live_loop {
            remaining.remove(e);
            out.push(Cycle::new(g, vec![e])?);
            continue 'peel;
        }
        let start = (0..g.vertex_count())
            .find(|&v| adj[v].iter().any(|&(_, e)| remaining.contains(e)))
            .expect("nonempty remainder has a live vertex");
        let mut walk_verts = vec![start];
        let mut walk_edges: Vec<EdgeId> = Vec::new();
        let mut at = start;
        loop {
            let &(w, e) = adj[at]
                .iter()
                .filter(|&&(w, e)| w != at && remaining.contains(e) && !walk_edges.contains(&e))
                .min_by_key(|&&(_, e)| e)
                .expect("even degrees keep the walk alive until a repeat");
            walk_edges.push(e);
            if let Some(p) = walk_verts.iter().position(|&x| x == w) {
                let cycle_edges: Vec<EdgeId> = walk_edges[p..].to_vec();
                for &ce in &cycle_edges {
                    remaining.remove(ce);
                }
                out.push(Cycle::new(g, cycle_edges)?);
                continue 'peel;
            }
            walk_verts.push(w);
            at = w;
        }
    }
    Ok(out)
}

fn shared_vertices(c1: &Cycle, c2: &Cycle) -> Vec<VertexId> {
    c1.vertex_sequence().iter().filter(|v| c2.contains_vertex(**v)).copied().collect()
}

/// Rewrites two edge-disjoint negative cycles sharing at least two vertices
/// into a positive cycle plus an even remainder. An arc of the second cycle
/// between consecutive shared vertices splits the first into two arcs; exactly
/// one completion is positive.
fn positive_exchange(g: &SignedGraph, c1: &Cycle, c2: &Cycle) -> (Cycle, EdgeSet) {
    let seq = c2.vertex_sequence();
    let k = seq.len();
    let on_c1: Vec<bool> = seq.iter().map(|&v| c1.contains_vertex(v)).collect();
    let pa = on_c1.iter().position(|&b| b).expect("cycles share vertices");
    let mut pb = (pa + 1) % k;
    while !on_c1[pb] {
        pb = (pb + 1) % k;
    }
    let (a, b) = (seq[pa], seq[pb]);
    debug_assert_ne!(a, b);
    let mut connector = Vec::new();
    let mut i = pa;
    while i != pb {
        connector.push(c2.edges()[i]);
        i = (i + 1) % k;
    }
    let sign_of = |edges: &[EdgeId]| {
        edges.iter().filter(|&&e| g.sign(e).is_negative()).count() % 2 == 1
    };
    let (arc1, arc2) = c1.arcs_between(a, b);
    let pick = if sign_of(&arc1) == sign_of(&connector) { arc1 } else { arc2 };
    let mut z_edges = pick;
    z_edges.extend_from_slice(&connector);
    let z = Cycle::new(g, z_edges).expect("arc completion is a simple cycle");
    let mut remainder = c1.edge_set(g.edge_count());
    for &e in c2.edges() {
        remainder.insert(e);
    }
    for &e in z.edges() {
        remainder.remove(e);
    }
    (z, remainder)
}

/// Cycle decomposition of an even edge set with the number of positive cycles
/// maximized, so no two negative cycles in the result share more than one
/// vertex. Each exchange raises the positive count, which bounds the loop.
pub fn maximize_positive_decomposition(
    g: &SignedGraph,
    even: &EdgeSet,
) -> Result<Vec<Cycle>, CircuitError> {
    let mut cycles = decompose_even(g, even)?;
    'fix: loop {
        for i in 0..cycles.len() {
            if !cycles[i].is_negative(g) {
                continue;
            }
            for j in i + 1..cycles.len() {
                if !cycles[j].is_negative(g) {
                    continue;
                }
                if shared_vertices(&cycles[i], &cycles[j]).len() < 2 {
                    continue;
                }
                let (z, remainder) = positive_exchange(g, &cycles[i], &cycles[j]);
                cycles.swap_remove(j);
                cycles.swap_remove(i);
                cycles.push(z);
                cycles.extend(decompose_even(g, &remainder)?);
                continue 'fix;
            }
        }
        return Ok(cycles);
    }
}

pub const DEFAULT_CYCLE_CEILING: usize = 500_000;

/// Every simple cycle of the active subgraph exactly once: loops first by id,
/// longer cycles grouped by their smallest (anchor) vertex, each reported in
/// the direction whose first edge id is below the closing edge id.
pub fn enumerate_cycles_within(
    g: &SignedGraph,
    active: &EdgeSet,
    ceiling: usize,
) -> Result<Vec<Cycle>, CircuitError> {
    let n = g.vertex_count();
    let adj = g.adjacency();
    let mut out = Vec::new();
    for e in active.iter() {
        if g.is_loop(e) {
            out.push(Cycle::new(g, vec![e])?);
            if out.len() > ceiling {
                return Err(CircuitError::EnumerationCeiling(ceiling));
            }
        }
    }
    struct Dfs<'a> {
        g: &'a SignedGraph,
        adj: &'a [Vec<(VertexId, EdgeId)>],
        active: &'a EdgeSet,
        anchor: VertexId,
        ceiling: usize,
    }
    impl Dfs<'_> {
        fn run(
            &self,
            at: VertexId,
            visited: &mut Vec<bool>,
            path: &mut Vec<EdgeId>,
            out: &mut Vec<Cycle>,
        ) -> Result<(), CircuitError> {
            for &(w, e) in &self.adj[at] {
                if w == at || !self.active.contains(e) || path.contains(&e) {
                    continue;
                }
                if w == self.anchor {
                    if !path.is_empty() && path[0] < e {
                        let mut edges = path.clone();
                        edges.push(e);
                        out.push(Cycle::new(self.g, edges)?);
                        if out.len() > self.ceiling {
                            return Err(CircuitError::EnumerationCeiling(self.ceiling));
                        }
                    }
                    continue;
                }
                if w < self.anchor || visited[w] {
                    continue;
                }
                visited[w] = true;
                path.push(e);
                self.run(w, visited, path, out)?;
                path.pop();
                visited[w] = false;
            }
            Ok(())
        }
    }
    for anchor in 0..n {
        let dfs = Dfs { g, adj: &adj, active, anchor, ceiling };
        let mut visited = vec![false; n];
        visited[anchor] = true;
        dfs.run(anchor, &mut visited, &mut Vec::new(), &mut out)?;
    }
    Ok(out)
}

pub fn enumerate_cycles(g: &SignedGraph, ceiling: usize) -> Result<Vec<Cycle>, CircuitError> {
    enumerate_cycles_within(g, &EdgeSet::full(g.edge_count()), ceiling)
}

/// Shortest negative cycle of the active subgraph through a signed double
/// cover: each vertex splits in two, negative edges cross between the halves,
/// and the shortest (v, 0) to (v, 1) distance over all v projects onto a
/// shortest negative closed walk, which is always a simple cycle.
pub fn shortest_negative_cycle_within(g: &SignedGraph, active: &EdgeSet) -> Option<Cycle> {
    let n = g.vertex_count();
    let adj = g.adjacency();
    let cover_id = |v: VertexId, side: usize| 2 * v + side;
    let bfs = |source: VertexId| -> (Vec<u32>, Vec<Option<(usize, EdgeId)>>) {
        let mut dist = vec![u32::MAX; 2 * n];
        let mut via: Vec<Option<(usize, EdgeId)>> = vec![None; 2 * n];
        let s = cover_id(source, 0);
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(cv) = queue.pop_front() {
            let (v, side) = (cv / 2, cv % 2);
            for &(w, e) in &adj[v] {
                if !active.contains(e) {
                    continue;
                }
                let target = cover_id(w, side ^ g.sign(e).is_negative() as usize);
                if dist[target] == u32::MAX {
                    dist[target] = dist[cv] + 1;
                    via[target] = Some((cv, e));
                    queue.push_back(target);
                }
            }
        }
        (dist, via)
    };
    let mut best: Option<(u32, VertexId)> = None;
    for v in 0..n {
        let (dist, _) = bfs(v);
        let d = dist[cover_id(v, 1)];
        if d != u32::MAX && best.map_or(true, |(bd, _)| d < bd) {
            best = Some((d, v));
        }
    }
    let (_, v) = best?;
    let (_, via) = bfs(v);
    let mut edges = Vec::new();
    let mut at = cover_id(v, 1);
    while let Some((prev, e)) = via[at] {
        edges.push(e);
        at = prev;
    }
    Some(Cycle::new(g, edges).expect("minimal negative closed walk is a simple cycle"))
}

pub fn shortest_negative_cycle(g: &SignedGraph) -> Option<Cycle> {
    shortest_negative_cycle_within(g, &EdgeSet::full(g.edge_count()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> SignedGraph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5, Sign::Plus));
        }
        for i in 0..5 {
            edges.push((i, 5 + i, Sign::Plus));
        }
        for i in 0..5 {
            edges.push((5 + i, 5 + (i + 2) % 5, Sign::Plus));
        }
        SignedGraph::from_edges(10, edges).unwrap()
    }

    #[test]
    fn cycle_canonicalizes_shuffled_triangle() {
        let g = SignedGraph::from_edges(
            3,
            [(1, 2, Sign::Plus), (2, 0, Sign::Plus), (0, 1, Sign::Minus)],
        )
        .unwrap();
        let c = Cycle::new(&g, vec![1, 0, 2]).unwrap();
        assert_eq!(c.vertex_sequence()[0], 0);
        assert_eq!(c.len(), 3);
        assert_eq!(c.sign(&g), Sign::Minus);
    }

    #[test]
    fn loops_and_digons_are_cycles() {
        let g = SignedGraph::from_edges(2, [(0, 0, Sign::Minus), (0, 1, Sign::Plus), (0, 1, Sign::Plus)])
            .unwrap();
        let l = Cycle::new(&g, vec![0]).unwrap();
        assert_eq!(l.len(), 1);
        assert!(l.is_negative(&g));
        let d = Cycle::new(&g, vec![2, 1]).unwrap();
        assert_eq!(d.len(), 2);
        assert_eq!(d.edges(), [1, 2]);
    }

    #[test]
    fn cycle_rejects_bad_shapes() {
        let g = SignedGraph::from_edges(
            4,
            [
                (0, 1, Sign::Plus),
                (1, 2, Sign::Plus),
                (2, 0, Sign::Plus),
                (2, 3, Sign::Plus),
                (0, 0, Sign::Plus),
            ],
        )
        .unwrap();
        assert_eq!(Cycle::new(&g, vec![]), Err(CircuitError::EmptyCycle));
        assert_eq!(Cycle::new(&g, vec![0, 0]), Err(CircuitError::RepeatedEdge(0)));
        assert_eq!(Cycle::new(&g, vec![0, 1, 4]), Err(CircuitError::LoopInCycle(4)));
        assert!(matches!(Cycle::new(&g, vec![0, 1, 2, 3]), Err(CircuitError::CycleDegree(_, _))));
    }

    #[test]
    fn disconnected_edge_lists_are_rejected() {
        let g = SignedGraph::from_edges(
            4,
            [
                (0, 1, Sign::Plus),
                (0, 1, Sign::Plus),
                (2, 3, Sign::Plus),
                (2, 3, Sign::Plus),
            ],
        )
        .unwrap();
        assert_eq!(Cycle::new(&g, vec![0, 1, 2, 3]), Err(CircuitError::DisconnectedEdges));
    }

    #[test]
    fn paths_orient_from_smaller_endpoint() {
        let g = SignedGraph::from_edges(4, [(2, 3, Sign::Plus), (1, 2, Sign::Plus), (3, 0, Sign::Plus)])
            .unwrap();
        let p = GraphPath::new(&g, vec![0, 1, 2]).unwrap();
        assert_eq!(p.from_vertex(), 0);
        assert_eq!(p.to_vertex(), 1);
        assert_eq!(p.vertex_sequence(), [0, 3, 2, 1]);
        assert_eq!(p.interior(), [3, 2]);
    }

    #[test]
    fn path_rejections() {
        let g = SignedGraph::from_edges(
            3,
            [(0, 1, Sign::Plus), (1, 2, Sign::Plus), (2, 0, Sign::Plus), (1, 1, Sign::Plus)],
        )
        .unwrap();
        assert_eq!(GraphPath::new(&g, vec![]), Err(CircuitError::EmptyPath));
        assert_eq!(GraphPath::new(&g, vec![0, 3]), Err(CircuitError::LoopInPath(3)));
        assert_eq!(GraphPath::new(&g, vec![0, 1, 2]), Err(CircuitError::PathEndpoints(0)));
    }

    #[test]
    fn short_and_long_barbells_validate() {
        // bowtie: two negative triangles sharing vertex 2
        let bowtie = SignedGraph::from_edges(
            5,
            [
                (0, 1, Sign::Minus),
                (1, 2, Sign::Plus),
                (2, 0, Sign::Plus),
                (2, 3, Sign::Plus),
                (3, 4, Sign::Minus),
                (4, 2, Sign::Plus),
            ],
        )
        .unwrap();
        let c1 = Cycle::new(&bowtie, vec![0, 1, 2]).unwrap();
        let c2 = Cycle::new(&bowtie, vec![3, 4, 5]).unwrap();
        let b = Barbell::new(&bowtie, c1.clone(), c2.clone(), None).unwrap();
        assert_eq!(b.kind(), BarbellKind::Short);
        assert_eq!(b.len(), 6);

        // two negative loops joined by an edge
        let dumbbell = SignedGraph::from_edges(
            2,
            [(0, 0, Sign::Minus), (1, 1, Sign::Minus), (0, 1, Sign::Plus)],
        )
        .unwrap();
        let l1 = Cycle::new(&dumbbell, vec![0]).unwrap();
        let l2 = Cycle::new(&dumbbell, vec![1]).unwrap();
        let p = GraphPath::new(&dumbbell, vec![2]).unwrap();
        let b = Barbell::new(&dumbbell, l1.clone(), l2.clone(), Some(p)).unwrap();
        assert_eq!(b.kind(), BarbellKind::Long);
        assert_eq!(b.len(), 3);
        assert_eq!(
            Barbell::new(&dumbbell, l1.clone(), l2.clone(), None),
            Err(CircuitError::ShortBarbellOverlap(0))
        );
        assert_eq!(
            Barbell::new(&dumbbell, l1.clone(), l1.clone(), None),
            Err(CircuitError::RepeatedEdge(0))
        );
    }

    #[test]
    fn barbell_rejects_positive_cycles() {
        let g = SignedGraph::from_edges(
            5,
            [
                (0, 1, Sign::Plus),
                (1, 2, Sign::Plus),
                (2, 0, Sign::Plus),
                (2, 3, Sign::Plus),
                (3, 4, Sign::Minus),
                (4, 2, Sign::Plus),
            ],
        )
        .unwrap();
        let c1 = Cycle::new(&g, vec![0, 1, 2]).unwrap();
        let c2 = Cycle::new(&g, vec![3, 4, 5]).unwrap();
        assert_eq!(Barbell::new(&g, c1, c2, None), Err(CircuitError::PositiveCycleInBarbell));
    }

    #[test]
    fn decompose_even_peels_loops_and_cycles() {
        let g = SignedGraph::from_edges(
            5,
            [
                (0, 1, Sign::Plus),
                (1, 2, Sign::Plus),
                (2, 0, Sign::Plus),
                (2, 3, Sign::Plus),
                (3, 4, Sign::Plus),
                (4, 2, Sign::Plus),
                (0, 0, Sign::Minus),
            ],
        )
        .unwrap();
        let cycles = decompose_even(&g, &EdgeSet::full(7)).unwrap();
        assert_eq!(cycles.len(), 3);
        assert_eq!(cycles.iter().map(Cycle::len).sum::<usize>(), 7);
        let odd = SignedGraph::from_edges(2, [(0, 1, Sign::Plus)]).unwrap();
        assert_eq!(
            decompose_even(&odd, &EdgeSet::full(1)),
            Err(CircuitError::OddVertexInEvenSet(0))
        );
    }

    #[test]
    fn exchange_turns_negative_digon_pairs_positive() {
        // four parallel edges, alternating signs by id
        let g = SignedGraph::from_edges(
            2,
            [(0, 1, Sign::Minus), (0, 1, Sign::Plus), (0, 1, Sign::Minus), (0, 1, Sign::Plus)],
        )
        .unwrap();
        let plain = decompose_even(&g, &EdgeSet::full(4)).unwrap();
        assert_eq!(plain.iter().filter(|c| c.is_negative(&g)).count(), 2);
        let fixed = maximize_positive_decomposition(&g, &EdgeSet::full(4)).unwrap();
        assert_eq!(fixed.len(), 2);
        assert!(fixed.iter().all(|c| !c.is_negative(&g)));
    }

    #[test]
    fn fixed_point_allows_single_shared_vertex() {
        let bowtie = SignedGraph::from_edges(
            5,
            [
                (0, 1, Sign::Minus),
                (1, 2, Sign::Plus),
                (2, 0, Sign::Plus),
                (2, 3, Sign::Plus),
                (3, 4, Sign::Minus),
                (4, 2, Sign::Plus),
            ],
        )
        .unwrap();
        let cycles = maximize_positive_decomposition(&bowtie, &EdgeSet::full(6)).unwrap();
        assert_eq!(cycles.len(), 2);
        assert!(cycles.iter().all(|c| c.is_negative(&bowtie)));
    }

    #[test]
    fn enumeration_counts_match_known_graphs() {
        let k4 = SignedGraph::from_edges(
            4,
            [
                (0, 1, Sign::Plus),
                (0, 2, Sign::Plus),
                (0, 3, Sign::Plus),
                (1, 2, Sign::Plus),
                (1, 3, Sign::Plus),
                (2, 3, Sign::Plus),
            ],
        )
        .unwrap();
        assert_eq!(enumerate_cycles(&k4, 1000).unwrap().len(), 7);
        assert_eq!(enumerate_cycles(&petersen(), 1000).unwrap().len(), 57);
        let digon_loop = SignedGraph::from_edges(
            2,
            [(0, 1, Sign::Plus), (0, 1, Sign::Minus), (1, 1, Sign::Minus)],
        )
        .unwrap();
        let cycles = enumerate_cycles(&digon_loop, 1000).unwrap();
        assert_eq!(cycles.len(), 2);
        assert!(matches!(enumerate_cycles(&petersen(), 10), Err(CircuitError::EnumerationCeiling(10))));
    }

    #[test]
    fn shortest_negative_cycle_examples() {
        let tri = SignedGraph::from_edges(
            3,
            [(0, 1, Sign::Plus), (1, 2, Sign::Plus), (2, 0, Sign::Minus)],
        )
        .unwrap();
        assert_eq!(shortest_negative_cycle(&tri).unwrap().len(), 3);

        let looped = SignedGraph::from_edges(2, [(0, 1, Sign::Minus), (1, 1, Sign::Minus)]).unwrap();
        let c = shortest_negative_cycle(&looped).unwrap();
        assert_eq!(c.edges(), [1]);

        let lonely = SignedGraph::from_edges(2, [(0, 1, Sign::Minus)]).unwrap();
        assert!(shortest_negative_cycle(&lonely).is_none());

        let mut p = petersen();
        p = SignedGraph::from_edges(
            10,
            p.edges().iter().enumerate().map(|(i, e)| {
                (e.u, e.v, if i == 0 { Sign::Minus } else { Sign::Plus })
            }),
        )
        .unwrap();
        assert_eq!(shortest_negative_cycle(&p).unwrap().len(), 5);
    }
}
