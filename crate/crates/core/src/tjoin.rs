//! Exact minimum T-joins with unit weights.
//!
//! A T-join is an edge set whose odd-degree vertices are exactly T. The
//! solver enumerates pairings of the terminals over the metric closure
//! (all-pairs BFS distances), takes the symmetric difference of shortest
//! paths for the best pairing, and strips cycles. For nonnegative weights the
//! pairing bound is tight, so the result is an exact minimum and acyclic.

use crate::bridges::max_bridgeless_within;
use crate::graph::{EdgeId, EdgeSet, SignedGraph, VertexId};
use num_rational::Rational64;
use thiserror::Error;

/// Pairing enumeration is (k-1)!! over k terminals; this caps it near 10^5.
pub const MAX_TERMINALS: usize = 14;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TJoinError {
    #[error("terminal sets must have even size, got {found}")]
    OddTerminalCount { found: usize },
    #[error("terminal {0} listed twice")]
    DuplicateTerminal(VertexId),
    #[error("terminal {vertex} out of range for {vertices} vertices")]
    VertexOutOfRange { vertex: VertexId, vertices: usize },
    #[error("{found} terminals exceed the pairing-enumeration ceiling of {max}")]
    TooManyTerminals { found: usize, max: usize },
    #[error("component containing vertex {vertex} holds {count} terminals; joins need an even count per component")]
    OddTerminalsInComponent { vertex: VertexId, count: usize },
}

/// Vertices with odd degree in `edges`; loops contribute two and never matter.
pub fn odd_degree_vertices(g: &SignedGraph, edges: &EdgeSet) -> Vec<VertexId> {
    let mut parity = vec![false; g.vertex_count()];
    for e in edges.iter() {
        let (u, v) = g.endpoints(e);
        if u != v {
            parity[u] ^= true;
            parity[v] ^= true;
        }
    }
    (0..g.vertex_count()).filter(|&v| parity[v]).collect()
}

pub fn min_tjoin(g: &SignedGraph, terminals: &[VertexId]) -> Result<EdgeSet, TJoinError> {
    min_tjoin_within(g, &EdgeSet::full(g.edge_count()), terminals)
}

/// Minimum T-join using only `active` edges. Deterministic: BFS layers plus a
/// smallest-(vertex, edge) backward walk fix each shortest path, and the
/// pairing search keeps the first optimum in enumeration order.
pub fn min_tjoin_within(
    g: &SignedGraph,
    active: &EdgeSet,
    terminals: &[VertexId],
) -> Result<EdgeSet, TJoinError> {
    let n = g.vertex_count();
    let mut t = terminals.to_vec();
    t.sort_unstable();
    for w in t.windows(2) {
        if w[0] == w[1] {
            return Err(TJoinError::DuplicateTerminal(w[0]));
        }
    }
    if let Some(&v) = t.iter().find(|&&v| v >= n) {
        return Err(TJoinError::VertexOutOfRange { vertex: v, vertices: n });
    }
    if t.len() % 2 != 0 {
        return Err(TJoinError::OddTerminalCount { found: t.len() });
    }
    if t.len() > MAX_TERMINALS {
        return Err(TJoinError::TooManyTerminals { found: t.len(), max: MAX_TERMINALS });
    }
    if t.is_empty() {
        return Ok(EdgeSet::empty(g.edge_count()));
    }

    let (comp, ncomp) = g.components_within(active);
    let mut per_comp = vec![(usize::MAX, 0usize); ncomp];
    for &v in &t {
        let c = comp[v];
        per_comp[c].0 = per_comp[c].0.min(v);
        per_comp[c].1 += 1;
    }
    if let Some(&(vertex, count)) = per_comp.iter().find(|&&(_, c)| c % 2 != 0) {
        return Err(TJoinError::OddTerminalsInComponent { vertex, count });
    }

    let adj = g.adjacency();
    let dist_from: Vec<Vec<u32>> = t.iter().map(|&s| bfs_dist(&adj, active, n, s)).collect();
    let k = t.len();
    let mut dist = vec![vec![u32::MAX; k]; k];
    for i in 0..k {
        for j in 0..k {
            dist[i][j] = dist_from[i][t[j]];
        }
    }

    let pairing = best_pairing(&dist);
    let mut join = EdgeSet::empty(g.edge_count());
    for &(i, j) in &pairing {
        for e in shortest_path_edges(&adj, active, &dist_from[i], t[i], t[j]) {
            join.toggle(e);
        }
    }
    strip_cycles(g, &mut join);
    debug_assert_eq!(odd_degree_vertices(g, &join), t);
    Ok(join)
}

fn bfs_dist(adj: &[Vec<(VertexId, EdgeId)>], active: &EdgeSet, n: usize, s: VertexId) -> Vec<u32> {
    let mut dist = vec![u32::MAX; n];
    dist[s] = 0;
    let mut queue = std::collections::VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        for &(w, e) in &adj[v] {
            if w != v && active.contains(e) && dist[w] == u32::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Walks backward from `to` along strictly distance-decreasing steps, always
/// taking the smallest (vertex, edge) option, so the path is reproducible.
fn shortest_path_edges(
    adj: &[Vec<(VertexId, EdgeId)>],
    active: &EdgeSet,
    dist: &[u32],
    from: VertexId,
    to: VertexId,
) -> Vec<EdgeId> {
    debug_assert_ne!(dist[to], u32::MAX, "terminals were checked to share a component");
    let mut edges = Vec::new();
    let mut w = to;
    while w != from {
        let step = adj[w]
            .iter()
            .filter(|&&(x, e)| x != w && active.contains(e) && dist[x] + 1 == dist[w])
            .min()
            .copied()
            .expect("distance-decreasing neighbor exists along a shortest path");
        edges.push(step.1);
        w = step.0;
    }
    edges
}

fn best_pairing(dist: &[Vec<u32>]) -> Vec<(usize, usize)> {
    let k = dist.len();
    let mut used = vec![false; k];
    let mut current = Vec::with_capacity(k / 2);
    let mut best_cost = u64::MAX;
    let mut best = Vec::new();
    fn rec(
        dist: &[Vec<u32>],
        used: &mut Vec<bool>,
        current: &mut Vec<(usize, usize)>,
        cost: u64,
        best_cost: &mut u64,
        best: &mut Vec<(usize, usize)>,
    ) {
        if cost >= *best_cost {
            return;
        }
        let Some(i) = used.iter().position(|&u| !u) else {
            *best_cost = cost;
            *best = current.clone();
            return;
        };
        used[i] = true;
        for j in i + 1..used.len() {
            if used[j] {
                continue;
            }
            used[j] = true;
            current.push((i, j));
            rec(dist, used, current, cost + dist[i][j] as u64, best_cost, best);
            current.pop();
            used[j] = false;
        }
        used[i] = false;
    }
    rec(dist, &mut used, &mut current, 0, &mut best_cost, &mut best);
    best
}

/// Removes cycles from `edges` until the set is a forest. Cycle removal keeps
/// the odd-degree set intact and never grows the set.
pub fn strip_cycles(g: &SignedGraph, edges: &mut EdgeSet) {
    while let Some(cycle) = find_cycle_within(g, edges) {
        for e in cycle {
            edges.remove(e);
        }
    }
}

/// Some cycle lying inside `edges`, or None when the set is a forest. Loops
/// count as one-edge cycles.
pub fn find_cycle_within(g: &SignedGraph, edges: &EdgeSet) -> Option<Vec<EdgeId>> {
    let n = g.vertex_count();
    let mut forest: Vec<Vec<(VertexId, EdgeId)>> = vec![Vec::new(); n];
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, v: usize) -> usize {
        if parent[v] != v {
            let root = find(parent, parent[v]);
            parent[v] = root;
        }
        parent[v]
    }
    for e in edges.iter() {
        let (u, v) = g.endpoints(e);
        if u == v {
            return Some(vec![e]);
        }
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru == rv {
            let path = forest_path(&forest, n, u, v);
            let mut cycle = path;
            cycle.push(e);
            return Some(cycle);
        }
        parent[ru] = rv;
        forest[u].push((v, e));
        forest[v].push((u, e));
    }
    None
}

fn forest_path(forest: &[Vec<(VertexId, EdgeId)>], n: usize, from: VertexId, to: VertexId) -> Vec<EdgeId> {
    let mut via: Vec<Option<(VertexId, EdgeId)>> = vec![None; n];
    let mut seen = vec![false; n];
    seen[from] = true;
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        if v == to {
            break;
        }
        for &(w, e) in &forest[v] {
            if !seen[w] {
                seen[w] = true;
                via[w] = Some((v, e));
                queue.push_back(w);
            }
        }
    }
    let mut edges = Vec::new();
    let mut w = to;
    while let Some((prev, e)) = via[w] {
        edges.push(e);
        w = prev;
    }
    edges
}

/// Size bound for minimum T-joins: |E| minus half the edges of the maximum
/// bridgeless subgraph. Exact as a rational.
pub fn tjoin_upper_bound(g: &SignedGraph) -> Rational64 {
    let m = g.edge_count();
    let core = max_bridgeless_within(g, &EdgeSet::full(m)).len();
    Rational64::new(2 * m as i64 - core as i64, 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Sign;

    fn path(n: usize) -> SignedGraph {
        SignedGraph::from_edges(n, (0..n - 1).map(|i| (i, i + 1, Sign::Plus))).unwrap()
    }

    fn cycle(n: usize) -> SignedGraph {
        SignedGraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n, Sign::Plus))).unwrap()
    }

    #[test]
    fn path_endpoints_need_every_edge() {
        let g = path(5);
        let j = min_tjoin(&g, &[0, 4]).unwrap();
        assert_eq!(j.len(), 4);
    }

    #[test]
    fn opposite_vertices_on_a_square_use_one_arc() {
        let g = cycle(4);
        let j = min_tjoin(&g, &[0, 2]).unwrap();
        assert_eq!(j.len(), 2);
        assert_eq!(odd_degree_vertices(&g, &j), vec![0, 2]);
    }

    #[test]
    fn digon_terminals_use_a_single_edge() {
        let g = SignedGraph::from_edges(2, [(0, 1, Sign::Plus), (0, 1, Sign::Minus)]).unwrap();
        let j = min_tjoin(&g, &[0, 1]).unwrap();
        assert_eq!(j.len(), 1);
    }

    #[test]
    fn four_terminals_on_a_square_pair_up_disjointly() {
        let g = cycle(4);
        let j = min_tjoin(&g, &[0, 1, 2, 3]).unwrap();
        assert_eq!(j.len(), 2);
        assert_eq!(odd_degree_vertices(&g, &j), vec![0, 1, 2, 3]);
    }

    #[test]
    fn empty_terminal_set_gives_empty_join() {
        let g = cycle(3);
        assert!(min_tjoin(&g, &[]).unwrap().is_empty());
    }

    #[test]
    fn validation_errors() {
        let g = path(4);
        assert_eq!(min_tjoin(&g, &[0]), Err(TJoinError::OddTerminalCount { found: 1 }));
        assert_eq!(min_tjoin(&g, &[1, 1]), Err(TJoinError::DuplicateTerminal(1)));
        assert_eq!(
            min_tjoin(&g, &[0, 9]),
            Err(TJoinError::VertexOutOfRange { vertex: 9, vertices: 4 })
        );
        let big = path(16);
        let t: Vec<_> = (0..16).collect();
        assert_eq!(
            min_tjoin(&big, &t),
            Err(TJoinError::TooManyTerminals { found: 16, max: MAX_TERMINALS })
        );
        let split = SignedGraph::from_edges(4, [(0, 1, Sign::Plus), (2, 3, Sign::Plus)]).unwrap();
        assert_eq!(
            min_tjoin(&split, &[0, 2]),
            Err(TJoinError::OddTerminalsInComponent { vertex: 0, count: 1 })
        );
    }

    #[test]
    fn joins_come_out_acyclic() {
        let g = cycle(6);
        let j = min_tjoin(&g, &[0, 1, 3, 4]).unwrap();
        assert!(find_cycle_within(&g, &j).is_none());
        assert_eq!(odd_degree_vertices(&g, &j), vec![0, 1, 3, 4]);
        assert_eq!(j.len(), 2);
    }

    #[test]
    fn upper_bound_on_a_cycle_with_pendant() {
        // triangle plus pendant edge: core is the triangle
        let g = SignedGraph::from_edges(
            4,
            [(0, 1, Sign::Plus), (1, 2, Sign::Plus), (2, 0, Sign::Plus), (2, 3, Sign::Plus)],
        )
        .unwrap();
        assert_eq!(tjoin_upper_bound(&g), Rational64::new(5, 2));
        for t in [vec![], vec![0, 1], vec![0, 3], vec![0, 1, 2, 3]] {
            let j = min_tjoin(&g, &t).unwrap();
            assert!(Rational64::from_integer(j.len() as i64) <= tjoin_upper_bound(&g));
        }
    }

    #[test]
    fn petersen_all_vertices_need_five_edges() {
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
        let g = SignedGraph::from_edges(10, edges).unwrap();
        let t: Vec<_> = (0..10).collect();
        let j = min_tjoin(&g, &t).unwrap();
        assert_eq!(j.len(), 5);
        assert_eq!(odd_degree_vertices(&g, &j), t);
        assert!(Rational64::from_integer(5) <= tjoin_upper_bound(&g));
    }

    #[test]
    fn restricted_join_avoids_masked_edges() {
        let g = cycle(4);
        let mut active = EdgeSet::full(4);
        active.remove(0);
        let j = min_tjoin_within(&g, &active, &[0, 1]).unwrap();
        assert_eq!(j.len(), 3);
        assert!(!j.contains(0));
    }
}
