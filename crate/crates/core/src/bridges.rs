//! Bridges and bridgeless cores. Multigraph-aware: a parallel edge is never a
//! bridge, a loop is never a bridge, and only the tree edge actually used to
//! enter a vertex is skipped during low-point propagation.

use crate::graph::{EdgeId, EdgeSet, SignedGraph, VertexId};

/// Bridges of the subgraph restricted to `active` edges.
pub fn bridges_within(g: &SignedGraph, active: &EdgeSet) -> EdgeSet {
    let n = g.vertex_count();
    let adj = g.adjacency();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![usize::MAX; n];
    let mut out = EdgeSet::empty(g.edge_count());
    let mut time = 0;

    // Iterative DFS; each frame remembers the edge it was entered by so that
    // the other copy of a parallel edge still counts as a back edge.
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        let mut stack: Vec<(VertexId, Option<EdgeId>, usize)> = vec![(root, None, 0)];
        disc[root] = time;
        low[root] = time;
        time += 1;
        while !stack.is_empty() {
            let frame = stack.len() - 1;
            let (v, via, i) = stack[frame];
            if i < adj[v].len() {
                stack[frame].2 += 1;
                let (w, e) = adj[v][i];
                if !active.contains(e) || w == v || Some(e) == via {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, Some(e), 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(parent, _, _)) = stack.last() {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] > disc[parent] {
                        if let Some(e) = via {
                            out.insert(e);
                        }
                    }
                }
            }
        }
    }
    out
}

pub fn bridges(g: &SignedGraph) -> EdgeSet {
    bridges_within(g, &EdgeSet::full(g.edge_count()))
}

/// Edges of the maximal bridgeless subgraph within `active`: every non-bridge
/// edge lies on a cycle of non-bridge edges, so one removal pass suffices.
pub fn max_bridgeless_within(g: &SignedGraph, active: &EdgeSet) -> EdgeSet {
    active.difference(&bridges_within(g, active))
}

/// The maximal bridgeless subgraph as a standalone graph (full vertex set, edge
/// ids re-numbered ascending); second value maps new ids back to host ids.
pub fn max_bridgeless_subgraph(g: &SignedGraph) -> (SignedGraph, Vec<EdgeId>) {
    g.edge_subgraph(&max_bridgeless_within(g, &EdgeSet::full(g.edge_count())))
}

/// The positive subgraph (full vertex set, ids re-numbered); second value maps
/// new ids back to host ids.
pub fn positive_subgraph(g: &SignedGraph) -> (SignedGraph, Vec<EdgeId>) {
    g.edge_subgraph(&g.positive_edges())
}

/// Connected with no bridges, loops ignored. Single-vertex and empty graphs
/// qualify vacuously.
pub fn is_two_edge_connected(g: &SignedGraph) -> bool {
    g.is_connected() && bridges(g).is_empty()
}
