//! Balance, negativeness (frustration), and flow admissibility.
//!
//! A signature is balanced when some switching removes every negative edge;
//! negativeness is the minimum number of negative edges over all switchings.
//! The exact solver is a branch-and-bound over vertex sides with a greedy
//! local-switching warm start; it is exponential in component size and meant
//! for desk-scale instances.

use crate::bridges::bridges;
use crate::graph::{EdgeId, EdgeSet, Sign, SignedGraph, Switching, VertexId};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CutCheckError {
    #[error("cut enumeration over {vertices} vertices exceeds the ceiling of {ceiling}")]
    CeilingExceeded { vertices: usize, ceiling: usize },
}

/// Balance of the subgraph restricted to `active`: labels propagate along a
/// spanning forest, then every remaining edge must agree. A negative loop is
/// unbalanced on its own.
pub fn balanced_within(g: &SignedGraph, active: &EdgeSet) -> bool {
    for e in active.iter() {
        if g.is_loop(e) && g.sign(e).is_negative() {
            return false;
        }
    }
    let n = g.vertex_count();
    let adj = g.adjacency();
    let mut label = vec![u8::MAX; n];
    for start in 0..n {
        if label[start] != u8::MAX {
            continue;
        }
        label[start] = 0;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &(w, e) in &adj[v] {
                if !active.contains(e) || w == v {
                    continue;
                }
                let want = label[v] ^ g.sign(e).is_negative() as u8;
                if label[w] == u8::MAX {
                    label[w] = want;
                    stack.push(w);
                } else if label[w] != want {
                    return false;
                }
            }
        }
    }
    true
}

pub fn is_balanced(g: &SignedGraph) -> bool {
    balanced_within(g, &EdgeSet::full(g.edge_count()))
}

/// Exact branch-and-bound state for one component. Vertices are indexed
/// locally; parallel edges between the same pair collapse into (pos, neg)
/// counts, and `min(pos, neg)` per open pair is the admissible lower bound.
struct FrustrationEngine {
    verts: Vec<VertexId>,
    pairs: Vec<(usize, usize, usize, usize)>,
    adj_pairs: Vec<Vec<usize>>,
    neg_loops: usize,
    branch_order: Vec<usize>,
}

impl FrustrationEngine {
    fn new(g: &SignedGraph, verts: Vec<VertexId>) -> Self {
        let mut local = HashMap::new();
        for (i, &v) in verts.iter().enumerate() {
            local.insert(v, i);
        }
        let mut pair_index: HashMap<(usize, usize), usize> = HashMap::new();
        let mut pairs: Vec<(usize, usize, usize, usize)> = Vec::new();
        let mut neg_loops = 0;
        for edge in g.edges() {
            let (Some(&a), Some(&b)) = (local.get(&edge.u), local.get(&edge.v)) else {
                continue;
            };
            if a == b {
                if edge.sign.is_negative() {
                    neg_loops += 1;
                }
                continue;
            }
            let key = (a.min(b), a.max(b));
            let idx = *pair_index.entry(key).or_insert_with(|| {
                pairs.push((key.0, key.1, 0, 0));
                pairs.len() - 1
            });
            if edge.sign.is_negative() {
                pairs[idx].3 += 1;
            } else {
                pairs[idx].2 += 1;
            }
        }
        let mut adj_pairs = vec![Vec::new(); verts.len()];
        for (i, &(a, b, _, _)) in pairs.iter().enumerate() {
            adj_pairs[a].push(i);
            adj_pairs[b].push(i);
        }
        // high-degree vertices first closes pairs early and tightens the bound
        let mut branch_order: Vec<usize> = (0..verts.len()).collect();
        branch_order.sort_by_key(|&i| std::cmp::Reverse(adj_pairs[i].len()));
        FrustrationEngine { verts, pairs, adj_pairs, neg_loops, branch_order }
    }

    fn cost_of(&self, assign: &[bool]) -> usize {
        let mut cost = self.neg_loops;
        for &(a, b, pos, neg) in &self.pairs {
            cost += if assign[a] == assign[b] { neg } else { pos };
        }
        cost
    }

    /// First-improvement local search from the all-zero assignment, honoring
    /// fixed sides. Upper bound for the exact search.
    fn greedy(&self, fixed: &[Option<bool>]) -> usize {
        let nv = self.verts.len();
        let mut assign: Vec<bool> = (0..nv).map(|i| fixed[i].unwrap_or(false)).collect();
        loop {
            let mut improved = false;
            for v in 0..nv {
                if fixed[v].is_some() {
                    continue;
                }
                let mut delta = 0isize;
                for &p in &self.adj_pairs[v] {
                    let (a, b, pos, neg) = self.pairs[p];
                    let o = if a == v { b } else { a };
                    let now = if assign[v] == assign[o] { neg } else { pos };
                    let after = if assign[v] == assign[o] { pos } else { neg };
                    delta += after as isize - now as isize;
                }
                if delta < 0 {
                    assign[v] = !assign[v];
                    improved = true;
                }
            }
            if !improved {
                break;
            }
        }
        self.cost_of(&assign)
    }

    /// Minimum negatives with some sides pre-fixed. With nothing fixed the
    /// first branched vertex is pinned to side zero (complementing a component
    /// yields the same signature).
    fn min_cost(&self, fixed: &[Option<bool>]) -> usize {
        let mut assign: Vec<Option<bool>> = fixed.to_vec();
        let mut residual: usize = self.pairs.iter().map(|&(_, _, p, n)| p.min(n)).sum();
        let mut cost = self.neg_loops;
        // close pairs between fixed vertices up front
        for &(a, b, pos, neg) in &self.pairs {
            if let (Some(sa), Some(sb)) = (assign[a], assign[b]) {
                residual -= pos.min(neg);
                cost += if sa == sb { neg } else { pos };
            }
        }
        let order: Vec<usize> = self
            .branch_order
            .iter()
            .copied()
            .filter(|&i| fixed[i].is_none())
            .collect();
        let mut best = self.greedy(fixed);
        let symmetry_free = fixed.iter().all(|f| f.is_none());
        self.dfs(&order, 0, cost, residual, &mut assign, &mut best, symmetry_free);
        best
    }

    #[allow(clippy::too_many_arguments)]
    fn dfs(
        &self,
        order: &[usize],
        k: usize,
        cost: usize,
        residual: usize,
        assign: &mut Vec<Option<bool>>,
        best: &mut usize,
        symmetry_free: bool,
    ) {
        if cost + residual >= *best {
            return;
        }
        if k == order.len() {
            *best = cost;
            return;
        }
        let v = order[k];
        let sides: &[bool] = if k == 0 && symmetry_free { &[false] } else { &[false, true] };
        for &side in sides {
            let mut dcost = 0;
            let mut dres = 0;
            for &p in &self.adj_pairs[v] {
                let (a, b, pos, neg) = self.pairs[p];
                let o = if a == v { b } else { a };
                if let Some(so) = assign[o] {
                    dres += pos.min(neg);
                    dcost += if side == so { neg } else { pos };
                }
            }
            assign[v] = Some(side);
            self.dfs(order, k + 1, cost + dcost, residual - dres, assign, best, symmetry_free);
            assign[v] = None;
        }
    }
}

/// Exact negativeness with a minimizing switching. The witness is the
/// lexicographically smallest minimizing vertex subset under sorted-id-sequence
/// order, found by a greedy prefix search against the exact solver.
pub fn negativeness(g: &SignedGraph) -> (usize, Switching) {
    let n = g.vertex_count();
    let (label, ncomp) = g.components();
    let mut comp_vertices: Vec<Vec<VertexId>> = vec![Vec::new(); ncomp];
    for v in 0..n {
        comp_vertices[label[v]].push(v);
    }
    let mut total = 0;
    let mut witness = Vec::new();
    for verts in comp_vertices {
        let engine = FrustrationEngine::new(g, verts.clone());
        let none = vec![None; verts.len()];
        let eps = engine.min_cost(&none);
        total += eps;
        let mut fixed: Vec<Option<bool>> = none;
        for i in 0..verts.len() {
            // ending here (everything undecided stays out) is lexicographically
            // smallest if it still reaches the optimum
            let complete: Vec<bool> = fixed
                .iter()
                .enumerate()
                .map(|(j, f)| if j < i { f.unwrap_or(false) } else { false })
                .collect();
            if engine.cost_of(&complete) == eps {
                fixed = complete.iter().map(|&b| Some(b)).collect();
                break;
            }
            let mut with_v = fixed.clone();
            with_v[i] = Some(true);
            fixed[i] = Some(engine.min_cost(&with_v) == eps);
        }
        for (i, f) in fixed.iter().enumerate() {
            if f.unwrap_or(false) {
                witness.push(verts[i]);
            }
        }
    }
    let z = Switching::from_vertices(n, witness).expect("witness vertices are in range");
    (total, z)
}

/// Checks that every edge cut has at most half of its edges negative,
/// enumerating vertex bipartitions. Rejects graphs above `max_vertices`.
pub fn check_half_negative_cuts(g: &SignedGraph, max_vertices: usize) -> Result<bool, CutCheckError> {
    let n = g.vertex_count();
    let ceiling = max_vertices.min(63);
    if n > ceiling {
        return Err(CutCheckError::CeilingExceeded { vertices: n, ceiling });
    }
    if n <= 1 {
        return Ok(true);
    }
    for mask in 0u64..(1u64 << (n - 1)) {
        let side = |v: VertexId| v > 0 && (mask >> (v - 1)) & 1 == 1;
        let mut pos = 0usize;
        let mut neg = 0usize;
        for edge in g.edges() {
            if !edge.is_loop() && side(edge.u) != side(edge.v) {
                match edge.sign {
                    Sign::Plus => pos += 1,
                    Sign::Minus => neg += 1,
                }
            }
        }
        if pos + neg > 0 && 2 * neg > pos + neg {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Flow-admissibility verdict with the exact negativeness and, when a
/// cut-edge separates a balanced side, the smallest such edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissibilityReport {
    pub epsilon: usize,
    pub offending_bridge: Option<EdgeId>,
    pub verdict: bool,
}

/// A signed graph admits a nowhere-zero flow iff no component has negativeness
/// exactly one and no cut-edge separates a balanced side. On failure by
/// negativeness the reported epsilon is the offending component's value (1).
pub fn is_flow_admissible(g: &SignedGraph) -> AdmissibilityReport {
    let m = g.edge_count();
    let (label, ncomp) = g.components();
    let mut comp_edges = vec![EdgeSet::empty(m); ncomp];
    for (e, edge) in g.edges().iter().enumerate() {
        comp_edges[label[edge.u]].insert(e);
    }
    for edges in &comp_edges {
        if balanced_within(g, edges) {
            continue;
        }
        for e in edges.iter() {
            let mut minus = edges.clone();
            minus.remove(e);
            if balanced_within(g, &minus) {
                return AdmissibilityReport { epsilon: 1, offending_bridge: None, verdict: false };
            }
        }
    }
    for b in bridges(g).iter() {
        let mut active = EdgeSet::full(m);
        active.remove(b);
        let (split, _) = g.components_within(&active);
        let (u, v) = g.endpoints(b);
        for side in [split[u], split[v]] {
            let side_edges = EdgeSet::from_ids(
                m,
                g.edges()
                    .iter()
                    .enumerate()
                    .filter(|(e, edge)| *e != b && split[edge.u] == side && split[edge.v] == side)
                    .map(|(e, _)| e),
            );
            if balanced_within(g, &side_edges) {
                return AdmissibilityReport {
                    epsilon: negativeness(g).0,
                    offending_bridge: Some(b),
                    verdict: false,
                };
            }
        }
    }
    AdmissibilityReport { epsilon: negativeness(g).0, offending_bridge: None, verdict: true }
}
