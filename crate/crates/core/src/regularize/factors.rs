use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::verify::check_regular;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SubsetKind {
    TwoFactor,
    HamiltonCycle,
    Matching,
}

/// A set of edges of some host graph, tagged with the structure it is meant to have.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeSubset {
    pub edges: Vec<(usize, usize)>,
    pub kind: SubsetKind,
}

impl EdgeSubset {
    /// Checks the structural invariant of `kind` against `host`, including that
    /// every edge belongs to `host`.
    pub fn is_valid_for(&self, host: &Graph) -> bool {
        let n = host.n();
        if self.edges.iter().any(|&(u, v)| u >= n || v >= n || !host.has_edge(u, v)) {
            return false;
        }
        let mut incidence = vec![0usize; n];
        for &(u, v) in &self.edges {
            incidence[u] += 1;
            incidence[v] += 1;
        }
        match self.kind {
            SubsetKind::Matching => incidence.iter().all(|&c| c <= 1),
            SubsetKind::TwoFactor => incidence.iter().all(|&c| c == 2) && self.distinct_edges(),
            SubsetKind::HamiltonCycle => {
                if n < 3 || self.edges.len() != n || !incidence.iter().all(|&c| c == 2) || !self.distinct_edges() {
                    return false;
                }
                let cycle = Graph::from_edges(n, &self.edges, &[]).expect("checked above");
                cycle.is_connected()
            }
        }
    }

    fn distinct_edges(&self) -> bool {
        let mut e: Vec<(usize, usize)> = self.edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        e.sort_unstable();
        e.windows(2).all(|w| w[0] != w[1])
    }
}

/// Orients every edge so that in-degree equals out-degree at each vertex, by walking
/// unused edges until the walk closes (it can only get stuck where it started).
fn eulerian_orientation(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.n();
    let mut used = vec![Vec::new(); n];
    for (v, slot) in used.iter_mut().enumerate() {
        *slot = vec![false; g.simple_degree(v)];
    }
    let mut cursor = vec![0usize; n];
    let mut arcs = Vec::with_capacity(g.edge_count());
    for start in 0..n {
        loop {
            let mut v = start;
            let mut moved = false;
            loop {
                let nb = g.neighbors(v);
                while cursor[v] < nb.len() && used[v][cursor[v]] {
                    cursor[v] += 1;
                }
                if cursor[v] == nb.len() {
                    break;
                }
                let i = cursor[v];
                let w = nb[i];
                used[v][i] = true;
                let j = g.neighbors(w).binary_search(&v).expect("symmetric");
                used[w][j] = true;
                arcs.push((v, w));
                v = w;
                moved = true;
            }
            if !moved {
                break;
            }
        }
    }
    arcs
}

/// Hopcroft–Karp on a bipartite graph with `left` left vertices; `adj[u]` lists right vertices.
/// Returns `mate_left[u]`.
fn max_bipartite_matching(adj: &[Vec<usize>], right: usize) -> Vec<Option<usize>> {
    let left = adj.len();
    let mut mate_l: Vec<Option<usize>> = vec![None; left];
    let mut mate_r: Vec<Option<usize>> = vec![None; right];
    let mut dist = vec![u32::MAX; left];
    loop {
        let mut queue = VecDeque::new();
        for u in 0..left {
            if mate_l[u].is_none() {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = u32::MAX;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &r in &adj[u] {
                match mate_r[r] {
                    None => found = true,
                    Some(u2) if dist[u2] == u32::MAX => {
                        dist[u2] = dist[u] + 1;
                        queue.push_back(u2);
                    }
                    _ => {}
                }
            }
        }
        if !found {
            return mate_l;
        }
        let mut next = vec![0usize; left];
        for u in 0..left {
            if mate_l[u].is_none() {
                augment(u, adj, &mut mate_l, &mut mate_r, &mut dist, &mut next);
            }
        }
    }
}

// iterative DFS along the BFS layering
fn augment(
    root: usize,
    adj: &[Vec<usize>],
    mate_l: &mut [Option<usize>],
    mate_r: &mut [Option<usize>],
    dist: &mut [u32],
    next: &mut [usize],
) -> bool {
    let mut stack = vec![root];
    let mut via: Vec<usize> = Vec::new();
    while let Some(&u) = stack.last() {
        if next[u] == adj[u].len() {
            dist[u] = u32::MAX;
            stack.pop();
            via.pop();
            continue;
        }
        let r = adj[u][next[u]];
        next[u] += 1;
        match mate_r[r] {
            None => {
                via.push(r);
                for (&l, &rr) in stack.iter().zip(&via) {
                    mate_l[l] = Some(rr);
                    mate_r[rr] = Some(l);
                }
                return true;
            }
            Some(u2) if dist[u2] == dist[u] + 1 => {
                via.push(r);
                stack.push(u2);
            }
            _ => {}
        }
    }
    false
}

fn check_even_loopless(g: &Graph) -> Result<()> {
    if !g.loops().is_empty() {
        return Err(Error::HasLoops);
    }
    for v in 0..g.n() {
        let d = g.simple_degree(v);
        if d == 0 {
            return Err(Error::IsolatedVertex(v));
        }
        if d % 2 == 1 {
            return Err(Error::OddDegree { vertex: v, degree: d });
        }
    }
    Ok(())
}

/// A spanning 2-regular subgraph of a loopless graph whose degrees are all even and positive.
///
/// Edges are oriented along closed walks, then a perfect matching between out-copies and
/// in-copies picks one outgoing and one incoming arc per vertex. Regular graphs always
/// succeed; irregular ones may have no 2-factor.
pub fn two_factor(g: &Graph) -> Result<EdgeSubset> {
    check_even_loopless(g)?;
    let n = g.n();
    let mut out = vec![Vec::new(); n];
    for (u, v) in eulerian_orientation(g) {
        out[u].push(v);
    }
    let mate = max_bipartite_matching(&out, n);
    let mut edges = Vec::with_capacity(n);
    for (u, m) in mate.into_iter().enumerate() {
        let v = m.ok_or(Error::NoTwoFactor)?;
        edges.push((u.min(v), u.max(v)));
    }
    edges.sort_unstable();
    Ok(EdgeSubset {
        edges,
        kind: SubsetKind::TwoFactor,
    })
}

/// Removes `k` successive 2-factors from a `d`-regular graph with `d` even and `d >= 2k`.
pub fn strip_two_factors(g: &Graph, k: usize) -> Result<Graph> {
    if k == 0 {
        return Ok(g.clone());
    }
    let d = check_regular(g).ok_or(Error::NotRegular)?;
    if d < 2 * k {
        return Err(Error::invalid(format!("cannot strip {k} 2-factors from a {d}-regular graph")));
    }
    let mut h = g.clone();
    for _ in 0..k {
        let f = two_factor(&h)?;
        h = h.remove_edges(&f.edges)?;
    }
    Ok(h)
}
