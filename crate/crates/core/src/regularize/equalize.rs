use serde::Serialize;

use super::factors::{EdgeSubset, SubsetKind};
use super::hamilton::hamilton_cycle;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    /// Remove `k` Hamilton cycles.
    A,
    /// Remove `k - 1` Hamilton cycles, then a near-perfect matching that misses one absolute point.
    B,
}

#[derive(Debug, Clone)]
pub struct EqualizedComponent {
    pub graph: Graph,
    /// Ascending.
    pub min_degree_vertices: Vec<usize>,
    pub cycles_removed: usize,
    /// Edges in the removed matching (variant b only).
    pub matching_removed: usize,
    /// The absolute point left out of the matching (variant b only).
    pub skipped_vertex: Option<usize>,
}

/// Spanning subgraph of a loopless norm graph with two adjacent degrees.
///
/// With `D = (q^s - 1)/(q - 1)`: variant a leaves the `D` absolute points at `D - 2k - 1`
/// and everything else at `D - 2k`; variant b (odd vertex count) leaves `D - 1` absolute
/// points at `D - 2k` and the rest at `D - 2k + 1`. Cycle `i` is searched with seed `seed + i`.
pub fn equalize_norm_component(
    norm: &Graph,
    k: usize,
    variant: Variant,
    budget: u64,
    seed: u64,
) -> Result<EqualizedComponent> {
    if !norm.loops().is_empty() {
        return Err(Error::HasLoops);
    }
    let absolute = norm.absolute_points().to_vec();
    if absolute.is_empty() {
        return Err(Error::invalid("norm graph has no recorded absolute points"));
    }
    if k == 0 {
        return Err(Error::invalid("k must be at least 1"));
    }
    let n = norm.n();
    if variant == Variant::B && n % 2 == 0 {
        return Err(Error::invalid("variant b needs an odd vertex count"));
    }
    let d = (0..n).map(|v| norm.degree(v)).max().unwrap_or(0);
    let floor = match variant {
        Variant::A => d as i64 - 2 * k as i64 - 1,
        Variant::B => d as i64 - 2 * k as i64,
    };
    if floor < 0 {
        return Err(Error::invalid(format!("k = {k} would push degrees below zero (D = {d})")));
    }

    let cycles = match variant {
        Variant::A => k,
        Variant::B => k - 1,
    };
    let mut g = norm.clone();
    for i in 0..cycles {
        let c = hamilton_cycle(&g, budget, seed.wrapping_add(i as u64)).ok_or(Error::HamiltonBudget(budget))?;
        g = g.remove_edges(&c.edges)?;
    }
    match variant {
        Variant::A => Ok(EqualizedComponent {
            graph: g,
            min_degree_vertices: absolute,
            cycles_removed: cycles,
            matching_removed: 0,
            skipped_vertex: None,
        }),
        Variant::B => {
            let c = hamilton_cycle(&g, budget, seed.wrapping_add(cycles as u64)).ok_or(Error::HamiltonBudget(budget))?;
            let skip = absolute[0];
            let order: Vec<usize> = c.edges.iter().map(|&(u, _)| u).collect();
            let at = order.iter().position(|&v| v == skip).expect("cycle is spanning");
            let rotated: Vec<usize> = order[at..].iter().chain(&order[..at]).copied().collect();
            let matching: Vec<(usize, usize)> = rotated[1..].chunks(2).map(|p| (p[0], p[1])).collect();
            let g = g.remove_edges(&matching)?;
            Ok(EqualizedComponent {
                graph: g,
                min_degree_vertices: absolute[1..].to_vec(),
                cycles_removed: cycles,
                matching_removed: matching.len(),
                skipped_vertex: Some(skip),
            })
        }
    }
}

/// Perfect matching on the union of `groups` with every edge joining two different groups.
///
/// Needs at least three groups, an even total and the largest group smaller than the
/// rest combined. Each step pairs the next vertex of the currently largest group with
/// the next vertex of the second largest (ties to the lower group index).
pub fn cross_matching(groups: &[Vec<usize>]) -> Result<EdgeSubset> {
    let sizes: Vec<usize> = groups.iter().map(Vec::len).collect();
    if groups.len() < 3 {
        return Err(Error::MatchingInfeasible(format!("need at least 3 groups, got {}", groups.len())));
    }
    let total: usize = sizes.iter().sum();
    if total % 2 == 1 {
        return Err(Error::MatchingInfeasible(format!("odd total {total}")));
    }
    let largest = *sizes.iter().max().expect("nonempty");
    if largest >= total - largest {
        return Err(Error::MatchingInfeasible(format!(
            "largest group {largest} >= {} (sum of the others) for sizes {sizes:?}",
            total - largest
        )));
    }
    let mut next = vec![0usize; groups.len()];
    let mut edges = Vec::with_capacity(total / 2);
    for _ in 0..total / 2 {
        let mut order: Vec<usize> = (0..groups.len()).collect();
        order.sort_by_key(|&i| (std::cmp::Reverse(sizes[i] - next[i]), i));
        let (a, b) = (order[0], order[1]);
        let u = groups[a][next[a]];
        let v = groups[b][next[b]];
        next[a] += 1;
        next[b] += 1;
        edges.push((u.min(v), u.max(v)));
    }
    Ok(EdgeSubset {
        edges,
        kind: SubsetKind::Matching,
    })
}
