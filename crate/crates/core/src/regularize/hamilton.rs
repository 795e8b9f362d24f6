use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::factors::{EdgeSubset, SubsetKind};
use crate::graph::Graph;

pub const DEFAULT_HAMILTON_BUDGET: u64 = 10_000_000;

struct Budget {
    left: u64,
}

impl Budget {
    fn charge(&mut self) -> bool {
        if self.left == 0 {
            return false;
        }
        self.left -= 1;
        true
    }
}

fn as_subset(order: &[usize]) -> EdgeSubset {
    let n = order.len();
    EdgeSubset {
        edges: (0..n).map(|i| (order[i], order[(i + 1) % n])).collect(),
        kind: SubsetKind::HamiltonCycle,
    }
}

/// Randomized rotation–extension: extend from the tail while possible, otherwise
/// rotate the path at a random tail neighbour to expose a new tail.
fn rotation_extension(g: &Graph, rng: &mut ChaCha8Rng, budget: &mut Budget, limit: u64) -> Option<Vec<usize>> {
    let n = g.n();
    let restart_every = 20 * (n as u64) * (n as u64);
    let mut spent = 0u64;
    while spent < limit {
        let mut path = vec![rng.gen_range(0..n)];
        let mut pos = vec![usize::MAX; n];
        pos[path[0]] = 0;
        let mut steps = 0u64;
        while steps < restart_every && spent < limit {
            if !budget.charge() {
                return None;
            }
            steps += 1;
            spent += 1;
            let tail = *path.last().expect("nonempty");
            if path.len() == n && g.has_edge(tail, path[0]) {
                return Some(path);
            }
            let fresh: Vec<usize> = g.neighbors(tail).iter().copied().filter(|&w| pos[w] == usize::MAX).collect();
            if let Some(&w) = fresh.choose(rng) {
                pos[w] = path.len();
                path.push(w);
                continue;
            }
            let pivots: Vec<usize> = g
                .neighbors(tail)
                .iter()
                .map(|&w| pos[w])
                .filter(|&i| i + 2 < path.len())
                .collect();
            let Some(&i) = pivots.choose(rng) else {
                break;
            };
            path[i + 1..].reverse();
            for (j, &v) in path.iter().enumerate().skip(i + 1) {
                pos[v] = j;
            }
        }
    }
    None
}

/// Exhaustive depth-first search from vertex 0, trying low-residual-degree vertices first.
/// Branches are cut when the start loses every unvisited neighbour or some unvisited
/// vertex can no longer be entered and left.
struct Exhaustive<'a> {
    g: &'a Graph,
    visited: Vec<bool>,
    residual: Vec<usize>,
    path: Vec<usize>,
}

enum Outcome {
    Found,
    Exhausted,
    OutOfBudget,
}

impl Exhaustive<'_> {
    fn visit(&mut self, v: usize) {
        self.visited[v] = true;
        self.path.push(v);
        for &w in self.g.neighbors(v) {
            self.residual[w] -= 1;
        }
    }

    fn leave(&mut self, v: usize) {
        self.visited[v] = false;
        self.path.pop();
        for &w in self.g.neighbors(v) {
            self.residual[w] += 1;
        }
    }

    fn hopeless(&self) -> bool {
        let n = self.g.n();
        let start = self.path[0];
        let tail = *self.path.last().expect("nonempty");
        if self.path.len() < n && self.residual[start] == 0 {
            return true;
        }
        (0..n).any(|u| {
            !self.visited[u] && {
                let ends = usize::from(self.g.has_edge(u, tail)) + usize::from(self.g.has_edge(u, start));
                self.residual[u] + ends < 2
            }
        })
    }

    fn search(&mut self, budget: &mut Budget) -> Outcome {
        if !budget.charge() {
            return Outcome::OutOfBudget;
        }
        let n = self.g.n();
        let tail = *self.path.last().expect("nonempty");
        if self.path.len() == n {
            return if self.g.has_edge(tail, self.path[0]) {
                Outcome::Found
            } else {
                Outcome::Exhausted
            };
        }
        if self.hopeless() {
            return Outcome::Exhausted;
        }
        let mut next: Vec<usize> = self.g.neighbors(tail).iter().copied().filter(|&w| !self.visited[w]).collect();
        next.sort_by_key(|&w| (self.residual[w], w));
        for w in next {
            self.visit(w);
            match self.search(budget) {
                Outcome::Exhausted => self.leave(w),
                other => return other,
            }
        }
        Outcome::Exhausted
    }
}

/// Searches for a Hamilton cycle (loops ignored). Returns `None` when no cycle exists or
/// when `budget` node expansions run out first; the seed fixes the answer.
pub fn hamilton_cycle(g: &Graph, budget: u64, seed: u64) -> Option<EdgeSubset> {
    let n = g.n();
    if n < 3 || !g.is_connected() || (0..n).any(|v| g.simple_degree(v) < 2) {
        return None;
    }
    let mut budget = Budget { left: budget };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let phase_a = (budget.left / 2).min(1000 * (n as u64) * (n as u64));
    if let Some(path) = rotation_extension(g, &mut rng, &mut budget, phase_a) {
        return Some(as_subset(&path));
    }
    let mut search = Exhaustive {
        g,
        visited: vec![false; n],
        residual: (0..n).map(|v| g.simple_degree(v)).collect(),
        path: Vec::with_capacity(n),
    };
    search.visit(0);
    match search.search(&mut budget) {
        Outcome::Found => Some(as_subset(&search.path)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::norm_graph;

    #[test]
    fn cycles_and_cliques() {
        for n in 3..=12 {
            let c = Graph::cycle(n);
            assert!(hamilton_cycle(&c, DEFAULT_HAMILTON_BUDGET, 1).unwrap().is_valid_for(&c));
            let k = Graph::complete(n);
            assert!(hamilton_cycle(&k, DEFAULT_HAMILTON_BUDGET, 1).unwrap().is_valid_for(&k));
        }
    }

    #[test]
    fn petersen_has_none() {
        assert!(hamilton_cycle(&Graph::petersen(), DEFAULT_HAMILTON_BUDGET, 7).is_none());
    }

    #[test]
    fn exhaustive_phase_alone_decides_petersen() {
        let g = Graph::petersen();
        let mut search = Exhaustive {
            g: &g,
            visited: vec![false; 10],
            residual: vec![3; 10],
            path: Vec::new(),
        };
        search.visit(0);
        let mut budget = Budget { left: 1_000_000 };
        assert!(matches!(search.search(&mut budget), Outcome::Exhausted));
        assert!(budget.left > 0);
    }

    #[test]
    fn norm_graph_is_hamiltonian() {
        let g = norm_graph(3, 3, false).unwrap();
        let c = hamilton_cycle(&g, DEFAULT_HAMILTON_BUDGET, 0).unwrap();
        assert!(c.is_valid_for(&g));
        assert_eq!(c, hamilton_cycle(&g, DEFAULT_HAMILTON_BUDGET, 0).unwrap());
    }

    #[test]
    fn degenerate_inputs() {
        assert!(hamilton_cycle(&Graph::complete(2), 100, 0).is_none());
        let two_triangles = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)], &[]).unwrap();
        assert!(hamilton_cycle(&two_triangles, 100, 0).is_none());
        assert!(hamilton_cycle(&Graph::cycle(30), 0, 0).is_none());
    }
}
