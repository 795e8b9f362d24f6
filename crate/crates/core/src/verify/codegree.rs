use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Exhaustive scans over s-sets with s ≥ 4 are only attempted up to this many vertices.
pub const LARGE_S_VERTEX_CAP: usize = 64;

type Bits = Vec<u64>;

fn words(n: usize) -> usize {
    n.div_ceil(64)
}

fn neighbourhoods(g: &Graph) -> Vec<Bits> {
    let w = words(g.n());
    (0..g.n())
        .map(|v| {
            let mut b = vec![0u64; w];
            for &u in g.neighbors(v) {
                b[u / 64] |= 1 << (u % 64);
            }
            b
        })
        .collect()
}

fn popcount(b: &[u64]) -> usize {
    b.iter().map(|w| w.count_ones() as usize).sum()
}

fn intersect(a: &[u64], b: &[u64]) -> Bits {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

fn bit_indices(b: &[u64]) -> impl Iterator<Item = usize> + '_ {
    b.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            (w != 0).then(|| {
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                i * 64 + bit
            })
        })
    })
}

struct Scan<'a> {
    nbhd: &'a [Bits],
    s: usize,
    best: &'a AtomicUsize,
    // set once some s-set reaches this codegree
    stop_at: Option<usize>,
    stop: &'a AtomicBool,
}

impl Scan<'_> {
    /// `common` is the intersection of the chosen vertices' neighbourhoods; it is
    /// nonempty, so any further vertex worth adding is a neighbour of some member.
    fn extend(&self, last: usize, depth: usize, common: &[u64]) {
        if self.stop.load(Ordering::Relaxed) {
            return;
        }
        if depth == self.s {
            let c = popcount(common);
            self.best.fetch_max(c, Ordering::Relaxed);
            if self.stop_at.is_some_and(|t| c >= t) {
                self.stop.store(true, Ordering::Relaxed);
            }
            return;
        }
        let mut reach = vec![0u64; common.len()];
        for w in bit_indices(common) {
            for (r, x) in reach.iter_mut().zip(&self.nbhd[w]) {
                *r |= x;
            }
        }
        for v in bit_indices(&reach).filter(|&v| v > last) {
            let next = intersect(common, &self.nbhd[v]);
            if next.iter().any(|&x| x != 0) {
                self.extend(v, depth + 1, &next);
            }
        }
    }
}

fn scan(g: &Graph, s: usize, stop_at: Option<usize>) -> Result<usize> {
    if s == 0 {
        return Err(Error::invalid("codegree needs s >= 1"));
    }
    if s >= 4 && g.n() > LARGE_S_VERTEX_CAP {
        return Err(Error::GuardTripped { s, n: g.n() });
    }
    if s > g.n() {
        return Ok(0);
    }
    let nbhd = neighbourhoods(g);
    let best = AtomicUsize::new(0);
    let stop = AtomicBool::new(false);
    let job = Scan {
        nbhd: &nbhd,
        s,
        best: &best,
        stop_at,
        stop: &stop,
    };
    (0..g.n()).into_par_iter().for_each(|v| {
        if nbhd[v].iter().any(|&x| x != 0) {
            job.extend(v, 1, &nbhd[v]);
        }
    });
    Ok(best.into_inner())
}

/// Largest number of common neighbours of any `s` distinct vertices; loops never count.
///
/// `G` is K_{s,t}-free iff the result is at most `t - 1`.
pub fn max_codegree(g: &Graph, s: usize) -> Result<usize> {
    scan(g, s, None)
}

/// K_{s,t}-freeness, stopping at the first s-set with `t` common neighbours.
pub fn is_kst_free(g: &Graph, s: usize, t: usize) -> Result<bool> {
    if t == 0 {
        return Ok(false);
    }
    Ok(scan(g, s, Some(t))? < t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{brown, disjoint_union};
    use proptest::prelude::*;

    fn subsets(n: usize, s: usize) -> Vec<Vec<usize>> {
        if s == 0 {
            return vec![vec![]];
        }
        (0..n)
            .flat_map(|last| {
                subsets(last, s - 1).into_iter().map(move |mut v| {
                    v.push(last);
                    v
                })
            })
            .collect()
    }

    // brute force over all s-subsets and all candidate common neighbours
    fn naive(g: &Graph, s: usize) -> usize {
        subsets(g.n(), s)
            .iter()
            .map(|set| {
                (0..g.n())
                    .filter(|&w| set.iter().all(|&v| g.has_edge(v, w)))
                    .count()
            })
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn small_examples() {
        assert_eq!(max_codegree(&Graph::complete(4), 2).unwrap(), 2);
        assert_eq!(max_codegree(&Graph::cycle(5), 2).unwrap(), 1);
        assert_eq!(max_codegree(&Graph::cycle(4), 2).unwrap(), 2);
        assert_eq!(max_codegree(&Graph::petersen(), 2).unwrap(), 1);
        assert_eq!(max_codegree(&Graph::complete(5), 1).unwrap(), 4);
        assert_eq!(max_codegree(&Graph::empty(3), 2).unwrap(), 0);
        assert!(is_kst_free(&Graph::cycle(5), 2, 2).unwrap());
        assert!(!is_kst_free(&Graph::complete(4), 2, 2).unwrap());
    }

    #[test]
    fn loops_are_not_common_neighbours() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)], &[0, 2]).unwrap();
        assert_eq!(max_codegree(&g, 2).unwrap(), 1);
    }

    #[test]
    fn brown3_triples() {
        let g = brown(3).unwrap();
        assert_eq!(max_codegree(&g, 3).unwrap(), naive(&g, 3));
        assert!(max_codegree(&g, 3).unwrap() <= 2);
    }

    #[test]
    fn guard() {
        let big = disjoint_union(&[Graph::complete(40), Graph::complete(40)]).unwrap();
        assert!(matches!(max_codegree(&big, 4), Err(Error::GuardTripped { s: 4, n: 80 })));
        assert_eq!(max_codegree(&Graph::complete(10), 4).unwrap(), 6);
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (2usize..14).prop_flat_map(|n| {
            proptest::collection::vec(proptest::bool::weighted(0.4), n * (n - 1) / 2).prop_map(move |bits| {
                let pairs: Vec<(usize, usize)> = (0..n)
                    .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                    .zip(bits)
                    .filter_map(|(e, b)| b.then_some(e))
                    .collect();
                Graph::from_edges(n, &pairs, &[]).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn agrees_with_naive(g in arb_graph(), s in 1usize..5) {
            prop_assert_eq!(max_codegree(&g, s).unwrap(), naive(&g, s));
        }

        #[test]
        fn freeness_matches_codegree(g in arb_graph(), s in 1usize..4, t in 1usize..5) {
            prop_assert_eq!(is_kst_free(&g, s, t).unwrap(), max_codegree(&g, s).unwrap() < t);
        }
    }
}
