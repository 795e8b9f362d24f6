#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rexlab::graph::Graph;

/// Connected d-regular graph on n vertices (d even, d < n): the circulant with offsets
/// 1..=d/2, scrambled by double-edge swaps that keep it simple and connected.
pub fn random_even_regular(n: usize, d: usize, seed: u64) -> Graph {
    assert!(d % 2 == 0 && d < n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|v| (1..=d / 2).map(move |o| (v, (v + o) % n)))
        .map(|(u, v)| (u.min(v), u.max(v)))
        .collect();
    let mut g = Graph::from_edges(n, &edges, &[]).unwrap();
    for _ in 0..4 * edges.len() {
        let i = rng.gen_range(0..edges.len());
        let j = rng.gen_range(0..edges.len());
        let (a, b) = edges[i];
        let (mut c, mut e) = edges[j];
        if rng.gen_bool(0.5) {
            std::mem::swap(&mut c, &mut e);
        }
        let distinct = [a, b, c, e];
        if i == j || distinct.iter().enumerate().any(|(k, x)| distinct[k + 1..].contains(x)) {
            continue;
        }
        if g.has_edge(a, c) || g.has_edge(b, e) {
            continue;
        }
        let swapped = g
            .remove_edges(&[(a, b), (c.min(e), c.max(e))])
            .unwrap()
            .add_edges(&[(a, c), (b, e)])
            .unwrap();
        if swapped.is_connected() {
            edges[i] = (a.min(c), a.max(c));
            edges[j] = (b.min(e), b.max(e));
            g = swapped;
        }
    }
    g
}

/// `count` seeded (n, d) pairs with n <= max_n, d <= max_d, d even.
pub fn random_shapes(count: usize, max_n: usize, max_d: usize, seed: u64) -> Vec<(usize, usize, u64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let degrees: Vec<usize> = (2..=max_d).step_by(2).collect();
    (0..count)
        .map(|i| {
            let d = *degrees.choose(&mut rng).unwrap();
            let n = rng.gen_range(d + 1..=max_n);
            (n, d, seed.wrapping_mul(31).wrapping_add(i as u64))
        })
        .collect()
}

/// Number of common neighbours of every s-subset, maximized; written independently of the
/// library's bitset scan.
pub fn naive_max_codegree(g: &Graph, s: usize) -> usize {
    fn rec(g: &Graph, s: usize, start: usize, common: &[usize], best: &mut usize) {
        if s == 0 {
            *best = (*best).max(common.len());
            return;
        }
        for v in start..g.n() {
            let next: Vec<usize> = common.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
            if next.len() > *best {
                rec(g, s - 1, v + 1, &next, best);
            }
        }
    }
    let all: Vec<usize> = (0..g.n()).collect();
    let mut best = 0;
    rec(g, s, 0, &all, &mut best);
    best
}
