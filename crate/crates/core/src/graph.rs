//! Finite simple graphs with separately tracked loops, plus the text edge-list format.
//!
//! Format: a header `n <n> loops <k>`, then `k` lines `L <v>`, then one line
//! `u v` (u < v) per edge in ascending lexicographic order. Vertices are
//! 0-indexed, lines end in LF.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::io::{BufRead, Write};

use crate::error::{Error, Result};

/// Per-vertex algebraic label (group element, field coefficients, projective point).
pub type Label = Vec<u64>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    loops: BTreeSet<usize>,
    labels: Option<Vec<Label>>,
    part_sizes: Option<Vec<usize>>,
    absolute_points: Vec<usize>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            loops: BTreeSet::new(),
            labels: None,
            part_sizes: None,
            absolute_points: Vec::new(),
        }
    }

    /// Builds a graph from an edge list; rejects self-pairs, duplicates and out-of-range vertices.
    pub fn from_edges(n: usize, edges: &[(usize, usize)], loops: &[usize]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::invalid(format!("edge ({u},{v}) outside 0..{n}")));
            }
            if u == v {
                return Err(Error::invalid(format!("self-pair ({u},{v}); use the loop set")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::invalid(format!("duplicate edge at vertex {v}")));
            }
        }
        let mut loop_set = BTreeSet::new();
        for &v in loops {
            if v >= n || !loop_set.insert(v) {
                return Err(Error::invalid(format!("bad loop at {v}")));
            }
        }
        Ok(Graph {
            adj,
            loops: loop_set,
            labels: None,
            part_sizes: None,
            absolute_points: Vec::new(),
        })
    }

    /// Builds from neighbour lists that are already symmetric and loop-free.
    pub(crate) fn from_adjacency(mut adj: Vec<Vec<usize>>, loops: BTreeSet<usize>) -> Self {
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        debug_assert!(adj
            .iter()
            .enumerate()
            .all(|(u, l)| l.iter().all(|&v| v != u && adj[v].binary_search(&u).is_ok())));
        Graph {
            adj,
            loops,
            labels: None,
            part_sizes: None,
            absolute_points: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.loops.contains(&v)
    }

    pub fn loops(&self) -> &BTreeSet<usize> {
        &self.loops
    }

    /// Degree with a loop counted as one neighbour.
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len() + usize::from(self.has_loop(v))
    }

    /// Degree ignoring loops.
    pub fn simple_degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n()).map(|v| self.degree(v)).collect()
    }

    pub fn degree_histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for v in 0..self.n() {
            *h.entry(self.degree(v)).or_insert(0) += 1;
        }
        h
    }

    /// Number of non-loop edges.
    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Non-loop edges `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn labels(&self) -> Option<&[Label]> {
        self.labels.as_deref()
    }

    pub fn part_sizes(&self) -> Option<&[usize]> {
        self.part_sizes.as_deref()
    }

    /// Vertices whose self-sum lies in the connection set (degree one less when loops are dropped).
    pub fn absolute_points(&self) -> &[usize] {
        &self.absolute_points
    }

    pub fn with_labels(mut self, labels: Vec<Label>) -> Self {
        assert_eq!(labels.len(), self.n());
        self.labels = Some(labels);
        self
    }

    pub fn with_part_sizes(mut self, parts: Vec<usize>) -> Self {
        assert_eq!(parts.iter().sum::<usize>(), self.n());
        self.part_sizes = Some(parts);
        self
    }

    pub fn with_absolute_points(mut self, mut points: Vec<usize>) -> Self {
        points.sort_unstable();
        points.dedup();
        assert!(points.iter().all(|&v| v < self.n()));
        self.absolute_points = points;
        self
    }

    pub fn without_loops(&self) -> Self {
        let mut g = self.clone();
        g.loops.clear();
        g
    }

    /// Copy with the given edges removed; every edge must be present.
    pub fn remove_edges(&self, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = self.clone();
        for &(u, v) in edges {
            let iu = g.adj[u]
                .binary_search(&v)
                .map_err(|_| Error::invalid(format!("edge ({u},{v}) not present")))?;
            g.adj[u].remove(iu);
            let iv = g.adj[v].binary_search(&u).expect("adjacency is symmetric");
            g.adj[v].remove(iv);
        }
        Ok(g)
    }

    /// Copy with new edges inserted; none may already exist.
    pub fn add_edges(&self, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = self.clone();
        for &(u, v) in edges {
            if u == v || u >= g.n() || v >= g.n() {
                return Err(Error::invalid(format!("cannot add edge ({u},{v})")));
            }
            match g.adj[u].binary_search(&v) {
                Ok(_) => return Err(Error::invalid(format!("edge ({u},{v}) already present"))),
                Err(i) => g.adj[u].insert(i, v),
            }
            let i = g.adj[v].binary_search(&u).unwrap_err();
            g.adj[v].insert(i, u);
        }
        Ok(g)
    }

    /// Induced subgraph on `vertices` (in the given order); labels and loops carried over.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                    .collect()
            })
            .collect();
        let loops = vertices
            .iter()
            .enumerate()
            .filter(|(_, &v)| self.has_loop(v))
            .map(|(i, _)| i)
            .collect();
        let mut g = Graph::from_adjacency(adj, loops);
        if let Some(labels) = &self.labels {
            g.labels = Some(vertices.iter().map(|&v| labels[v].clone()).collect());
        }
        g.absolute_points = self
            .absolute_points
            .iter()
            .filter_map(|&v| (index[v] != usize::MAX).then_some(index[v]))
            .collect();
        g.absolute_points.sort_unstable();
        g
    }

    /// Connected-component index per vertex and the component count.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let mut comp = vec![usize::MAX; self.n()];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..self.n() {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().1 == 1
    }

    /// Dense row-major adjacency matrix with 1 on the diagonal at loops.
    pub fn adjacency_matrix(&self) -> Vec<f64> {
        let n = self.n();
        let mut a = vec![0.0; n * n];
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                a[u * n + v] = 1.0;
            }
        }
        for &v in &self.loops {
            a[v * n + v] = 1.0;
        }
        a
    }

    pub fn write_edge_list<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "n {} loops {}", self.n(), self.loops.len())?;
        for v in &self.loops {
            writeln!(out, "L {v}")?;
        }
        for (u, v) in self.edges() {
            writeln!(out, "{u} {v}")?;
        }
        Ok(())
    }

    pub fn to_edge_list(&self) -> String {
        let mut buf = Vec::new();
        self.write_edge_list(&mut buf).expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("edge list is ASCII")
    }

    pub fn read_edge_list<R: BufRead>(input: R) -> Result<Self> {
        let mut lines = input.lines().enumerate();
        let (_, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            msg: "empty input".into(),
        })?;
        let header = header?;
        let parse_err = |line: usize, msg: &str| Error::Parse {
            line,
            msg: msg.to_string(),
        };
        let fields: Vec<&str> = header.split_whitespace().collect();
        let (n, k) = match fields.as_slice() {
            ["n", n, "loops", k] => (
                n.parse::<usize>().map_err(|_| parse_err(1, "bad vertex count"))?,
                k.parse::<usize>().map_err(|_| parse_err(1, "bad loop count"))?,
            ),
            _ => return Err(parse_err(1, "expected `n <n> loops <k>`")),
        };
        let mut loops = Vec::with_capacity(k);
        let mut edges = Vec::new();
        for (i, line) in lines {
            let line = line?;
            let lineno = i + 1;
            if line.trim().is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            match fields.as_slice() {
                ["L", v] => {
                    if !edges.is_empty() {
                        return Err(parse_err(lineno, "loop line after edge lines"));
                    }
                    let v: usize = v.parse().map_err(|_| parse_err(lineno, "bad loop vertex"))?;
                    loops.push(v);
                }
                [u, v] => {
                    let u: usize = u.parse().map_err(|_| parse_err(lineno, "bad vertex"))?;
                    let v: usize = v.parse().map_err(|_| parse_err(lineno, "bad vertex"))?;
                    if u >= v {
                        return Err(parse_err(lineno, "edge must satisfy u < v"));
                    }
                    edges.push((u, v));
                }
                _ => return Err(parse_err(lineno, "expected `L v` or `u v`")),
            }
        }
        if loops.len() != k {
            return Err(parse_err(1, &format!("header announces {k} loops, found {}", loops.len())));
        }
        Graph::from_edges(n, &edges, &loops).map_err(|e| Error::Parse {
            line: 0,
            msg: e.to_string(),
        })
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph::from_edges(n, &edges, &[]).expect("valid complete graph")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        let edges: Vec<_> = (0..n).map(|u| (u.min((u + 1) % n), u.max((u + 1) % n))).collect();
        Graph::from_edges(n, &edges, &[]).expect("valid cycle")
    }

    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &edges, &[]).expect("valid Petersen graph")
    }
}
