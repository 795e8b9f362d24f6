//! Builders for the algebraic F-free graph families.
//!
//! Every builder enumerates vertices in label order, so two builds with the
//! same parameters produce identical edge lists. None of them certify
//! freeness themselves; that is the job of [`crate::verify`].

mod bipartite;
mod brown;
mod cayley;
mod norm;
mod polarity;
mod ruzsa;

pub use bipartite::bipartite_sum;
pub use brown::{brown, brown_alpha, MAX_BROWN_PRIME};
pub use cayley::{cayley_sum, AbelianGroup};
pub use norm::{norm_graph, norm_graph_connection_set, norm_graph_degree, MAX_NORM_VERTICES};
pub use polarity::{er_polarity, PolarityGraphs};
pub use ruzsa::{h_graph, h_star};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Disjoint union; `part_sizes` records the component boundaries, labels and
/// absolute points are carried over with vertex offsets.
pub fn disjoint_union(graphs: &[Graph]) -> Result<Graph> {
    match graphs {
        [] => Err(Error::invalid("disjoint union of no graphs")),
        [g] => Ok(g.clone()),
        _ => {
            let total: usize = graphs.iter().map(Graph::n).sum();
            let mut edges = Vec::new();
            let mut loops = Vec::new();
            let mut absolute = Vec::new();
            let any_labels = graphs.iter().any(|g| g.labels().is_some());
            let mut labels = Vec::with_capacity(if any_labels { total } else { 0 });
            let mut offset = 0;
            for g in graphs {
                edges.extend(g.edges().map(|(u, v)| (u + offset, v + offset)));
                loops.extend(g.loops().iter().map(|&v| v + offset));
                absolute.extend(g.absolute_points().iter().map(|&v| v + offset));
                if any_labels {
                    match g.labels() {
                        Some(l) => labels.extend_from_slice(l),
                        None => labels.extend(std::iter::repeat(Vec::new()).take(g.n())),
                    }
                }
                offset += g.n();
            }
            let mut out = Graph::from_edges(total, &edges, &loops)?
                .with_part_sizes(graphs.iter().map(Graph::n).collect())
                .with_absolute_points(absolute);
            if any_labels {
                out = out.with_labels(labels);
            }
            Ok(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    #[test]
    fn union_of_one_is_identity() {
        let g = Graph::cycle(5);
        assert_eq!(disjoint_union(std::slice::from_ref(&g)).unwrap(), g);
        assert!(disjoint_union(&[]).is_err());
    }

    #[test]
    fn two_triangles() {
        let k3 = Graph::complete(3);
        let u = disjoint_union(&[k3.clone(), k3]).unwrap();
        assert_eq!(u.n(), 6);
        assert_eq!(u.edge_count(), 6);
        assert_eq!(u.components().1, 2);
        assert_eq!(u.part_sizes(), Some(&[3, 3][..]));
    }

    #[test]
    fn two_brown_graphs() {
        let b = brown(3).unwrap();
        let u = disjoint_union(&[b.clone(), b]).unwrap();
        assert_eq!(u.n(), 54);
        assert_eq!(u.degree_histogram(), BTreeMap::from([(6, 54)]));
        assert_eq!(u.labels().unwrap()[27], vec![0, 0, 0]);
    }

    #[test]
    fn absolute_points_shift() {
        let a = norm_graph(3, 2, false).unwrap();
        let u = disjoint_union(&[a.clone(), a.clone()]).unwrap();
        let expected: Vec<usize> = a
            .absolute_points()
            .iter()
            .copied()
            .chain(a.absolute_points().iter().map(|&v| v + 9))
            .collect();
        assert_eq!(u.absolute_points(), &expected[..]);
    }
}
