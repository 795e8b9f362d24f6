use super::cayley::{cayley_sum, AbelianGroup};
use crate::algebra::gf;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::numtheory::is_prime;

pub const MAX_NORM_VERTICES: u64 = 2000;

/// `(p^s - 1)/(p - 1)`: the size of the norm-one set, hence the loop-inclusive degree.
pub fn norm_graph_degree(p: u64, s: u32) -> u64 {
    (p.pow(s) - 1) / (p - 1)
}

/// The additive group of GF(p^s) as Z_p^s together with the indices of the
/// norm-one elements. Group indices coincide with field-element indices.
pub fn norm_graph_connection_set(p: u64, s: u32) -> Result<(AbelianGroup, Vec<usize>)> {
    if p == 2 || !is_prime(p) {
        return Err(Error::invalid(format!("norm graphs need an odd prime, got {p}")));
    }
    if !(2..=3).contains(&s) {
        return Err(Error::invalid(format!("norm graphs are built for s in 2..=3, got {s}")));
    }
    if p.pow(s) > MAX_NORM_VERTICES {
        return Err(Error::invalid(format!(
            "{p}^{s} exceeds the cap of {MAX_NORM_VERTICES} vertices"
        )));
    }
    let field = gf(p, s)?;
    let one = field.one();
    let mut connection = Vec::new();
    for a in field.elements() {
        if field.norm(s, a)? == one {
            connection.push(a.index());
        }
    }
    Ok((AbelianGroup::new(vec![p; s as usize])?, connection))
}

/// Norm graph on GF(p^s): `a ~ b` iff `N(a + b) = 1`, with N the norm onto GF(p).
///
/// Absolute points (`N(2a) = 1`) are recorded; with `with_loops` they also carry loops.
/// Labels are the polynomial-basis coefficients `[c_0, …, c_{s-1}]`.
pub fn norm_graph(p: u64, s: u32, with_loops: bool) -> Result<Graph> {
    let (group, connection) = norm_graph_connection_set(p, s)?;
    let field = gf(p, s)?;
    let g = cayley_sum(&group, &connection, with_loops)?;
    let labels = field.elements().map(|a| field.coeffs(a)).collect();
    Ok(g.with_labels(labels))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    #[test]
    fn group_and_field_addition_agree() {
        let f = gf(5, 3).unwrap();
        let (group, _) = norm_graph_connection_set(5, 3).unwrap();
        for a in f.elements().step_by(7) {
            for b in f.elements().step_by(11) {
                assert_eq!(f.add(a, b).index(), group.add(a.index(), b.index()));
            }
        }
    }

    #[test]
    fn q3_s2() {
        let g = norm_graph(3, 2, false).unwrap();
        assert_eq!(g.n(), 9);
        assert_eq!(g.absolute_points().len(), 4);
        assert_eq!(g.degree_histogram(), BTreeMap::from([(3, 4), (4, 5)]));
        for &v in g.absolute_points() {
            assert_eq!(g.degree(v), 3);
        }
    }

    #[test]
    fn q3_s3() {
        let g = norm_graph(3, 3, false).unwrap();
        assert_eq!(g.n(), 27);
        assert_eq!(g.absolute_points().len(), 13);
        assert_eq!(g.degree_histogram(), BTreeMap::from([(12, 13), (13, 14)]));
        let looped = norm_graph(3, 3, true).unwrap();
        assert_eq!(looped.loops().len(), 13);
        assert_eq!(looped.degree_histogram(), BTreeMap::from([(13, 27)]));
    }

    #[test]
    fn q5_s2() {
        let g = norm_graph(5, 2, false).unwrap();
        assert_eq!(g.n(), 25);
        assert_eq!(g.absolute_points().len(), 6);
        assert_eq!(g.degree_histogram(), BTreeMap::from([(5, 6), (6, 19)]));
    }

    #[test]
    fn absolute_point_counts() {
        for &(p, s) in &[(3u64, 2u32), (5, 2), (7, 2), (11, 2), (3, 3), (5, 3), (7, 3)] {
            let g = norm_graph(p, s, false).unwrap();
            assert_eq!(g.absolute_points().len() as u64, norm_graph_degree(p, s));
            let f = gf(p, s).unwrap();
            let two = f.constant(2);
            for a in f.elements() {
                let abs = f.norm(s, f.mul(two, a)).unwrap() == f.one();
                assert_eq!(abs, g.absolute_points().binary_search(&a.index()).is_ok());
            }
        }
    }

    #[test]
    fn rejected_parameters() {
        assert!(norm_graph(2, 3, false).is_err());
        assert!(norm_graph(3, 4, false).is_err());
        assert!(norm_graph(13, 3, false).is_err());
        assert!(norm_graph(9, 2, false).is_err());
    }
}
