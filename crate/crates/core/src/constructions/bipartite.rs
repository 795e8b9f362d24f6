use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::numtheory::DifferenceSet;

/// M×M bipartite sum graph: `x ∈ X = Z_M` is joined to `y ∈ Y = Z_M` iff `x + y ≡ a (mod M)`
/// for some `a ∈ A`.
///
/// `A` must be drawn from `provenance`, whose modulus must fit in the lower half of Z_M.
/// Residues are embedded as integers in `1..=modulus` (0 is represented by `modulus`) so
/// that sums of two elements never wrap modulo M. Vertices `0..M` form X, `M..2M` form Y.
pub fn bipartite_sum(m: u64, subset: &[u64], provenance: &DifferenceSet) -> Result<Graph> {
    if provenance.modulus() > m / 2 {
        return Err(Error::invalid(format!(
            "difference-set modulus {} exceeds floor(M/2) = {}",
            provenance.modulus(),
            m / 2
        )));
    }
    let mut embedded = Vec::with_capacity(subset.len());
    for &a in subset {
        if provenance.elements().binary_search(&a).is_err() {
            return Err(Error::invalid(format!("{a} is not an element of the difference set")));
        }
        embedded.push(if a == 0 { provenance.modulus() } else { a });
    }
    embedded.sort_unstable();
    if embedded.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::invalid("repeated element in A"));
    }

    let mu = m as usize;
    let mut adj = vec![Vec::with_capacity(embedded.len()); 2 * mu];
    for x in 0..mu {
        for &a in &embedded {
            let y = (a as usize + mu - x % mu) % mu;
            adj[x].push(mu + y);
            adj[mu + y].push(x);
        }
    }
    let labels = (0..2 * mu)
        .map(|v| vec![(v / mu) as u64, (v % mu) as u64])
        .collect();
    Ok(Graph::from_adjacency(adj, Default::default())
        .with_labels(labels)
        .with_part_sizes(vec![mu, mu]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::gf;
    use crate::numtheory::{bose_chowla, quotient_set};
    use std::collections::BTreeMap;

    // pair codegree by direct neighbourhood intersection
    fn max_pair_codegree(g: &Graph) -> usize {
        let mut best = 0;
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                let c = g.neighbors(u).iter().filter(|w| g.has_edge(v, **w)).count();
                best = best.max(c);
            }
        }
        best
    }

    #[test]
    fn c4_free_from_bose_chowla() {
        let a = bose_chowla(3, &gf(3, 2).unwrap()).unwrap();
        let g = bipartite_sum(30, a.elements(), &a).unwrap();
        assert_eq!(g.n(), 60);
        assert_eq!(g.degree_histogram(), BTreeMap::from([(3, 60)]));
        assert!(max_pair_codegree(&g) <= 1);
        assert_eq!(g.part_sizes(), Some(&[30, 30][..]));
    }

    #[test]
    fn single_element_is_a_matching() {
        let a = bose_chowla(2, &gf(2, 2).unwrap()).unwrap();
        assert!(a.elements().contains(&1));
        let g = bipartite_sum(10, &[1], &a).unwrap();
        assert_eq!(g.n(), 20);
        assert_eq!(g.edge_count(), 10);
        assert_eq!(g.degree_histogram(), BTreeMap::from([(1, 20)]));
    }

    #[test]
    fn k25_free_from_quotient_subset() {
        let a = quotient_set(13, 2, &gf(13, 2).unwrap()).unwrap();
        assert_eq!(a.modulus(), 84);
        let g = bipartite_sum(168, &a.elements()[..12], &a).unwrap();
        assert_eq!(g.n(), 336);
        assert_eq!(g.degree_histogram(), BTreeMap::from([(12, 336)]));
        assert!(max_pair_codegree(&g) <= 4);
    }

    #[test]
    fn zero_residue_is_embedded_at_the_modulus() {
        let a = DifferenceSet::certify(vec![0, 1, 3], 7, 1).unwrap();
        let g = bipartite_sum(14, a.elements(), &a).unwrap();
        assert!(max_pair_codegree(&g) <= 1);
        // x = 0 meets 7, 1, 3 on the Y side
        assert_eq!(g.neighbors(0), &[14 + 1, 14 + 3, 14 + 7]);
    }

    #[test]
    fn preconditions() {
        let a = bose_chowla(3, &gf(3, 2).unwrap()).unwrap();
        assert!(bipartite_sum(15, a.elements(), &a).is_err());
        let outside = (0..8).find(|x| !a.elements().contains(x)).unwrap();
        assert!(bipartite_sum(30, &[outside], &a).is_err());
    }
}
