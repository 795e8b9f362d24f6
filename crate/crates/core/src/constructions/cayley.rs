use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Z_{m_1} × … × Z_{m_r}. Elements are addressed by their mixed-radix index
/// with the first component most significant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AbelianGroup {
    orders: Vec<u64>,
}

const MAX_GROUP_ORDER: u64 = 50_000_000;

impl AbelianGroup {
    pub fn new(orders: Vec<u64>) -> Result<Self> {
        if orders.is_empty() || orders.contains(&0) {
            return Err(Error::invalid("cyclic orders must be positive"));
        }
        let total = orders
            .iter()
            .try_fold(1u64, |acc, &m| acc.checked_mul(m))
            .filter(|&t| t <= MAX_GROUP_ORDER)
            .ok_or_else(|| Error::invalid("group too large"))?;
        debug_assert!(total >= 1);
        Ok(AbelianGroup { orders })
    }

    pub fn cyclic_orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn order(&self) -> usize {
        self.orders.iter().product::<u64>() as usize
    }

    pub fn element(&self, index: usize) -> Vec<u64> {
        let mut v = index as u64;
        let mut out = vec![0; self.orders.len()];
        for (slot, &m) in out.iter_mut().zip(&self.orders).rev() {
            *slot = v % m;
            v /= m;
        }
        out
    }

    pub fn index_of(&self, tuple: &[u64]) -> Result<usize> {
        if tuple.len() != self.orders.len() {
            return Err(Error::invalid(format!("expected {} components", self.orders.len())));
        }
        let mut idx = 0u64;
        for (&x, &m) in tuple.iter().zip(&self.orders) {
            if x >= m {
                return Err(Error::invalid(format!("component {x} outside Z_{m}")));
            }
            idx = idx * m + x;
        }
        Ok(idx as usize)
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.combine(a, b, |x, y, m| (x + y) % m)
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.combine(a, b, |x, y, m| (x + m - y) % m)
    }

    fn combine(&self, a: usize, b: usize, op: impl Fn(u64, u64, u64) -> u64) -> usize {
        let (mut x, mut y) = (a as u64, b as u64);
        let mut out = 0u64;
        let mut scale = 1u64;
        for &m in self.orders.iter().rev() {
            out += op(x % m, y % m, m) * scale;
            scale *= m;
            x /= m;
            y /= m;
        }
        out as usize
    }
}

/// Cayley sum graph: `x ~ y` (x ≠ y) iff `x + y ∈ S`; `x` carries a loop iff `2x ∈ S` and `keep_loops`.
///
/// Vertices with `2x ∈ S` are recorded as absolute points whether or not the loops are kept.
pub fn cayley_sum(group: &AbelianGroup, connection: &[usize], keep_loops: bool) -> Result<Graph> {
    let n = group.order();
    if let Some(&bad) = connection.iter().find(|&&s| s >= n) {
        return Err(Error::invalid(format!("connection element {bad} outside the group")));
    }
    let set: BTreeSet<usize> = connection.iter().copied().collect();
    let mut adj = vec![Vec::with_capacity(set.len()); n];
    let mut absolute = Vec::new();
    for (x, list) in adj.iter_mut().enumerate() {
        for &s in &set {
            let y = group.sub(s, x);
            if y == x {
                absolute.push(x);
            } else {
                list.push(y);
            }
        }
    }
    let loops = if keep_loops {
        absolute.iter().copied().collect()
    } else {
        BTreeSet::new()
    };
    let labels = (0..n).map(|i| group.element(i)).collect();
    Ok(Graph::from_adjacency(adj, loops)
        .with_labels(labels)
        .with_absolute_points(absolute))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn z4_matching() {
        let g = AbelianGroup::new(vec![4]).unwrap();
        let c = cayley_sum(&g, &[1], true).unwrap();
        assert_eq!(c.edges().collect::<Vec<_>>(), vec![(0, 1), (2, 3)]);
        assert!(c.loops().is_empty());
        assert!(c.degrees().iter().all(|&d| d == 1));
    }

    #[test]
    fn z5_zero_connection() {
        let g = AbelianGroup::new(vec![5]).unwrap();
        let c = cayley_sum(&g, &[0], true).unwrap();
        assert_eq!(c.loops().iter().copied().collect::<Vec<_>>(), vec![0]);
        assert_eq!(c.edges().collect::<Vec<_>>(), vec![(1, 4), (2, 3)]);
    }

    #[test]
    fn empty_connection() {
        let g = AbelianGroup::new(vec![3, 4]).unwrap();
        let c = cayley_sum(&g, &[], true).unwrap();
        assert_eq!(c.n(), 12);
        assert_eq!(c.edge_count(), 0);
    }

    #[test]
    fn group_indexing() {
        let g = AbelianGroup::new(vec![3, 5]).unwrap();
        assert_eq!(g.element(7), vec![1, 2]);
        assert_eq!(g.index_of(&[1, 2]).unwrap(), 7);
        assert!(g.index_of(&[3, 0]).is_err());
        assert_eq!(g.element(g.add(7, 13)), vec![(1 + 2) % 3, (2 + 3) % 5]);
        assert!(AbelianGroup::new(vec![0]).is_err());
    }

    proptest! {
        #[test]
        fn loop_inclusive_degree_is_connection_size(
            orders in proptest::collection::vec(1u64..7, 1..4),
            picks in proptest::collection::vec(any::<usize>(), 0..12),
        ) {
            let group = AbelianGroup::new(orders).unwrap();
            let n = group.order();
            let mut s: Vec<usize> = picks.into_iter().map(|x| x % n).collect();
            s.sort();
            s.dedup();
            let g = cayley_sum(&group, &s, true).unwrap();
            for v in 0..n {
                prop_assert_eq!(g.degree(v), s.len());
            }
            let loopless = cayley_sum(&group, &s, false).unwrap();
            for v in 0..n {
                let abs = loopless.absolute_points().binary_search(&v).is_ok();
                prop_assert_eq!(loopless.degree(v) + usize::from(abs), s.len());
            }
        }
    }
}
