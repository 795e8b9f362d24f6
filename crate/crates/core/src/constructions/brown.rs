use crate::algebra::gf;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::numtheory::is_prime;

/// Largest p for which [`brown`] builds its p³-vertex graph.
pub const MAX_BROWN_PRIME: u64 = 13;

/// Least α in 1..p with η(α) = -η(-1).
pub fn brown_alpha(p: u64) -> Result<u64> {
    if p == 2 || !is_prime(p) {
        return Err(Error::invalid(format!("Brown graphs need an odd prime, got {p}")));
    }
    let f = gf(p, 1)?;
    let target = -f.quad_char(f.constant(p - 1))?;
    (1..p)
        .find(|&a| f.quad_char(f.constant(a)).ok() == Some(target))
        .ok_or_else(|| Error::Certification(format!("no Brown α mod {p}")))
}

/// Unit-sphere graph on F_p³: `u ~ v` iff `|u - v|² = α`. Vertex `(x, y, z)` has index `x p² + y p + z`.
pub fn brown(p: u64) -> Result<Graph> {
    let alpha = brown_alpha(p)?;
    if p > MAX_BROWN_PRIME {
        return Err(Error::invalid(format!("brown({p}) exceeds the cap p <= {MAX_BROWN_PRIME}")));
    }
    let pu = p as usize;
    let sphere: Vec<[usize; 3]> = (0..pu)
        .flat_map(|a| (0..pu).flat_map(move |b| (0..pu).map(move |c| [a, b, c])))
        .filter(|d| d.iter().map(|&x| (x * x) as u64).sum::<u64>() % p == alpha)
        .collect();
    let n = pu * pu * pu;
    let adj = (0..n)
        .map(|v| {
            let (x, y, z) = (v / (pu * pu), v / pu % pu, v % pu);
            sphere
                .iter()
                .map(|d| ((x + d[0]) % pu) * pu * pu + ((y + d[1]) % pu) * pu + (z + d[2]) % pu)
                .collect()
        })
        .collect();
    let labels = (0..n)
        .map(|v| vec![(v / (pu * pu)) as u64, (v / pu % pu) as u64, (v % pu) as u64])
        .collect();
    Ok(Graph::from_adjacency(adj, Default::default()).with_labels(labels))
}
