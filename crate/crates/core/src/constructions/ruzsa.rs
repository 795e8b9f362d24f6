use super::cayley::{cayley_sum, AbelianGroup};
use crate::algebra::gf;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::numtheory::is_prime;

fn check(p: u64, t: u64) -> Result<()> {
    if !is_prime(p) || p == 2 {
        return Err(Error::invalid(format!("{p} is not an odd prime")));
    }
    if t == 0 || (p - 1) % t != 0 {
        return Err(Error::NotDivisor {
            divisor: t,
            value: p - 1,
        });
    }
    Ok(())
}

/// Cayley sum graph on Z_{(p-1)/t} × F_p with connection set
/// `{(a mod (p-1)/t, θ^a) : a ∈ Z_{p-1}}`, θ the least primitive root mod p.
///
/// The p-1 absolute points have degree p-2; every other vertex has degree p-1.
pub fn h_graph(p: u64, t: u64) -> Result<Graph> {
    check(p, t)?;
    let field = gf(p, 1)?;
    let m = (p - 1) / t;
    let group = AbelianGroup::new(vec![m, p])?;
    let connection: Vec<usize> = (0..p - 1)
        .map(|a| group.index_of(&[a % m, field.exp(a).index() as u64]))
        .collect::<Result<_>>()?;
    cayley_sum(&group, &connection, false)
}

/// [`h_graph`] plus one apex vertex (index `p(p-1)/t`) joined to every absolute point.
/// The result is (p-1)-regular.
pub fn h_star(p: u64, t: u64) -> Result<Graph> {
    let h = h_graph(p, t)?;
    let apex = h.n();
    let mut edges: Vec<(usize, usize)> = h.edges().collect();
    edges.extend(h.absolute_points().iter().map(|&v| (v, apex)));
    let mut labels = h.labels().expect("cayley graphs are labelled").to_vec();
    labels.push(Vec::new());
    Ok(Graph::from_edges(apex + 1, &edges, &[])?.with_labels(labels))
}
