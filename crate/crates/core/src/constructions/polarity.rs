use crate::algebra::gf;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::numtheory::is_prime;
use crate::verify::max_codegree;

const MAX_POLARITY_Q: u64 = 31;

/// The orthogonal polarity graph and its two regular induced subgraphs.
#[derive(Debug, Clone)]
pub struct PolarityGraphs {
    /// Loopless ER_q; self-polar points are recorded as absolute points.
    pub er: Graph,
    /// Induced on the C(q+1,2) non-absolute points of one quadratic class; (q-1)/2-regular.
    pub r1: Graph,
    /// Induced on the remaining C(q,2) non-absolute points; (q+1)/2-regular.
    pub r2: Graph,
}

/// Normalized projective points of PG(2, q) (first nonzero coordinate 1), in lex order.
fn projective_points(q: u64) -> Vec<[u64; 3]> {
    let mut pts = vec![[0, 0, 1]];
    pts.extend((0..q).map(|z| [0, 1, z]));
    pts.extend((0..q).flat_map(|y| (0..q).map(move |z| [1, y, z])));
    pts
}

fn dot(a: &[u64; 3], b: &[u64; 3], q: u64) -> u64 {
    (a[0] * b[0] + a[1] * b[1] + a[2] * b[2]) % q
}

/// Builds ER_q and splits its q² non-absolute points by the quadratic character of `x·x`
/// (well defined on projective points because rescaling multiplies `x·x` by a square).
/// The class of size C(q+1,2) becomes R1, the other R2; both are checked for regularity
/// and C4-freeness before returning.
pub fn er_polarity(q: u64) -> Result<PolarityGraphs> {
    if q == 2 || !is_prime(q) || q > MAX_POLARITY_Q {
        return Err(Error::invalid(format!("polarity graphs need an odd prime q <= {MAX_POLARITY_Q}, got {q}")));
    }
    let field = gf(q, 1)?;
    let pts = projective_points(q);
    let n = pts.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if dot(&pts[i], &pts[j], q) == 0 {
                edges.push((i, j));
            }
        }
    }
    let absolute: Vec<usize> = (0..n).filter(|&i| dot(&pts[i], &pts[i], q) == 0).collect();
    let er = Graph::from_edges(n, &edges, &[])?
        .with_labels(pts.iter().map(|p| p.to_vec()).collect())
        .with_absolute_points(absolute);

    let mut squares = Vec::new();
    let mut non_squares = Vec::new();
    for (i, p) in pts.iter().enumerate() {
        match field.quad_char(field.constant(dot(p, p, q)))? {
            1 => squares.push(i),
            -1 => non_squares.push(i),
            _ => {}
        }
    }

    let big = (q * (q + 1) / 2) as usize;
    let small = (q * (q - 1) / 2) as usize;
    let assignments = [(&squares, &non_squares), (&non_squares, &squares)];
    for (c1, c2) in assignments {
        if c1.len() != big || c2.len() != small {
            continue;
        }
        let r1 = er.induced(c1);
        let r2 = er.induced(c2);
        if contract_holds(&r1, (q - 1) / 2)? && contract_holds(&r2, (q + 1) / 2)? {
            return Ok(PolarityGraphs { er, r1, r2 });
        }
    }
    Err(Error::Certification(format!(
        "no quadratic-class assignment of ER_{q} meets the regularity and C4-free contract"
    )))
}

fn contract_holds(g: &Graph, degree: u64) -> Result<bool> {
    Ok(g.degrees().iter().all(|&d| d as u64 == degree) && max_codegree(g, 2)? <= 1)
}
