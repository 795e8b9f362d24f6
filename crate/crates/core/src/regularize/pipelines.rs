use std::collections::BTreeMap;

use serde::Serialize;

use super::equalize::{cross_matching, equalize_norm_component, Variant};
use super::factors::strip_two_factors;
use super::hamilton::DEFAULT_HAMILTON_BUDGET;
use crate::algebra::gf;
use crate::constructions::{
    bipartite_sum, brown, disjoint_union, er_polarity, h_star, norm_graph, MAX_BROWN_PRIME, MAX_NORM_VERTICES,
};
use crate::error::{ConstraintFailure, Error, Infeasibility, Result};
use crate::graph::Graph;
use crate::numtheory::{
    bose_chowla, candidate_primes, decompose_over, is_prime, primes_up_to, quotient_set, PrimePowerDecomposition,
    MAX_PARTS,
};
use crate::verify::{check_regular, max_codegree};

/// Largest q accepted for the polarity component of the odd-n C4 pipeline.
pub const MAX_PIPELINE_POLARITY_Q: u64 = 31;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PipelineOptions {
    pub hamilton_budget: u64,
    pub seed: u64,
    pub max_parts: usize,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions {
            hamilton_budget: DEFAULT_HAMILTON_BUDGET,
            seed: 0,
            max_parts: MAX_PARTS,
        }
    }
}

/// One replayable step of a pipeline run.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "step", rename_all = "snake_case")]
pub enum LogStep {
    Decomposition {
        power: u32,
        primes: Vec<u64>,
    },
    Component {
        family: String,
        parameters: BTreeMap<String, u64>,
        vertices: usize,
    },
    TwoFactorsRemoved {
        component: usize,
        count: usize,
    },
    HamiltonCyclesRemoved {
        component: usize,
        count: usize,
    },
    MatchingRemoved {
        component: usize,
        edges: usize,
        skipped_vertex: usize,
    },
    CrossMatching {
        group_sizes: Vec<usize>,
        edges: usize,
    },
    Certified {
        degree: usize,
        s: usize,
        t: usize,
        max_codegree: usize,
    },
}

#[derive(Debug, Clone)]
pub struct PipelineResult {
    pub graph: Graph,
    pub degree: usize,
    /// Asymptotic degree lower bound for this family, evaluated at `n`.
    pub target_bound: f64,
    pub construction_log: Vec<LogStep>,
}

fn params(pairs: &[(&str, u64)]) -> BTreeMap<String, u64> {
    pairs.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}

fn component(family: &str, pairs: &[(&str, u64)], vertices: usize) -> LogStep {
    LogStep::Component {
        family: family.to_string(),
        parameters: params(pairs),
        vertices,
    }
}

fn infeasible(pipeline: &str, n: u64, reason: impl Into<String>, constraints: Vec<ConstraintFailure>) -> Error {
    Error::Infeasible(Infeasibility {
        pipeline: pipeline.to_string(),
        n,
        reason: reason.into(),
        constraints,
    })
}

/// Regularity at `degree` on exactly `n` vertices and `max codegree(s) <= t - 1`; anything
/// else is a certification failure.
fn certify(g: &Graph, n: u64, degree: usize, s: usize, t: usize, log: &mut Vec<LogStep>) -> Result<()> {
    if g.n() as u64 != n {
        return Err(Error::Certification(format!("built {} vertices instead of {n}", g.n())));
    }
    if check_regular(g) != Some(degree) {
        return Err(Error::Certification(format!(
            "expected {degree}-regular, histogram {:?}",
            g.degree_histogram()
        )));
    }
    let worst = max_codegree(g, s)?;
    if worst >= t {
        return Err(Error::Certification(format!("an {s}-set has {worst} common neighbours, K_{{{s},{t}}} present")));
    }
    log.push(LogStep::Certified {
        degree,
        s,
        t,
        max_codegree: worst,
    });
    Ok(())
}

/// Largest prime `p >= min_p` accepted by `keep` with `(p² - 1)/divisor <= limit`.
fn largest_embeddable(limit: u64, divisor: u64, min_p: u64, keep: impl Fn(u64) -> bool) -> Option<u64> {
    let top = ((limit * divisor + 1) as f64).sqrt() as u64 + 1;
    (min_p.max(2)..=top)
        .rev()
        .find(|&p| is_prime(p) && keep(p) && (p * p - 1) / divisor <= limit)
}

fn bose_chowla_part(vertices: u64, p: u64, k: u64, log: &mut Vec<LogStep>) -> Result<Graph> {
    let m = vertices / 2;
    let set = bose_chowla(p, &gf(p, 2)?)?;
    let g = bipartite_sum(m, &set.elements()[..k as usize], &set)?;
    log.push(component("bipartite_bose_chowla", &[("m", m), ("p", p), ("k", k)], g.n()));
    Ok(g)
}

/// n-vertex regular C4-free graph.
///
/// Even n: a bipartite Bose–Chowla sum on two halves of n/2. Odd n: a Parsons graph
/// (`R1` of ER_p for p ≡ 1 mod 4, `R2` for p ≡ 3 mod 4) beside a bipartite sum of the
/// same degree on the remaining even count, taking the largest p that works.
pub fn pipeline_c4(n: u64, _opts: &PipelineOptions) -> Result<PipelineResult> {
    if n < 4 {
        return Err(Error::invalid(format!("pipeline c4 needs n >= 4, got {n}")));
    }
    let target = (n as f64 / 6.0).sqrt();
    let mut log = Vec::new();
    let mut failures = Vec::new();
    let (graph, degree) = if n % 2 == 0 {
        let Some(p) = largest_embeddable(n / 4, 1, 2, |_| true) else {
            return Err(infeasible(
                "c4",
                n,
                "no Bose-Chowla prime embeds in half the vertex count",
                vec![ConstraintFailure::new(
                    "p'^2 - 1 <= floor(n/4)",
                    format!("floor(n/4) = {} admits no prime p'", n / 4),
                )],
            ));
        };
        (bose_chowla_part(n, p, p, &mut log)?, p as usize)
    } else {
        let mut built = None;
        for p in primes_up_to(MAX_PIPELINE_POLARITY_Q).into_iter().rev().filter(|&p| p > 2) {
            let (size, k, which) = if p % 4 == 1 {
                (p * (p + 1) / 2, (p - 1) / 2, "r1")
            } else {
                (p * (p - 1) / 2, (p + 1) / 2, "r2")
            };
            if size > n {
                continue;
            }
            let rest = n - size;
            let mut pieces = Vec::new();
            if rest > 0 {
                match largest_embeddable(rest / 4, 1, k, |_| true) {
                    Some(q) => pieces.push(bose_chowla_part(rest, q, k, &mut log)?),
                    None => {
                        failures.push(ConstraintFailure::new(
                            format!("p = {p}: bipartite {k}-regular part on {rest} vertices"),
                            format!("no Bose-Chowla prime p' >= {k} with p'^2 - 1 <= {}", rest / 4),
                        ));
                        continue;
                    }
                }
            }
            let pg = er_polarity(p)?;
            let r = if which == "r1" { pg.r1 } else { pg.r2 };
            log.insert(0, component(&format!("parsons_{which}"), &[("q", p)], r.n()));
            pieces.insert(0, r);
            built = Some((disjoint_union(&pieces)?, k as usize));
            break;
        }
        match built {
            Some(b) => b,
            None => {
                if failures.is_empty() {
                    failures.push(ConstraintFailure::new(
                        "Parsons graph fits",
                        format!("no odd prime p <= {MAX_PIPELINE_POLARITY_Q} has a Parsons graph with at most {n} vertices"),
                    ));
                }
                return Err(infeasible("c4", n, "no feasible (p, p') pair", failures));
            }
        }
    };
    certify(&graph, n, degree, 2, 2, &mut log)?;
    Ok(PipelineResult {
        graph,
        degree,
        target_bound: target,
        construction_log: log,
    })
}

fn quotient_part(vertices: u64, t: u64, p: u64, k: u64, log: &mut Vec<LogStep>) -> Result<Graph> {
    let m = vertices / 2;
    let set = quotient_set(p, t, &gf(p, 2)?)?;
    let g = bipartite_sum(m, &set.elements()[..k as usize], &set)?;
    log.push(component("bipartite_quotient", &[("m", m), ("p", p), ("t", t), ("k", k)], g.n()));
    Ok(g)
}

/// n-vertex regular K_{2,2t+1}-free graph.
///
/// Even n: a bipartite quotient-set sum. Odd n (t even): `H*_{p,t}` with p ≡ 1 (mod 2t)
/// beside a (p-1)-regular bipartite sum on the `n - p(p-1)/t - 1` remaining vertices.
pub fn pipeline_k2t(n: u64, t: u64, _opts: &PipelineOptions) -> Result<PipelineResult> {
    if t == 0 {
        return Err(Error::invalid("t must be positive"));
    }
    if n < 4 {
        return Err(Error::invalid(format!("pipeline k2t needs n >= 4, got {n}")));
    }
    let mut log = Vec::new();
    let (graph, degree, target) = if n % 2 == 0 {
        let Some(p) = largest_embeddable(n / 4, t, 2, |p| (p - 1) % t == 0) else {
            return Err(infeasible(
                "k2t",
                n,
                "no quotient set embeds in half the vertex count",
                vec![ConstraintFailure::new(
                    format!("(p'^2 - 1)/{t} <= floor(n/4), t | p' - 1"),
                    format!("floor(n/4) = {} admits no prime p'", n / 4),
                )],
            ));
        };
        let g = quotient_part(n, t, p, p, &mut log)?;
        (g, p as usize, (t as f64 * n as f64 / 4.0).sqrt())
    } else {
        if t % 2 == 1 {
            return Err(Error::invalid(format!("odd n requires even t, got t = {t}")));
        }
        let mut failures = Vec::new();
        let mut built = None;
        let top = ((n * t) as f64).sqrt() as u64 + 2;
        for p in (3..=top).rev().filter(|&p| is_prime(p) && p % (2 * t) == 1) {
            let size = p * (p - 1) / t + 1;
            if size > n {
                continue;
            }
            let rest = n - size;
            let k = p - 1;
            let mut pieces = Vec::new();
            if rest > 0 {
                match largest_embeddable(rest / 4, t, k, |q| (q - 1) % t == 0) {
                    Some(q) => pieces.push(quotient_part(rest, t, q, k, &mut log)?),
                    None => {
                        failures.push(ConstraintFailure::new(
                            format!("p = {p}: bipartite {k}-regular part on {rest} vertices"),
                            format!("no prime p' >= {k}, {t} | p' - 1, with (p'^2 - 1)/{t} <= {}", rest / 4),
                        ));
                        continue;
                    }
                }
            }
            let h = h_star(p, t)?;
            log.insert(0, component("h_star", &[("p", p), ("t", t)], h.n()));
            pieces.insert(0, h);
            built = Some((disjoint_union(&pieces)?, k as usize));
            break;
        }
        let Some((g, d)) = built else {
            if failures.is_empty() {
                failures.push(ConstraintFailure::new(
                    format!("p ≡ 1 (mod {}), p(p-1)/{t} + 1 <= n", 2 * t),
                    "no such prime".to_string(),
                ));
            }
            return Err(infeasible("k2t", n, "no feasible (p, p') pair", failures));
        };
        (g, d, (t as f64 * n as f64 / 5.0).sqrt())
    };
    certify(&graph, n, degree, 2, 2 * t as usize + 1, &mut log)?;
    Ok(PipelineResult {
        graph,
        degree,
        target_bound: target,
        construction_log: log,
    })
}

/// n-vertex regular K_{3,3}-free graph from Brown graphs on a balanced odd-prime cube
/// decomposition of n, each stripped of 2-factors down to the smallest component's degree.
pub fn pipeline_k33(n: u64, opts: &PipelineOptions) -> Result<PipelineResult> {
    if n == 0 {
        return Err(Error::invalid("n must be positive"));
    }
    let candidates = candidate_primes(n, 3, |p| p % 2 == 1 && p <= MAX_BROWN_PRIME)?;
    let Some(dec) = decompose_over(n, 3, &candidates, 1, opts.max_parts, true)? else {
        return Err(infeasible(
            "k33",
            n,
            "no decomposition into odd-prime cubes",
            vec![ConstraintFailure::new(
                format!("n = sum of at most {} cubes p^3, p odd, p <= {MAX_BROWN_PRIME}", opts.max_parts),
                format!("candidates {candidates:?} admit none"),
            )],
        ));
    };
    let mut log = vec![LogStep::Decomposition {
        power: 3,
        primes: dec.primes.clone(),
    }];
    let p_min = *dec.primes.last().expect("nonempty");
    let degree = (p_min * p_min - p_min) as usize;
    let mut cache: BTreeMap<u64, Graph> = BTreeMap::new();
    let mut parts = Vec::new();
    for (i, &p) in dec.primes.iter().enumerate() {
        let k = ((p * p - p) as usize - degree) / 2;
        let stripped = match cache.get(&p) {
            Some(g) => g.clone(),
            None => {
                let g = strip_two_factors(&brown(p)?, k)?;
                cache.insert(p, g.clone());
                g
            }
        };
        log.push(component("brown", &[("p", p)], stripped.n()));
        log.push(LogStep::TwoFactorsRemoved { component: i, count: k });
        parts.push(stripped);
    }
    let graph = disjoint_union(&parts)?;
    certify(&graph, n, degree, 3, 3, &mut log)?;
    let target = if n % 2 == 1 { (n as f64 / 13.0).powf(2.0 / 3.0) } else { (n as f64 / 14.0).powf(2.0 / 3.0) };
    Ok(PipelineResult {
        graph,
        degree,
        target_bound: target,
        construction_log: log,
    })
}

fn norm_degree(p: u64, s: u32) -> u64 {
    (p.pow(s) - 1) / (p - 1)
}

fn factorial(s: u64) -> u64 {
    (1..=s).product()
}

/// n-vertex regular K_{s,t}-free graph (s = 3) from loopless norm graphs on an odd-prime
/// cube decomposition with at least three parts, equalized by Hamilton-cycle removal and
/// patched with a matching between the components' minimum-degree vertices.
pub fn pipeline_kst(n: u64, s: u32, t: u64, opts: &PipelineOptions) -> Result<PipelineResult> {
    if s < 3 {
        return Err(Error::invalid(format!("pipeline kst needs s >= 3, got {s}")));
    }
    if s > 3 {
        return Err(Error::invalid(format!("norm graphs are built for s <= 3 only, got {s}")));
    }
    if t <= factorial(s as u64) {
        return Err(Error::invalid(format!("t must exceed s! = {}", factorial(s as u64))));
    }
    let candidates = candidate_primes(n, s, |p| p % 2 == 1 && p.pow(s) <= MAX_NORM_VERTICES)?;
    let dec: PrimePowerDecomposition = match decompose_over(n, s, &candidates, 1, opts.max_parts, true)? {
        None => {
            return Err(infeasible(
                "kst",
                n,
                "no decomposition into odd-prime s-th powers",
                vec![ConstraintFailure::new(
                    format!("n = sum of at most {} powers p^{s}, p odd, p^{s} <= {MAX_NORM_VERTICES}", opts.max_parts),
                    format!("candidates {candidates:?} admit none"),
                )],
            ))
        }
        Some(d) if d.parts() >= 3 => d,
        Some(d) => match decompose_over(n, s, &candidates, 3, opts.max_parts, true)? {
            Some(d3) => d3,
            None => {
                return Err(infeasible(
                    "kst",
                    n,
                    "fewer than 3 components",
                    vec![ConstraintFailure::new(
                        "cross matching needs at least 3 components",
                        format!("only decomposition found is {:?}", d.primes),
                    )],
                ))
            }
        },
    };
    let variant = if n % 2 == 1 && s % 2 == 1 { Variant::B } else { Variant::A };
    let d_min = norm_degree(*dec.primes.last().expect("nonempty"), s);
    let degree = match variant {
        Variant::A => d_min,
        Variant::B => d_min - 1,
    } as usize;
    if degree < 2 {
        return Err(infeasible(
            "kst",
            n,
            "target degree below 2",
            vec![ConstraintFailure::new("degree >= 2", format!("degree {degree}"))],
        ));
    }

    let removals: Vec<usize> = dec
        .primes
        .iter()
        .map(|&p| {
            let gap = ((norm_degree(p, s) - d_min) / 2) as usize;
            gap + usize::from(variant == Variant::B)
        })
        .collect();
    let group_sizes: Vec<usize> = dec
        .primes
        .iter()
        .map(|&p| norm_degree(p, s) as usize - usize::from(variant == Variant::B))
        .collect();
    let total: usize = group_sizes.iter().sum();
    let largest = *group_sizes.iter().max().expect("nonempty");
    if largest >= total - largest {
        return Err(infeasible(
            "kst",
            n,
            "minimum-degree groups are unbalanced",
            vec![ConstraintFailure::new(
                "largest group < sum of the others",
                format!("group sizes {group_sizes:?}: {largest} >= {}", total - largest),
            )],
        ));
    }

    let mut log = vec![LogStep::Decomposition {
        power: s,
        primes: dec.primes.clone(),
    }];
    let mut parts = Vec::new();
    let mut groups = Vec::new();
    let mut offset = 0;
    for (i, (&p, &k)) in dec.primes.iter().zip(&removals).enumerate() {
        let base = norm_graph(p, s, false)?;
        log.push(component("norm", &[("p", p), ("s", s as u64)], base.n()));
        let seed = opts.seed.wrapping_add((i as u64) << 32);
        let (g, low) = if k == 0 {
            let low = base.absolute_points().to_vec();
            (base, low)
        } else {
            let eq = equalize_norm_component(&base, k, variant, opts.hamilton_budget, seed)?;
            log.push(LogStep::HamiltonCyclesRemoved {
                component: i,
                count: eq.cycles_removed,
            });
            if let Some(v) = eq.skipped_vertex {
                log.push(LogStep::MatchingRemoved {
                    component: i,
                    edges: eq.matching_removed,
                    skipped_vertex: v,
                });
            }
            (eq.graph, eq.min_degree_vertices)
        };
        groups.push(low.iter().map(|&v| v + offset).collect::<Vec<_>>());
        offset += g.n();
        parts.push(g);
    }
    let union = disjoint_union(&parts)?;
    let matching = cross_matching(&groups)?;
    log.push(LogStep::CrossMatching {
        group_sizes: groups.iter().map(Vec::len).collect(),
        edges: matching.edges.len(),
    });
    let graph = union.add_edges(&matching.edges)?;
    certify(&graph, n, degree, s as usize, t as usize, &mut log)?;
    let target = (n as f64 / dec.parts() as f64).powf(1.0 - 1.0 / s as f64);
    Ok(PipelineResult {
        graph,
        degree,
        target_bound: target,
        construction_log: log,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> PipelineOptions {
        PipelineOptions::default()
    }

    fn infeasible_reason(e: Error) -> Infeasibility {
        match e {
            Error::Infeasible(i) => i,
            other => panic!("expected infeasibility, got {other}"),
        }
    }

    #[test]
    fn c4_examples() {
        let r = pipeline_c4(60, &opts()).unwrap();
        assert_eq!(r.degree, 3);
        let r = pipeline_c4(71, &opts()).unwrap();
        assert_eq!(r.degree, 2);
        assert_eq!(r.graph.part_sizes(), Some(&[15, 56][..]));
        let i = infeasible_reason(pipeline_c4(5, &opts()).unwrap_err());
        assert_eq!(i.pipeline, "c4");
        assert!(!i.constraints.is_empty());
        assert!(pipeline_c4(3, &opts()).is_err());
    }

    #[test]
    fn c4_three_mod_four_branch() {
        // 21-vertex R2 at q = 7 is 4-regular; 4-regular bipartite on 50 needs p' >= 4 with p'^2-1 <= 12
        // which fails, so the pipeline falls back to smaller p. Either way the output certifies.
        for n in [23u64, 49, 77, 101, 131] {
            let r = pipeline_c4(n, &opts()).unwrap();
            assert_eq!(r.graph.n() as u64, n);
        }
    }

    #[test]
    fn k2t_examples() {
        let r = pipeline_k2t(100, 2, &opts()).unwrap();
        assert_eq!(r.degree, 7);
        let r = pipeline_k2t(415, 2, &opts()).unwrap();
        assert_eq!(r.degree, 12);
        assert_eq!(r.graph.part_sizes(), Some(&[79, 336][..]));
        infeasible_reason(pipeline_k2t(21, 2, &opts()).unwrap_err());
        assert!(matches!(pipeline_k2t(101, 3, &opts()), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn k33_examples() {
        let r = pipeline_k33(179, &opts()).unwrap();
        assert_eq!(r.degree, 6);
        assert_eq!(r.graph.edge_count(), 537);
        assert_eq!(r.graph.part_sizes(), Some(&[125, 27, 27][..]));
        let r = pipeline_k33(27, &opts()).unwrap();
        assert_eq!(r.degree, 6);
        infeasible_reason(pipeline_k33(30, &opts()).unwrap_err());
    }

    #[test]
    fn kst_examples() {
        let r = pipeline_kst(81, 3, 7, &opts()).unwrap();
        assert_eq!(r.degree, 12);
        assert_eq!(r.graph.edge_count(), 486);
        let i = infeasible_reason(pipeline_kst(179, 3, 7, &opts()).unwrap_err());
        assert!(i.constraints[0].detail.contains("[30, 12, 12]"));
        let i = infeasible_reason(pipeline_kst(27, 3, 7, &opts()).unwrap_err());
        assert_eq!(i.reason, "fewer than 3 components");
        assert!(pipeline_kst(81, 3, 6, &opts()).is_err());
    }

    #[test]
    fn kst_even_n_uses_variant_a() {
        // 27 + 27 + 27 + 125 = 206: variant a, groups (13, 13, 13, 31) are balanced
        let r = pipeline_kst(206, 3, 7, &opts()).unwrap();
        assert_eq!(r.degree, 13);
    }
}
