use std::collections::BTreeMap;

use serde::{Serialize, Serializer};

use super::codegree::max_codegree;
use super::spectra::{adjacency_spectrum, laplacian_spectrum};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const REPORT_SCHEMA: u32 = 1;

/// Rounds to 12 significant digits, the precision every float in a report carries.
pub fn round_sig(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

fn ser_rounded<S: Serializer>(x: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(round_sig(*x))
}

fn ser_rounded_opt<S: Serializer>(x: &Option<f64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match x {
        Some(v) => s.serialize_some(&round_sig(*v)),
        None => s.serialize_none(),
    }
}

/// The common degree (loops counted once), or `None` if degrees differ.
pub fn check_regular(g: &Graph) -> Option<usize> {
    let h = g.degree_histogram();
    match h.len() {
        0 => Some(0),
        1 => h.keys().next().copied(),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralGapReport {
    #[serde(serialize_with = "ser_rounded")]
    pub average_degree: f64,
    /// `max_{i>0} |d - μ_i|` over the ascending Laplacian spectrum.
    #[serde(serialize_with = "ser_rounded")]
    pub max_gap: f64,
    /// `q^{s/2} + 1 + 6j` when the graph descends from a norm graph on GF(q^s).
    #[serde(serialize_with = "ser_rounded_opt")]
    pub norm_bound: Option<f64>,
    /// `max_gap / (d (ln ln n)² / (ln n · ln ln ln n))`; absent when `ln ln ln n ≤ 0`.
    #[serde(serialize_with = "ser_rounded_opt")]
    pub butler_chung_ratio: Option<f64>,
}

/// Laplacian gap diagnostic for a connected graph after `j` Hamilton-cycle removals.
/// `norm_provenance = Some((q, s))` adds the norm-graph bound.
pub fn spectral_gap_report(g: &Graph, j: usize, norm_provenance: Option<(u64, u32)>) -> Result<SpectralGapReport> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let lap = laplacian_spectrum(g)?;
    let d = g.degrees().iter().sum::<usize>() as f64 / n as f64;
    let max_gap = lap.eigenvalues[1..].iter().map(|mu| (d - mu).abs()).fold(0.0, f64::max);
    let norm_bound = norm_provenance.map(|(q, s)| (q as f64).powf(s as f64 / 2.0) + 1.0 + 6.0 * j as f64);
    let ln = (n as f64).ln();
    let lnln = ln.ln();
    let lnlnln = lnln.ln();
    let butler_chung_ratio = (lnlnln > 0.0 && d > 0.0).then(|| max_gap / (d * lnln * lnln / (ln * lnlnln)));
    Ok(SpectralGapReport {
        average_degree: d,
        max_gap,
        norm_bound,
        butler_chung_ratio,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralSummary {
    #[serde(serialize_with = "ser_rounded")]
    pub top_adjacency: f64,
    /// Largest `|λ|` after dropping the top adjacency eigenvalue.
    #[serde(serialize_with = "ser_rounded")]
    pub max_nontrivial_abs: f64,
    /// Second-smallest Laplacian eigenvalue.
    #[serde(serialize_with = "ser_rounded")]
    pub laplacian_gap: f64,
    #[serde(serialize_with = "ser_rounded")]
    pub laplacian_max: f64,
    pub laplacian_zero_multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundComparison {
    pub achieved_degree: usize,
    pub achieved_edges: usize,
    #[serde(serialize_with = "ser_rounded")]
    pub target_degree: f64,
    #[serde(serialize_with = "ser_rounded")]
    pub target_edges: f64,
    #[serde(serialize_with = "ser_rounded")]
    pub ratio: f64,
}

impl BoundComparison {
    pub fn new(n: usize, achieved_degree: usize, target_degree: f64) -> Self {
        BoundComparison {
            achieved_degree,
            achieved_edges: n * achieved_degree / 2,
            target_degree,
            target_edges: n as f64 * target_degree / 2.0,
            ratio: if target_degree > 0.0 {
                achieved_degree as f64 / target_degree
            } else {
                f64::INFINITY
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub n: usize,
    pub edge_count: usize,
    pub loop_count: usize,
    pub regular_degree: Option<usize>,
    pub degree_histogram: BTreeMap<usize, usize>,
    pub max_codegree: BTreeMap<usize, usize>,
    /// Keyed `"s,t"`.
    pub freeness: BTreeMap<String, bool>,
    pub spectral: Option<SpectralSummary>,
    pub bound_comparison: Option<BoundComparison>,
}

impl VerificationReport {
    /// Degree data plus one codegree scan per distinct `s` among `queries`.
    pub fn build(g: &Graph, queries: &[(usize, usize)], spectra: bool) -> Result<Self> {
        let mut codegrees = BTreeMap::new();
        for &(s, _) in queries {
            if let std::collections::btree_map::Entry::Vacant(e) = codegrees.entry(s) {
                e.insert(max_codegree(g, s)?);
            }
        }
        let freeness = queries
            .iter()
            .map(|&(s, t)| (format!("{s},{t}"), codegrees[&s] + 1 <= t))
            .collect();
        let spectral = if spectra { Some(spectral_summary(g)?) } else { None };
        Ok(VerificationReport {
            schema: REPORT_SCHEMA,
            n: g.n(),
            edge_count: g.edge_count(),
            loop_count: g.loops().len(),
            regular_degree: check_regular(g),
            degree_histogram: g.degree_histogram(),
            max_codegree: codegrees,
            freeness,
            spectral,
            bound_comparison: None,
        })
    }

    pub fn with_bound(mut self, target_degree: f64) -> Self {
        let achieved = self.regular_degree.unwrap_or(0);
        self.bound_comparison = Some(BoundComparison::new(self.n, achieved, target_degree));
        self
    }

    pub fn is_free(&self, s: usize, t: usize) -> Option<bool> {
        self.freeness.get(&format!("{s},{t}")).copied()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn spectral_summary(g: &Graph) -> Result<SpectralSummary> {
    let adj = adjacency_spectrum(g)?;
    let lap = laplacian_spectrum(g)?;
    let ev = &adj.eigenvalues;
    let top = ev.last().copied().unwrap_or(0.0);
    let max_nontrivial_abs = ev[..ev.len().saturating_sub(1)].iter().map(|x| x.abs()).fold(0.0, f64::max);
    let lv = &lap.eigenvalues;
    Ok(SpectralSummary {
        top_adjacency: top,
        max_nontrivial_abs,
        laplacian_gap: lv.get(1).copied().unwrap_or(0.0),
        laplacian_max: lv.last().copied().unwrap_or(0.0),
        laplacian_zero_multiplicity: lv.iter().filter(|x| x.abs() < 1e-9).count(),
    })
}
