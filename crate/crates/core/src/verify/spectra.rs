use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::Serialize;

use crate::constructions::AbelianGroup;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_DENSE_ORDER: usize = 2000;
pub const MAX_CAYLEY_ORDER: usize = 5000;
const MAX_SWEEPS: usize = 100;
const OFF_DIAGONAL_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SpectrumMethod {
    Numeric,
    CharacterSum,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumResult {
    /// Ascending.
    pub eigenvalues: Vec<f64>,
    pub method: SpectrumMethod,
}

impl SpectrumResult {
    fn sorted(mut eigenvalues: Vec<f64>, method: SpectrumMethod) -> Self {
        eigenvalues.sort_by(f64::total_cmp);
        SpectrumResult { eigenvalues, method }
    }

    pub fn largest(&self) -> Option<f64> {
        self.eigenvalues.last().copied()
    }
}

/// Eigenvalues of a dense symmetric row-major matrix by cyclic Jacobi sweeps.
///
/// Sweeps stop once the off-diagonal Frobenius norm falls to `1e-12 * ‖A‖_F`.
pub fn symmetric_eigenvalues(mut a: Vec<f64>, n: usize) -> Result<Vec<f64>> {
    assert_eq!(a.len(), n * n, "matrix is not n×n");
    let total: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let threshold = OFF_DIAGONAL_TOLERANCE * total.max(f64::MIN_POSITIVE);
    let off = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[i * n + j] * a[i * n + j];
                }
            }
        }
        s.sqrt()
    };
    for _ in 0..MAX_SWEEPS {
        if off(&a) <= threshold {
            return Ok((0..n).map(|i| a[i * n + i]).collect());
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq.abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
        }
    }
    if off(&a) <= threshold {
        return Ok((0..n).map(|i| a[i * n + i]).collect());
    }
    Err(Error::NonConvergence(MAX_SWEEPS))
}

fn dense_guard(g: &Graph) -> Result<()> {
    if g.n() > MAX_DENSE_ORDER {
        return Err(Error::invalid(format!(
            "dense spectra are limited to {MAX_DENSE_ORDER} vertices, got {}",
            g.n()
        )));
    }
    Ok(())
}

/// Spectrum of the 0/1 adjacency matrix with 1 on the diagonal at loops.
pub fn adjacency_spectrum(g: &Graph) -> Result<SpectrumResult> {
    dense_guard(g)?;
    let values = symmetric_eigenvalues(g.adjacency_matrix(), g.n())?;
    Ok(SpectrumResult::sorted(values, SpectrumMethod::Numeric))
}

/// Spectrum of `D - A`. A loop adds one to both D and A at the same diagonal entry.
pub fn laplacian_spectrum(g: &Graph) -> Result<SpectrumResult> {
    dense_guard(g)?;
    let n = g.n();
    let mut m: Vec<f64> = g.adjacency_matrix().into_iter().map(|x| -x).collect();
    for v in 0..n {
        m[v * n + v] += g.degree(v) as f64;
    }
    let values = symmetric_eigenvalues(m, n)?;
    Ok(SpectrumResult::sorted(values, SpectrumMethod::Numeric))
}

/// Adjacency spectrum of the loop-inclusive Cayley sum graph of `(group, connection)`
/// from the character values `χ_b(S)`: a real character gives `χ_b(S)`, a conjugate
/// pair `{b, -b}` gives `±|χ_b(S)|`.
pub fn cayley_spectrum(group: &AbelianGroup, connection: &[usize]) -> Result<SpectrumResult> {
    let order = group.order();
    if order > MAX_CAYLEY_ORDER {
        return Err(Error::invalid(format!(
            "character-sum spectra are limited to groups of order {MAX_CAYLEY_ORDER}"
        )));
    }
    let moduli = group.cyclic_orders();
    let tuples: Vec<Vec<u64>> = connection.iter().map(|&s| group.element(s)).collect();
    let zero = group.index_of(&vec![0; moduli.len()])?;
    let chi = |b: &[u64]| -> Complex64 {
        tuples
            .iter()
            .map(|x| {
                let phase: f64 = b
                    .iter()
                    .zip(x)
                    .zip(moduli)
                    .map(|((&bi, &xi), &m)| ((bi * xi) % m) as f64 / m as f64)
                    .sum();
                Complex64::from_polar(1.0, TAU * phase)
            })
            .sum()
    };
    let mut values = Vec::with_capacity(order);
    for b in 0..order {
        let minus_b = group.sub(zero, b);
        let value = chi(&group.element(b));
        if minus_b == b {
            values.push(value.re);
        } else if b < minus_b {
            values.push(value.norm());
            values.push(-value.norm());
        }
    }
    Ok(SpectrumResult::sorted(values, SpectrumMethod::CharacterSum))
}
