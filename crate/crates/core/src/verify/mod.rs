//! Brute-force oracles: codegree scans for K_{s,t}-freeness, regularity,
//! dense spectra and the character-sum spectrum of Cayley sum graphs.

mod codegree;
mod report;
mod spectra;

pub use codegree::{is_kst_free, max_codegree, LARGE_S_VERTEX_CAP};
pub use report::{
    check_regular, round_sig, spectral_gap_report, BoundComparison, SpectralGapReport, SpectralSummary,
    VerificationReport, REPORT_SCHEMA,
};
pub use spectra::{
    adjacency_spectrum, cayley_spectrum, laplacian_spectrum, symmetric_eigenvalues, SpectrumMethod, SpectrumResult,
    MAX_CAYLEY_ORDER, MAX_DENSE_ORDER,
};
