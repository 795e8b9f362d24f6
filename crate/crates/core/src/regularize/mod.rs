//! Degree equalization: 2-factor stripping, Hamilton-cycle removal, cross-component
//! matchings, and the end-to-end pipelines that assemble regular F-free graphs.

mod equalize;
mod factors;
mod hamilton;
mod pipelines;

pub use equalize::{cross_matching, equalize_norm_component, EqualizedComponent, Variant};
pub use factors::{strip_two_factors, two_factor, EdgeSubset, SubsetKind};
pub use hamilton::{hamilton_cycle, DEFAULT_HAMILTON_BUDGET};
pub use pipelines::{
    pipeline_c4, pipeline_k2t, pipeline_k33, pipeline_kst, LogStep, PipelineOptions, PipelineResult,
    MAX_PIPELINE_POLARITY_Q,
};
