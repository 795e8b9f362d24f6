//! Exact arithmetic in GF(p^m), norm and trace maps, and character sums.

mod characters;
mod field;
mod poly;

pub use characters::{additive_char, gauss_sum, subgroup_char_sum, ComplexValue};
pub use field::{gf, FieldElement, FiniteField, MAX_FIELD_ORDER};
