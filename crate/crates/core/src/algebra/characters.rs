//! Additive and multiplicative characters of GF(q) and the sums built from them.

use std::f64::consts::TAU;

use num_complex::Complex64;

use super::field::{FieldElement, FiniteField};
use crate::error::{Error, Result};

pub type ComplexValue = Complex64;

/// `exp(2πi·tr(b·x)/p)`.
pub fn additive_char(field: &FiniteField, b: FieldElement, x: FieldElement) -> ComplexValue {
    let t = field.trace(field.mul(b, x));
    Complex64::from_polar(1.0, TAU * t as f64 / field.characteristic() as f64)
}

/// Gauss sum `Σ_{x ∈ F*} θ^j(x) χ_b(x)` with `θ(g^k) = exp(2πik/(q-1))` for the field's generator `g`.
pub fn gauss_sum(field: &FiniteField, j: u64, b: FieldElement) -> Result<ComplexValue> {
    let n = field.order() - 1;
    if j >= n.max(1) {
        return Err(Error::invalid(format!("character index {j} outside 0..{n}")));
    }
    let p = field.characteristic() as f64;
    let mut acc = Complex64::new(0.0, 0.0);
    for k in 0..n {
        let x = field.exp(k);
        let mult = ((j as u128 * k as u128) % n as u128) as f64 / n as f64;
        let add = field.trace(field.mul(b, x)) as f64 / p;
        acc += Complex64::from_polar(1.0, TAU * (mult + add));
    }
    Ok(acc)
}

/// `Σ_{x ∈ H} χ_b(x)` for the subgroup `H = ⟨g^h⟩` of index `h` in F*.
///
/// Evaluated through the order-h character expansion
/// `1_H = (1/h) Σ_{j<h} θ^j`, so the sum is an average of `h` Gauss sums.
pub fn subgroup_char_sum(field: &FiniteField, h: u64, b: FieldElement) -> Result<ComplexValue> {
    let n = field.order() - 1;
    if h == 0 || n % h != 0 {
        return Err(Error::NotDivisor { divisor: h, value: n });
    }
    let step = n / h;
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..h {
        acc += gauss_sum(field, j * step, b)?;
    }
    Ok(acc / h as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::gf;

    const TOL: f64 = 1e-9;

    fn direct_subgroup_sum(field: &FiniteField, h: u64, b: FieldElement) -> Complex64 {
        let n = field.order() - 1;
        (0..n / h)
            .map(|k| additive_char(field, b, field.exp(k * h)))
            .sum()
    }

    #[test]
    fn additive_char_examples() {
        let f5 = gf(5, 1).unwrap();
        let v = additive_char(&f5, f5.zero(), f5.constant(3));
        assert!((v - Complex64::new(1.0, 0.0)).norm() < TOL);
        let v = additive_char(&f5, f5.one(), f5.one());
        assert!((v - Complex64::from_polar(1.0, TAU / 5.0)).norm() < TOL);

        let f9 = gf(3, 2).unwrap();
        for b in f9.elements().skip(1) {
            let s: Complex64 = f9.elements().map(|x| additive_char(&f9, b, x)).sum();
            assert!(s.norm() < TOL);
        }
    }

    #[test]
    fn additive_char_is_a_homomorphism() {
        let f = gf(3, 3).unwrap();
        for b in f.elements().step_by(4) {
            for x in f.elements().step_by(3) {
                for y in f.elements().step_by(5) {
                    let lhs = additive_char(&f, b, f.add(x, y));
                    let rhs = additive_char(&f, b, x) * additive_char(&f, b, y);
                    assert!((lhs - rhs).norm() < TOL);
                }
            }
        }
    }

    #[test]
    fn subgroup_sum_examples() {
        let f9 = gf(3, 2).unwrap();
        let q = f9.order() as f64;
        for b in f9.elements().skip(1) {
            let full = subgroup_char_sum(&f9, 1, b).unwrap();
            assert!((full - Complex64::new(-1.0, 0.0)).norm() < TOL);
            let half = subgroup_char_sum(&f9, 2, b).unwrap();
            assert!(half.norm() <= q.sqrt() + TOL);
            assert!((half - direct_subgroup_sum(&f9, 2, b)).norm() < TOL);
        }
        let zero = subgroup_char_sum(&f9, 1, f9.zero()).unwrap();
        assert!((zero - Complex64::new(8.0, 0.0)).norm() < TOL);
        let zero4 = subgroup_char_sum(&f9, 4, f9.zero()).unwrap();
        assert!((zero4 - Complex64::new(2.0, 0.0)).norm() < TOL);
        assert!(subgroup_char_sum(&f9, 3, f9.one()).is_err());
    }

    #[test]
    fn gauss_expansion_matches_direct_summation() {
        for &(p, m) in &[(2, 4), (3, 3), (5, 2), (13, 1), (2, 5)] {
            let f = gf(p, m).unwrap();
            let n = f.order() - 1;
            for h in (1..=n).filter(|h| n % h == 0) {
                for b in f.elements() {
                    let via_gauss = subgroup_char_sum(&f, h, b).unwrap();
                    let direct = direct_subgroup_sum(&f, h, b);
                    assert!((via_gauss - direct).norm() < 1e-8, "q={} h={h}", f.order());
                }
            }
        }
    }

    #[test]
    fn gauss_sum_cases() {
        let f7 = gf(7, 1).unwrap();
        let g = gauss_sum(&f7, 3, f7.one()).unwrap();
        assert!((g.norm() - 7f64.sqrt()).abs() < TOL);
        let g = gauss_sum(&f7, 0, f7.one()).unwrap();
        assert!((g - Complex64::new(-1.0, 0.0)).norm() < TOL);
        let g = gauss_sum(&f7, 2, f7.zero()).unwrap();
        assert!(g.norm() < TOL);
        let g = gauss_sum(&f7, 0, f7.zero()).unwrap();
        assert!((g - Complex64::new(6.0, 0.0)).norm() < TOL);
        assert!(gauss_sum(&f7, 6, f7.one()).is_err());
    }
}
