use serde::Serialize;

use crate::algebra::FiniteField;
use crate::error::{Error, Result};

/// A subset of Z_modulus in which every nonzero difference has at most
/// `t_bound` ordered representations `a - b`. `t_bound = 1` is the Sidon case.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DifferenceSet {
    elements: Vec<u64>,
    modulus: u64,
    t_bound: u64,
}

impl DifferenceSet {
    /// Sorts and dedups `elements`, then checks the difference bound.
    pub fn certify(mut elements: Vec<u64>, modulus: u64, t_bound: u64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::invalid("modulus must be positive"));
        }
        let before = elements.len();
        elements.sort_unstable();
        elements.dedup();
        if elements.len() != before {
            return Err(Error::Certification("repeated residues".into()));
        }
        if elements.last().is_some_and(|&a| a >= modulus) {
            return Err(Error::Certification(format!("element outside Z_{modulus}")));
        }
        let set = DifferenceSet {
            elements,
            modulus,
            t_bound,
        };
        let worst = set.max_representation();
        if worst > t_bound {
            return Err(Error::Certification(format!(
                "a nonzero difference in Z_{modulus} has {worst} > {t_bound} representations"
            )));
        }
        Ok(set)
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn t_bound(&self) -> u64 {
        self.t_bound
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Measured maximum number of ordered pairs over all nonzero differences.
    pub fn max_representation(&self) -> u64 {
        let m = self.modulus;
        let mut counts = vec![0u64; m as usize];
        for &a in &self.elements {
            for &b in &self.elements {
                if a != b {
                    counts[((a + m - b) % m) as usize] += 1;
                }
            }
        }
        counts.into_iter().max().unwrap_or(0)
    }
}

/// Bose-Chowla set `{a ∈ Z_{p²-1} : g^a - g ∈ GF(p)}` for the field's generator `g`.
pub fn bose_chowla(p: u64, field: &FiniteField) -> Result<DifferenceSet> {
    check_quadratic(p, field)?;
    let g = field.generator();
    let elements: Vec<u64> = (0..field.order() - 1)
        .filter(|&a| {
            let d = field.sub(field.exp(a), g);
            field.coeffs(d)[1] == 0
        })
        .collect();
    if elements.len() as u64 != p {
        return Err(Error::Certification(format!(
            "Bose-Chowla set for p={p} has {} elements",
            elements.len()
        )));
    }
    DifferenceSet::certify(elements, p * p - 1, 1)
}

/// Bose-Chowla set reduced modulo `(p²-1)/t`; every nonzero difference then has at most `t` representations.
pub fn quotient_set(p: u64, t: u64, field: &FiniteField) -> Result<DifferenceSet> {
    if t == 0 || (p - 1) % t != 0 {
        return Err(Error::NotDivisor {
            divisor: t,
            value: p - 1,
        });
    }
    let base = bose_chowla(p, field)?;
    let modulus = (p * p - 1) / t;
    let reduced: Vec<u64> = base.elements().iter().map(|&a| a % modulus).collect();
    DifferenceSet::certify(reduced, modulus, t)
}

fn check_quadratic(p: u64, field: &FiniteField) -> Result<()> {
    if field.characteristic() != p || field.degree() != 2 {
        return Err(Error::invalid(format!(
            "expected GF({p}^2), got GF({}^{})",
            field.characteristic(),
            field.degree()
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::gf;

    // Independent oracle: per-α pair scan, no shared counting table.
    fn max_pairs_per_difference(set: &[u64], m: u64) -> u64 {
        (1..m)
            .map(|alpha| {
                let mut c = 0;
                for &a in set {
                    for &b in set {
                        if (a + m - b) % m == alpha {
                            c += 1;
                        }
                    }
                }
                c
            })
            .max()
            .unwrap_or(0)
    }

    fn is_sidon_by_quadruples(set: &[u64], m: u64) -> bool {
        for &a1 in set {
            for &a2 in set {
                for &a3 in set {
                    for &a4 in set {
                        if (a1 + a2) % m == (a3 + a4) % m {
                            let mut l = [a1, a2];
                            let mut r = [a3, a4];
                            l.sort();
                            r.sort();
                            if l != r {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }

    #[test]
    fn bose_chowla_small_primes() {
        for &p in &[3u64, 5, 13] {
            let f = gf(p, 2).unwrap();
            let a = bose_chowla(p, &f).unwrap();
            assert_eq!(a.len() as u64, p);
            assert_eq!(a.modulus(), p * p - 1);
            assert_eq!(a.t_bound(), 1);
            assert_eq!(max_pairs_per_difference(a.elements(), a.modulus()), 1);
            assert!(is_sidon_by_quadruples(a.elements(), a.modulus()));
        }
    }

    #[test]
    fn bose_chowla_contains_one() {
        // g^1 - g = 0 lies in the prime field
        let f = gf(7, 2).unwrap();
        assert!(bose_chowla(7, &f).unwrap().elements().contains(&1));
    }

    #[test]
    fn quotient_examples() {
        let f5 = gf(5, 2).unwrap();
        assert_eq!(quotient_set(5, 1, &f5).unwrap(), bose_chowla(5, &f5).unwrap());
        let a = quotient_set(5, 2, &f5).unwrap();
        assert_eq!((a.len(), a.modulus(), a.t_bound()), (5, 12, 2));
        assert!(max_pairs_per_difference(a.elements(), 12) <= 2);

        let f13 = gf(13, 2).unwrap();
        let a = quotient_set(13, 4, &f13).unwrap();
        assert_eq!((a.len(), a.modulus(), a.t_bound()), (13, 42, 4));
        assert!(max_pairs_per_difference(a.elements(), 42) <= 4);

        assert!(matches!(quotient_set(13, 5, &f13), Err(Error::NotDivisor { .. })));
    }

    #[test]
    fn wrong_field_is_rejected() {
        let f = gf(5, 3).unwrap();
        assert!(bose_chowla(5, &f).is_err());
    }

    #[test]
    fn certify_rejects_violations() {
        // {0,1,2} in Z_10: difference 1 appears twice
        assert!(DifferenceSet::certify(vec![0, 1, 2], 10, 1).is_err());
        assert!(DifferenceSet::certify(vec![0, 1, 2], 10, 2).is_ok());
        assert!(DifferenceSet::certify(vec![0, 0], 10, 5).is_err());
        assert!(DifferenceSet::certify(vec![11], 10, 1).is_err());
    }
}
