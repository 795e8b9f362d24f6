use serde::Serialize;

use super::poly::{self, Poly};
use crate::error::{Error, Result};
use crate::numtheory::{is_prime, prime_factors};

/// Largest field order this crate builds. Log/exp tables stay under 8 MB.
pub const MAX_FIELD_ORDER: u64 = 1_000_000;

/// An element of GF(p^m), packed as the base-p integer `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`
/// of its polynomial-basis coefficients.
///
/// The derived ordering is the coefficient-lexicographic order with the
/// highest-degree coefficient most significant; all constructions enumerate
/// field elements in this order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FieldElement(u32);

impl FieldElement {
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Arithmetic context for GF(p^m) with a fixed modulus and primitive element.
///
/// Multiplication goes through discrete log/exp tables generated from the
/// primitive element at construction time; addition is digit-wise mod p.
#[derive(Debug, Clone)]
pub struct FiniteField {
    p: u64,
    m: u32,
    q: u64,
    modulus: Poly,
    generator: FieldElement,
    powers_of_p: Vec<u64>,
    exp: Vec<u32>,
    log: Vec<u32>,
    trace_basis: Vec<u64>,
}

/// Builds GF(p^m) with the lexicographically least monic irreducible modulus
/// and the least primitive element.
pub fn gf(p: u64, m: u32) -> Result<FiniteField> {
    FiniteField::new(p, m)
}

impl FiniteField {
    pub fn new(p: u64, m: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::invalid("extension degree must be at least 1"));
        }
        let q = p
            .checked_pow(m)
            .filter(|&q| q <= MAX_FIELD_ORDER)
            .ok_or_else(|| Error::invalid(format!("GF({p}^{m}) exceeds the order cap {MAX_FIELD_ORDER}")))?;
        let powers_of_p: Vec<u64> = (0..m).map(|i| p.pow(i)).collect();

        let modulus = if m == 1 {
            vec![0, 1]
        } else {
            least_irreducible(p, m).ok_or(Error::NoIrreducible { p, m })?
        };

        let digits = |idx: u64| -> Poly {
            let mut out = Vec::with_capacity(m as usize);
            let mut v = idx;
            for _ in 0..m {
                out.push(v % p);
                v /= p;
            }
            poly::trim(out)
        };
        let pack = |a: &[u64]| -> u32 {
            a.iter()
                .zip(&powers_of_p)
                .map(|(&c, &w)| c * w)
                .sum::<u64>() as u32
        };

        let group_order = q - 1;
        let factors = prime_factors(group_order);
        let one: Poly = vec![1];
        let generator_idx = (1..q)
            .find(|&idx| {
                let g = digits(idx);
                factors
                    .iter()
                    .all(|&r| poly::pow_poly_mod(&g, group_order / r, &modulus, p) != one)
            })
            .ok_or_else(|| Error::Certification(format!("GF({q}) has no primitive element")))?;

        let g = digits(generator_idx);
        let mut exp = Vec::with_capacity(group_order as usize);
        let mut log = vec![u32::MAX; q as usize];
        let mut cur: Poly = vec![1];
        for k in 0..group_order {
            let idx = pack(&cur);
            if log[idx as usize] != u32::MAX {
                return Err(Error::Certification(format!(
                    "element {generator_idx} of GF({q}) repeats at power {k}"
                )));
            }
            log[idx as usize] = k as u32;
            exp.push(idx);
            cur = poly::mul_mod(&cur, &g, &modulus, p);
        }
        if cur != one {
            return Err(Error::Certification(format!("generator^(q-1) != 1 in GF({q})")));
        }

        let mut field = FiniteField {
            p,
            m,
            q,
            modulus,
            generator: FieldElement(generator_idx as u32),
            powers_of_p,
            exp,
            log,
            trace_basis: Vec::new(),
        };
        field.trace_basis = (0..m)
            .map(|i| {
                let basis = field.monomial(i);
                let mut acc = field.zero();
                let mut conj = basis;
                for _ in 0..m {
                    acc = field.add(acc, conj);
                    conj = field.pow(conj, p);
                }
                if acc.0 as u64 >= p {
                    return Err(Error::Certification(format!(
                        "trace of X^{i} left the prime field of GF({q})"
                    )));
                }
                Ok(acc.0 as u64)
            })
            .collect::<Result<_>>()?;
        Ok(field)
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    /// Monic modulus polynomial, coefficients low degree first.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn generator(&self) -> FieldElement {
        self.generator
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    /// The prime-field constant `c mod p`.
    pub fn constant(&self, c: u64) -> FieldElement {
        FieldElement((c % self.p) as u32)
    }

    fn monomial(&self, i: u32) -> FieldElement {
        FieldElement(self.powers_of_p[i as usize] as u32)
    }

    pub fn element(&self, index: usize) -> Result<FieldElement> {
        if (index as u64) < self.q {
            Ok(FieldElement(index as u32))
        } else {
            Err(Error::invalid(format!("index {index} outside GF({})", self.q)))
        }
    }

    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<FieldElement> {
        if coeffs.len() != self.m as usize || coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::invalid(format!(
                "expected {} coefficients in 0..{}, got {coeffs:?}",
                self.m, self.p
            )));
        }
        let idx: u64 = coeffs.iter().zip(&self.powers_of_p).map(|(&c, &w)| c * w).sum();
        Ok(FieldElement(idx as u32))
    }

    /// Polynomial-basis coefficients `[c_0, ..., c_{m-1}]`.
    pub fn coeffs(&self, a: FieldElement) -> Vec<u64> {
        let mut v = a.0 as u64;
        (0..self.m)
            .map(|_| {
                let c = v % self.p;
                v /= self.p;
                c
            })
            .collect()
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q as u32).map(FieldElement)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let p = self.p;
        let (mut x, mut y) = (a.0 as u64, b.0 as u64);
        let mut out = 0;
        for &w in &self.powers_of_p {
            out += ((x % p + y % p) % p) * w;
            x /= p;
            y /= p;
        }
        FieldElement(out as u32)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let p = self.p;
        let mut x = a.0 as u64;
        let mut out = 0;
        for &w in &self.powers_of_p {
            out += ((p - x % p) % p) * w;
            x /= p;
        }
        FieldElement(out as u32)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement(0);
        }
        let k = (self.log[a.0 as usize] as u64 + self.log[b.0 as usize] as u64) % (self.q - 1);
        FieldElement(self.exp[k as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Option<FieldElement> {
        if a.0 == 0 {
            return None;
        }
        let n = self.q - 1;
        let k = (n - self.log[a.0 as usize] as u64) % n;
        Some(FieldElement(self.exp[k as usize]))
    }

    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        if e == 0 {
            return self.one();
        }
        if a.0 == 0 {
            return self.zero();
        }
        let n = self.q - 1;
        let k = ((self.log[a.0 as usize] as u128 * e as u128) % n as u128) as u64;
        FieldElement(self.exp[k as usize])
    }

    /// Discrete logarithm to the base of the fixed generator; `None` for zero.
    pub fn log(&self, a: FieldElement) -> Option<u64> {
        (a.0 != 0).then(|| self.log[a.0 as usize] as u64)
    }

    /// `generator^k`.
    pub fn exp(&self, k: u64) -> FieldElement {
        FieldElement(self.exp[(k % (self.q - 1)) as usize])
    }

    /// Multiplication by schoolbook product and reduction, bypassing the tables.
    pub fn mul_by_polynomials(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let pa = poly::trim(self.coeffs(a));
        let pb = poly::trim(self.coeffs(b));
        let r = poly::mul_mod(&pa, &pb, &self.modulus, self.p);
        let idx: u64 = r.iter().zip(&self.powers_of_p).map(|(&c, &w)| c * w).sum();
        FieldElement(idx as u32)
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: FieldElement) -> Option<u64> {
        let k = self.log(a)?;
        let n = self.q - 1;
        Some(n / gcd(n, k))
    }

    /// True iff `a` lies in the subfield of order `sub_order`, i.e. `a^sub_order = a`.
    pub fn in_subfield(&self, a: FieldElement, sub_order: u64) -> bool {
        self.pow(a, sub_order) == a
    }

    /// Relative norm onto the subfield of order `q_0` with `q_0^{s_sub} = q`:
    /// `a^((q-1)/(q_0-1))`.
    pub fn norm(&self, s_sub: u32, a: FieldElement) -> Result<FieldElement> {
        if s_sub == 0 || self.m % s_sub != 0 {
            return Err(Error::NotDivisor {
                divisor: s_sub as u64,
                value: self.m as u64,
            });
        }
        let q0 = self.p.pow(self.m / s_sub);
        Ok(self.pow(a, (self.q - 1) / (q0 - 1)))
    }

    /// Absolute trace onto GF(p), returned as an integer in `0..p`.
    pub fn trace(&self, a: FieldElement) -> u64 {
        let p = self.p;
        let mut x = a.0 as u64;
        let mut acc = 0;
        for &t in &self.trace_basis {
            acc = (acc + (x % p) * t) % p;
            x /= p;
        }
        acc
    }

    /// Quadratic character: 0 at zero, +1 on nonzero squares, -1 elsewhere.
    pub fn quad_char(&self, a: FieldElement) -> Result<i8> {
        if self.p == 2 {
            return Err(Error::invalid("quadratic character needs a field of odd order"));
        }
        Ok(match self.log(a) {
            None => 0,
            Some(k) if k % 2 == 0 => 1,
            Some(_) => -1,
        })
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn least_irreducible(p: u64, m: u32) -> Option<Poly> {
    let count = p.pow(m);
    (0..count).find_map(|idx| {
        let mut f = Vec::with_capacity(m as usize + 1);
        let mut v = idx;
        for _ in 0..m {
            f.push(v % p);
            v /= p;
        }
        f.push(1);
        poly::is_irreducible(&f, p).then_some(f)
    })
}
