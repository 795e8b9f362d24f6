use crate::error::{Error, Result};

/// All primes `<= limit` in ascending order (odd-only bit sieve).
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    // bit i stands for the odd number 2i + 1
    let slots = (limit as usize - 1) / 2 + 1;
    let mut composite = vec![0u64; slots.div_ceil(64)];
    let is_set = |bits: &[u64], i: usize| bits[i / 64] >> (i % 64) & 1 == 1;
    let mut i = 1;
    while (2 * i + 1) * (2 * i + 1) <= limit as usize {
        if !is_set(&composite, i) {
            let step = 2 * i + 1;
            let mut j = (step * step - 1) / 2;
            while j < slots {
                composite[j / 64] |= 1 << (j % 64);
                j += step;
            }
        }
        i += 1;
    }
    let mut out = vec![2];
    out.extend(
        (1..slots)
            .filter(|&i| !is_set(&composite, i))
            .map(|i| 2 * i as u64 + 1)
            .filter(|&v| v <= limit),
    );
    out
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    (a as u128 * b as u128 % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n % b == 0 {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut r = 0;
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Distinct prime divisors of `n`, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Largest prime in `[lo, hi]`, optionally restricted to `p ≡ r (mod modulus)`.
pub fn prime_in_interval(lo: u64, hi: u64, residue: Option<(u64, u64)>) -> Result<Option<u64>> {
    if let Some((r, m)) = residue {
        if m == 0 || gcd(r % m, m) != 1 {
            return Err(Error::invalid(format!("residue {r} is not a unit mod {m}")));
        }
    }
    if lo > hi {
        return Ok(None);
    }
    let matches = |v: u64| residue.map_or(true, |(r, m)| v % m == r % m);
    Ok((lo..=hi).rev().find(|&v| matches(v) && is_prime(v)))
}
