use serde::Serialize;

use super::primes::primes_up_to;
use crate::error::{Error, Result};

pub const MAX_PARTS: usize = 20;

/// `n = Σ p_i^s` with primes listed in non-increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimePowerDecomposition {
    pub n: u64,
    pub s: u32,
    pub primes: Vec<u64>,
    pub spread: u64,
}

impl PrimePowerDecomposition {
    pub fn parts(&self) -> usize {
        self.primes.len()
    }
}

/// Fewest-parts decomposition of `n` into s-th powers of primes.
///
/// With `balance` set, ties on the part count go to the smallest spread
/// `p_1 - p_ℓ`, then to the lexicographically largest prime list.
pub fn prime_power_decompose(
    n: u64,
    s: u32,
    max_parts: usize,
    balance: bool,
) -> Result<Option<PrimePowerDecomposition>> {
    let candidates = candidate_primes(n, s, |_| true)?;
    decompose_over(n, s, &candidates, 1, max_parts, balance)
}

/// Primes `p` with `p^s <= n` accepted by `keep`, descending.
pub fn candidate_primes(n: u64, s: u32, keep: impl Fn(u64) -> bool) -> Result<Vec<u64>> {
    if s < 2 {
        return Err(Error::invalid("exponent must be at least 2"));
    }
    let root = integer_root(n, s);
    let mut out: Vec<u64> = primes_up_to(root).into_iter().filter(|&p| keep(p)).collect();
    out.reverse();
    Ok(out)
}

/// Same search as [`prime_power_decompose`] over an explicit descending candidate list
/// and a part-count window `min_parts..=max_parts`.
pub fn decompose_over(
    n: u64,
    s: u32,
    candidates: &[u64],
    min_parts: usize,
    max_parts: usize,
    balance: bool,
) -> Result<Option<PrimePowerDecomposition>> {
    if s < 2 {
        return Err(Error::invalid("exponent must be at least 2"));
    }
    if max_parts == 0 || max_parts > MAX_PARTS {
        return Err(Error::invalid(format!("max_parts must lie in 1..={MAX_PARTS}")));
    }
    debug_assert!(candidates.windows(2).all(|w| w[0] > w[1]));
    let powers: Vec<u64> = candidates
        .iter()
        .map(|&p| p.checked_pow(s).unwrap_or(u64::MAX))
        .collect();
    for parts in min_parts.max(1)..=max_parts {
        let mut search = Search {
            powers: &powers,
            candidates,
            balance,
            stack: Vec::with_capacity(parts),
            best: None,
        };
        search.run(n, parts, 0);
        if let Some(idx) = search.best {
            let primes: Vec<u64> = idx.iter().map(|&i| candidates[i]).collect();
            let spread = primes[0] - primes[primes.len() - 1];
            return Ok(Some(PrimePowerDecomposition { n, s, primes, spread }));
        }
    }
    Ok(None)
}

struct Search<'a> {
    powers: &'a [u64],
    candidates: &'a [u64],
    balance: bool,
    stack: Vec<usize>,
    best: Option<Vec<usize>>,
}

impl Search<'_> {
    fn spread_of(&self, idx: &[usize]) -> u64 {
        self.candidates[idx[0]] - self.candidates[idx[idx.len() - 1]]
    }

    /// Returns true once the search can stop.
    fn run(&mut self, remaining: u64, parts_left: usize, from: usize) -> bool {
        if parts_left == 0 {
            if remaining == 0 {
                match &self.best {
                    Some(b) if self.spread_of(b) <= self.spread_of(&self.stack) => {}
                    _ => self.best = Some(self.stack.clone()),
                }
                return !self.balance || self.spread_of(&self.stack) == 0;
            }
            return false;
        }
        for i in from..self.powers.len() {
            let pw = self.powers[i];
            if pw > remaining {
                continue;
            }
            // every later part is at most pw
            if (pw as u128) * (parts_left as u128) < remaining as u128 {
                break;
            }
            if let (Some(best), Some(&first)) = (&self.best, self.stack.first()) {
                let gap = self.candidates[first] - self.candidates[i];
                if gap >= self.spread_of(best) {
                    break;
                }
            }
            self.stack.push(i);
            let done = self.run(remaining - pw, parts_left - 1, i);
            self.stack.pop();
            if done {
                return true;
            }
        }
        false
    }
}

fn integer_root(n: u64, s: u32) -> u64 {
    let mut r = (n as f64).powf(1.0 / s as f64) as u64 + 1;
    while r > 0 && r.checked_pow(s).map_or(true, |v| v > n) {
        r -= 1;
    }
    r
}
