//! Prime search, Sidon-type difference sets, and decompositions into prime powers.

mod primes;
mod sidon;
mod waring;

pub use primes::{gcd, is_prime, prime_factors, prime_in_interval, primes_up_to};
pub use sidon::{bose_chowla, quotient_set, DifferenceSet};
pub use waring::{
    candidate_primes, decompose_over, prime_power_decompose, PrimePowerDecomposition, MAX_PARTS,
};
