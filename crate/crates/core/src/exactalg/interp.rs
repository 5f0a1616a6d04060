//! Euler characteristics from finite-field point counts.
//!
//! A constructible set defined over ℤ whose 𝔽_q point count is (for the
//! primes we use) a polynomial in q of known degree bound has Euler
//! characteristic equal to that polynomial evaluated at q = 1. We sample at
//! `degree_bound + 2` primes so the final sample over-determines the
//! polynomial and detects non-polynomial behaviour.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::laurent::IntPolynomial;
use crate::error::{Error, Result};

/// First `k` primes, ascending.
pub fn first_primes(k: usize) -> Vec<u64> {
    let mut primes = Vec::with_capacity(k);
    let mut n = 2u64;
    while primes.len() < k {
        if primes.iter().all(|p| n % p != 0) {
            primes.push(n);
        }
        n += 1;
    }
    primes
}

/// How many sample primes a count of the given degree bound needs.
pub fn samples_needed(degree_bound: usize) -> usize {
    degree_bound + 2
}

/// Interpolate `(q, count)` samples by a polynomial of degree at most
/// `degree_bound` and evaluate it at 1. Errors with `NonPolynomialCount` if
/// the samples are not consistent with such a polynomial or the value at 1
/// is not an integer.
pub fn interpolate_and_eval_at_one(samples: &[(u64, BigInt)], degree_bound: usize) -> Result<BigInt> {
    if samples.len() < degree_bound + 2 {
        return Err(Error::NonPolynomialCount(format!(
            "need {} samples for degree bound {}, got {}",
            degree_bound + 2,
            degree_bound,
            samples.len()
        )));
    }
    let pts: Vec<(BigRational, BigRational)> = samples
        .iter()
        .take(degree_bound + 1)
        .map(|(q, c)| {
            (
                BigRational::from_integer(BigInt::from(*q)),
                BigRational::from_integer(c.clone()),
            )
        })
        .collect();
    let poly = IntPolynomial::interpolate(&pts);
    for (q, c) in samples {
        let v = poly.eval(&BigRational::from_integer(BigInt::from(*q)));
        if v != BigRational::from_integer(c.clone()) {
            return Err(Error::NonPolynomialCount(format!(
                "count at q={q} is {c}, interpolant gives {v}"
            )));
        }
    }
    let at_one = poly.eval(&BigRational::one());
    if !at_one.is_integer() {
        return Err(Error::NonPolynomialCount(format!(
            "value at q=1 is non-integral: {at_one}"
        )));
    }
    Ok(at_one.to_integer())
}
