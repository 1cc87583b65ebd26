//! Binomial coefficients and factorials over big integers.

use num_bigint::BigInt;
use num_traits::One;

use super::ExactScalar;

/// `C(n, k)` as a big integer, zero when `k < 0`, `k > n` or `n < 0`.
pub fn binom_int(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn binom(n: i64, k: i64) -> ExactScalar {
    ExactScalar::from(binom_int(n, k))
}

/// Product of `C(a_k, b_k)` over all positions; the shorter sequence is
/// padded with zeros.
pub fn multi_binom(a: &[i64], b: &[i64]) -> ExactScalar {
    ExactScalar::from(multi_binom_int(a, b))
}

pub fn multi_binom_int(a: &[i64], b: &[i64]) -> BigInt {
    let len = a.len().max(b.len());
    let at = |v: &[i64], i: usize| v.get(i).copied().unwrap_or(0);
    (0..len).fold(BigInt::one(), |acc, i| acc * binom_int(at(a, i), at(b, i)))
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}
