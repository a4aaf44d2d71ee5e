//! Exact integer helpers: factorials and binomial coefficients.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `n!` as an exact integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for t in 2..=n {
        acc *= t;
    }
    acc
}

/// Binomial coefficient `C(n, k)` for `n >= 0`, with `C(n, k) = 0` whenever
/// `k < 0` or `k > n`. A negative upper index is a caller bug and panics.
pub fn binomial(n: i64, k: i64) -> BigInt {
    assert!(n >= 0, "binomial: negative upper index {n}");
    if k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    // After step t the accumulator equals C(n, t + 1), so the division is exact.
    for t in 0..k {
        acc *= n - t;
        acc /= t + 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorial_small() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(factorial(20), BigInt::from(2432902008176640000u64));
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(0, 0), BigInt::from(1));
        assert_eq!(binomial(10, 3), BigInt::from(120));
        assert_eq!(binomial(10, 11), BigInt::from(0));
        assert_eq!(binomial(10, -1), BigInt::from(0));
        assert_eq!(binomial(60, 30), "118264581564861424".parse::<BigInt>().unwrap());
    }

    #[test]
    fn binomial_row_sums() {
        for n in 0..12i64 {
            let sum: BigInt = (0..=n).map(|k| binomial(n, k)).sum();
            assert_eq!(sum, BigInt::from(1) << n);
        }
    }
}
