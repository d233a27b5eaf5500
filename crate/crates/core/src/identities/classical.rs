//! The classical (q = 1) binomial identities, evaluated over exact rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// `C(x, j)`, zero unless `0 <= j <= x`.
pub fn binomial(x: i64, j: i64) -> BigInt {
    if j < 0 || x < 0 || j > x {
        return BigInt::zero();
    }
    let j = j.min(x - j);
    (0..j).fold(BigInt::one(), |acc, i| acc * (x - i) / (i + 1))
}

fn ratio(num: BigInt, den: i64) -> BigRational {
    BigRational::new(num, BigInt::from(den))
}

fn int(v: BigInt) -> BigRational {
    BigRational::from_integer(v)
}

fn sign(k: i64) -> BigInt {
    if k % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

pub fn s1(n: i64) -> (BigRational, BigRational) {
    let lhs = (0..=n / 2)
        .map(|k| ratio(binomial(3 * k, k) * binomial(n + k, 3 * k), 2 * k + 1))
        .sum();
    (lhs, ratio(binomial(2 * n, n), n + 1))
}

/// Requires `n >= 1`.
pub fn s2(n: i64) -> (BigRational, BigRational) {
    debug_assert!(n >= 1);
    let lhs = (0..=(n - 1) / 2)
        .map(|k| ratio(binomial(3 * k + 1, k + 1) * binomial(n + k, 3 * k + 1), 2 * k + 1))
        .sum();
    (lhs, ratio(binomial(2 * n, n), n + 1))
}

/// Requires `2n + a >= 1`.
///
/// For `n >= 1` the `k = 0` summand `C(n+a-1, n) / a` is taken in the form
/// `C(n+a-1, n-1) / n`, equal for `a >= 1` and finite at `a = 0`.
pub fn s3(n: i64, a: i64) -> (BigRational, BigRational) {
    debug_assert!(2 * n + a >= 1);
    let lhs = (0..=n / 2)
        .map(|k| {
            if k == 0 && n >= 1 {
                ratio(binomial(n + a - 1, n - 1), n)
            } else {
                ratio(binomial(3 * k + a, k) * binomial(n + a + k - 1, n - 2 * k), 3 * k + a)
            }
        })
        .sum();
    (lhs, ratio(binomial(2 * n + a, n), 2 * n + a))
}

pub fn s4(n: i64) -> (BigRational, BigRational) {
    let lhs = (0..=n / 4)
        .map(|k| ratio(binomial(5 * k, k) * binomial(n + k, 5 * k), 4 * k + 1))
        .sum();
    let rhs = (0..=n / 2)
        .map(|k| ratio(sign(k) * binomial(n + k, k) * binomial(2 * n - 2 * k, n), n + 1))
        .sum();
    (lhs, rhs)
}

pub fn s5(n: i64, a: i64) -> (BigRational, BigRational) {
    let lhs = (0..=n / 4)
        .map(|k| {
            ratio(
                BigInt::from(n + a + 1) * binomial(5 * k + a, k) * binomial(n + a + k, 5 * k + a),
                4 * k + a + 1,
            )
        })
        .sum();
    let rhs = (0..=n / 2)
        .map(|k| int(sign(k) * binomial(n + a + k, k) * binomial(2 * n + a - 2 * k, n + a)))
        .sum();
    (lhs, rhs)
}

pub fn new1(m: i64, n: i64) -> (BigRational, BigRational) {
    let lhs = (0..=n / 2)
        .map(|k| int(binomial(m + k, k) * binomial(m + 1, n - 2 * k)))
        .sum();
    (lhs, int(binomial(m + n, n)))
}

pub fn new2(m: i64, n: i64) -> (BigRational, BigRational) {
    let lhs = (0..=n / 4)
        .map(|k| int(binomial(m + k, k) * binomial(m + 1, n - 4 * k)))
        .sum();
    let rhs = (0..=n / 2)
        .map(|k| int(sign(k) * binomial(m + k, k) * binomial(m + n - 2 * k, m)))
        .sum();
    (lhs, rhs)
}
