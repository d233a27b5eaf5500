//! Both sides of the q-identities along the three routes: sums of
//! q-binomials, weighted partition enumeration, and series coefficients.

use num_bigint::BigInt;

use crate::partition::{
    enumerate_distinct_bounded, set_a, set_b, set_u, set_w, Partition, PartitionPair,
};
use crate::poly::IntPoly;
use crate::qbinom::{choose2, gauss_binomial, gauss_binomial_dilated};
use crate::series::{poch_series, PochSpec, ZSeries};

fn qbin(n: usize, k: i64) -> IntPoly {
    gauss_binomial(n, k)
}

fn qbin_dilated(n: usize, k: i64, r: usize) -> IntPoly {
    gauss_binomial_dilated(n, k, r).expect("dilation is positive")
}

pub fn new3_lhs(m: usize, n: usize) -> IntPoly {
    (0..=n / 2)
        .map(|k| {
            let free = n - 2 * k;
            (&qbin_dilated(m + k, k as i64, 2) * &qbin(m + 1, free as i64)).shift(choose2(free))
        })
        .sum()
}

pub fn new3_rhs(m: usize, n: usize) -> IntPoly {
    qbin(m + n, n as i64)
}

pub fn new4_lhs(m: usize, n: usize) -> IntPoly {
    (0..=n / 4)
        .map(|k| {
            let free = n - 4 * k;
            (&qbin_dilated(m + k, k as i64, 4) * &qbin(m + 1, free as i64)).shift(choose2(free))
        })
        .sum()
}

pub fn new4_rhs(m: usize, n: usize) -> IntPoly {
    (0..=n / 2)
        .map(|k| {
            let term = &qbin_dilated(m + k, k as i64, 2) * &qbin(m + n - 2 * k, (n - 2 * k) as i64);
            if k % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

pub fn spe1(n: usize) -> (IntPoly, IntPoly) {
    let lhs = (0..=n / 2)
        .map(|k| {
            (&qbin_dilated(n + k, k as i64, 2) * &qbin(n + 1, 2 * k as i64 + 1))
                .shift(choose2(n - 2 * k))
        })
        .sum();
    (lhs, qbin(2 * n, n as i64))
}

pub fn spe2(n: usize) -> (IntPoly, IntPoly) {
    let lhs = (0..=n / 2)
        .map(|k| match n.checked_sub(2 * k + 1) {
            Some(free) => (&qbin_dilated(n + k, k as i64 + 1, 2) * &qbin(n, 2 * k as i64 + 1))
                .shift(choose2(free)),
            // [n choose 2k+1] vanishes once 2k+1 > n
            None => IntPoly::zero(),
        })
        .sum();
    (lhs, qbin(2 * n, n as i64 - 1))
}

/// `sum sign * q^exponent` built by counting, not by repeated polynomial addition.
pub fn weight_polynomial(terms: impl IntoIterator<Item = (i64, usize)>) -> IntPoly {
    let mut counts: Vec<i64> = Vec::new();
    for (sign, e) in terms {
        if counts.len() <= e {
            counts.resize(e + 1, 0);
        }
        counts[e] += sign;
    }
    IntPoly::from_coeffs(counts.into_iter().map(BigInt::from).collect())
}

/// `sum_{lambda in A} q^|lambda|`, which equals `q^n [m+n choose n]_q`.
pub fn gf_a(m: usize, n: usize) -> (IntPoly, IntPoly) {
    let lhs = weight_polynomial(set_a(m, n).map(|l| (1, l.weight())));
    (lhs, new3_rhs(m, n).shift(n))
}

/// Distinct partitions with `n` parts at most `m+1`: `[m+1 choose n]_q q^C(n+1,2)`.
pub fn gf_d(m: usize, n: usize) -> (IntPoly, IntPoly) {
    let lhs = weight_polynomial(enumerate_distinct_bounded(m + 1, n).map(|l| (1, l.weight())));
    (lhs, qbin(m + 1, n as i64).shift(choose2(n + 1)))
}

/// Which identity a partition or series route targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    New3,
    New4,
}

/// Both sides of `q^n * (identity)` as partition sums.
///
/// `New3`: `(sum_B q^(2|l|+|mu|), sum_A q^|l|)`.
/// `New4`: `(sum_W q^(4|l|+|mu|), sum_U (-1)^len(l) q^(2|l|+|mu|))`.
pub fn partition_side(route: Route, m: usize, n: usize) -> (IntPoly, IntPoly) {
    match route {
        Route::New3 => (
            weight_polynomial(set_b(m, n).map(|p| (1, p.weight2()))),
            weight_polynomial(set_a(m, n).map(|l: Partition| (1, l.weight()))),
        ),
        Route::New4 => (
            weight_polynomial(set_w(m, n).map(|p| (1, weight4(&p)))),
            weight_polynomial(set_u(m, n).map(|p| (p.sign(), p.weight2()))),
        ),
    }
}

/// `4|tau| + |mu|`
pub fn weight4(pair: &PartitionPair) -> usize {
    4 * pair.first.weight() + pair.second.weight()
}

/// `1 / (z^zpow; q^dilation)_(m+1)` style factors used by both series identities.
pub mod factors {
    use super::*;

    pub fn inv_poch_z(m: usize, order: usize) -> ZSeries {
        invert(poch_series(PochSpec::new(1, 1, m + 1), order))
    }

    pub fn poch_neg_z(m: usize, order: usize) -> ZSeries {
        poch_series(PochSpec::negated(1, 1, m + 1), order)
    }

    pub fn inv_poch_z2(m: usize, order: usize) -> ZSeries {
        invert(poch_series(PochSpec::new(2, 2, m + 1), order))
    }

    pub fn inv_poch_z4(m: usize, order: usize) -> ZSeries {
        invert(poch_series(PochSpec::new(4, 4, m + 1), order))
    }

    pub fn inv_poch_neg_z2(m: usize, order: usize) -> ZSeries {
        invert(poch_series(PochSpec::negated(2, 2, m + 1), order))
    }

    fn invert(s: ZSeries) -> ZSeries {
        s.inverse().expect("q-shifted factorials have constant term 1")
    }
}

/// The two series identities as (LHS, RHS) at the given order.
///
/// `New3`: `(-z;q)_(m+1) / (z^2;q^2)_(m+1)` vs `1 / (z;q)_(m+1)`.
/// `New4`: `(-z;q)_(m+1) / (z^4;q^4)_(m+1)` vs `1 / ((z;q)_(m+1) (-z^2;q^2)_(m+1))`.
pub fn series_side(route: Route, m: usize, order: usize) -> (ZSeries, ZSeries) {
    use factors::*;
    let mul = |a: ZSeries, b: ZSeries| a.mul(&b).expect("same order");
    match route {
        Route::New3 => (
            mul(inv_poch_z2(m, order), poch_neg_z(m, order)),
            inv_poch_z(m, order),
        ),
        Route::New4 => (
            mul(inv_poch_z4(m, order), poch_neg_z(m, order)),
            mul(inv_poch_z(m, order), inv_poch_neg_z2(m, order)),
        ),
    }
}
