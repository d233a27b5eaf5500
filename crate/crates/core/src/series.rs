//! Power series in `z` truncated at a fixed order, with [`IntPoly`] coefficients.
//!
//! These carry the generating-function side of the identities: finite
//! q-shifted factorials `(+-z^j; q^r)_n`, their reciprocals, and products.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::IntPoly;

/// Series `c_0 + c_1 z + ... + c_N z^N` modulo `z^(N+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZSeries {
    coeffs: Vec<IntPoly>,
}

impl ZSeries {
    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![IntPoly::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(IntPoly::one(), order)
    }

    pub fn constant(c: IntPoly, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// Coefficients past `order` are dropped; missing ones are zero.
    pub fn from_coeffs(mut coeffs: Vec<IntPoly>, order: usize) -> Self {
        coeffs.resize(order + 1, IntPoly::zero());
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[IntPoly] {
        &self.coeffs
    }

    /// The coefficient of `z^n`.
    pub fn coeff(&self, n: usize) -> Result<&IntPoly> {
        self.coeffs.get(n).ok_or(Error::CoefficientOutOfRange {
            index: n,
            order: self.order(),
        })
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(Error::OrderMismatch { left: self.order(), right: other.order() })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let order = self.order();
        let mut out = Self::zero(order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += &(a * b);
                }
            }
        }
        Ok(out)
    }

    /// Reciprocal of a series whose constant term is exactly 1:
    /// `B_0 = 1`, `B_n = -sum_{i=1..n} A_i B_(n-i)`.
    pub fn inverse(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::NotInvertible);
        }
        let order = self.order();
        let mut inv = Vec::with_capacity(order + 1);
        inv.push(IntPoly::one());
        for n in 1..=order {
            let mut acc = IntPoly::zero();
            for i in 1..=n {
                if !self.coeffs[i].is_zero() {
                    acc += &(&self.coeffs[i] * &inv[n - i]);
                }
            }
            inv.push(-acc);
        }
        Ok(Self { coeffs: inv })
    }
}

/// Renders one line per power: `z^n: <poly>`.
impl fmt::Display for ZSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, c) in self.coeffs.iter().enumerate() {
            if n > 0 {
                f.write_str("\n")?;
            }
            write!(f, "z^{n}: {c}")?;
        }
        Ok(())
    }
}

/// `(a; q^r)_count` with `a = sign * z^zpow`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PochSpec {
    /// `true` for `a = -z^zpow`.
    pub negative: bool,
    pub zpow: usize,
    pub dilation: usize,
    pub count: usize,
}

impl PochSpec {
    /// `(z^zpow; q^dilation)_count`
    pub fn new(zpow: usize, dilation: usize, count: usize) -> Self {
        assert!(zpow >= 1 && dilation >= 1, "zpow and dilation must be positive");
        Self { negative: false, zpow, dilation, count }
    }

    /// `(-z^zpow; q^dilation)_count`
    pub fn negated(zpow: usize, dilation: usize, count: usize) -> Self {
        Self { negative: true, ..Self::new(zpow, dilation, count) }
    }

    /// `+1` or `-1`, the sign of `a`.
    pub fn sign(&self) -> i64 {
        if self.negative {
            -1
        } else {
            1
        }
    }
}

/// Expands `prod_{k<count} (1 - a q^(dilation k))` to the given order.
pub fn poch_series(spec: PochSpec, order: usize) -> ZSeries {
    let mut acc = ZSeries::one(order);
    for k in 0..spec.count {
        // factor 1 - sign z^zpow q^(dilation k); shifting acc by z^zpow
        let term = IntPoly::monomial(BigInt::from(-spec.sign()), spec.dilation * k);
        for n in (spec.zpow..=order).rev() {
            let shifted = &acc.coeffs[n - spec.zpow] * &term;
            acc.coeffs[n] += &shifted;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qbinom::{choose2, gauss_binomial};

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn series(cs: &[&[i64]], order: usize) -> ZSeries {
        ZSeries::from_coeffs(cs.iter().map(|c| p(c)).collect(), order)
    }

    #[test]
    fn mul_examples() {
        let a = series(&[&[1, 2], &[], &[0, 0, 5], &[-1]], 3);
        assert_eq!(a.mul(&ZSeries::one(3)).unwrap(), a);
        let plus = series(&[&[1], &[1]], 2);
        let minus = series(&[&[1], &[-1]], 2);
        let prod = plus.mul(&minus).unwrap();
        assert_eq!(prod, series(&[&[1], &[], &[-1]], 2));
        assert!(prod.coeff(1).unwrap().is_zero());
        let geom = series(&[&[1], &[1], &[1], &[1]], 3);
        assert_eq!(geom.mul(&series(&[&[1], &[-1]], 3)).unwrap(), ZSeries::one(3));
    }

    #[test]
    fn mixed_orders_rejected() {
        let err = ZSeries::one(2).mul(&ZSeries::one(3)).unwrap_err();
        assert_eq!(err, Error::OrderMismatch { left: 2, right: 3 });
        assert!(ZSeries::one(2).add(&ZSeries::one(1)).is_err());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(ZSeries::one(4).inverse().unwrap(), ZSeries::one(4));
        let inv = series(&[&[1], &[-1]], 3).inverse().unwrap();
        assert_eq!(inv, series(&[&[1], &[1], &[1], &[1]], 3));
        let poch = poch_series(PochSpec::new(1, 1, 2), 2);
        let inv = poch.inverse().unwrap();
        assert_eq!(inv.coeff(2).unwrap(), &p(&[1, 1, 1]));
        assert_eq!(inv.coeff(2).unwrap(), &gauss_binomial(3, 2));
    }

    #[test]
    fn inverse_needs_unit_constant() {
        assert_eq!(ZSeries::zero(2).inverse(), Err(Error::NotInvertible));
        assert_eq!(ZSeries::constant(p(&[-1]), 2).inverse(), Err(Error::NotInvertible));
        assert_eq!(ZSeries::constant(p(&[1, 1]), 2).inverse(), Err(Error::NotInvertible));
    }

    #[test]
    fn poch_examples() {
        assert_eq!(poch_series(PochSpec::new(1, 1, 0), 5), ZSeries::one(5));
        assert_eq!(
            poch_series(PochSpec::negated(1, 1, 2), 2),
            series(&[&[1], &[1, 1], &[0, 1]], 2)
        );
        assert_eq!(
            poch_series(PochSpec::new(2, 2, 1), 4),
            series(&[&[1], &[], &[-1]], 4)
        );
        // truncation drops the z^2 term
        assert_eq!(
            poch_series(PochSpec::negated(1, 1, 2), 1),
            series(&[&[1], &[1, 1]], 1)
        );
    }

    #[test]
    fn coeff_examples() {
        assert_eq!(ZSeries::one(3).coeff(0).unwrap(), &IntPoly::one());
        assert!(ZSeries::one(3).coeff(3).unwrap().is_zero());
        assert_eq!(
            ZSeries::one(3).coeff(4),
            Err(Error::CoefficientOutOfRange { index: 4, order: 3 })
        );
        let inv = poch_series(PochSpec::new(1, 1, 3), 3).inverse().unwrap();
        assert_eq!(inv.coeff(3).unwrap(), &gauss_binomial(5, 3));
    }

    #[test]
    fn q_binomial_theorem_small() {
        for m in 0..=4usize {
            let inv = poch_series(PochSpec::new(1, 1, m + 1), 8).inverse().unwrap();
            let fwd = poch_series(PochSpec::negated(1, 1, m + 1), 8);
            for k in 0..=8usize {
                assert_eq!(inv.coeff(k).unwrap(), &gauss_binomial(m + k, k as i64));
                let expect = gauss_binomial(m + 1, k as i64).shift(choose2(k));
                assert_eq!(fwd.coeff(k).unwrap(), &expect);
            }
        }
    }

    #[test]
    fn render() {
        let s = series(&[&[1], &[1, 1], &[0, 1]], 2);
        assert_eq!(s.to_string(), "z^0: 1\nz^1: 1 + q\nz^2: q");
    }
}
