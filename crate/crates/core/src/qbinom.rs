//! Gaussian binomial coefficients `[n choose k]_q` and their dilations `[n choose k]_{q^r}`.
//!
//! Values come from the q-Pascal recurrence
//! `[n, k] = [n-1, k] + q^(n-k) [n-1, k-1]`, which never leaves integer
//! polynomial arithmetic. Results are cached in a process-wide table.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use crate::error::Result;
use crate::poly::IntPoly;

/// Arguments of `[upper choose lower]_{q^dilation}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QBinomArgs {
    pub upper: usize,
    pub lower: i64,
    pub dilation: usize,
}

impl QBinomArgs {
    pub fn new(upper: usize, lower: i64) -> Self {
        Self { upper, lower, dilation: 1 }
    }

    pub fn dilated(self, dilation: usize) -> Self {
        Self { dilation, ..self }
    }

    pub fn eval(&self) -> Result<IntPoly> {
        gauss_binomial_dilated(self.upper, self.lower, self.dilation)
    }
}

type Memo = RwLock<HashMap<(usize, usize), IntPoly>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// `[n choose k]_q`; zero when `k < 0` or `k > n`.
pub fn gauss_binomial(n: usize, k: i64) -> IntPoly {
    match usize::try_from(k) {
        Ok(k) if k <= n => cached(n, k.min(n - k)),
        _ => IntPoly::zero(),
    }
}

// k <= n - k here; the symmetric half is served by the same entry.
fn cached(n: usize, k: usize) -> IntPoly {
    if k == 0 {
        return IntPoly::one();
    }
    if let Some(p) = memo().read().expect("memo poisoned").get(&(n, k)) {
        return p.clone();
    }
    // Racing writers compute identical values, so last-write-wins is harmless.
    let value = &gauss_binomial(n - 1, k as i64)
        + &gauss_binomial(n - 1, k as i64 - 1).shift(n - k);
    memo()
        .write()
        .expect("memo poisoned")
        .insert((n, k), value.clone());
    value
}

/// `[n choose k]_{q^r}`.
pub fn gauss_binomial_dilated(n: usize, k: i64, r: usize) -> Result<IntPoly> {
    gauss_binomial(n, k).dilate(r)
}

/// `a(a-1)/2`, the exponent in `q^C(a,2)`.
pub fn choose2(a: usize) -> usize {
    a * a.saturating_sub(1) / 2
}
