//! Registry of the identities, a point evaluator for each, and the sweep
//! verifier that produces [`VerificationReport`]s.

pub mod classical;
pub mod sides;

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::IntPoly;
use sides::Route;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum IdentityId {
    #[serde(rename = "s1")]
    S1,
    #[serde(rename = "s2")]
    S2,
    #[serde(rename = "s3")]
    S3,
    #[serde(rename = "s4")]
    S4,
    #[serde(rename = "s5")]
    S5,
    #[serde(rename = "new1")]
    New1,
    #[serde(rename = "new2")]
    New2,
    #[serde(rename = "new3")]
    New3,
    #[serde(rename = "new4")]
    New4,
    #[serde(rename = "spe1")]
    Spe1,
    #[serde(rename = "spe2")]
    Spe2,
    #[serde(rename = "gf_A")]
    GfA,
    #[serde(rename = "gf_D")]
    GfD,
    #[serde(rename = "qbione")]
    Qbione,
    #[serde(rename = "qbitwo")]
    Qbitwo,
}

impl IdentityId {
    pub const ALL: [IdentityId; 15] = [
        IdentityId::S1,
        IdentityId::S2,
        IdentityId::S3,
        IdentityId::S4,
        IdentityId::S5,
        IdentityId::New1,
        IdentityId::New2,
        IdentityId::New3,
        IdentityId::New4,
        IdentityId::Spe1,
        IdentityId::Spe2,
        IdentityId::GfA,
        IdentityId::GfD,
        IdentityId::Qbione,
        IdentityId::Qbitwo,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::S1 => "s1",
            IdentityId::S2 => "s2",
            IdentityId::S3 => "s3",
            IdentityId::S4 => "s4",
            IdentityId::S5 => "s5",
            IdentityId::New1 => "new1",
            IdentityId::New2 => "new2",
            IdentityId::New3 => "new3",
            IdentityId::New4 => "new4",
            IdentityId::Spe1 => "spe1",
            IdentityId::Spe2 => "spe2",
            IdentityId::GfA => "gf_A",
            IdentityId::GfD => "gf_D",
            IdentityId::Qbione => "qbione",
            IdentityId::Qbitwo => "qbitwo",
        }
    }

    /// Whether the identity is parameterised by `m`.
    pub fn uses_m(self) -> bool {
        matches!(
            self,
            IdentityId::New1
                | IdentityId::New2
                | IdentityId::New3
                | IdentityId::New4
                | IdentityId::GfA
                | IdentityId::GfD
                | IdentityId::Qbione
                | IdentityId::Qbitwo
        )
    }

    /// Whether the identity is parameterised by `a`.
    pub fn uses_a(self) -> bool {
        matches!(self, IdentityId::S3 | IdentityId::S5)
    }

    /// Smallest admissible `n`.
    pub fn min_n(self) -> usize {
        match self {
            IdentityId::S2 => 1,
            _ => 0,
        }
    }

    /// Default inclusive sweep bounds.
    pub fn default_bounds(self) -> SweepBounds {
        let (m_max, n_max, a_max) = match self {
            IdentityId::S1 | IdentityId::S2 => (0, 20, 0),
            IdentityId::S3 | IdentityId::S5 => (0, 12, 4),
            IdentityId::S4 => (0, 12, 0),
            IdentityId::Spe1 | IdentityId::Spe2 => (0, 10, 0),
            IdentityId::GfA => (6, 10, 0),
            IdentityId::GfD => (6, 7, 0),
            _ => (6, 12, 0),
        };
        SweepBounds { m_max, n_max, a_max, n_min: None }
    }

    /// Whether the point lies in the identity's domain.
    pub fn admits(self, point: ParamPoint) -> bool {
        match self {
            IdentityId::S2 => point.n >= 1,
            // 1/(2n+a) on the right
            IdentityId::S3 => 2 * point.n + point.a >= 1,
            _ => true,
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ParamPoint {
    pub m: usize,
    pub n: usize,
    pub a: usize,
}

impl ParamPoint {
    pub fn new(m: usize, n: usize, a: usize) -> Self {
        Self { m, n, a }
    }
}

impl fmt::Display for ParamPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m={} n={} a={}", self.m, self.n, self.a)
    }
}

/// An exact side value: a polynomial in `q` or a rational number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Poly(IntPoly),
    Rational(BigRational),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Poly(p) => p.fmt(f),
            Value::Rational(r) => r.fmt(f),
        }
    }
}

/// Evaluates both sides of `id` at one point.
///
/// `order` is the series truncation order used by `qbione`/`qbitwo`; it is
/// raised to `point.n` when smaller.
pub fn evaluate(id: IdentityId, point: ParamPoint, order: usize) -> Result<(Value, Value)> {
    if !id.admits(point) {
        return Err(Error::OutOfDomain {
            identity: id.name(),
            point: point.to_string(),
            reason: match id {
                IdentityId::S2 => "requires n >= 1",
                _ => "requires 2n + a >= 1",
            },
        });
    }
    let ParamPoint { m, n, a } = point;
    let (ni, ai, mi) = (n as i64, a as i64, m as i64);
    let rat = |(l, r): (BigRational, BigRational)| (Value::Rational(l), Value::Rational(r));
    let poly = |(l, r): (IntPoly, IntPoly)| (Value::Poly(l), Value::Poly(r));
    Ok(match id {
        IdentityId::S1 => rat(classical::s1(ni)),
        IdentityId::S2 => rat(classical::s2(ni)),
        IdentityId::S3 => rat(classical::s3(ni, ai)),
        IdentityId::S4 => rat(classical::s4(ni)),
        IdentityId::S5 => rat(classical::s5(ni, ai)),
        IdentityId::New1 => rat(classical::new1(mi, ni)),
        IdentityId::New2 => rat(classical::new2(mi, ni)),
        IdentityId::New3 => poly((sides::new3_lhs(m, n), sides::new3_rhs(m, n))),
        IdentityId::New4 => poly((sides::new4_lhs(m, n), sides::new4_rhs(m, n))),
        IdentityId::Spe1 => poly(sides::spe1(n)),
        IdentityId::Spe2 => poly(sides::spe2(n)),
        IdentityId::GfA => poly(sides::gf_a(m, n)),
        IdentityId::GfD => poly(sides::gf_d(m, n)),
        IdentityId::Qbione | IdentityId::Qbitwo => {
            let route = if id == IdentityId::Qbione { Route::New3 } else { Route::New4 };
            let (lhs, rhs) = sides::series_side(route, m, order.max(n));
            poly((lhs.coeff(n)?.clone(), rhs.coeff(n)?.clone()))
        }
    })
}

/// Inclusive sweep limits. `n_min` defaults to the identity's minimum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepBounds {
    pub m_max: usize,
    pub n_max: usize,
    pub a_max: usize,
    pub n_min: Option<usize>,
}

impl SweepBounds {
    pub fn new(m_max: usize, n_max: usize, a_max: usize) -> Self {
        Self { m_max, n_max, a_max, n_min: None }
    }
}

/// Outcome at one parameter point; `pass` iff the two sides are identical.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub identity: IdentityId,
    pub m: usize,
    pub n: usize,
    pub a: usize,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
}

impl VerificationReport {
    pub fn point(&self) -> ParamPoint {
        ParamPoint::new(self.m, self.n, self.a)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {} lhs={} rhs={}",
            if self.pass { "PASS" } else { "FAIL" },
            self.identity,
            self.point(),
            self.lhs,
            self.rhs
        )
    }
}

/// The grid of admissible points for `id`, ordered by `(m, n, a)`.
pub fn sweep_points(id: IdentityId, bounds: SweepBounds) -> Result<Vec<ParamPoint>> {
    let n_min = bounds.n_min.unwrap_or(id.min_n());
    if n_min < id.min_n() || n_min > bounds.n_max {
        return Err(Error::OutOfDomain {
            identity: id.name(),
            point: format!("n in {n_min}..={}", bounds.n_max),
            reason: if id == IdentityId::S2 { "requires n >= 1" } else { "empty n range" },
        });
    }
    let m_max = if id.uses_m() { bounds.m_max } else { 0 };
    let a_max = if id.uses_a() { bounds.a_max } else { 0 };
    let mut points = Vec::new();
    for m in 0..=m_max {
        for n in n_min..=bounds.n_max {
            for a in 0..=a_max {
                let p = ParamPoint::new(m, n, a);
                if id.admits(p) {
                    points.push(p);
                }
            }
        }
    }
    Ok(points)
}

/// Verifies `id` on every admissible point of the grid.
///
/// Points are evaluated in parallel; the result is in `(m, n, a)` order.
/// Series identities are truncated at `bounds.n_max`.
pub fn verify_sweep(id: IdentityId, bounds: SweepBounds) -> Result<Vec<VerificationReport>> {
    let points = sweep_points(id, bounds)?;
    points
        .par_iter()
        .map(|&p| {
            let (lhs, rhs) = evaluate(id, p, bounds.n_max)?;
            Ok(VerificationReport {
                identity: id,
                m: p.m,
                n: p.n,
                a: p.a,
                pass: lhs == rhs,
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            })
        })
        .collect()
}

/// Looks up an identity by name and sweeps it.
pub fn verify_sweep_named(name: &str, bounds: SweepBounds) -> Result<Vec<VerificationReport>> {
    verify_sweep(name.parse()?, bounds)
}

pub fn reports_to_json(reports: &[VerificationReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}

pub fn reports_to_csv(reports: &[VerificationReport]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    if reports.is_empty() {
        w.write_record(["identity", "m", "n", "a", "lhs", "rhs", "pass"])
            .expect("in-memory write");
    }
    for r in reports {
        w.serialize(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}
