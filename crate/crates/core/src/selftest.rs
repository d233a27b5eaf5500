//! Built-in verification suites run by `qbinomial selftest`.
//!
//! Each suite checks one claim exhaustively over a parameter box and reports
//! the first counterexample it meets. [`Scale::quick`] shrinks every box to
//! `m <= 2, n <= 4`.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::bijection::{halve, phi, phi_inverse, theta_with, TieRule};
use crate::identities::classical;
use crate::identities::sides::{self, factors, Route};
use crate::identities::{verify_sweep, IdentityId, SweepBounds};
use crate::partition::{
    enumerate_bounded, enumerate_distinct_bounded, set_a, set_b, set_u, Partition, PartitionPair,
};
use crate::poly::IntPoly;
use crate::qbinom::{choose2, gauss_binomial};
use crate::series::ZSeries;

/// Parameter boxes for the suites (all bounds inclusive).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Scale {
    pub identity_m: usize,
    pub identity_n: usize,
    pub phi_m: usize,
    pub phi_n: usize,
    pub theta_m: usize,
    pub theta_n: usize,
    pub series_order: usize,
    pub classical_n: usize,
    pub classical_a: usize,
    pub s12_n: usize,
    pub special_n: usize,
    pub special_q1_n: usize,
    pub pascal_n: usize,
    pub random_cases: usize,
}

impl Scale {
    pub fn full() -> Self {
        Self {
            identity_m: 6,
            identity_n: 12,
            phi_m: 5,
            phi_n: 10,
            theta_m: 4,
            theta_n: 8,
            series_order: 12,
            classical_n: 12,
            classical_a: 4,
            s12_n: 20,
            special_n: 10,
            special_q1_n: 15,
            pascal_n: 30,
            random_cases: 1000,
        }
    }

    pub fn quick() -> Self {
        Self {
            identity_m: 2,
            identity_n: 4,
            phi_m: 2,
            phi_n: 4,
            theta_m: 2,
            theta_n: 4,
            series_order: 4,
            classical_n: 4,
            classical_a: 2,
            s12_n: 4,
            special_n: 4,
            special_q1_n: 4,
            pascal_n: 4,
            random_cases: 50,
        }
    }
}

/// Deliberate defects, used to check that the suites notice them.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mutation {
    #[default]
    None,
    /// `theta` sends equal pivots to the second branch.
    ThetaTie,
}

#[derive(Clone, Debug)]
pub struct SuiteResult {
    pub name: &'static str,
    pub outcome: Result<String, String>,
    pub elapsed: Duration,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.outcome.is_ok()
    }
}

impl std::fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let (tag, msg) = match &self.outcome {
            Ok(m) => ("PASS", m),
            Err(m) => ("FAIL", m),
        };
        write!(f, "{tag} {:<22} {msg} ({:.2?})", self.name, self.elapsed)
    }
}

type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

pub const SUITE_NAMES: [&str; 9] = [
    "new3 identity",
    "new4 identity",
    "phi bijection",
    "theta involution",
    "series route",
    "q-binomial theorem",
    "classical identities",
    "special cases",
    "structural properties",
];

type Suite = (&'static str, Box<dyn Fn() -> Check>);

/// Runs every suite in order.
pub fn run_all(scale: Scale, mutation: Mutation) -> Vec<SuiteResult> {
    let suites: [Suite; 9] = [
        (SUITE_NAMES[0], Box::new(move || identity_suite(IdentityId::New3, scale))),
        (SUITE_NAMES[1], Box::new(move || identity_suite(IdentityId::New4, scale))),
        (SUITE_NAMES[2], Box::new(move || phi_suite(scale))),
        (SUITE_NAMES[3], Box::new(move || theta_suite(scale, mutation))),
        (SUITE_NAMES[4], Box::new(move || series_suite(scale))),
        (SUITE_NAMES[5], Box::new(move || q_binomial_theorem_suite(scale))),
        (SUITE_NAMES[6], Box::new(move || classical_suite(scale))),
        (SUITE_NAMES[7], Box::new(move || special_suite(scale))),
        (SUITE_NAMES[8], Box::new(move || structural_suite(scale))),
    ];
    suites
        .into_iter()
        .map(|(name, run)| {
            let start = Instant::now();
            let outcome = run();
            SuiteResult { name, outcome, elapsed: start.elapsed() }
        })
        .collect()
}

fn sweep_all_pass(id: IdentityId, bounds: SweepBounds) -> Result<usize, String> {
    let reports = verify_sweep(id, bounds).map_err(|e| e.to_string())?;
    if let Some(bad) = reports.iter().find(|r| !r.pass) {
        return Err(bad.to_string());
    }
    Ok(reports.len())
}

fn identity_suite(id: IdentityId, s: Scale) -> Check {
    let count = sweep_all_pass(id, SweepBounds::new(s.identity_m, s.identity_n, 0))?;
    Ok(format!("{count} points"))
}

fn phi_suite(s: Scale) -> Check {
    let mut checked = 0;
    for m in 0..=s.phi_m {
        for n in 0..=s.phi_n {
            let domain: Vec<Partition> = set_a(m, n).collect();
            let codomain: HashSet<PartitionPair> = set_b(m, n).collect();
            let mut image = HashSet::new();
            for lambda in &domain {
                let pair = phi(lambda);
                ensure!(
                    lambda.weight() == pair.weight2(),
                    "weight law fails at {lambda} -> {pair}"
                );
                ensure!(codomain.contains(&pair), "{lambda} -> {pair} lands outside B({m},{n})");
                ensure!(
                    phi_inverse(&pair).as_ref() == Ok(lambda),
                    "phi_inverse does not undo phi at {lambda}"
                );
                ensure!(image.insert(pair.clone()), "phi not injective: {pair} hit twice");
            }
            ensure!(image == codomain, "phi misses part of B({m},{n})");
            for pair in &codomain {
                let back = phi_inverse(pair).map_err(|e| e.to_string())?;
                ensure!(&phi(&back) == pair, "phi(phi_inverse({pair})) != {pair}");
            }
            let (b_sum, a_sum) = sides::partition_side(Route::New3, m, n);
            let target = sides::new3_lhs(m, n).shift(n);
            ensure!(
                a_sum == b_sum && a_sum == target,
                "weight sums disagree at m={m} n={n}"
            );
            checked += domain.len();
        }
    }
    Ok(format!("{checked} partitions"))
}

fn theta_suite(s: Scale, mutation: Mutation) -> Check {
    let tie = match mutation {
        Mutation::ThetaTie => TieRule::Strict,
        Mutation::None => TieRule::Inclusive,
    };
    let mut checked = 0;
    for m in 0..=s.theta_m {
        for n in 0..=s.theta_n {
            let u: Vec<PartitionPair> = set_u(m, n).collect();
            let members: HashSet<&PartitionPair> = u.iter().collect();
            let mut signed = Vec::new();
            let mut fixed = Vec::new();
            let mut folded = Vec::new();
            for p in &u {
                signed.push((p.sign(), p.weight2()));
                if p.is_in_v() {
                    fixed.push((1, p.weight2()));
                    let tau = halve(&p.first).map_err(|e| e.to_string())?;
                    folded.push((1, 4 * tau.weight() + p.second.weight()));
                    continue;
                }
                let (img, case) = theta_with(p, tie).map_err(|e| e.to_string())?;
                ensure!(&img != p, "theta fixes {p}");
                ensure!(
                    members.contains(&img) && !img.is_in_v(),
                    "theta{p} = {img} leaves U\\V ({:?} pivot {})",
                    case.branch,
                    case.pivot
                );
                ensure!(img.weight2() == p.weight2(), "theta changes 2|l|+|mu| at {p}");
                ensure!(img.sign() == -p.sign(), "theta keeps the sign at {p}");
                let (back, _) = theta_with(&img, tie).map_err(|e| e.to_string())?;
                ensure!(&back == p, "theta(theta({p})) = {back}");
                checked += 1;
            }
            let signed = sides::weight_polynomial(signed);
            ensure!(
                signed == sides::weight_polynomial(fixed),
                "signed sum over U differs from sum over V at m={m} n={n}"
            );
            let target = sides::new4_lhs(m, n).shift(n);
            ensure!(
                sides::weight_polynomial(folded) == target,
                "halved V sum differs from q^n * LHS at m={m} n={n}"
            );
            ensure!(
                signed == sides::new4_rhs(m, n).shift(n),
                "signed U sum differs from q^n * RHS at m={m} n={n}"
            );
        }
    }
    Ok(format!("{checked} pairs"))
}

fn series_suite(s: Scale) -> Check {
    let order = s.series_order;
    for m in 0..=s.identity_m {
        for route in [Route::New3, Route::New4] {
            let (lhs, rhs) = sides::series_side(route, m, order);
            ensure!(lhs == rhs, "{route:?} series differ at m={m}");
            for n in 0..=order {
                let (l, r) = match route {
                    Route::New3 => (sides::new3_lhs(m, n), sides::new3_rhs(m, n)),
                    Route::New4 => (sides::new4_lhs(m, n), sides::new4_rhs(m, n)),
                };
                ensure!(
                    lhs.coeffs()[n] == l && rhs.coeffs()[n] == r,
                    "{route:?} z^{n} coefficient differs from the q-binomial sums at m={m}"
                );
            }
        }
    }
    Ok(format!("m <= {}, order {order}", s.identity_m))
}

fn q_binomial_theorem_suite(s: Scale) -> Check {
    let order = s.series_order;
    for m in 0..=s.identity_m {
        let inv = factors::inv_poch_z(m, order);
        let fwd = factors::poch_neg_z(m, order);
        for k in 0..=order {
            ensure!(
                inv.coeffs()[k] == gauss_binomial(m + k, k as i64),
                "1/(z;q)_{} at z^{k}",
                m + 1
            );
            ensure!(
                fwd.coeffs()[k] == gauss_binomial(m + 1, k as i64).shift(choose2(k)),
                "(-z;q)_{} at z^{k}",
                m + 1
            );
        }
    }
    Ok(format!("m <= {}, k <= {order}", s.identity_m))
}

fn classical_suite(s: Scale) -> Check {
    let mut total = 0;
    total += sweep_all_pass(IdentityId::S1, SweepBounds::new(0, s.s12_n, 0))?;
    total += sweep_all_pass(IdentityId::S2, SweepBounds::new(0, s.s12_n, 0))?;
    for id in [IdentityId::S3, IdentityId::S5] {
        total += sweep_all_pass(id, SweepBounds::new(0, s.classical_n, s.classical_a))?;
    }
    total += sweep_all_pass(IdentityId::S4, SweepBounds::new(0, s.classical_n, 0))?;
    for id in [IdentityId::New1, IdentityId::New2] {
        total += sweep_all_pass(id, SweepBounds::new(s.identity_m, s.identity_n, 0))?;
    }
    for n in 0..=s.classical_n as i64 {
        let (l4, r4) = classical::s4(n);
        let (l5, r5) = classical::s5(n, 0);
        let scale = num_rational::BigRational::from_integer((n + 1).into());
        ensure!(l4 * &scale == l5 && r4 * &scale == r5, "s4 != s5(a=0)/(n+1) at n={n}");
    }
    for m in 0..=s.identity_m {
        for n in 0..=s.identity_n {
            let (mi, ni) = (m as i64, n as i64);
            let new1 = classical::new1(mi, ni).0;
            let new2 = classical::new2(mi, ni).0;
            ensure!(
                sides::new3_lhs(m, n).at_one() == new1.to_integer()
                    && sides::new3_rhs(m, n).at_one() == new1.to_integer(),
                "new3 at q=1 differs from new1 at m={m} n={n}"
            );
            ensure!(
                sides::new4_lhs(m, n).at_one() == new2.to_integer()
                    && sides::new4_rhs(m, n).at_one() == new2.to_integer(),
                "new4 at q=1 differs from new2 at m={m} n={n}"
            );
        }
    }
    Ok(format!("{total} points"))
}

fn special_suite(s: Scale) -> Check {
    let count = sweep_all_pass(IdentityId::Spe1, SweepBounds::new(0, s.special_n, 0))?
        + sweep_all_pass(IdentityId::Spe2, SweepBounds::new(0, s.special_n, 0))?;
    for n in 1..=s.special_q1_n {
        let ni = n as i64;
        let s1 = classical::s1(ni).1;
        let s2 = classical::s2(ni).1;
        let (l1, r1) = sides::spe1(n);
        let (l2, r2) = sides::spe2(n);
        let want1 = (s1 * num_rational::BigRational::from_integer((ni + 1).into())).to_integer();
        let want2 = (s2 * num_rational::BigRational::from_integer(ni.into())).to_integer();
        ensure!(
            l1.at_one() == want1 && r1.at_one() == want1,
            "spe1 at q=1 is not (n+1)*s1 at n={n}"
        );
        ensure!(
            l2.at_one() == want2 && r2.at_one() == want2,
            "spe2 at q=1 is not n*s2 at n={n}"
        );
    }
    Ok(format!("{count} points"))
}

fn random_poly(rng: &mut StdRng, max_deg: usize, bound: i64) -> IntPoly {
    let deg = rng.random_range(0..=max_deg);
    IntPoly::from_coeffs(
        (0..=deg)
            .map(|_| BigInt::from(rng.random_range(-bound..=bound)))
            .collect(),
    )
}

fn structural_suite(s: Scale) -> Check {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..s.random_cases {
        let a = random_poly(&mut rng, 50, 1_000_000);
        let b = random_poly(&mut rng, 50, 1_000_000);
        let c = random_poly(&mut rng, 50, 1_000_000);
        ensure!(&a + &b == &b + &a && &a * &b == &b * &a, "commutativity");
        ensure!(&(&a + &b) + &c == &a + &(&b + &c), "additive associativity");
        ensure!(&(&a * &b) * &c == &a * &(&b * &c), "multiplicative associativity");
        ensure!(&a * &(&b + &c) == &(&a * &b) + &(&a * &c), "distributivity");
        ensure!(&a * &IntPoly::one() == a && &a + &IntPoly::zero() == a, "identities");
        #[allow(clippy::eq_op)]
        let cancelled = &a - &a;
        for p in [&a, &b, &cancelled, &(&a * &b)] {
            ensure!(p.coeffs().last().is_none_or(|c| c != &BigInt::from(0)), "unnormalized result");
        }
    }
    for n in 0..=s.pascal_n {
        for k in 0..=n {
            let g = gauss_binomial(n, k as i64);
            ensure!(g == gauss_binomial(n, (n - k) as i64), "symmetry at [{n},{k}]");
            if k >= 1 {
                let rec = &gauss_binomial(n - 1, k as i64)
                    + &gauss_binomial(n - 1, k as i64 - 1).shift(n - k);
                ensure!(g == rec, "Pascal recurrence at [{n},{k}]");
            }
        }
    }
    for _ in 0..s.random_cases.min(200) {
        let order = rng.random_range(0..=20);
        let mut coeffs: Vec<IntPoly> = (0..=order).map(|_| random_poly(&mut rng, 10, 50)).collect();
        coeffs[0] = IntPoly::one();
        let a = ZSeries::from_coeffs(coeffs, order);
        let inv = a.inverse().map_err(|e| e.to_string())?;
        ensure!(
            a.mul(&inv).map_err(|e| e.to_string())? == ZSeries::one(order),
            "series inverse contract at order {order}"
        );
    }
    for max in 0..=6 {
        for len in 0..=6 {
            let all: Vec<_> = enumerate_bounded(max, len).collect();
            let unique: HashSet<_> = all.iter().collect();
            ensure!(unique.len() == all.len(), "duplicate in bounded({max},{len})");
            ensure!(
                all.iter().all(|p| p.len() == len && p.largest() <= max),
                "bounded({max},{len}) yields an out-of-range partition"
            );
            let dist: Vec<_> = enumerate_distinct_bounded(max, len).collect();
            let unique: HashSet<_> = dist.iter().collect();
            ensure!(unique.len() == dist.len(), "duplicate in distinct({max},{len})");
            ensure!(
                dist.iter().all(|p| p.is_distinct() && p.len() == len && p.largest() <= max),
                "distinct({max},{len}) yields an invalid partition"
            );
        }
    }
    Ok(format!("{} random cases", s.random_cases))
}
