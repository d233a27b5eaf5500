//! Command-line front end: `verify`, `expand`, `census`, `trace`, `selftest`.
//!
//! [`run`] parses arguments and returns the text destined for stdout and
//! stderr together with the exit code, so the binary stays a thin wrapper.
//! Exit codes: 0 on success, 1 when a verification fails, 2 on a usage error.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bijection::{phi, phi_inverse, theta};
use crate::error::Error;
use crate::identities::sides::{factors, series_side, weight_polynomial, Route};
use crate::identities::{reports_to_csv, reports_to_json, verify_sweep, IdentityId};
use crate::partition::{set_a, set_b, set_u, set_v, Partition, PartitionPair};
use crate::poly::IntPoly;
use crate::qbinom::gauss_binomial_dilated;
use crate::selftest::{self, Mutation, Scale};
use crate::series::ZSeries;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "qbinomial", version, about = "Exact checks of q-binomial identities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check an identity on every point of a parameter grid.
    Verify(VerifyArgs),
    /// Print a q-binomial coefficient or a truncated series.
    Expand(ExpandArgs),
    /// List one of the partition sets with its size and weight polynomial.
    Census(CensusArgs),
    /// Apply phi, its inverse, or theta to a partition literal.
    Trace(TraceArgs),
    /// Run the built-in verification suites.
    Selftest(SelftestArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// One of s1..s5, new1..new4, spe1, spe2, gf_A, gf_D, qbione, qbitwo.
    #[arg(long)]
    pub identity: String,
    #[arg(long)]
    pub m_max: Option<usize>,
    #[arg(long)]
    pub n_max: Option<usize>,
    #[arg(long)]
    pub a_max: Option<usize>,
    #[arg(long)]
    pub n_min: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeriesName {
    /// 1/(z;q)_{m+1}
    InvPochZ,
    /// (-z;q)_{m+1}
    PochNegZ,
    /// 1/(z^2;q^2)_{m+1}
    InvPochZ2,
    /// 1/(z^4;q^4)_{m+1}
    InvPochZ4,
    /// 1/(-z^2;q^2)_{m+1}
    InvPochNegZ2,
    QbioneLhs,
    QbioneRhs,
    QbitwoLhs,
    QbitwoRhs,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("what").required(true).args(["qbinom", "series"]))]
pub struct ExpandArgs {
    /// Gaussian binomial [N choose K]_q.
    #[arg(long, num_args = 2, value_names = ["N", "K"], allow_negative_numbers = true)]
    pub qbinom: Option<Vec<i64>>,
    /// Substitute q -> q^R in the q-binomial.
    #[arg(long, default_value_t = 1)]
    pub dilation: usize,
    #[arg(long, value_enum)]
    pub series: Option<SeriesName>,
    #[arg(long, default_value_t = 0)]
    pub m: usize,
    #[arg(long, default_value_t = 12)]
    pub order: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SetName {
    #[value(name = "A")]
    A,
    #[value(name = "B")]
    B,
    #[value(name = "U")]
    U,
    #[value(name = "V")]
    V,
}

#[derive(Debug, Args)]
pub struct CensusArgs {
    #[arg(long, value_enum, ignore_case = true)]
    pub set: SetName,
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub n: usize,
    /// Print every member.
    #[arg(long)]
    pub list: bool,
    /// Weight members of U by (-1)^len(lambda).
    #[arg(long)]
    pub signed: bool,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MapName {
    Phi,
    PhiInverse,
    Theta,
}

#[derive(Debug, Args)]
pub struct TraceArgs {
    #[arg(long, value_enum)]
    pub map: MapName,
    /// `[7,5,5]` for phi, `([5],[2,1])` for phi-inverse and theta.
    #[arg(long)]
    pub input: String,
    /// Print `<input> --map--> <output>` lines.
    #[arg(long)]
    pub arrows: bool,
    /// Apply the map this many times (theta only).
    #[arg(long, default_value_t = 1)]
    pub repeat: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MutationName {
    ThetaTie,
}

#[derive(Debug, Args)]
pub struct SelftestArgs {
    /// Shrink every suite to m <= 2, n <= 4.
    #[arg(long)]
    pub quick: bool,
    #[arg(long, value_enum, hide = true)]
    pub mutate: Option<MutationName>,
}

/// Captured result of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn usage(msg: impl std::fmt::Display) -> Self {
        Self { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {msg}\n") }
    }
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                Outcome::ok(text)
            };
        }
    };
    match cli.command {
        Command::Verify(a) => run_verify(&a),
        Command::Expand(a) => run_expand(&a),
        Command::Census(a) => run_census(&a),
        Command::Trace(a) => run_trace(&a),
        Command::Selftest(a) => run_selftest(&a),
    }
}

pub fn run_verify(args: &VerifyArgs) -> Outcome {
    let id: IdentityId = match args.identity.parse() {
        Ok(id) => id,
        Err(e) => return Outcome::usage(e),
    };
    let mut bounds = id.default_bounds();
    bounds.m_max = args.m_max.unwrap_or(bounds.m_max);
    bounds.n_max = args.n_max.unwrap_or(bounds.n_max);
    bounds.a_max = args.a_max.unwrap_or(bounds.a_max);
    bounds.n_min = args.n_min;
    let reports = match verify_sweep(id, bounds) {
        Ok(r) => r,
        Err(e) => return Outcome::usage(e),
    };
    let stdout = match args.format {
        Format::Json => reports_to_json(&reports) + "\n",
        Format::Csv => reports_to_csv(&reports),
        Format::Plain => {
            let mut out = String::new();
            for r in &reports {
                writeln!(out, "{r}").unwrap();
            }
            let passed = reports.iter().filter(|r| r.pass).count();
            writeln!(out, "{id}: {passed}/{} passed", reports.len()).unwrap();
            out
        }
    };
    match reports.iter().find(|r| !r.pass) {
        None => Outcome::ok(stdout),
        Some(bad) => Outcome {
            code: EXIT_FAILURE,
            stdout,
            stderr: format!("first failure: {} {}\n", bad.identity, bad.point()),
        },
    }
}

fn series_named(name: SeriesName, m: usize, order: usize) -> ZSeries {
    match name {
        SeriesName::InvPochZ => factors::inv_poch_z(m, order),
        SeriesName::PochNegZ => factors::poch_neg_z(m, order),
        SeriesName::InvPochZ2 => factors::inv_poch_z2(m, order),
        SeriesName::InvPochZ4 => factors::inv_poch_z4(m, order),
        SeriesName::InvPochNegZ2 => factors::inv_poch_neg_z2(m, order),
        SeriesName::QbioneLhs => series_side(Route::New3, m, order).0,
        SeriesName::QbioneRhs => series_side(Route::New3, m, order).1,
        SeriesName::QbitwoLhs => series_side(Route::New4, m, order).0,
        SeriesName::QbitwoRhs => series_side(Route::New4, m, order).1,
    }
}

pub fn run_expand(args: &ExpandArgs) -> Outcome {
    if let Some(nk) = &args.qbinom {
        let Ok(n) = usize::try_from(nk[0]) else {
            return Outcome::usage(format!("upper argument must be nonnegative, got {}", nk[0]));
        };
        return match gauss_binomial_dilated(n, nk[1], args.dilation) {
            Ok(p) => Outcome::ok(format!("{p}\n")),
            Err(e) => Outcome::usage(e),
        };
    }
    let name = args.series.expect("clap enforces one of --qbinom/--series");
    Outcome::ok(format!("{}\n", series_named(name, args.m, args.order)))
}

#[derive(Serialize)]
struct Census {
    set: &'static str,
    m: usize,
    n: usize,
    count: usize,
    weight_sum: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    members: Option<Vec<String>>,
}

pub fn run_census(args: &CensusArgs) -> Outcome {
    let (m, n) = (args.m, args.n);
    let signed = args.signed && args.set == SetName::U;
    // (rendered member, sign, weight)
    let rows: Vec<(String, i64, usize)> = match args.set {
        SetName::A => set_a(m, n).map(|l: Partition| (l.to_string(), 1, l.weight())).collect(),
        SetName::B => pair_rows(set_b(m, n), false),
        SetName::U => pair_rows(set_u(m, n), signed),
        SetName::V => pair_rows(set_v(m, n), false),
    };
    let weight: IntPoly = weight_polynomial(rows.iter().map(|(_, s, w)| (*s, *w)));
    let set = match args.set {
        SetName::A => "A",
        SetName::B => "B",
        SetName::U => "U",
        SetName::V => "V",
    };
    let census = Census {
        set,
        m,
        n,
        count: rows.len(),
        weight_sum: weight.to_string(),
        members: args.list.then(|| rows.iter().map(|r| r.0.clone()).collect()),
    };
    let stdout = match args.format {
        Format::Json => serde_json::to_string_pretty(&census).expect("census serializes") + "\n",
        Format::Csv => {
            let mut out = String::from("member,sign,weight\n");
            for (member, sign, w) in &rows {
                writeln!(out, "\"{member}\",{sign},{w}").unwrap();
            }
            out
        }
        Format::Plain => {
            let mut out = format!("set {set} (m={m}, n={n})\n");
            if let Some(members) = &census.members {
                for member in members {
                    writeln!(out, "{member}").unwrap();
                }
            }
            writeln!(out, "count: {}", census.count).unwrap();
            let label = if signed { "signed weight sum" } else { "weight sum" };
            writeln!(out, "{label}: {}", census.weight_sum).unwrap();
            out
        }
    };
    Outcome::ok(stdout)
}

fn pair_rows(pairs: impl Iterator<Item = PartitionPair>, signed: bool) -> Vec<(String, i64, usize)> {
    pairs
        .map(|p| (p.to_string(), if signed { p.sign() } else { 1 }, p.weight2()))
        .collect()
}

pub fn run_trace(args: &TraceArgs) -> Outcome {
    match trace_lines(args) {
        Ok(lines) => Outcome::ok(lines),
        Err(Error::FixedPoint(p)) => Outcome::usage(format!(
            "{p} is in the fixed set V; theta is defined only on U \\ V"
        )),
        Err(e) => Outcome::usage(e),
    }
}

fn trace_lines(args: &TraceArgs) -> Result<String, Error> {
    let mut out = String::new();
    match args.map {
        MapName::Phi => {
            let input: Partition = args.input.parse()?;
            let image = phi(&input);
            if args.arrows {
                writeln!(out, "{input} --phi--> {image}").unwrap();
            } else {
                writeln!(out, "{image}").unwrap();
            }
        }
        MapName::PhiInverse => {
            let input: PartitionPair = args.input.parse()?;
            let image = phi_inverse(&input)?;
            if args.arrows {
                writeln!(out, "{input} --phi-inverse--> {image}").unwrap();
            } else {
                writeln!(out, "{image}").unwrap();
            }
        }
        MapName::Theta => {
            let mut current: PartitionPair = args.input.parse()?;
            for _ in 0..args.repeat.max(1) {
                let (image, case) = theta(&current)?;
                if args.arrows {
                    writeln!(out, "{current} --theta[{},{}]--> {image}", case.branch, case.pivot)
                        .unwrap();
                } else {
                    writeln!(out, "{image} branch={} pivot={}", case.branch, case.pivot).unwrap();
                }
                current = image;
            }
        }
    }
    Ok(out)
}

pub fn run_selftest(args: &SelftestArgs) -> Outcome {
    let scale = if args.quick { Scale::quick() } else { Scale::full() };
    let mutation = match args.mutate {
        Some(MutationName::ThetaTie) => Mutation::ThetaTie,
        None => Mutation::None,
    };
    let results = selftest::run_all(scale, mutation);
    let mut stdout = String::new();
    for r in &results {
        writeln!(stdout, "{r}").unwrap();
    }
    let failed: Vec<&str> = results.iter().filter(|r| !r.passed()).map(|r| r.name).collect();
    writeln!(
        stdout,
        "selftest: {}/{} suites passed",
        results.len() - failed.len(),
        results.len()
    )
    .unwrap();
    if failed.is_empty() {
        Outcome::ok(stdout)
    } else {
        Outcome {
            code: EXIT_FAILURE,
            stdout,
            stderr: format!("failed suites: {}\n", failed.join(", ")),
        }
    }
}
