//! Exact verification of q-binomial identities.
//!
//! The crate evaluates both sides of a family of q-binomial coefficient
//! identities and their classical `q = 1` forms, and checks them along three
//! independent routes:
//!
//! - sums of Gaussian binomials ([`qbinom`], [`identities::sides`]),
//! - weighted enumeration of bounded partitions together with the bijection
//!   `phi` and the sign-reversing involution `theta` ([`partition`], [`bijection`]),
//! - coefficients of truncated generating functions built from finite
//!   q-shifted factorials ([`series`]).
//!
//! All arithmetic is exact: polynomials carry [`num_bigint::BigInt`]
//! coefficients and the classical identities use exact rationals.

pub mod bijection;
pub mod cli;
pub mod error;
pub mod identities;
pub mod partition;
pub mod poly;
pub mod qbinom;
pub mod selftest;
pub mod series;

pub use bijection::{halve, phi, phi_inverse, theta, ThetaBranch, ThetaCase};
pub use error::{Error, Result};
pub use identities::{verify_sweep, IdentityId, ParamPoint, SweepBounds, VerificationReport};
pub use partition::{Partition, PartitionPair};
pub use poly::IntPoly;
pub use qbinom::{choose2, gauss_binomial, gauss_binomial_dilated, QBinomArgs};
pub use series::{poch_series, PochSpec, ZSeries};
