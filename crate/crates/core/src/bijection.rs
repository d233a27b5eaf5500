//! The weight-preserving bijection `phi: A -> B`, the sign-reversing
//! involution `theta` on `U \ V`, and the halving map `tau ∪ tau -> tau`.

use std::fmt;

use crate::error::{Error, Result};
use crate::partition::{Partition, PartitionPair};

/// Splits each multiplicity `r` into `r / 2` copies in the first component
/// and `r % 2` copies in the second.
///
/// `|lambda| = 2|first| + |second|` and the second component is always
/// distinct.
pub fn phi(lambda: &Partition) -> PartitionPair {
    let mult = lambda.multiplicities();
    let halves: Vec<_> = mult.iter().map(|&(v, r)| (v, r / 2)).collect();
    let odd: Vec<_> = mult.iter().map(|&(v, r)| (v, r % 2)).collect();
    PartitionPair::new(
        Partition::from_multiplicities(&halves),
        Partition::from_multiplicities(&odd),
    )
}

/// `first ∪ first ∪ second`. Rejects a repeated part in `second`.
pub fn phi_inverse(pair: &PartitionPair) -> Result<Partition> {
    if !pair.second.is_distinct() {
        return Err(Error::NotDistinct(pair.second.to_string()));
    }
    Ok(pair.first.union(&pair.first.union(&pair.second)))
}

/// Which of the two transfers `theta` performed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ThetaBranch {
    /// One copy of the pivot leaves `lambda`, two copies join `mu`.
    RemoveFromLambda,
    /// Two copies of the pivot leave `mu`, one copy joins `lambda`.
    MoveToLambda,
}

impl fmt::Display for ThetaBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ThetaBranch::RemoveFromLambda => "REMOVE_FROM_LAMBDA",
            ThetaBranch::MoveToLambda => "MOVE_TO_LAMBDA",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ThetaCase {
    pub branch: ThetaBranch,
    pub pivot: usize,
}

/// How `theta` resolves the case where both pivots exist and are equal.
///
/// Only [`TieRule::Inclusive`] gives an involution; `Strict` exists so the
/// self-test can confirm the involution check catches a broken tie case.
#[doc(hidden)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TieRule {
    /// Equal pivots take the first branch.
    #[default]
    Inclusive,
    /// Equal pivots take the second branch.
    Strict,
}

/// The involution on `U \ V`.
///
/// Let `a` be the largest part of `lambda` with odd multiplicity and `b` the
/// largest repeated part of `mu`. If `a` exists and `b` does not, or
/// `a >= b`, one copy of `a` moves out of `lambda` and two copies join `mu`.
/// Otherwise two copies of `b` leave `mu` and one joins `lambda`.
pub fn theta(pair: &PartitionPair) -> Result<(PartitionPair, ThetaCase)> {
    theta_with(pair, TieRule::Inclusive)
}

#[doc(hidden)]
pub fn theta_with(pair: &PartitionPair, tie: TieRule) -> Result<(PartitionPair, ThetaCase)> {
    let odd_in_lambda = pair
        .first
        .multiplicities()
        .into_iter()
        .find(|&(_, r)| r % 2 == 1)
        .map(|(v, _)| v);
    let repeated_in_mu = pair
        .second
        .multiplicities()
        .into_iter()
        .find(|&(_, r)| r >= 2)
        .map(|(v, _)| v);

    let branch = match (odd_in_lambda, repeated_in_mu) {
        (None, None) => return Err(Error::FixedPoint(pair.clone())),
        (Some(a), None) => (ThetaBranch::RemoveFromLambda, a),
        (None, Some(b)) => (ThetaBranch::MoveToLambda, b),
        (Some(a), Some(b)) => {
            let first = match tie {
                TieRule::Inclusive => a >= b,
                TieRule::Strict => a > b,
            };
            if first {
                (ThetaBranch::RemoveFromLambda, a)
            } else {
                (ThetaBranch::MoveToLambda, b)
            }
        }
    };

    let (branch, pivot) = branch;
    let image = match branch {
        ThetaBranch::RemoveFromLambda => PartitionPair::new(
            pair.first
                .without_copies(pivot, 1)
                .expect("pivot is a part of lambda"),
            pair.second.with_copies(pivot, 2),
        ),
        ThetaBranch::MoveToLambda => PartitionPair::new(
            pair.first.with_copies(pivot, 1),
            pair.second
                .without_copies(pivot, 2)
                .expect("pivot is repeated in mu"),
        ),
    };
    Ok((image, ThetaCase { branch, pivot }))
}

/// The `tau` with `tau ∪ tau = lambda`.
pub fn halve(lambda: &Partition) -> Result<Partition> {
    let mult = lambda.multiplicities();
    if let Some(&(part, multiplicity)) = mult.iter().find(|&&(_, r)| r % 2 == 1) {
        return Err(Error::OddMultiplicity { part, multiplicity });
    }
    let halves: Vec<_> = mult.iter().map(|&(v, r)| (v, r / 2)).collect();
    Ok(Partition::from_multiplicities(&halves))
}
