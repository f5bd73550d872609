//! Supersolubility of skew braces and the constructive existence of Sylow
//! and Hall sub-skew braces.
//!
//! The constructive algorithms follow a minimal-counterexample recursion:
//! pick an ideal `M` of prime order, solve the problem in `B/M`, and lift.
//! The only hard case is a brace of order `h·r` with `r` prime outside the
//! target primes, where the additive group splits as `H ⋉ M`. There the
//! action of `γ(M)` is pinned down through the matrix decomposition of
//! automorphisms of `H ⋉ M` and a coprime 1-cocycle, which forces `M` into
//! the kernel of `γ` or of the opposite brace's `γ̄`. Every deduction is
//! re-checked on the input; a failed check aborts with
//! [`StructureError::ProofInvariantViolated`].

mod automorphism_split;
mod bruteforce;
mod cocycle;
mod constructive;
mod duality;
mod fixed;
mod supersoluble;
mod trace;
mod verify;

use thiserror::Error;

use crate::finite_group::GroupError;
use crate::skew_brace::BraceError;

pub use automorphism_split::{
    characteristic_abelian_splittings, decompose_automorphism, AutomorphismDecomposition,
};
pub use bruteforce::{hall_subbrace_bruteforce, hall_subbraces, sylow_subbraces};
pub use cocycle::{coboundary, solve_cocycle, Cocycle};
pub use constructive::{hall_subbrace_constructive, sylow_subbrace_constructive, Construction};
pub use duality::{duality_analysis, duality_sigma, find_complement, DualityAnalysis};
pub use fixed::{fixed_sylow_under_gamma, sylow_orbits_under_gamma};
pub use supersoluble::{
    brace_is_supersoluble, minimal_ideals, minimal_prime_ideal, prime_order_ideals,
};
pub use trace::{Branch, ProofTrace, TraceKind, TraceStep};
pub use verify::{verify_theorems, Check, CheckStatus, TheoremReport};

/// Which hypothesis of the σ-dichotomy failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hypothesis {
    NotAnIdeal,
    NotPrimeOrder,
    NotCharacteristic,
    MeetsCenter,
    NoComplement,
}

impl std::fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Hypothesis::NotAnIdeal => "M is not an ideal",
            Hypothesis::NotPrimeOrder => "M does not have prime order",
            Hypothesis::NotCharacteristic => "M is not characteristic in the additive group",
            Hypothesis::MeetsCenter => "M meets the center of the additive group",
            Hypothesis::NoComplement => "M has no complement in the additive group",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("skew brace is not supersoluble")]
    NotSupersoluble,
    #[error("{0} is not a prime")]
    NotPrime(usize),
    #[error("empty set of primes")]
    EmptyPrimeSet,
    #[error("proof invariant violated: {step}")]
    ProofInvariantViolated { step: String },
    #[error("hypothesis failed: {0}")]
    HypothesisFailed(Hypothesis),
    #[error("sigma = {sigma} mod {prime} lies outside {{0, 1}}")]
    SigmaOutOfRange { sigma: usize, prime: usize },
    #[error("gamma image has order {order}, not a power of {prime}")]
    GammaNotQGroup { prime: usize, order: usize },
    #[error("not an internal semidirect product: {0}")]
    NotInternalSemidirect(String),
    #[error("theta is not an automorphism of the group")]
    NotAnAutomorphism,
    #[error("theta does not map M onto itself")]
    ThetaDoesNotPreserveM,
    #[error("cocycle precondition failed: {0}")]
    CocyclePrecondition(String),
    #[error("cocycle law fails at ({x}, {y})")]
    NotACocycle { x: usize, y: usize },
    #[error("trace replay diverged at step {step}: {detail}")]
    ReplayMismatch { step: usize, detail: String },
    #[error(transparent)]
    Brace(#[from] BraceError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

pub type Result<T, E = StructureError> = std::result::Result<T, E>;

pub(crate) fn violated(step: impl Into<String>) -> StructureError {
    StructureError::ProofInvariantViolated { step: step.into() }
}
