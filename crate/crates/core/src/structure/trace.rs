use std::fmt;

use serde::Serialize;

use crate::elemset::ElemSet;

/// Which case of the recursion a step took.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    /// `|M|` is a target prime: the preimage of the answer in `B/M`.
    QuotientLift,
    /// The preimage `X` of the answer in `B/M` is proper: recurse into `X`, keeping `M`.
    SubBraceDescent,
    /// The complement of `M` centralises it, so it is normal and characteristic.
    NormalComplement,
    /// `σ = 0`: `γ(B)` is a `p`-group and fixes a Sylow subgroup.
    GammaKernelFixedPoint,
    /// `σ = 1`: the fixed-point argument run in the opposite brace.
    OppositeSwitch,
    /// `σ = 0`, Hall case: a Hall subgroup of `(B, ∘) ⋉_γ (B, ·)` through a
    /// multiplicative Hall subgroup, intersected with `(B, ·)`.
    SemidirectHall,
    /// `σ = 1`, Hall case: the same in the opposite brace.
    OppositeSemidirectHall,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::QuotientLift => "quotient-lift",
            Branch::SubBraceDescent => "sub-brace-descent",
            Branch::NormalComplement => "normal-complement",
            Branch::GammaKernelFixedPoint => "gamma-kernel-fixed-point",
            Branch::OppositeSwitch => "opposite-switch",
            Branch::SemidirectHall => "semidirect-hall",
            Branch::OppositeSemidirectHall => "opposite-semidirect-hall",
        })
    }
}

/// One recursion frame. Sets named `*_local` use the numbering of the frame's
/// own brace (a quotient or sub-brace of the input); the others are subsets
/// of the input brace.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub depth: usize,
    pub order: usize,
    pub ideal_local: Option<ElemSet>,
    pub ideal_prime: Option<usize>,
    /// Union of the input elements represented by the ideal.
    pub ideal_in_input: Option<ElemSet>,
    pub branch: Branch,
    pub sigma: Option<usize>,
    /// The complement, fixed Sylow subgroup or Hall subgroup found in a terminal case.
    pub subgroup_local: Option<ElemSet>,
    pub result: ElemSet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TraceKind {
    Sylow,
    Hall,
}

/// The steps of one constructive run, in pre-order. Frames whose answer is
/// `{0}` or the whole brace are omitted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProofTrace {
    pub kind: TraceKind,
    pub primes: Vec<usize>,
    pub steps: Vec<TraceStep>,
}

impl fmt::Display for ProofTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            TraceKind::Sylow => "sylow",
            TraceKind::Hall => "hall",
        };
        writeln!(f, "{kind} trace for primes {:?}", self.primes)?;
        for s in &self.steps {
            let indent = "  ".repeat(s.depth + 1);
            write!(f, "{indent}order {}", s.order)?;
            if let (Some(m), Some(p)) = (&s.ideal_local, s.ideal_prime) {
                write!(f, ", ideal {m} of order {p}")?;
            }
            write!(f, ": {}", s.branch)?;
            if let Some(sigma) = s.sigma {
                write!(f, ", sigma = {sigma}")?;
            }
            if let Some(h) = &s.subgroup_local {
                write!(f, ", subgroup {h}")?;
            }
            writeln!(f, " => {}", s.result)?;
        }
        Ok(())
    }
}
