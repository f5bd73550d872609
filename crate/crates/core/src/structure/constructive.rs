use super::bruteforce::hall_subbraces;
use super::fixed::fixed_sylow_under_gamma;
use super::supersoluble::{brace_is_supersoluble, minimal_prime_ideal};
use super::trace::{Branch, ProofTrace, TraceKind, TraceStep};
use super::{duality_analysis, violated, Result, StructureError};
use crate::arith::{is_prime, pi_part};
use crate::elemset::ElemSet;
use crate::finite_group::semidirect_product;
use crate::skew_brace::SkewBrace;

/// A sub-skew brace together with the trace of how it was built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub result: ElemSet,
    pub trace: ProofTrace,
}

/// A Sylow `p`-sub-skew brace of a supersoluble brace, built by the
/// minimal-ideal recursion.
pub fn sylow_subbrace_constructive(b: &SkewBrace, p: usize) -> Result<Construction> {
    if !is_prime(p) {
        return Err(StructureError::NotPrime(p));
    }
    run(b, vec![p], TraceKind::Sylow, None)
}

/// A Hall π-sub-skew brace of a supersoluble brace.
pub fn hall_subbrace_constructive(b: &SkewBrace, primes: &[usize]) -> Result<Construction> {
    let mut primes = primes.to_vec();
    primes.sort_unstable();
    primes.dedup();
    if primes.is_empty() {
        return Err(StructureError::EmptyPrimeSet);
    }
    if let Some(&p) = primes.iter().find(|&&p| !is_prime(p)) {
        return Err(StructureError::NotPrime(p));
    }
    run(b, primes, TraceKind::Hall, None)
}

impl ProofTrace {
    /// Re-runs the construction on `b` using the recorded ideal choices and
    /// checks that every step and the final result come out identical.
    pub fn replay(&self, b: &SkewBrace) -> Result<ElemSet> {
        let out = run(b, self.primes.clone(), self.kind, Some(&self.steps))?;
        if out.trace.steps.len() != self.steps.len() {
            return Err(StructureError::ReplayMismatch {
                step: out.trace.steps.len(),
                detail: "recorded trace has extra steps".into(),
            });
        }
        Ok(out.result)
    }
}

fn run(
    b: &SkewBrace,
    primes: Vec<usize>,
    kind: TraceKind,
    replay: Option<&[TraceStep]>,
) -> Result<Construction> {
    if !brace_is_supersoluble(b) {
        return Err(StructureError::NotSupersoluble);
    }
    let mut runner = Runner {
        primes,
        kind,
        steps: Vec::new(),
        replay,
    };
    let to_input: Vec<Vec<usize>> = (0..b.order()).map(|x| vec![x]).collect();
    let result = runner.solve(b, &to_input, None, 0)?;
    if !b.is_sub_brace(&result) || result.len() != pi_part(b.order(), &runner.primes) {
        return Err(violated(
            "the constructed set is a Hall sub-skew brace of the input",
        ));
    }
    Ok(Construction {
        result,
        trace: ProofTrace {
            kind,
            primes: runner.primes,
            steps: runner.steps,
        },
    })
}

struct Runner<'a> {
    primes: Vec<usize>,
    kind: TraceKind,
    steps: Vec<TraceStep>,
    replay: Option<&'a [TraceStep]>,
}

fn union_of(set: &ElemSet, to_input: &[Vec<usize>]) -> ElemSet {
    ElemSet::new(set.iter().flat_map(|x| to_input[x].iter().copied()))
}

impl Runner<'_> {
    fn recorded(&self, idx: usize) -> Result<Option<TraceStep>> {
        match self.replay {
            None => Ok(None),
            Some(steps) => {
                steps
                    .get(idx)
                    .cloned()
                    .map(Some)
                    .ok_or(StructureError::ReplayMismatch {
                        step: idx,
                        detail: "recorded trace ended early".into(),
                    })
            }
        }
    }

    /// Solves the problem in `b`, whose element `x` stands for the input
    /// elements `to_input[x]`. Returns the answer in `b`'s own numbering.
    fn solve(
        &mut self,
        b: &SkewBrace,
        to_input: &[Vec<usize>],
        forced: Option<ElemSet>,
        depth: usize,
    ) -> Result<ElemSet> {
        let n = b.order();
        let part = pi_part(n, &self.primes);
        // Leaves are not recorded: the answer is `{0}` or everything.
        if part == 1 {
            return Ok(ElemSet::trivial());
        }
        if part == n {
            return Ok(ElemSet::full(n));
        }
        let idx = self.steps.len();
        let recorded = self.recorded(idx)?;
        self.steps.push(TraceStep {
            depth,
            order: n,
            ideal_local: None,
            ideal_prime: None,
            ideal_in_input: None,
            branch: Branch::QuotientLift,
            sigma: None,
            subgroup_local: None,
            result: ElemSet::trivial(),
        });

        let (branch, local, sigma, subgroup) = {
            let m = match (forced, &recorded) {
                (Some(m), _) => m,
                (None, Some(rec)) => rec.ideal_local.clone().ok_or(StructureError::ReplayMismatch {
                    step: idx,
                    detail: "recorded step has no ideal".into(),
                })?,
                (None, None) => minimal_prime_ideal(b)
                    .ok_or_else(|| violated("every nontrivial image of a supersoluble brace has an ideal of prime order"))?,
            };
            if !is_prime(m.len()) || !b.is_ideal(&m) {
                return Err(violated(format!("{m} is an ideal of prime order")));
            }
            let r = m.len();
            self.steps[idx].ideal_local = Some(m.clone());
            self.steps[idx].ideal_prime = Some(r);
            self.steps[idx].ideal_in_input = Some(union_of(&m, to_input));

            let quotient = b.quotient(&m)?;
            let child_to_input: Vec<Vec<usize>> = quotient
                .cosets
                .iter()
                .map(|c| {
                    let mut v: Vec<usize> =
                        c.iter().flat_map(|x| to_input[x].iter().copied()).collect();
                    v.sort_unstable();
                    v
                })
                .collect();
            let image = self.solve(&quotient.brace, &child_to_input, None, depth + 1)?;
            let preimage = ElemSet::new((0..n).filter(|&x| image.contains(quotient.projection[x])));
            if !b.is_sub_brace(&preimage) {
                return Err(violated(
                    "preimage of a sub-skew brace of B/M is a sub-skew brace",
                ));
            }

            if self.primes.contains(&r) {
                (Branch::QuotientLift, preimage, None, None)
            } else if preimage.len() < n {
                let sub = b.restrict(&preimage)?;
                let pos = |x: usize| {
                    preimage
                        .elements()
                        .binary_search(&x)
                        .expect("M lies in the preimage")
                };
                let m_sub = m.map(pos);
                let sub_to_input: Vec<Vec<usize>> =
                    preimage.iter().map(|x| to_input[x].clone()).collect();
                let inner = self.solve(&sub, &sub_to_input, Some(m_sub), depth + 1)?;
                let lifted = inner.map(|i| preimage.elements()[i]);
                (Branch::SubBraceDescent, lifted, None, None)
            } else {
                self.terminal(b, &m)?
            }
        };

        if local.len() != part || !b.is_sub_brace(&local) {
            return Err(violated(format!(
                "step at depth {depth} ({branch}) yields a Hall sub-skew brace"
            )));
        }
        let step = &mut self.steps[idx];
        step.branch = branch;
        step.sigma = sigma;
        step.subgroup_local = subgroup;
        step.result = union_of(&local, to_input);
        if let Some(rec) = recorded {
            if &rec != step {
                return Err(StructureError::ReplayMismatch {
                    step: idx,
                    detail: format!("recomputed {step:?}"),
                });
            }
        }
        Ok(local)
    }

    /// `|B| = h·r` with `M` of order `r` outside the target primes and the
    /// additive group equal to `H ⋉ M` for a Hall subgroup `H`.
    fn terminal(
        &self,
        b: &SkewBrace,
        m: &ElemSet,
    ) -> Result<(Branch, ElemSet, Option<usize>, Option<ElemSet>)> {
        let add = b.add_group();
        let n = b.order();
        let part = pi_part(n, &self.primes);
        if part * m.len() != n {
            return Err(violated("terminal case has order π-part times |M|"));
        }
        let halls = add.hall_subgroups(&self.primes);
        let h = halls
            .first()
            .ok_or_else(|| violated("the additive group has a Hall subgroup"))?;
        if add.centralizer_in(h, m).len() == h.len() {
            if halls.len() != 1 || !add.is_characteristic(h) {
                return Err(violated(
                    "a complement centralising M is normal, hence characteristic",
                ));
            }
            if !b.is_left_ideal(h) {
                return Err(violated("a characteristic subgroup is γ(B)-invariant"));
            }
            return Ok((Branch::NormalComplement, h.clone(), None, Some(h.clone())));
        }

        let sigma = duality_analysis(b, m)?.sigma;
        let target = if sigma == 0 { b.clone() } else { b.opposite() };
        if !m.is_subset(&target.gamma_kernel()) {
            return Err(violated(
                "M lies in the kernel of the chosen gamma function",
            ));
        }
        let (branch, found) = match self.kind {
            TraceKind::Sylow => {
                let p = self.primes[0];
                let fixed = fixed_sylow_under_gamma(&target, p)?.ok_or_else(|| {
                    violated("a p-group of automorphisms fixes a Sylow p-subgroup")
                })?;
                let branch = if sigma == 0 {
                    Branch::GammaKernelFixedPoint
                } else {
                    Branch::OppositeSwitch
                };
                (branch, fixed)
            }
            TraceKind::Hall => {
                let found = hall_through_semidirect(&target, &self.primes)?;
                let branch = if sigma == 0 {
                    Branch::SemidirectHall
                } else {
                    Branch::OppositeSemidirectHall
                };
                (branch, found)
            }
        };
        if !b.is_sub_brace(&found) || !hall_subbraces(&target, &self.primes).contains(&found) {
            return Err(violated(
                "the terminal subgroup is a sub-skew brace of both B and its opposite",
            ));
        }
        Ok((branch, found.clone(), Some(sigma), Some(found)))
    }
}

/// With `γ(M) = 1`: build `G = (B, ∘) ⋉_γ (B, ·)`, take the least Hall
/// subgroup `H∘` of `(B, ∘)`, find a Hall subgroup of `G` containing it, and
/// intersect with the normal copy of `(B, ·)`.
///
/// Any Hall subgroup of `G` through `H∘` is `H∘ ⋉ H` for a Hall subgroup `H`
/// of `(B, ·)`, so the candidates are the joins `⟨H∘, H⟩`, checked by order.
fn hall_through_semidirect(b: &SkewBrace, primes: &[usize]) -> Result<ElemSet> {
    let n = b.order();
    let part = pi_part(n, primes);
    let g = semidirect_product(b.mul_group(), b.add_group(), b.gamma_all())?;
    let h_circ = b
        .mul_group()
        .hall_subgroups(primes)
        .into_iter()
        .next()
        .ok_or_else(|| violated("the multiplicative group has a Hall subgroup"))?;
    let embedded: Vec<usize> = h_circ.iter().map(|a| a * n).collect();
    for h in b.add_group().hall_subgroups(primes) {
        let mut gens = embedded.clone();
        gens.extend(h.iter());
        let joined = g.generated(&gens);
        if joined.len() == part * part {
            let meet = ElemSet::new(joined.iter().filter(|&x| x < n));
            if meet != h {
                return Err(violated("the Hall subgroup of G meets (B, ·) in H"));
            }
            if !b.is_gamma_invariant(&meet, &ElemSet::full(n)) {
                return Err(violated("H is γ(B)-invariant"));
            }
            return Ok(meet);
        }
    }
    Err(violated(
        "some Hall subgroup of (B, ∘) ⋉ (B, ·) contains H∘",
    ))
}
