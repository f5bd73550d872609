use std::fmt;

use serde::Serialize;

use super::bruteforce::hall_subbraces;
use super::constructive::{hall_subbrace_constructive, sylow_subbrace_constructive, Construction};
use super::supersoluble::brace_is_supersoluble;
use super::Result;
use crate::arith::{is_pi_number, nonempty_subsets, prime_divisors};
use crate::elemset::ElemSet;
use crate::skew_brace::SkewBrace;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// Reported without asserting anything, e.g. for non-supersoluble braces.
    Info,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub order: usize,
    pub supersoluble: bool,
    pub checks: Vec<Check>,
}

impl TheoremReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "order {}, supersoluble: {}",
            self.order, self.supersoluble
        )?;
        for c in &self.checks {
            let tag = match c.status {
                CheckStatus::Pass => "PASS",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Info => "INFO",
            };
            writeln!(f, "  {tag} {}: {}", c.name, c.detail)?;
        }
        Ok(())
    }
}

fn check(name: String, ok: bool, detail: String) -> Check {
    let status = if ok {
        CheckStatus::Pass
    } else {
        CheckStatus::Fail
    };
    Check {
        name,
        status,
        detail,
    }
}

fn label(primes: &[usize]) -> String {
    let s: Vec<String> = primes.iter().map(|p| p.to_string()).collect();
    s.join(",")
}

fn existence_check(
    b: &SkewBrace,
    name: String,
    primes: &[usize],
    built: Result<Construction>,
) -> Check {
    let family = hall_subbraces(b, primes);
    match built {
        Err(e) => check(name, false, format!("construction failed: {e}")),
        Ok(c) => {
            if !family.contains(&c.result) {
                return check(
                    name,
                    false,
                    format!("constructed {} is not a Hall sub-skew brace", c.result),
                );
            }
            match c.trace.replay(b) {
                Ok(r) if r == c.result => check(
                    name,
                    true,
                    format!(
                        "constructed {} (brute force finds {})",
                        c.result,
                        family.len()
                    ),
                ),
                Ok(r) => check(
                    name,
                    false,
                    format!("replay gave {r}, expected {}", c.result),
                ),
                Err(e) => check(name, false, format!("replay failed: {e}")),
            }
        }
    }
}

/// Left ideals whose order is a π-number (other than `{0}`) each lie in
/// some Hall π-sub-skew brace.
fn containment_check(name: String, left: &[ElemSet], primes: &[usize], halls: &[ElemSet]) -> Check {
    let relevant: Vec<&ElemSet> = left
        .iter()
        .filter(|a| a.len() > 1 && is_pi_number(a.len(), primes))
        .collect();
    match relevant
        .iter()
        .find(|a| !halls.iter().any(|h| a.is_subset(h)))
    {
        Some(a) => check(
            name,
            false,
            format!("left ideal {a} lies in no Hall sub-skew brace"),
        ),
        None => check(
            name,
            true,
            format!("{} left ideals contained", relevant.len()),
        ),
    }
}

/// Checks the Sylow and Hall existence statements and the left-ideal
/// containment property on `b`. For a brace that is not supersoluble the
/// brute-force findings are reported as [`CheckStatus::Info`].
pub fn verify_theorems(b: &SkewBrace) -> TheoremReport {
    let n = b.order();
    let primes = prime_divisors(n);
    let supersoluble = brace_is_supersoluble(b);
    let mut checks = Vec::new();

    if !supersoluble {
        for p in &primes {
            let count = hall_subbraces(b, &[*p]).len();
            checks.push(Check {
                name: format!("sylow p={p}"),
                status: CheckStatus::Info,
                detail: format!(
                    "not supersoluble; brute force finds {count} Sylow sub-skew braces"
                ),
            });
        }
        return TheoremReport {
            order: n,
            supersoluble,
            checks,
        };
    }

    let left = b.left_ideals();
    for &p in &primes {
        checks.push(existence_check(
            b,
            format!("sylow p={p}"),
            &[p],
            sylow_subbrace_constructive(b, p),
        ));
    }
    for subset in nonempty_subsets(&primes) {
        let name = format!("hall pi={{{}}}", label(&subset));
        checks.push(existence_check(
            b,
            name,
            &subset,
            hall_subbrace_constructive(b, &subset),
        ));
    }
    for &p in &primes {
        let sylows = hall_subbraces(b, &[p]);
        checks.push(containment_check(
            format!("left ideals p={p}"),
            &left,
            &[p],
            &sylows,
        ));
    }
    for subset in nonempty_subsets(&primes)
        .into_iter()
        .filter(|s| s.len() > 1)
    {
        let halls = hall_subbraces(b, &subset);
        checks.push(containment_check(
            format!("left ideals pi={{{}}}", label(&subset)),
            &left,
            &subset,
            &halls,
        ));
    }
    TheoremReport {
        order: n,
        supersoluble,
        checks,
    }
}
