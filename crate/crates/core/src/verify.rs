//! Checks a computed result against the brute-force oracle and the
//! structural identities every Ehrhart quasi-polynomial satisfies.

use std::fmt;

use num_traits::{One, ToPrimitive};

use crate::arith::Rational;
use crate::engine::{mcmullen_report, EhrhartResult};
use crate::error::{Error, Result};
use crate::geom::Polytope;
use crate::oracle::{CountMode, Oracle};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub t_max: u64,
    pub checks: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(
                f,
                "{} {}: {}",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                c.detail
            )?;
        }
        write!(
            f,
            "{}",
            if self.passed() {
                "all checks passed"
            } else {
                "verification failed"
            }
        )
    }
}

/// `2 · lcm(denominators) · period`, lowered until the oracle fits its cap.
pub fn default_t_max(p: &Polytope, result: &EhrhartResult, oracle: &Oracle) -> Result<u64> {
    let wanted = (p.denominator() * 2u32 * result.qp.period())
        .to_u64()
        .unwrap_or(u64::MAX);
    match oracle.max_dilate(p, wanted) {
        Some(t) if t >= 1 => Ok(t),
        _ => Err(Error::EnumerationCapExceeded {
            candidates: Oracle::box_size(p, 1).to_string(),
            cap: oracle.cap(),
        }),
    }
}

fn sweep(
    name: &'static str,
    range: std::ops::RangeInclusive<u64>,
    counts: &[u64],
    predicted: impl Fn(u64) -> Rational,
) -> CheckOutcome {
    let (lo, hi) = (*range.start(), *range.end());
    for t in range {
        let expected = Rational::from_integer(counts[t as usize].into());
        let found = predicted(t);
        if found != expected {
            return CheckOutcome {
                name,
                passed: false,
                detail: format!(
                    "first mismatch at t = {t}: oracle {expected}, quasi-polynomial {found}"
                ),
            };
        }
    }
    CheckOutcome {
        name,
        passed: true,
        detail: format!("t = {lo}..{hi}"),
    }
}

/// Compares `result` with oracle counts for `t ≤ t_max`, and checks the
/// constant term and coefficient periods.
pub fn verify(
    p: &Polytope,
    result: &EhrhartResult,
    t_max: u64,
    oracle: &Oracle,
) -> Result<VerifyReport> {
    let closed = oracle.count_range(p, t_max, CountMode::Closed)?;
    let open = oracle.count_range(p, t_max, CountMode::RelativeInterior)?;
    let mut checks = vec![
        sweep("oracle", 0..=t_max, &closed, |t| result.qp.eval(t as i64)),
        sweep("reciprocity", 1..=t_max, &open, |t| {
            result.interior_qp.eval(t as i64)
        }),
    ];
    let c0 = result.qp.eval(0);
    checks.push(CheckOutcome {
        name: "constant-term",
        passed: c0.is_one(),
        detail: format!("L(0) = {c0}"),
    });
    let mc = mcmullen_report(result);
    checks.push(CheckOutcome {
        name: "mcmullen",
        passed: mc.is_ok(),
        detail: if mc.is_ok() {
            format!(
                "minimal periods {:?} divide i-indices {:?}",
                mc.minimal_periods, mc.i_indices
            )
        } else {
            mc.violations.join("; ")
        },
    });
    Ok(VerifyReport { t_max, checks })
}
