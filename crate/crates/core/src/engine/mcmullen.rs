use super::{EhrhartResult, Engine};
use crate::arith::Rational;
use crate::error::Result;
use crate::geom::Polytope;

/// Coefficient periods of `L_P` against the i-indices. `violations` is empty
/// unless something is wrong with the engine.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct McMullenReport {
    pub dim: usize,
    pub i_indices: Vec<u64>,
    /// Minimal period of `c_i` for `i = 0..=dim`.
    pub minimal_periods: Vec<u64>,
    pub volume: Option<Rational>,
    pub violations: Vec<String>,
}

impl McMullenReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn mcmullen_check(p: &Polytope) -> Result<McMullenReport> {
    let result = Engine::default().compute(p)?;
    Ok(mcmullen_report(&result))
}

/// Same checks on an already computed result.
pub fn mcmullen_report(result: &EhrhartResult) -> McMullenReport {
    let dim = result.dim;
    let minimal_periods: Vec<u64> = (0..=dim).map(|i| result.qp.minimal_period(i)).collect();
    let mut violations = Vec::new();
    if result.qp.degree() > dim {
        violations.push(format!(
            "degree {} exceeds dimension {dim}",
            result.qp.degree()
        ));
    }
    for (i, (&m, &s)) in minimal_periods.iter().zip(&result.i_indices).enumerate() {
        if s % m != 0 {
            violations.push(format!(
                "c_{i} has minimal period {m}, which does not divide s_{i} = {s}"
            ));
        }
    }
    if let Some(vol) = &result.volume {
        let lead = result.qp.coefficient(dim);
        if minimal_periods[dim] != 1 {
            violations.push(format!("leading coefficient c_{dim} is not constant"));
        } else if &lead[0] != vol {
            violations.push(format!(
                "leading coefficient {} differs from volume {vol}",
                lead[0]
            ));
        }
    }
    McMullenReport {
        dim,
        i_indices: result.i_indices.clone(),
        minimal_periods,
        volume: result.volume.clone(),
        violations,
    }
}
