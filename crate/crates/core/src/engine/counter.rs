//! Interchangeable ways to evaluate `#(tP ∩ Zⁿ)`.

use std::fmt;

use num_traits::ToPrimitive;

use super::Engine;
use crate::error::{Error, Result};
use crate::geom::Polytope;
use crate::oracle::{CountMode, CountRequest, Oracle};

pub trait LatticeCounter: Send + Sync {
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str;

    /// Counts for `t = 0..=t_max`, closed or relative interior.
    fn counts(&self, p: &Polytope, t_max: u64, mode: CountMode) -> Result<Vec<u64>>;
}

/// Evaluates the quasi-polynomial from the recursion.
#[derive(Debug, Default, Clone, Copy)]
pub struct EngineCounter;

impl LatticeCounter for EngineCounter {
    fn name(&self) -> &'static str {
        "ehrhart"
    }

    fn description(&self) -> &'static str {
        "evaluate the Ehrhart quasi-polynomial"
    }

    fn counts(&self, p: &Polytope, t_max: u64, mode: CountMode) -> Result<Vec<u64>> {
        let r = Engine::default().compute(p)?;
        let qp = match mode {
            CountMode::Closed => &r.qp,
            CountMode::RelativeInterior => &r.interior_qp,
        };
        (0..=t_max)
            .map(|t| {
                // Reciprocity says nothing about the interior of 0·P.
                if t == 0 && mode == CountMode::RelativeInterior {
                    return Ok(u64::from(r.dim == 0));
                }
                let v = qp.eval(t as i64);
                if !v.is_integer() {
                    return Err(Error::InvalidArgument(format!(
                        "non-integral count {v} at t = {t}"
                    )));
                }
                v.to_integer().to_u64().ok_or_else(|| {
                    Error::InvalidArgument(format!("count {v} at t = {t} out of range"))
                })
            })
            .collect()
    }
}

/// Enumerates lattice points in a bounding box.
#[derive(Debug, Clone, Copy)]
pub struct BruteForceCounter {
    pub oracle: Oracle,
}

impl LatticeCounter for BruteForceCounter {
    fn name(&self) -> &'static str {
        "brute-force"
    }

    fn description(&self) -> &'static str {
        "enumerate the bounding box of tP"
    }

    fn counts(&self, p: &Polytope, t_max: u64, mode: CountMode) -> Result<Vec<u64>> {
        (0..=t_max)
            .map(|t| {
                self.oracle.count(&CountRequest {
                    polytope: p,
                    dilate: t,
                    mode,
                })
            })
            .collect()
    }
}

pub struct CounterRegistry {
    counters: Vec<Box<dyn LatticeCounter>>,
}

impl CounterRegistry {
    pub fn empty() -> Self {
        Self {
            counters: Vec::new(),
        }
    }

    /// The default counters, with the brute-force one using `oracle`.
    pub fn with_oracle(oracle: Oracle) -> Self {
        let mut r = Self::empty();
        r.register(Box::new(EngineCounter));
        r.register(Box::new(BruteForceCounter { oracle }));
        r
    }

    /// Replaces a counter of the same name.
    pub fn register(&mut self, counter: Box<dyn LatticeCounter>) {
        self.counters.retain(|c| c.name() != counter.name());
        self.counters.push(counter);
    }

    pub fn get(&self, name: &str) -> Result<&dyn LatticeCounter> {
        self.counters
            .iter()
            .find(|c| c.name() == name)
            .map(|c| c.as_ref())
            .ok_or_else(|| Error::UnknownStrategy {
                name: name.to_string(),
                available: self.names().join(", "),
            })
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.counters.iter().map(|c| c.name()).collect()
    }
}

impl Default for CounterRegistry {
    fn default() -> Self {
        Self::with_oracle(Oracle::default())
    }
}

impl fmt::Debug for CounterRegistry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.names()).finish()
    }
}

pub fn counter_by_name(name: &str, oracle: Oracle) -> Result<Box<dyn LatticeCounter>> {
    match name {
        "ehrhart" => Ok(Box::new(EngineCounter)),
        "brute-force" => Ok(Box::new(BruteForceCounter { oracle })),
        _ => Err(Error::UnknownStrategy {
            name: name.to_string(),
            available: CounterRegistry::with_oracle(oracle).names().join(", "),
        }),
    }
}
