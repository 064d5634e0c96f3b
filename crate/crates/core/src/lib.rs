//! Exact Ehrhart quasi-polynomials of rational polytopes.
//!
//! The counting function `t ↦ #(tP ∩ Zⁿ)` is computed by a dimension
//! recursion built from discrete summation of quasi-polynomials: reduce to a
//! full-dimensional polytope, split it into pyramids with apex at the origin
//! by inclusion-exclusion over visible and hidden faces, and sum slices of
//! each pyramid with a falling-factorial basis. A brute-force lattice point
//! counter in [`oracle`] serves as an independent check.
//!
//! ```
//! use ehrhart_core::arith::rat;
//! use ehrhart_core::engine::ehrhart;
//! use ehrhart_core::geom::Polytope;
//!
//! let p = Polytope::from_fractions(1, &[vec![(0, 1)], vec![(1, 2)]])?;
//! let r = ehrhart(&p)?;
//! assert_eq!(r.qp.period(), 2);
//! assert_eq!(r.qp.eval(7), rat(4, 1));
//! # Ok::<(), ehrhart_core::Error>(())
//! ```

pub mod arith;
pub mod engine;
pub mod error;
pub mod geom;
pub mod io;
pub mod oracle;
pub mod quasipoly;
pub mod verify;

pub use error::{Error, Result};
