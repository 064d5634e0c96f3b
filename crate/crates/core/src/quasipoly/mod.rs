//! Quasi-polynomial algebra and the finite-calculus summation engine.

mod gbasis;
mod poly;
mod qp;
mod summation;
mod text;

pub use gbasis::{g_discrete_sum, to_g_basis, GBasisTerm};
pub use qp::QuasiPolynomial;
pub use summation::{
    discrete_sum, negative_sum_check, summation_by_name, DiscreteSummation, GBasisSummation,
    InterpolationSummation, SummationRegistry,
};
pub use text::parse_quasi_polynomial;
