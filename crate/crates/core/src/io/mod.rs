//! Polytope files, the machine-readable result format and the pretty
//! report.

mod machine;
mod polytope_file;
mod report;

pub use machine::{
    qp_from_json, qp_to_json, result_from_json, result_to_json, EhrhartResultDoc,
    QuasiPolynomialDoc, RESULT_FORMAT, RESULT_VERSION,
};
pub use polytope_file::{
    parse_polytope, parse_polytope_json, parse_polytope_text, render_polytope_text,
};
pub use report::render_pretty;

use crate::error::Error;

fn json_error(e: serde_json::Error) -> Error {
    Error::parse(e.line().max(1), e.column().max(1), e.to_string())
}
