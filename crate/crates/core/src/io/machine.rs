//! JSON serialization of quasi-polynomials and Ehrhart results. Rationals
//! are strings (`"-3/16"`, `"1"`) so nothing passes through floating point.
//! The layout is described in `docs/machine-format.md`.

use serde::{Deserialize, Serialize};

use super::json_error;
use crate::arith::{parse_rational, Rational};
use crate::engine::EhrhartResult;
use crate::error::{Error, Result};
use crate::quasipoly::QuasiPolynomial;

pub const RESULT_FORMAT: &str = "ehrhart-result";
pub const RESULT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuasiPolynomialDoc {
    pub period: u64,
    pub degree: usize,
    /// `coefficients[j][i]` multiplies `t^i` when `t ≡ j (mod period)`.
    pub coefficients: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EhrhartResultDoc {
    pub format: String,
    pub version: u32,
    pub ambient_dim: usize,
    pub dim: usize,
    pub i_indices: Vec<u64>,
    pub volume: Option<String>,
    pub ehrhart: QuasiPolynomialDoc,
    pub interior: QuasiPolynomialDoc,
}

impl From<&QuasiPolynomial> for QuasiPolynomialDoc {
    fn from(qp: &QuasiPolynomial) -> Self {
        QuasiPolynomialDoc {
            period: qp.period(),
            degree: qp.degree(),
            coefficients: qp
                .rows()
                .iter()
                .map(|row| row.iter().map(|c| c.to_string()).collect())
                .collect(),
        }
    }
}

impl QuasiPolynomialDoc {
    pub fn to_quasi_polynomial(&self) -> Result<QuasiPolynomial> {
        if self.coefficients.len() as u64 != self.period {
            return Err(Error::InvalidArgument(format!(
                "{} coefficient rows for period {}",
                self.coefficients.len(),
                self.period
            )));
        }
        let mut rows = Vec::with_capacity(self.coefficients.len());
        for (j, row) in self.coefficients.iter().enumerate() {
            if row.len() > self.degree + 1 {
                return Err(Error::InvalidArgument(format!(
                    "row {j} has {} coefficients, degree is {}",
                    row.len(),
                    self.degree
                )));
            }
            rows.push(
                row.iter()
                    .map(|c| parse_rational(c))
                    .collect::<Result<Vec<Rational>>>()?,
            );
        }
        QuasiPolynomial::new(rows)
    }
}

impl From<&EhrhartResult> for EhrhartResultDoc {
    fn from(r: &EhrhartResult) -> Self {
        EhrhartResultDoc {
            format: RESULT_FORMAT.to_string(),
            version: RESULT_VERSION,
            ambient_dim: r.ambient_dim,
            dim: r.dim,
            i_indices: r.i_indices.clone(),
            volume: r.volume.as_ref().map(|v| v.to_string()),
            ehrhart: (&r.qp).into(),
            interior: (&r.interior_qp).into(),
        }
    }
}

impl EhrhartResultDoc {
    pub fn to_result(&self) -> Result<EhrhartResult> {
        if self.format != RESULT_FORMAT || self.version != RESULT_VERSION {
            return Err(Error::InvalidArgument(format!(
                "unsupported format `{}` version {}",
                self.format, self.version
            )));
        }
        Ok(EhrhartResult {
            ambient_dim: self.ambient_dim,
            dim: self.dim,
            qp: self.ehrhart.to_quasi_polynomial()?,
            interior_qp: self.interior.to_quasi_polynomial()?,
            i_indices: self.i_indices.clone(),
            volume: self.volume.as_deref().map(parse_rational).transpose()?,
        })
    }
}

pub fn qp_to_json(qp: &QuasiPolynomial) -> String {
    serde_json::to_string_pretty(&QuasiPolynomialDoc::from(qp)).expect("plain data serializes")
}

pub fn qp_from_json(src: &str) -> Result<QuasiPolynomial> {
    let doc: QuasiPolynomialDoc = serde_json::from_str(src).map_err(json_error)?;
    doc.to_quasi_polynomial()
}

pub fn result_to_json(r: &EhrhartResult) -> String {
    serde_json::to_string_pretty(&EhrhartResultDoc::from(r)).expect("plain data serializes")
}

pub fn result_from_json(src: &str) -> Result<EhrhartResult> {
    let doc: EhrhartResultDoc = serde_json::from_str(src).map_err(json_error)?;
    doc.to_result()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::ehrhart;
    use crate::geom::Polytope;
    use crate::quasipoly::{g_discrete_sum, GBasisTerm};

    #[test]
    fn four_case_layout() {
        let f = g_discrete_sum(&GBasisTerm::unit(1, 2, 0), 3, 2).unwrap();
        let json = qp_to_json(&f);
        let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(doc["period"], 4);
        assert_eq!(doc["degree"], 2);
        assert_eq!(doc["coefficients"][1][2], "9/32");
        assert_eq!(qp_from_json(&json).unwrap(), f);
    }

    #[test]
    fn result_round_trip() {
        let p = Polytope::from_fractions(
            2,
            &[
                vec![(0, 1), (0, 1)],
                vec![(1, 2), (0, 1)],
                vec![(0, 1), (1, 1)],
            ],
        )
        .unwrap();
        let r = ehrhart(&p).unwrap();
        let json = result_to_json(&r);
        assert!(json.contains("\"format\": \"ehrhart-result\""));
        assert_eq!(result_from_json(&json).unwrap(), r);
    }

    #[test]
    fn rejects_malformed() {
        assert!(qp_from_json(r#"{"period": 2, "degree": 0, "coefficients": [["1"]]}"#).is_err());
        assert!(
            qp_from_json(r#"{"period": 1, "degree": 0, "coefficients": [["1", "2"]]}"#).is_err()
        );
        assert!(qp_from_json(r#"{"period": 1, "degree": 0, "coefficients": [["1/0"]]}"#).is_err());
        assert!(matches!(qp_from_json("{"), Err(Error::Parse { .. })));
    }
}
