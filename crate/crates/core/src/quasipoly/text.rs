//! Canonical text rendering of quasi-polynomials and its parser.
//!
//! ```text
//! period 4, degree 2
//! t ≡ 0 (mod 4): 9/32 t^2 + 3/8 t
//! t ≡ 1 (mod 4): 9/32 t^2 - 3/16 t - 3/32
//! ...
//! ```
//!
//! The parser accepts this rendering, rows written as `j: <expr>`, or a
//! single bare polynomial such as `t + 1` (period 1). Blank lines and
//! `#` comments are ignored.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::QuasiPolynomial;
use crate::arith::Rational;
use crate::error::{Error, Result};

pub(crate) fn render_row(row: &[Rational]) -> String {
    let mut out = String::new();
    for (k, c) in row.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let negative = c.is_negative();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let mag = c.abs();
        match k {
            0 => out.push_str(&mag.to_string()),
            _ => {
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                    out.push(' ');
                }
                out.push('t');
                if k > 1 {
                    out.push_str(&format!("^{k}"));
                }
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for QuasiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.period();
        write!(f, "period {p}, degree {}", self.degree())?;
        for j in 0..p {
            write!(f, "\nt ≡ {j} (mod {p}): {}", render_row(self.row(j)))?;
        }
        Ok(())
    }
}

impl fmt::Debug for QuasiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuasiPolynomial(")?;
        for (j, row) in self.rows().iter().enumerate() {
            if j > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{j}: {}", render_row(row))?;
        }
        write!(f, ")")
    }
}

struct ExprParser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    line: usize,
    col0: usize,
    src: &'a str,
}

impl<'a> ExprParser<'a> {
    fn new(src: &'a str, line: usize, col0: usize) -> Self {
        ExprParser {
            chars: src.char_indices().collect(),
            pos: 0,
            line,
            col0,
            src,
        }
    }

    fn column(&self) -> usize {
        self.col0
            + self
                .chars
                .get(self.pos)
                .map_or(self.src.chars().count(), |_| self.pos)
            + 1
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.line, self.column(), msg)
    }

    fn skip_ws(&mut self) {
        while self
            .chars
            .get(self.pos)
            .is_some_and(|(_, c)| c.is_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn integer(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let s: String = self.chars[start..self.pos]
            .iter()
            .map(|&(_, c)| c)
            .collect();
        Some(s.parse().expect("digits parse"))
    }

    /// Parses `[+|-] term {(+|-) term}` into ascending coefficients.
    fn polynomial(mut self) -> Result<Vec<Rational>> {
        let mut coeffs: Vec<Rational> = vec![Rational::zero()];
        let mut first = true;
        loop {
            self.skip_ws();
            let mut sign = Rational::one();
            match self.peek() {
                Some('+') if !first => self.pos += 1,
                Some('-') => {
                    self.pos += 1;
                    sign = -sign;
                }
                None if first => return Err(self.err("empty expression")),
                None => break,
                Some(c) if !first => {
                    return Err(self.err(format!("expected `+` or `-`, found `{c}`")))
                }
                _ => {}
            }
            first = false;
            self.skip_ws();
            let (c, k) = self.term()?;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, Rational::zero());
            }
            coeffs[k] += sign * c;
        }
        Ok(coeffs)
    }

    fn term(&mut self) -> Result<(Rational, usize)> {
        let mut coeff = None;
        if let Some(num) = self.integer() {
            let mut value = Rational::from_integer(num);
            self.skip_ws();
            if self.peek() == Some('/') {
                self.pos += 1;
                self.skip_ws();
                let den = self
                    .integer()
                    .ok_or_else(|| self.err("expected denominator"))?;
                if den.is_zero() {
                    return Err(self.err("zero denominator"));
                }
                value /= Rational::from_integer(den);
            }
            coeff = Some(value);
            self.skip_ws();
            if self.peek() == Some('*') {
                self.pos += 1;
                self.skip_ws();
            }
        }
        if self.peek() == Some('t') {
            self.pos += 1;
            self.skip_ws();
            let mut k = 1usize;
            if self.peek() == Some('^') {
                self.pos += 1;
                self.skip_ws();
                let e = self
                    .integer()
                    .ok_or_else(|| self.err("expected exponent"))?;
                k = e.try_into().map_err(|_| self.err("exponent too large"))?;
            }
            return Ok((coeff.unwrap_or_else(Rational::one), k));
        }
        match coeff {
            Some(c) => Ok((c, 0)),
            None => Err(match self.peek() {
                Some(c) => self.err(format!("unexpected `{c}`")),
                None => self.err("expected a term"),
            }),
        }
    }
}

fn parse_usize(tok: &str, line: usize, col: usize) -> Result<u64> {
    tok.trim().parse::<u64>().map_err(|_| {
        Error::parse(
            line,
            col,
            format!("expected a nonnegative integer, found `{}`", tok.trim()),
        )
    })
}

/// Parses a row label: `j` or `t ≡ j (mod p)` (also `t = j (mod p)`).
fn parse_label(label: &str, line: usize) -> Result<(u64, Option<u64>)> {
    let l = label.trim();
    if let Some(rest) = l.strip_prefix('t') {
        let rest = rest.trim_start();
        let rest = rest
            .strip_prefix('≡')
            .or_else(|| rest.strip_prefix("=="))
            .or_else(|| rest.strip_prefix('='))
            .ok_or_else(|| Error::parse(line, 1, format!("malformed residue label `{l}`")))?;
        let (j, m) = rest
            .split_once("(mod")
            .ok_or_else(|| Error::parse(line, 1, format!("malformed residue label `{l}`")))?;
        let m = m
            .trim()
            .strip_suffix(')')
            .ok_or_else(|| Error::parse(line, 1, format!("missing `)` in `{l}`")))?;
        Ok((parse_usize(j, line, 1)?, Some(parse_usize(m, line, 1)?)))
    } else {
        Ok((parse_usize(l, line, 1)?, None))
    }
}

/// Parses the textual quasi-polynomial syntax described in the module docs.
pub fn parse_quasi_polynomial(src: &str) -> Result<QuasiPolynomial> {
    let mut period: Option<(u64, usize)> = None;
    let mut rows: Vec<(u64, Vec<Rational>, usize)> = Vec::new();
    let mut bare: Option<(Vec<Rational>, usize)> = None;
    for (idx, raw) in src.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        if let Some(rest) = content.trim_start().strip_prefix("period") {
            if period.is_some() {
                return Err(Error::parse(line, 1, "duplicate `period` header"));
            }
            let head = rest.split(',').next().unwrap_or("");
            let p = parse_usize(head, line, 8)?;
            if p == 0 {
                return Err(Error::parse(line, 8, "period must be positive"));
            }
            period = Some((p, line));
            continue;
        }
        match content.split_once(':') {
            Some((label, expr)) => {
                let (j, modulus) = parse_label(label, line)?;
                if let (Some(m), Some((p, _))) = (modulus, period) {
                    if m != p {
                        return Err(Error::parse(
                            line,
                            1,
                            format!("row modulus {m} differs from period {p}"),
                        ));
                    }
                }
                let col0 = label.chars().count() + 1;
                let coeffs = ExprParser::new(expr, line, col0).polynomial()?;
                rows.push((j, coeffs, line));
            }
            None => {
                if bare.is_some() || !rows.is_empty() {
                    return Err(Error::parse(line, 1, "expected `<residue>: <expression>`"));
                }
                bare = Some((ExprParser::new(content, line, 0).polynomial()?, line));
            }
        }
    }
    if let Some((coeffs, line)) = bare {
        if !rows.is_empty() || period.is_some_and(|(p, _)| p != 1) {
            return Err(Error::parse(
                line,
                1,
                "bare polynomial mixed with residue rows",
            ));
        }
        return Ok(QuasiPolynomial::polynomial(coeffs));
    }
    let p = match period {
        Some((p, _)) => p,
        None => rows.len() as u64,
    };
    if p == 0 {
        return Err(Error::parse(1, 1, "no quasi-polynomial found"));
    }
    let mut table: Vec<Option<Vec<Rational>>> = vec![None; p as usize];
    for (j, coeffs, line) in rows {
        if j >= p {
            return Err(Error::parse(
                line,
                1,
                format!("residue {j} out of range for period {p}"),
            ));
        }
        if table[j as usize].replace(coeffs).is_some() {
            return Err(Error::parse(line, 1, format!("residue {j} given twice")));
        }
    }
    let missing: Vec<String> = table
        .iter()
        .enumerate()
        .filter(|(_, r)| r.is_none())
        .map(|(j, _)| j.to_string())
        .collect();
    if !missing.is_empty() {
        let line = period.map_or(1, |(_, l)| l);
        return Err(Error::parse(
            line,
            1,
            format!("missing residues {}", missing.join(", ")),
        ));
    }
    QuasiPolynomial::new(table.into_iter().map(Option::unwrap).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn render_simplex_two() {
        let l = QuasiPolynomial::polynomial(vec![rat(1, 1), rat(3, 2), rat(1, 2)]);
        assert_eq!(
            l.to_string(),
            "period 1, degree 2\nt ≡ 0 (mod 1): 1/2 t^2 + 3/2 t + 1"
        );
    }

    #[test]
    fn render_signs_and_units() {
        assert_eq!(
            render_row(&[rat(-3, 32), rat(-3, 16), rat(9, 32)]),
            "9/32 t^2 - 3/16 t - 3/32"
        );
        assert_eq!(render_row(&[rat(1, 1), rat(1, 1)]), "t + 1");
        assert_eq!(render_row(&[rat(0, 1), rat(-1, 1)]), "-t");
        assert_eq!(render_row(&[rat(0, 1)]), "0");
    }

    #[test]
    fn parse_bare_polynomials() {
        let f = parse_quasi_polynomial("t+1").unwrap();
        assert_eq!(f, QuasiPolynomial::polynomial(vec![rat(1, 1), rat(1, 1)]));
        let g = parse_quasi_polynomial("-1/2*t^2 + 3 t - 2/4").unwrap();
        assert_eq!(
            g,
            QuasiPolynomial::polynomial(vec![rat(-1, 2), rat(3, 1), rat(-1, 2)])
        );
    }

    #[test]
    fn parse_rendered_output_round_trips() {
        let f = QuasiPolynomial::new(vec![
            vec![rat(0, 1), rat(3, 8), rat(9, 32)],
            vec![rat(-3, 32), rat(-3, 16), rat(9, 32)],
            vec![rat(-1, 8), rat(0, 1), rat(9, 32)],
            vec![rat(-3, 32), rat(3, 16), rat(9, 32)],
        ])
        .unwrap();
        assert_eq!(parse_quasi_polynomial(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn parse_short_rows() {
        let f = parse_quasi_polynomial("# half of even t\nperiod 2\n0: 1/2 t\n1: 0\n").unwrap();
        assert_eq!(
            f,
            QuasiPolynomial::new(vec![vec![rat(0, 1), rat(1, 2)], vec![rat(0, 1)]]).unwrap()
        );
    }

    #[test]
    fn parse_errors_carry_positions() {
        match parse_quasi_polynomial("period 2\n0: 1/0 t\n1: 0") {
            Err(Error::Parse { line, column, .. }) => {
                assert_eq!(line, 2);
                assert_eq!(column, 7);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_quasi_polynomial("period 3\n0: 1\n1: 2"),
            Err(Error::Parse { .. })
        ));
        assert!(parse_quasi_polynomial("t + x").is_err());
    }
}
