//! The arrangement text format:
//!
//! ```text
//! # comment
//! field fp 32003      # or `field q`
//! vars 3
//! 1 0 0
//! 0 1 -1/2
//! ```
//!
//! One line of `vars` integer or rational coefficients per hyperplane.
//! Blank lines and everything after `#` are ignored.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec};

/// A parsed file before its coefficients are mapped into a field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawArrangement {
    pub field: Option<FieldSpec>,
    pub nvars: usize,
    /// Coefficients as `(numerator, denominator)` with positive denominator.
    pub rows: Vec<Vec<(BigInt, BigInt)>>,
    /// Line number of each row, for error messages.
    pub lines: Vec<usize>,
}

fn parse_coefficient(tok: &str, line: usize) -> Result<(BigInt, BigInt)> {
    let bad = || Error::Parse {
        line,
        msg: format!("bad coefficient `{tok}`"),
    };
    let (n, d) = match tok.split_once('/') {
        Some((n, d)) => (n, d),
        None => (tok, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::Parse {
            line,
            msg: format!("zero denominator in `{tok}`"),
        });
    }
    Ok(if d < BigInt::zero() { (-n, -d) } else { (n, d) })
}

/// Parses the text format. `vars` must come before the first row.
pub fn parse_arrangement(text: &str) -> Result<RawArrangement> {
    let mut field = None;
    let mut nvars = None;
    let mut rows = Vec::new();
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap().trim();
        if content.is_empty() {
            continue;
        }
        if let Some(rest) = content.strip_prefix("field") {
            if !rows.is_empty() {
                return Err(Error::Parse {
                    line,
                    msg: "`field` must precede the hyperplanes".into(),
                });
            }
            let spec = FieldSpec::parse(rest.trim()).map_err(|e| Error::Parse {
                line,
                msg: e.to_string(),
            })?;
            field = Some(spec);
            continue;
        }
        if let Some(rest) = content.strip_prefix("vars") {
            if nvars.is_some() {
                return Err(Error::Parse {
                    line,
                    msg: "`vars` given twice".into(),
                });
            }
            let n: usize = rest.trim().parse().map_err(|_| Error::Parse {
                line,
                msg: format!("bad variable count `{}`", rest.trim()),
            })?;
            if n == 0 || n > crate::monomial::MAX_VARS {
                return Err(Error::Parse {
                    line,
                    msg: format!("variable count must be between 1 and {}", crate::monomial::MAX_VARS),
                });
            }
            nvars = Some(n);
            continue;
        }
        let Some(n) = nvars else {
            return Err(Error::Parse {
                line,
                msg: "expected `vars <count>` before the hyperplanes".into(),
            });
        };
        let row = content
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| parse_coefficient(t, line))
            .collect::<Result<Vec<_>>>()?;
        if row.len() != n {
            return Err(Error::Parse {
                line,
                msg: format!("expected {n} coefficients, found {}", row.len()),
            });
        }
        rows.push(row);
        lines.push(line);
    }
    let Some(nvars) = nvars else {
        return Err(Error::Parse {
            line: text.lines().count().max(1),
            msg: "missing `vars <count>`".into(),
        });
    };
    if rows.is_empty() {
        return Err(Error::Parse {
            line: text.lines().count().max(1),
            msg: "no hyperplanes".into(),
        });
    }
    Ok(RawArrangement {
        field,
        nvars,
        rows,
        lines,
    })
}

impl RawArrangement {
    /// Maps the coefficients into `field` and validates the arrangement.
    /// Rows that become zero or proportional are reported with their lines.
    pub fn build<F: Field>(&self, field: F) -> Result<Arrangement<F>> {
        let mut forms: Vec<Vec<F::Elem>> = Vec::with_capacity(self.rows.len());
        for (row, &line) in self.rows.iter().zip(&self.lines) {
            let form = row
                .iter()
                .map(|(n, d)| field.from_ratio(n, d))
                .collect::<Result<Vec<_>>>()
                .map_err(|e| Error::Parse {
                    line,
                    msg: e.to_string(),
                })?;
            if form.iter().all(|c| field.is_zero(c)) {
                return Err(Error::Parse {
                    line,
                    msg: "zero hyperplane".into(),
                });
            }
            if let Some(k) = forms.iter().position(|g| super::proportional(&field, g, &form)) {
                return Err(Error::NotReduced(format!(
                    "line {line} is proportional to line {}",
                    self.lines[k]
                )));
            }
            forms.push(form);
        }
        Arrangement::new(field, self.nvars, forms)
    }

    /// Renders back to the text format.
    pub fn render(&self) -> String {
        let mut s = String::new();
        if let Some(f) = self.field {
            match f {
                FieldSpec::Rational => s.push_str("field q\n"),
                FieldSpec::Prime(p) => s.push_str(&format!("field fp {p}\n")),
            }
        }
        s.push_str(&format!("vars {}\n", self.nvars));
        for row in &self.rows {
            let toks: Vec<String> = row
                .iter()
                .map(|(n, d)| if d.is_one() { n.to_string() } else { format!("{n}/{d}") })
                .collect();
            s.push_str(&toks.join(" "));
            s.push('\n');
        }
        s
    }

    /// Integer rows as a raw arrangement.
    pub fn from_int_rows(field: Option<FieldSpec>, rows: &[Vec<i64>]) -> Self {
        let nvars = rows.first().map_or(0, |r| r.len());
        RawArrangement {
            field,
            nvars,
            rows: rows
                .iter()
                .map(|r| r.iter().map(|&c| (BigInt::from(c), BigInt::one())).collect())
                .collect(),
            lines: (1..=rows.len()).map(|i| i + 2).collect(),
        }
    }
}
