//! Plain-text matrix files.
//!
//! ```text
//! # comment lines and blank lines are ignored
//! lambda 1/2
//! -3   1  -inf
//!  1   1   2.5
//! -inf 0   5/4
//! ```
//!
//! The optional `lambda` line must come before the first row. Tokens are
//! integers, decimals, rationals `p/q` (all optionally signed) or `-inf`.

use std::fmt;

use maxplus::{Error, ExtReal, MpMatrix, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixDocument {
    pub matrix: MpMatrix,
    /// Finite eigenparameter; the system `A ⊗ x ≥ λ ⊗ x` becomes
    /// `((−λ) ⊗ A) ⊗ x ≥ x`.
    pub lambda_shift: Option<ExtReal>,
}

impl MatrixDocument {
    pub fn new(matrix: MpMatrix) -> Self {
        MatrixDocument {
            matrix,
            lambda_shift: None,
        }
    }

    /// The matrix after dividing out `lambda_shift`.
    pub fn reduced(&self) -> MpMatrix {
        match &self.lambda_shift {
            Some(l) => self
                .matrix
                .scale(&l.inverse().expect("lambda shift is finite")),
            None => self.matrix.clone(),
        }
    }
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Tokens of a line with their 1-based starting columns.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (col, (idx, ch)) in line.char_indices().enumerate() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some((col + 1, idx)),
            (true, Some((c, s))) => {
                out.push((c, &line[s..idx]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some((c, s)) = start {
        out.push((c, &line[s..]));
    }
    out.into_iter()
}

pub fn parse_finite(token: &str, line: usize, column: usize) -> Result<ExtReal> {
    match token.parse::<ExtReal>() {
        Ok(v) if v.is_finite() => Ok(v),
        Ok(_) => Err(parse_error(line, column, "value must be finite")),
        Err(e) => Err(parse_error(line, column, e.to_string())),
    }
}

pub fn parse_matrix(text: &str) -> Result<MatrixDocument> {
    let mut lambda_shift = None;
    let mut rows: Vec<Vec<ExtReal>> = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let toks: Vec<_> = tokens(raw).collect();
        if toks[0].1.eq_ignore_ascii_case("lambda") {
            if !rows.is_empty() {
                return Err(parse_error(line_no, toks[0].0, "lambda line must precede the matrix rows"));
            }
            if lambda_shift.is_some() {
                return Err(parse_error(line_no, toks[0].0, "duplicate lambda line"));
            }
            let [_, (col, value)] = toks[..] else {
                return Err(parse_error(line_no, toks[0].0, "expected `lambda <value>`"));
            };
            lambda_shift = Some(parse_finite(value, line_no, col)?);
            continue;
        }
        let mut row = Vec::with_capacity(toks.len());
        for (col, tok) in &toks {
            let value = tok
                .parse::<ExtReal>()
                .map_err(|e| parse_error(line_no, *col, e.to_string()))?;
            row.push(value);
        }
        if let Some(first) = rows.first() {
            if row.len() != first.len() {
                return Err(parse_error(
                    line_no,
                    1,
                    format!("row has {} entries, expected {}", row.len(), first.len()),
                ));
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(parse_error(last_line.max(1), 1, "no matrix rows"));
    }
    let n = rows[0].len();
    if rows.len() != n {
        return Err(parse_error(
            last_line,
            1,
            format!("matrix is {}x{n}, expected a square matrix", rows.len()),
        ));
    }
    let matrix = MpMatrix::square(rows)?;
    Ok(MatrixDocument {
        matrix,
        lambda_shift,
    })
}

impl fmt::Display for MatrixDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(l) = &self.lambda_shift {
            writeln!(f, "lambda {l}")?;
        }
        write!(f, "{}", self.matrix)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use maxplus::fixtures::example_matrix;

    const EXAMPLE: &str = "\
-3    1   -inf -inf -inf
 1    1    1   -inf -inf
-inf  0   -inf  2   -inf
 1   -inf -5   -inf -7
-2   -2   -7    1   -inf
";

    #[test]
    fn parses_example_matrix() {
        let doc = parse_matrix(EXAMPLE).unwrap();
        assert_eq!(doc.matrix, example_matrix());
        assert_eq!(*doc.matrix.get(0, 1), ExtReal::from_int(1));
        assert_eq!(*doc.matrix.get(3, 4), ExtReal::from_int(-7));
        assert_eq!(doc.lambda_shift, None);
    }

    #[test]
    fn small_documents() {
        let one = parse_matrix("0\n").unwrap();
        assert_eq!(one.matrix, MpMatrix::from_ints(&[&[Some(0)]]).unwrap());

        let two = parse_matrix("-inf -inf\n0 0\n").unwrap();
        assert_eq!(
            two.matrix,
            MpMatrix::from_ints(&[&[None, None], &[Some(0), Some(0)]]).unwrap()
        );

        let frac = parse_matrix("# shifted\nlambda 1/2\n2.5 -INF\n5/4 0\n").unwrap();
        assert_eq!(frac.lambda_shift, Some(ExtReal::from_ratio(1, 2)));
        assert_eq!(*frac.matrix.get(0, 0), ExtReal::from_ratio(5, 2));
    }

    #[test]
    fn errors_carry_positions() {
        let err = parse_matrix("0 1\n2 x3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, column: 3, .. }), "{err}");

        let err = parse_matrix("0 1\n2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");

        let err = parse_matrix("0 1\n2 3\n4 5\n").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }), "{err}");

        let err = parse_matrix("").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));

        let err = parse_matrix("lambda -inf\n0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, column: 8, .. }), "{err}");

        let err = parse_matrix("0\nlambda 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
    }

    #[test]
    fn reduction_subtracts_lambda() {
        let doc = parse_matrix("lambda 2\n3 -inf\n0 2\n").unwrap();
        assert_eq!(
            doc.reduced(),
            MpMatrix::from_ints(&[&[Some(1), None], &[Some(-2), Some(0)]]).unwrap()
        );
    }
}
