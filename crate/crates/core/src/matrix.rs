use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::ExtReal;
use crate::vector::MpVector;

/// Dense row-major max-plus matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MpMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<ExtReal>,
}

impl MpMatrix {
    pub fn from_rows(rows: Vec<Vec<ExtReal>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(nrows * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(Error::DimensionMismatch {
                    expected: ncols,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(MpMatrix {
            rows: nrows,
            cols: ncols,
            entries,
        })
    }

    /// Builds a square matrix, rejecting any other shape.
    pub fn square(rows: Vec<Vec<ExtReal>>) -> Result<Self> {
        let m = Self::from_rows(rows)?;
        m.require_square()?;
        Ok(m)
    }

    /// Integer shorthand; `None` is −∞.
    pub fn from_ints(rows: &[&[Option<i64>]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|e| e.map_or(ExtReal::NegInf, ExtReal::from_int))
                        .collect()
                })
                .collect(),
        )
    }

    /// Max-plus identity: 0 on the diagonal, −∞ elsewhere.
    pub fn identity(n: usize) -> Self {
        let mut entries = vec![ExtReal::NegInf; n * n];
        for i in 0..n {
            entries[i * n + i] = ExtReal::zero();
        }
        MpMatrix {
            rows: n,
            cols: n,
            entries,
        }
    }

    pub fn filled(rows: usize, cols: usize, value: ExtReal) -> Self {
        MpMatrix {
            rows,
            cols,
            entries: vec![value; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Dimension of a square matrix.
    pub fn n(&self) -> usize {
        self.rows
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &ExtReal {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: ExtReal) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row_slice(&self, i: usize) -> &[ExtReal] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row(&self, i: usize) -> Result<MpVector> {
        self.check_row(i)?;
        Ok(MpVector::new(self.row_slice(i).to_vec()))
    }

    fn check_row(&self, i: usize) -> Result<()> {
        if i >= self.rows {
            return Err(Error::IndexOutOfRange {
                index: i,
                dim: self.rows,
            });
        }
        Ok(())
    }

    /// `A_i ⊗ x = max_k (a_ik + x_k)`.
    pub fn row_apply(&self, i: usize, x: &MpVector) -> Result<ExtReal> {
        self.check_row(i)?;
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: x.len(),
            });
        }
        Ok(self
            .row_slice(i)
            .iter()
            .zip(x.entries())
            .map(|(a, b)| a.otimes(b))
            .max()
            .unwrap_or(ExtReal::NegInf))
    }

    /// `A ⊗ x`.
    pub fn mat_vec(&self, x: &MpVector) -> Result<MpVector> {
        (0..self.rows)
            .map(|i| self.row_apply(i, x))
            .collect::<Result<Vec<_>>>()
            .map(MpVector::new)
    }

    /// `c ⊗ A`.
    pub fn scale(&self, c: &ExtReal) -> MpMatrix {
        MpMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| c.otimes(a)).collect(),
        }
    }
}

/// One row per line, entries separated by single spaces.
impl fmt::Display for MpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row = self
                .row_slice(i)
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" ");
            writeln!(f, "{row}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::example_matrix;

    const N: Option<i64> = None;

    #[test]
    fn column_extraction_by_unit_vector() {
        let a = example_matrix();
        assert_eq!(
            a.mat_vec(&MpVector::unit(5, 1)).unwrap(),
            MpVector::from_ints(&[Some(1), Some(1), Some(0), N, Some(-2)])
        );
        assert_eq!(
            a.mat_vec(&MpVector::neg_inf(5)).unwrap(),
            MpVector::neg_inf(5)
        );
    }

    #[test]
    fn mat_vec_third_component() {
        let a = example_matrix();
        let x = MpVector::from_ints(&[Some(1), Some(0), N, Some(2), N]);
        let y = a.mat_vec(&x).unwrap();
        assert_eq!(*y.get(2), ExtReal::from_int(4));
    }

    #[test]
    fn row_apply_examples() {
        let a = example_matrix();
        assert_eq!(a.row_apply(0, &MpVector::unit(5, 1)).unwrap(), 1.into());
        assert_eq!(
            a.row_apply(3, &MpVector::neg_inf(5)).unwrap(),
            ExtReal::NegInf
        );
        let x = MpVector::from_ints(&[Some(1), Some(0), Some(4), Some(2), N]);
        assert_eq!(a.row_apply(4, &x).unwrap(), 3.into());
        assert_eq!(
            a.row_apply(5, &x),
            Err(Error::IndexOutOfRange { index: 5, dim: 5 })
        );
        assert!(matches!(
            a.mat_vec(&MpVector::neg_inf(2)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn ragged_and_non_square_rejected() {
        assert!(MpMatrix::from_ints(&[&[Some(0), Some(1)], &[Some(0)]]).is_err());
        assert_eq!(
            MpMatrix::square(vec![vec![ExtReal::zero(), ExtReal::zero()]]),
            Err(Error::NotSquare { rows: 1, cols: 2 })
        );
    }
}
