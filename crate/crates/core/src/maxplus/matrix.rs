use std::fmt;

use super::scalar::Scalar;
use super::vector::{row_product, Vector};
use crate::error::{Error, Result};

/// A row-major max-plus matrix with `rows ≥ 0` and `cols ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if cols == 0 {
            return Err(Error::OutOfRange("a matrix needs at least one column".into()));
        }
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch { expected: rows * cols, found: entries.len() });
        }
        Ok(Matrix { rows, cols, entries })
    }

    pub fn bottom(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![Scalar::Bottom; rows * cols] }
    }

    /// Builds a matrix from rows, which must all have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: row.len() });
            }
            entries.extend(row);
        }
        Matrix::new(n, cols, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, k: usize) -> &[Scalar] {
        &self.entries[k * self.cols..(k + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Scalar]> {
        self.entries.chunks(self.cols)
    }

    pub fn get(&self, k: usize, i: usize) -> &Scalar {
        &self.entries[k * self.cols + i]
    }

    pub fn mat_vec(&self, x: &Vector) -> Result<Vector> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: x.len() });
        }
        Ok(self.row_iter().map(|row| row_product(row, x)).collect())
    }

    /// A new matrix holding the selected rows, in the given order.
    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let mut entries = Vec::with_capacity(rows.len() * self.cols);
        for &k in rows {
            entries.extend_from_slice(self.row(k));
        }
        Matrix { rows: rows.len(), cols: self.cols, entries }
    }

    pub(crate) fn push_row(&mut self, row: &[Scalar]) {
        assert_eq!(row.len(), self.cols);
        self.entries.extend_from_slice(row);
        self.rows += 1;
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.row_iter() {
            let line: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}
