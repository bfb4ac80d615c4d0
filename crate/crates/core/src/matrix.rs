use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};

/// Dense row-major matrix over a [`Field`].
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn from_rows(field: &Field, rows: Vec<Vec<FieldElement>>) -> Result<Matrix> {
        let cols = rows.first().map_or(0, Vec::len);
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::Length {
                    expected: cols,
                    got: row.len(),
                });
            }
            for e in row {
                field.ensure_same(e.field())?;
                data.push(e);
            }
        }
        Ok(Matrix {
            field: field.clone(),
            rows: nrows,
            cols,
            data,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &FieldElement {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: FieldElement) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        self.field.ensure_same(&rhs.field)?;
        if self.cols != rhs.rows {
            return Err(Error::Length {
                expected: self.cols,
                got: rhs.rows,
            });
        }
        let mut out = Matrix::zeros(&self.field, self.rows, rhs.cols);
        for r in 0..self.rows {
            for c in 0..rhs.cols {
                let mut acc = self.field.zero();
                for i in 0..self.cols {
                    acc = acc + self.get(r, i) * rhs.get(i, c);
                }
                out.set(r, c, acc);
            }
        }
        Ok(out)
    }

    /// `self * rhs^T`, i.e. all pairwise row inner products.
    pub fn mul_transpose(&self, rhs: &Matrix) -> Result<Matrix> {
        self.mul(&rhs.transpose())
    }

    pub fn mul_vec(&self, v: &[FieldElement]) -> Result<Vec<FieldElement>> {
        if v.len() != self.cols {
            return Err(Error::Length {
                expected: self.cols,
                got: v.len(),
            });
        }
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .try_fold(self.field.zero(), |acc, (a, b)| Ok(acc + a.checked_mul(b)?))
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(FieldElement::is_zero)
    }

    /// Submatrix formed by the given columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(&self.field, self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out.set(r, j, self.get(r, c).clone());
            }
        }
        out
    }

    /// Reduces in place to row echelon form; returns the pivot columns.
    fn echelon(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pr) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            if pr != row {
                for c in 0..self.cols {
                    self.data.swap(pr * self.cols + c, row * self.cols + c);
                }
            }
            let inv = self.get(row, col).inv().expect("pivot is nonzero");
            for c in col..self.cols {
                let v = self.get(row, c) * &inv;
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r == row || self.get(r, col).is_zero() {
                    continue;
                }
                let factor = self.get(r, col).clone();
                for c in col..self.cols {
                    let v = self.get(r, c) - &factor * self.get(row, c);
                    self.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().echelon().len()
    }

    pub fn determinant(&self) -> Result<FieldElement> {
        if self.rows != self.cols {
            return Err(Error::Dimension(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = self.field.one();
        for col in 0..n {
            let Some(pr) = (col..n).find(|&r| !m.get(r, col).is_zero()) else {
                return Ok(self.field.zero());
            };
            if pr != col {
                for c in 0..n {
                    m.data.swap(pr * n + c, col * n + c);
                }
                det = -det;
            }
            let pivot = m.get(col, col).clone();
            det = det * &pivot;
            let inv = pivot.inv()?;
            for r in col + 1..n {
                let factor = m.get(r, col) * &inv;
                if factor.is_zero() {
                    continue;
                }
                for c in col..n {
                    let v = m.get(r, c) - &factor * m.get(col, c);
                    m.set(r, c, v);
                }
            }
        }
        Ok(det)
    }

    /// Basis of the right null space `{x : self * x = 0}`, one vector per row.
    pub fn nullspace(&self) -> Matrix {
        let mut m = self.clone();
        let pivots = m.echelon();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Matrix::zeros(&self.field, free.len(), self.cols);
        for (i, &f) in free.iter().enumerate() {
            basis.set(i, f, self.field.one());
            for (r, &pc) in pivots.iter().enumerate() {
                basis.set(i, pc, -m.get(r, f));
            }
        }
        basis
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stack(&self, other: &Matrix) -> Result<Matrix> {
        self.field.ensure_same(&other.field)?;
        if self.cols != other.cols {
            return Err(Error::Length {
                expected: self.cols,
                got: other.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:>width$}", cells[r * self.cols + c])?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Matrix {}x{} over {}\n{}",
            self.rows, self.cols, self.field, self
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(field: &Field, rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            field,
            rows.iter()
                .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn rank_and_determinant() {
        let f = Field::prime(13).unwrap();
        let a = m(&f, &[&[1, 2], &[2, 4]]);
        assert_eq!(a.rank(), 1);
        assert!(a.determinant().unwrap().is_zero());
        let b = m(&f, &[&[0, 1], &[1, 0]]);
        assert_eq!(b.determinant().unwrap(), -f.one());
        let c = m(&f, &[&[2, 0, 0], &[5, 3, 0], &[1, 1, 4]]);
        assert_eq!(c.determinant().unwrap(), f.from_u64(24));
        assert!(m(&f, &[&[1, 2, 3]]).determinant().is_err());
    }

    #[test]
    fn nullspace_is_annihilated() {
        let f = Field::prime(13).unwrap();
        let a = m(&f, &[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        let ns = a.nullspace();
        assert_eq!(ns.rows(), 4 - a.rank());
        assert!(a.mul_transpose(&ns).unwrap().is_zero());
        assert_eq!(ns.rank(), ns.rows());
    }
}
