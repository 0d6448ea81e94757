use std::fmt;
use std::ops::{Index, IndexMut};

use super::scalar::{self, Scalar};
use super::{GaussInt, Int, LinalgError};

/// Dense row-major matrix over an exact ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

pub type IntMatrix = Matrix<Int>;
pub type GaussMatrix = Matrix<GaussInt>;

impl<T: Scalar> Matrix<T> {
    pub fn new(rows: usize, cols: usize, entries: Vec<T>) -> Result<Self, LinalgError> {
        if entries.len() != rows * cols {
            return Err(LinalgError::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Matrix { rows, cols, entries })
    }

    /// Builds a matrix from a list of rows. All rows must have equal length.
    pub fn from_rows<R: AsRef<[T]>>(rows: &[R]) -> Result<Self, LinalgError> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(LinalgError::Dimension(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            entries.extend_from_slice(row);
        }
        Ok(Matrix { rows: rows.len(), cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn diagonal(&self) -> Vec<T> {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).collect()
    }

    /// The submatrix on the given (not necessarily sorted) rows and columns.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let entries =
            rows.iter().flat_map(|&i| cols.iter().map(move |&j| (i, j))).map(|ij| self[ij]).collect();
        Matrix { rows: rows.len(), cols: cols.len(), entries }
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.rows != other.rows {
            return Err(LinalgError::Dimension(format!("hstack of {} and {} rows", self.rows, other.rows)));
        }
        let rows: Vec<Vec<T>> = (0..self.rows).map(|i| [self.row(i), other.row(i)].concat()).collect();
        let mut m = Self::from_rows(&rows)?;
        m.cols = self.cols + other.cols;
        Ok(m)
    }

    /// `[self; other]`.
    pub fn vstack(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.cols {
            return Err(LinalgError::Dimension(format!(
                "vstack of {} and {} columns",
                self.cols, other.cols
            )));
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(Matrix { rows: self.rows + other.rows, cols: self.cols, entries })
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::Dimension(format!(
                "product of {}x{} and {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = T::zero();
                for k in 0..self.cols {
                    let p = scalar::mul(self[(i, k)], rhs[(k, j)], "matrix product")?;
                    acc = scalar::add(acc, p, "matrix product")?;
                }
                out[(i, j)] = acc;
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::Dimension(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        (0..self.rows)
            .map(|i| {
                self.row(i).iter().zip(v).try_fold(T::zero(), |acc, (&a, &b)| {
                    scalar::add(acc, scalar::mul(a, b, "matrix-vector product")?, "matrix-vector product")
                })
            })
            .collect()
    }

    pub fn checked_scale(&self, k: T) -> Result<Self, LinalgError> {
        let entries = self.entries.iter().map(|&a| scalar::mul(a, k, "scale")).collect::<Result<_, _>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, entries })
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] -= q * row[src]
    pub(crate) fn row_sub_mul(&mut self, dst: usize, q: T, src: usize) -> Result<(), LinalgError> {
        for j in 0..self.cols {
            let v = scalar::sub_mul(self[(dst, j)], q, self[(src, j)], "row operation")?;
            self[(dst, j)] = v;
        }
        Ok(())
    }

    /// col[dst] -= q * col[src]
    pub(crate) fn col_sub_mul(&mut self, dst: usize, q: T, src: usize) -> Result<(), LinalgError> {
        for i in 0..self.rows {
            let v = scalar::sub_mul(self[(i, dst)], q, self[(i, src)], "column operation")?;
            self[(i, dst)] = v;
        }
        Ok(())
    }

    pub(crate) fn negate_row(&mut self, i: usize) -> Result<(), LinalgError> {
        for j in 0..self.cols {
            self[(i, j)] = scalar::neg(self[(i, j)], "row negation")?;
        }
        Ok(())
    }
}

impl GaussMatrix {
    /// Splits `P + Qi` into its real and imaginary integer parts.
    pub fn split(&self) -> (IntMatrix, IntMatrix) {
        let re = self.entries.iter().map(|z| z.re).collect();
        let im = self.entries.iter().map(|z| z.im).collect();
        (
            Matrix { rows: self.rows, cols: self.cols, entries: re },
            Matrix { rows: self.rows, cols: self.cols, entries: im },
        )
    }

    /// `re + im·i` from two integer matrices of equal shape.
    pub fn from_parts(re: &IntMatrix, im: &IntMatrix) -> Result<Self, LinalgError> {
        if re.rows != im.rows || re.cols != im.cols {
            return Err(LinalgError::Dimension("real and imaginary parts differ in shape".into()));
        }
        let entries = re.entries.iter().zip(&im.entries).map(|(&a, &b)| GaussInt::new(a, b)).collect();
        Ok(Matrix { rows: re.rows, cols: re.cols, entries })
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.entries[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &mut self.entries[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.rows {
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{:>width$}", cells[i * self.cols + j])?;
            }
            f.write_str("]\n")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ragged_rows_rejected() {
        let err = IntMatrix::from_rows(&[vec![1, 2], vec![3]]).unwrap_err();
        assert!(matches!(err, LinalgError::Dimension(_)));
        assert!(IntMatrix::new(2, 2, vec![1, 2, 3]).is_err());
    }

    #[test]
    fn stacking_and_product() {
        let a = IntMatrix::from_rows(&[[1, 2], [3, 4]]).unwrap();
        let i = IntMatrix::identity(2);
        assert_eq!(a.checked_mul(&i).unwrap(), a);
        let h = i.hstack(&a).unwrap();
        assert_eq!(h.row(1), &[0, 1, 3, 4]);
        let v = i.vstack(&a).unwrap();
        assert_eq!(v.rows(), 4);
        assert_eq!(v.column(1), vec![0, 1, 2, 4]);
        assert_eq!(a.mul_vec(&[1, -1]).unwrap(), vec![-1, -1]);
    }

    #[test]
    fn product_overflow_is_reported() {
        let a = IntMatrix::from_rows(&[[i128::MAX, 1]]).unwrap();
        let b = IntMatrix::from_rows(&[[2], [0]]).unwrap();
        assert!(matches!(a.checked_mul(&b), Err(LinalgError::Overflow(_))));
    }

    #[test]
    fn select_picks_minor() {
        let a = IntMatrix::from_rows(&[[1, 2, 3], [4, 5, 6], [7, 8, 9]]).unwrap();
        let m = a.select(&[0, 2], &[1, 2]);
        assert_eq!(m, IntMatrix::from_rows(&[[2, 3], [8, 9]]).unwrap());
    }
}
