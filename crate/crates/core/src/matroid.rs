//! Regular matroids given by a standard-form totally unimodular matrix
//! `A = [I_r | D]`.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::linalg::{det, Int, IntMatrix, LinalgError};

/// Largest row or column count accepted by the exhaustive minor check.
/// The check visits every square submatrix, `C(rows + cols, rows)` of them.
pub const MAX_TU_DIM: usize = 12;

/// Largest ground set accepted by basis enumeration.
pub const MAX_BASIS_GROUND_SET: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatroidError {
    #[error("invalid standard form: {0}")]
    InvalidShape(String),
    #[error("matrix is not totally unimodular: {0}")]
    NotTotallyUnimodular(MinorViolation),
    #[error("{what} of size {size} exceeds the supported limit {limit}")]
    UnsupportedSize { what: &'static str, size: usize, limit: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A square submatrix whose determinant lies outside `{−1, 0, 1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorViolation {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub det: Int,
}

impl std::fmt::Display for MinorViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "minor on rows {:?}, columns {:?} has determinant {}", self.rows, self.cols, self.det)
    }
}

/// Returns the first square submatrix (by size, then lexicographic row and
/// column sets) whose determinant is not in `{−1, 0, 1}`.
pub fn find_unimodularity_violation(m: &IntMatrix) -> Result<Option<MinorViolation>, MatroidError> {
    for (what, size) in [("row count", m.rows()), ("column count", m.cols())] {
        if size > MAX_TU_DIM {
            return Err(MatroidError::UnsupportedSize { what, size, limit: MAX_TU_DIM });
        }
    }
    for k in 1..=m.rows().min(m.cols()) {
        for rows in (0..m.rows()).combinations(k) {
            for cols in (0..m.cols()).combinations(k) {
                let d = det(&m.select(&rows, &cols))?;
                if d.abs() > 1 {
                    return Ok(Some(MinorViolation { rows, cols, det: d }));
                }
            }
        }
    }
    Ok(None)
}

/// Exhaustive total-unimodularity test; exponential in the matrix size.
pub fn verify_totally_unimodular(m: &IntMatrix) -> Result<bool, MatroidError> {
    Ok(find_unimodularity_violation(m)?.is_none())
}

/// A regular matroid on `n` elements of rank `r`, stored as the `r × (n−r)`
/// block `D` of its representation `[I_r | D]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularMatroid {
    reduced: IntMatrix,
}

impl RegularMatroid {
    /// Validates shape and total unimodularity of `[I_r | D]`.
    pub fn new(reduced: IntMatrix) -> Result<Self, MatroidError> {
        let m = Self::new_unchecked(reduced)?;
        if let Some(v) = find_unimodularity_violation(&m.matrix())? {
            return Err(MatroidError::NotTotallyUnimodular(v));
        }
        Ok(m)
    }

    /// Validates shape only. For trusted built-in matrices.
    pub fn new_unchecked(reduced: IntMatrix) -> Result<Self, MatroidError> {
        if reduced.rows() == 0 {
            return Err(MatroidError::InvalidShape("rank must be at least 1".into()));
        }
        if reduced.cols() == 0 {
            return Err(MatroidError::InvalidShape(
                "ground set must be larger than the rank (D has no columns)".into(),
            ));
        }
        Ok(RegularMatroid { reduced })
    }

    pub fn rank(&self) -> usize {
        self.reduced.rows()
    }

    pub fn ground_set_size(&self) -> usize {
        self.reduced.rows() + self.reduced.cols()
    }

    /// The block `D`.
    pub fn reduced(&self) -> &IntMatrix {
        &self.reduced
    }

    /// `A = [I_r | D]`.
    pub fn matrix(&self) -> IntMatrix {
        IntMatrix::identity(self.rank()).hstack(&self.reduced).expect("row counts agree")
    }

    /// `Â = [Dᵗ | −I_{n−r}]`.
    pub fn dual_matrix(&self) -> IntMatrix {
        let corank = self.reduced.cols();
        let neg_id = IntMatrix::identity(corank).checked_scale(-1).expect("no overflow");
        self.reduced.transpose().hstack(&neg_id).expect("row counts agree")
    }

    /// `K = [A; Â]`, which is symmetric.
    pub fn combined_k(&self) -> IntMatrix {
        self.matrix().vstack(&self.dual_matrix()).expect("column counts agree")
    }

    /// All `r`-subsets of columns of `A` with nonzero determinant, in
    /// lexicographic order.
    pub fn enumerate_bases(&self) -> Result<Vec<Basis>, MatroidError> {
        let n = self.ground_set_size();
        if n > MAX_BASIS_GROUND_SET {
            return Err(MatroidError::UnsupportedSize {
                what: "ground set",
                size: n,
                limit: MAX_BASIS_GROUND_SET,
            });
        }
        let a = self.matrix();
        let rows: Vec<usize> = (0..self.rank()).collect();
        let mut bases = Vec::new();
        for cols in (0..n).combinations(self.rank()) {
            if det(&a.select(&rows, &cols))? != 0 {
                bases.push(Basis { columns: cols });
            }
        }
        Ok(bases)
    }
}

/// A set of column indices forming a basis, sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Basis {
    pub columns: Vec<usize>,
}

/// JSON exchange form `{"r": .., "n": .., "D": [[..], ..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatroidJson {
    pub r: usize,
    pub n: usize,
    #[serde(rename = "D")]
    pub d: Vec<Vec<Int>>,
}

impl MatroidJson {
    fn reduced_matrix(&self) -> Result<IntMatrix, MatroidError> {
        if self.n <= self.r || self.r == 0 {
            return Err(MatroidError::InvalidShape(format!(
                "need n > r >= 1, got r = {}, n = {}",
                self.r, self.n
            )));
        }
        if self.d.len() != self.r {
            return Err(MatroidError::InvalidShape(format!(
                "D has {} rows, expected r = {}",
                self.d.len(),
                self.r
            )));
        }
        let width = self.n - self.r;
        if let Some((i, row)) = self.d.iter().enumerate().find(|(_, row)| row.len() != width) {
            return Err(MatroidError::InvalidShape(format!(
                "D row {i} has {} entries, expected n - r = {width}",
                row.len()
            )));
        }
        Ok(IntMatrix::from_rows(&self.d)?)
    }
}

impl TryFrom<&MatroidJson> for RegularMatroid {
    type Error = MatroidError;
    fn try_from(value: &MatroidJson) -> Result<Self, Self::Error> {
        RegularMatroid::new(value.reduced_matrix()?)
    }
}

impl From<&RegularMatroid> for MatroidJson {
    fn from(m: &RegularMatroid) -> Self {
        MatroidJson { r: m.rank(), n: m.ground_set_size(), d: m.reduced().to_rows() }
    }
}
