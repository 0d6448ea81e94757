//! Smith normal form over the integers.
//!
//! The pivot is always the nonzero entry of least absolute value in the
//! remaining submatrix (first in row-major order on ties). Row and column
//! reductions use truncating division, so every non-clean pass strictly
//! shrinks the pivot and the loop terminates.

use super::{Int, IntMatrix, LinalgError};

/// `U·M·V = D` with `U`, `V` unimodular and `D` diagonal in Smith form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SnfResult {
    /// Diagonal entries `d₁ | d₂ | …`, all nonnegative.
    pub fn diagonal(&self) -> Vec<Int> {
        self.d.diagonal()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|&&d| d != 0).count()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> Result<SnfResult, LinalgError> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = find_pivot(&a, t) else {
                return Ok(SnfResult { u, d: a, v });
            };
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let p = a[(t, t)];
            let mut clean = true;
            for i in t + 1..rows {
                let q = a[(i, t)] / p;
                if q != 0 {
                    a.row_sub_mul(i, q, t)?;
                    u.row_sub_mul(i, q, t)?;
                }
                clean &= a[(i, t)] == 0;
            }
            for j in t + 1..cols {
                let q = a[(t, j)] / p;
                if q != 0 {
                    a.col_sub_mul(j, q, t)?;
                    v.col_sub_mul(j, q, t)?;
                }
                clean &= a[(t, j)] == 0;
            }
            if !clean {
                continue;
            }

            // Pivot row and column are clear. Enforce p | every remaining
            // entry by folding an offending row into the pivot row.
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| a[(i, j)] % p != 0));
            if let Some(i) = offender {
                a.row_sub_mul(t, -1, i)?;
                u.row_sub_mul(t, -1, i)?;
                continue;
            }

            if p < 0 {
                a.negate_row(t)?;
                u.negate_row(t)?;
            }
            break;
        }
    }
    Ok(SnfResult { u, d: a, v })
}

fn find_pivot(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(Int, usize, usize)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let x = a[(i, j)];
            if x == 0 {
                continue;
            }
            let mag = x.unsigned_abs();
            if best.is_none_or(|(b, _, _)| mag < b.unsigned_abs()) {
                best = Some((x, i, j));
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

/// Checks the defining properties of an SNF result against its input.
pub fn verify_snf(m: &IntMatrix, snf: &SnfResult) -> Result<bool, LinalgError> {
    let lhs = snf.u.checked_mul(m)?.checked_mul(&snf.v)?;
    if lhs != snf.d {
        return Ok(false);
    }
    let d = &snf.d;
    for i in 0..d.rows() {
        for j in 0..d.cols() {
            if i != j && d[(i, j)] != 0 {
                return Ok(false);
            }
        }
    }
    let diag = snf.diagonal();
    if diag.iter().any(|&x| x < 0) {
        return Ok(false);
    }
    for w in diag.windows(2) {
        let divides = if w[0] == 0 { w[1] == 0 } else { w[1] % w[0] == 0 };
        if !divides {
            return Ok(false);
        }
    }
    let unimodular = |x: &IntMatrix| -> Result<bool, LinalgError> { Ok(super::det(x)?.abs() == 1) };
    Ok(unimodular(&snf.u)? && unimodular(&snf.v)?)
}
