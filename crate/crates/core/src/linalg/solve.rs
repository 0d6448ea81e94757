use super::{det, smith_normal_form, GaussInt, GaussMatrix, Int, IntMatrix, LinalgError, SnfResult};

/// Exact solver for `M·x = b` over `Z` with a fixed nonsingular `M`.
///
/// Factors `M` once as `U·M·V = D`; each solve is then `x = V·D⁻¹·U·b` with a
/// divisibility check per coordinate. `None` means no integer solution exists.
#[derive(Clone, Debug)]
pub struct IntSolver {
    matrix: IntMatrix,
    snf: SnfResult,
}

impl IntSolver {
    pub fn new(matrix: &IntMatrix) -> Result<Self, LinalgError> {
        if !matrix.is_square() {
            return Err(LinalgError::Dimension(format!(
                "solve with a {}x{} matrix",
                matrix.rows(),
                matrix.cols()
            )));
        }
        if det(matrix)? == 0 {
            return Err(LinalgError::Singular);
        }
        Ok(IntSolver { matrix: matrix.clone(), snf: smith_normal_form(matrix)? })
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn solve(&self, b: &[Int]) -> Result<Option<Vec<Int>>, LinalgError> {
        let ub = self.snf.u.mul_vec(b)?;
        let mut y = Vec::with_capacity(ub.len());
        for (c, d) in ub.into_iter().zip(self.snf.diagonal()) {
            if c % d != 0 {
                return Ok(None);
            }
            y.push(c / d);
        }
        let x = self.snf.v.mul_vec(&y)?;
        if self.matrix.mul_vec(&x)? != b {
            return Err(LinalgError::Internal("solution failed verification".into()));
        }
        Ok(Some(x))
    }
}

/// Solves `M·x = b` over the integers.
///
/// Returns `Ok(None)` when the rational solution is not integral and
/// `Err(Singular)` when `M` has zero determinant.
pub fn solve_integer(m: &IntMatrix, b: &[Int]) -> Result<Option<Vec<Int>>, LinalgError> {
    IntSolver::new(m)?.solve(b)
}

/// The `2n×2n` integer matrix `[[P, −Q], [Q, P]]` representing `P + Qi`
/// acting on `Z[i]ⁿ ≅ Z²ⁿ` with coordinates `(re x, im x)`.
pub fn realify(m: &GaussMatrix) -> Result<IntMatrix, LinalgError> {
    let (p, q) = m.split();
    let neg_q = q.checked_scale(-1)?;
    let top = p.hstack(&neg_q)?;
    let bottom = q.hstack(&p)?;
    top.vstack(&bottom)
}

/// Solves `M·x = b` over `Z[i]` by passing to the equivalent integer system.
pub fn gauss_solve_via_real(m: &GaussMatrix, b: &[GaussInt]) -> Result<Option<Vec<GaussInt>>, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::Dimension(format!("solve with a {}x{} matrix", m.rows(), m.cols())));
    }
    let n = m.rows();
    if b.len() != n {
        return Err(LinalgError::Dimension(format!("right-hand side of length {} for {n} rows", b.len())));
    }
    let real = realify(m)?;
    let rhs: Vec<Int> = b.iter().map(|z| z.re).chain(b.iter().map(|z| z.im)).collect();
    let Some(x) = solve_integer(&real, &rhs)? else {
        return Ok(None);
    };
    let sol: Vec<GaussInt> = (0..n).map(|k| GaussInt::new(x[k], x[n + k])).collect();
    // Check in Z[i] as well: the embedding is a ring map, so this only fails on a bug.
    let back = m.mul_vec(&sol)?;
    if back != b {
        return Err(LinalgError::Internal("Gaussian solution failed verification".into()));
    }
    Ok(Some(sol))
}
