use super::scalar::{self, sub_mul};
use super::{Int, IntMatrix, LinalgError};

/// Exact determinant by Bareiss fraction-free elimination.
///
/// Every division in the elimination is exact, so intermediate entries stay
/// bounded by minors of the input.
pub fn det(m: &IntMatrix) -> Result<Int, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::Dimension(format!("determinant of a {}x{} matrix", m.rows(), m.cols())));
    }
    let n = m.rows();
    if n == 0 {
        return Ok(1);
    }
    let mut a = m.clone();
    let mut sign: Int = 1;
    let mut prev: Int = 1;
    for k in 0..n - 1 {
        if a[(k, k)] == 0 {
            match (k + 1..n).find(|&i| a[(i, k)] != 0) {
                Some(i) => {
                    a.swap_rows(k, i);
                    sign = -sign;
                }
                None => return Ok(0),
            }
        }
        let pivot = a[(k, k)];
        for i in k + 1..n {
            for j in k + 1..n {
                let t = scalar::mul(a[(i, j)], pivot, "bareiss")?;
                let t = sub_mul(t, a[(i, k)], a[(k, j)], "bareiss")?;
                debug_assert_eq!(t % prev, 0);
                a[(i, j)] = t / prev;
            }
            a[(i, k)] = 0;
        }
        prev = pivot;
    }
    scalar::mul(sign, a[(n - 1, n - 1)], "bareiss")
}
