use std::sync::OnceLock;

use crate::linalg::{GaussInt, GaussMatrix, IntMatrix, LinalgError};
use crate::matroid::RegularMatroid;

use super::{Certificate, PentagonConfig, R10Error, NODES};

/// `𝒟`: 1 on the diagonal, −1 between cyclic neighbours.
pub fn reduced_matrix() -> IntMatrix {
    IntMatrix::from_rows(&[
        [1, -1, 0, 0, -1],
        [-1, 1, -1, 0, 0],
        [0, -1, 1, -1, 0],
        [0, 0, -1, 1, -1],
        [-1, 0, 0, -1, 1],
    ])
    .expect("static shape")
}

/// R10 as the regular matroid represented by `[I₅ | 𝒟]`.
pub fn r10_matroid() -> RegularMatroid {
    RegularMatroid::new_unchecked(reduced_matrix()).expect("static shape")
}

/// The fixed matrices of the R10 model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct R10Constants {
    /// `[I₅ | 𝒟]`, 5×10.
    pub a_matrix: IntMatrix,
    /// `[I₅ 𝒟; 𝒟 −I₅]`, 10×10.
    pub k_matrix: IntMatrix,
    /// `K̄ = I₅ + 𝒟i`.
    pub kbar: GaussMatrix,
    /// `6·K̄⁻¹`, the circulant with first row `(3−i, 1+i, −1+i, −1+i, 1+i)`.
    pub kbar_inv_times6: GaussMatrix,
}

impl R10Constants {
    pub fn build() -> Self {
        let m = r10_matroid();
        let d = reduced_matrix();
        let kbar = GaussMatrix::from_parts(&IntMatrix::identity(NODES), &d).expect("same shape");
        let g = GaussInt::new;
        let kbar_inv_times6 = GaussMatrix::from_rows(&[
            [g(3, -1), g(1, 1), g(-1, 1), g(-1, 1), g(1, 1)],
            [g(1, 1), g(3, -1), g(1, 1), g(-1, 1), g(-1, 1)],
            [g(-1, 1), g(1, 1), g(3, -1), g(1, 1), g(-1, 1)],
            [g(-1, 1), g(-1, 1), g(1, 1), g(3, -1), g(1, 1)],
            [g(1, 1), g(-1, 1), g(-1, 1), g(1, 1), g(3, -1)],
        ])
        .expect("static shape");
        R10Constants { a_matrix: m.matrix(), k_matrix: m.combined_k(), kbar, kbar_inv_times6 }
    }

    /// `K̄ · (6K̄⁻¹) = 6I`.
    pub fn inverse_identity_holds(&self) -> bool {
        let six = GaussMatrix::identity(NODES).checked_scale(GaussInt::real(6));
        match (self.kbar.checked_mul(&self.kbar_inv_times6), six) {
            (Ok(p), Ok(six)) => p == six,
            _ => false,
        }
    }

    /// Computes `x = K̄⁻¹(to − from)` through the stored `6K̄⁻¹`. `None` when
    /// some coordinate is not divisible by 6, i.e. the configurations are
    /// inequivalent.
    pub fn solve_firings(
        &self,
        from: &PentagonConfig,
        to: &PentagonConfig,
    ) -> Result<Option<Certificate>, R10Error> {
        let diff = to.checked_sub(from).ok_or(R10Error::Overflow("configuration difference"))?;
        let scaled = self.kbar_inv_times6.mul_vec(&diff.0).map_err(overflow)?;
        let mut x = [GaussInt::ZERO; NODES];
        for (slot, z) in x.iter_mut().zip(scaled) {
            match z.div_exact(6) {
                Some(q) => *slot = q,
                None => return Ok(None),
            }
        }
        let back = self.kbar.mul_vec(&x).map_err(overflow)?;
        if back != diff.0 {
            return Err(R10Error::CertificateMismatch);
        }
        Ok(Some(Certificate(x)))
    }
}

fn overflow(e: LinalgError) -> R10Error {
    match e {
        LinalgError::Overflow(ctx) => R10Error::Overflow(ctx),
        other => panic!("unexpected linear algebra failure: {other}"),
    }
}

/// Process-wide constants, checked once on first use.
pub fn r10_constants() -> &'static R10Constants {
    static CONSTANTS: OnceLock<R10Constants> = OnceLock::new();
    CONSTANTS.get_or_init(|| {
        let c = R10Constants::build();
        assert!(c.inverse_identity_holds(), "stored 6·K̄⁻¹ is not the inverse of K̄");
        c
    })
}
