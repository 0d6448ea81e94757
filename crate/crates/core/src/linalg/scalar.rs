//! Scalar rings used by the matrix code.
//!
//! Entries are stored in fixed-width `i128`. Every arithmetic step in the
//! linear-algebra routines goes through the checked methods of [`Scalar`], so
//! intermediate swell surfaces as [`LinalgError::Overflow`] instead of wrapping.

use super::{GaussInt, LinalgError};

/// Exact integer scalar. All matrices in this crate are at most a few dozen
/// entries across, so 128 bits leaves a wide margin; overflow is still checked.
pub type Int = i128;

/// A commutative ring with checked arithmetic.
pub trait Scalar: Copy + Eq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn checked_add(self, rhs: Self) -> Option<Self>;
    fn checked_sub(self, rhs: Self) -> Option<Self>;
    fn checked_mul(self, rhs: Self) -> Option<Self>;
    fn checked_neg(self) -> Option<Self>;

    fn is_zero(self) -> bool {
        self == Self::zero()
    }
}

impl Scalar for Int {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn checked_add(self, rhs: Self) -> Option<Self> {
        i128::checked_add(self, rhs)
    }
    fn checked_sub(self, rhs: Self) -> Option<Self> {
        i128::checked_sub(self, rhs)
    }
    fn checked_mul(self, rhs: Self) -> Option<Self> {
        i128::checked_mul(self, rhs)
    }
    fn checked_neg(self) -> Option<Self> {
        i128::checked_neg(self)
    }
}

impl Scalar for GaussInt {
    fn zero() -> Self {
        GaussInt::ZERO
    }
    fn one() -> Self {
        GaussInt::ONE
    }
    fn checked_add(self, rhs: Self) -> Option<Self> {
        GaussInt::checked_add(self, rhs)
    }
    fn checked_sub(self, rhs: Self) -> Option<Self> {
        GaussInt::checked_sub(self, rhs)
    }
    fn checked_mul(self, rhs: Self) -> Option<Self> {
        GaussInt::checked_mul(self, rhs)
    }
    fn checked_neg(self) -> Option<Self> {
        GaussInt::checked_neg(self)
    }
}

// Result-returning shorthands for the elimination loops.

pub(crate) fn add<T: Scalar>(a: T, b: T, ctx: &'static str) -> Result<T, LinalgError> {
    a.checked_add(b).ok_or(LinalgError::Overflow(ctx))
}

pub(crate) fn sub<T: Scalar>(a: T, b: T, ctx: &'static str) -> Result<T, LinalgError> {
    a.checked_sub(b).ok_or(LinalgError::Overflow(ctx))
}

pub(crate) fn mul<T: Scalar>(a: T, b: T, ctx: &'static str) -> Result<T, LinalgError> {
    a.checked_mul(b).ok_or(LinalgError::Overflow(ctx))
}

pub(crate) fn neg<T: Scalar>(a: T, ctx: &'static str) -> Result<T, LinalgError> {
    a.checked_neg().ok_or(LinalgError::Overflow(ctx))
}

/// `a - q * b`, checked.
pub(crate) fn sub_mul<T: Scalar>(a: T, q: T, b: T, ctx: &'static str) -> Result<T, LinalgError> {
    sub(a, mul(q, b, ctx)?, ctx)
}
