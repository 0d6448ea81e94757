//! Gaussian integers `a + bi` with `a, b` exact integers.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Int;

/// An element of `Z[i]`.
///
/// The operator impls panic on overflow; use the `checked_*` methods when the
/// operands are untrusted.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct GaussInt {
    pub re: Int,
    pub im: Int,
}

impl GaussInt {
    pub const ZERO: GaussInt = GaussInt { re: 0, im: 0 };
    pub const ONE: GaussInt = GaussInt { re: 1, im: 0 };
    pub const I: GaussInt = GaussInt { re: 0, im: 1 };

    pub const fn new(re: Int, im: Int) -> Self {
        GaussInt { re, im }
    }

    pub const fn real(re: Int) -> Self {
        GaussInt { re, im: 0 }
    }

    pub fn is_zero(self) -> bool {
        self.re == 0 && self.im == 0
    }

    pub fn conj(self) -> Self {
        GaussInt::new(self.re, -self.im)
    }

    /// `re² + im²`.
    pub fn norm(self) -> Int {
        self.checked_norm().expect("Gaussian integer norm overflow")
    }

    pub fn checked_norm(self) -> Option<Int> {
        self.re.checked_mul(self.re)?.checked_add(self.im.checked_mul(self.im)?)
    }

    pub fn checked_add(self, rhs: Self) -> Option<Self> {
        Some(GaussInt::new(self.re.checked_add(rhs.re)?, self.im.checked_add(rhs.im)?))
    }

    pub fn checked_sub(self, rhs: Self) -> Option<Self> {
        Some(GaussInt::new(self.re.checked_sub(rhs.re)?, self.im.checked_sub(rhs.im)?))
    }

    pub fn checked_mul(self, rhs: Self) -> Option<Self> {
        let ac = self.re.checked_mul(rhs.re)?;
        let bd = self.im.checked_mul(rhs.im)?;
        let ad = self.re.checked_mul(rhs.im)?;
        let bc = self.im.checked_mul(rhs.re)?;
        Some(GaussInt::new(ac.checked_sub(bd)?, ad.checked_add(bc)?))
    }

    pub fn checked_neg(self) -> Option<Self> {
        Some(GaussInt::new(self.re.checked_neg()?, self.im.checked_neg()?))
    }

    pub fn checked_scale(self, k: Int) -> Option<Self> {
        Some(GaussInt::new(self.re.checked_mul(k)?, self.im.checked_mul(k)?))
    }

    /// Divides both parts by a rational integer, if both are divisible.
    pub fn div_exact(self, k: Int) -> Option<Self> {
        if k == 0 || self.re % k != 0 || self.im % k != 0 {
            return None;
        }
        Some(GaussInt::new(self.re / k, self.im / k))
    }
}

impl From<Int> for GaussInt {
    fn from(re: Int) -> Self {
        GaussInt::real(re)
    }
}

impl Add for GaussInt {
    type Output = GaussInt;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(rhs).expect("Gaussian integer overflow in add")
    }
}

impl Sub for GaussInt {
    type Output = GaussInt;
    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(rhs).expect("Gaussian integer overflow in sub")
    }
}

impl Mul for GaussInt {
    type Output = GaussInt;
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(rhs).expect("Gaussian integer overflow in mul")
    }
}

impl Neg for GaussInt {
    type Output = GaussInt;
    fn neg(self) -> Self {
        self.checked_neg().expect("Gaussian integer overflow in neg")
    }
}

impl AddAssign for GaussInt {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl SubAssign for GaussInt {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl fmt::Display for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = (self.re, self.im);
        if im == 0 {
            return write!(f, "{re}");
        }
        let imag = match im {
            1 => "i".to_string(),
            -1 => "-i".to_string(),
            _ => format!("{im}i"),
        };
        if re == 0 {
            f.write_str(&imag)
        } else if im > 0 {
            write!(f, "{re}+{imag}")
        } else {
            write!(f, "{re}{imag}")
        }
    }
}

// Wire form: a two-element array `[re, im]`.

impl Serialize for GaussInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        [self.re, self.im].serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GaussInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let [re, im] = <[Int; 2]>::deserialize(deserializer)?;
        Ok(GaussInt::new(re, im))
    }
}
