//! Independent reference computations for the integration tests.
//!
//! Nothing here calls into the crate's linear algebra: determinants and
//! solutions use rational Gaussian elimination, invariant factors come from
//! gcds of minors.

#![allow(dead_code, clippy::needless_range_loop)]

use itertools::Itertools;
use num_integer::Integer;
use num_rational::Ratio;
use proptest::prelude::*;

use chipfire::linalg::GaussInt;
use chipfire::r10::PentagonConfig;

pub type Q = Ratio<i128>;

/// Row 0 of the pentagon block, rotated for the other rows.
pub const D_LITERAL: [[i128; 5]; 5] =
    [[1, -1, 0, 0, -1], [-1, 1, -1, 0, 0], [0, -1, 1, -1, 0], [0, 0, -1, 1, -1], [-1, 0, 0, -1, 1]];

pub const K_LITERAL: [[i128; 10]; 10] = [
    [1, 0, 0, 0, 0, 1, -1, 0, 0, -1],
    [0, 1, 0, 0, 0, -1, 1, -1, 0, 0],
    [0, 0, 1, 0, 0, 0, -1, 1, -1, 0],
    [0, 0, 0, 1, 0, 0, 0, -1, 1, -1],
    [0, 0, 0, 0, 1, -1, 0, 0, -1, 1],
    [1, -1, 0, 0, -1, -1, 0, 0, 0, 0],
    [-1, 1, -1, 0, 0, 0, -1, 0, 0, 0],
    [0, -1, 1, -1, 0, 0, 0, -1, 0, 0],
    [0, 0, -1, 1, -1, 0, 0, 0, -1, 0],
    [-1, 0, 0, -1, 1, 0, 0, 0, 0, -1],
];

pub fn to_rows<const N: usize>(m: &[[i128; N]]) -> Vec<Vec<i128>> {
    m.iter().map(|r| r.to_vec()).collect()
}

pub fn rational_det(m: &[Vec<i128>]) -> Q {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m.iter().map(|r| r.iter().map(|&x| Q::from_integer(x)).collect()).collect();
    let mut det = Q::from_integer(1);
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| a[r][col] != Q::from_integer(0)) else {
            return Q::from_integer(0);
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        det *= a[col][col];
        for r in col + 1..n {
            let f = a[r][col] / a[col][col];
            for c in col..n {
                let t = a[col][c];
                a[r][c] -= f * t;
            }
        }
    }
    det
}

fn int_det(m: &[Vec<i128>]) -> i128 {
    let d = rational_det(m);
    assert!(d.is_integer());
    d.to_integer()
}

/// Invariant factors `d_k / d_{k-1}` where `d_k` is the gcd of all k×k minors.
/// Length is `min(rows, cols)`; trailing zeros mark rank deficiency.
pub fn invariant_factors(m: &[Vec<i128>]) -> Vec<i128> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut out = Vec::new();
    let mut prev = 1i128;
    for k in 1..=rows.min(cols) {
        let mut g = 0i128;
        for rs in (0..rows).combinations(k) {
            for cs in (0..cols).combinations(k) {
                let minor: Vec<Vec<i128>> =
                    rs.iter().map(|&r| cs.iter().map(|&c| m[r][c]).collect()).collect();
                g = g.gcd(&int_det(&minor));
            }
        }
        if g == 0 {
            out.extend(std::iter::repeat_n(0, rows.min(cols) - out.len()));
            break;
        }
        out.push(g / prev);
        prev = g;
    }
    out
}

/// Unique rational solution of a nonsingular square system.
pub fn rational_solve(m: &[Vec<i128>], b: &[i128]) -> Option<Vec<Q>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .zip(b)
        .map(|(r, &bi)| r.iter().chain(std::iter::once(&bi)).map(|&x| Q::from_integer(x)).collect())
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| a[r][col] != Q::from_integer(0))?;
        a.swap(p, col);
        let piv = a[col][col];
        for c in col..=n {
            a[col][c] /= piv;
        }
        for r in 0..n {
            if r != col && a[r][col] != Q::from_integer(0) {
                let f = a[r][col];
                for c in col..=n {
                    let t = a[col][c];
                    a[r][c] -= f * t;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n]).collect())
}

/// Whether `M·x = b` has an integer solution, for nonsingular `M`.
pub fn integer_solvable(m: &[Vec<i128>], b: &[i128]) -> bool {
    rational_solve(m, b).expect("nonsingular").iter().all(|q| q.is_integer())
}

/// Element of `Q(i)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Cq {
    pub re: Q,
    pub im: Q,
}

impl Cq {
    pub fn int(re: i128, im: i128) -> Self {
        Cq { re: Q::from_integer(re), im: Q::from_integer(im) }
    }
    fn is_zero(&self) -> bool {
        self.re == Q::from_integer(0) && self.im == Q::from_integer(0)
    }
    fn mul(self, o: Cq) -> Cq {
        Cq { re: self.re * o.re - self.im * o.im, im: self.re * o.im + self.im * o.re }
    }
    fn sub(self, o: Cq) -> Cq {
        Cq { re: self.re - o.re, im: self.im - o.im }
    }
    fn inv(self) -> Cq {
        let n = self.re * self.re + self.im * self.im;
        Cq { re: self.re / n, im: -self.im / n }
    }
    pub fn is_gaussian_integer(&self) -> bool {
        self.re.is_integer() && self.im.is_integer()
    }
    pub fn to_gauss(self) -> GaussInt {
        GaussInt::new(self.re.to_integer(), self.im.to_integer())
    }
}

/// Solution over `Q(i)` of a nonsingular square system.
pub fn complex_solve(m: &[Vec<Cq>], b: &[Cq]) -> Option<Vec<Cq>> {
    let n = m.len();
    let mut a: Vec<Vec<Cq>> =
        m.iter().zip(b).map(|(r, &bi)| r.iter().copied().chain(std::iter::once(bi)).collect()).collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(p, col);
        let inv = a[col][col].inv();
        for c in col..=n {
            a[col][c] = a[col][c].mul(inv);
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for c in col..=n {
                    let t = a[col][c];
                    a[r][c] = a[r][c].sub(f.mul(t));
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n]).collect())
}

/// `I + D·i` built from the literal pentagon block.
pub fn kbar_literal() -> Vec<Vec<Cq>> {
    (0..5).map(|i| (0..5).map(|j| Cq::int((i == j) as i128, D_LITERAL[i][j])).collect()).collect()
}

/// Firing equivalence on the pentagon decided over `Q(i)`: `b − a` must have
/// a Gaussian-integer preimage.
pub fn pentagon_equivalent(a: &PentagonConfig, b: &PentagonConfig) -> bool {
    let diff: Vec<Cq> = (0..5).map(|k| Cq::int(b.0[k].re - a.0[k].re, b.0[k].im - a.0[k].im)).collect();
    complex_solve(&kbar_literal(), &diff).unwrap().iter().all(Cq::is_gaussian_integer)
}

pub fn config_strategy(bound: i128) -> impl Strategy<Value = PentagonConfig> {
    proptest::array::uniform5((-bound..=bound, -bound..=bound))
        .prop_map(|pairs| PentagonConfig(pairs.map(|(re, im)| GaussInt::new(re, im))))
}

pub fn matrix_strategy(max_dim: usize, bound: i128) -> impl Strategy<Value = Vec<Vec<i128>>> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(proptest::collection::vec(-bound..=bound, c), r)
    })
}

pub fn square_strategy(max_dim: usize, bound: i128) -> impl Strategy<Value = Vec<Vec<i128>>> {
    (1..=max_dim)
        .prop_flat_map(move |n| proptest::collection::vec(proptest::collection::vec(-bound..=bound, n), n))
}
