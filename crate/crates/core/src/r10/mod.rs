//! Chip-firing on the matroid R10, modelled as Gaussian-integer chips on the
//! five nodes of a pentagon.
//!
//! Node `k` holds `re` real and `im` imaginary chips; its neighbours are
//! `k ± 1 (mod 5)`. A firing at `k` adds a unit multiple (`1`, `i`, `−1`, `−i`)
//! of column `k` of `K̄ = I + 𝒟i`. Node 0 is the distinguished node of the
//! canonical representatives.

mod canonical;
mod constants;
mod recipes;

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::linalg::{GaussInt, Int};

pub use canonical::{
    all_representatives, canonicalize, canonicalize_traced, order_two_element, CanonicalRep, CanonicalTrace,
};
pub use constants::{r10_constants, r10_matroid, reduced_matrix, R10Constants};
pub use recipes::{recipe_add_six, recipe_add_two_everywhere};

pub const NODES: usize = 5;
pub const DISTINGUISHED_NODE: usize = 0;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum R10Error {
    #[error("node index {0} is out of range 0..5")]
    InvalidNode(usize),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("certificate does not reproduce the configuration difference")]
    CertificateMismatch,
}

/// The two neighbours of node `k`.
pub fn neighbors(k: usize) -> [usize; 2] {
    [(k + NODES - 1) % NODES, (k + 1) % NODES]
}

/// A chip configuration on the pentagon.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PentagonConfig(pub [GaussInt; NODES]);

impl PentagonConfig {
    pub const ZERO: PentagonConfig = PentagonConfig([GaussInt::ZERO; NODES]);

    pub fn from_real(chips: [Int; NODES]) -> Self {
        PentagonConfig(chips.map(GaussInt::real))
    }

    pub fn from_pairs(pairs: [(Int, Int); NODES]) -> Self {
        PentagonConfig(pairs.map(|(re, im)| GaussInt::new(re, im)))
    }

    pub fn nodes(&self) -> &[GaussInt; NODES] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|z| z.is_zero())
    }

    pub fn has_imaginary_chips(&self) -> bool {
        self.0.iter().any(|z| z.im != 0)
    }

    /// Sum of all real and imaginary chip counts.
    pub fn total_chips(&self) -> Int {
        self.0.iter().fold(0, |acc: Int, z| {
            acc.checked_add(z.re).and_then(|s| s.checked_add(z.im)).expect("chip total overflow")
        })
    }

    pub fn apply(&self, m: FiringMove) -> Self {
        apply_firing(self, m)
    }

    pub fn checked_add(&self, rhs: &Self) -> Option<Self> {
        let mut out = [GaussInt::ZERO; NODES];
        for (o, (a, b)) in out.iter_mut().zip(self.0.iter().zip(&rhs.0)) {
            *o = a.checked_add(*b)?;
        }
        Some(PentagonConfig(out))
    }

    pub fn checked_sub(&self, rhs: &Self) -> Option<Self> {
        let mut out = [GaussInt::ZERO; NODES];
        for (o, (a, b)) in out.iter_mut().zip(self.0.iter().zip(&rhs.0)) {
            *o = a.checked_sub(*b)?;
        }
        Some(PentagonConfig(out))
    }
}

impl Add for PentagonConfig {
    type Output = PentagonConfig;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(&rhs).expect("chip count overflow")
    }
}

impl Sub for PentagonConfig {
    type Output = PentagonConfig;
    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(&rhs).expect("chip count overflow")
    }
}

impl Neg for PentagonConfig {
    type Output = PentagonConfig;
    fn neg(self) -> Self {
        PentagonConfig(self.0.map(|z| -z))
    }
}

impl fmt::Display for PentagonConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|z| z.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// The four firing kinds. Each is a unit multiple of the A firing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MoveKind {
    A,
    B,
    NegA,
    NegB,
}

impl MoveKind {
    pub const ALL: [MoveKind; 4] = [MoveKind::A, MoveKind::B, MoveKind::NegA, MoveKind::NegB];

    /// The unit `u` with `delta(kind, k) = u · K̄·e_k`.
    pub fn unit(self) -> GaussInt {
        match self {
            MoveKind::A => GaussInt::ONE,
            MoveKind::B => GaussInt::I,
            MoveKind::NegA => GaussInt::new(-1, 0),
            MoveKind::NegB => GaussInt::new(0, -1),
        }
    }

    pub fn inverse(self) -> MoveKind {
        match self {
            MoveKind::A => MoveKind::NegA,
            MoveKind::B => MoveKind::NegB,
            MoveKind::NegA => MoveKind::A,
            MoveKind::NegB => MoveKind::B,
        }
    }

    /// A → B → −A → −B → A.
    pub fn next(self) -> MoveKind {
        match self {
            MoveKind::A => MoveKind::B,
            MoveKind::B => MoveKind::NegA,
            MoveKind::NegA => MoveKind::NegB,
            MoveKind::NegB => MoveKind::A,
        }
    }
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MoveKind::A => "A",
            MoveKind::B => "B",
            MoveKind::NegA => "-A",
            MoveKind::NegB => "-B",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FiringMove {
    pub node: usize,
    pub kind: MoveKind,
}

impl FiringMove {
    pub fn new(node: usize, kind: MoveKind) -> Result<Self, R10Error> {
        if node >= NODES {
            return Err(R10Error::InvalidNode(node));
        }
        Ok(FiringMove { node, kind })
    }

    /// All 20 moves, node-major.
    pub fn all() -> impl Iterator<Item = FiringMove> {
        (0..NODES).flat_map(|node| MoveKind::ALL.into_iter().map(move |kind| FiringMove { node, kind }))
    }

    pub fn inverse(self) -> FiringMove {
        FiringMove { node: self.node, kind: self.kind.inverse() }
    }

    /// The change this move makes: `u(1+i)` at the node, `u(−i)` at each
    /// neighbour.
    pub fn delta(self) -> PentagonConfig {
        assert!(self.node < NODES, "node index {} out of range", self.node);
        let u = self.kind.unit();
        let mut out = PentagonConfig::ZERO;
        out.0[self.node] = u * GaussInt::new(1, 1);
        for nb in neighbors(self.node) {
            out.0[nb] = u * GaussInt::new(0, -1);
        }
        out
    }
}

impl fmt::Display for FiringMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.kind, self.node)
    }
}

pub fn apply_firing(c: &PentagonConfig, m: FiringMove) -> PentagonConfig {
    *c + m.delta()
}

pub fn apply_all(c: &PentagonConfig, moves: &[FiringMove]) -> PentagonConfig {
    moves.iter().fold(*c, |acc, &m| apply_firing(&acc, m))
}

pub fn total_chips(c: &PentagonConfig) -> Int {
    c.total_chips()
}

/// Net firing counts taking one configuration to another: `re(x_k)` A firings
/// and `im(x_k)` B firings at node `k`, negative counts meaning the inverse
/// move. Satisfies `K̄·x = to − from`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Certificate(pub [GaussInt; NODES]);

impl Certificate {
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|z| z.is_zero())
    }

    /// Per-node firing counts as `(move, count)` pairs with positive counts.
    pub fn firings(&self) -> Vec<(FiringMove, Int)> {
        let mut out = Vec::new();
        for (node, x) in self.0.iter().enumerate() {
            let a = if x.re >= 0 { MoveKind::A } else { MoveKind::NegA };
            let b = if x.im >= 0 { MoveKind::B } else { MoveKind::NegB };
            if x.re != 0 {
                out.push((FiringMove { node, kind: a }, x.re.abs()));
            }
            if x.im != 0 {
                out.push((FiringMove { node, kind: b }, x.im.abs()));
            }
        }
        out
    }

    /// Total number of single firings the certificate stands for.
    pub fn move_count(&self) -> Int {
        self.0.iter().map(|z| z.re.abs() + z.im.abs()).sum()
    }

    /// Applies the certified firings to `c`.
    pub fn apply_to(&self, c: &PentagonConfig) -> PentagonConfig {
        let kbar = &r10_constants().kbar;
        let delta = kbar.mul_vec(&self.0).expect("certificate overflow");
        *c + PentagonConfig(delta.try_into().expect("five entries"))
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        PentagonConfig(self.0).fmt(f)
    }
}

/// Finds the firings taking `from` to `to`, or `None` if the two are not
/// firing equivalent.
pub fn solve_firings(from: &PentagonConfig, to: &PentagonConfig) -> Option<Certificate> {
    r10_constants().solve_firings(from, to).expect("solve with verified constants")
}
