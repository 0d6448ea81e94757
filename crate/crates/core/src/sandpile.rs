//! Sandpile groups of regular matroids and firing equivalence of integer
//! chip configurations.
//!
//! The sandpile group is the cokernel of `K = [I D; Dᵗ −I]`. Two configurations
//! are firing equivalent exactly when their difference lies in the integer
//! image of `K`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::linalg::{det, smith_normal_form, Int, IntMatrix, IntSolver, LinalgError};
use crate::matroid::RegularMatroid;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SandpileError {
    #[error("configuration has {got} entries, the ground set has {expected}")]
    Length { expected: usize, got: usize },
    #[error("inconsistent group computation: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A chip count for each element of the ground set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ChipConfigZ(pub Vec<Int>);

impl ChipConfigZ {
    pub fn zero(n: usize) -> Self {
        ChipConfigZ(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Int] {
        &self.0
    }
}

impl From<Vec<Int>> for ChipConfigZ {
    fn from(v: Vec<Int>) -> Self {
        ChipConfigZ(v)
    }
}

/// A finite abelian group `Z/a₁ ⊕ … ⊕ Z/a_k` with `1 < a₁ | a₂ | … | a_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SandpileGroup {
    pub invariant_factors: Vec<Int>,
    pub order: Int,
}

impl SandpileGroup {
    /// Builds the group from a Smith diagonal, dropping unit factors.
    pub fn from_smith_diagonal(diagonal: &[Int]) -> Result<Self, SandpileError> {
        if diagonal.contains(&0) {
            return Err(SandpileError::Inconsistent("cokernel is infinite".into()));
        }
        let invariant_factors: Vec<Int> = diagonal.iter().copied().filter(|&d| d != 1).collect();
        let order = invariant_factors
            .iter()
            .try_fold(1 as Int, |acc, &d| acc.checked_mul(d))
            .ok_or(LinalgError::Overflow("group order"))?;
        Ok(SandpileGroup { invariant_factors, order })
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }
}

impl fmt::Display for SandpileGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.invariant_factors.iter().map(|a| format!("Z/{a}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// The sandpile group of `m`: the nontrivial Smith invariants of `K`.
pub fn sandpile_group(m: &RegularMatroid) -> Result<SandpileGroup, SandpileError> {
    let k = m.combined_k();
    let snf = smith_normal_form(&k)?;
    let group = SandpileGroup::from_smith_diagonal(&snf.diagonal())?;
    let d = det(&k)?.abs();
    if d != group.order {
        return Err(SandpileError::Inconsistent(format!(
            "|det K| = {d} but Smith invariants give order {}",
            group.order
        )));
    }
    Ok(group)
}

/// Decides whether `c1` and `c2` are firing equivalent on `m`.
///
/// On success returns a witness `y` with `K·y = c1 − c2`; `None` means the
/// configurations are in different classes.
pub fn firing_equivalent(
    m: &RegularMatroid,
    c1: &ChipConfigZ,
    c2: &ChipConfigZ,
) -> Result<Option<Vec<Int>>, SandpileError> {
    FiringSolver::new(m)?.equivalent(c1, c2)
}

/// Firing-equivalence tests against a fixed matroid, factoring `K` once.
#[derive(Clone, Debug)]
pub struct FiringSolver {
    solver: IntSolver,
}

impl FiringSolver {
    pub fn new(m: &RegularMatroid) -> Result<Self, SandpileError> {
        Ok(FiringSolver { solver: IntSolver::new(&m.combined_k())? })
    }

    pub fn k(&self) -> &IntMatrix {
        self.solver.matrix()
    }

    pub fn equivalent(&self, c1: &ChipConfigZ, c2: &ChipConfigZ) -> Result<Option<Vec<Int>>, SandpileError> {
        let n = self.k().rows();
        for c in [c1, c2] {
            if c.len() != n {
                return Err(SandpileError::Length { expected: n, got: c.len() });
            }
        }
        let diff =
            c1.0.iter()
                .zip(&c2.0)
                .map(|(a, b)| a.checked_sub(*b).ok_or(LinalgError::Overflow("configuration difference")))
                .collect::<Result<Vec<_>, _>>()?;
        let Some(y) = self.solver.solve(&diff)? else {
            return Ok(None);
        };
        if self.k().mul_vec(&y)? != diff {
            return Err(SandpileError::Inconsistent("witness does not reproduce the difference".into()));
        }
        Ok(Some(y))
    }
}

/// The three-element matroid represented by `[[1, 0, −1], [0, 1, −1]]`.
pub fn example_matroid() -> RegularMatroid {
    RegularMatroid::new_unchecked(IntMatrix::from_rows(&[[-1], [-1]]).expect("static shape"))
        .expect("static shape")
}

/// Reduces a configuration on [`example_matroid`] to `(t, 0, 0)` with
/// `t ∈ {0, 1, 2}` by explicit firings:
///
/// 1. fire `(−1, −1, −1)` `⌊(a+b+c)/3⌋` times;
/// 2. add `(0, 1, −1)` until the second entry is zero;
/// 3. add `(1, 0, −1)` until the third entry is zero.
pub fn reduce_example_matroid(c: &ChipConfigZ) -> Result<ChipConfigZ, SandpileError> {
    let [a, b, cc]: [Int; 3] =
        c.as_slice().try_into().map_err(|_| SandpileError::Length { expected: 3, got: c.len() })?;
    let overflow = || SandpileError::Linalg(LinalgError::Overflow("example reduction"));

    let total = a.checked_add(b).and_then(|s| s.checked_add(cc)).ok_or_else(overflow)?;
    let fires = total.div_euclid(3);
    let sub = |x: Int| x.checked_sub(fires).ok_or_else(overflow);
    let (a, b, cc) = (sub(a)?, sub(b)?, sub(cc)?);

    // (0, 1, −1) applied −b times
    let (b, cc) = (0, cc.checked_add(b).ok_or_else(overflow)?);
    debug_assert_eq!(b, 0);

    // (1, 0, −1) applied cc times
    let (a, cc) = (a.checked_add(cc).ok_or_else(overflow)?, 0);

    Ok(ChipConfigZ(vec![a, b, cc]))
}
