//! Canonical representatives: 0 or 3 real chips on the distinguished node,
//! 0, 1 or 2 on the others, no imaginary chips. There are 2·3⁴ = 162 of them,
//! one per class.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::linalg::{GaussInt, Int};

use super::{neighbors, PentagonConfig, DISTINGUISHED_NODE, NODES};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CanonicalRep(pub [Int; NODES]);

impl CanonicalRep {
    pub const ZERO: CanonicalRep = CanonicalRep([0; NODES]);

    pub fn chips(&self) -> &[Int; NODES] {
        &self.0
    }

    pub fn to_config(self) -> PentagonConfig {
        PentagonConfig::from_real(self.0)
    }

    /// Whether the entries have the canonical shape.
    pub fn is_well_formed(&self) -> bool {
        self.0.iter().enumerate().all(|(k, &c)| {
            if k == DISTINGUISHED_NODE {
                c == 0 || c == 3
            } else {
                (0..3).contains(&c)
            }
        })
    }

    /// Group addition on classes.
    pub fn group_add(self, other: CanonicalRep) -> CanonicalRep {
        canonicalize(&(self.to_config() + other.to_config()))
    }

    /// `k` copies of this class added together.
    pub fn group_scale(self, k: Int) -> CanonicalRep {
        let scaled = self.0.map(|c| c.checked_mul(k).expect("chip count overflow"));
        canonicalize(&PentagonConfig::from_real(scaled))
    }
}

impl fmt::Display for CanonicalRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(Int::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Intermediate states of [`canonicalize`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalTrace {
    /// Real chips once imaginary chips are cleared.
    pub real_only: [Int; NODES],
    /// Parity of the total at that point.
    pub is_even: bool,
    /// After subtracting the distinguished node's count from every node.
    pub shifted: [Int; NODES],
    /// After reducing each node modulo 3.
    pub reduced: [Int; NODES],
    /// Whether three chips were put back on the distinguished node.
    pub added_three: bool,
    pub result: CanonicalRep,
}

fn add(a: Int, b: Int) -> Int {
    a.checked_add(b).expect("chip count overflow")
}

fn sub(a: Int, b: Int) -> Int {
    a.checked_sub(b).expect("chip count overflow")
}

fn is_even_total(chips: &[Int; NODES]) -> bool {
    chips.iter().fold(0, |acc, &c| add(acc, c)).rem_euclid(2) == 0
}

pub fn canonicalize_traced(c: &PentagonConfig) -> CanonicalTrace {
    let psi: [Int; NODES] = c.0.map(|z: GaussInt| z.im);

    // Clearing ψ imaginary chips at k takes ψ (−B) firings there: +ψ real at
    // k, −ψ real at each neighbour.
    let mut real_only = c.0.map(|z| z.re);
    for (k, slot) in real_only.iter_mut().enumerate() {
        let [prev, next] = neighbors(k);
        *slot = sub(sub(add(*slot, psi[k]), psi[next]), psi[prev]);
    }

    let is_even = is_even_total(&real_only);

    let base = real_only[DISTINGUISHED_NODE];
    let shifted = real_only.map(|x| sub(x, base));

    let reduced = shifted.map(|x| x.rem_euclid(3));

    let mut result = reduced;
    let added_three = is_even_total(&reduced) != is_even;
    if added_three {
        result[DISTINGUISHED_NODE] += 3;
    }

    CanonicalTrace { real_only, is_even, shifted, reduced, added_three, result: CanonicalRep(result) }
}

/// The canonical representative of the class of `c`.
pub fn canonicalize(c: &PentagonConfig) -> CanonicalRep {
    canonicalize_traced(c).result
}

/// All 162 representatives in lexicographic order.
pub fn all_representatives() -> Vec<CanonicalRep> {
    let mut out = Vec::with_capacity(162);
    for head in [0, 3] {
        for idx in 0..81 {
            let mut chips = [head, 0, 0, 0, 0];
            let mut rest = idx;
            for slot in chips[1..].iter_mut().rev() {
                *slot = rest % 3;
                rest /= 3;
            }
            out.push(CanonicalRep(chips));
        }
    }
    out
}

/// The unique class of order two.
pub fn order_two_element() -> CanonicalRep {
    let mut chips = [0; NODES];
    chips[DISTINGUISHED_NODE] = 3;
    CanonicalRep(chips)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_example() {
        let c = PentagonConfig::from_pairs([(3, 1), (4, -6), (7, 1), (-8, -8), (3, 0)]);
        let t = canonicalize_traced(&c);
        assert_eq!(t.real_only, [10, -4, 22, -17, 10]);
        assert!(!t.is_even);
        assert_eq!(t.shifted, [0, -14, 12, -27, 0]);
        assert_eq!(t.reduced, [0, 1, 0, 0, 0]);
        assert!(!t.added_three);
        assert_eq!(t.result, CanonicalRep([0, 1, 0, 0, 0]));
    }

    #[test]
    fn zero_and_all_ones() {
        assert_eq!(canonicalize(&PentagonConfig::ZERO), CanonicalRep::ZERO);
        let t = canonicalize_traced(&PentagonConfig::from_real([1; 5]));
        assert!(!t.is_even);
        assert_eq!(t.reduced, [0; 5]);
        assert!(t.added_three);
        assert_eq!(t.result, CanonicalRep([3, 0, 0, 0, 0]));
    }

    #[test]
    fn representatives_listing() {
        let reps = all_representatives();
        assert_eq!(reps.len(), 162);
        assert_eq!(reps[0], CanonicalRep([0, 0, 0, 0, 0]));
        assert_eq!(reps[1], CanonicalRep([0, 0, 0, 0, 1]));
        assert_eq!(reps[161], CanonicalRep([3, 2, 2, 2, 2]));
        assert!(reps.windows(2).all(|w| w[0] < w[1]));
        assert!(reps.iter().all(CanonicalRep::is_well_formed));
    }

    #[test]
    fn order_two() {
        let h = order_two_element();
        assert_eq!(h, CanonicalRep([3, 0, 0, 0, 0]));
        assert_eq!(h.group_add(h), CanonicalRep::ZERO);
        assert_eq!(canonicalize(&PentagonConfig::from_real([6, 0, 0, 0, 0])), CanonicalRep::ZERO);
    }

    #[test]
    fn negative_remainders_are_nonnegative() {
        let r = canonicalize(&PentagonConfig::from_real([0, -1, -2, -4, -5]));
        assert!(r.is_well_formed());
        assert_eq!(&r.0[1..], &[2, 1, 2, 1]);
    }
}
