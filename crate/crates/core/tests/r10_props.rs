#![allow(clippy::needless_range_loop)]

mod common;

use chipfire::linalg::{gauss_solve_via_real, realify, GaussInt, IntSolver};
use chipfire::r10::{
    all_representatives, apply_all, canonicalize, r10_constants, recipe_add_six, recipe_add_two_everywhere,
    solve_firings, total_chips, CanonicalRep, Certificate, FiringMove, MoveKind, PentagonConfig,
};
use common::*;
use proptest::prelude::*;

#[test]
fn kbar_matches_literal_and_realifies_to_k() {
    let c = r10_constants();
    for i in 0..5 {
        for j in 0..5 {
            assert_eq!(c.kbar[(i, j)], GaussInt::new((i == j) as i128, D_LITERAL[i][j]));
        }
    }
    // P + Qi acts on (re, im) as [[P, -Q], [Q, P]]
    let r = realify(&c.kbar).unwrap().to_rows();
    for i in 0..5 {
        for j in 0..5 {
            let id = (i == j) as i128;
            assert_eq!(r[i][j], id);
            assert_eq!(r[i][j + 5], -D_LITERAL[i][j]);
            assert_eq!(r[i + 5][j], D_LITERAL[i][j]);
            assert_eq!(r[i + 5][j + 5], id);
        }
    }
}

#[test]
fn stored_inverse_matches_oracle() {
    let kbar = kbar_literal();
    for col in 0..5 {
        let e: Vec<Cq> = (0..5).map(|k| Cq::int((k == col) as i128 * 6, 0)).collect();
        let x = complex_solve(&kbar, &e).unwrap();
        for row in 0..5 {
            assert!(x[row].is_gaussian_integer());
            assert_eq!(r10_constants().kbar_inv_times6[(row, col)], x[row].to_gauss());
        }
    }
}

#[test]
fn representatives_agree_with_oracle() {
    let reps = all_representatives();
    assert_eq!(reps.len(), 162);
    let zero = PentagonConfig::ZERO;
    // distinct classes: no two differ by something with an integral preimage
    for (i, a) in reps.iter().enumerate() {
        assert!(a.is_well_formed());
        for b in &reps[i + 1..] {
            assert!(!pentagon_equivalent(&a.to_config(), &b.to_config()), "{a} ~ {b}");
        }
        assert_eq!(pentagon_equivalent(&a.to_config(), &zero), *a == CanonicalRep::ZERO);
    }
}

#[test]
fn group_exponent_is_six() {
    let reps = all_representatives();
    let mut order_two = 0;
    for r in &reps {
        assert_eq!(r.group_scale(6), CanonicalRep::ZERO);
        if *r != CanonicalRep::ZERO && r.group_scale(2) == CanonicalRep::ZERO {
            order_two += 1;
        }
    }
    assert_eq!(order_two, 1);
    // closure and commutativity
    for a in reps.iter().step_by(7) {
        for b in reps.iter().step_by(11) {
            let s = a.group_add(*b);
            assert!(reps.contains(&s));
            assert_eq!(s, b.group_add(*a));
        }
    }
}

#[test]
fn single_move_certificates_are_units() {
    for m in FiringMove::all() {
        let x = solve_firings(&m.delta(), &PentagonConfig::ZERO).unwrap();
        let nonzero: Vec<_> = x.0.iter().filter(|z| !z.is_zero()).collect();
        assert_eq!(nonzero.len(), 1);
        assert_eq!(nonzero[0].norm(), 1);
        assert_eq!(*nonzero[0], -m.kind.unit());
    }
}

#[test]
fn lemma_values() {
    let ones = PentagonConfig::from_real([1; 5]);
    assert_eq!(canonicalize(&ones), CanonicalRep([3, 0, 0, 0, 0]));
    assert_eq!(canonicalize(&PentagonConfig::from_real([6, 0, 0, 0, 0])), CanonicalRep::ZERO);
    let x = solve_firings(&ones, &PentagonConfig::from_real([3, 0, 0, 0, 0])).unwrap();
    assert_eq!(x.apply_to(&ones), PentagonConfig::from_real([3, 0, 0, 0, 0]));
    assert_eq!(total_chips(&ones) % 2, 1);
    assert_eq!(total_chips(&PentagonConfig::from_real([3, 0, 0, 0, 0])) % 2, 1);
}

#[test]
fn recipes() {
    let ones = PentagonConfig::from_real([1; 5]);
    assert_eq!(recipe_add_two_everywhere().len(), 10);
    assert_eq!(apply_all(&ones, &recipe_add_two_everywhere()), PentagonConfig::from_real([3; 5]));
    for node in 0..5 {
        let moves = recipe_add_six(node).unwrap();
        assert_eq!(moves.len(), 12);
        let mut expected = [0; 5];
        expected[node] = 6;
        assert_eq!(apply_all(&PentagonConfig::ZERO, &moves), PentagonConfig::from_real(expected));
    }
    assert!(recipe_add_six(5).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn canonicalize_is_idempotent(c in config_strategy(20)) {
        let r = canonicalize(&c);
        prop_assert!(r.is_well_formed());
        prop_assert_eq!(canonicalize(&r.to_config()), r);
    }

    #[test]
    fn firing_does_not_change_the_class(c in config_strategy(20), node in 0usize..5, k in 0usize..4) {
        let m = FiringMove::new(node, MoveKind::ALL[k]).unwrap();
        let fired = c.apply(m);
        prop_assert_eq!(canonicalize(&fired), canonicalize(&c));
        let change = fired.total_chips() - c.total_chips();
        let expected = match m.kind {
            MoveKind::A | MoveKind::NegA => 0,
            MoveKind::B => 2,
            MoveKind::NegB => -2,
        };
        prop_assert_eq!(change, expected);
        prop_assert_eq!(fired.apply(m.inverse()), c);
    }

    #[test]
    fn canonical_is_equivalent_by_oracle(c in config_strategy(20)) {
        let r = canonicalize(&c).to_config();
        prop_assert!(pentagon_equivalent(&c, &r));
        let x = solve_firings(&c, &r).expect("equivalent");
        prop_assert_eq!(x.apply_to(&c), r);
        let replay = x.firings().iter().fold(c, |acc, &(m, n)| {
            let mut acc = acc;
            for _ in 0..n { acc = acc.apply(m); }
            acc
        });
        prop_assert_eq!(replay, r);
    }

    #[test]
    fn equivalence_matches_oracle(a in config_strategy(6), b in config_strategy(6)) {
        let ours = solve_firings(&a, &b);
        prop_assert_eq!(ours.is_some(), pentagon_equivalent(&a, &b));
        prop_assert_eq!(ours.is_some(), canonicalize(&a) == canonicalize(&b));
        if let Some(x) = ours {
            prop_assert_eq!(x.apply_to(&a), b);
        }
    }

    #[test]
    fn integer_and_gaussian_solvability_agree(
        v in proptest::array::uniform5(-15i128..=15),
        w in proptest::array::uniform5(-15i128..=15),
    ) {
        let k = chipfire::linalg::IntMatrix::from_rows(&K_LITERAL).unwrap();
        let rhs: Vec<i128> = v.iter().chain(&w).copied().collect();
        let over_z = IntSolver::new(&k).unwrap().solve(&rhs).unwrap().is_some();
        let b: Vec<GaussInt> = (0..5).map(|i| GaussInt::new(v[i], w[i])).collect();
        let over_zi = gauss_solve_via_real(&r10_constants().kbar, &b).unwrap().is_some();
        prop_assert_eq!(over_z, over_zi);
        prop_assert_eq!(over_z, integer_solvable(&to_rows(&K_LITERAL), &rhs));
    }

    #[test]
    fn planted_images_are_solvable_both_ways(x in config_strategy(8)) {
        let img = r10_constants().kbar.mul_vec(&x.0).unwrap();
        let k = chipfire::linalg::IntMatrix::from_rows(&K_LITERAL).unwrap();
        let rhs: Vec<i128> = img.iter().map(|z| z.re).chain(img.iter().map(|z| z.im)).collect();
        prop_assert!(IntSolver::new(&k).unwrap().solve(&rhs).unwrap().is_some());
        let back = gauss_solve_via_real(&r10_constants().kbar, &img).unwrap();
        prop_assert_eq!(back, Some(x.0.to_vec()));
    }

    #[test]
    fn certificate_json_round_trip(c in config_strategy(1000)) {
        let cert = Certificate(c.0);
        let s = serde_json::to_string(&cert).unwrap();
        prop_assert_eq!(serde_json::from_str::<Certificate>(&s).unwrap(), cert);
        let s = serde_json::to_string(&c).unwrap();
        prop_assert_eq!(serde_json::from_str::<PentagonConfig>(&s).unwrap(), c);
    }
}
