//! Built-in consistency checks against the known facts about R10.
//!
//! Every check takes the R10 constants as a parameter so a corrupted table can
//! be injected and observed to fail.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::linalg::{det, gauss_solve_via_real, smith_normal_form, GaussInt, Int, IntSolver};
use crate::r10::{
    all_representatives, apply_all, canonicalize, canonicalize_traced, order_two_element, r10_constants,
    r10_matroid, recipe_add_six, recipe_add_two_everywhere, CanonicalRep, Certificate, FiringMove,
    PentagonConfig, R10Constants, NODES,
};
use crate::sandpile::{example_matroid, reduce_example_matroid, sandpile_group, ChipConfigZ, FiringSolver};

use super::cmd_puzzle;

const SEED: u64 = 0x5eed_0162;

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct SelfTestReport {
    pub checks: Vec<CheckOutcome>,
}

impl SelfTestReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

type CheckFn = fn(&R10Constants) -> Result<String, String>;

const CHECKS: &[(&str, CheckFn)] = &[
    ("sandpile group of R10 is Z/3 + Z/3 + Z/3 + Z/6", check_group),
    ("R10 has 162 bases, equal to |det K|", check_bases),
    ("K̄ times the stored 6K̄⁻¹ is 6I", check_inverse_identity),
    ("worked example canonicalizes with its certificate", check_worked_example),
    ("162 representatives are pairwise inequivalent", check_representatives),
    ("random configurations: idempotence, invariance, soundness, parity", check_random_configs),
    ("three-element example matroid has group Z/3", check_example_matroid),
    ("Z and Z[i] solvability agree", check_correspondence),
    ("order-two class and firing recipes", check_order_two),
    ("seeded puzzles are solvable and reproducible", check_puzzles),
];

pub fn run_selftest() -> SelfTestReport {
    run_selftest_with(r10_constants())
}

pub fn run_selftest_with(constants: &R10Constants) -> SelfTestReport {
    let checks = CHECKS
        .iter()
        .map(|(name, f)| {
            let start = Instant::now();
            let (passed, detail) = match f(constants) {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            CheckOutcome { name, passed, detail, millis: start.elapsed().as_millis() }
        })
        .collect();
    SelfTestReport { checks }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn check_group(c: &R10Constants) -> Result<String, String> {
    let snf = smith_normal_form(&c.k_matrix).map_err(|e| e.to_string())?;
    let diag = snf.diagonal();
    ensure(diag == [1, 1, 1, 1, 1, 1, 3, 3, 3, 6], || format!("Smith diagonal {diag:?}"))?;
    let g = sandpile_group(&r10_matroid()).map_err(|e| e.to_string())?;
    ensure(g.invariant_factors == [3, 3, 3, 6] && g.order == 162, || format!("group {g}"))?;
    Ok(format!("{g}, order {}", g.order))
}

fn check_bases(c: &R10Constants) -> Result<String, String> {
    let bases = r10_matroid().enumerate_bases().map_err(|e| e.to_string())?;
    let d = det(&c.k_matrix).map_err(|e| e.to_string())?;
    ensure(bases.len() == 162 && d.abs() == 162, || format!("{} bases, det K = {d}", bases.len()))?;
    Ok(format!("{} bases, det K = {d}", bases.len()))
}

fn check_inverse_identity(c: &R10Constants) -> Result<String, String> {
    ensure(c.inverse_identity_holds(), || "product differs from 6I".into())?;
    Ok("exact".into())
}

fn worked_example_input() -> PentagonConfig {
    PentagonConfig::from_pairs([(3, 1), (4, -6), (7, 1), (-8, -8), (3, 0)])
}

fn check_worked_example(c: &R10Constants) -> Result<String, String> {
    let input = worked_example_input();
    let t = canonicalize_traced(&input);
    ensure(t.real_only == [10, -4, 22, -17, 10], || {
        format!("after clearing imaginary chips {:?}", t.real_only)
    })?;
    ensure(t.result == CanonicalRep([0, 1, 0, 0, 0]), || format!("result {}", t.result))?;
    let g = GaussInt::new;
    let expected = Certificate([g(-5, -1), g(-4, 1), g(-4, 3), g(4, -1), g(-1, 0)]);
    let cert =
        c.solve_firings(&input, &t.result.to_config()).map_err(|e| e.to_string())?.ok_or("no certificate")?;
    ensure(cert == expected, || format!("certificate {cert}"))?;
    Ok(format!("{input} -> {} via {cert}", t.result))
}

fn check_representatives(c: &R10Constants) -> Result<String, String> {
    let reps = all_representatives();
    ensure(reps.len() == 162, || format!("{} representatives", reps.len()))?;
    for r in &reps {
        ensure(canonicalize(&r.to_config()) == *r, || format!("{r} is not a fixed point"))?;
    }
    let mut pairs = 0;
    for (i, a) in reps.iter().enumerate() {
        for b in &reps[i + 1..] {
            let s = c.solve_firings(&a.to_config(), &b.to_config()).map_err(|e| e.to_string())?;
            ensure(s.is_none(), || format!("{a} and {b} are equivalent"))?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} pairs checked"))
}

fn random_config(rng: &mut ChaCha8Rng, bound: Int) -> PentagonConfig {
    PentagonConfig(std::array::from_fn(|_| {
        GaussInt::new(rng.random_range(-bound..=bound), rng.random_range(-bound..=bound))
    }))
}

fn check_random_configs(c: &R10Constants) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let count = 1000;
    for _ in 0..count {
        let cfg = random_config(&mut rng, 20);
        let rep = canonicalize(&cfg);
        ensure(rep.is_well_formed(), || format!("{cfg} -> malformed {rep}"))?;
        ensure(canonicalize(&rep.to_config()) == rep, || format!("not idempotent on {cfg}"))?;
        for m in FiringMove::all() {
            let fired = cfg.apply(m);
            ensure(canonicalize(&fired) == rep, || format!("{m} changes the class of {cfg}"))?;
            ensure((fired.total_chips() - cfg.total_chips()) % 2 == 0, || format!("{m} flips parity"))?;
        }
        let cert = c
            .solve_firings(&cfg, &rep.to_config())
            .map_err(|e| e.to_string())?
            .ok_or_else(|| format!("{cfg} not equivalent to {rep}"))?;
        let back = c.kbar.mul_vec(&cert.0).map_err(|e| e.to_string())?;
        let diff = rep.to_config() - cfg;
        ensure(back == diff.0, || format!("certificate for {cfg} does not verify"))?;
    }
    Ok(format!("{count} configurations"))
}

fn check_example_matroid(_: &R10Constants) -> Result<String, String> {
    let m = example_matroid();
    let g = sandpile_group(&m).map_err(|e| e.to_string())?;
    ensure(g.invariant_factors == [3], || format!("group {g}"))?;
    let solver = FiringSolver::new(&m).map_err(|e| e.to_string())?;
    let reps: Vec<ChipConfigZ> = (0..3).map(|t| ChipConfigZ(vec![t, 0, 0])).collect();
    for (i, a) in reps.iter().enumerate() {
        for b in &reps[i + 1..] {
            let s = solver.equivalent(a, b).map_err(|e| e.to_string())?;
            ensure(s.is_none(), || format!("{a:?} ~ {b:?}"))?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..200 {
        let c = ChipConfigZ((0..3).map(|_| rng.random_range(-30..=30)).collect());
        let r = reduce_example_matroid(&c).map_err(|e| e.to_string())?;
        ensure(reps.contains(&r), || format!("{c:?} reduced to {r:?}"))?;
        let s = solver.equivalent(&c, &r).map_err(|e| e.to_string())?;
        ensure(s.is_some(), || format!("{c:?} not equivalent to its reduction"))?;
    }
    Ok(g.to_string())
}

fn check_correspondence(c: &R10Constants) -> Result<String, String> {
    let solver = IntSolver::new(&c.k_matrix).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut solvable = 0;
    let count = 200;
    for i in 0..count {
        // mix arbitrary vectors with known image vectors so both outcomes occur
        let (v, w): (Vec<Int>, Vec<Int>) = if i % 2 == 0 {
            let x = random_config(&mut rng, 5);
            let img = c.kbar.mul_vec(&x.0).map_err(|e| e.to_string())?;
            (img.iter().map(|z| z.re).collect(), img.iter().map(|z| z.im).collect())
        } else {
            let x = random_config(&mut rng, 9);
            (x.0.iter().map(|z| z.re).collect(), x.0.iter().map(|z| z.im).collect())
        };
        let rhs: Vec<Int> = v.iter().chain(&w).copied().collect();
        let over_z = solver.solve(&rhs).map_err(|e| e.to_string())?.is_some();
        let b: Vec<GaussInt> = (0..NODES).map(|k| GaussInt::new(v[k], w[k])).collect();
        let over_zi = gauss_solve_via_real(&c.kbar, &b).map_err(|e| e.to_string())?.is_some();
        ensure(over_z == over_zi, || format!("disagreement on v = {v:?}, w = {w:?}"))?;
        solvable += over_z as usize;
    }
    Ok(format!("{count} pairs, {solvable} solvable"))
}

fn check_order_two(c: &R10Constants) -> Result<String, String> {
    let h = order_two_element();
    let ones = PentagonConfig::from_real([1; NODES]);
    ensure(canonicalize(&ones) == h, || "all-ones is not the order-two class".into())?;
    ensure(canonicalize(&PentagonConfig::from_real([6, 0, 0, 0, 0])) == CanonicalRep::ZERO, || {
        "six chips on one node is not trivial".into()
    })?;
    ensure(c.solve_firings(&ones, &h.to_config()).map_err(|e| e.to_string())?.is_some(), || {
        "no certificate between the two order-two representatives".into()
    })?;
    let two = apply_all(&PentagonConfig::ZERO, &recipe_add_two_everywhere());
    ensure(two == PentagonConfig::from_real([2; NODES]), || format!("add-two recipe gives {two}"))?;
    for node in 0..NODES {
        let six = apply_all(&PentagonConfig::ZERO, &recipe_add_six(node).map_err(|e| e.to_string())?);
        let mut expected = [0; NODES];
        expected[node] = 6;
        ensure(six == PentagonConfig::from_real(expected), || {
            format!("add-six recipe at {node} gives {six}")
        })?;
    }
    Ok(format!("H = {h}"))
}

fn check_puzzles(_: &R10Constants) -> Result<String, String> {
    for i in 0..100u64 {
        let difficulty = (i % 50) as usize + 1;
        let seed = SEED ^ i.wrapping_mul(0x9e37_79b9_7f4a_7c15);
        let p = cmd_puzzle(seed, difficulty).map_err(|e| e.to_string())?;
        ensure(canonicalize(&p.config) == CanonicalRep::ZERO, || format!("puzzle seed {seed} unsolvable"))?;
        let again = cmd_puzzle(seed, difficulty).map_err(|e| e.to_string())?;
        ensure(again == p, || format!("puzzle seed {seed} not reproducible"))?;
    }
    Ok("100 puzzles".into())
}
