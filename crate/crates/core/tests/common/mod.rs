//! Shared generators and brute-force oracles for the integration tests.
#![allow(dead_code)]

use affine_critical::rational::{frac, q};
use affine_critical::{AffineSystem, AffineWeight, SubgenericDatum, Q};
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn system(name: &str) -> AffineSystem {
    AffineSystem::preset(name).unwrap()
}

pub fn random_q<R: Rng>(rng: &mut R) -> Q {
    frac(rng.gen_range(-20..=20), rng.gen_range(1..=6))
}

pub fn random_weight<R: Rng>(rng: &mut R, rank: usize) -> AffineWeight {
    let fin = (0..rank).map(|_| random_q(rng)).collect();
    AffineWeight::new(fin, random_q(rng), random_q(rng))
}

pub fn random_critical_weight<R: Rng>(rng: &mut R, sys: &AffineSystem) -> AffineWeight {
    let mut w = random_weight(rng, sys.rank());
    w.level = sys.critical_level();
    w
}

/// A random α-subgeneric datum. Pairings are ±1 with probability one half.
pub fn random_subgeneric<R: Rng>(rng: &mut R, sys: &AffineSystem) -> SubgenericDatum {
    loop {
        let alpha = sys.finite().positive_roots().choose(rng).unwrap().clone();
        let magnitude = if rng.gen_bool(0.5) { 1 } else { rng.gen_range(1..=4) };
        let pairing = if rng.gen_bool(0.5) { magnitude } else { -magnitude };
        let base: Vec<Q> = (0..sys.rank())
            .map(|_| frac(rng.gen_range(-40..=40), *[7, 11, 13].choose(rng).unwrap()))
            .collect();
        let degree = q(rng.gen_range(-3..=3));
        if let Ok(d) = SubgenericDatum::with_pairing(sys, &alpha, pairing, &base, degree) {
            return d;
        }
    }
}

/// Affine simple roots as weights, `α₀ = δ − θ` first.
pub fn affine_simple_roots(sys: &AffineSystem) -> Vec<AffineWeight> {
    let r = sys.rank();
    let theta = sys.finite().highest_root();
    let mut out = vec![AffineWeight::new(theta.iter().map(|&t| q(-t)).collect(), q(0), q(1))];
    for i in 0..r {
        let fin = (0..r).map(|j| q(i64::from(i == j))).collect();
        out.push(AffineWeight::new(fin, q(0), q(0)));
    }
    out
}

pub fn combination(roots: &[AffineWeight], c: &[i64]) -> AffineWeight {
    let mut acc = AffineWeight::zero(roots[0].rank());
    for (r, &k) in roots.iter().zip(c) {
        acc = &acc + &r.scale(&q(k));
    }
    acc
}

/// Integer vectors of the given length with L1 norm at most `max`.
pub fn lattice_ball(len: usize, max: i64) -> Vec<Vec<i64>> {
    fn rec(len: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for x in -left..=left {
            cur.push(x);
            rec(len, left - x.abs(), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(len, max, &mut Vec::new(), &mut out);
    out
}

/// Search every ℕ-combination of affine simple roots with total at most
/// `max` for one equal to `d`.
pub fn brute_force_nonnegative(sys: &AffineSystem, d: &AffineWeight, max: i64) -> bool {
    let roots = affine_simple_roots(sys);
    lattice_ball(roots.len(), max)
        .into_iter()
        .filter(|c| c.iter().all(|&x| x >= 0))
        .any(|c| &combination(&roots, &c) == d)
}

/// Positive affine roots in affine-simple coordinates up to `max` height,
/// imaginary ones repeated once per color. Built from `θ` directly.
pub fn colored_positive_roots(sys: &AffineSystem, max: i64) -> Vec<Vec<i64>> {
    let fin = sys.finite();
    let theta = fin.highest_root();
    let delta: Vec<i64> = std::iter::once(1).chain(theta.iter().copied()).collect();
    let mut out = Vec::new();
    for n in 0..=max {
        for alpha in fin.roots() {
            if n == 0 && !fin.is_positive_root(&alpha) {
                continue;
            }
            let v: Vec<i64> = delta.iter().zip(std::iter::once(&0).chain(&alpha)).map(|(d, a)| n * d + a).collect();
            if v.iter().sum::<i64>() <= max {
                out.push(v);
            }
        }
        if n >= 1 {
            let v: Vec<i64> = delta.iter().map(|d| n * d).collect();
            if v.iter().sum::<i64>() <= max {
                for _ in 0..sys.rank() {
                    out.push(v.clone());
                }
            }
        }
    }
    out
}

/// Count multisets of parts summing to `target` by direct enumeration.
pub fn brute_force_partitions(parts: &[Vec<i64>], target: &[i64]) -> u128 {
    fn rec(parts: &[Vec<i64>], start: usize, left: &mut Vec<i64>) -> u128 {
        if left.iter().all(|&x| x == 0) {
            return 1;
        }
        let mut total = 0;
        for i in start..parts.len() {
            if parts[i].iter().zip(left.iter()).all(|(p, l)| p <= l) {
                for (l, p) in left.iter_mut().zip(&parts[i]) {
                    *l -= p;
                }
                total += rec(parts, i, left);
                for (l, p) in left.iter_mut().zip(&parts[i]) {
                    *l += p;
                }
            }
        }
        total
    }
    rec(parts, 0, &mut target.to_vec())
}

pub const GAMMA_A1: &str = r#"{"fin":["0"],"level":"-2","degree":"0"}"#;

/// One invocation per command on the A1 preset, with its golden file name.
pub fn golden_cases() -> Vec<(&'static str, Vec<&'static str>)> {
    vec![
        ("subgeneric_check", vec!["subgeneric-check", "--system", "A1", "--weight", GAMMA_A1, "--radius", "2"]),
        ("class_enum", vec!["class-enum", "--system", "A1", "--weight", GAMMA_A1, "--depth", "6"]),
        ("class_enum_full", vec!["class-enum", "--system", "A1", "--weight", GAMMA_A1, "--depth", "4", "--relation", "full"]),
        ("class_chain", vec!["class-chain", "--system", "A1", "--weight", GAMMA_A1, "--radius", "3"]),
        ("hom_table", vec!["hom-table", "--system", "A1", "--weight", GAMMA_A1, "--radius", "3"]),
        ("jantzen_rhs", vec!["jantzen-rhs", "--system", "A1", "--weight", GAMMA_A1, "--depth", "4"]),
        ("verma_char", vec!["verma-char", "--system", "A1", "--weight", GAMMA_A1, "--depth", "4"]),
        ("zigzag", vec!["zigzag", "--system", "A1", "--weight", GAMMA_A1, "--radius", "2", "--cayley"]),
    ]
}

pub fn run_cli(args: &[&str]) -> std::process::Output {
    std::process::Command::new(env!("CARGO_BIN_EXE_affcrit"))
        .args(args)
        .output()
        .expect("binary runs")
}

pub fn golden_path(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.json"))
}
