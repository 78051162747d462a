//! Acceptance checks. Each criterion prints one `PASS`/`FAIL` line; run with
//! `cargo test --test acceptance -- --nocapture` to see them.

mod common;

use std::collections::HashSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use affine_critical::characters::{affine_kostant_partition, jantzen_neighbour_check, vectors_up_to};
use affine_critical::linkage::{class_enumerate, integral_real_roots, neighbouring, Relation, Window};
use affine_critical::rational::q;
use affine_critical::subgeneric::detect_subgeneric;
use affine_critical::weyl::{dot, dot_reflect, reflect};
use affine_critical::zigzag::{verify_against_formulas, ZigzagWindow};
use affine_critical::{AffineWeight, Reflection, ReflectionWord, Verdict};
use common::*;
use rand::seq::SliceRandom;
use rand::Rng;

const SYSTEMS: [&str; 4] = ["A1", "A2", "B2", "G2"];

// Runtime bounds.
const LIMIT_ROOT_DATA: Duration = Duration::from_secs(1);
const LIMIT_PARTIAL_ORDER: Duration = Duration::from_secs(10);
const LIMIT_JANTZEN: Duration = Duration::from_secs(60);

// Sample sizes and seeds.
const AFFINE_FORM_SAMPLES: usize = 1000;
const DOT_WORD_SAMPLES: usize = 200;
const LINKAGE_SAMPLES: usize = 50;
const BIJECTION_SAMPLES: usize = 100;
const CHAIN_LENGTH: i64 = 10;
const NEIGHBOUR_PAIRS: usize = 20;
const ZIGZAG_SAMPLES: usize = 10;

fn c1_root_data() -> Result<(), String> {
    let start = Instant::now();
    for (name, count) in SYSTEMS.iter().zip([1, 3, 4, 6]) {
        let sys = system(name);
        let fin = sys.finite();
        if fin.positive_roots().len() != count {
            return Err(format!("{name}: {} positive roots", fin.positive_roots().len()));
        }
        let theta: Vec<_> = fin.highest_root().iter().map(|&t| q(t)).collect();
        if fin.inner_product_finite(&theta, &theta).unwrap() != q(2) {
            return Err(format!("{name}: (θ,θ) ≠ 2"));
        }
        if q(fin.dual_coxeter_number()) != sys.rho().level {
            return Err(format!("{name}: h∨ = {} but ρ(K) = {}", fin.dual_coxeter_number(), sys.rho().level));
        }
    }
    within(start, LIMIT_ROOT_DATA)
}

fn c2_affine_form() -> Result<(), String> {
    let mut rng = rng(2);
    for i in 0..AFFINE_FORM_SAMPLES {
        let sys = system(SYSTEMS[i % 4]);
        let w = random_weight(&mut rng, sys.rank());
        if sys.bilinear(&sys.delta(), &w) != w.level {
            return Err(format!("(δ, {w}) ≠ level"));
        }
    }
    Ok(())
}

fn random_reflection<R: Rng>(rng: &mut R, sys: &affine_critical::AffineSystem) -> Reflection {
    let alpha = sys.finite().roots().collect::<Vec<_>>().choose(rng).unwrap().clone();
    Reflection::new(&alpha, rng.gen_range(-3..=3))
}

fn c3_dot_action() -> Result<(), String> {
    let mut rng = rng(3);
    for i in 0..DOT_WORD_SAMPLES {
        let sys = system(SYSTEMS[i % 4]);
        let minus_rho = sys.rho().scale(&q(-1));
        let len = rng.gen_range(0..=8);
        let word = ReflectionWord((0..len).map(|_| random_reflection(&mut rng, &sys)).collect());
        if dot(&sys, &word, &minus_rho).unwrap() != minus_rho {
            return Err(format!("{} moves −ρ", word.0.len()));
        }
        let w = random_weight(&mut rng, sys.rank());
        let s = random_reflection(&mut rng, &sys);
        if dot_reflect(&sys, &s.alpha, s.n, &w).unwrap().level != w.level {
            return Err(format!("dot-reflection changed the level of {w}"));
        }
    }
    for name in SYSTEMS {
        let sys = system(name);
        let theta: Vec<i64> = sys.finite().highest_root().iter().map(|t| -t).collect();
        let mut generators = vec![(theta, 1)];
        generators.extend((0..sys.rank()).map(|i| (sys.finite().simple_root(i), 0)));
        for (alpha, n) in generators {
            if reflect(&sys, &alpha, n, &sys.delta()).unwrap() != sys.delta() {
                return Err(format!("{name}: s_({alpha:?},{n}) moves δ"));
            }
        }
    }
    Ok(())
}

fn c4_partial_order() -> Result<(), String> {
    let start = Instant::now();
    let mut rng = rng(4);
    for name in ["A1", "A2"] {
        let sys = system(name);
        let roots = affine_simple_roots(&sys);
        let base = random_critical_weight(&mut rng, &sys);
        for c in lattice_ball(sys.rank() + 1, 6) {
            let d = combination(&roots, &c);
            let upper = &base + &d;
            if sys.leq(&base, &upper) != brute_force_nonnegative(&sys, &d, 6) {
                return Err(format!("{name}: leq disagrees on difference {c:?}"));
            }
        }
    }
    within(start, LIMIT_PARTIAL_ORDER)
}

fn c5_linkage() -> Result<(), String> {
    let mut rng = rng(5);
    let mut subgeneric_seen = 0;
    for i in 0..LINKAGE_SAMPLES {
        let (name, depth) = if i % 2 == 0 { ("A1", 8) } else { ("A2", 5) };
        let sys = system(name);
        // Half the samples are built subgeneric so the chain comparison is exercised.
        let lambda = if i % 4 < 2 {
            random_subgeneric(&mut rng, &sys).gamma
        } else {
            random_critical_weight(&mut rng, &sys)
        };
        let window = Window::new(lambda.clone(), depth);
        let class = class_enumerate(&sys, &lambda, Relation::Restricted, &window);
        class.verify(&sys).map_err(|e| format!("{name}: bad certificate: {e}"))?;
        let roots = integral_real_roots(&sys, &lambda);
        for m in class.weights() {
            if integral_real_roots(&sys, m) != roots {
                return Err(format!("{name}: integral roots differ at {m}"));
            }
        }
        if let Verdict::Subgeneric(d) = detect_subgeneric(&sys, &lambda) {
            subgeneric_seen += 1;
            if !class.is_totally_ordered(&sys) {
                return Err(format!("{name}: class of {lambda} not totally ordered"));
            }
            let reach = 2 * depth as i64 + 2;
            let chain: HashSet<AffineWeight> = (-reach..=reach)
                .map(|k| d.alpha_up_n(k))
                .filter(|w| window.contains(&sys, w))
                .collect();
            let members: HashSet<AffineWeight> = class.weights().cloned().collect();
            if chain != members {
                return Err(format!("{name}: class of {lambda} differs from its chain"));
            }
        }
    }
    if subgeneric_seen < LINKAGE_SAMPLES / 2 {
        return Err(format!("only {subgeneric_seen} subgeneric samples"));
    }
    Ok(())
}

fn c6_bijection() -> Result<(), String> {
    let mut rng = rng(6);
    for i in 0..BIJECTION_SAMPLES {
        let name = ["A1", "A2", "B2"][i % 3];
        let sys = system(name);
        let start = random_subgeneric(&mut rng, &sys);
        let mut k = None;
        let mut d = start.clone();
        for _ in 0..CHAIN_LENGTH {
            let up = d.up();
            if up.alpha_down() != d.gamma {
                return Err(format!("{name}: α↓α↑ ≠ id at {}", d.gamma));
            }
            if !sys.lt(&d.gamma, &up.gamma) {
                return Err(format!("{name}: α↑ does not increase {}", d.gamma));
            }
            let n = if d.is_dominant() { -1 } else { 0 };
            if dot_reflect(&sys, &d.alpha, n, &d.gamma).unwrap() != up.gamma {
                return Err(format!("{name}: α↑ is not s_(α,{n}) at {}", d.gamma));
            }
            let diff = &up.up().gamma - &d.gamma;
            let AffineWeight { fin, level, degree } = diff;
            if fin.iter().any(|x| *x != q(0)) || level != q(0) || degree <= q(0) {
                return Err(format!("{name}: α↑² is not a positive δ-shift at {}", d.gamma));
            }
            match &k {
                None => k = Some(degree),
                Some(k0) if *k0 != degree => return Err(format!("{name}: δ-shift varies along the chain")),
                _ => {}
            }
            d = up;
        }
    }
    Ok(())
}

fn c7_jantzen() -> Result<(), String> {
    let start = Instant::now();
    let mut rng = rng(7);
    for name in ["A1", "A2", "B2"] {
        let sys = system(name);
        let mut found = 0;
        let mut tries = 0;
        while found < NEIGHBOUR_PAIRS {
            tries += 1;
            if tries > 50 * NEIGHBOUR_PAIRS {
                return Err(format!("{name}: only {found} neighbouring pairs found"));
            }
            let d = random_subgeneric(&mut rng, &sys);
            let (lambda, mu) = (d.gamma.clone(), d.alpha_up());
            let height: i64 = sys.affine_coords(&(&mu - &lambda)).unwrap().iter().sum();
            let window = Window::new(lambda.clone(), height as u32 + 2);
            if !neighbouring(&sys, &lambda, &mu, &window).map_err(|e| e.to_string())? {
                continue;
            }
            let report = jantzen_neighbour_check(&sys, &lambda, &mu, &window).map_err(|e| e.to_string())?;
            if !report.passes() {
                return Err(format!("{name}: {lambda} < {mu}: multiplicity {}, offenders {:?}", report.multiplicity_of_lower, report.offenders));
            }
            found += 1;
        }
    }
    within(start, LIMIT_JANTZEN)
}

fn c8_partitions() -> Result<(), String> {
    for (name, max) in [("A1", 6), ("A2", 5)] {
        let sys = system(name);
        let parts = colored_positive_roots(&sys, max);
        for c in vectors_up_to(sys.rank() + 1, max) {
            let want = brute_force_partitions(&parts, &c);
            let got = affine_kostant_partition(&sys, &c).unwrap();
            if got != want {
                return Err(format!("{name}: P({c:?}) = {got}, enumeration gives {want}"));
            }
        }
    }
    Ok(())
}

fn c9_zigzag() -> Result<(), String> {
    let mut rng = rng(9);
    for i in 0..ZIGZAG_SAMPLES {
        let name = ["A1", "A2", "B2"][i % 3];
        let sys = system(name);
        let d = random_subgeneric(&mut rng, &sys);
        let w = ZigzagWindow::build(&d, 5).map_err(|e| e.to_string())?;
        let report = verify_against_formulas(&sys, &w);
        if !report.passes() {
            return Err(format!("{name}: {report:?}"));
        }
        for i in w.indices() {
            for j in w.indices() {
                for p in w.words(i, j, 3).into_iter().filter(|p| p.len() == 3) {
                    if !w.reduce(&p).is_zero() {
                        return Err(format!("{name}: {p} does not vanish"));
                    }
                }
            }
        }
        let small = ZigzagWindow::build(&d, 4).map_err(|e| e.to_string())?;
        for i in small.indices() {
            for j in small.indices() {
                for p in small.words(i, j, 4) {
                    if small.reductions_all_orders(&p).len() != 1 {
                        return Err(format!("{name}: {p} has several normal forms"));
                    }
                }
            }
        }
    }
    Ok(())
}

fn c10_cli_determinism() -> Result<(), String> {
    for (name, args) in golden_cases() {
        let first = run_cli(&args);
        let second = run_cli(&args);
        if !first.status.success() {
            return Err(format!("{name}: exit {:?}", first.status.code()));
        }
        if first.stdout != second.stdout {
            return Err(format!("{name}: two runs differ"));
        }
        let golden = std::fs::read(golden_path(name)).map_err(|e| format!("{name}: {e}"))?;
        if golden != first.stdout {
            return Err(format!("{name}: output differs from golden file"));
        }
    }
    Ok(())
}

type Check = fn() -> Result<(), String>;

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    if t <= limit {
        Ok(())
    } else {
        Err(format!("took {t:?}, limit {limit:?}"))
    }
}

#[test]
fn acceptance() {
    let criteria: [(&str, Check); 10] = [
        ("root data", c1_root_data),
        ("affine form", c2_affine_form),
        ("dot action", c3_dot_action),
        ("partial order", c4_partial_order),
        ("linkage structure", c5_linkage),
        ("subgeneric bijection", c6_bijection),
        ("jantzen leading term", c7_jantzen),
        ("partition oracle", c8_partitions),
        ("zigzag vs formulas", c9_zigzag),
        ("cli determinism", c10_cli_determinism),
    ];
    let mut failed = Vec::new();
    for (i, (label, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let t = start.elapsed();
        match outcome {
            Ok(()) => println!("criterion {:2} PASS {label} ({t:.2?})", i + 1),
            Err(e) => {
                println!("criterion {:2} FAIL {label} ({t:.2?}): {e}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
