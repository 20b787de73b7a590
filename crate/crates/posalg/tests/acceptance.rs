//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line and enforcing its runtime budget. Everything is exact arithmetic;
//! there are no tolerances anywhere.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the
//! per-criterion lines.

use std::process::Command;
use std::time::{Duration, Instant};

use num_traits::{Signed, Zero};

use posalg::check::{random_check, CheckConfig, TheoremId};
use posalg::gen;
use posalg::idempot::{band_semigroup, build_example, validate_pair, CommOrder, ExampleName};
use posalg::lattice::band_split;
use posalg::rng::SplitMix64;
use posalg::span::{nullspace, SpanBuilder};
use posalg::spanalg::{algebra_closure, is_triangularizable};
use posalg::supercone::{cone_span, supercomm_spec, ConeSpec, Side};
use posalg::{rat, Mat, Rat};

struct Criterion {
    name: &'static str,
    budget: Duration,
    started: Instant,
}

impl Criterion {
    fn start(name: &'static str, budget: Duration) -> Self {
        Criterion {
            name,
            budget,
            started: Instant::now(),
        }
    }

    fn finish(self) {
        let elapsed = self.started.elapsed();
        println!(
            "criterion {}: PASS ({elapsed:.2?} of {:?} budget)",
            self.name, self.budget
        );
        assert!(
            elapsed < self.budget,
            "criterion {} exceeded its {:?} budget: {elapsed:?}",
            self.name,
            self.budget
        );
    }
}

#[test]
fn criterion_1_ks7_pair_attains_dimension_nine() {
    let c = Criterion::start("1 (7x7 pair, dimension 9)", Duration::from_secs(1));
    let (e, f) = build_example(&ExampleName::Ks7).unwrap();
    assert!(e.is_idempotent().unwrap() && f.is_idempotent().unwrap());
    let pair = validate_pair(&e, &f).unwrap();
    assert_eq!(pair.order, CommOrder::GreaterEqual, "EF >= FE must hold");

    let mut words_span = SpanBuilder::new(49);
    for w in posalg::idempot::nine_words() {
        words_span.insert(&w.evaluate(7, &[e.clone(), f.clone()]).unwrap().vectorize());
    }
    assert_eq!(
        words_span.rank(),
        9,
        "the nine words must be linearly independent"
    );

    let alg = algebra_closure(7, &[e, f], true).unwrap();
    assert_eq!(alg.dim(), 9, "unital algebra dimension must be exactly 9");
    c.finish();
}

#[test]
fn criterion_2_truncated_pair_semigroup_and_dimension_seven() {
    let c = Criterion::start("2 (6x6 truncation, dimension 7)", Duration::from_secs(1));
    let (e, f) = build_example(&ExampleName::Ks6).unwrap();
    let pair = validate_pair(&e, &f).unwrap();
    assert_eq!(pair.order, CommOrder::GreaterEqual);

    let report = band_semigroup(&pair).unwrap();
    assert!(report.pass, "witness: {:?}", report.witness);
    assert_eq!(
        report.details["semigroup_size"],
        serde_json::json!(6),
        "semigroup must stabilize at six elements"
    );
    assert_eq!(
        report.details["semigroup_is_six_products"],
        serde_json::json!(true),
        "semigroup must equal {{E, F, EF, FE, EFE, FEF}} as a set"
    );
    assert_eq!(
        report.dim,
        Some(7),
        "unital algebra dimension must be exactly 7"
    );
    // Documented finding: the printed truncation is not literally a band
    // (EF fails idempotency at entry (2,5)); the six-product set equality
    // and the exact dimension are asserted above.
    assert_eq!(report.details["is_band"], serde_json::json!(false));
    c.finish();
}

#[test]
fn criterion_3_even_and_odd_family_dimensions() {
    let c = Criterion::start("3 (even 4k, odd 4k+1 dimensions)", Duration::from_secs(5));
    for k in 1..=4usize {
        let (e, f) = build_example(&ExampleName::Even(k)).unwrap();
        let alg = algebra_closure(2 * k, &[e, f], true).unwrap();
        assert_eq!(alg.dim(), 4 * k, "even(k = {k}) must have dimension 4k");
    }
    for k in 2..=4usize {
        let (e, f) = build_example(&ExampleName::Odd(k)).unwrap();
        let alg = algebra_closure(2 * k + 1, &[e, f], true).unwrap();
        assert_eq!(
            alg.dim(),
            4 * k + 1,
            "odd(k = {k}) must have dimension 4k+1"
        );
    }
    c.finish();
}

#[test]
fn criterion_4_supercone_spans() {
    let c = Criterion::start("4 (super-commutant spans)", Duration::from_secs(60));
    // diag(n..1): dimension n(n+1)/2 and span = upper triangular matrices.
    for n in 2..=6usize {
        let diag: Vec<Rat> = (0..n).map(|i| rat((n - i) as i64)).collect();
        let spec = supercomm_spec(&Mat::diagonal(&diag), Side::Left).unwrap();
        let span = cone_span(&spec).unwrap();
        assert_eq!(span.dim, n * (n + 1) / 2, "diag span dimension at n = {n}");
        let mut builder = SpanBuilder::new(n * n);
        for b in &span.span_basis {
            for r in 0..n {
                for col in 0..r {
                    assert!(b.at(r, col).is_zero(), "span must be upper triangular");
                }
            }
            builder.insert(&b.vectorize());
        }
        for i in 0..n {
            for j in i..n {
                assert!(
                    builder.contains(&Mat::unit(n, i, j).vectorize()),
                    "span must contain every upper triangular unit at n = {n}"
                );
            }
        }
    }
    // All-ones matrix: dimension (n-1)^2 + 1, and non-triangularizable
    // span algebra for n >= 3.
    for n in 2..=5usize {
        let spec = supercomm_spec(&Mat::from_fn(n, n, |_, _| rat(1)), Side::Left).unwrap();
        let span = cone_span(&spec).unwrap();
        assert_eq!(
            span.dim,
            (n - 1) * (n - 1) + 1,
            "doubly stochastic span at n = {n}"
        );
        if n >= 3 {
            let tri = is_triangularizable(n, &span.span_basis).unwrap();
            assert!(
                !tri.pass,
                "doubly stochastic span must not be triangularizable at n = {n}"
            );
        }
    }
    c.finish();
}

#[test]
fn criterion_5_positive_commutator_property_suite() {
    let c = Criterion::start("5 (100 positive-commutator pairs)", Duration::from_secs(60));
    let report = random_check(&CheckConfig {
        theorem: TheoremId::ThmOne,
        trials: 100,
        seed: 20260809,
        n_lo: 2,
        n_hi: 4,
    })
    .unwrap();
    assert!(report.pass, "witness: {:?}", report.witness);
    assert_eq!(report.details["failed"], serde_json::json!(0));
    assert_eq!(
        report.details["passed"],
        serde_json::json!(100),
        "no trial may be lost"
    );
    c.finish();
}

#[test]
fn criterion_6_comparable_idempotent_property_suite() {
    let c = Criterion::start(
        "6 (100 comparable idempotent pairs)",
        Duration::from_secs(60),
    );
    let report = random_check(&CheckConfig {
        theorem: TheoremId::ThmMain,
        trials: 100,
        seed: 31337,
        n_lo: 2,
        n_hi: 6,
    })
    .unwrap();
    assert!(report.pass, "witness: {:?}", report.witness);
    assert_eq!(report.details["failed"], serde_json::json!(0));
    assert_eq!(report.details["passed"], serde_json::json!(100));
    c.finish();
}

#[test]
fn criterion_7_band_split_self_checks() {
    let c = Criterion::start("7 (100 band splits)", Duration::from_secs(30));
    let mut rng = SplitMix64::new(777);
    for trial in 0..100 {
        let n = rng.range_usize(2, 7);
        let e = gen::random_idempotent(&mut rng, n);
        let split = band_split(&e)
            .unwrap_or_else(|err| panic!("trial {trial}: block identities failed for\n{e}\n{err}"));
        // The split partitions the coordinates.
        assert_eq!(
            split.l1.len() + split.l2.len() + split.l3.len() + split.l4.len(),
            n,
            "bands must partition the coordinates"
        );
    }
    c.finish();
}

/// Brute-force extreme-ray enumeration at n = 2 (ambient dimension 4):
/// every extreme ray of the pointed cone has an active set of rank 3, so
/// scanning all 3-subsets of the 8 functionals finds them all.
fn span_dim_by_double_description(spec: &ConeSpec) -> usize {
    let cons = &spec.constraints;
    let mut rays: Vec<Vec<Rat>> = Vec::new();
    let k = cons.len();
    for a in 0..k {
        for b in (a + 1)..k {
            for c in (b + 1)..k {
                let rows = vec![cons[a].clone(), cons[b].clone(), cons[c].clone()];
                let kernel = nullspace(&rows, 4);
                if kernel.len() != 1 {
                    continue;
                }
                let neg: Vec<Rat> = kernel[0].iter().map(|x| -x.clone()).collect();
                for candidate in [kernel[0].clone(), neg] {
                    let feasible = cons.iter().all(|f| {
                        let v: Rat = f.iter().zip(candidate.iter()).map(|(c, x)| c * x).sum();
                        !v.is_negative()
                    });
                    if feasible {
                        rays.push(candidate);
                        break;
                    }
                }
            }
        }
    }
    let mut builder = SpanBuilder::new(4);
    for ray in &rays {
        builder.insert(ray);
    }
    builder.rank()
}

#[test]
fn criterion_8_lp_span_matches_extreme_ray_oracle() {
    let c = Criterion::start(
        "8 (LP vs extreme-ray oracle at n = 2)",
        Duration::from_secs(10),
    );
    let mut rng = SplitMix64::new(4242);
    for trial in 0..20 {
        let a = Mat::from_fn(2, 2, |_, _| rat(rng.below(5) as i64));
        let spec = supercomm_spec(&a, Side::Left).unwrap();
        let span = cone_span(&spec).unwrap();
        let oracle = span_dim_by_double_description(&spec);
        assert_eq!(
            span.dim, oracle,
            "trial {trial}: LP span and ray enumeration disagree on\n{a}"
        );
    }
    c.finish();
}

#[test]
fn criterion_9_byte_identical_reruns() {
    let c = Criterion::start("9 (byte-identical determinism)", Duration::from_secs(120));
    let bin = env!("CARGO_BIN_EXE_posalg");
    let run = |args: &[&str]| {
        let out = Command::new(bin).args(args).output().expect("binary runs");
        assert!(out.status.success(), "command {args:?} failed");
        out.stdout
    };
    let repro_a = run(&["repro"]);
    let repro_b = run(&["repro"]);
    assert_eq!(repro_a, repro_b, "repro must be byte-identical across runs");
    assert!(!repro_a.is_empty());

    let check_args = [
        "random-check",
        "--theorem",
        "thm_main",
        "--trials",
        "25",
        "--seed",
        "42",
        "--n-max",
        "5",
    ];
    let check_a = run(&check_args);
    let check_b = run(&check_args);
    assert_eq!(
        check_a, check_b,
        "seeded random-check must be byte-identical across runs"
    );
    c.finish();
}
