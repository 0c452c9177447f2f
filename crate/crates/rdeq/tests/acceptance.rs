//! Acceptance suite: one test per criterion, each ending in a printed
//! pass line (run with `cargo test --test acceptance -- --nocapture` to see
//! them).

mod common;

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rdeq::analysis::{
    char_poly_residual, char_roots_nonzero, char_roots_zero, classify, detect_period,
    predict_period, Classification,
};
use rdeq::closed_form::{
    eval_eta, eval_eta_a_minus_one, eval_eta_a_one, eval_u_constant, eval_u_general,
};
use rdeq::invariants::{check_r_recurrence, r_from_orbit, symmetry_roots, u_from_r};
use rdeq::{rat, Rational, SequenceSpec, SystemSpec};

const SEED: u64 = 0x5eed_4bde;

fn one() -> Rational {
    rat(1, 1)
}

/// Criterion 1: every closed-form evaluator agrees bit-exactly with the
/// iteration oracle on 200 randomized systems, at all indices ≤ 48k
/// (forbidden orbits compared up to their truncation).
#[test]
fn criterion_1_oracle_equivalence() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut checks = 0usize;
    for case in 0..200 {
        let spec = common::random_spec(&mut rng, case);
        let order = spec.order();
        let constant =
            spec.a().constant_value().is_some() && spec.b().constant_value().is_some();
        let minus_one = -one();
        let a_is_one = constant && spec.a().constant_value() == Some(&one());
        let a_is_minus_one = constant && spec.a().constant_value() == Some(&minus_one);

        let orbit = spec.iterate(48 * spec.k());
        for (index, expected) in orbit.terms().iter().enumerate() {
            let (n, i) = (index / order, index % order);
            assert_eq!(
                &eval_u_general(&spec, n, i).unwrap(),
                expected,
                "general evaluator diverged: case {case}, index {index}"
            );
            assert_eq!(
                &eval_eta(&spec, n, i).unwrap(),
                expected,
                "eta evaluator diverged: case {case}, index {index}"
            );
            checks += 2;
            if constant {
                assert_eq!(
                    &eval_u_constant(&spec, n, i).unwrap(),
                    expected,
                    "constant evaluator diverged: case {case}, index {index}"
                );
                checks += 1;
            }
            if a_is_one {
                assert_eq!(
                    &eval_eta_a_one(&spec, n, i).unwrap(),
                    expected,
                    "a=1 evaluator diverged: case {case}, index {index}"
                );
                checks += 1;
            }
            if a_is_minus_one {
                assert_eq!(
                    &eval_eta_a_minus_one(&spec, n, order - 1 - i).unwrap(),
                    expected,
                    "a=-1 evaluator diverged: case {case}, index {index}"
                );
                checks += 1;
            }
        }
    }
    println!(
        "criterion 1 (oracle equivalence): pass — {checks} exact checks over 200 specs in {:.2?}",
        start.elapsed()
    );
}

/// Criterion 2: the period-8 reference orbit detects period 8 exactly and
/// repeats itself at distance 8 for n = 0 … 72.
#[test]
fn criterion_2_period_eight_reproduction() {
    let start = Instant::now();
    let spec = common::fig1_spec();
    let orbit = spec.iterate(80);
    assert!(orbit.is_complete());
    assert_eq!(detect_period(&orbit, 16).unwrap(), Some(8));
    for n in 0..=72 {
        assert_eq!(
            orbit.get(n),
            orbit.get(n + 8),
            "orbit failed to repeat at n = {n}"
        );
    }
    println!(
        "criterion 2 (period-8 reproduction): pass in {:.2?}",
        start.elapsed()
    );
}

/// Criterion 3: the decaying reference orbit shrinks strictly along every
/// residue class mod 8 for the first twenty blocks, and |x_n| < 10⁻³ for
/// all n ≥ 160 (checked through n = 400).
#[test]
fn criterion_3_decay_to_zero() {
    let start = Instant::now();
    let spec = common::fig2_spec();
    let orbit = spec.iterate(400);
    assert!(orbit.is_complete());
    let terms = orbit.terms();
    for i in 0..8 {
        for n in 0..=19usize {
            assert!(
                terms[8 * (n + 1) + i].abs() < terms[8 * n + i].abs(),
                "class {i} failed to shrink between blocks {n} and {}",
                n + 1
            );
        }
    }
    let bound = rat(1, 1000);
    for (n, term) in terms.iter().enumerate().skip(160) {
        assert!(
            term.abs() < bound,
            "|x_{n}| = {term} is not below 1/1000"
        );
    }
    println!(
        "criterion 3 (decay to zero): pass in {:.2?}",
        start.elapsed()
    );
}

/// Criterion 4: 50 randomized systems whose residue-class products equal
/// (1-A)/B exactly all detect a period dividing 4k.
#[test]
fn criterion_4_class_product_periodicity() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0x4);
    for case in 0..50 {
        let spec = common::class_product_spec(&mut rng, case);
        let order = spec.order();
        let prediction = predict_period(&spec)
            .unwrap_or_else(|| panic!("case {case}: no prediction for matching products"));
        assert_eq!(prediction.period, order);
        let orbit = spec.iterate(3 * order);
        assert!(orbit.is_complete(), "case {case}: orbit hit forbidden set");
        let detected = detect_period(&orbit, order)
            .unwrap()
            .unwrap_or_else(|| panic!("case {case}: no period detected"));
        assert_eq!(
            order % detected,
            0,
            "case {case}: detected {detected} does not divide {order}"
        );
    }
    println!(
        "criterion 4 (class-product periodicity, 50 specs): pass in {:.2?}",
        start.elapsed()
    );
}

fn minus_one_spec(k: usize, b: Rational, initial: Vec<Rational>) -> SystemSpec {
    SystemSpec::new(
        k,
        SequenceSpec::constant(rat(-1, 1)),
        SequenceSpec::constant(b),
        initial,
        rdeq::Form::U,
    )
    .unwrap()
}

fn class_brackets(spec: &SystemSpec) -> Vec<Rational> {
    let b = spec.b().constant_value().unwrap();
    (0..4)
        .map(|p| {
            let mut product = one();
            for t in 0..spec.k() {
                product *= &spec.initial()[p + 4 * t];
            }
            b * product - one()
        })
        .collect()
}

/// Criterion 5: the A = -1 family — 8k-periodic returns for odd k, period
/// dividing 8 for even k with unit brackets, and no short period otherwise.
#[test]
fn criterion_5_minus_one_suites() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0x5);

    // k = 3 (odd): η_{8kn-j} = η_{-j} for n = 1, 2, 3, via the closed form
    // and via the orbit itself.
    let spec = loop {
        let b = common::nonzero_rational(&mut rng);
        let initial = (0..12).map(|_| common::nonzero_rational(&mut rng)).collect();
        let candidate = minus_one_spec(3, b, initial);
        if class_brackets(&candidate).iter().all(|w| w != &rat(0, 1)) {
            break candidate;
        }
    };
    let orbit = spec.iterate(24 * 3 + 11);
    assert!(orbit.is_complete());
    for n in 1..=3usize {
        for j in 0..12 {
            let eta_minus_j = &spec.initial()[11 - j];
            // η_{8kn-j} is the block-2n value of offset j.
            assert_eq!(
                &eval_eta_a_minus_one(&spec, 2 * n, j).unwrap(),
                eta_minus_j,
                "closed form failed the 8k return at n={n}, j={j}"
            );
            assert_eq!(
                orbit.get(24 * n + 11 - j),
                Some(eta_minus_j),
                "orbit failed the 8k return at n={n}, j={j}"
            );
        }
    }

    // k = 2 (even) with every bracket -1 + bP = 1: period divides 8.
    let b = common::nonzero_rational(&mut rng);
    let mut initial = vec![rat(0, 1); 8];
    for p in 0..4 {
        let value = common::nonzero_rational(&mut rng);
        initial[p + 4] = rat(2, 1) / (&b * &value);
        initial[p] = value;
    }
    let unit = minus_one_spec(2, b, initial);
    assert!(class_brackets(&unit).iter().all(|w| w == &one()));
    let orbit = unit.iterate(48);
    let detected = detect_period(&orbit, 16).unwrap().expect("periodic orbit");
    assert_eq!(8 % detected, 0, "detected {detected} does not divide 8");

    // k = 2 with brackets off the unit values: no period up to 16.
    let generic = loop {
        let b = common::nonzero_rational(&mut rng);
        let initial = (0..8).map(|_| common::nonzero_rational(&mut rng)).collect();
        let candidate = minus_one_spec(2, b, initial);
        let brackets = class_brackets(&candidate);
        if brackets
            .iter()
            .all(|w| w != &rat(0, 1) && w != &one() && w != &rat(-1, 1))
        {
            break candidate;
        }
    };
    let orbit = generic.iterate(48);
    assert!(orbit.is_complete());
    assert_eq!(detect_period(&orbit, 16).unwrap(), None);

    println!(
        "criterion 5 (A = -1 suites): pass in {:.2?}",
        start.elapsed()
    );
}

/// Criterion 6: zero-equilibrium root moduli obey |A|^(-1/4k) across twenty
/// parameter pairs; A = 2, k = 2 classifies as locally asymptotically
/// stable with a unit-modulus root in the nonzero-equilibrium set; every
/// enumerated root satisfies its polynomial to 10⁻⁹.
#[test]
fn criterion_6_stability() {
    let start = Instant::now();
    let a_values = [
        rat(2, 1),
        rat(1, 2),
        rat(-3, 1),
        rat(5, 2),
        rat(-1, 1),
        rat(3, 1),
        rat(-5, 3),
        rat(7, 1),
        rat(1, 5),
        rat(-2, 1),
    ];
    let mut pairs = 0;
    for a in &a_values {
        for k in [1usize, 2] {
            let set = char_roots_zero(a, k).unwrap();
            assert_eq!(set.len(), 4 * k);
            let expected = rdeq::rational::to_f64(a).abs().powf(-1.0 / (4.0 * k as f64));
            for modulus in &set.moduli {
                assert!(
                    (modulus - expected).abs() < 1e-12,
                    "A={a} k={k}: modulus {modulus} != {expected}"
                );
            }
            pairs += 1;
        }
    }
    assert_eq!(pairs, 20);

    let report = classify(&common::fig2_spec()).unwrap();
    assert_eq!(
        report.equilibria[0].classification,
        Classification::LocallyAsymptoticallyStable
    );
    let nonzero = report.nonzero_char_roots.as_ref().unwrap();
    assert!(
        nonzero.moduli.iter().any(|m| (m - 1.0).abs() < 1e-12),
        "no unit-modulus root in the nonzero-equilibrium set"
    );

    for a in &a_values {
        for k in [1usize, 2, 3] {
            if a == &one() {
                continue;
            }
            let set = char_roots_nonzero(a, k).unwrap();
            for root in &set.roots {
                let residual = char_poly_residual(a, k, root.value);
                assert!(
                    residual < 1e-9,
                    "A={a} k={k}: residual {residual} at {:?}",
                    root.value
                );
            }
        }
    }
    println!("criterion 6 (stability): pass in {:.2?}", start.elapsed());
}

/// Criterion 7: symmetry certificates for k = 2 … 6 hold exactly 4(k-1)
/// exponents, all passing the exact criterion with numeric residuals below
/// 10⁻¹².
#[test]
fn criterion_7_symmetry_certificates() {
    let start = Instant::now();
    for k in 2..=6 {
        let cert = symmetry_roots(k);
        assert_eq!(cert.exponents.len(), 4 * (k - 1), "k = {k}");
        for check in &cert.checks {
            assert!(check.exact, "k={k} m={} failed exactly", check.exponent);
            assert!(
                check.residual < 1e-12,
                "k={k} m={}: residual {}",
                check.exponent,
                check.residual
            );
        }
    }
    println!(
        "criterion 7 (symmetry certificates): pass in {:.2?}",
        start.elapsed()
    );
}

/// Criterion 8: on every complete randomized orbit of criterion 1, the
/// invariant obeys r_{n+4} = A_n r_n + B_n exactly and the telescoped
/// reconstruction agrees with the oracle everywhere.
#[test]
fn criterion_8_invariant_suite() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut orbits = 0usize;
    for case in 0..200 {
        let spec = common::random_spec(&mut rng, case);
        let order = spec.order();
        let orbit = spec.iterate(48 * spec.k());
        if !orbit.is_complete() {
            continue;
        }
        let series = r_from_orbit(&orbit, spec.k()).unwrap();
        assert!(
            check_r_recurrence(&series, &spec),
            "case {case}: affine recurrence violated"
        );
        for (index, expected) in orbit.terms().iter().enumerate() {
            let (n, i) = (index / order, index % order);
            assert_eq!(
                &u_from_r(&spec, n, i).unwrap(),
                expected,
                "case {case}: reconstruction diverged at index {index}"
            );
        }
        orbits += 1;
    }
    assert!(orbits > 100, "too few complete orbits ({orbits}) to be meaningful");
    println!(
        "criterion 8 (invariant suite): pass — {orbits} complete orbits in {:.2?}",
        start.elapsed()
    );
}
