//! Shared fixtures for the integration suites: reference systems and
//! seeded random instance generation.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rdeq::{rat, Form, Rational, SequenceSpec, SystemSpec};

/// k = 2, A = 2, B = -1, initial -2, -3, -4, 1, -1/2, -1/3, -1/4, 1:
/// residue-class products all equal (1-A)/B = 1, so the orbit has period 8.
pub fn fig1_spec() -> SystemSpec {
    SystemSpec::new(
        2,
        SequenceSpec::constant(rat(2, 1)),
        SequenceSpec::constant(rat(-1, 1)),
        vec![
            rat(-2, 1),
            rat(-3, 1),
            rat(-4, 1),
            rat(1, 1),
            rat(-1, 2),
            rat(-1, 3),
            rat(-1, 4),
            rat(1, 1),
        ],
        Form::U,
    )
    .unwrap()
}

/// k = 2, A = 2, B = 1 with positive initial data: monotone decay to zero.
pub fn fig2_spec() -> SystemSpec {
    SystemSpec::new(
        2,
        SequenceSpec::constant(rat(2, 1)),
        SequenceSpec::constant(rat(1, 1)),
        vec![
            rat(2, 1),
            rat(3, 1),
            rat(4, 1),
            rat(1, 1),
            rat(1, 2),
            rat(1, 3),
            rat(1, 4),
            rat(1, 1),
        ],
        Form::U,
    )
    .unwrap()
}

/// A nonzero rational with numerator in [-5,5]\{0} and denominator in [1,5].
pub fn nonzero_rational(rng: &mut ChaCha8Rng) -> Rational {
    let mut numer = 0i64;
    while numer == 0 {
        numer = rng.random_range(-5..=5);
    }
    rat(numer, rng.random_range(1..=5))
}

fn coefficient(rng: &mut ChaCha8Rng, periodic: bool) -> SequenceSpec {
    if periodic {
        SequenceSpec::periodic((0..4).map(|_| nonzero_rational(rng)).collect()).unwrap()
    } else {
        SequenceSpec::constant(nonzero_rational(rng))
    }
}

/// A randomized instance spanning k ∈ {1,2,3}, constant and period-4
/// coefficients, and both forms; every eighth case pins A to 1 or -1 so the
/// degenerate closed forms get exercised.
pub fn random_spec(rng: &mut ChaCha8Rng, case: usize) -> SystemSpec {
    let k = case % 3 + 1;
    let pinned_a = case % 8 >= 6;
    let a = match case % 8 {
        6 => SequenceSpec::constant(rat(1, 1)),
        7 => SequenceSpec::constant(rat(-1, 1)),
        _ => coefficient(rng, case % 2 == 0),
    };
    // Pinned-A cases keep B constant so the degenerate evaluators apply.
    let b = coefficient(rng, !pinned_a && case % 4 >= 2);
    let initial = (0..4 * k).map(|_| nonzero_rational(rng)).collect();
    let form = if case % 2 == 0 { Form::U } else { Form::Eta };
    SystemSpec::new(k, a, b, initial, form).unwrap()
}

/// A constant-coefficient instance (A ∉ {0, 1}, B ≠ 0) whose initial data
/// is constructed so every residue-class product equals (1-A)/B exactly.
pub fn class_product_spec(rng: &mut ChaCha8Rng, case: usize) -> SystemSpec {
    let k = case % 3 + 1;
    let mut a = rat(1, 1);
    while a == rat(1, 1) || a == rat(0, 1) {
        a = nonzero_rational(rng);
    }
    let b = nonzero_rational(rng);
    let target = (rat(1, 1) - &a) / &b;

    let mut initial = vec![rat(0, 1); 4 * k];
    for class in 0..4 {
        let mut partial = rat(1, 1);
        for t in 0..k - 1 {
            let value = nonzero_rational(rng);
            partial *= &value;
            initial[class + 4 * t] = value;
        }
        initial[class + 4 * (k - 1)] = &target / partial;
    }
    SystemSpec::new(
        k,
        SequenceSpec::constant(a),
        SequenceSpec::constant(b),
        initial,
        Form::U,
    )
    .unwrap()
}
