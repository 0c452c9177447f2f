//! Fixtures shared by the unit tests.

use crate::rational::{rat, Rational};
use crate::sequence::SequenceSpec;
use crate::system::{Form, SystemSpec};

pub(crate) fn constant_spec(
    k: usize,
    a: Rational,
    b: Rational,
    initial: Vec<Rational>,
) -> SystemSpec {
    SystemSpec::new(
        k,
        SequenceSpec::constant(a),
        SequenceSpec::constant(b),
        initial,
        Form::U,
    )
    .unwrap()
}

/// k = 2, A = 2, B = -1 with initial data whose residue-class products all
/// equal (1-A)/B = 1; the orbit returns to itself every 8 terms.
pub(crate) fn period_eight_spec() -> SystemSpec {
    constant_spec(
        2,
        rat(2, 1),
        rat(-1, 1),
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
    )
}

/// k = 2, A = 2, B = 1 with positive initial data; every residue class
/// decays monotonically to zero.
pub(crate) fn decaying_spec() -> SystemSpec {
    constant_spec(
        2,
        rat(2, 1),
        rat(1, 1),
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
    )
}

/// u_{n+4} = u_n/(1 + u_n) from all-ones data: u_{4n} = 1/(n+1).
pub(crate) fn harmonic_spec() -> SystemSpec {
    constant_spec(1, rat(1, 1), rat(1, 1), vec![rat(1, 1); 4])
}
