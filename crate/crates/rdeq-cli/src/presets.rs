//! Built-in example systems.

use rdeq::{rat, Form, SequenceSpec, SystemSpec};

/// `x_{n+8} = x_n/(2 - x_n x_{n+4})` with initial data
/// `-2, -3, -4, 1, -1/2, -1/3, -1/4, 1`: every residue-class product equals
/// `(1-A)/B = 1`, so the orbit is periodic with period 8.
pub fn fig1() -> SystemSpec {
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
    .expect("preset is valid")
}

/// `x_{n+8} = x_n/(2 + x_n x_{n+4})` with positive initial data
/// `2, 3, 4, 1, 1/2, 1/3, 1/4, 1`: every residue class decays to the zero
/// equilibrium.
pub fn fig2() -> SystemSpec {
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
    .expect("preset is valid")
}

/// Look up a preset by name.
pub fn by_name(name: &str) -> Option<SystemSpec> {
    match name {
        "fig1" => Some(fig1()),
        "fig2" => Some(fig2()),
        _ => None,
    }
}
