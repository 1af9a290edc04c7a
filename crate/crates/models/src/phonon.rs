//! Density-coupled displacement: evolution under a qubit-density times
//! mode-quadrature interaction.

use oqsim_core::{C64, Gate};

/// Evolution for time `t` under `(g/2)(Z + 1)(a^dag + a)` on one qubit and
/// one mode: a conditional displacement for the `Z` part and an ordinary
/// displacement absorbing the unconditional part, both by `-i g t / 2`. The
/// two commute. The qubit `|0>` branch composes to a displacement by
/// `-i g t`; the `|1>` branch is the identity.
pub fn occupation_displacement_step(qubit: usize, mode: usize, g: f64, t: f64) -> Vec<Gate> {
    let alpha = C64::new(0.0, -g * t / 2.0);
    vec![
        Gate::CondDisplacement { qubit, mode, alpha },
        Gate::Displacement { mode, alpha },
    ]
}
