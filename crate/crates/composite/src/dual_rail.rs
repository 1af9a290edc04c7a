use crate::basic::{cbs, hadamard};
use oqsim_core::{C64, Gate};
use std::f64::consts::PI;

/// Conditional parity with the qubit condition along X, used to map mode
/// parity onto an ancilla prepared in `|0>`. The produced matrix is
/// `-exp(-i (pi/2) X n)`; the sign cancels when the composite appears in
/// pairs.
pub fn cond_parity_x(qubit: usize, mode: usize) -> Vec<Gate> {
    let mut out = hadamard(qubit);
    out.push(Gate::CondParity { qubit, mode });
    out.extend(hadamard(qubit));
    out
}

/// Phase `exp(-i (theta/2) Z_i Z_j)` between two dual-rail qubits, where each
/// logical Z is `1 - 2 n` on the occupied rail. Exact, including the overall
/// phase, for rail occupations 0 and 1; the ancilla starts and ends in `|0>`.
pub fn dual_rail_zz(ancilla: usize, rail_i: usize, rail_j: usize, theta: f64) -> Vec<Gate> {
    let mut out = cond_parity_x(ancilla, rail_i);
    out.push(Gate::CondRotation { qubit: ancilla, mode: rail_j, theta: -2.0 * theta });
    out.extend(cond_parity_x(ancilla, rail_i));
    out.push(Gate::Rotation { mode: rail_i, theta: PI - theta });
    out.push(Gate::QubitRz { qubit: ancilla, theta });
    out
}

/// Displacement of a target mode conditioned on a dual-rail logical Z:
/// `D((1 - 2 n_rail) alpha)`. Exact at any cutoff for rail occupations 0 and
/// 1; the ancilla starts and ends in `|0>`.
pub fn dual_rail_cond_displacement(
    ancilla: usize,
    rail: usize,
    target: usize,
    alpha: C64,
) -> Vec<Gate> {
    let mut out = vec![Gate::Rotation { mode: rail, theta: PI }];
    out.extend(cond_parity_x(ancilla, rail));
    out.push(Gate::CondDisplacement { qubit: ancilla, mode: target, alpha });
    out.extend(cond_parity_x(ancilla, rail));
    out
}

/// Displacement of a target mode conditioned on the product of two dual-rail
/// logical Zs: `D((1 - 2 n_i)(1 - 2 n_j) alpha)`.
pub fn dual_rail_doubly_cond_displacement(
    ancilla: usize,
    rail_i: usize,
    rail_j: usize,
    target: usize,
    alpha: C64,
) -> Vec<Gate> {
    let mut out = vec![
        Gate::Rotation { mode: rail_i, theta: PI },
        Gate::Rotation { mode: rail_j, theta: PI },
    ];
    out.extend(cond_parity_x(ancilla, rail_i));
    out.extend(cond_parity_x(ancilla, rail_j));
    out.push(Gate::CondDisplacement { qubit: ancilla, mode: target, alpha });
    out.extend(cond_parity_x(ancilla, rail_j));
    out.extend(cond_parity_x(ancilla, rail_i));
    out
}

/// Beamsplitter between two modes conditioned on a dual-rail logical Z:
/// `exp(-i theta (1 - 2 n_rail)(e^{i phi} a_i^dag a_j + h.c.))`. Exact for
/// rail occupations 0 and 1; the ancilla starts and ends in `|0>`.
pub fn dual_rail_gauge_hopping(
    ancilla: usize,
    rail: usize,
    mode_i: usize,
    mode_j: usize,
    phi: f64,
    theta: f64,
) -> Vec<Gate> {
    let mut out = vec![Gate::Rotation { mode: rail, theta: PI }];
    out.extend(cond_parity_x(ancilla, rail));
    out.extend(cbs(ancilla, mode_i, mode_j, phi, theta));
    out.extend(cond_parity_x(ancilla, rail));
    out
}
