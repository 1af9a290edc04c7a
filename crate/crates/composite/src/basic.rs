use oqsim_core::{C64, Gate, Result};
use std::f64::consts::{FRAC_PI_2, PI};

/// Hadamard on a qubit, realized as phase and rotation pulses. The produced
/// matrix is `exp(-i pi/2) H`; the extra phase cancels whenever the list is
/// used in adjoint pairs, as in [`conjugate_by`].
pub fn hadamard(qubit: usize) -> Vec<Gate> {
    vec![
        Gate::QubitRz { qubit, theta: PI },
        Gate::QubitRphi { qubit, phi: FRAC_PI_2, theta: FRAC_PI_2 },
    ]
}

/// Phase gate `diag(1, i)` up to a global phase; intended for basis changes
/// through [`conjugate_by`], where the phase cancels.
pub fn s_gate(qubit: usize) -> Vec<Gate> {
    vec![Gate::QubitRz { qubit, theta: FRAC_PI_2 }]
}

/// Adjoint of a gate list, again in application order.
pub fn adjoint_ops(ops: &[Gate]) -> Result<Vec<Gate>> {
    let mut out = Vec::with_capacity(ops.len());
    for gate in ops.iter().rev() {
        out.extend(gate.adjoint()?);
    }
    Ok(out)
}

/// Conjugation `U M U^dag` as a list: applies the adjoint of `outer`, then
/// `inner`, then `outer`. Any global phase carried by the `outer`
/// implementation cancels between the pair.
pub fn conjugate_by(outer: &[Gate], inner: &[Gate]) -> Result<Vec<Gate>> {
    let mut out = adjoint_ops(outer)?;
    out.extend_from_slice(inner);
    out.extend_from_slice(outer);
    Ok(out)
}

/// Exchanges the contents of two modes: `|n, m> -> |m, n>` with unit phase on
/// every total-occupation sector that fits below both cutoffs.
pub fn bosonic_swap(mode_a: usize, mode_b: usize) -> Vec<Gate> {
    vec![
        Gate::Beamsplitter { mode_a, mode_b, phi: 0.0, theta: FRAC_PI_2 },
        Gate::Rotation { mode: mode_a, theta: -FRAC_PI_2 },
        Gate::Rotation { mode: mode_b, theta: -FRAC_PI_2 },
    ]
}

/// Inverse of the conditional parity gate.
pub fn cond_parity_adjoint(qubit: usize, mode: usize) -> Vec<Gate> {
    vec![
        Gate::CondParity { qubit, mode },
        Gate::Rotation { mode, theta: -PI },
    ]
}

/// Conditional displacement `exp(Z (alpha a^dag - alpha^* a))` synthesized
/// from an unconditional displacement framed by conditional parities. Exact at
/// any cutoff; useful when the native gate is reserved for calibration
/// comparisons.
pub fn cond_displacement(qubit: usize, mode: usize, alpha: C64) -> Vec<Gate> {
    vec![
        Gate::Rotation { mode, theta: -PI },
        Gate::CondParity { qubit, mode },
        Gate::Displacement { mode, alpha: C64::new(0.0, 1.0) * alpha },
        Gate::CondParity { qubit, mode },
    ]
}

/// Conditional beamsplitter
/// `exp(-i theta Z (e^{i phi} a^dag b + e^{-i phi} a b^dag))`, exact at any
/// cutoff: the qubit flips the sign of the beamsplitter angle.
pub fn cbs(qubit: usize, mode_a: usize, mode_b: usize, phi: f64, theta: f64) -> Vec<Gate> {
    vec![
        Gate::Rotation { mode: mode_a, theta: -PI },
        Gate::CondParity { qubit, mode: mode_a },
        Gate::Beamsplitter { mode_a, mode_b, phi: phi + FRAC_PI_2, theta },
        Gate::CondParity { qubit, mode: mode_a },
    ]
}

/// Doubly conditional beamsplitter
/// `exp(-i theta Z_i Z_j (e^{i phi} a^dag b + e^{-i phi} a b^dag))`. The two
/// conditional parities compose to a phase-space rotation that is exactly
/// self-inverse, so no frame correction is needed.
pub fn cbs2(
    qubit_i: usize,
    qubit_j: usize,
    mode_a: usize,
    mode_b: usize,
    phi: f64,
    theta: f64,
) -> Vec<Gate> {
    vec![
        Gate::CondParity { qubit: qubit_i, mode: mode_a },
        Gate::CondParity { qubit: qubit_j, mode: mode_a },
        Gate::Beamsplitter { mode_a, mode_b, phi: phi + PI, theta },
        Gate::CondParity { qubit: qubit_i, mode: mode_a },
        Gate::CondParity { qubit: qubit_j, mode: mode_a },
    ]
}

/// Pauli axis that conditions a composite on the qubit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CondAxis {
    X,
    Y,
    Z,
}

/// Conditional beamsplitter with the qubit condition along a chosen Pauli
/// axis, obtained by conjugating the Z-conditioned form with single-qubit
/// basis changes.
pub fn cbs_pauli(
    axis: CondAxis,
    qubit: usize,
    mode_a: usize,
    mode_b: usize,
    phi: f64,
    theta: f64,
) -> Result<Vec<Gate>> {
    let z = cbs(qubit, mode_a, mode_b, phi, theta);
    match axis {
        CondAxis::Z => Ok(z),
        CondAxis::X => conjugate_by(&hadamard(qubit), &z),
        CondAxis::Y => {
            let mut outer = hadamard(qubit);
            outer.extend(s_gate(qubit));
            conjugate_by(&outer, &z)
        }
    }
}
