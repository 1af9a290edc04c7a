use crate::basic::adjoint_ops;
use oqsim_core::{C64, Gate, Result};
use std::f64::consts::PI;

/// Two-qubit phase `exp(-i (theta/2) Z_1 Z_2)` mediated by a mode through a
/// closed loop of conditional displacements. The mediator returns to its
/// initial state; the enclosed phase-space area supplies the phase. Accurate
/// whenever the mediator occupation stays well below the cutoff during the
/// excursion of size `sqrt(|theta|)/2`.
pub fn zz_geometric(qubit_1: usize, qubit_2: usize, mode: usize, theta: f64) -> Result<Vec<Gate>> {
    let alpha = 0.5 * theta.abs().sqrt();
    let a = C64::new(alpha, 0.0);
    let ia = C64::new(0.0, alpha);
    let list = vec![
        Gate::CondDisplacement { qubit: qubit_1, mode, alpha: -a },
        Gate::CondDisplacement { qubit: qubit_2, mode, alpha: ia },
        Gate::CondDisplacement { qubit: qubit_1, mode, alpha: a },
        Gate::CondDisplacement { qubit: qubit_2, mode, alpha: -ia },
    ];
    if theta >= 0.0 { Ok(list) } else { adjoint_ops(&list) }
}

/// Conditional displacement whose sign is additionally conditioned on a
/// second qubit: displaces the mode by `-i beta Z_i Z_j`. Exact at any cutoff.
pub fn ccd(qubit_i: usize, qubit_j: usize, mode: usize, beta: C64) -> Vec<Gate> {
    vec![
        Gate::CondParity { qubit: qubit_j, mode },
        Gate::Rotation { mode, theta: -PI },
        Gate::CondDisplacement { qubit: qubit_i, mode, alpha: beta },
        Gate::CondParity { qubit: qubit_j, mode },
    ]
}

/// Four-qubit phase `exp(-i (theta/2) Z_1 Z_2 Z_3 Z_4)` from a displacement
/// loop whose legs are doubly conditioned, pairing the qubits two by two.
pub fn zzzz_geometric(qubits: [usize; 4], mode: usize, theta: f64) -> Result<Vec<Gate>> {
    let alpha = 0.5 * theta.abs().sqrt();
    let a = C64::new(alpha, 0.0);
    let ia = C64::new(0.0, alpha);
    let [q1, q2, q3, q4] = qubits;
    let mut list = Vec::new();
    list.extend(ccd(q1, q2, mode, -ia));
    list.extend(ccd(q3, q4, mode, -a));
    list.extend(ccd(q1, q2, mode, ia));
    list.extend(ccd(q3, q4, mode, a));
    if theta >= 0.0 { Ok(list) } else { adjoint_ops(&list) }
}

/// Group commutator `A B A^dag B^dag` as a list. For `A = exp(X)` and
/// `B = exp(Y)` with small generators it approximates `exp([X, Y])` with a
/// third-order error.
pub fn bch_commutator(a: &[Gate], b: &[Gate]) -> Result<Vec<Gate>> {
    let mut out = adjoint_ops(b)?;
    out.extend(adjoint_ops(a)?);
    out.extend_from_slice(b);
    out.extend_from_slice(a);
    Ok(out)
}
