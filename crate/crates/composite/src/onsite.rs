use crate::basic::{adjoint_ops, hadamard};
use crate::geometric::zz_geometric;
use oqsim_core::{Gate, Result};
use std::f64::consts::FRAC_PI_2;

/// Anharmonic phase `exp(-i c n^2)` on a mode without a dedicated ancilla,
/// valid on the constraint sector where `X_l X_r (-1)^n = 1` for the two
/// neighbouring link qubits. A basis change turns the link pair into the mode
/// parity, which a phase-and-parity pulse then combines with the quadratic
/// phase profile; the basis change is undone afterwards.
pub fn ancilla_free_onsite(
    link_l: usize,
    link_r: usize,
    mode: usize,
    dim: usize,
    c: f64,
) -> Result<Vec<Gate>> {
    let mut basis_change: Vec<Gate> = Vec::new();
    basis_change.extend(hadamard(link_l));
    basis_change.extend(zz_geometric(link_l, link_r, mode, FRAC_PI_2)?);
    basis_change.extend(hadamard(link_l));
    basis_change.push(Gate::QubitRz { qubit: link_r, theta: -FRAC_PI_2 });
    basis_change.extend(hadamard(link_r));

    let thetas: Vec<f64> = (0..dim)
        .map(|n| {
            let quad = c * (n * n) as f64;
            if n % 2 == 0 { quad } else { -quad }
        })
        .collect();

    let mut out = basis_change.clone();
    out.push(Gate::Snap { qubit: link_r, mode, thetas });
    out.extend(adjoint_ops(&basis_change)?);
    Ok(out)
}
