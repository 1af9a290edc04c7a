use crate::basic::{conjugate_by, hadamard, s_gate};
use crate::geometric::zz_geometric;
use oqsim_core::{Gate, Result};
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

/// `exp(-i (theta/2) X_1 X_2)` via the mode-mediated ZZ phase conjugated into
/// the X basis.
pub fn xx_rotation(qubit_1: usize, qubit_2: usize, mode: usize, theta: f64) -> Result<Vec<Gate>> {
    let mut outer = hadamard(qubit_1);
    outer.extend(hadamard(qubit_2));
    conjugate_by(&outer, &zz_geometric(qubit_1, qubit_2, mode, theta)?)
}

/// `exp(-i (theta/2) Y_1 Y_2)` via the mode-mediated ZZ phase conjugated into
/// the Y basis.
pub fn yy_rotation(qubit_1: usize, qubit_2: usize, mode: usize, theta: f64) -> Result<Vec<Gate>> {
    let mut outer = hadamard(qubit_1);
    outer.extend(s_gate(qubit_1));
    outer.extend(hadamard(qubit_2));
    outer.extend(s_gate(qubit_2));
    conjugate_by(&outer, &zz_geometric(qubit_1, qubit_2, mode, theta)?)
}

/// `exp(i (theta/2) (X_1 X_2 + Y_1 Y_2))`, the excitation-exchange rotation;
/// at `theta = pi/2` it is the full iSWAP.
pub fn iswap_rotation(qubit_1: usize, qubit_2: usize, mode: usize, theta: f64) -> Result<Vec<Gate>> {
    let mut out = xx_rotation(qubit_1, qubit_2, mode, -theta)?;
    out.extend(yy_rotation(qubit_1, qubit_2, mode, -theta)?);
    Ok(out)
}

/// Controlled-Z between two qubits, exact including the overall phase.
pub fn cz(qubit_1: usize, qubit_2: usize, mode: usize) -> Result<Vec<Gate>> {
    let mut out = zz_geometric(qubit_1, qubit_2, mode, -FRAC_PI_2)?;
    out.push(Gate::QubitRz { qubit: qubit_1, theta: FRAC_PI_2 });
    out.push(Gate::QubitRz { qubit: qubit_2, theta: FRAC_PI_2 });
    out.push(Gate::GlobalPhase { theta: FRAC_PI_4 });
    Ok(out)
}

/// Fermionic swap: exchanges the two qubits and flips the sign of `|11>`, as
/// required when swapping occupation-number registers under a parity string.
pub fn fswap(qubit_1: usize, qubit_2: usize, mode: usize) -> Result<Vec<Gate>> {
    let mut out = xx_rotation(qubit_1, qubit_2, mode, -FRAC_PI_2)?;
    out.extend(yy_rotation(qubit_1, qubit_2, mode, -FRAC_PI_2)?);
    out.extend(zz_geometric(qubit_1, qubit_2, mode, -PI)?);
    out.push(Gate::QubitRz { qubit: qubit_1, theta: FRAC_PI_2 });
    out.push(Gate::QubitRz { qubit: qubit_2, theta: FRAC_PI_2 });
    Ok(out)
}
