#![allow(dead_code)]

use std::sync::Arc;

use oqsim_core::{expm_hermitian, AxisId, DenseOperator, Gate, SystemLayout, C64};
use rand::Rng;

pub const I: C64 = C64::new(0.0, 1.0);

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// Annihilation operator of `mode` embedded in the full space.
pub fn full_annihilation(layout: &SystemLayout, mode: usize) -> DenseOperator {
    let local = DenseOperator::annihilation(layout.mode_dim(mode));
    DenseOperator::embedded(layout, &[AxisId::Mode(mode)], &local).unwrap()
}

/// Number operator of `mode` embedded in the full space.
pub fn full_number(layout: &SystemLayout, mode: usize) -> DenseOperator {
    let local = DenseOperator::number(layout.mode_dim(mode));
    DenseOperator::embedded(layout, &[AxisId::Mode(mode)], &local).unwrap()
}

/// Fock projector |n><n| of `mode` embedded in the full space.
pub fn full_projector(layout: &SystemLayout, mode: usize, n: usize) -> DenseOperator {
    let dim = layout.mode_dim(mode);
    let mut local = DenseOperator::zeros(dim);
    local.set(n, n, c(1.0, 0.0));
    DenseOperator::embedded(layout, &[AxisId::Mode(mode)], &local).unwrap()
}

/// Pauli operator of `qubit` embedded in the full space.
pub fn full_pauli(layout: &SystemLayout, qubit: usize, which: char) -> DenseOperator {
    let local = match which {
        'x' => DenseOperator::pauli_x(),
        'y' => DenseOperator::pauli_y(),
        _ => DenseOperator::pauli_z(),
    };
    DenseOperator::embedded(layout, &[AxisId::Qubit(qubit)], &local).unwrap()
}

/// Full-space Hermitian generator `H` such that the gate equals `exp(-i H)`.
///
/// Built from embedded primitives only, independent of the gate applier's
/// local-matrix conventions, so it can serve as an oracle for them.
pub fn generator(layout: &SystemLayout, gate: &Gate) -> Option<DenseOperator> {
    let dim = layout.dim();
    match gate {
        Gate::Rotation { mode, theta } => Some(full_number(layout, *mode).scale(c(*theta, 0.0))),
        Gate::Displacement { mode, alpha } => {
            let adag = full_annihilation(layout, *mode).dagger();
            let g = adag.scale(*alpha).add(&adag.dagger().scale(-alpha.conj())).unwrap();
            Some(g.scale(I))
        }
        Gate::Beamsplitter { mode_a, mode_b, phi, theta } => {
            let coupling = full_annihilation(layout, *mode_a)
                .dagger()
                .mul(&full_annihilation(layout, *mode_b))
                .unwrap()
                .scale((I * *phi).exp());
            Some(coupling.add(&coupling.dagger()).unwrap().scale(c(*theta, 0.0)))
        }
        Gate::QubitRz { qubit, theta } => Some(full_pauli(layout, *qubit, 'z').scale(c(theta / 2.0, 0.0))),
        Gate::QubitRphi { qubit, phi, theta } => {
            let axis = full_pauli(layout, *qubit, 'x')
                .scale(c(phi.cos(), 0.0))
                .add(&full_pauli(layout, *qubit, 'y').scale(c(phi.sin(), 0.0)))
                .unwrap();
            Some(axis.scale(c(theta / 2.0, 0.0)))
        }
        Gate::CondRotation { qubit, mode, theta } => {
            let zn = full_pauli(layout, *qubit, 'z').mul(&full_number(layout, *mode)).unwrap();
            Some(zn.scale(c(theta / 2.0, 0.0)))
        }
        Gate::CondParity { qubit, mode } => {
            let zn = full_pauli(layout, *qubit, 'z').mul(&full_number(layout, *mode)).unwrap();
            Some(zn.scale(c(std::f64::consts::FRAC_PI_2, 0.0)))
        }
        Gate::CondDisplacement { qubit, mode, alpha } => {
            let adag = full_annihilation(layout, *mode).dagger();
            let g = adag.scale(*alpha).add(&adag.dagger().scale(-alpha.conj())).unwrap();
            Some(full_pauli(layout, *qubit, 'z').mul(&g).unwrap().scale(I))
        }
        Gate::Snap { qubit, mode, thetas } => {
            let mut h = DenseOperator::zeros(dim);
            for (n, &t) in thetas.iter().enumerate() {
                h = h.add(&full_projector(layout, *mode, n).scale(c(t, 0.0))).unwrap();
            }
            Some(full_pauli(layout, *qubit, 'z').mul(&h).unwrap())
        }
        Gate::Sqr { qubit, mode, thetas, phis } => {
            let mut h = DenseOperator::zeros(dim);
            for (n, (&t, &p)) in thetas.iter().zip(phis).enumerate() {
                let axis = full_pauli(layout, *qubit, 'x')
                    .scale(c(p.cos(), 0.0))
                    .add(&full_pauli(layout, *qubit, 'y').scale(c(p.sin(), 0.0)))
                    .unwrap();
                let block = axis.mul(&full_projector(layout, *mode, n)).unwrap();
                h = h.add(&block.scale(c(t / 2.0, 0.0))).unwrap();
            }
            Some(h)
        }
        Gate::FockPhase { mode, thetas, .. } => {
            let mut h = DenseOperator::zeros(dim);
            for (n, &t) in thetas.iter().enumerate() {
                h = h.add(&full_projector(layout, *mode, n).scale(c(t, 0.0))).unwrap();
            }
            Some(h)
        }
        Gate::GlobalPhase { theta } => Some(DenseOperator::identity(dim).scale(c(-theta, 0.0))),
        Gate::Idle { .. } => Some(DenseOperator::zeros(dim)),
        Gate::EffectiveUnitary { .. } | Gate::MeasureQubit { .. } | Gate::ResetQubit { .. } => None,
    }
}

/// Expected unitary of a gate, via the independent Taylor-series exponential.
pub fn oracle_unitary(layout: &SystemLayout, gate: &Gate) -> DenseOperator {
    match gate {
        Gate::EffectiveUnitary { modes, qubits, matrix, .. } => {
            let axes: Vec<AxisId> = modes
                .iter()
                .map(|&m| AxisId::Mode(m))
                .chain(qubits.iter().map(|&q| AxisId::Qubit(q)))
                .collect();
            DenseOperator::embedded(layout, &axes, matrix).unwrap()
        }
        _ => {
            let h = generator(layout, gate).expect("gate has no generator");
            oqsim_core::expm_taylor(&h.scale(-I))
        }
    }
}

/// Random unitary matrix of the given dimension.
pub fn random_unitary(dim: usize, rng: &mut impl Rng) -> DenseOperator {
    let h = DenseOperator::from_fn(dim, |r, c_| {
        if r <= c_ {
            C64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5)
        } else {
            C64::new(0.0, 0.0)
        }
    });
    let herm = h.add(&h.dagger()).unwrap();
    expm_hermitian(&herm, -I).unwrap()
}

fn uniform_pm2(rng: &mut impl Rng) -> f64 {
    rng.random::<f64>() * 4.0 - 2.0
}

/// Draws a random non-measurement gate valid for `layout`.
pub fn random_gate(layout: &SystemLayout, rng: &mut impl Rng) -> Gate {
    let n_modes = layout.n_modes();
    let n_qubits = layout.n_qubits();
    let mut kinds: Vec<u8> = Vec::new();
    if n_modes > 0 {
        kinds.extend_from_slice(&[0, 1, 13]);
    }
    if n_modes > 1 {
        kinds.push(2);
    }
    if n_qubits > 0 {
        kinds.extend_from_slice(&[3, 4]);
    }
    if n_modes > 0 && n_qubits > 0 {
        kinds.extend_from_slice(&[5, 6, 7, 8, 9]);
    }
    kinds.push(12);
    let kind = kinds[rng.random_range(0..kinds.len())];
    let mode = if n_modes > 0 { rng.random_range(0..n_modes) } else { 0 };
    let qubit = if n_qubits > 0 { rng.random_range(0..n_qubits) } else { 0 };
    match kind {
        0 => Gate::Rotation { mode, theta: uniform_pm2(rng) },
        1 => Gate::Displacement { mode, alpha: c(0.4 * uniform_pm2(rng), 0.4 * uniform_pm2(rng)) },
        2 => {
            let other = (mode + 1 + rng.random_range(0..n_modes - 1)) % n_modes;
            Gate::Beamsplitter { mode_a: mode, mode_b: other, phi: uniform_pm2(rng), theta: uniform_pm2(rng) }
        }
        3 => Gate::QubitRz { qubit, theta: uniform_pm2(rng) },
        4 => Gate::QubitRphi { qubit, phi: uniform_pm2(rng), theta: uniform_pm2(rng) },
        5 => Gate::CondRotation { qubit, mode, theta: uniform_pm2(rng) },
        6 => Gate::CondParity { qubit, mode },
        7 => Gate::CondDisplacement { qubit, mode, alpha: c(0.3 * uniform_pm2(rng), 0.3 * uniform_pm2(rng)) },
        8 => {
            let thetas = (0..layout.mode_dim(mode)).map(|_| uniform_pm2(rng)).collect();
            Gate::Snap { qubit, mode, thetas }
        }
        9 => {
            let thetas: Vec<f64> = (0..layout.mode_dim(mode)).map(|_| uniform_pm2(rng)).collect();
            let phis = (0..layout.mode_dim(mode)).map(|_| uniform_pm2(rng)).collect();
            Gate::Sqr { qubit, mode, thetas, phis }
        }
        13 => {
            let thetas = (0..layout.mode_dim(mode)).map(|_| uniform_pm2(rng)).collect();
            Gate::FockPhase { mode, thetas, parked_qubit: None }
        }
        _ => Gate::GlobalPhase { theta: uniform_pm2(rng) },
    }
}

/// Random EffectiveUnitary gate on one mode and one qubit.
pub fn random_effective_unitary(layout: &SystemLayout, mode: usize, qubit: usize, rng: &mut impl Rng) -> Gate {
    let dim = layout.mode_dim(mode) * 2;
    Gate::EffectiveUnitary {
        modes: vec![mode],
        qubits: vec![qubit],
        matrix: Arc::new(random_unitary(dim, rng)),
        duration: 1e-6,
        label: "test_block".into(),
    }
}
