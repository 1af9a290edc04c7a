#![allow(dead_code)]

use oqsim_core::{
    expm_taylor, AxisId, Circuit, DenseOperator, Gate, GateDurations, StateVector, SystemLayout,
    C64,
};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const I: C64 = C64::new(0.0, 1.0);

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

pub fn phase(phi: f64) -> C64 {
    C64::new(phi.cos(), phi.sin())
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Dense matrix of a gate list in application order.
pub fn unitary_of(layout: &SystemLayout, gates: &[Gate]) -> DenseOperator {
    let mut circuit = Circuit::new(layout.clone(), GateDurations::default());
    circuit.push_all(gates.iter().cloned()).unwrap();
    circuit.exact_unitary().unwrap()
}

/// Applies a gate list to a state in place.
pub fn apply_list(layout: &SystemLayout, gates: &[Gate], state: &mut StateVector) {
    let mut circuit = Circuit::new(layout.clone(), GateDurations::default());
    circuit.push_all(gates.iter().cloned()).unwrap();
    circuit.apply_to(state).unwrap();
}

/// `exp(-i H)` for a Hermitian full-space generator, via the series oracle.
pub fn expm_gen(h: &DenseOperator) -> DenseOperator {
    expm_taylor(&h.scale(c(0.0, -1.0)))
}

pub fn full_annihilation(layout: &SystemLayout, mode: usize) -> DenseOperator {
    let local = DenseOperator::annihilation(layout.mode_dim(mode));
    DenseOperator::embedded(layout, &[AxisId::Mode(mode)], &local).unwrap()
}

pub fn full_number(layout: &SystemLayout, mode: usize) -> DenseOperator {
    let local = DenseOperator::number(layout.mode_dim(mode));
    DenseOperator::embedded(layout, &[AxisId::Mode(mode)], &local).unwrap()
}

pub fn full_pauli(layout: &SystemLayout, qubit: usize, which: char) -> DenseOperator {
    let local = match which {
        'x' => DenseOperator::pauli_x(),
        'y' => DenseOperator::pauli_y(),
        _ => DenseOperator::pauli_z(),
    };
    DenseOperator::embedded(layout, &[AxisId::Qubit(qubit)], &local).unwrap()
}

/// Projector onto the listed occupations of `mode`, embedded.
pub fn full_marks_projector(layout: &SystemLayout, mode: usize, marks: &[usize]) -> DenseOperator {
    let dim = layout.mode_dim(mode);
    let mut local = DenseOperator::zeros(dim);
    for &n in marks {
        local.set(n, n, c(1.0, 0.0));
    }
    DenseOperator::embedded(layout, &[AxisId::Mode(mode)], &local).unwrap()
}

/// `e^{i phi} a^dag b + h.c.` between two modes, embedded.
pub fn full_hop(layout: &SystemLayout, mode_a: usize, mode_b: usize, phi: f64) -> DenseOperator {
    let t = full_annihilation(layout, mode_a)
        .dagger()
        .mul(&full_annihilation(layout, mode_b))
        .unwrap()
        .scale(phase(phi));
    t.add(&t.dagger()).unwrap()
}

/// Normalized random complex vector of the given length.
pub fn random_local(len: usize, rng: &mut ChaCha8Rng) -> Vec<C64> {
    let mut v: Vec<C64> = (0..len)
        .map(|_| c(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5))
        .collect();
    let norm: f64 = v.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    for a in &mut v {
        *a /= norm;
    }
    v
}

/// Product state from per-mode and per-qubit local vectors.
pub fn product_state(
    layout: &SystemLayout,
    mode_vecs: &[Vec<C64>],
    qubit_vecs: &[Vec<C64>],
) -> StateVector {
    let dim = layout.dim();
    let mut amps = vec![c(0.0, 0.0); dim];
    for (idx, amp) in amps.iter_mut().enumerate() {
        let (fock, bits) = layout.decompose(idx);
        let mut a = c(1.0, 0.0);
        for (m, &n) in fock.iter().enumerate() {
            a *= mode_vecs[m][n];
        }
        for (q, &b) in bits.iter().enumerate() {
            a *= qubit_vecs[q][b as usize];
        }
        *amp = a;
    }
    StateVector::from_amplitudes(layout, amps).unwrap()
}

/// Fock basis vector of the given length.
pub fn fock_vec(len: usize, n: usize) -> Vec<C64> {
    let mut v = vec![c(0.0, 0.0); len];
    v[n] = c(1.0, 0.0);
    v
}

/// Largest amplitude difference between two states.
pub fn state_diff(a: &StateVector, b: &StateVector) -> f64 {
    a.amps()
        .iter()
        .zip(b.amps())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// Restriction of a full-space matrix to the block where `qubit` is `|0>` on
/// both sides, returned over the remaining axes in layout order.
pub fn qubit_zero_block(layout: &SystemLayout, qubit: usize, m: &DenseOperator) -> DenseOperator {
    let stride = layout.stride(AxisId::Qubit(qubit));
    let dim = layout.dim();
    let rows: Vec<usize> = (0..dim)
        .filter(|idx| (idx / stride) % 2 == 0)
        .collect();
    let mut out = DenseOperator::zeros(rows.len());
    for (r, &fr) in rows.iter().enumerate() {
        for (s, &fs) in rows.iter().enumerate() {
            out.set(r, s, m.at(fr, fs));
        }
    }
    out
}

/// Largest coupling from the `|0>` block of `qubit` into its `|1>` block.
pub fn qubit_leakage(layout: &SystemLayout, qubit: usize, m: &DenseOperator) -> f64 {
    let stride = layout.stride(AxisId::Qubit(qubit));
    let dim = layout.dim();
    let mut worst = 0.0_f64;
    for r in 0..dim {
        if (r / stride) % 2 == 0 {
            continue;
        }
        for s in 0..dim {
            if (s / stride) % 2 == 0 {
                worst = worst.max(m.at(r, s).norm());
            }
        }
    }
    worst
}
