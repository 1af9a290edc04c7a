#![allow(dead_code)]

use oqsim_composite::CondAxis;
use oqsim_core::{expm_hermitian, Circuit, DenseOperator, Gate, GateDurations, StateVector, SystemLayout, C64};
use oqsim_models::{Factor, TermList};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use oqsim_trotter::plaquette::Coupler;

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn unitary_of(layout: &SystemLayout, gates: &[Gate]) -> DenseOperator {
    let mut circuit = Circuit::new(layout.clone(), GateDurations::default());
    circuit.push_all(gates.iter().cloned()).unwrap();
    circuit.exact_unitary().unwrap()
}

pub fn apply_gates(layout: &SystemLayout, gates: &[Gate], state: &StateVector) -> StateVector {
    let mut circuit = Circuit::new(layout.clone(), GateDurations::default());
    circuit.push_all(gates.iter().cloned()).unwrap();
    let mut out = state.clone();
    circuit.apply_to(&mut out).unwrap();
    out
}

pub fn state_diff(a: &StateVector, b: &StateVector) -> f64 {
    a.amps()
        .iter()
        .zip(b.amps())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// Dense Pauli-conditioned exchange operator matching a [`Coupler`]:
/// `P_axis(qubit) (e^{i phi} a^dag b + e^{-i phi} a b^dag)`.
pub fn coupler_dense(layout: &SystemLayout, cp: &Coupler, qubit: usize) -> DenseOperator {
    let pauli = match cp.axis {
        CondAxis::X => Factor::X(qubit),
        CondAxis::Y => Factor::Y(qubit),
        CondAxis::Z => Factor::Z(qubit),
    };
    let mut terms = TermList::new();
    terms.push(
        C64::from_polar(1.0, cp.phi),
        vec![pauli.clone(), Factor::Hop { from: cp.mode_b, to: cp.mode_a }],
    );
    terms.push(
        C64::from_polar(1.0, -cp.phi),
        vec![pauli, Factor::Hop { from: cp.mode_a, to: cp.mode_b }],
    );
    terms.to_dense(layout).unwrap()
}

/// `exp(weight [A, C])` for Hermitian `A`, `C` and real `weight`.
pub fn commutator_exponential(a: &DenseOperator, c: &DenseOperator, weight: f64) -> DenseOperator {
    let comm = a.mul(c).unwrap().sub(&c.mul(a).unwrap()).unwrap();
    let k = comm.scale(C64::new(0.0, -1.0));
    expm_hermitian(&k, C64::new(0.0, weight)).unwrap()
}
