#![allow(dead_code)]

use oqsim_core::{
    C64, Circuit, DenseOperator, Gate, GateDurations, StateVector, SystemLayout, AxisId,
};
use oqsim_models::{Factor, Term, TermList};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

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

pub fn apply_gates(state: &mut StateVector, gates: &[Gate]) {
    let mut circuit = Circuit::new(state.layout().clone(), GateDurations::default());
    circuit.push_all(gates.iter().cloned()).unwrap();
    circuit.apply_to(state).unwrap();
}

pub fn state_diff(a: &StateVector, b: &StateVector) -> f64 {
    a.amps()
        .iter()
        .zip(b.amps())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// Dense image of one factor, built from embedded core operators so the
/// construction is independent of the term-list applier.
pub fn factor_dense(layout: &SystemLayout, factor: &Factor) -> DenseOperator {
    let qubit_local = |m: DenseOperator, q: usize| {
        DenseOperator::embedded(layout, &[AxisId::Qubit(q)], &m).unwrap()
    };
    let mode_local = |m: DenseOperator, mode: usize| {
        DenseOperator::embedded(layout, &[AxisId::Mode(mode)], &m).unwrap()
    };
    match *factor {
        Factor::X(q) => qubit_local(DenseOperator::pauli_x(), q),
        Factor::Y(q) => qubit_local(DenseOperator::pauli_y(), q),
        Factor::Z(q) => qubit_local(DenseOperator::pauli_z(), q),
        Factor::Raise(q) => {
            let mut m = DenseOperator::zeros(2);
            m.set(1, 0, c(1.0, 0.0));
            qubit_local(m, q)
        }
        Factor::Lower(q) => {
            let mut m = DenseOperator::zeros(2);
            m.set(0, 1, c(1.0, 0.0));
            qubit_local(m, q)
        }
        Factor::Occupation(mode) => mode_local(DenseOperator::number(layout.mode_dim(mode)), mode),
        Factor::OccupationSquared(mode) => {
            let d = layout.mode_dim(mode);
            let diag: Vec<C64> = (0..d).map(|n| c((n * n) as f64, 0.0)).collect();
            mode_local(DenseOperator::diagonal(&diag), mode)
        }
        Factor::ModeParity(mode) => {
            let d = layout.mode_dim(mode);
            let diag: Vec<C64> =
                (0..d).map(|n| c(if n % 2 == 0 { 1.0 } else { -1.0 }, 0.0)).collect();
            mode_local(DenseOperator::diagonal(&diag), mode)
        }
        Factor::Hop { from, to } => {
            let create = mode_local(DenseOperator::creation(layout.mode_dim(to)), to);
            let destroy = mode_local(DenseOperator::annihilation(layout.mode_dim(from)), from);
            create.mul(&destroy).unwrap()
        }
    }
}

pub fn term_dense(layout: &SystemLayout, term: &Term) -> DenseOperator {
    let mut out = DenseOperator::identity(layout.dim()).scale(term.coeff);
    for factor in &term.factors {
        out = out.mul(&factor_dense(layout, factor)).unwrap();
    }
    out
}

/// Independent dense oracle for a whole term list.
pub fn termlist_dense(layout: &SystemLayout, list: &TermList) -> DenseOperator {
    let mut out = DenseOperator::zeros(layout.dim());
    for term in &list.terms {
        out = out.add(&term_dense(layout, term)).unwrap();
    }
    out
}
