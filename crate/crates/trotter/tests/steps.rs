mod common;

use common::{c, rng, state_diff, unitary_of};
use oqsim_core::{expm_hermitian, DenseOperator, Gate, StateVector, SystemLayout};
use oqsim_models::{U1Chain, Z2Chain};
use oqsim_trotter::{u1_step_gates, u1_step_groups, z2_step_gates, z2_step_groups, HoppingCompilation};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

fn z2_chain() -> Z2Chain {
    Z2Chain { sites: 3, cutoff: 2, g: 0.9, j: 1.1, u: 0.7 }
}

fn u1_chain() -> U1Chain {
    U1Chain { sites: 3, spin_x2: 1, g: 1.2, m: 0.8, j: 1.0, tau: 0.9 }
}

fn z2_dense_hamiltonian(chain: &Z2Chain, layout: &SystemLayout) -> DenseOperator {
    chain.hamiltonian().to_dense(layout).unwrap()
}

fn z2_step_error(chain: &Z2Chain, dt: f64, order: usize) -> f64 {
    let layout = chain.layout().unwrap();
    let step = unitary_of(&layout, &z2_step_gates(chain, dt, order).unwrap());
    let exact = expm_hermitian(&z2_dense_hamiltonian(chain, &layout), c(0.0, -dt)).unwrap();
    step.max_abs_diff(&exact)
}

#[test]
fn z2_step_at_zero_time_is_identity() {
    let chain = z2_chain();
    let layout = chain.layout().unwrap();
    for order in [1, 2] {
        let step = unitary_of(&layout, &z2_step_gates(&chain, 0.0, order).unwrap());
        assert!(step.max_abs_diff(&DenseOperator::identity(layout.dim())) < 1e-10);
    }
}

#[test]
fn z2_first_order_step_error_is_quadratic() {
    let chain = z2_chain();
    let d1 = z2_step_error(&chain, 0.1, 1);
    let d2 = z2_step_error(&chain, 0.2, 1);
    let slope = (d2 / d1).log2();
    eprintln!("z2 order-1 errors d(0.1)={d1:.3e} d(0.2)={d2:.3e} slope={slope:.3}");
    assert!((1.8..=2.2).contains(&slope), "first-order step slope {slope:.3}");
}

#[test]
fn z2_second_order_step_error_is_cubic() {
    let chain = z2_chain();
    let d1 = z2_step_error(&chain, 0.1, 2);
    let d2 = z2_step_error(&chain, 0.2, 2);
    let slope = (d2 / d1).log2();
    eprintln!("z2 order-2 errors d(0.1)={d1:.3e} d(0.2)={d2:.3e} slope={slope:.3}");
    assert!((2.8..=3.2).contains(&slope), "second-order step slope {slope:.3}");
}

/// Indices whose mode pattern keeps the fixed per-link pair total the
/// encoding works on.
fn link_subspace(chain: &U1Chain, layout: &SystemLayout) -> Vec<usize> {
    (0..layout.dim())
        .filter(|&idx| {
            let (fock, _) = layout.decompose(idx);
            (0..chain.links())
                .all(|l| fock[chain.mode_a(l)] + fock[chain.mode_b(l)] == chain.spin_x2)
        })
        .collect()
}

fn random_subspace_state(
    layout: &SystemLayout,
    support: &[usize],
    seed: &mut impl Rng,
) -> StateVector {
    let mut amps = vec![c(0.0, 0.0); layout.dim()];
    for &idx in support {
        amps[idx] = c(seed.random::<f64>() - 0.5, seed.random::<f64>() - 0.5);
    }
    let mut state = StateVector::from_amplitudes(layout, amps).unwrap();
    state.normalize();
    state
}

fn u1_step_error(chain: &U1Chain, dt: f64, order: usize, hopping: HoppingCompilation) -> f64 {
    let layout = chain.layout().unwrap();
    let support = link_subspace(chain, &layout);
    let gates = u1_step_gates(chain, dt, order, hopping).unwrap();
    let step = unitary_of(&layout, &gates);
    let h = chain.hamiltonian().to_dense(&layout).unwrap();
    let exact = expm_hermitian(&h, c(0.0, -dt)).unwrap();
    let mut seed = rng(7);
    (0..5)
        .map(|_| {
            let psi = random_subspace_state(&layout, &support, &mut seed);
            let a = StateVector::from_amplitudes(&layout, step.apply(psi.amps()).unwrap()).unwrap();
            let b = StateVector::from_amplitudes(&layout, exact.apply(psi.amps()).unwrap()).unwrap();
            state_diff(&a, &b)
        })
        .fold(0.0, f64::max)
}

#[test]
fn u1_first_order_step_error_is_quadratic() {
    let chain = u1_chain();
    for hopping in [HoppingCompilation::Exact, HoppingCompilation::Trotterized] {
        let d1 = u1_step_error(&chain, 0.1, 1, hopping);
        let d2 = u1_step_error(&chain, 0.2, 1, hopping);
        let slope = (d2 / d1).log2();
        eprintln!("u1 order-1 {hopping:?} errors d(0.1)={d1:.3e} d(0.2)={d2:.3e} slope={slope:.3}");
        assert!((1.8..=2.2).contains(&slope), "{hopping:?} first-order slope {slope:.3}");
    }
}

#[test]
fn u1_second_order_step_error_is_cubic_with_exact_hopping() {
    let chain = u1_chain();
    let d1 = u1_step_error(&chain, 0.1, 2, HoppingCompilation::Exact);
    let d2 = u1_step_error(&chain, 0.2, 2, HoppingCompilation::Exact);
    let slope = (d2 / d1).log2();
    eprintln!("u1 order-2 errors d(0.1)={d1:.3e} d(0.2)={d2:.3e} slope={slope:.3}");
    assert!((2.8..=3.2).contains(&slope), "second-order step slope {slope:.3}");
}

#[test]
fn u1_step_at_zero_time_is_identity() {
    let chain = u1_chain();
    let layout = chain.layout().unwrap();
    for hopping in [HoppingCompilation::Exact, HoppingCompilation::Trotterized] {
        let step = unitary_of(&layout, &u1_step_gates(&chain, 0.0, 2, hopping).unwrap());
        assert!(step.max_abs_diff(&DenseOperator::identity(layout.dim())) < 1e-10);
    }
}

#[test]
fn u1_trotterized_step_counts_conditional_parities_per_link() {
    let chain = u1_chain();
    let gates = u1_step_gates(&chain, 0.3, 1, HoppingCompilation::Trotterized).unwrap();
    let parities =
        gates.iter().filter(|g| matches!(g, Gate::CondParity { .. })).count();
    assert_eq!(parities, 16 * chain.links());
}

#[test]
fn unsupported_order_is_rejected() {
    assert!(z2_step_gates(&z2_chain(), 0.1, 3).is_err());
    assert!(z2_step_gates(&z2_chain(), 0.1, 0).is_err());
    assert!(u1_step_gates(&u1_chain(), 0.1, 4, HoppingCompilation::Exact).is_err());
}

#[test]
fn z2_schedule_drops_onsite_group_when_interaction_vanishes() {
    let mut chain = z2_chain();
    let labels: Vec<_> = z2_step_groups(&chain, 0.1).iter().map(|g| g.label).collect();
    assert_eq!(labels, ["hopping-even", "hopping-odd", "onsite", "field"]);
    chain.u = 0.0;
    let labels: Vec<_> = z2_step_groups(&chain, 0.1).iter().map(|g| g.label).collect();
    assert_eq!(labels, ["hopping-even", "hopping-odd", "field"]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn permuting_terms_inside_a_group_leaves_the_z2_step_unitary(seed in any::<u64>()) {
        let chain = Z2Chain { sites: 4, cutoff: 2, g: 0.9, j: 1.1, u: 0.7 };
        let layout = chain.layout().unwrap();
        let dt = 0.23;
        let reference = unitary_of(&layout, &z2_step_gates(&chain, dt, 1).unwrap());
        let mut shuffler = rng(seed);
        let mut groups = z2_step_groups(&chain, dt);
        for group in &mut groups {
            group.terms.shuffle(&mut shuffler);
        }
        let gates: Vec<Gate> = groups.iter().flat_map(|g| g.gates()).collect();
        let shuffled = unitary_of(&layout, &gates);
        prop_assert!(shuffled.max_abs_diff(&reference) <= 1e-12);
    }

    #[test]
    fn permuting_terms_inside_a_group_leaves_the_u1_step_unitary(seed in any::<u64>()) {
        let chain = U1Chain { sites: 4, spin_x2: 1, g: 1.2, m: 0.8, j: 1.0, tau: 0.9 };
        let layout = chain.layout().unwrap();
        let dt = 0.17;
        let hopping = HoppingCompilation::Trotterized;
        let reference = unitary_of(&layout, &u1_step_gates(&chain, dt, 1, hopping).unwrap());
        let mut shuffler = rng(seed);
        let mut groups = u1_step_groups(&chain, dt, hopping).unwrap();
        for group in &mut groups {
            group.terms.shuffle(&mut shuffler);
        }
        let gates: Vec<Gate> = groups.iter().flat_map(|g| g.gates()).collect();
        let shuffled = unitary_of(&layout, &gates);
        prop_assert!(shuffled.max_abs_diff(&reference) <= 1e-12);
    }
}
