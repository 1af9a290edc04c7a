//! Composite operations assembled from the native gate set.
//!
//! Every function returns a `Vec<Gate>` in application order: the first
//! element acts on the state first. Pushing the list into a
//! [`oqsim_core::Circuit`] attaches hardware durations per gate.

mod basic;
mod dual_rail;
mod fermion;
mod fock;
mod geometric;
mod onsite;

pub use basic::{
    adjoint_ops, bosonic_swap, cbs, cbs2, cbs_pauli, cond_displacement, cond_parity_adjoint,
    conjugate_by, hadamard, s_gate, CondAxis,
};
pub use dual_rail::{
    cond_parity_x, dual_rail_cond_displacement, dual_rail_doubly_cond_displacement,
    dual_rail_gauge_hopping, dual_rail_zz,
};
pub use fermion::{cz, fswap, iswap_rotation, xx_rotation, yy_rotation};
pub use fock::{density_controlled, fock_conditioned, fock_controlled, mark_thetas, rr_gate};
pub use geometric::{bch_commutator, ccd, zz_geometric, zzzz_geometric};
pub use onsite::ancilla_free_onsite;
