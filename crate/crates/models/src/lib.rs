//! Lattice model builders on the hybrid oscillator-qubit state space.
//!
//! The crate provides a light operator representation ([`TermList`]) with
//! matrix-free application, plus two concrete gauge chains built on it: a Z2
//! chain with bosonic matter ([`Z2Chain`]) and a U(1) quantum link chain with
//! fermionic matter ([`U1Chain`]). Each model carries its layout, Hamiltonian,
//! local symmetry operators, reference states, sector diagonalization, and
//! per-term evolution circuits. Jordan-Wigner images of adjacent fermionic
//! bilinears and the density-coupled displacement step round out the set.

pub mod jw;
pub mod phonon;
pub mod termlist;
pub mod u1;
pub mod z2;

pub use phonon::occupation_displacement_step;
pub use termlist::{Factor, Term, TermList};
pub use u1::{ExchangeKind, U1Chain, HOPPING_UNITARY_DURATION};
pub use z2::Z2Chain;
