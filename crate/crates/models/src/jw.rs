//! Jordan-Wigner images of fermionic operators on a 1D qubit chain.
//!
//! Adjacent-site bilinears need no parity string, so they reduce to fixed
//! two-qubit operator combinations; rearrangements that make farther pairs
//! adjacent are handled at the circuit level by the fermionic swap.

use crate::termlist::{Factor, TermList};

/// `c^dag_i c_j + h.c.` for adjacent sites: `(X_i X_j + Y_i Y_j) / 2`.
pub fn adjacent_hopping(i: usize, j: usize) -> TermList {
    let mut op = TermList::new();
    op.push_real(0.5, vec![Factor::X(i), Factor::X(j)]);
    op.push_real(0.5, vec![Factor::Y(i), Factor::Y(j)]);
    op
}

/// Fermion number on a site: `(1 - Z) / 2`.
pub fn site_number(i: usize) -> TermList {
    let mut op = TermList::new();
    op.push_real(0.5, vec![]);
    op.push_real(-0.5, vec![Factor::Z(i)]);
    op
}

/// Density-density coupling `n_i n_j` between two sites.
pub fn density_density(i: usize, j: usize) -> TermList {
    let mut op = TermList::new();
    op.push_real(0.25, vec![]);
    op.push_real(-0.25, vec![Factor::Z(i)]);
    op.push_real(-0.25, vec![Factor::Z(j)]);
    op.push_real(0.25, vec![Factor::Z(i), Factor::Z(j)]);
    op
}
