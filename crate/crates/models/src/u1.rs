//! One-dimensional U(1) quantum link chain with fermionic matter on qubits.
//!
//! Each link carries a spin-S degree of freedom encoded in two modes with
//! fixed total occupation `2S`: `Sz = (n_a - n_b)/2`, `S+ = a^dag b`. Matter
//! fermions live on qubits through the Jordan-Wigner map (adjacent hopping
//! needs no string). The Hamiltonian is
//!
//! `H = (g^2/2) sum_links (Sz + tau/2pi)^2 + M sum_sites (-1)^i n_i
//!    + lambda sum_links (sigma+_i (a^dag b) sigma-_{i+1} + h.c.)`
//!
//! with `lambda = (J/2)/(2S)`. Mode `2k` is the `a` mode of link `k`, mode
//! `2k+1` its `b` mode; qubit `i` is site `i`; occupied qubits are `|1>`.

use crate::termlist::{Factor, TermList};
use std::f64::consts::{FRAC_PI_2, PI};
use std::sync::Arc;
use oqsim_core::{C64, DenseOperator, Gate, Result, StateVector, SystemLayout, expm_hermitian};
use oqsim_composite::{cbs2, conjugate_by, hadamard, s_gate};

/// Wall-clock duration assigned to the effective link-hopping unitaries
/// (four conditional-beamsplitter equivalents).
pub const HOPPING_UNITARY_DURATION: f64 = 9.0e-6;

/// Which Hermitian combination of the link-hopping generator to exponentiate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExchangeKind {
    /// `exp(-i theta (A + A^dag))` for `A = sigma+_i (a^dag b) sigma-_{i+1}`.
    Symmetric,
    /// `exp(-theta (A - A^dag))`.
    Antisymmetric,
}

/// Chain geometry and couplings.
#[derive(Clone, Debug)]
pub struct U1Chain {
    /// Number of matter sites (qubits). Links: one fewer.
    pub sites: usize,
    /// Twice the link spin; the per-mode cutoff equals this.
    pub spin_x2: usize,
    /// Electric coupling.
    pub g: f64,
    /// Staggered mass.
    pub m: f64,
    /// Hopping amplitude before the spin normalization.
    pub j: f64,
    /// Topological angle entering the electric term as `tau/2pi`.
    pub tau: f64,
}

impl U1Chain {
    pub fn links(&self) -> usize {
        self.sites.saturating_sub(1)
    }

    /// `a` mode index of a link.
    pub fn mode_a(&self, link: usize) -> usize {
        2 * link
    }

    /// `b` mode index of a link.
    pub fn mode_b(&self, link: usize) -> usize {
        2 * link + 1
    }

    pub fn spin(&self) -> f64 {
        self.spin_x2 as f64 / 2.0
    }

    /// Coefficient of the gauge-invariant hopping term, `(J/2)/(2S)`.
    pub fn hopping_coefficient(&self) -> f64 {
        self.j / (2.0 * self.spin_x2 as f64)
    }

    /// Shifted field offset `tau/2pi`.
    pub fn field_offset(&self) -> f64 {
        self.tau / (2.0 * PI)
    }

    /// Layout with two modes per link (cutoff `2S` each) and one qubit per site.
    pub fn layout(&self) -> Result<SystemLayout> {
        SystemLayout::new(&vec![self.spin_x2; 2 * self.links()], self.sites)
    }

    /// Electric term of one link, `(g^2/2)(Sz + tau/2pi)^2`, expanded in
    /// per-mode occupations.
    pub fn electric_term(&self, link: usize) -> TermList {
        let (a, b) = (self.mode_a(link), self.mode_b(link));
        let c = self.field_offset();
        let w = self.g * self.g / 2.0;
        let mut h = TermList::new();
        h.push_real(w / 4.0, vec![Factor::OccupationSquared(a)]);
        h.push_real(w / 4.0, vec![Factor::OccupationSquared(b)]);
        h.push_real(-w / 2.0, vec![Factor::Occupation(a), Factor::Occupation(b)]);
        h.push_real(w * c, vec![Factor::Occupation(a)]);
        h.push_real(-w * c, vec![Factor::Occupation(b)]);
        h.push_real(w * c * c, vec![]);
        h
    }

    /// Staggered mass term of one site, `M (-1)^i n_i` with `n = (1 - Z)/2`.
    pub fn mass_term(&self, site: usize) -> TermList {
        let sign = if site % 2 == 0 { 1.0 } else { -1.0 };
        let mut h = TermList::new();
        h.push_real(self.m * sign / 2.0, vec![]);
        h.push_real(-self.m * sign / 2.0, vec![Factor::Z(site)]);
        h
    }

    /// Gauge-invariant hopping term of one link,
    /// `lambda (sigma+_i (a^dag b) sigma-_{i+1} + h.c.)`.
    pub fn hopping_term(&self, link: usize) -> TermList {
        let (a, b) = (self.mode_a(link), self.mode_b(link));
        let (i, j) = (link, link + 1);
        let lambda = self.hopping_coefficient();
        let mut h = TermList::new();
        h.push_real(lambda, vec![Factor::Raise(i), Factor::Hop { from: b, to: a }, Factor::Lower(j)]);
        h.push_real(lambda, vec![Factor::Lower(i), Factor::Hop { from: a, to: b }, Factor::Raise(j)]);
        h
    }

    /// Full Hamiltonian as a term list.
    pub fn hamiltonian(&self) -> TermList {
        let mut h = TermList::new();
        for k in 0..self.links() {
            h.extend(&self.electric_term(k));
        }
        for i in 0..self.sites {
            h.extend(&self.mass_term(i));
        }
        for k in 0..self.links() {
            h.extend(&self.hopping_term(k));
        }
        h
    }

    /// Electric field operator `Sz` of one link.
    pub fn link_field(&self, link: usize) -> TermList {
        let mut op = TermList::new();
        op.push_real(0.5, vec![Factor::Occupation(self.mode_a(link))]);
        op.push_real(-0.5, vec![Factor::Occupation(self.mode_b(link))]);
        op
    }

    /// Charge operator at a site: `n_i - (1 - (-1)^i)/2`.
    pub fn charge_operator(&self, site: usize) -> TermList {
        let offset = if site % 2 == 0 { 0.0 } else { 1.0 };
        let mut op = TermList::new();
        op.push_real(0.5 - offset, vec![]);
        op.push_real(-0.5, vec![Factor::Z(site)]);
        op
    }

    /// Local constraint operator at a site: `Sz_right - Sz_left - charge`,
    /// with vanishing virtual fields beyond the chain ends. Physical states
    /// are its null space; every one of its terms is diagonal.
    pub fn constraint_operator(&self, site: usize) -> TermList {
        let mut op = TermList::new();
        if site < self.links() {
            op.extend(&self.link_field(site));
        }
        if site > 0 {
            op.extend(&self.link_field(site - 1).scaled(-1.0));
        }
        op.extend(&self.charge_operator(site).scaled(-1.0));
        op
    }

    pub fn constraint_operators(&self) -> Vec<TermList> {
        (0..self.sites).map(|i| self.constraint_operator(i)).collect()
    }

    /// Staggered reference state: odd sites occupied, every link at `Sz = 0`.
    ///
    /// # Panics
    /// If `spin_x2` is odd, where `Sz = 0` does not exist.
    pub fn bare_vacuum(&self) -> Result<StateVector> {
        assert!(self.spin_x2 % 2 == 0, "Sz = 0 needs integer spin");
        let layout = self.layout()?;
        let half = self.spin_x2 / 2;
        let fock = vec![half; 2 * self.links()];
        let bits: Vec<u8> = (0..self.sites).map(|i| (i % 2) as u8).collect();
        StateVector::basis_state(&layout, &fock, &bits)
    }

    /// Indices of the computational basis states satisfying every local
    /// constraint: the fixed total occupation `n_a + n_b = 2S` the spin
    /// encoding imposes on each link, and the charge constraints (all
    /// constraint operators are diagonal).
    pub fn physical_indices(&self) -> Result<Vec<usize>> {
        let layout = self.layout()?;
        let constraints = self.constraint_operators();
        let mut keep = Vec::new();
        'states: for idx in 0..layout.dim() {
            let (fock, _) = layout.decompose(idx);
            for link in 0..self.links() {
                if fock[self.mode_a(link)] + fock[self.mode_b(link)] != self.spin_x2 {
                    continue 'states;
                }
            }
            for op in &constraints {
                let value = op
                    .diagonal_value(&layout, idx)
                    .expect("constraint operators are diagonal");
                if value.abs() > 1e-9 {
                    continue 'states;
                }
            }
            keep.push(idx);
        }
        Ok(keep)
    }

    /// Hamiltonian restricted to the physical constraint sector: the kept
    /// basis indices and the dense restricted matrix.
    pub fn sector_hamiltonian(&self) -> Result<(Vec<usize>, DenseOperator)> {
        let layout = self.layout()?;
        let indices = self.physical_indices()?;
        let h = self.hamiltonian();
        let n = indices.len();
        let mut basis = Vec::with_capacity(n);
        for &idx in &indices {
            let mut amps = vec![C64::new(0.0, 0.0); layout.dim()];
            amps[idx] = C64::new(1.0, 0.0);
            basis.push(StateVector::from_amplitudes(&layout, amps)?);
        }
        let matrix = h.matrix_in_basis(&basis)?;
        Ok((indices, matrix))
    }

    /// Evolution under one electric term for time `dt`: a mode-diagonal
    /// phase on each of the link's modes plus a frame phase. Exact on the
    /// fixed-total-occupation subspace the encoding uses.
    pub fn electric_step(&self, link: usize, dt: f64) -> Vec<Gate> {
        let w = self.g * self.g / 2.0;
        let c = self.field_offset();
        let s = self.spin();
        let thetas_a: Vec<f64> =
            (0..=self.spin_x2).map(|n| w * dt * ((n * n) as f64 / 2.0 + c * n as f64)).collect();
        let thetas_b: Vec<f64> =
            (0..=self.spin_x2).map(|n| w * dt * ((n * n) as f64 / 2.0 - c * n as f64)).collect();
        vec![
            Gate::FockPhase {
                mode: self.mode_a(link),
                thetas: thetas_a,
                parked_qubit: Some(link),
            },
            Gate::FockPhase {
                mode: self.mode_b(link),
                thetas: thetas_b,
                parked_qubit: Some(link + 1),
            },
            Gate::GlobalPhase { theta: w * dt * (s * s - c * c) },
        ]
    }

    /// Evolution under one mass term for time `dt`.
    pub fn mass_step(&self, site: usize, dt: f64) -> Vec<Gate> {
        let sign = if site % 2 == 0 { 1.0 } else { -1.0 };
        vec![
            Gate::QubitRz { qubit: site, theta: -self.m * sign * dt },
            Gate::GlobalPhase { theta: -self.m * sign * dt / 2.0 },
        ]
    }

    /// Local hopping generator `A = sigma+_i (a^dag b) sigma-_{i+1}` on the
    /// axes `[a, b, qubit_i, qubit_{i+1}]`, as a dense operator.
    fn local_hopping_generator(&self) -> Result<DenseOperator> {
        let local = SystemLayout::new(&[self.spin_x2, self.spin_x2], 2)?;
        let mut op = TermList::new();
        op.push_real(1.0, vec![Factor::Raise(0), Factor::Hop { from: 1, to: 0 }, Factor::Lower(1)]);
        op.to_dense(&local)
    }

    /// Effective unitary for the exponential of a Hermitian combination of
    /// the link-hopping generator, used both for evolution and as an ansatz
    /// block. Gauge constraints are conserved exactly.
    pub fn hopping_unitary(&self, link: usize, theta: f64, kind: ExchangeKind) -> Result<Gate> {
        let a = self.local_hopping_generator()?;
        let matrix = match kind {
            ExchangeKind::Symmetric => {
                let h = a.add(&a.dagger())?;
                expm_hermitian(&h, C64::new(0.0, -theta))?
            }
            ExchangeKind::Antisymmetric => {
                let h = a.sub(&a.dagger())?.scale(C64::new(0.0, -1.0));
                expm_hermitian(&h, C64::new(0.0, -theta))?
            }
        };
        Ok(Gate::EffectiveUnitary {
            modes: vec![self.mode_a(link), self.mode_b(link)],
            qubits: vec![link, link + 1],
            matrix: Arc::new(matrix),
            duration: HOPPING_UNITARY_DURATION,
            label: match kind {
                ExchangeKind::Symmetric => "link-hop-sym".into(),
                ExchangeKind::Antisymmetric => "link-hop-anti".into(),
            },
        })
    }

    /// Evolution under one hopping term for time `dt` as a single effective
    /// unitary.
    pub fn hopping_step_exact(&self, link: usize, dt: f64) -> Result<Gate> {
        self.hopping_unitary(link, self.hopping_coefficient() * dt, ExchangeKind::Symmetric)
    }

    /// Evolution under one hopping term for time `dt` compiled from doubly
    /// conditional beamsplitters.
    ///
    /// Writing the generator over Pauli products,
    /// `4 (A + A^dag) = (XX + YY) B+ + (XY - YX) B'` with `B+ = a^dag b + h.c.`
    /// and `B' = i a^dag b + h.c.`, the two halves are split (first-order
    /// Trotter within the step, local error `O(dt^2)`) and each half's two
    /// commuting Pauli pieces become conditional beamsplitters conjugated
    /// into the right Pauli frame. Sixteen conditional parities per call.
    pub fn hopping_step_trotterized(&self, link: usize, dt: f64) -> Result<Vec<Gate>> {
        let (qi, qj) = (link, link + 1);
        let (a, b) = (self.mode_a(link), self.mode_b(link));
        let theta = self.hopping_coefficient() * dt / 4.0;
        let mut gates = Vec::new();
        // Second half first, matching the operator product order. The mixed
        // pieces carry the signs fixed by raise = (X - iY)/2 on the
        // occupied-is-one qubit encoding.
        for (axis_i, axis_j, phi, sign) in [
            (Axis::Y, Axis::X, -FRAC_PI_2, 1.0),
            (Axis::X, Axis::Y, -FRAC_PI_2, -1.0),
            (Axis::X, Axis::X, 0.0, 1.0),
            (Axis::Y, Axis::Y, 0.0, 1.0),
        ] {
            let mut outer = axis_i.frame(qi);
            outer.extend(axis_j.frame(qj));
            let inner = cbs2(qi, qj, a, b, phi, sign * theta);
            gates.extend(conjugate_by(&outer, &inner)?);
        }
        Ok(gates)
    }
}

/// Pauli frame for a conjugated conditional beamsplitter.
#[derive(Clone, Copy)]
enum Axis {
    X,
    Y,
}

impl Axis {
    /// Gate list `U` with `U Z U^dag` equal to the axis Pauli.
    fn frame(self, qubit: usize) -> Vec<Gate> {
        match self {
            Axis::X => hadamard(qubit),
            Axis::Y => {
                let mut ops = hadamard(qubit);
                ops.extend(s_gate(qubit));
                ops
            }
        }
    }
}
