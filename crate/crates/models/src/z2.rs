//! One-dimensional Z2 gauge chain with bosonic matter.
//!
//! Sites carry bosonic modes, links carry qubits. The Hamiltonian is
//! `-g sum_links X - J sum_links (a^dag_i Z a_{i+1} + h.c.) + U sum_sites n^2`.
//! Mode `i` is site `i`; qubit `k` is the link between sites `k` and `k+1`.
//!
//! The local symmetry operators `X_left (-1)^n X_right` (virtual `X = +1`
//! beyond the chain ends) commute with the Hamiltonian. States prepared here
//! live in the sector where every interior operator has eigenvalue `+1`; the
//! rightmost one then carries `(-1)^N` for total boson number `N`.

use crate::termlist::{Factor, TermList};
use oqsim_core::{C64, DenseOperator, Gate, Result, StateVector, SystemLayout, eigh};
use oqsim_composite::cbs;

/// Chain geometry and couplings.
#[derive(Clone, Debug)]
pub struct Z2Chain {
    /// Number of matter sites (modes). Links: one fewer.
    pub sites: usize,
    /// Fock cutoff per mode (top occupation kept).
    pub cutoff: usize,
    /// Field coupling on link qubits.
    pub g: f64,
    /// Gauge-invariant hopping amplitude.
    pub j: f64,
    /// Onsite interaction strength.
    pub u: f64,
}

impl Z2Chain {
    /// Number of link qubits.
    pub fn links(&self) -> usize {
        self.sites.saturating_sub(1)
    }

    /// Layout with one mode per site and one qubit per link.
    pub fn layout(&self) -> Result<SystemLayout> {
        SystemLayout::new(&vec![self.cutoff; self.sites], self.links())
    }

    /// Full Hamiltonian as a term list.
    pub fn hamiltonian(&self) -> TermList {
        let mut h = TermList::new();
        for k in 0..self.links() {
            h.push_real(-self.g, vec![Factor::X(k)]);
        }
        for i in 0..self.sites {
            h.push_real(self.u, vec![Factor::OccupationSquared(i)]);
        }
        for k in 0..self.links() {
            h.push_real(-self.j, vec![Factor::Hop { from: k + 1, to: k }, Factor::Z(k)]);
            h.push_real(-self.j, vec![Factor::Hop { from: k, to: k + 1 }, Factor::Z(k)]);
        }
        h
    }

    /// Local symmetry operator at `site`: `X_left (-1)^n X_right` with the
    /// virtual boundary factors omitted (they are `+1`).
    pub fn symmetry_operator(&self, site: usize) -> TermList {
        let mut factors = Vec::new();
        if site > 0 {
            factors.push(Factor::X(site - 1));
        }
        factors.push(Factor::ModeParity(site));
        if site < self.links() {
            factors.push(Factor::X(site));
        }
        let mut op = TermList::new();
        op.push_real(1.0, factors);
        op
    }

    /// All local symmetry operators, site order.
    pub fn symmetry_operators(&self) -> Vec<TermList> {
        (0..self.sites).map(|i| self.symmetry_operator(i)).collect()
    }

    /// Total boson number operator.
    pub fn total_occupation(&self) -> TermList {
        let mut op = TermList::new();
        for i in 0..self.sites {
            op.push_real(1.0, vec![Factor::Occupation(i)]);
        }
        op
    }

    /// Link eigenvalues `xi_k = (-1)^(n_0 + ... + n_k)` slaved to an
    /// occupation pattern, left to right.
    pub fn slaved_link_signs(&self, occupations: &[usize]) -> Vec<f64> {
        let mut signs = Vec::with_capacity(self.links());
        let mut parity = 0usize;
        for k in 0..self.links() {
            parity += occupations[k];
            signs.push(if parity % 2 == 0 { 1.0 } else { -1.0 });
        }
        signs
    }

    /// Product state with the given occupations and every link qubit in the
    /// X eigenstate slaved to the occupations on its left. Interior symmetry
    /// eigenvalues are `+1` by construction.
    pub fn product_state(&self, occupations: &[usize]) -> Result<StateVector> {
        let layout = self.layout()?;
        let signs = self.slaved_link_signs(occupations);
        let links = self.links();
        let norm = (2f64).powf(-(links as f64) / 2.0);
        let mut amps = vec![C64::new(0.0, 0.0); layout.dim()];
        for pattern in 0..(1usize << links) {
            let bits: Vec<u8> = (0..links).map(|k| ((pattern >> k) & 1) as u8).collect();
            let mut sign = 1.0;
            for (k, &b) in bits.iter().enumerate() {
                if b == 1 {
                    sign *= signs[k];
                }
            }
            let idx = layout.index_of(occupations, &bits)?;
            amps[idx] = C64::new(sign * norm, 0.0);
        }
        StateVector::from_amplitudes(&layout, amps)
    }

    /// All occupation patterns with the given total, each part within the
    /// cutoff, in lexicographic order.
    pub fn sector_occupations(&self, total: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut current = vec![0usize; self.sites];
        fill_patterns(&mut out, &mut current, 0, total, self.cutoff);
        out
    }

    /// Orthonormal basis of the fixed-number, slaved-link sector.
    pub fn sector_basis(&self, total: usize) -> Result<Vec<StateVector>> {
        self.sector_occupations(total)
            .iter()
            .map(|occ| self.product_state(occ))
            .collect()
    }

    /// Hamiltonian restricted to the fixed-number sector: the occupation
    /// patterns indexing the basis and the dense restricted matrix.
    pub fn sector_hamiltonian(&self, total: usize) -> Result<(Vec<Vec<usize>>, DenseOperator)> {
        let basis = self.sector_basis(total)?;
        let matrix = self.hamiltonian().matrix_in_basis(&basis)?;
        Ok((self.sector_occupations(total), matrix))
    }

    /// Ground energy within the fixed-number sector.
    pub fn sector_ground_energy(&self, total: usize) -> Result<f64> {
        let (_, h) = self.sector_hamiltonian(total)?;
        Ok(eigh(&h)?.0[0])
    }

    /// Evolution under one hopping term for time `dt`: a conditional
    /// beamsplitter on the link qubit and its two modes.
    pub fn hopping_step(&self, link: usize, dt: f64) -> Vec<Gate> {
        cbs(link, link, link + 1, 0.0, -self.j * dt)
    }

    /// Evolution under one field term for time `dt`.
    pub fn field_step(&self, link: usize, dt: f64) -> Vec<Gate> {
        vec![Gate::QubitRphi { qubit: link, phi: 0.0, theta: -2.0 * self.g * dt }]
    }

    /// Evolution under one onsite term for time `dt`: a mode-diagonal phase
    /// with the adjacent link qubit parked.
    pub fn onsite_step(&self, site: usize, dt: f64) -> Vec<Gate> {
        let thetas = (0..=self.cutoff).map(|n| self.u * dt * (n * n) as f64).collect();
        let parked = if self.links() == 0 { None } else { Some(site.min(self.links() - 1)) };
        vec![Gate::FockPhase { mode: site, thetas, parked_qubit: parked }]
    }
}

fn fill_patterns(
    out: &mut Vec<Vec<usize>>,
    current: &mut Vec<usize>,
    site: usize,
    remaining: usize,
    cutoff: usize,
) {
    if site + 1 == current.len() {
        if remaining <= cutoff {
            current[site] = remaining;
            out.push(current.clone());
        }
        return;
    }
    for n in 0..=remaining.min(cutoff) {
        current[site] = n;
        fill_patterns(out, current, site + 1, remaining - n, cutoff);
    }
}
