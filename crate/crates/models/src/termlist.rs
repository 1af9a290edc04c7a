//! Sums of operator products with matrix-free application.
//!
//! A [`TermList`] is a sum of [`Term`]s; each term is a complex coefficient
//! times a product of single-axis [`Factor`]s. Every factor maps a basis
//! state to at most one basis state times a scalar, so applying a term to a
//! state costs one pass over its amplitudes. This keeps Hamiltonian action,
//! expectation values, and sector matrix elements cheap at dimensions far
//! beyond what a dense operator could hold.

use oqsim_core::{C64, DenseOperator, Error, Result, StateVector, SystemLayout, DENSE_UNITARY_CAP};

/// A single-axis operator factor. Products within a [`Term`] apply right to
/// left, matching operator-product order.
#[derive(Clone, Debug, PartialEq)]
pub enum Factor {
    /// Pauli X on a qubit.
    X(usize),
    /// Pauli Y on a qubit.
    Y(usize),
    /// Pauli Z on a qubit (`Z|0> = +|0>`).
    Z(usize),
    /// Qubit raising operator `|1><0|`.
    Raise(usize),
    /// Qubit lowering operator `|0><1|`.
    Lower(usize),
    /// Mode occupation number `n`.
    Occupation(usize),
    /// Squared mode occupation `n^2`.
    OccupationSquared(usize),
    /// Mode parity `(-1)^n`.
    ModeParity(usize),
    /// `a^dag_to a_from` between two distinct modes. The truncated creation
    /// operator annihilates the top Fock level.
    Hop { from: usize, to: usize },
}

impl Factor {
    fn check(&self, layout: &SystemLayout) -> Result<()> {
        match *self {
            Factor::X(q) | Factor::Y(q) | Factor::Z(q) | Factor::Raise(q) | Factor::Lower(q) => {
                layout.check_qubit(q)
            }
            Factor::Occupation(m) | Factor::OccupationSquared(m) | Factor::ModeParity(m) => {
                layout.check_mode(m)
            }
            Factor::Hop { from, to } => {
                layout.check_mode(from)?;
                layout.check_mode(to)?;
                if from == to {
                    return Err(Error::DuplicateTarget { gate: "hop factor" });
                }
                Ok(())
            }
        }
    }

    /// Applies the factor to a basis state given by `fock`/`bits` in place.
    /// Returns the scalar multiplier, or `None` when the image vanishes.
    fn map(&self, layout: &SystemLayout, fock: &mut [usize], bits: &mut [u8]) -> Option<C64> {
        let one = |x: f64| Some(C64::new(x, 0.0));
        match *self {
            Factor::X(q) => {
                bits[q] ^= 1;
                one(1.0)
            }
            Factor::Y(q) => {
                let b = bits[q];
                bits[q] ^= 1;
                Some(C64::new(0.0, if b == 0 { 1.0 } else { -1.0 }))
            }
            Factor::Z(q) => one(1.0 - 2.0 * bits[q] as f64),
            Factor::Raise(q) => {
                if bits[q] == 1 {
                    return None;
                }
                bits[q] = 1;
                one(1.0)
            }
            Factor::Lower(q) => {
                if bits[q] == 0 {
                    return None;
                }
                bits[q] = 0;
                one(1.0)
            }
            Factor::Occupation(m) => one(fock[m] as f64),
            Factor::OccupationSquared(m) => one((fock[m] * fock[m]) as f64),
            Factor::ModeParity(m) => one(if fock[m] % 2 == 0 { 1.0 } else { -1.0 }),
            Factor::Hop { from, to } => {
                if fock[from] == 0 || fock[to] + 1 > layout.cutoff(to) {
                    return None;
                }
                let amp = ((fock[from] * (fock[to] + 1)) as f64).sqrt();
                fock[from] -= 1;
                fock[to] += 1;
                one(amp)
            }
        }
    }
}

/// One product term: `coeff * factors[0] * factors[1] * ...`, rightmost
/// factor acting first.
#[derive(Clone, Debug, PartialEq)]
pub struct Term {
    pub coeff: C64,
    pub factors: Vec<Factor>,
}

/// A sum of terms representing an operator on a [`SystemLayout`].
#[derive(Clone, Debug, Default, PartialEq)]
pub struct TermList {
    pub terms: Vec<Term>,
}

impl TermList {
    pub fn new() -> Self {
        TermList { terms: Vec::new() }
    }

    /// Appends `coeff * product(factors)`.
    pub fn push(&mut self, coeff: C64, factors: Vec<Factor>) {
        self.terms.push(Term { coeff, factors });
    }

    /// Appends a term with a real coefficient.
    pub fn push_real(&mut self, coeff: f64, factors: Vec<Factor>) {
        self.push(C64::new(coeff, 0.0), factors);
    }

    /// Concatenates another operator's terms onto this one.
    pub fn extend(&mut self, other: &TermList) {
        self.terms.extend(other.terms.iter().cloned());
    }

    /// Returns the operator scaled by a real constant.
    pub fn scaled(&self, s: f64) -> TermList {
        let terms = self
            .terms
            .iter()
            .map(|t| Term { coeff: t.coeff * s, factors: t.factors.clone() })
            .collect();
        TermList { terms }
    }

    /// Checks every factor against the layout.
    pub fn validate(&self, layout: &SystemLayout) -> Result<()> {
        for term in &self.terms {
            for factor in &term.factors {
                factor.check(layout)?;
            }
        }
        Ok(())
    }

    /// Applies the operator to a state, returning the (unnormalized) image.
    pub fn apply_to(&self, state: &StateVector) -> Result<StateVector> {
        let layout = state.layout();
        self.validate(layout)?;
        let mut out = vec![C64::new(0.0, 0.0); layout.dim()];
        for term in &self.terms {
            for (idx, &amp) in state.amps().iter().enumerate() {
                if amp.norm_sqr() == 0.0 {
                    continue;
                }
                let (mut fock, mut bits) = layout.decompose(idx);
                let mut mult = term.coeff * amp;
                let mut alive = true;
                for factor in term.factors.iter().rev() {
                    match factor.map(layout, &mut fock, &mut bits) {
                        Some(s) => mult *= s,
                        None => {
                            alive = false;
                            break;
                        }
                    }
                }
                if !alive {
                    continue;
                }
                let target = layout.index_of(&fock, &bits)?;
                out[target] += mult;
            }
        }
        StateVector::from_amplitudes(layout, out)
    }

    /// `<state| self |state>`.
    pub fn expectation(&self, state: &StateVector) -> Result<C64> {
        let image = self.apply_to(state)?;
        state.inner(&image)
    }

    /// Dense matrix of the operator, built column by column. Refused above
    /// the dense cap; large systems should stay matrix-free.
    pub fn to_dense(&self, layout: &SystemLayout) -> Result<DenseOperator> {
        let dim = layout.dim();
        if dim > DENSE_UNITARY_CAP {
            return Err(Error::DenseCapExceeded { dim, cap: DENSE_UNITARY_CAP });
        }
        let mut out = DenseOperator::zeros(dim);
        for col in 0..dim {
            let mut basis = vec![C64::new(0.0, 0.0); dim];
            basis[col] = C64::new(1.0, 0.0);
            let state = StateVector::from_amplitudes(layout, basis)?;
            let image = self.apply_to(&state)?;
            for (row, &amp) in image.amps().iter().enumerate() {
                if amp.norm_sqr() != 0.0 {
                    out.set(row, col, amp);
                }
            }
        }
        Ok(out)
    }

    /// Evaluates the operator on one computational basis state when it is
    /// diagonal there, as `<index| self |index>`. Returns `None` if any term
    /// maps the state to a different basis state.
    pub fn diagonal_value(&self, layout: &SystemLayout, index: usize) -> Option<f64> {
        let (fock, bits) = layout.decompose(index);
        let mut total = C64::new(0.0, 0.0);
        for term in &self.terms {
            let mut f = fock.clone();
            let mut b = bits.clone();
            let mut mult = term.coeff;
            let mut alive = true;
            for factor in term.factors.iter().rev() {
                match factor.map(layout, &mut f, &mut b) {
                    Some(s) => mult *= s,
                    None => {
                        alive = false;
                        break;
                    }
                }
            }
            if !alive {
                continue;
            }
            if f != fock || b != bits {
                return None;
            }
            total += mult;
        }
        Some(total.re)
    }

    /// Matrix elements `<basis[r]| self |basis[c]>` in an explicit basis.
    /// This is the restriction of the operator to the basis span; it equals
    /// the operator on any subspace the operator maps into that span.
    pub fn matrix_in_basis(&self, basis: &[StateVector]) -> Result<DenseOperator> {
        let n = basis.len();
        let mut out = DenseOperator::zeros(n);
        for (c, vec) in basis.iter().enumerate() {
            let image = self.apply_to(vec)?;
            for (r, bra) in basis.iter().enumerate() {
                out.set(r, c, bra.inner(&image)?);
            }
        }
        Ok(out)
    }
}
