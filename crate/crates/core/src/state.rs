use rand::Rng;

use crate::error::{Error, Result};
use crate::gates::AxisId;
use crate::layout::SystemLayout;
use crate::operator::DenseOperator;
use crate::C64;

/// Amplitude vector over a [`SystemLayout`].
#[derive(Debug, Clone)]
pub struct StateVector {
    layout: SystemLayout,
    amps: Vec<C64>,
}

impl StateVector {
    /// Computational basis state with the given occupations and qubit values.
    pub fn basis_state(layout: &SystemLayout, fock: &[usize], bits: &[u8]) -> Result<Self> {
        let idx = layout.index_of(fock, bits)?;
        let mut amps = vec![C64::new(0.0, 0.0); layout.dim()];
        amps[idx] = C64::new(1.0, 0.0);
        Ok(StateVector { layout: layout.clone(), amps })
    }

    /// State from explicit amplitudes; the vector length must match the layout.
    pub fn from_amplitudes(layout: &SystemLayout, amps: Vec<C64>) -> Result<Self> {
        if amps.len() != layout.dim() {
            return Err(Error::WrongLength { what: "amplitudes", got: amps.len(), need: layout.dim() });
        }
        Ok(StateVector { layout: layout.clone(), amps })
    }

    /// Haar-distributed random state: i.i.d. complex Gaussian amplitudes, normalized.
    pub fn random(layout: &SystemLayout, rng: &mut impl Rng) -> Self {
        let mut amps = Vec::with_capacity(layout.dim());
        for _ in 0..layout.dim() {
            // Box-Muller from two uniform draws.
            let u1: f64 = rng.random::<f64>().max(1e-300);
            let u2: f64 = rng.random();
            let mag = (-2.0 * u1.ln()).sqrt();
            let ang = 2.0 * std::f64::consts::PI * u2;
            amps.push(C64::new(mag * ang.cos(), mag * ang.sin()));
        }
        let mut state = StateVector { layout: layout.clone(), amps };
        state.normalize();
        state
    }

    pub fn layout(&self) -> &SystemLayout {
        &self.layout
    }

    pub fn amps(&self) -> &[C64] {
        &self.amps
    }

    pub fn amps_mut(&mut self) -> &mut [C64] {
        &mut self.amps
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn normalize(&mut self) {
        let n = self.norm();
        if n > 0.0 {
            let inv = 1.0 / n;
            for a in &mut self.amps {
                *a *= inv;
            }
        }
    }

    /// Inner product `<self|other>`.
    pub fn inner(&self, other: &Self) -> Result<C64> {
        if self.layout != other.layout {
            return Err(Error::LayoutMismatch);
        }
        Ok(self.amps.iter().zip(&other.amps).map(|(a, b)| a.conj() * b).sum())
    }

    /// `|<self|other>|^2`.
    pub fn fidelity(&self, other: &Self) -> Result<f64> {
        Ok(self.inner(other)?.norm_sqr())
    }

    /// `<self| op |self>` for a dense operator over the full space.
    pub fn expectation(&self, op: &DenseOperator) -> Result<C64> {
        if op.dim() != self.amps.len() {
            return Err(Error::MatrixDimMismatch { got: op.dim(), need: self.amps.len() });
        }
        let y = op.apply(&self.amps)?;
        Ok(self.amps.iter().zip(&y).map(|(a, b)| a.conj() * b).sum())
    }

    /// Probability weight on basis states with occupation of `mode` within
    /// two of the cutoff. Nonzero weight here signals truncation risk.
    pub fn truncation_weight(&self, mode: usize) -> Result<f64> {
        self.layout.check_mode(mode)?;
        let cutoff = self.layout.cutoff(mode);
        let edge = cutoff.saturating_sub(1);
        let dim = self.layout.mode_dim(mode);
        let stride = self.layout.stride(AxisId::Mode(mode));
        let mut w = 0.0;
        for (idx, amp) in self.amps.iter().enumerate() {
            let n = (idx / stride) % dim;
            if n >= edge {
                w += amp.norm_sqr();
            }
        }
        Ok(w)
    }

    /// Largest truncation weight across all modes.
    pub fn max_truncation_weight(&self) -> f64 {
        (0..self.layout.n_modes())
            .map(|m| self.truncation_weight(m).unwrap())
            .fold(0.0, f64::max)
    }

    /// Probability that `qubit` reads 1.
    pub fn prob_qubit_one(&self, qubit: usize) -> Result<f64> {
        self.layout.check_qubit(qubit)?;
        let stride = self.layout.stride(AxisId::Qubit(qubit));
        let mut p = 0.0;
        for (idx, amp) in self.amps.iter().enumerate() {
            if (idx / stride) % 2 == 1 {
                p += amp.norm_sqr();
            }
        }
        Ok(p)
    }

    /// Expectation of Z on `qubit`.
    pub fn qubit_z_expectation(&self, qubit: usize) -> Result<f64> {
        Ok(1.0 - 2.0 * self.prob_qubit_one(qubit)?)
    }

    /// Mean occupation of `mode`.
    pub fn mode_occupation(&self, mode: usize) -> Result<f64> {
        self.layout.check_mode(mode)?;
        let dim = self.layout.mode_dim(mode);
        let stride = self.layout.stride(AxisId::Mode(mode));
        let mut acc = 0.0;
        for (idx, amp) in self.amps.iter().enumerate() {
            acc += ((idx / stride) % dim) as f64 * amp.norm_sqr();
        }
        Ok(acc)
    }

    /// Probability distribution over occupations of `mode`.
    pub fn mode_distribution(&self, mode: usize) -> Result<Vec<f64>> {
        self.layout.check_mode(mode)?;
        let dim = self.layout.mode_dim(mode);
        let stride = self.layout.stride(AxisId::Mode(mode));
        let mut p = vec![0.0; dim];
        for (idx, amp) in self.amps.iter().enumerate() {
            p[(idx / stride) % dim] += amp.norm_sqr();
        }
        Ok(p)
    }

    /// Projects onto the given outcome of `qubit` and renormalizes.
    /// Returns the probability of that outcome before projection.
    pub fn collapse_qubit(&mut self, qubit: usize, outcome: u8) -> Result<f64> {
        self.layout.check_qubit(qubit)?;
        let stride = self.layout.stride(AxisId::Qubit(qubit));
        let want = (outcome & 1) as usize;
        let mut p = 0.0;
        for (idx, amp) in self.amps.iter().enumerate() {
            if (idx / stride) % 2 == want {
                p += amp.norm_sqr();
            }
        }
        for (idx, amp) in self.amps.iter_mut().enumerate() {
            if (idx / stride) % 2 != want {
                *amp = C64::new(0.0, 0.0);
            }
        }
        self.normalize();
        Ok(p)
    }

    /// Samples a projective measurement of `qubit`, collapsing the state.
    pub fn measure_qubit(&mut self, qubit: usize, rng: &mut impl Rng) -> Result<u8> {
        let p1 = self.prob_qubit_one(qubit)?;
        let outcome = if rng.random::<f64>() < p1 { 1 } else { 0 };
        self.collapse_qubit(qubit, outcome)?;
        Ok(outcome)
    }

    /// Measures `qubit` and returns it to 0 (measurement plus classically
    /// conditioned flip). Returns the observed outcome.
    pub fn measure_and_ground_qubit(&mut self, qubit: usize, rng: &mut impl Rng) -> Result<u8> {
        let outcome = self.measure_qubit(qubit, rng)?;
        if outcome == 1 {
            let stride = self.layout.stride(AxisId::Qubit(qubit));
            for idx in 0..self.amps.len() {
                if (idx / stride) % 2 == 1 {
                    self.amps[idx - stride] = self.amps[idx];
                    self.amps[idx] = C64::new(0.0, 0.0);
                }
            }
        }
        Ok(outcome)
    }

    /// Samples a basis index from the Born distribution.
    pub fn sample_index(&self, rng: &mut impl Rng) -> usize {
        let u: f64 = rng.random::<f64>() * self.norm().powi(2);
        let mut acc = 0.0;
        for (idx, amp) in self.amps.iter().enumerate() {
            acc += amp.norm_sqr();
            if u < acc {
                return idx;
            }
        }
        self.amps.len() - 1
    }
}
