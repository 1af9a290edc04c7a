use crate::error::{Error, Result};
use crate::gates::AxisId;

/// Tensor-factor layout: bosonic modes with individual Fock cutoffs, then qubits.
///
/// Basis states are indexed little-endian with modes least significant: mode 0
/// has stride 1, higher modes follow in order, and qubits sit above all modes.
/// A mode with cutoff `c` spans occupations `0..=c` (dimension `c + 1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemLayout {
    cutoffs: Vec<usize>,
    n_qubits: usize,
}

impl SystemLayout {
    /// Builds a layout from per-mode cutoffs and a qubit count.
    pub fn new(mode_cutoffs: &[usize], n_qubits: usize) -> Result<Self> {
        if mode_cutoffs.is_empty() && n_qubits == 0 {
            return Err(Error::EmptyLayout);
        }
        for (mode, &c) in mode_cutoffs.iter().enumerate() {
            if c < 1 {
                return Err(Error::BadCutoff { mode });
            }
        }
        Ok(SystemLayout { cutoffs: mode_cutoffs.to_vec(), n_qubits })
    }

    pub fn n_modes(&self) -> usize {
        self.cutoffs.len()
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    /// Fock cutoff (highest retained occupation) of `mode`.
    pub fn cutoff(&self, mode: usize) -> usize {
        self.cutoffs[mode]
    }

    /// Dimension of `mode`, i.e. cutoff + 1.
    pub fn mode_dim(&self, mode: usize) -> usize {
        self.cutoffs[mode] + 1
    }

    /// Total Hilbert-space dimension.
    pub fn dim(&self) -> usize {
        self.cutoffs.iter().map(|c| c + 1).product::<usize>() << self.n_qubits
    }

    /// Stride of an axis in the flat amplitude array.
    pub fn stride(&self, axis: AxisId) -> usize {
        match axis {
            AxisId::Mode(m) => self.cutoffs[..m].iter().map(|c| c + 1).product(),
            AxisId::Qubit(q) => {
                let modes: usize = self.cutoffs.iter().map(|c| c + 1).product();
                modes << q
            }
        }
    }

    /// Dimension of an axis (mode dimension, or 2 for a qubit).
    pub fn axis_dim(&self, axis: AxisId) -> usize {
        match axis {
            AxisId::Mode(m) => self.mode_dim(m),
            AxisId::Qubit(_) => 2,
        }
    }

    /// All axes in stride order, least significant first.
    pub fn axes(&self) -> Vec<AxisId> {
        (0..self.n_modes())
            .map(AxisId::Mode)
            .chain((0..self.n_qubits).map(AxisId::Qubit))
            .collect()
    }

    pub fn check_mode(&self, mode: usize) -> Result<()> {
        if mode >= self.n_modes() {
            return Err(Error::ModeOutOfRange { mode, count: self.n_modes() });
        }
        Ok(())
    }

    pub fn check_qubit(&self, qubit: usize) -> Result<()> {
        if qubit >= self.n_qubits {
            return Err(Error::QubitOutOfRange { qubit, count: self.n_qubits });
        }
        Ok(())
    }

    /// Flat index of the basis state with occupations `fock` and qubit values `bits`.
    pub fn index_of(&self, fock: &[usize], bits: &[u8]) -> Result<usize> {
        if fock.len() != self.n_modes() {
            return Err(Error::WrongLength { what: "fock occupations", got: fock.len(), need: self.n_modes() });
        }
        if bits.len() != self.n_qubits {
            return Err(Error::WrongLength { what: "qubit values", got: bits.len(), need: self.n_qubits });
        }
        let mut idx = 0;
        let mut stride = 1;
        for (mode, (&n, &c)) in fock.iter().zip(&self.cutoffs).enumerate() {
            if n > c {
                return Err(Error::OccupationBeyondCutoff { mode, n, cutoff: c });
            }
            idx += n * stride;
            stride *= c + 1;
        }
        for &b in bits {
            if b > 1 {
                return Err(Error::BadQubitValue { value: b });
            }
            idx += (b as usize) * stride;
            stride *= 2;
        }
        Ok(idx)
    }

    /// Occupations and qubit values of a flat basis index.
    pub fn decompose(&self, mut idx: usize) -> (Vec<usize>, Vec<u8>) {
        let mut fock = Vec::with_capacity(self.n_modes());
        for &c in &self.cutoffs {
            fock.push(idx % (c + 1));
            idx /= c + 1;
        }
        let mut bits = Vec::with_capacity(self.n_qubits);
        for _ in 0..self.n_qubits {
            bits.push((idx & 1) as u8);
            idx >>= 1;
        }
        (fock, bits)
    }
}
