//! Statevector kernel for hybrid systems of truncated bosonic modes and qubits.
//!
//! A [`SystemLayout`] fixes the tensor factors (modes with per-mode Fock
//! cutoffs, then qubits) and the index convention. [`StateVector`] holds
//! amplitudes over that layout, [`Gate`] enumerates the native instruction
//! set, and [`Circuit`] is an ordered gate list with per-instruction wall-clock
//! durations drawn from a [`GateDurations`] profile. Gates act through a
//! strided local applier that never materializes full-dimension matrices;
//! dense matrices appear only in [`DenseOperator`] for small-system work and
//! test oracles.

mod apply;
mod circuit;
mod durations;
mod error;
mod gates;
mod layout;
mod linalg;
mod operator;
pub mod par;
mod state;

pub use circuit::{Circuit, GateInstruction};
pub use durations::GateDurations;
pub use error::{Error, Result};
pub use gates::{AxisId, Gate};
pub use layout::SystemLayout;
pub use linalg::{eigh, expm_hermitian, expm_taylor};
pub use operator::DenseOperator;
pub use state::StateVector;

/// Complex amplitude type used throughout.
pub type C64 = num_complex::Complex64;

/// Default dimension cap for dense-unitary extraction.
pub const DENSE_UNITARY_CAP: usize = 4096;
