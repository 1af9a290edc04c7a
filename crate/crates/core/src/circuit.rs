use std::collections::HashMap;

use crate::apply::{apply_gate, apply_gate_sequential};
use crate::durations::GateDurations;
use crate::error::{Error, Result};
use crate::gates::{AxisId, Gate};
use crate::layout::SystemLayout;
use crate::operator::DenseOperator;
use crate::state::StateVector;
use crate::{C64, DENSE_UNITARY_CAP};

/// One gate with its assigned wall-clock duration in seconds.
#[derive(Debug, Clone)]
pub struct GateInstruction {
    pub gate: Gate,
    pub duration: f64,
}

/// Ordered instruction list over a fixed layout.
///
/// Instructions apply in list order (index 0 acts first). Durations are
/// attached at push time from the circuit's [`GateDurations`] profile.
#[derive(Debug, Clone)]
pub struct Circuit {
    layout: SystemLayout,
    durations: GateDurations,
    instructions: Vec<GateInstruction>,
}

impl Circuit {
    pub fn new(layout: SystemLayout, durations: GateDurations) -> Self {
        Circuit { layout, durations, instructions: Vec::new() }
    }

    pub fn layout(&self) -> &SystemLayout {
        &self.layout
    }

    pub fn durations(&self) -> &GateDurations {
        &self.durations
    }

    pub fn instructions(&self) -> &[GateInstruction] {
        &self.instructions
    }

    pub fn len(&self) -> usize {
        self.instructions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.instructions.is_empty()
    }

    /// Validates the gate against the layout and appends it.
    pub fn push(&mut self, gate: Gate) -> Result<()> {
        gate.validate(&self.layout)?;
        let duration = self.durations.duration_of(&gate);
        self.instructions.push(GateInstruction { gate, duration });
        Ok(())
    }

    /// Appends every gate in order.
    pub fn push_all(&mut self, gates: impl IntoIterator<Item = Gate>) -> Result<()> {
        for g in gates {
            self.push(g)?;
        }
        Ok(())
    }

    /// Appends another circuit's instructions; layouts must match.
    pub fn extend(&mut self, other: &Circuit) -> Result<()> {
        if other.layout != self.layout {
            return Err(Error::LayoutMismatch);
        }
        self.instructions.extend(other.instructions.iter().cloned());
        Ok(())
    }

    /// Inverse circuit: reversed order, each gate replaced by its adjoint
    /// sequence. Fails on measurement instructions.
    pub fn adjoint(&self) -> Result<Circuit> {
        let mut out = Circuit::new(self.layout.clone(), self.durations.clone());
        for instr in self.instructions.iter().rev() {
            out.push_all(instr.gate.adjoint()?)?;
        }
        Ok(out)
    }

    /// Sum of instruction durations.
    pub fn total_duration(&self) -> f64 {
        self.instructions.iter().map(|i| i.duration).sum()
    }

    /// Earliest-start schedule length: each instruction starts when all of
    /// its operand axes are free, instructions without operands take no slot.
    pub fn critical_path_duration(&self) -> f64 {
        let mut free_at: HashMap<AxisId, f64> = HashMap::new();
        let mut makespan = 0.0_f64;
        for instr in &self.instructions {
            let operands = instr.gate.operand_axes();
            if operands.is_empty() {
                continue;
            }
            let start = operands.iter().filter_map(|a| free_at.get(a)).fold(0.0, |m: f64, &t| m.max(t));
            let finish = start + instr.duration;
            for a in operands {
                free_at.insert(a, finish);
            }
            makespan = makespan.max(finish);
        }
        makespan
    }

    /// Count of instructions matching a predicate.
    pub fn count_gates(&self, pred: impl Fn(&Gate) -> bool) -> usize {
        self.instructions.iter().filter(|i| pred(&i.gate)).count()
    }

    /// Applies the circuit to a state in place. Fails on measurement
    /// instructions; sampling executors handle those.
    pub fn apply_to(&self, state: &mut StateVector) -> Result<()> {
        if *state.layout() != self.layout {
            return Err(Error::LayoutMismatch);
        }
        for instr in &self.instructions {
            apply_gate(state, &instr.gate)?;
        }
        Ok(())
    }

    /// Sequential-path variant of [`Circuit::apply_to`], for benchmarking.
    pub fn apply_to_sequential(&self, state: &mut StateVector) -> Result<()> {
        if *state.layout() != self.layout {
            return Err(Error::LayoutMismatch);
        }
        for instr in &self.instructions {
            apply_gate_sequential(state, &instr.gate)?;
        }
        Ok(())
    }

    /// Dense matrix of the whole circuit, capped at [`DENSE_UNITARY_CAP`].
    pub fn exact_unitary(&self) -> Result<DenseOperator> {
        self.exact_unitary_capped(DENSE_UNITARY_CAP)
    }

    /// Dense matrix of the whole circuit with an explicit dimension cap.
    pub fn exact_unitary_capped(&self, cap: usize) -> Result<DenseOperator> {
        let dim = self.layout.dim();
        if dim > cap {
            return Err(Error::DenseCapExceeded { dim, cap });
        }
        let mut columns: Vec<StateVector> = Vec::with_capacity(dim);
        for idx in 0..dim {
            let mut amps = vec![C64::new(0.0, 0.0); dim];
            amps[idx] = C64::new(1.0, 0.0);
            let mut col = StateVector::from_amplitudes(&self.layout, amps)?;
            self.apply_to(&mut col)?;
            columns.push(col);
        }
        Ok(DenseOperator::from_fn(dim, |r, c| columns[c].amps()[r]))
    }
}
