//! Strided application of local gate actions to amplitude arrays.

use crate::error::Result;
use crate::gates::{AxisId, Gate, GateAction};
use crate::layout::SystemLayout;
use crate::operator::DenseOperator;
use crate::state::StateVector;
use crate::C64;

/// Dimension above which the parallel path is preferred when enabled.
const PARALLEL_THRESHOLD: usize = 1 << 12;

/// Applies `gate` to `state`, choosing the parallel path for large systems
/// when the `parallel` feature is enabled.
pub(crate) fn apply_gate(state: &mut StateVector, gate: &Gate) -> Result<()> {
    let parallel = cfg!(feature = "parallel") && state.layout().dim() >= PARALLEL_THRESHOLD;
    apply_gate_with(state, gate, parallel)
}

/// Applies `gate` on the sequential path unconditionally.
pub(crate) fn apply_gate_sequential(state: &mut StateVector, gate: &Gate) -> Result<()> {
    apply_gate_with(state, gate, false)
}

fn apply_gate_with(state: &mut StateVector, gate: &Gate, parallel: bool) -> Result<()> {
    gate.validate(state.layout())?;
    let action = gate.action(state.layout())?;
    let layout = state.layout().clone();
    match action {
        GateAction::None => {}
        GateAction::Scalar(s) => {
            for amp in state.amps_mut() {
                *amp *= s;
            }
        }
        GateAction::Diagonal { axes, phases } => {
            apply_diagonal(state.amps_mut(), &layout, &axes, &phases, parallel);
        }
        GateAction::Local { axes, matrix } => {
            apply_local(state.amps_mut(), &layout, &axes, &matrix, parallel);
        }
    }
    Ok(())
}

fn axis_spec(layout: &SystemLayout, axes: &[AxisId]) -> (Vec<usize>, Vec<usize>) {
    let dims = axes.iter().map(|&a| layout.axis_dim(a)).collect();
    let strides = axes.iter().map(|&a| layout.stride(a)).collect();
    (dims, strides)
}

/// Offsets of each local configuration relative to a base index.
pub(crate) fn local_offsets(dims: &[usize], strides: &[usize]) -> Vec<usize> {
    let local_dim: usize = dims.iter().product();
    let mut offsets = Vec::with_capacity(local_dim);
    for mut l in 0..local_dim {
        let mut off = 0;
        for (&d, &s) in dims.iter().zip(strides) {
            off += (l % d) * s;
            l /= d;
        }
        offsets.push(off);
    }
    offsets
}

/// Base indices enumerating the complement of the target axes.
pub(crate) fn base_indices(layout: &SystemLayout, targets: &[AxisId]) -> Vec<usize> {
    let rest: Vec<AxisId> = layout.axes().into_iter().filter(|a| !targets.contains(a)).collect();
    let (dims, strides) = axis_spec(layout, &rest);
    let count: usize = dims.iter().product();
    let mut bases = Vec::with_capacity(count);
    for mut k in 0..count {
        let mut base = 0;
        for (&d, &s) in dims.iter().zip(&strides) {
            base += (k % d) * s;
            k /= d;
        }
        bases.push(base);
    }
    bases
}

fn apply_diagonal(amps: &mut [C64], layout: &SystemLayout, axes: &[AxisId], phases: &[C64], parallel: bool) {
    let (dims, strides) = axis_spec(layout, axes);
    let phase_of = |idx: usize| {
        let mut l = 0;
        let mut w = 1;
        for (&d, &s) in dims.iter().zip(&strides) {
            l += ((idx / s) % d) * w;
            w *= d;
        }
        phases[l]
    };
    if parallel {
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            amps.par_iter_mut().enumerate().for_each(|(idx, amp)| {
                *amp *= phase_of(idx);
            });
            return;
        }
    }
    for (idx, amp) in amps.iter_mut().enumerate() {
        *amp *= phase_of(idx);
    }
}

fn apply_local(amps: &mut [C64], layout: &SystemLayout, axes: &[AxisId], matrix: &DenseOperator, parallel: bool) {
    let (dims, strides) = axis_spec(layout, axes);
    let offsets = local_offsets(&dims, &strides);
    let bases = base_indices(layout, axes);
    let d = offsets.len();
    debug_assert_eq!(matrix.dim(), d);

    let kernel = |base: usize, scratch: &mut Vec<C64>, amps: &mut [C64]| {
        scratch.clear();
        for &off in &offsets {
            scratch.push(amps[base + off]);
        }
        let m = matrix.data();
        for (r, &off) in offsets.iter().enumerate() {
            let row = &m[r * d..(r + 1) * d];
            let mut acc = C64::new(0.0, 0.0);
            for (&mv, &xv) in row.iter().zip(scratch.iter()) {
                acc += mv * xv;
            }
            amps[base + off] = acc;
        }
    };

    if parallel {
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            struct Amps(*mut C64, usize);
            unsafe impl Send for Amps {}
            unsafe impl Sync for Amps {}
            let shared = Amps(amps.as_mut_ptr(), amps.len());
            let shared = &shared;
            bases.par_iter().for_each_init(
                || Vec::with_capacity(d),
                move |scratch, &base| {
                    // Bases partition the index set: distinct bases touch
                    // disjoint amplitude slots, so unsynchronized writes are
                    // race-free.
                    let view = unsafe { std::slice::from_raw_parts_mut(shared.0, shared.1) };
                    kernel(base, scratch, view);
                },
            );
            return;
        }
    }
    let mut scratch = Vec::with_capacity(d);
    for &base in &bases {
        kernel(base, &mut scratch, amps);
    }
}
