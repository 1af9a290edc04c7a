use std::f64::consts::PI;

use crate::gates::Gate;

/// Wall-clock durations of the native gates, in seconds.
///
/// The conditional parity is dispersive evolution for time `pi / chi`; a
/// conditional rotation by `theta` runs for the shorter of `|theta|` and
/// `2 pi - |theta|` (angles wrap), divided by `chi`. Mode rotations and
/// global phases are software frame changes and take no time. Conditional
/// displacements carry their echoed synthesis cost of two conditional
/// parities plus one fast pulse.
#[derive(Debug, Clone, PartialEq)]
pub struct GateDurations {
    /// Conditional parity, seconds.
    pub cond_parity: f64,
    /// Beamsplitter, seconds.
    pub beamsplitter: f64,
    /// Single-qubit rotation or unconditional displacement, seconds.
    pub single_qubit: f64,
    /// SNAP-class gates (SNAP, SQR, mode-diagonal phases), seconds.
    pub snap: f64,
    /// Dispersive coupling rate, rad/s.
    pub chi: f64,
}

impl Default for GateDurations {
    fn default() -> Self {
        let chi = PI * 1e6;
        GateDurations {
            cond_parity: PI / chi,
            beamsplitter: 0.25e-6,
            single_qubit: 0.01e-6,
            snap: 1.0e-6,
            chi,
        }
    }
}

impl GateDurations {
    /// Profile with every duration zero, for idealized-timing runs.
    pub fn zero() -> Self {
        GateDurations { cond_parity: 0.0, beamsplitter: 0.0, single_qubit: 0.0, snap: 0.0, chi: 0.0 }
    }

    /// Duration assigned to one instruction.
    pub fn duration_of(&self, gate: &Gate) -> f64 {
        match gate {
            Gate::Rotation { .. } | Gate::GlobalPhase { .. } => 0.0,
            Gate::Displacement { .. } | Gate::QubitRz { .. } | Gate::QubitRphi { .. } => self.single_qubit,
            Gate::Beamsplitter { .. } => self.beamsplitter,
            Gate::CondParity { .. } => self.cond_parity,
            Gate::CondRotation { theta, .. } => {
                if self.chi == 0.0 {
                    0.0
                } else {
                    let w = theta.rem_euclid(2.0 * PI);
                    w.min(2.0 * PI - w) / self.chi
                }
            }
            Gate::CondDisplacement { .. } => 2.0 * self.cond_parity + self.single_qubit,
            Gate::Snap { .. } | Gate::Sqr { .. } | Gate::FockPhase { .. } => self.snap,
            Gate::EffectiveUnitary { duration, .. } | Gate::Idle { duration, .. } => *duration,
            Gate::MeasureQubit { .. } | Gate::ResetQubit { .. } => 0.0,
        }
    }
}
