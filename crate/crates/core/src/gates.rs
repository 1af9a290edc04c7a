use std::sync::Arc;

use crate::error::{Error, Result};
use crate::layout::SystemLayout;
use crate::linalg::expm_hermitian;
use crate::operator::DenseOperator;
use crate::C64;

/// A tensor-factor address: one bosonic mode or one qubit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AxisId {
    Mode(usize),
    Qubit(usize),
}

/// Native and bookkeeping instructions.
///
/// Generator conventions, with `n` the mode number operator, `a` the mode
/// annihilation operator, and `Z|0> = +|0>`:
///
/// * `Rotation(theta)`: `exp(-i theta n)`
/// * `Displacement(alpha)`: `exp(alpha a^dag - alpha* a)`
/// * `Beamsplitter(phi, theta)` on modes `(a, b)`:
///   `exp(-i theta (e^{i phi} a^dag b + e^{-i phi} a b^dag))`
/// * `QubitRz(theta)`: `exp(-i (theta/2) Z)`
/// * `QubitRphi(phi, theta)`: `exp(-i (theta/2) (X cos phi + Y sin phi))`
/// * `CondRotation(theta)`: `exp(-i (theta/2) Z n)`
/// * `CondParity`: `exp(-i (pi/2) Z n)`
/// * `CondDisplacement(alpha)`: `exp(Z (alpha a^dag - alpha* a))`
/// * `Snap(thetas)`: `exp(-i Z sum_n thetas[n] |n><n|)`
/// * `Sqr(thetas, phis)`: `sum_n R^{phis[n]}(thetas[n]) (x) |n><n|`
/// * `FockPhase(thetas)`: `exp(-i sum_n thetas[n] |n><n|)`, a qubit-free
///   mode-diagonal phase; `parked_qubit` records which idle qubit carries the
///   realization for noise-exposure accounting
/// * `EffectiveUnitary`: explicit unitary on the listed axes with an assigned
///   duration, for operations treated as single effective blocks
/// * `GlobalPhase(theta)`: multiplies the state by `e^{i theta}`; classical
///   frame bookkeeping with no operands and no duration
/// * `Idle`: wall-clock exposure on the listed qubits, no unitary action
/// * `MeasureQubit` / `ResetQubit`: handled by sampling executors only
#[derive(Debug, Clone)]
pub enum Gate {
    Rotation { mode: usize, theta: f64 },
    Displacement { mode: usize, alpha: C64 },
    Beamsplitter { mode_a: usize, mode_b: usize, phi: f64, theta: f64 },
    QubitRz { qubit: usize, theta: f64 },
    QubitRphi { qubit: usize, phi: f64, theta: f64 },
    CondRotation { qubit: usize, mode: usize, theta: f64 },
    CondParity { qubit: usize, mode: usize },
    CondDisplacement { qubit: usize, mode: usize, alpha: C64 },
    Snap { qubit: usize, mode: usize, thetas: Vec<f64> },
    Sqr { qubit: usize, mode: usize, thetas: Vec<f64>, phis: Vec<f64> },
    FockPhase { mode: usize, thetas: Vec<f64>, parked_qubit: Option<usize> },
    EffectiveUnitary {
        modes: Vec<usize>,
        qubits: Vec<usize>,
        matrix: Arc<DenseOperator>,
        duration: f64,
        label: String,
    },
    GlobalPhase { theta: f64 },
    Idle { qubits: Vec<usize>, duration: f64 },
    MeasureQubit { qubit: usize },
    ResetQubit { qubit: usize },
}

/// How a gate acts on the amplitude array.
pub(crate) enum GateAction {
    /// Phase per local configuration of the listed axes.
    Diagonal { axes: Vec<AxisId>, phases: Vec<C64> },
    /// Dense local matrix over the listed axes, least-significant axis first.
    Local { axes: Vec<AxisId>, matrix: DenseOperator },
    /// Uniform scalar on every amplitude.
    Scalar(C64),
    /// No action on amplitudes.
    None,
}

impl Gate {
    pub fn name(&self) -> &'static str {
        match self {
            Gate::Rotation { .. } => "rotation",
            Gate::Displacement { .. } => "displacement",
            Gate::Beamsplitter { .. } => "beamsplitter",
            Gate::QubitRz { .. } => "qubit_rz",
            Gate::QubitRphi { .. } => "qubit_rphi",
            Gate::CondRotation { .. } => "cond_rotation",
            Gate::CondParity { .. } => "cond_parity",
            Gate::CondDisplacement { .. } => "cond_displacement",
            Gate::Snap { .. } => "snap",
            Gate::Sqr { .. } => "sqr",
            Gate::FockPhase { .. } => "fock_phase",
            Gate::EffectiveUnitary { .. } => "effective_unitary",
            Gate::GlobalPhase { .. } => "global_phase",
            Gate::Idle { .. } => "idle",
            Gate::MeasureQubit { .. } => "measure_qubit",
            Gate::ResetQubit { .. } => "reset_qubit",
        }
    }

    /// Axes the instruction occupies for scheduling and noise exposure.
    pub fn operand_axes(&self) -> Vec<AxisId> {
        match self {
            Gate::Rotation { mode, .. } | Gate::Displacement { mode, .. } => vec![AxisId::Mode(*mode)],
            Gate::Beamsplitter { mode_a, mode_b, .. } => vec![AxisId::Mode(*mode_a), AxisId::Mode(*mode_b)],
            Gate::QubitRz { qubit, .. } | Gate::QubitRphi { qubit, .. } => vec![AxisId::Qubit(*qubit)],
            Gate::CondRotation { qubit, mode, .. }
            | Gate::CondParity { qubit, mode }
            | Gate::CondDisplacement { qubit, mode, .. }
            | Gate::Snap { qubit, mode, .. }
            | Gate::Sqr { qubit, mode, .. } => vec![AxisId::Qubit(*qubit), AxisId::Mode(*mode)],
            Gate::FockPhase { mode, parked_qubit, .. } => {
                let mut axes = vec![AxisId::Mode(*mode)];
                if let Some(q) = parked_qubit {
                    axes.push(AxisId::Qubit(*q));
                }
                axes
            }
            Gate::EffectiveUnitary { modes, qubits, .. } => modes
                .iter()
                .map(|&m| AxisId::Mode(m))
                .chain(qubits.iter().map(|&q| AxisId::Qubit(q)))
                .collect(),
            Gate::GlobalPhase { .. } => vec![],
            Gate::Idle { qubits, .. } => qubits.iter().map(|&q| AxisId::Qubit(q)).collect(),
            Gate::MeasureQubit { qubit } | Gate::ResetQubit { qubit } => vec![AxisId::Qubit(*qubit)],
        }
    }

    /// Qubits exposed to decoherence while the instruction runs.
    pub fn exposed_qubits(&self) -> Vec<usize> {
        self.operand_axes()
            .into_iter()
            .filter_map(|a| match a {
                AxisId::Qubit(q) => Some(q),
                AxisId::Mode(_) => None,
            })
            .collect()
    }

    pub fn is_measurement(&self) -> bool {
        matches!(self, Gate::MeasureQubit { .. } | Gate::ResetQubit { .. })
    }

    /// Validates targets and parameters against a layout.
    pub fn validate(&self, layout: &SystemLayout) -> Result<()> {
        let finite = |ok: bool| {
            if ok { Ok(()) } else { Err(Error::NonFiniteParameter { gate: self.name() }) }
        };
        match self {
            Gate::Rotation { mode, theta } => {
                layout.check_mode(*mode)?;
                finite(theta.is_finite())
            }
            Gate::Displacement { mode, alpha } => {
                layout.check_mode(*mode)?;
                finite(alpha.re.is_finite() && alpha.im.is_finite())
            }
            Gate::Beamsplitter { mode_a, mode_b, phi, theta } => {
                layout.check_mode(*mode_a)?;
                layout.check_mode(*mode_b)?;
                if mode_a == mode_b {
                    return Err(Error::DuplicateTarget { gate: self.name() });
                }
                finite(phi.is_finite() && theta.is_finite())
            }
            Gate::QubitRz { qubit, theta } => {
                layout.check_qubit(*qubit)?;
                finite(theta.is_finite())
            }
            Gate::QubitRphi { qubit, phi, theta } => {
                layout.check_qubit(*qubit)?;
                finite(phi.is_finite() && theta.is_finite())
            }
            Gate::CondRotation { qubit, mode, theta } => {
                layout.check_qubit(*qubit)?;
                layout.check_mode(*mode)?;
                finite(theta.is_finite())
            }
            Gate::CondParity { qubit, mode } => {
                layout.check_qubit(*qubit)?;
                layout.check_mode(*mode)
            }
            Gate::CondDisplacement { qubit, mode, alpha } => {
                layout.check_qubit(*qubit)?;
                layout.check_mode(*mode)?;
                finite(alpha.re.is_finite() && alpha.im.is_finite())
            }
            Gate::Snap { qubit, mode, thetas } => {
                layout.check_qubit(*qubit)?;
                layout.check_mode(*mode)?;
                if thetas.len() != layout.mode_dim(*mode) {
                    return Err(Error::WrongLength {
                        what: "snap phase list",
                        got: thetas.len(),
                        need: layout.mode_dim(*mode),
                    });
                }
                finite(thetas.iter().all(|t| t.is_finite()))
            }
            Gate::Sqr { qubit, mode, thetas, phis } => {
                layout.check_qubit(*qubit)?;
                layout.check_mode(*mode)?;
                if thetas.len() != layout.mode_dim(*mode) {
                    return Err(Error::WrongLength {
                        what: "sqr theta list",
                        got: thetas.len(),
                        need: layout.mode_dim(*mode),
                    });
                }
                if phis.len() != thetas.len() {
                    return Err(Error::WrongLength { what: "sqr phi list", got: phis.len(), need: thetas.len() });
                }
                finite(thetas.iter().chain(phis).all(|t| t.is_finite()))
            }
            Gate::FockPhase { mode, thetas, parked_qubit } => {
                layout.check_mode(*mode)?;
                if let Some(q) = parked_qubit {
                    layout.check_qubit(*q)?;
                }
                if thetas.len() != layout.mode_dim(*mode) {
                    return Err(Error::WrongLength {
                        what: "fock phase list",
                        got: thetas.len(),
                        need: layout.mode_dim(*mode),
                    });
                }
                finite(thetas.iter().all(|t| t.is_finite()))
            }
            Gate::EffectiveUnitary { modes, qubits, matrix, duration, .. } => {
                let mut axes = Vec::new();
                for &m in modes {
                    layout.check_mode(m)?;
                    axes.push(AxisId::Mode(m));
                }
                for &q in qubits {
                    layout.check_qubit(q)?;
                    axes.push(AxisId::Qubit(q));
                }
                let mut sorted = axes.clone();
                sorted.sort();
                sorted.dedup();
                if sorted.len() != axes.len() {
                    return Err(Error::DuplicateTarget { gate: self.name() });
                }
                let need: usize = axes.iter().map(|&a| layout.axis_dim(a)).product();
                if matrix.dim() != need {
                    return Err(Error::MatrixDimMismatch { got: matrix.dim(), need });
                }
                let defect = matrix.unitarity_defect();
                if defect > 1e-9 {
                    return Err(Error::NotUnitary { dev: defect });
                }
                finite(duration.is_finite() && *duration >= 0.0)
            }
            Gate::GlobalPhase { theta } => finite(theta.is_finite()),
            Gate::Idle { qubits, duration } => {
                for &q in qubits {
                    layout.check_qubit(q)?;
                }
                finite(duration.is_finite() && *duration >= 0.0)
            }
            Gate::MeasureQubit { qubit } | Gate::ResetQubit { qubit } => layout.check_qubit(*qubit),
        }
    }

    /// Gate sequence implementing the inverse, in application order.
    pub fn adjoint(&self) -> Result<Vec<Gate>> {
        let neg = |v: &[f64]| v.iter().map(|t| -t).collect::<Vec<_>>();
        Ok(match self {
            Gate::Rotation { mode, theta } => vec![Gate::Rotation { mode: *mode, theta: -theta }],
            Gate::Displacement { mode, alpha } => vec![Gate::Displacement { mode: *mode, alpha: -alpha }],
            Gate::Beamsplitter { mode_a, mode_b, phi, theta } => {
                vec![Gate::Beamsplitter { mode_a: *mode_a, mode_b: *mode_b, phi: *phi, theta: -theta }]
            }
            Gate::QubitRz { qubit, theta } => vec![Gate::QubitRz { qubit: *qubit, theta: -theta }],
            Gate::QubitRphi { qubit, phi, theta } => {
                vec![Gate::QubitRphi { qubit: *qubit, phi: *phi, theta: -theta }]
            }
            Gate::CondRotation { qubit, mode, theta } => {
                vec![Gate::CondRotation { qubit: *qubit, mode: *mode, theta: -theta }]
            }
            Gate::CondParity { qubit, mode } => vec![
                Gate::CondParity { qubit: *qubit, mode: *mode },
                Gate::Rotation { mode: *mode, theta: -std::f64::consts::PI },
            ],
            Gate::CondDisplacement { qubit, mode, alpha } => {
                vec![Gate::CondDisplacement { qubit: *qubit, mode: *mode, alpha: -alpha }]
            }
            Gate::Snap { qubit, mode, thetas } => {
                vec![Gate::Snap { qubit: *qubit, mode: *mode, thetas: neg(thetas) }]
            }
            Gate::Sqr { qubit, mode, thetas, phis } => {
                vec![Gate::Sqr { qubit: *qubit, mode: *mode, thetas: neg(thetas), phis: phis.clone() }]
            }
            Gate::FockPhase { mode, thetas, parked_qubit } => vec![Gate::FockPhase {
                mode: *mode,
                thetas: neg(thetas),
                parked_qubit: *parked_qubit,
            }],
            Gate::EffectiveUnitary { modes, qubits, matrix, duration, label } => vec![Gate::EffectiveUnitary {
                modes: modes.clone(),
                qubits: qubits.clone(),
                matrix: Arc::new(matrix.dagger()),
                duration: *duration,
                label: format!("{label}_dag"),
            }],
            Gate::GlobalPhase { theta } => vec![Gate::GlobalPhase { theta: -theta }],
            Gate::Idle { qubits, duration } => vec![Gate::Idle { qubits: qubits.clone(), duration: *duration }],
            Gate::MeasureQubit { .. } | Gate::ResetQubit { .. } => {
                return Err(Error::MeasurementUnsupported)
            }
        })
    }

    /// Action of the gate on amplitudes over `layout`.
    pub(crate) fn action(&self, layout: &SystemLayout) -> Result<GateAction> {
        let i = C64::new(0.0, 1.0);
        Ok(match self {
            Gate::Rotation { mode, theta } => {
                let d = layout.mode_dim(*mode);
                let phases = (0..d).map(|n| (-i * (theta * n as f64)).exp()).collect();
                GateAction::Diagonal { axes: vec![AxisId::Mode(*mode)], phases }
            }
            Gate::QubitRz { qubit, theta } => {
                let phases = vec![(-i * (theta / 2.0)).exp(), (i * (theta / 2.0)).exp()];
                GateAction::Diagonal { axes: vec![AxisId::Qubit(*qubit)], phases }
            }
            Gate::CondRotation { qubit, mode, theta } => {
                cond_diag(layout, *qubit, *mode, |n| theta / 2.0 * n as f64)
            }
            Gate::CondParity { qubit, mode } => {
                cond_diag(layout, *qubit, *mode, |n| std::f64::consts::FRAC_PI_2 * n as f64)
            }
            Gate::Snap { qubit, mode, thetas } => cond_diag(layout, *qubit, *mode, |n| thetas[n]),
            Gate::FockPhase { mode, thetas, .. } => {
                let phases = thetas.iter().map(|&t| (-i * t).exp()).collect();
                GateAction::Diagonal { axes: vec![AxisId::Mode(*mode)], phases }
            }
            Gate::Displacement { mode, alpha } => {
                let d = layout.mode_dim(*mode);
                GateAction::Local {
                    axes: vec![AxisId::Mode(*mode)],
                    matrix: displacement_matrix(d, *alpha)?,
                }
            }
            Gate::Beamsplitter { mode_a, mode_b, phi, theta } => {
                let da = layout.mode_dim(*mode_a);
                let db = layout.mode_dim(*mode_b);
                let a = DenseOperator::annihilation(da);
                let b = DenseOperator::annihilation(db);
                let coupling = a.dagger().kron(&b).scale((i * phi).exp());
                let h = coupling.add(&coupling.dagger())?.scale(C64::new(*theta, 0.0));
                GateAction::Local {
                    axes: vec![AxisId::Mode(*mode_a), AxisId::Mode(*mode_b)],
                    matrix: expm_hermitian(&h, -i)?,
                }
            }
            Gate::QubitRphi { qubit, phi, theta } => {
                let (c, s) = ((theta / 2.0).cos(), (theta / 2.0).sin());
                let matrix = DenseOperator::from_rows(2, vec![
                    C64::new(c, 0.0),
                    -i * s * (-i * phi).exp(),
                    -i * s * (i * phi).exp(),
                    C64::new(c, 0.0),
                ])?;
                GateAction::Local { axes: vec![AxisId::Qubit(*qubit)], matrix }
            }
            Gate::CondDisplacement { qubit, mode, alpha } => {
                let d = layout.mode_dim(*mode);
                let plus = displacement_matrix(d, *alpha)?;
                let minus = displacement_matrix(d, -*alpha)?;
                // Axes [mode, qubit]: local index n + d * b, block-diagonal in b.
                let matrix = DenseOperator::from_fn(2 * d, |r, c| {
                    let (nr, br) = (r % d, r / d);
                    let (nc, bc) = (c % d, c / d);
                    if br != bc {
                        C64::new(0.0, 0.0)
                    } else if br == 0 {
                        plus.at(nr, nc)
                    } else {
                        minus.at(nr, nc)
                    }
                });
                GateAction::Local { axes: vec![AxisId::Mode(*mode), AxisId::Qubit(*qubit)], matrix }
            }
            Gate::Sqr { qubit, mode, thetas, phis } => {
                let d = layout.mode_dim(*mode);
                // Axes [qubit, mode]: local index b + 2 n, block-diagonal in n.
                let matrix = DenseOperator::from_fn(2 * d, |r, c| {
                    let (br, nr) = (r % 2, r / 2);
                    let (bc, nc) = (c % 2, c / 2);
                    if nr != nc {
                        return C64::new(0.0, 0.0);
                    }
                    let (ct, st) = ((thetas[nr] / 2.0).cos(), (thetas[nr] / 2.0).sin());
                    match (br, bc) {
                        (0, 0) | (1, 1) => C64::new(ct, 0.0),
                        (0, 1) => -i * st * (-i * phis[nr]).exp(),
                        _ => -i * st * (i * phis[nr]).exp(),
                    }
                });
                GateAction::Local { axes: vec![AxisId::Qubit(*qubit), AxisId::Mode(*mode)], matrix }
            }
            Gate::EffectiveUnitary { modes, qubits, matrix, .. } => {
                let axes = modes
                    .iter()
                    .map(|&m| AxisId::Mode(m))
                    .chain(qubits.iter().map(|&q| AxisId::Qubit(q)))
                    .collect();
                GateAction::Local { axes, matrix: (**matrix).clone() }
            }
            Gate::GlobalPhase { theta } => GateAction::Scalar((i * theta).exp()),
            Gate::Idle { .. } => GateAction::None,
            Gate::MeasureQubit { .. } | Gate::ResetQubit { .. } => {
                return Err(Error::MeasurementUnsupported)
            }
        })
    }
}

/// Diagonal phase `exp(-i s f(n))` over (qubit, mode), with `s` the qubit Z eigenvalue.
fn cond_diag(layout: &SystemLayout, qubit: usize, mode: usize, f: impl Fn(usize) -> f64) -> GateAction {
    let d = layout.mode_dim(mode);
    let i = C64::new(0.0, 1.0);
    let mut phases = Vec::with_capacity(2 * d);
    for n in 0..d {
        for b in 0..2u8 {
            let s = if b == 0 { 1.0 } else { -1.0 };
            phases.push((-i * (s * f(n))).exp());
        }
    }
    // Axes [qubit, mode]: local index b + 2 n matches the fill order above.
    GateAction::Diagonal { axes: vec![AxisId::Qubit(qubit), AxisId::Mode(mode)], phases }
}

fn displacement_matrix(dim: usize, alpha: C64) -> Result<DenseOperator> {
    let i = C64::new(0.0, 1.0);
    let adag = DenseOperator::creation(dim);
    // i (alpha a^dag - alpha* a) is Hermitian; exp(-i H) recovers the displacement.
    let h = adag.scale(i * alpha).add(&adag.dagger().scale(-i * alpha.conj()))?;
    expm_hermitian(&h, -i)
}
