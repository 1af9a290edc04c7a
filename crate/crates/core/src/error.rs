use thiserror::Error;

/// Errors shared across the simulator crates.
#[derive(Debug, Error)]
pub enum Error {
    #[error("layout must contain at least one mode or qubit")]
    EmptyLayout,
    #[error("mode {mode}: cutoff must be at least 1")]
    BadCutoff { mode: usize },
    #[error("mode index {mode} out of range ({count} modes)")]
    ModeOutOfRange { mode: usize, count: usize },
    #[error("qubit index {qubit} out of range ({count} qubits)")]
    QubitOutOfRange { qubit: usize, count: usize },
    #[error("occupation {n} exceeds cutoff {cutoff} on mode {mode}")]
    OccupationBeyondCutoff { mode: usize, n: usize, cutoff: usize },
    #[error("qubit value {value} is not 0 or 1")]
    BadQubitValue { value: u8 },
    #[error("{what}: got {got} entries, need {need}")]
    WrongLength { what: &'static str, got: usize, need: usize },
    #[error("{gate}: repeated target axis")]
    DuplicateTarget { gate: &'static str },
    #[error("{gate}: non-finite parameter")]
    NonFiniteParameter { gate: &'static str },
    #[error("dimension {dim} exceeds dense-unitary cap {cap}")]
    DenseCapExceeded { dim: usize, cap: usize },
    #[error("operand layouts differ")]
    LayoutMismatch,
    #[error("matrix dimension {got} does not match target dimension {need}")]
    MatrixDimMismatch { got: usize, need: usize },
    #[error("matrix is not unitary (max deviation {dev:.3e})")]
    NotUnitary { dev: f64 },
    #[error("measurement instructions are not supported by this executor")]
    MeasurementUnsupported,
    #[error("eigensolver failed (status {info})")]
    EigFailure { info: i32 },
    #[error("{0}")]
    Invalid(String),
}

impl Error {
    /// Convenience constructor for parameter-validation failures.
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
