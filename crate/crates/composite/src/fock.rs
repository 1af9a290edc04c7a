use crate::basic::adjoint_ops;
use oqsim_core::{Gate, Result};
use std::f64::consts::PI;

/// Angle vector of length `dim` that is pi on the marked occupations and zero
/// elsewhere.
pub fn mark_thetas(dim: usize, marks: &[usize]) -> Vec<f64> {
    let mut thetas = vec![0.0; dim];
    for &n in marks {
        if n < dim {
            thetas[n] = PI;
        }
    }
    thetas
}

/// Flips the sign of the qubit-conditioned exponent of `inner` on the marked
/// occupations of `mode`: with `inner = exp(-i Z O)` for an operator `O` that
/// commutes with the occupation of `mode`, the list realizes
/// `exp(-i Z (1 - 2 F) O)` where `F` projects onto the marked occupations.
pub fn fock_conditioned(
    qubit: usize,
    mode: usize,
    dim: usize,
    marks: &[usize],
    inner: &[Gate],
) -> Vec<Gate> {
    let thetas = mark_thetas(dim, marks);
    let neg: Vec<f64> = thetas.iter().map(|t| -t).collect();
    let mut out = Vec::with_capacity(inner.len() + 2);
    out.push(Gate::Sqr { qubit, mode, thetas: neg, phis: vec![0.0; dim] });
    out.extend_from_slice(inner);
    out.push(Gate::Sqr { qubit, mode, thetas, phis: vec![0.0; dim] });
    out
}

/// Restricts the qubit-conditioned exponent of a primitive to the marked
/// occupations of `mode`: with `half = exp(-i Z O / 2)` for an operator `O`
/// commuting with the occupation of `mode`, the list realizes
/// `exp(-i Z F O)` where `F` projects onto the marked occupations.
pub fn fock_controlled(
    qubit: usize,
    mode: usize,
    dim: usize,
    marks: &[usize],
    half: &[Gate],
) -> Result<Vec<Gate>> {
    let thetas = mark_thetas(dim, marks);
    let neg: Vec<f64> = thetas.iter().map(|t| -t).collect();
    let mut out = Vec::with_capacity(2 * half.len() + 2);
    out.push(Gate::Sqr { qubit, mode, thetas: neg, phis: vec![0.0; dim] });
    out.extend(adjoint_ops(half)?);
    out.push(Gate::Sqr { qubit, mode, thetas, phis: vec![0.0; dim] });
    out.extend_from_slice(half);
    Ok(out)
}

/// Couples a qubit-conditioned exponent to the occupation of `mode` through
/// its binary digits: with `strength(s)` realizing `exp(-i s Z O)`, the list
/// realizes `exp(-i Z n_mode O)` exactly for occupations up to `n_max`. One
/// stage per binary digit of `n_max`.
pub fn density_controlled(
    qubit: usize,
    mode: usize,
    dim: usize,
    n_max: usize,
    strength: &dyn Fn(f64) -> Result<Vec<Gate>>,
) -> Result<Vec<Gate>> {
    let mut out = Vec::new();
    let mut bit = 0usize;
    while n_max >> bit > 0 {
        let marks: Vec<usize> = (0..dim).filter(|n| (n >> bit) & 1 == 1).collect();
        let half = strength(0.5 * (1u64 << bit) as f64)?;
        out.extend(fock_controlled(qubit, mode, dim, &marks, &half)?);
        bit += 1;
    }
    Ok(out)
}

/// Density-density phase `exp(-i theta Z n_i n_j)` between two modes and an
/// ancilla qubit, built from conditional mode rotations staged over the binary
/// digits of the occupation of `mode_i`. Exact for occupations of `mode_i` up
/// to `n_max`.
pub fn rr_gate(
    ancilla: usize,
    mode_i: usize,
    mode_j: usize,
    dim_i: usize,
    n_max: usize,
    theta: f64,
) -> Result<Vec<Gate>> {
    density_controlled(ancilla, mode_i, dim_i, n_max, &|s| {
        Ok(vec![Gate::CondRotation { qubit: ancilla, mode: mode_j, theta: 2.0 * s * theta }])
    })
}
