//! Product-formula evolution for the oscillator-qubit chains.
//!
//! A [`TrotterPlan`] packages a per-step circuit built from commuting term
//! groups, the step count, and the step size. Builders cover both lattice
//! models; [`evolve`] drives a state through the plan with optional per-step
//! snapshots. The [`bounds`] module turns operator-norm bounds into step and
//! gate counts, and [`plaquette`] synthesizes the eight-mode ring-exchange
//! exponential from nested commutator products of conditional beamsplitters.

mod bounds;
mod plan;
pub mod plaquette;

pub use bounds::{
    plaquette_substeps, plaquette_substeps_estimate, total_gates, U1BoundParams, Z2BoundParams,
};
pub use plan::{
    evolve, evolve_observed, u1_plan, u1_step_gates, u1_step_groups, z2_plan, z2_step_gates,
    z2_step_groups, HoppingCompilation, StepGroup, TrotterPlan,
};
