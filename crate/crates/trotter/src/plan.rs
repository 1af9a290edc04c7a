//! Step circuits assembled from commuting term groups.
//!
//! Each Hamiltonian splits into groups whose terms act on disjoint targets,
//! so the order within a group is immaterial and the product-formula error
//! comes only from the splitting between groups. The first-order step
//! concatenates the groups once; the second-order step walks them at half
//! angle, applies the last group at the full angle, and walks back.

use oqsim_core::{Circuit, Error, Gate, GateDurations, Result, StateVector, SystemLayout};
use oqsim_models::{U1Chain, Z2Chain};

/// Commuting block of term exponentials inside one step.
#[derive(Clone, Debug)]
pub struct StepGroup {
    /// Name used in schedules and logs.
    pub label: &'static str,
    /// One gate list per term exponential.
    pub terms: Vec<Vec<Gate>>,
}

impl StepGroup {
    /// Terms flattened in listed order.
    pub fn gates(&self) -> Vec<Gate> {
        self.terms.concat()
    }
}

/// How link hopping is compiled in the quantum link chain step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HoppingCompilation {
    /// Doubly conditional beamsplitters in Pauli frames; carries an extra
    /// first-order splitting error inside each link term.
    Trotterized,
    /// One effective unitary per link, exact within the step. Required for
    /// a genuinely second-order step.
    Exact,
}

/// Groups for one gauge-chain step of size `dt`, in application order:
/// hopping on even links, hopping on odd links, onsite phases when the
/// interaction is nonzero, then the transverse field.
pub fn z2_step_groups(chain: &Z2Chain, dt: f64) -> Vec<StepGroup> {
    let links = chain.links();
    let mut groups = vec![
        StepGroup {
            label: "hopping-even",
            terms: (0..links).step_by(2).map(|l| chain.hopping_step(l, dt)).collect(),
        },
        StepGroup {
            label: "hopping-odd",
            terms: (1..links).step_by(2).map(|l| chain.hopping_step(l, dt)).collect(),
        },
    ];
    if chain.u != 0.0 {
        groups.push(StepGroup {
            label: "onsite",
            terms: (0..chain.sites).map(|s| chain.onsite_step(s, dt)).collect(),
        });
    }
    groups.push(StepGroup {
        label: "field",
        terms: (0..links).map(|l| chain.field_step(l, dt)).collect(),
    });
    groups.retain(|g| !g.terms.is_empty());
    groups
}

/// Groups for one quantum-link-chain step of size `dt`, in application
/// order: hopping on even links, hopping on odd links, electric phases,
/// then the staggered mass. Electric and mass terms commute, so their split
/// is exact.
pub fn u1_step_groups(
    chain: &U1Chain,
    dt: f64,
    hopping: HoppingCompilation,
) -> Result<Vec<StepGroup>> {
    let links = chain.links();
    let hop = |link: usize| -> Result<Vec<Gate>> {
        match hopping {
            HoppingCompilation::Trotterized => chain.hopping_step_trotterized(link, dt),
            HoppingCompilation::Exact => Ok(vec![chain.hopping_step_exact(link, dt)?]),
        }
    };
    let even = (0..links).step_by(2).map(hop).collect::<Result<Vec<_>>>()?;
    let odd = (1..links).step_by(2).map(hop).collect::<Result<Vec<_>>>()?;
    let mut groups = vec![
        StepGroup { label: "hopping-even", terms: even },
        StepGroup { label: "hopping-odd", terms: odd },
        StepGroup {
            label: "electric",
            terms: (0..links).map(|l| chain.electric_step(l, dt)).collect(),
        },
        StepGroup {
            label: "mass",
            terms: (0..chain.sites).map(|s| chain.mass_step(s, dt)).collect(),
        },
    ];
    groups.retain(|g| !g.terms.is_empty());
    Ok(groups)
}

fn assemble(
    order: usize,
    dt: f64,
    build: impl Fn(f64) -> Result<Vec<StepGroup>>,
) -> Result<Vec<Gate>> {
    match order {
        1 => Ok(build(dt)?.iter().flat_map(StepGroup::gates).collect()),
        2 => {
            let half = build(dt / 2.0)?;
            let Some(last) = half.len().checked_sub(1) else {
                return Ok(Vec::new());
            };
            let full = build(dt)?;
            let mut gates = Vec::new();
            for group in &half[..last] {
                gates.extend(group.gates());
            }
            gates.extend(full[last].gates());
            for group in half[..last].iter().rev() {
                gates.extend(group.gates());
            }
            Ok(gates)
        }
        _ => Err(Error::invalid(format!("product-formula order {order} is not supported"))),
    }
}

/// Gates for one gauge-chain step of size `dt` at the given formula order
/// (1 or 2).
pub fn z2_step_gates(chain: &Z2Chain, dt: f64, order: usize) -> Result<Vec<Gate>> {
    assemble(order, dt, |dt| Ok(z2_step_groups(chain, dt)))
}

/// Gates for one quantum-link-chain step of size `dt` at the given formula
/// order (1 or 2).
pub fn u1_step_gates(
    chain: &U1Chain,
    dt: f64,
    order: usize,
    hopping: HoppingCompilation,
) -> Result<Vec<Gate>> {
    assemble(order, dt, |dt| u1_step_groups(chain, dt, hopping))
}

/// A fixed-step product-formula evolution: the per-step circuit, how many
/// times to repeat it, and the schedule of commuting groups it came from.
#[derive(Clone, Debug)]
pub struct TrotterPlan {
    order: usize,
    steps: usize,
    dt: f64,
    step: Circuit,
    schedule: Vec<&'static str>,
}

impl TrotterPlan {
    fn build(
        layout: SystemLayout,
        order: usize,
        steps: usize,
        total_time: f64,
        gates: Vec<Gate>,
        schedule: Vec<&'static str>,
    ) -> Result<Self> {
        if steps == 0 {
            return Err(Error::invalid("step count must be at least 1"));
        }
        let mut step = Circuit::new(layout, GateDurations::default());
        step.push_all(gates)?;
        Ok(TrotterPlan { order, steps, dt: total_time / steps as f64, step, schedule })
    }

    /// Formula order (1 or 2).
    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of repetitions of the step circuit.
    pub fn steps(&self) -> usize {
        self.steps
    }

    /// Step size.
    pub fn dt(&self) -> f64 {
        self.dt
    }

    /// Evolution time covered by the full plan.
    pub fn total_time(&self) -> f64 {
        self.dt * self.steps as f64
    }

    /// Circuit applied once per step.
    pub fn step_circuit(&self) -> &Circuit {
        &self.step
    }

    /// Labels of the commuting groups in application order.
    pub fn schedule(&self) -> &[&'static str] {
        &self.schedule
    }
}

fn check_time(total_time: f64) -> Result<()> {
    if total_time.is_finite() {
        Ok(())
    } else {
        Err(Error::invalid("evolution time must be finite"))
    }
}

/// Plan covering `total_time` of gauge-chain evolution in `steps` equal
/// steps.
pub fn z2_plan(chain: &Z2Chain, total_time: f64, steps: usize, order: usize) -> Result<TrotterPlan> {
    check_time(total_time)?;
    let dt = total_time / steps.max(1) as f64;
    let schedule = z2_step_groups(chain, dt).iter().map(|g| g.label).collect();
    let gates = z2_step_gates(chain, dt, order)?;
    TrotterPlan::build(chain.layout()?, order, steps, total_time, gates, schedule)
}

/// Plan covering `total_time` of quantum-link-chain evolution in `steps`
/// equal steps.
pub fn u1_plan(
    chain: &U1Chain,
    total_time: f64,
    steps: usize,
    order: usize,
    hopping: HoppingCompilation,
) -> Result<TrotterPlan> {
    check_time(total_time)?;
    let dt = total_time / steps.max(1) as f64;
    let schedule = u1_step_groups(chain, dt, hopping)?.iter().map(|g| g.label).collect();
    let gates = u1_step_gates(chain, dt, order, hopping)?;
    TrotterPlan::build(chain.layout()?, order, steps, total_time, gates, schedule)
}

/// Applies the plan to a copy of `initial` and returns the evolved state.
pub fn evolve(plan: &TrotterPlan, initial: &StateVector) -> Result<StateVector> {
    evolve_observed(plan, initial, |_, _| ())
}

/// Like [`evolve`], calling `snapshot` with the completed step count and
/// the state after every step.
pub fn evolve_observed(
    plan: &TrotterPlan,
    initial: &StateVector,
    mut snapshot: impl FnMut(usize, &StateVector),
) -> Result<StateVector> {
    let mut state = initial.clone();
    for step in 1..=plan.steps {
        plan.step.apply_to(&mut state)?;
        snapshot(step, &state);
    }
    Ok(state)
}
