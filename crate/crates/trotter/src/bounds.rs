//! Step and gate counts from operator-norm bounds.
//!
//! All estimates keep a unit prefactor in place of the unknown asymptotic
//! constant, so they are scaling guides rather than guarantees; integer
//! outputs take the ceiling and never drop below one step. Lattice sizes
//! refer to an `L x L` patch with `L^2` sites and `2L(L-1)` links.

/// Couplings and scales bounding the gauge-chain Hamiltonian on an `L x L`
/// patch.
#[derive(Clone, Copy, Debug)]
pub struct Z2BoundParams {
    /// Linear lattice size.
    pub l: usize,
    /// Largest occupation retained per mode.
    pub n_max: usize,
    /// Transverse field coupling.
    pub g: f64,
    /// Onsite interaction strength.
    pub u: f64,
    /// Hopping amplitude.
    pub j: f64,
    /// Plaquette coupling.
    pub b: f64,
}

impl Z2BoundParams {
    fn l(&self) -> f64 {
        self.l as f64
    }

    fn n(&self) -> f64 {
        self.n_max as f64
    }

    /// Norm bound on the commuting field-plus-onsite group.
    pub fn field_onsite_norm(&self) -> f64 {
        let (l, n) = (self.l(), self.n());
        2.0 * self.g * l * (l - 1.0) + self.u.abs() * l * l * n * n
    }

    /// Norm bound summed over the hopping groups.
    pub fn hopping_norm(&self) -> f64 {
        let (l, n) = (self.l(), self.n());
        4.0 * self.j.abs() * n * l * (l - 1.0)
    }

    /// Norm bound summed over the plaquette groups.
    pub fn plaquette_norm(&self) -> f64 {
        let l = self.l();
        self.b.abs() * (l - 1.0) * (l - 1.0)
    }

    /// Aggregate norm scale entering the step-count estimate.
    pub fn norm_sum(&self) -> f64 {
        let (l, n) = (self.l(), self.n());
        (2.0 * self.g + self.u.abs() * n * n + 4.0 * self.j.abs() * n + self.b.abs()) * l * l
    }

    /// Real-valued step estimate for total time `t` at target error `eps`
    /// with a formula of order `2p`.
    pub fn steps_estimate(&self, t: f64, eps: f64, p: u32) -> f64 {
        steps_estimate(self.norm_sum() * t, eps, p)
    }

    /// Step count: the estimate rounded up, at least one.
    pub fn steps(&self, t: f64, eps: f64, p: u32) -> u64 {
        to_steps(self.steps_estimate(t, eps, p))
    }
}

/// Couplings and scales bounding the quantum-link Hamiltonian on an `L x L`
/// patch, in the large-spin regime where the electric term dominates.
#[derive(Clone, Copy, Debug)]
pub struct U1BoundParams {
    /// Linear lattice size.
    pub l: usize,
    /// Electric coupling.
    pub g: f64,
    /// Link spin.
    pub spin: f64,
}

impl U1BoundParams {
    /// Real-valued step estimate for total time `t` at target error `eps`
    /// with a formula of order `2p`.
    pub fn steps_estimate(&self, t: f64, eps: f64, p: u32) -> f64 {
        let scale = self.g * self.spin * self.l as f64;
        steps_estimate(scale * scale * t, eps, p)
    }

    /// Step count: the estimate rounded up, at least one.
    pub fn steps(&self, t: f64, eps: f64, p: u32) -> u64 {
        to_steps(self.steps_estimate(t, eps, p))
    }
}

fn steps_estimate(norm_time: f64, eps: f64, p: u32) -> f64 {
    let inv2p = 1.0 / (2.0 * p as f64);
    norm_time.powf(1.0 + inv2p) * eps.powf(-inv2p)
}

fn to_steps(estimate: f64) -> u64 {
    if estimate.is_finite() {
        (estimate.ceil() as u64).max(1)
    } else {
        u64::MAX
    }
}

/// Real-valued estimate of the commutator-product repetitions needed to
/// hold the plaquette synthesis error below `eps` over time `t` at electric
/// coupling `g`.
pub fn plaquette_substeps_estimate(g: f64, t: f64, eps: f64) -> f64 {
    g.powi(-10) * t.powi(5) * eps.powi(-4)
}

/// Plaquette repetition count: the estimate rounded up, at least one.
pub fn plaquette_substeps(g: f64, t: f64, eps: f64) -> u64 {
    to_steps(plaquette_substeps_estimate(g, t, eps))
}

/// Total gate count for `r` steps of a formula of order `2p` whose
/// elementary exponentials cost `per_exponential` gates each. Each halving
/// of the recursion order quintuples the exponential count, and the
/// symmetric base formula walks every exponential twice.
pub fn total_gates(r: u64, p: u32, per_exponential: &[u64]) -> u64 {
    let sum: u64 = per_exponential.iter().sum();
    r * 5u64.pow(p.saturating_sub(1)) * 2 * sum
}
