//! Eight-mode ring-exchange exponential from nested commutator products.
//!
//! The target couples four beamsplitter pairs: with `Q = a^dag b c^dag d` on
//! the first two pairs and `Qe = e^dag f g^dag h` on the last two, the
//! synthesized operator is `exp(-i kappa t (Q Qe^dag + h.c.))` on one branch
//! of an ancilla qubit, with `kappa = 1/(4 g^2 (S(S+1))^2)` and the opposite
//! sign on the other branch.
//!
//! The construction climbs three rungs, all built from Pauli-conditioned
//! beamsplitters on the ancilla:
//!
//! 1. a commutator cycle `e^{iaA} e^{iaC} e^{-iaA} e^{-iaC}` realizes
//!    `exp(-a^2 [A, C])` to third order, and a balanced product of six
//!    cycles cancels the third and fourth orders;
//! 2. a palindrome of three balanced products adds the commutators of two
//!    coupler pairs, turning single-pair hoppings into a four-mode exchange
//!    conditioned on one ancilla Pauli;
//! 3. a group commutator of the two four-mode blocks multiplies them into
//!    the eight-mode exchange, and a second group commutator with shifted
//!    beamsplitter phases cancels the unwanted products.
//!
//! The base angle scales as `t^{1/4}`, so the leftover fifth-order error is
//! `O(t^{5/4})`.

use std::f64::consts::{FRAC_PI_2, PI, SQRT_2};

use oqsim_composite::{adjoint_ops, cbs_pauli, CondAxis};
use oqsim_core::{Circuit, Error, Gate, GateDurations, Result, SystemLayout};

/// Beamsplitter pair with the ancilla Pauli axis and phase that condition
/// it.
#[derive(Clone, Copy, Debug)]
pub struct Coupler {
    /// Ancilla axis the beamsplitter is conditioned on.
    pub axis: CondAxis,
    /// First mode of the pair.
    pub mode_a: usize,
    /// Second mode of the pair.
    pub mode_b: usize,
    /// Beamsplitter phase.
    pub phi: f64,
}

impl Coupler {
    fn gates(&self, qubit: usize, theta: f64) -> Result<Vec<Gate>> {
        cbs_pauli(self.axis, qubit, self.mode_a, self.mode_b, self.phi, theta)
    }
}

/// Commutator weight of the balanced six-cycle product: it realizes
/// `exp(-w theta^2 [A, C])` with `w = 4(sqrt 2 - 1)` and a fifth-order
/// remainder.
pub fn balance_coefficient() -> f64 {
    4.0 * (SQRT_2 - 1.0)
}

fn balance_ratio() -> f64 {
    SQRT_2.sqrt()
}

/// Single commutator cycle `e^{i alpha A} e^{i alpha C} e^{-i alpha A}
/// e^{-i alpha C}`, which matches `exp(-alpha^2 [A, C])` to third order.
pub fn commutator_cycle(
    a: &Coupler,
    c: &Coupler,
    qubit: usize,
    alpha: f64,
) -> Result<Vec<Gate>> {
    let mut gates = c.gates(qubit, alpha)?;
    gates.extend(a.gates(qubit, alpha)?);
    gates.extend(c.gates(qubit, -alpha)?);
    gates.extend(a.gates(qubit, -alpha)?);
    Ok(gates)
}

/// Balanced product of six commutator cycles. Pairing each cycle with its
/// angle-reversed partner removes the cubic remainder. The middle pair
/// swaps the coupler roles, which inverts the cycle and so negates its
/// whole log; running it at the squared angle with ratio `2^{1/4}` makes
/// its quartic remainder cancel the outer pairs', leaving
/// `exp(-w theta^2 [A, C]) + O(theta^5)` with `w = ` [`balance_coefficient`].
pub fn balanced_commutator(
    a: &Coupler,
    c: &Coupler,
    qubit: usize,
    theta: f64,
) -> Result<Vec<Gate>> {
    let outer = balance_ratio() * theta;
    let middle = balance_ratio() * outer;
    let mut gates = commutator_cycle(a, c, qubit, -outer)?;
    gates.extend(commutator_cycle(a, c, qubit, outer)?);
    gates.extend(commutator_cycle(c, a, qubit, -middle)?);
    gates.extend(commutator_cycle(c, a, qubit, middle)?);
    gates.extend(commutator_cycle(a, c, qubit, -outer)?);
    gates.extend(commutator_cycle(a, c, qubit, outer)?);
    Ok(gates)
}

/// Palindrome of three balanced products realizing the sum of two coupler
/// commutators: the outer pair runs at `theta/sqrt(2)` so its two halves
/// add up to one full weight.
fn pair_sum_block(
    main: (&Coupler, &Coupler),
    alt: (&Coupler, &Coupler),
    qubit: usize,
    theta: f64,
) -> Result<Vec<Gate>> {
    let outer = balanced_commutator(main.0, main.1, qubit, theta / SQRT_2)?;
    let mut gates = outer.clone();
    gates.extend(balanced_commutator(alt.0, alt.1, qubit, theta)?);
    gates.extend(outer);
    Ok(gates)
}

/// Group commutator `X Y X^dag Y^dag` as a circuit.
fn group_commutator(x: &[Gate], y: &[Gate]) -> Result<Vec<Gate>> {
    let mut gates = adjoint_ops(y)?;
    gates.extend(adjoint_ops(x)?);
    gates.extend_from_slice(y);
    gates.extend_from_slice(x);
    Ok(gates)
}

/// Eight modes and the ancilla qubit the synthesis acts on. The first two
/// modes form the `a, b` pair and the next two the `c, d` pair of the first
/// exchange factor; the last four form the `e, f` and `g, h` pairs of the
/// second.
#[derive(Clone, Copy, Debug)]
pub struct PlaquetteOctet {
    /// Modes in pair order `a, b, c, d, e, f, g, h`.
    pub modes: [usize; 8],
    /// Ancilla qubit conditioning every beamsplitter.
    pub ancilla: usize,
}

fn check_parameters(g: f64, spin_x2: usize, t: f64) -> Result<()> {
    if !(g > 0.0) || !g.is_finite() {
        return Err(Error::invalid("electric coupling must be positive and finite"));
    }
    if spin_x2 == 0 {
        return Err(Error::invalid("link spin must be at least 1/2"));
    }
    if !t.is_finite() || t < 0.0 {
        return Err(Error::invalid("evolution time must be finite and nonnegative"));
    }
    Ok(())
}

/// Base angle of the synthesis: chosen so the fourth-order commutator term
/// carries the ring-exchange coupling times `t`.
pub fn plaquette_angle(g: f64, spin_x2: usize, t: f64) -> Result<f64> {
    check_parameters(g, spin_x2, t)?;
    let s = spin_x2 as f64 / 2.0;
    let kappa = 1.0 / (4.0 * g * g * (s * (s + 1.0)).powi(2));
    let w = balance_coefficient();
    Ok((kappa * t / (64.0 * w * w)).powf(0.25))
}

/// Gate list evolving the octet under the ring-exchange coupling for time
/// `t`, conditioned on the ancilla: the `|1>` branch receives
/// `exp(-i t H)` with `H = -kappa (Q Qe^dag + h.c.)`, the `|0>` branch the
/// adjoint. Exactly 1152 conditional parities regardless of parameters;
/// errors on negative or non-finite `t`, non-positive `g`, or zero spin.
pub fn plaquette_gates(
    octet: &PlaquetteOctet,
    g: f64,
    spin_x2: usize,
    t: f64,
) -> Result<Vec<Gate>> {
    let theta = plaquette_angle(g, spin_x2, t)?;
    let m = &octet.modes;
    let q = octet.ancilla;
    let pair =
        |axis, i: usize, phi| Coupler { axis, mode_a: m[i], mode_b: m[i + 1], phi };

    let first = pair_sum_block(
        (&pair(CondAxis::Y, 0, -FRAC_PI_2), &pair(CondAxis::Z, 2, 0.0)),
        (&pair(CondAxis::Y, 0, 0.0), &pair(CondAxis::Z, 2, -FRAC_PI_2)),
        q,
        theta,
    )?;
    let second = pair_sum_block(
        (&pair(CondAxis::Z, 4, -FRAC_PI_2), &pair(CondAxis::X, 6, 0.0)),
        (&pair(CondAxis::Z, 4, 0.0), &pair(CondAxis::X, 6, -FRAC_PI_2)),
        q,
        theta,
    )?;
    let first_shifted = pair_sum_block(
        (&pair(CondAxis::Y, 0, FRAC_PI_2), &pair(CondAxis::Z, 2, FRAC_PI_2)),
        (&pair(CondAxis::Y, 0, PI), &pair(CondAxis::Z, 2, 0.0)),
        q,
        theta,
    )?;
    let second_shifted = pair_sum_block(
        (&pair(CondAxis::Z, 4, FRAC_PI_2), &pair(CondAxis::X, 6, FRAC_PI_2)),
        (&pair(CondAxis::Z, 4, PI), &pair(CondAxis::X, 6, 0.0)),
        q,
        theta,
    )?;

    let mut gates = group_commutator(&first_shifted, &second_shifted)?;
    gates.extend(group_commutator(&first, &second)?);
    Ok(gates)
}

/// [`plaquette_gates`] wrapped into a circuit over `layout` with the
/// default duration profile.
pub fn plaquette_bch(
    layout: &SystemLayout,
    octet: &PlaquetteOctet,
    g: f64,
    spin_x2: usize,
    t: f64,
) -> Result<Circuit> {
    let mut circuit = Circuit::new(layout.clone(), GateDurations::default());
    circuit.push_all(plaquette_gates(octet, g, spin_x2, t)?)?;
    Ok(circuit)
}
