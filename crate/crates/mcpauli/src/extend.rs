//! Growing multi-controlled phase circuits one control at a time.
//!
//! The core move: given a circuit that uses some data wire only in ways
//! that are diagonal in that wire (a *designated* control), reroute the
//! wire through a freshly computed AND of itself and a new control.
//! Whatever the circuit did conditioned on the designated wire now happens
//! conditioned on both — one more control for the price of one AND gadget.
//! The AND ancilla is then retired either unitarily (mirror block) or by an
//! X-basis measurement whose outcome decides a CZ correction on the two
//! controls.
//!
//! [`AddMethod`] picks the gadget, [`add_control`] performs one step,
//! [`cnz_build`] iterates it from a catalog base circuit up to a requested
//! control count, choosing designated wires per [`AssignmentStrategy`].
//! [`cnz_selinger_logdepth`] is the different regime: a balanced pairing
//! tree of ±iX blocks around a T-depth-1 CCZ core, trading many ancillas
//! for logarithmic T-depth.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::catalog::{self, emit_cc_minus_ix, emit_cc_plus_ix, emit_ccz_tdepth1, TargetSpec};
use crate::circuit::{
    validate, Circuit, CircuitBuilder, ClassicalBitId, GateKind, Instruction, PauliAxis, Polarity,
    QubitId, Register,
};
use crate::metrics::t_depth;

/// The five single-control extension gadgets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AddMethod {
    /// Unitary ±iX sandwich: no measurement, T-count +8, CNOT +16.
    SelingerEq6,
    /// Relative-phase AND with 3 CNOTs; measured uncompute.
    PalerA,
    /// AND-gadget shape with 6 CNOTs and T-depth 2; measured uncompute.
    GidneyB,
    /// One helper wire packs all four T gates into a single stage.
    JonesC,
    /// Exact AND from a −iX block plus S; measured uncompute.
    JonesEq10,
}

impl AddMethod {
    pub const ALL: [AddMethod; 5] = [
        AddMethod::SelingerEq6,
        AddMethod::PalerA,
        AddMethod::GidneyB,
        AddMethod::JonesC,
        AddMethod::JonesEq10,
    ];

    /// Stable key used by the CLI and scan output.
    pub fn key(self) -> &'static str {
        match self {
            AddMethod::SelingerEq6 => "selinger-eq6",
            AddMethod::PalerA => "paler-a",
            AddMethod::GidneyB => "gidney-b",
            AddMethod::JonesC => "jones-c",
            AddMethod::JonesEq10 => "jones-eq10",
        }
    }

    /// T-count added per extension step.
    pub fn t_delta(self) -> usize {
        match self {
            AddMethod::SelingerEq6 => 8,
            _ => 4,
        }
    }

    /// (min, max) CNOT-count added per step; the spread is the conditional
    /// CZ correction, counted 0 or 1 times depending on the outcome.
    pub fn cnot_delta(self) -> (usize, usize) {
        match self {
            AddMethod::SelingerEq6 => (16, 16),
            AddMethod::PalerA => (3, 4),
            AddMethod::GidneyB => (6, 7),
            AddMethod::JonesC => (8, 9),
            AddMethod::JonesEq10 => (8, 9),
        }
    }

    /// Feedback operations (measurements that steer later gates) per step.
    pub fn feedback_delta(self) -> usize {
        match self {
            AddMethod::SelingerEq6 => 0,
            _ => 1,
        }
    }

    /// Fresh ancilla wires per step: the AND ancilla, plus a helper for the
    /// methods whose T stage needs a fourth wire.
    pub fn ancilla_delta(self) -> usize {
        match self {
            AddMethod::PalerA | AddMethod::GidneyB => 1,
            _ => 2,
        }
    }
}

impl fmt::Display for AddMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl FromStr for AddMethod {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        AddMethod::ALL
            .into_iter()
            .find(|m| m.key() == s)
            .ok_or_else(|| {
                let keys: Vec<_> = AddMethod::ALL.iter().map(|m| m.key()).collect();
                format!("unknown method `{s}`; expected one of {}", keys.join(", "))
            })
    }
}

/// How [`cnz_build`] picks the designated wire at each extension step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AssignmentStrategy {
    /// Always data wire 0.
    Linear,
    /// Per step, the admissible wire minimizing T-depth after that step
    /// (ties broken toward the lowest index).
    Greedy,
    /// Full search over all designation sequences, minimizing the final
    /// T-depth (ties broken toward the lexicographically first sequence).
    Exhaustive,
}

impl AssignmentStrategy {
    pub const ALL: [AssignmentStrategy; 3] = [
        AssignmentStrategy::Linear,
        AssignmentStrategy::Greedy,
        AssignmentStrategy::Exhaustive,
    ];

    pub fn key(self) -> &'static str {
        match self {
            AssignmentStrategy::Linear => "linear",
            AssignmentStrategy::Greedy => "greedy",
            AssignmentStrategy::Exhaustive => "exhaustive",
        }
    }
}

impl fmt::Display for AssignmentStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl FromStr for AssignmentStrategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        AssignmentStrategy::ALL
            .into_iter()
            .find(|m| m.key() == s)
            .ok_or_else(|| format!("unknown strategy `{s}`; expected linear, greedy or exhaustive"))
    }
}

/// Why an extension was refused.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExtendError {
    #[error("unknown base entry `{0}`")]
    UnknownBase(String),
    #[error("base `{0}` does not implement a positively-controlled multi-controlled Z")]
    BaseNotExtensible(String),
    #[error("requested {requested} controls but base `{base}` already has {has}")]
    TooFewControls { requested: usize, base: String, has: usize },
    #[error("control count {n} outside the supported range {min}..={max}")]
    ControlCount { n: usize, min: usize, max: usize },
    #[error("inner circuit is structurally invalid: {0}")]
    InvalidInner(String),
    #[error("designated wire {0} is not a data wire of the inner circuit")]
    DesignatedOutOfRange(QubitId),
    #[error("new control must be the next data wire q{expected}, got {got}")]
    NewControlNotFresh { expected: usize, got: QubitId },
    #[error("instruction {index} uses the designated wire non-diagonally ({reason})")]
    DesignatedMisuse { index: usize, reason: String },
    #[error("designated wire is flipped an odd number of times by {class}")]
    UnbalancedFlip { class: String },
    #[error("no admissible designated wire among the {have} data wires")]
    NoCandidate { have: usize },
}

/// One flavour of designated-wire flip; flips must pair up per class so the
/// wire's value is restored inside every execution branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct FlipClass {
    /// `None` for a plain X, `Some(w)` for a CNOT from wire `w`.
    source: Option<QubitId>,
    /// Classical condition the flip runs under, if any.
    condition: Option<(usize, bool)>,
}

impl fmt::Display for FlipClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.source {
            None => write!(f, "X")?,
            Some(w) => write!(f, "CX from {w}")?,
        }
        if let Some((bit, value)) = self.condition {
            write!(f, " under c{bit}=={}", value as u8)?;
        }
        Ok(())
    }
}

/// Check that `inner` uses wire `d` only in ways that stay diagonal in `d`:
/// as a control, as a leg of a CZ, under diagonal single-qubit gates, or
/// flipped an even number of times per [`FlipClass`]. Anything else would
/// break the reroute-through-an-AND argument.
fn guard_designated(inner: &Circuit, d: QubitId) -> Result<(), ExtendError> {
    let mut flips: BTreeMap<FlipClass, usize> = BTreeMap::new();
    for (index, ins) in inner.instructions().iter().enumerate() {
        let (gate, condition) = match ins {
            Instruction::Gate(g) => (g, None),
            Instruction::Conditioned { bit, value, gate } => (gate, Some((bit.0, *value))),
            Instruction::Measure { qubit, .. } => {
                if *qubit == d {
                    return Err(ExtendError::DesignatedMisuse {
                        index,
                        reason: "measurement consumes it".into(),
                    });
                }
                continue;
            }
        };
        let reject = |reason: &str| ExtendError::DesignatedMisuse { index, reason: reason.into() };
        match gate {
            GateKind::H(q) | GateKind::Y(q) | GateKind::SqrtXdg(q) if *q == d => {
                return Err(reject("non-diagonal single-qubit gate"));
            }
            GateKind::X(q) if *q == d => {
                *flips.entry(FlipClass { source: None, condition }).or_insert(0) += 1;
            }
            GateKind::Cx { control, target } if *target == d => {
                *flips
                    .entry(FlipClass { source: Some(*control), condition })
                    .or_insert(0) += 1;
            }
            GateKind::Mcp { axis, target, .. } if *target == d && *axis != PauliAxis::Z => {
                return Err(reject("non-diagonal multi-controlled Pauli target"));
            }
            // Diagonal single-qubit gates, CX controls, CZ legs, Z-axis
            // multi-control targets and control slots are all fine.
            _ => {}
        }
    }
    for (class, count) in flips {
        if count % 2 == 1 {
            return Err(ExtendError::UnbalancedFlip { class: class.to_string() });
        }
    }
    Ok(())
}

fn reroute(g: &GateKind, from: QubitId, to: QubitId) -> GateKind {
    let m = |q: QubitId| if q == from { to } else { q };
    match g {
        GateKind::H(q) => GateKind::H(m(*q)),
        GateKind::T(q) => GateKind::T(m(*q)),
        GateKind::Tdg(q) => GateKind::Tdg(m(*q)),
        GateKind::S(q) => GateKind::S(m(*q)),
        GateKind::Sdg(q) => GateKind::Sdg(m(*q)),
        GateKind::X(q) => GateKind::X(m(*q)),
        GateKind::Y(q) => GateKind::Y(m(*q)),
        GateKind::Z(q) => GateKind::Z(m(*q)),
        GateKind::SqrtXdg(q) => GateKind::SqrtXdg(m(*q)),
        GateKind::Cx { control, target } => GateKind::Cx { control: m(*control), target: m(*target) },
        GateKind::Cz(a, b) => GateKind::Cz(m(*a), m(*b)),
        GateKind::Mcp { axis, target, controls } => GateKind::Mcp {
            axis: *axis,
            target: m(*target),
            controls: controls.iter().map(|(q, p)| (m(*q), *p)).collect(),
        },
    }
}

/// Extend `inner` by one control.
///
/// `designated` must be a data wire that `inner` uses diagonally (see the
/// module docs); `new_control` must name the next data wire, which the
/// returned circuit's data register grows to include. The designated wire
/// is rerouted through a fresh AND ancilla of (`new_control` ∧
/// `designated`), always newly allocated — reusing AND wires across steps
/// would serialize their T stages and forfeit the parallel-depth payoff.
pub fn add_control(
    method: AddMethod,
    inner: &Circuit,
    designated: QubitId,
    new_control: QubitId,
) -> Result<Circuit, ExtendError> {
    let report = validate(inner);
    if let Some(first) = report.errors.first() {
        return Err(ExtendError::InvalidInner(first.to_string()));
    }
    if designated.register != Register::Data || designated.index >= inner.data_qubits() {
        return Err(ExtendError::DesignatedOutOfRange(designated));
    }
    let expected = inner.data_qubits();
    if new_control != QubitId::data(expected) {
        return Err(ExtendError::NewControlNotFresh { expected, got: new_control });
    }
    guard_designated(inner, designated)?;

    let anc_in = inner.ancilla_qubits();
    let mut b = CircuitBuilder::with_ancillas(expected + 1, anc_in + method.ancilla_delta());
    let (x, d) = (new_control, designated);
    let a = QubitId::ancilla(anc_in);
    let h = QubitId::ancilla(anc_in + 1);

    // Compute x ∧ d onto the fresh ancilla.
    match method {
        AddMethod::SelingerEq6 => {
            emit_cc_minus_ix(&mut b, x, d, a, h);
        }
        AddMethod::PalerA => {
            b.h(a).t(a).cx(d, a).tdg(a).cx(x, a).t(a).cx(d, a).tdg(a).h(a);
        }
        AddMethod::GidneyB => {
            b.h(a)
                .t(a)
                .cx(d, a)
                .cx(x, a)
                .cx(a, x)
                .cx(a, d)
                .tdg(x)
                .tdg(d)
                .t(a)
                .cx(a, x)
                .cx(a, d)
                .h(a);
        }
        AddMethod::JonesC => {
            b.h(a)
                .cx(x, h)
                .cx(a, x)
                .cx(a, d)
                .cx(d, h)
                .tdg(x)
                .tdg(d)
                .t(a)
                .t(h)
                .cx(d, h)
                .cx(a, x)
                .cx(a, d)
                .cx(x, h)
                .h(a);
        }
        AddMethod::JonesEq10 => {
            emit_cc_minus_ix(&mut b, x, d, a, h);
            b.s(a);
        }
    }

    // Replay the inner circuit with the designated wire rerouted onto the
    // AND ancilla; measurement records land in fresh bits.
    let mut bit_map = vec![None::<ClassicalBitId>; inner.classical_bits()];
    for ins in inner.instructions() {
        match ins {
            Instruction::Gate(g) => {
                b.gate(reroute(g, d, a));
            }
            Instruction::Measure { qubit, into } => {
                let q = if *qubit == d { a } else { *qubit };
                bit_map[into.0] = Some(b.measure(q));
            }
            Instruction::Conditioned { bit, value, gate } => {
                let nb = bit_map[bit.0].expect("validated inner writes bits before reading");
                b.cond(nb, *value, reroute(gate, d, a));
            }
        }
    }

    // Retire the ancilla.
    match method {
        AddMethod::SelingerEq6 => {
            emit_cc_plus_ix(&mut b, x, d, a, h);
        }
        AddMethod::PalerA => {
            b.s(a).h(a);
            let m = b.measure(a);
            b.cond(m, false, GateKind::Cz(x, d));
        }
        AddMethod::GidneyB | AddMethod::JonesC => {
            b.s(a).h(a);
            let m = b.measure(a);
            b.cond(m, true, GateKind::Cz(x, d));
        }
        AddMethod::JonesEq10 => {
            b.h(a);
            let m = b.measure(a);
            b.cond(m, true, GateKind::Cz(x, d));
        }
    }
    Ok(b.finish())
}

/// Wire count above which [`cnz_build`] and [`cnz_selinger_logdepth`]
/// refuse to go. Generous: metrics stay cheap far beyond simulability.
const MAX_CONTROLS: usize = 24;

/// The (base, method) chain families whose C^nZ resource scaling the
/// resource tables and the T-depth scan track, in presentation order.
pub const CHAIN_FAMILIES: [(&str, AddMethod); 8] = [
    ("cccz-fig1a", AddMethod::PalerA),
    ("cccz-fig1a-prime", AddMethod::PalerA),
    ("cccz-fig1b", AddMethod::GidneyB),
    ("cccz-gidney", AddMethod::GidneyB),
    ("cccz-fig1a", AddMethod::GidneyB),
    ("cccz-fig1b", AddMethod::JonesC),
    ("cz", AddMethod::JonesC),
    ("cz", AddMethod::GidneyB),
];

/// Build a C^nZ circuit by repeatedly extending a catalog base circuit.
///
/// `base` must name a catalog entry implementing a positively-controlled
/// multi-controlled Z with at most `n` controls; each step adds one control
/// with `method`, designating wires per `strategy`.
pub fn cnz_build(
    n: usize,
    base: &str,
    method: AddMethod,
    strategy: AssignmentStrategy,
) -> Result<Circuit, ExtendError> {
    let e = catalog::entry(base).ok_or_else(|| ExtendError::UnknownBase(base.to_string()))?;
    let has = match &e.target {
        TargetSpec::Mcp { polarities, axis: PauliAxis::Z }
            if polarities.iter().all(|p| *p == Polarity::Positive) =>
        {
            polarities.len()
        }
        _ => return Err(ExtendError::BaseNotExtensible(base.to_string())),
    };
    if n < has {
        return Err(ExtendError::TooFewControls { requested: n, base: base.to_string(), has });
    }
    if n > MAX_CONTROLS {
        return Err(ExtendError::ControlCount { n, min: has, max: MAX_CONTROLS });
    }

    let mut current = (e.build)();
    match strategy {
        AssignmentStrategy::Linear => {
            for _ in has..n {
                let x = QubitId::data(current.data_qubits());
                current = add_control(method, &current, QubitId::data(0), x)?;
            }
        }
        AssignmentStrategy::Greedy => {
            for _ in has..n {
                current = best_single_step(method, &current)?;
            }
        }
        AssignmentStrategy::Exhaustive => {
            current = best_sequence(method, &current, n - has)?
                .map(|(_, c)| c)
                .ok_or(ExtendError::NoCandidate { have: current.data_qubits() })?;
        }
    }
    Ok(current)
}

/// One greedy step: the admissible designation minimizing T-depth now.
fn best_single_step(method: AddMethod, current: &Circuit) -> Result<Circuit, ExtendError> {
    let x = QubitId::data(current.data_qubits());
    let mut best: Option<(usize, Circuit)> = None;
    for i in 0..current.data_qubits() {
        let Ok(candidate) = add_control(method, current, QubitId::data(i), x) else {
            continue;
        };
        let td = t_depth(&candidate);
        if best.as_ref().map_or(true, |(bt, _)| td < *bt) {
            best = Some((td, candidate));
        }
    }
    best.map(|(_, c)| c)
        .ok_or(ExtendError::NoCandidate { have: current.data_qubits() })
}

/// Full search over designation sequences, minimizing final T-depth. The
/// first-found minimum wins, which with ascending wire order makes the
/// result the lexicographically smallest optimal sequence.
fn best_sequence(
    method: AddMethod,
    current: &Circuit,
    steps: usize,
) -> Result<Option<(usize, Circuit)>, ExtendError> {
    if steps == 0 {
        return Ok(Some((t_depth(current), current.clone())));
    }
    let x = QubitId::data(current.data_qubits());
    let mut best: Option<(usize, Circuit)> = None;
    for i in 0..current.data_qubits() {
        let Ok(next) = add_control(method, current, QubitId::data(i), x) else {
            continue;
        };
        if let Some((td, c)) = best_sequence(method, &next, steps - 1)? {
            if best.as_ref().map_or(true, |(bt, _)| td < *bt) {
                best = Some((td, c));
            }
        }
    }
    Ok(best)
}

/// Build C^nZ as a balanced pairing tree of ±iX blocks around a T-depth-1
/// CCZ core: T-count 8n−9, CNOT-count 16n−16, measurement-free.
///
/// With `improved` set, all n+1 wires join the pairing and the T-depth is
/// 2⌊log₂(n/3)⌋+3; without it the last control sits out until the core and
/// the T-depth is 2⌊log₂(n−2)⌋+3. Tree ancillas hold pair-ANDs across the
/// core and are unwound by mirrored +iX blocks; per-block helper wires
/// return to |0⟩ immediately and are pooled across levels.
pub fn cnz_selinger_logdepth(n: usize, improved: bool) -> Result<Circuit, ExtendError> {
    if n < 3 || n > MAX_CONTROLS {
        return Err(ExtendError::ControlCount { n, min: 3, max: MAX_CONTROLS });
    }
    let mut b = CircuitBuilder::with_ancillas(n + 1, 0);
    let mut pool: Vec<QubitId> = Vec::new();

    let (mut active, reserved): (Vec<QubitId>, Vec<QubitId>) = if improved {
        ((0..=n).map(QubitId::data).collect(), vec![])
    } else {
        (
            (0..n - 1).map(QubitId::data).collect(),
            vec![QubitId::data(n - 1), QubitId::data(n)],
        )
    };

    // Compute levels: pair active wires left to right into fresh tree
    // ancillas, keeping at least three wires alive in the improved regime
    // and reducing the control tree to a single root otherwise.
    let mut levels: Vec<Vec<(QubitId, QubitId, QubitId, QubitId)>> = Vec::new();
    let stop = if improved { 3 } else { 1 };
    while active.len() > stop {
        let w = active.len();
        let merges = if improved { (w / 2).min(w - 3) } else { w / 2 };
        let mut blocks = Vec::with_capacity(merges);
        let mut next_active = Vec::new();
        for j in 0..merges {
            let (c1, c2) = (active[2 * j], active[2 * j + 1]);
            let t = b.alloc_ancilla();
            let h = pool.pop().unwrap_or_else(|| b.alloc_ancilla());
            emit_cc_minus_ix(&mut b, c1, c2, t, h);
            blocks.push((c1, c2, t, h));
            next_active.push(t);
        }
        next_active.extend_from_slice(&active[2 * merges..]);
        pool.extend(blocks.iter().map(|&(_, _, _, h)| h));
        levels.push(blocks);
        active = next_active;
    }

    // T-depth-1 CCZ core on the three surviving wires.
    let core: Vec<QubitId> = active.iter().chain(reserved.iter()).copied().collect();
    debug_assert_eq!(core.len(), 3);
    let mut borrowed = [QubitId::ancilla(0); 4];
    for slot in &mut borrowed {
        *slot = pool.pop().unwrap_or_else(|| b.alloc_ancilla());
    }
    emit_ccz_tdepth1(&mut b, core[0], core[1], core[2], borrowed);
    pool.extend(borrowed);

    // Mirror: unwind the tree with +iX blocks, innermost level first.
    for blocks in levels.iter().rev() {
        for &(c1, c2, t, h) in blocks.iter().rev() {
            emit_cc_plus_ix(&mut b, c1, c2, t, h);
        }
    }
    Ok(b.finish())
}

/// Re-express a multi-controlled-Z circuit as the matching multi-controlled
/// X or Y by conjugating the last data wire: H for X, H·S (with the inverse
/// in front) for Y. The Z axis returns the circuit unchanged.
pub fn convert_pauli(c: &Circuit, axis: PauliAxis) -> Circuit {
    let t = QubitId::data(c.data_qubits() - 1);
    let mut b = CircuitBuilder::with_ancillas(c.data_qubits(), c.ancilla_qubits());
    match axis {
        PauliAxis::Z => {}
        PauliAxis::X => {
            b.h(t);
        }
        PauliAxis::Y => {
            b.sdg(t).h(t);
        }
    }
    let mut bit_map = vec![None::<ClassicalBitId>; c.classical_bits()];
    for ins in c.instructions() {
        match ins {
            Instruction::Gate(g) => {
                b.gate(g.clone());
            }
            Instruction::Measure { qubit, into } => {
                bit_map[into.0] = Some(b.measure(*qubit));
            }
            Instruction::Conditioned { bit, value, gate } => {
                let nb = bit_map[bit.0].expect("bit written before read");
                b.cond(nb, *value, gate.clone());
            }
        }
    }
    match axis {
        PauliAxis::Z => {}
        PauliAxis::X => {
            b.h(t);
        }
        PauliAxis::Y => {
            b.h(t).s(t);
        }
    }
    b.finish()
}
