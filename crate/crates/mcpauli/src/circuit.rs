//! Circuit intermediate representation.
//!
//! Circuits act on two qubit registers — `data` (the qubits a decomposition
//! is *about*) and `ancilla` (scratch wires a decomposition may borrow, which
//! must start and end in |0⟩) — plus a register of classical bits written by
//! measurements. Wires are addressed as `q<i>` (data) and `a<j>` (ancilla);
//! globally, data wires come first, then ancillas, and wire 0 is the most
//! significant bit of a basis-state index everywhere in this crate.
//!
//! The low-level alphabet is Clifford+T: H, T, T†, S, S†, X, Y, Z, √X†, CX,
//! CZ, plus destructive Z-basis measurement and classically conditioned
//! gates. The single high-level placeholder is [`GateKind::Mcp`], a
//! multi-controlled Pauli with per-control polarity — the gate family the
//! rest of the crate decomposes.
//!
//! `Circuit` values are immutable once built; every transformation
//! ([`compose`], [`inverse`]) returns a new value.

use std::fmt;

/// Which register a qubit lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Register {
    /// A qubit the circuit's overall action is defined on.
    Data,
    /// A borrowed scratch qubit, |0⟩ at entry and |0⟩ (or measured) at exit.
    Ancilla,
}

/// A qubit address: register plus index within that register.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QubitId {
    pub register: Register,
    pub index: usize,
}

impl QubitId {
    /// Data qubit `q<index>`.
    pub const fn data(index: usize) -> Self {
        QubitId { register: Register::Data, index }
    }

    /// Ancilla qubit `a<index>`.
    pub const fn ancilla(index: usize) -> Self {
        QubitId { register: Register::Ancilla, index }
    }
}

impl fmt::Display for QubitId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.register {
            Register::Data => write!(f, "q{}", self.index),
            Register::Ancilla => write!(f, "a{}", self.index),
        }
    }
}

/// A classical bit address `c<index>`, written by exactly one measurement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassicalBitId(pub usize);

impl fmt::Display for ClassicalBitId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c{}", self.0)
    }
}

/// Pauli axis of a multi-controlled Pauli placeholder.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PauliAxis {
    X,
    Y,
    Z,
}

/// Control polarity: `Positive` fires on |1⟩, `Negative` on |0⟩.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Polarity {
    Positive,
    Negative,
}

/// A single gate. Everything except [`GateKind::Mcp`] belongs to the
/// low-level Clifford+T alphabet.
#[derive(Debug, Clone, PartialEq)]
pub enum GateKind {
    /// Hadamard.
    H(QubitId),
    /// T = diag(1, e^{iπ/4}).
    T(QubitId),
    /// T† = diag(1, e^{-iπ/4}).
    Tdg(QubitId),
    /// S = diag(1, i).
    S(QubitId),
    /// S† = diag(1, -i).
    Sdg(QubitId),
    /// Pauli X.
    X(QubitId),
    /// Pauli Y.
    Y(QubitId),
    /// Pauli Z.
    Z(QubitId),
    /// √X† = ½[[1−i, 1+i], [1+i, 1−i]]; equals H·S†·H exactly.
    SqrtXdg(QubitId),
    /// Controlled-X.
    Cx { control: QubitId, target: QubitId },
    /// Controlled-Z (symmetric in its two wires).
    Cz(QubitId, QubitId),
    /// Multi-controlled Pauli placeholder: applies `axis` to `target` when
    /// every control matches its polarity. High-level — decompositions in
    /// this crate replace it with the low-level alphabet.
    Mcp {
        axis: PauliAxis,
        target: QubitId,
        controls: Vec<(QubitId, Polarity)>,
    },
}

impl GateKind {
    /// Every qubit the gate touches, target last for controlled gates.
    pub fn qubits(&self) -> Vec<QubitId> {
        match self {
            GateKind::H(q)
            | GateKind::T(q)
            | GateKind::Tdg(q)
            | GateKind::S(q)
            | GateKind::Sdg(q)
            | GateKind::X(q)
            | GateKind::Y(q)
            | GateKind::Z(q)
            | GateKind::SqrtXdg(q) => vec![*q],
            GateKind::Cx { control, target } => vec![*control, *target],
            GateKind::Cz(a, b) => vec![*a, *b],
            GateKind::Mcp { target, controls, .. } => {
                let mut qs: Vec<QubitId> = controls.iter().map(|(q, _)| *q).collect();
                qs.push(*target);
                qs
            }
        }
    }

    /// True for T and T† — the gates the T-count and T-depth metrics track.
    pub fn is_t(&self) -> bool {
        matches!(self, GateKind::T(_) | GateKind::Tdg(_))
    }

    /// The gate sequence implementing this gate's inverse, in circuit order.
    ///
    /// Every gate in the alphabet is its own inverse or has its inverse in
    /// the alphabet, except √X†, whose inverse √X is emitted as the exact
    /// product H·S·H (circuit order [H, S, H]).
    pub fn inverse_gates(&self) -> Vec<GateKind> {
        match self {
            GateKind::T(q) => vec![GateKind::Tdg(*q)],
            GateKind::Tdg(q) => vec![GateKind::T(*q)],
            GateKind::S(q) => vec![GateKind::Sdg(*q)],
            GateKind::Sdg(q) => vec![GateKind::S(*q)],
            GateKind::SqrtXdg(q) => vec![GateKind::H(*q), GateKind::S(*q), GateKind::H(*q)],
            other => vec![other.clone()],
        }
    }
}

/// One step of a circuit.
#[derive(Debug, Clone, PartialEq)]
pub enum Instruction {
    /// Apply a gate unconditionally.
    Gate(GateKind),
    /// Destructive Z-basis measurement of `qubit`, recorded into `into`.
    Measure { qubit: QubitId, into: ClassicalBitId },
    /// Apply `gate` only on the measurement record: fires when `bit == value`.
    Conditioned {
        bit: ClassicalBitId,
        value: bool,
        gate: GateKind,
    },
}

impl Instruction {
    /// The qubits this instruction touches.
    pub fn qubits(&self) -> Vec<QubitId> {
        match self {
            Instruction::Gate(g) | Instruction::Conditioned { gate: g, .. } => g.qubits(),
            Instruction::Measure { qubit, .. } => vec![*qubit],
        }
    }
}

/// An immutable quantum circuit over a data register, an ancilla register,
/// and a classical bit register.
#[derive(Debug, Clone, PartialEq)]
pub struct Circuit {
    data_qubits: usize,
    ancilla_qubits: usize,
    classical_bits: usize,
    instructions: Vec<Instruction>,
}

impl Circuit {
    /// Assemble a circuit from explicit register sizes and instructions.
    /// No validation is performed here; call [`validate`] for diagnostics.
    pub fn new(
        data_qubits: usize,
        ancilla_qubits: usize,
        classical_bits: usize,
        instructions: Vec<Instruction>,
    ) -> Self {
        Circuit { data_qubits, ancilla_qubits, classical_bits, instructions }
    }

    /// Number of data qubits.
    pub fn data_qubits(&self) -> usize {
        self.data_qubits
    }

    /// Number of ancilla qubits.
    pub fn ancilla_qubits(&self) -> usize {
        self.ancilla_qubits
    }

    /// Number of classical bits.
    pub fn classical_bits(&self) -> usize {
        self.classical_bits
    }

    /// Data plus ancilla qubits.
    pub fn total_qubits(&self) -> usize {
        self.data_qubits + self.ancilla_qubits
    }

    /// The instruction sequence, in circuit order.
    pub fn instructions(&self) -> &[Instruction] {
        &self.instructions
    }

    /// Global wire index of a qubit: data wires first, then ancillas.
    /// Wire 0 is the most significant bit of a basis-state index.
    pub fn wire(&self, q: QubitId) -> usize {
        match q.register {
            Register::Data => q.index,
            Register::Ancilla => self.data_qubits + q.index,
        }
    }

    /// True if any instruction is a high-level multi-controlled Pauli.
    pub fn has_mcp(&self) -> bool {
        self.instructions.iter().any(|ins| {
            matches!(
                ins,
                Instruction::Gate(GateKind::Mcp { .. })
                    | Instruction::Conditioned { gate: GateKind::Mcp { .. }, .. }
            )
        })
    }

    /// True if any instruction measures or is classically conditioned.
    pub fn has_measurement(&self) -> bool {
        self.instructions
            .iter()
            .any(|ins| !matches!(ins, Instruction::Gate(_)))
    }
}

/// Incremental circuit constructor. Chained gate methods keep the builder
/// usable inline; `measure` allocates and returns the classical bit it
/// writes; `alloc_ancilla` grows the ancilla register.
#[derive(Debug, Clone)]
pub struct CircuitBuilder {
    data_qubits: usize,
    ancilla_qubits: usize,
    classical_bits: usize,
    instructions: Vec<Instruction>,
}

impl CircuitBuilder {
    /// A builder over `data_qubits` data wires and no ancillas yet.
    pub fn new(data_qubits: usize) -> Self {
        Self::with_ancillas(data_qubits, 0)
    }

    /// A builder with both register sizes fixed up front.
    pub fn with_ancillas(data_qubits: usize, ancilla_qubits: usize) -> Self {
        CircuitBuilder {
            data_qubits,
            ancilla_qubits,
            classical_bits: 0,
            instructions: Vec::new(),
        }
    }

    /// Grow the ancilla register by one wire and return its address.
    pub fn alloc_ancilla(&mut self) -> QubitId {
        let q = QubitId::ancilla(self.ancilla_qubits);
        self.ancilla_qubits += 1;
        q
    }

    /// Append any instruction verbatim.
    pub fn push(&mut self, instruction: Instruction) -> &mut Self {
        self.instructions.push(instruction);
        self
    }

    /// Append an unconditional gate.
    pub fn gate(&mut self, gate: GateKind) -> &mut Self {
        self.push(Instruction::Gate(gate))
    }

    pub fn h(&mut self, q: QubitId) -> &mut Self {
        self.gate(GateKind::H(q))
    }

    pub fn t(&mut self, q: QubitId) -> &mut Self {
        self.gate(GateKind::T(q))
    }

    pub fn tdg(&mut self, q: QubitId) -> &mut Self {
        self.gate(GateKind::Tdg(q))
    }

    pub fn s(&mut self, q: QubitId) -> &mut Self {
        self.gate(GateKind::S(q))
    }

    pub fn sdg(&mut self, q: QubitId) -> &mut Self {
        self.gate(GateKind::Sdg(q))
    }

    pub fn x(&mut self, q: QubitId) -> &mut Self {
        self.gate(GateKind::X(q))
    }

    pub fn y(&mut self, q: QubitId) -> &mut Self {
        self.gate(GateKind::Y(q))
    }

    pub fn z(&mut self, q: QubitId) -> &mut Self {
        self.gate(GateKind::Z(q))
    }

    pub fn sxdg(&mut self, q: QubitId) -> &mut Self {
        self.gate(GateKind::SqrtXdg(q))
    }

    pub fn cx(&mut self, control: QubitId, target: QubitId) -> &mut Self {
        self.gate(GateKind::Cx { control, target })
    }

    pub fn cz(&mut self, a: QubitId, b: QubitId) -> &mut Self {
        self.gate(GateKind::Cz(a, b))
    }

    /// Append a multi-controlled Pauli with explicit control polarities.
    pub fn mcp(
        &mut self,
        axis: PauliAxis,
        target: QubitId,
        controls: Vec<(QubitId, Polarity)>,
    ) -> &mut Self {
        self.gate(GateKind::Mcp { axis, target, controls })
    }

    /// Measure `q` in the Z basis into a freshly allocated classical bit.
    pub fn measure(&mut self, q: QubitId) -> ClassicalBitId {
        let bit = ClassicalBitId(self.classical_bits);
        self.classical_bits += 1;
        self.instructions.push(Instruction::Measure { qubit: q, into: bit });
        bit
    }

    /// Append a gate that fires only when `bit == value`.
    pub fn cond(&mut self, bit: ClassicalBitId, value: bool, gate: GateKind) -> &mut Self {
        self.push(Instruction::Conditioned { bit, value, gate })
    }

    /// Freeze the builder into an immutable circuit.
    pub fn finish(self) -> Circuit {
        Circuit {
            data_qubits: self.data_qubits,
            ancilla_qubits: self.ancilla_qubits,
            classical_bits: self.classical_bits,
            instructions: self.instructions,
        }
    }
}

/// How far down the gate hierarchy a valid circuit sits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CircuitLevel {
    /// Only the Clifford+T alphabet plus measurement/conditioning.
    LowLevel,
    /// Contains at least one multi-controlled Pauli placeholder.
    HighLevel,
}

/// A structural problem found by [`validate`], tagged with the offending
/// instruction's position.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ValidationError {
    #[error("instruction {index}: qubit {qubit} is outside the declared registers")]
    QubitOutOfRange { index: usize, qubit: String },
    #[error("instruction {index}: classical bit {bit} is outside the declared register")]
    BitOutOfRange { index: usize, bit: String },
    #[error("instruction {index}: gate touches qubit {qubit} more than once")]
    DuplicateQubit { index: usize, qubit: String },
    #[error("instruction {index}: condition reads {bit} before any measurement writes it")]
    ConditionBeforeMeasure { index: usize, bit: String },
    #[error("instruction {index}: classical bit {bit} written by more than one measurement")]
    BitRewritten { index: usize, bit: String },
    #[error("instruction {index}: qubit {qubit} used after being measured")]
    UseAfterMeasure { index: usize, qubit: String },
    #[error("instruction {index}: multi-controlled Pauli has no controls")]
    EmptyControls { index: usize },
}

/// Outcome of structural validation: collected errors plus, when clean, the
/// circuit's level in the gate hierarchy.
#[derive(Debug, Clone, PartialEq)]
pub struct ValidationReport {
    pub errors: Vec<ValidationError>,
    pub level: Option<CircuitLevel>,
}

impl ValidationReport {
    /// True when no structural errors were found.
    pub fn is_valid(&self) -> bool {
        self.errors.is_empty()
    }
}

/// Structurally validate a circuit.
///
/// Checks, per instruction: qubit and classical-bit indices lie inside the
/// declared registers; no gate touches the same qubit twice; every
/// multi-controlled Pauli has at least one control; conditions only read
/// bits some earlier measurement wrote; no bit is written twice; and
/// measured qubits are never used again (measurement here is destructive —
/// the wire is consumed). A clean circuit is classified `HighLevel` when a
/// multi-controlled Pauli is present, `LowLevel` otherwise.
pub fn validate(c: &Circuit) -> ValidationReport {
    let mut errors = Vec::new();
    let mut written = vec![false; c.classical_bits()];
    let mut measured: Vec<QubitId> = Vec::new();

    for (index, ins) in c.instructions().iter().enumerate() {
        // Register bounds and operand distinctness.
        let qs = ins.qubits();
        for &q in &qs {
            let in_range = match q.register {
                Register::Data => q.index < c.data_qubits(),
                Register::Ancilla => q.index < c.ancilla_qubits(),
            };
            if !in_range {
                errors.push(ValidationError::QubitOutOfRange { index, qubit: q.to_string() });
            }
            if measured.contains(&q) {
                errors.push(ValidationError::UseAfterMeasure { index, qubit: q.to_string() });
            }
        }
        for (i, &q) in qs.iter().enumerate() {
            if qs[..i].contains(&q) {
                errors.push(ValidationError::DuplicateQubit { index, qubit: q.to_string() });
            }
        }

        let gate = match ins {
            Instruction::Gate(g) => Some(g),
            Instruction::Conditioned { bit, value: _, gate } => {
                if bit.0 >= c.classical_bits() {
                    errors.push(ValidationError::BitOutOfRange { index, bit: bit.to_string() });
                } else if !written[bit.0] {
                    errors.push(ValidationError::ConditionBeforeMeasure {
                        index,
                        bit: bit.to_string(),
                    });
                }
                Some(gate)
            }
            Instruction::Measure { qubit, into } => {
                if into.0 >= c.classical_bits() {
                    errors.push(ValidationError::BitOutOfRange { index, bit: into.to_string() });
                } else {
                    if written[into.0] {
                        errors.push(ValidationError::BitRewritten { index, bit: into.to_string() });
                    }
                    written[into.0] = true;
                }
                measured.push(*qubit);
                None
            }
        };
        if let Some(GateKind::Mcp { controls, .. }) = gate {
            if controls.is_empty() {
                errors.push(ValidationError::EmptyControls { index });
            }
        }
    }

    let level = if errors.is_empty() {
        Some(if c.has_mcp() { CircuitLevel::HighLevel } else { CircuitLevel::LowLevel })
    } else {
        None
    };
    ValidationReport { errors, level }
}

/// Where each qubit of a second circuit lands when composed onto a first:
/// `data[i]` is the destination of its `q<i>`, `ancilla[j]` of its `a<j>`.
/// Destinations may be the first circuit's data or ancilla wires, or fresh
/// ancilla indices beyond its register (which the composite then grows to
/// include).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QubitMap {
    pub data: Vec<QubitId>,
    pub ancilla: Vec<QubitId>,
}

impl QubitMap {
    /// The identity map for `b`: every wire keeps its own address.
    pub fn identity(b: &Circuit) -> Self {
        QubitMap {
            data: (0..b.data_qubits()).map(QubitId::data).collect(),
            ancilla: (0..b.ancilla_qubits()).map(QubitId::ancilla).collect(),
        }
    }

    fn apply(&self, q: QubitId) -> QubitId {
        match q.register {
            Register::Data => self.data[q.index],
            Register::Ancilla => self.ancilla[q.index],
        }
    }
}

/// Why two circuits cannot be composed.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ComposeError {
    #[error("map covers {got_data} data / {got_anc} ancilla wires; second circuit has {want_data} / {want_anc}")]
    MapIncomplete {
        got_data: usize,
        got_anc: usize,
        want_data: usize,
        want_anc: usize,
    },
    #[error("map sends two wires to {target}; targets must be distinct")]
    OverlappingTargets { target: String },
    #[error("map targets data wire {target}, but the first circuit has only {data} data qubits")]
    DataOutOfRange { target: String, data: usize },
}

/// Sequential composition: `a`'s instructions followed by `b`'s, with `b`'s
/// qubits rerouted through `map` — onto `a`'s wires or onto fresh ancillas,
/// which the composite's ancilla register grows to cover. The data register
/// stays `a`'s. Classical bits of `b` are renumbered after `a`'s so
/// measurement records never collide.
pub fn compose(a: &Circuit, b: &Circuit, map: &QubitMap) -> Result<Circuit, ComposeError> {
    if map.data.len() != b.data_qubits() || map.ancilla.len() != b.ancilla_qubits() {
        return Err(ComposeError::MapIncomplete {
            got_data: map.data.len(),
            got_anc: map.ancilla.len(),
            want_data: b.data_qubits(),
            want_anc: b.ancilla_qubits(),
        });
    }
    let mut ancillas = a.ancilla_qubits();
    let mut seen: Vec<QubitId> = Vec::new();
    for &target in map.data.iter().chain(map.ancilla.iter()) {
        if seen.contains(&target) {
            return Err(ComposeError::OverlappingTargets { target: target.to_string() });
        }
        seen.push(target);
        match target.register {
            Register::Data => {
                if target.index >= a.data_qubits() {
                    return Err(ComposeError::DataOutOfRange {
                        target: target.to_string(),
                        data: a.data_qubits(),
                    });
                }
            }
            Register::Ancilla => ancillas = ancillas.max(target.index + 1),
        }
    }

    let shift = a.classical_bits();
    let shift_bit = |bit: ClassicalBitId| ClassicalBitId(bit.0 + shift);
    let remap_gate = |g: &GateKind| -> GateKind {
        match g {
            GateKind::H(q) => GateKind::H(map.apply(*q)),
            GateKind::T(q) => GateKind::T(map.apply(*q)),
            GateKind::Tdg(q) => GateKind::Tdg(map.apply(*q)),
            GateKind::S(q) => GateKind::S(map.apply(*q)),
            GateKind::Sdg(q) => GateKind::Sdg(map.apply(*q)),
            GateKind::X(q) => GateKind::X(map.apply(*q)),
            GateKind::Y(q) => GateKind::Y(map.apply(*q)),
            GateKind::Z(q) => GateKind::Z(map.apply(*q)),
            GateKind::SqrtXdg(q) => GateKind::SqrtXdg(map.apply(*q)),
            GateKind::Cx { control, target } => GateKind::Cx {
                control: map.apply(*control),
                target: map.apply(*target),
            },
            GateKind::Cz(x, y) => GateKind::Cz(map.apply(*x), map.apply(*y)),
            GateKind::Mcp { axis, target, controls } => GateKind::Mcp {
                axis: *axis,
                target: map.apply(*target),
                controls: controls.iter().map(|(q, p)| (map.apply(*q), *p)).collect(),
            },
        }
    };

    let mut instructions = a.instructions().to_vec();
    instructions.extend(b.instructions().iter().map(|ins| match ins {
        Instruction::Gate(g) => Instruction::Gate(remap_gate(g)),
        Instruction::Measure { qubit, into } => Instruction::Measure {
            qubit: map.apply(*qubit),
            into: shift_bit(*into),
        },
        Instruction::Conditioned { bit, value, gate } => Instruction::Conditioned {
            bit: shift_bit(*bit),
            value: *value,
            gate: remap_gate(gate),
        },
    }));
    Ok(Circuit::new(
        a.data_qubits(),
        ancillas,
        a.classical_bits() + b.classical_bits(),
        instructions,
    ))
}

/// Why a circuit has no circuit-level inverse.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InverseError {
    #[error("instruction {index} measures a qubit; measurement is irreversible")]
    HasMeasurement { index: usize },
    #[error("instruction {index} is classically conditioned; conditioning is irreversible")]
    HasConditioning { index: usize },
}

/// The inverse of a purely unitary circuit: instructions reversed, each gate
/// replaced by its inverse. Fails on measurement or conditioning. √X† maps
/// to the exact three-gate product H·S·H, so the result stays inside the
/// alphabet (at the cost of structural — not unitary — involution for
/// circuits containing √X†).
pub fn inverse(c: &Circuit) -> Result<Circuit, InverseError> {
    for (index, ins) in c.instructions().iter().enumerate() {
        match ins {
            Instruction::Measure { .. } => return Err(InverseError::HasMeasurement { index }),
            Instruction::Conditioned { .. } => {
                return Err(InverseError::HasConditioning { index })
            }
            Instruction::Gate(_) => {}
        }
    }
    let mut instructions = Vec::with_capacity(c.instructions().len());
    for ins in c.instructions().iter().rev() {
        if let Instruction::Gate(g) = ins {
            instructions.extend(g.inverse_gates().into_iter().map(Instruction::Gate));
        }
    }
    Ok(Circuit::new(c.data_qubits(), c.ancilla_qubits(), c.classical_bits(), instructions))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_circuit() -> Circuit {
        let mut b = CircuitBuilder::new(2);
        let a0 = b.alloc_ancilla();
        b.h(a0).t(QubitId::data(0)).cx(QubitId::data(0), a0);
        let c0 = b.measure(a0);
        b.cond(c0, true, GateKind::Cz(QubitId::data(0), QubitId::data(1)));
        b.finish()
    }

    #[test]
    fn builder_tracks_registers_and_order() {
        let c = sample_circuit();
        assert_eq!(c.data_qubits(), 2);
        assert_eq!(c.ancilla_qubits(), 1);
        assert_eq!(c.classical_bits(), 1);
        assert_eq!(c.instructions().len(), 5);
        assert_eq!(c.wire(QubitId::data(1)), 1);
        assert_eq!(c.wire(QubitId::ancilla(0)), 2, "ancillas sit after data wires");
    }

    #[test]
    fn validate_accepts_well_formed_low_and_high_level() {
        let low = sample_circuit();
        let report = validate(&low);
        assert!(report.is_valid(), "unexpected errors: {:?}", report.errors);
        assert_eq!(report.level, Some(CircuitLevel::LowLevel));

        let mut b = CircuitBuilder::new(3);
        b.mcp(
            PauliAxis::Z,
            QubitId::data(2),
            vec![
                (QubitId::data(0), Polarity::Positive),
                (QubitId::data(1), Polarity::Negative),
            ],
        );
        let report = validate(&b.finish());
        assert_eq!(report.level, Some(CircuitLevel::HighLevel));
    }

    #[test]
    fn validate_flags_out_of_range_and_duplicates() {
        let c = Circuit::new(
            1,
            0,
            0,
            vec![
                Instruction::Gate(GateKind::H(QubitId::data(3))),
                Instruction::Gate(GateKind::Cx {
                    control: QubitId::data(0),
                    target: QubitId::data(0),
                }),
            ],
        );
        let report = validate(&c);
        assert!(!report.is_valid());
        assert!(matches!(report.errors[0], ValidationError::QubitOutOfRange { index: 0, .. }));
        assert!(matches!(report.errors[1], ValidationError::DuplicateQubit { index: 1, .. }));
        assert_eq!(report.level, None);
    }

    #[test]
    fn validate_flags_condition_before_measure_and_reuse_after_measure() {
        let c = Circuit::new(
            1,
            1,
            1,
            vec![
                Instruction::Conditioned {
                    bit: ClassicalBitId(0),
                    value: true,
                    gate: GateKind::Z(QubitId::data(0)),
                },
                Instruction::Measure { qubit: QubitId::ancilla(0), into: ClassicalBitId(0) },
                Instruction::Gate(GateKind::H(QubitId::ancilla(0))),
            ],
        );
        let errors = validate(&c).errors;
        assert!(errors
            .iter()
            .any(|e| matches!(e, ValidationError::ConditionBeforeMeasure { index: 0, .. })));
        assert!(errors
            .iter()
            .any(|e| matches!(e, ValidationError::UseAfterMeasure { index: 2, .. })));
    }

    #[test]
    fn compose_identity_map_appends_and_shifts_classical_bits() {
        let first = sample_circuit();
        let second = sample_circuit();
        // The first circuit measured a0; route the second copy's a0 to a
        // fresh wire so the destructive-measurement rule stays satisfied.
        let map = QubitMap {
            data: vec![QubitId::data(0), QubitId::data(1)],
            ancilla: vec![QubitId::ancilla(1)],
        };
        let joined = compose(&first, &second, &map).expect("valid map");
        assert_eq!(joined.classical_bits(), 2);
        assert_eq!(joined.ancilla_qubits(), 2, "register grows to cover the fresh wire");
        let m: Vec<_> = joined
            .instructions()
            .iter()
            .filter_map(|ins| match ins {
                Instruction::Measure { into, .. } => Some(into.0),
                _ => None,
            })
            .collect();
        assert_eq!(m, vec![0, 1], "second circuit's record lands in fresh bits");
        assert!(validate(&joined).is_valid());
    }

    #[test]
    fn compose_with_identity_map_onto_empty_is_identity() {
        let c = sample_circuit();
        let empty = CircuitBuilder::new(c.data_qubits()).finish();
        let joined = compose(&empty, &c, &QubitMap::identity(&c)).unwrap();
        assert_eq!(joined, c);
    }

    #[test]
    fn compose_reusing_a_measured_wire_is_flagged_by_validate() {
        let first = sample_circuit();
        let second = sample_circuit();
        let joined = compose(&first, &second, &QubitMap::identity(&second)).unwrap();
        let report = validate(&joined);
        assert!(
            report
                .errors
                .iter()
                .any(|e| matches!(e, ValidationError::UseAfterMeasure { .. })),
            "measurement consumes a wire; remap to a fresh ancilla instead"
        );
    }

    #[test]
    fn compose_rejects_bad_maps() {
        let a = CircuitBuilder::new(2).finish();
        let mut bb = CircuitBuilder::new(2);
        bb.cx(QubitId::data(0), QubitId::data(1));
        let b = bb.finish();

        let incomplete = QubitMap { data: vec![QubitId::data(0)], ancilla: vec![] };
        assert!(matches!(
            compose(&a, &b, &incomplete),
            Err(ComposeError::MapIncomplete { .. })
        ));

        let overlapping = QubitMap {
            data: vec![QubitId::data(0), QubitId::data(0)],
            ancilla: vec![],
        };
        assert!(matches!(
            compose(&a, &b, &overlapping),
            Err(ComposeError::OverlappingTargets { .. })
        ));

        let out_of_range = QubitMap {
            data: vec![QubitId::data(0), QubitId::data(5)],
            ancilla: vec![],
        };
        assert!(matches!(
            compose(&a, &b, &out_of_range),
            Err(ComposeError::DataOutOfRange { .. })
        ));
    }

    #[test]
    fn compose_is_associative_for_compatible_maps() {
        // Pure-gate circuits with identity maps: both association orders
        // give the same instruction list.
        let make = |seed: usize| {
            let mut b = CircuitBuilder::new(2);
            b.t(QubitId::data(seed % 2)).cx(QubitId::data(0), QubitId::data(1));
            b.finish()
        };
        let (x, y, z) = (make(0), make(1), make(2));
        let idy = QubitMap::identity(&y);
        let idz = QubitMap::identity(&z);
        let left = compose(&compose(&x, &y, &idy).unwrap(), &z, &idz).unwrap();
        let right = compose(&x, &compose(&y, &z, &idz).unwrap(), &QubitMap::identity(&y)).unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn inverse_reverses_and_conjugates() {
        let mut b = CircuitBuilder::new(1);
        let q = QubitId::data(0);
        b.h(q).t(q).s(q);
        let c = b.finish();
        let inv = inverse(&c).unwrap();
        let kinds: Vec<_> = inv
            .instructions()
            .iter()
            .map(|ins| match ins {
                Instruction::Gate(g) => g.clone(),
                _ => unreachable!(),
            })
            .collect();
        assert_eq!(kinds, vec![GateKind::Sdg(q), GateKind::Tdg(q), GateKind::H(q)]);
    }

    #[test]
    fn inverse_is_structurally_involutive_without_sqrt_x_dagger() {
        let mut b = CircuitBuilder::new(3);
        b.h(QubitId::data(0))
            .t(QubitId::data(1))
            .cx(QubitId::data(0), QubitId::data(2))
            .cz(QubitId::data(1), QubitId::data(2))
            .sdg(QubitId::data(0));
        let c = b.finish();
        assert_eq!(inverse(&inverse(&c).unwrap()).unwrap(), c);
    }

    #[test]
    fn inverse_expands_sqrt_x_dagger_exactly() {
        let q = QubitId::data(0);
        let mut b = CircuitBuilder::new(1);
        b.sxdg(q);
        let inv = inverse(&b.finish()).unwrap();
        let kinds: Vec<_> = inv
            .instructions()
            .iter()
            .map(|ins| match ins {
                Instruction::Gate(g) => g.clone(),
                _ => unreachable!(),
            })
            .collect();
        assert_eq!(kinds, vec![GateKind::H(q), GateKind::S(q), GateKind::H(q)]);
    }

    #[test]
    fn inverse_refuses_measurement() {
        let c = sample_circuit();
        assert!(matches!(inverse(&c), Err(InverseError::HasMeasurement { index: 3 })));
    }
}
