//! Dense statevector simulation, measurement-branch channel extraction, and
//! matrix oracles.
//!
//! Conventions, shared with the rest of the crate:
//! * wire 0 is the most significant bit of a basis-state index — the basis
//!   state |q0 q1 … a0 a1 …⟩ has index `q0 q1 … a0 a1 …` read as binary;
//! * ancillas start in |0⟩ and a decomposition must return them to |0⟩ or
//!   measure them; anything else shows up as `leakage`;
//! * measurement is projective and amplitudes are *not* renormalized, so a
//!   branch's norm² is the probability of reaching it.
//!
//! Dense simulation is capped at [`MAX_SIM_QUBITS`] wires; the point of this
//! module is verification of small decompositions, not scale.

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::circuit::{Circuit, GateKind, Instruction, PauliAxis, Polarity, Register};

/// Dense complex matrix used throughout the crate.
pub type CMatrix = DMatrix<Complex64>;

/// Hard cap on dense simulation width (data + ancilla wires).
pub const MAX_SIM_QUBITS: usize = 16;

/// Hard cap on the number of measurements a channel extraction enumerates.
pub const MAX_BRANCH_MEASUREMENTS: usize = 20;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// 2×2 matrix of a single-qubit gate from the low-level alphabet.
///
/// √X† is given exactly as ½[[1−i, 1+i], [1+i, 1−i]] — no rotation-angle
/// arithmetic is involved anywhere in the alphabet, so every entry below is
/// exact up to the representation of 1/√2.
pub fn single_qubit_matrix(g: &GateKind) -> Option<[[Complex64; 2]; 2]> {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let t = c(s, s); // e^{iπ/4}
    let tdg = c(s, -s); // e^{-iπ/4}
    Some(match g {
        GateKind::H(_) => [[c(s, 0.0), c(s, 0.0)], [c(s, 0.0), c(-s, 0.0)]],
        GateKind::T(_) => [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), t]],
        GateKind::Tdg(_) => [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), tdg]],
        GateKind::S(_) => [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(0.0, 1.0)]],
        GateKind::Sdg(_) => [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(0.0, -1.0)]],
        GateKind::X(_) => [[c(0.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]],
        GateKind::Y(_) => [[c(0.0, 0.0), c(0.0, -1.0)], [c(0.0, 1.0), c(0.0, 0.0)]],
        GateKind::Z(_) => [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(-1.0, 0.0)]],
        GateKind::SqrtXdg(_) => [
            [c(0.5, -0.5), c(0.5, 0.5)],
            [c(0.5, 0.5), c(0.5, -0.5)],
        ],
        _ => return None,
    })
}

/// Errors from the simulation layer.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SimError {
    #[error("circuit has {qubits} wires; dense simulation is capped at {max}")]
    TooManyQubits { qubits: usize, max: usize },
    #[error("circuit has {count} measurements; branch enumeration is capped at {max}")]
    TooManyMeasurements { count: usize, max: usize },
    #[error("input statevector has {got} amplitudes; the data register needs {want}")]
    InputLength { got: usize, want: usize },
    #[error("{got} forced outcomes supplied; the circuit has {want} measurements")]
    OutcomeCount { got: usize, want: usize },
    #[error("channel extraction requires measurements to target ancilla wires, not {qubit}")]
    MeasuredDataQubit { qubit: String },
    #[error("circuit failed structural validation: {0}")]
    InvalidCircuit(String),
    #[error("circuit is not purely unitary: instruction {index} measures or conditions")]
    NotUnitary { index: usize },
    #[error("ancillas not restored to |0⟩: residual norm² {defect:.3e}")]
    AncillaNotRestored { defect: f64 },
    #[error("multi-controlled phase on {total} wires exceeds the {max}-wire matrix cap")]
    MatrixTooLarge { total: usize, max: usize },
}

/// A dense state over `qubits` wires; amplitude `amps[i]` belongs to basis
/// state |i⟩ with wire 0 as the most significant bit.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    qubits: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// |0…0⟩ on `qubits` wires.
    pub fn zero(qubits: usize) -> Self {
        let mut amps = vec![c(0.0, 0.0); 1 << qubits];
        amps[0] = c(1.0, 0.0);
        StateVector { qubits, amps }
    }

    /// Basis state |index⟩.
    pub fn basis(qubits: usize, index: usize) -> Self {
        let mut amps = vec![c(0.0, 0.0); 1 << qubits];
        amps[index] = c(1.0, 0.0);
        StateVector { qubits, amps }
    }

    /// Wrap explicit amplitudes (length must be a power of two).
    pub fn from_amplitudes(amps: Vec<Complex64>) -> Self {
        let qubits = amps.len().trailing_zeros() as usize;
        assert_eq!(1 << qubits, amps.len(), "amplitude count must be a power of two");
        StateVector { qubits, amps }
    }

    pub fn qubits(&self) -> usize {
        self.qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    /// Σ|amp|².
    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    fn mask(&self, wire: usize) -> usize {
        1 << (self.qubits - 1 - wire)
    }

    /// Apply a 2×2 matrix to one wire.
    pub fn apply_single(&mut self, wire: usize, m: &[[Complex64; 2]; 2]) {
        let mask = self.mask(wire);
        for i in 0..self.amps.len() {
            if i & mask == 0 {
                let a0 = self.amps[i];
                let a1 = self.amps[i | mask];
                self.amps[i] = m[0][0] * a0 + m[0][1] * a1;
                self.amps[i | mask] = m[1][0] * a0 + m[1][1] * a1;
            }
        }
    }

    /// Apply CX with the given control and target wires.
    pub fn apply_cx(&mut self, control: usize, target: usize) {
        let cm = self.mask(control);
        let tm = self.mask(target);
        for i in 0..self.amps.len() {
            if i & cm != 0 && i & tm == 0 {
                self.amps.swap(i, i | tm);
            }
        }
    }

    /// Apply CZ on two wires (symmetric).
    pub fn apply_cz(&mut self, a: usize, b: usize) {
        let am = self.mask(a);
        let bm = self.mask(b);
        for i in 0..self.amps.len() {
            if i & am != 0 && i & bm != 0 {
                self.amps[i] = -self.amps[i];
            }
        }
    }

    /// Apply a multi-controlled Pauli: `axis` on `target` whenever every
    /// `(wire, polarity)` control matches (Positive↔|1⟩, Negative↔|0⟩).
    pub fn apply_mcp(&mut self, axis: PauliAxis, target: usize, controls: &[(usize, Polarity)]) {
        let mut care = 0usize;
        let mut want = 0usize;
        for &(w, p) in controls {
            let m = self.mask(w);
            care |= m;
            if p == Polarity::Positive {
                want |= m;
            }
        }
        let tm = self.mask(target);
        for i in 0..self.amps.len() {
            if i & care != want {
                continue;
            }
            match axis {
                PauliAxis::Z => {
                    if i & tm != 0 {
                        self.amps[i] = -self.amps[i];
                    }
                }
                PauliAxis::X => {
                    if i & tm == 0 {
                        self.amps.swap(i, i | tm);
                    }
                }
                PauliAxis::Y => {
                    if i & tm == 0 {
                        let a0 = self.amps[i];
                        let a1 = self.amps[i | tm];
                        // Y = [[0, -i], [i, 0]]
                        self.amps[i] = c(0.0, -1.0) * a1;
                        self.amps[i | tm] = c(0.0, 1.0) * a0;
                    }
                }
            }
        }
    }

    /// Project one wire onto |outcome⟩, zeroing the other half of the state.
    /// Amplitudes are kept as-is (no renormalization).
    pub fn project(&mut self, wire: usize, outcome: bool) {
        let m = self.mask(wire);
        for i in 0..self.amps.len() {
            let bit = i & m != 0;
            if bit != outcome {
                self.amps[i] = c(0.0, 0.0);
            }
        }
    }

    /// Apply any gate of a circuit, resolving register-relative qubit ids to
    /// global wires via the circuit.
    pub fn apply_gate(&mut self, circuit: &Circuit, gate: &GateKind) {
        match gate {
            GateKind::Cx { control, target } => {
                self.apply_cx(circuit.wire(*control), circuit.wire(*target));
            }
            GateKind::Cz(a, b) => self.apply_cz(circuit.wire(*a), circuit.wire(*b)),
            GateKind::Mcp { axis, target, controls } => {
                let ctrls: Vec<(usize, Polarity)> =
                    controls.iter().map(|(q, p)| (circuit.wire(*q), *p)).collect();
                self.apply_mcp(*axis, circuit.wire(*target), &ctrls);
            }
            single => {
                let m = single_qubit_matrix(single)
                    .expect("all non-controlled alphabet gates have a 2x2 matrix");
                self.apply_single(circuit.wire(single.qubits()[0]), &m);
            }
        }
    }
}

fn check_width(c: &Circuit) -> Result<(), SimError> {
    let qubits = c.total_qubits();
    if qubits > MAX_SIM_QUBITS {
        return Err(SimError::TooManyQubits { qubits, max: MAX_SIM_QUBITS });
    }
    Ok(())
}

fn check_valid(c: &Circuit) -> Result<(), SimError> {
    let report = crate::circuit::validate(c);
    match report.errors.first() {
        None => Ok(()),
        Some(e) => Err(SimError::InvalidCircuit(e.to_string())),
    }
}

fn measurement_count(c: &Circuit) -> usize {
    c.instructions()
        .iter()
        .filter(|ins| matches!(ins, Instruction::Measure { .. }))
        .count()
}

/// Run a circuit on `input` (amplitudes over the data register; ancillas are
/// appended in |0⟩), forcing the k-th measurement to `outcomes[k]`. The
/// returned state spans data + ancilla wires and is *not* renormalized: its
/// norm² is the probability of the forced outcome record.
pub fn simulate(
    c: &Circuit,
    input: &[Complex64],
    outcomes: &[bool],
) -> Result<StateVector, SimError> {
    check_width(c)?;
    check_valid(c)?;
    let d = c.data_qubits();
    if input.len() != 1 << d {
        return Err(SimError::InputLength { got: input.len(), want: 1 << d });
    }
    let m = measurement_count(c);
    if outcomes.len() != m {
        return Err(SimError::OutcomeCount { got: outcomes.len(), want: m });
    }

    let anc = c.ancilla_qubits();
    let mut state = StateVector::zero(c.total_qubits());
    for (x, &amp) in input.iter().enumerate() {
        state.amps[x << anc] = amp;
    }

    let mut bits: Vec<Option<bool>> = vec![None; c.classical_bits()];
    let mut next_outcome = 0usize;
    for ins in c.instructions() {
        match ins {
            Instruction::Gate(g) => state.apply_gate(c, g),
            Instruction::Measure { qubit, into } => {
                let forced = outcomes[next_outcome];
                next_outcome += 1;
                state.project(c.wire(*qubit), forced);
                bits[into.0] = Some(forced);
            }
            Instruction::Conditioned { bit, value, gate } => {
                let recorded = bits[bit.0].expect("validated: bit written before read");
                if recorded == *value {
                    state.apply_gate(c, gate);
                }
            }
        }
    }
    Ok(state)
}

/// The channel a circuit implements on its data register, organized by
/// measurement record.
///
/// `branches[key]` is the (non-normalized) operator the data register
/// experiences when the k-th measurement returned bit k of `key`; branch
/// probability on input |ψ⟩ is ‖K ψ‖². Unmeasured ancillas are projected
/// back onto |0⟩ at the end; `leakage` is the worst total probability (over
/// data basis inputs) lost to that projection — a correct decomposition
/// leaves it at numerical zero.
#[derive(Debug, Clone)]
pub struct BranchChannel {
    pub data_qubits: usize,
    pub measurements: usize,
    pub branches: BTreeMap<u64, CMatrix>,
    pub leakage: f64,
}

impl BranchChannel {
    /// Max-entry deviation of Σ K†K from the identity — the trace
    /// preservation defect. Zero (to tolerance) for any circuit whose
    /// ancillas are properly uncomputed or measured.
    pub fn trace_preservation_defect(&self) -> f64 {
        let dim = 1 << self.data_qubits;
        let mut sum = CMatrix::zeros(dim, dim);
        for k in self.branches.values() {
            sum += k.adjoint() * k;
        }
        let eye = CMatrix::identity(dim, dim);
        max_abs_diff(&sum, &eye)
    }
}

/// Extract the branch channel of a circuit over its data register.
///
/// Measurements must target ancilla wires (the data register's dimension is
/// the channel's dimension). Branch enumeration forks the state at each
/// measurement, so cost scales with the number of *reachable* records, not
/// blindly with 2^measurements.
pub fn kraus_of(c: &Circuit) -> Result<BranchChannel, SimError> {
    check_width(c)?;
    check_valid(c)?;
    let m = measurement_count(c);
    if m > MAX_BRANCH_MEASUREMENTS {
        return Err(SimError::TooManyMeasurements { count: m, max: MAX_BRANCH_MEASUREMENTS });
    }
    for ins in c.instructions() {
        if let Instruction::Measure { qubit, .. } = ins {
            if qubit.register == Register::Data {
                return Err(SimError::MeasuredDataQubit { qubit: qubit.to_string() });
            }
        }
    }

    let d = c.data_qubits();
    let anc = c.ancilla_qubits();
    let dim = 1usize << d;
    let mut branches: BTreeMap<u64, CMatrix> = BTreeMap::new();
    let mut leakage_max = 0.0f64;

    struct Walk<'a> {
        c: &'a Circuit,
        branches: &'a mut BTreeMap<u64, CMatrix>,
        column: usize,
        col_leak: f64,
    }

    impl Walk<'_> {
        fn go(
            &mut self,
            mut state: StateVector,
            from: usize,
            key: u64,
            next_meas: u32,
            bits: &mut Vec<Option<bool>>,
            anc_pattern: usize,
        ) {
            let instructions = self.c.instructions();
            for (offset, ins) in instructions[from..].iter().enumerate() {
                let pc = from + offset;
                match ins {
                    Instruction::Gate(g) => state.apply_gate(self.c, g),
                    Instruction::Conditioned { bit, value, gate } => {
                        if bits[bit.0] == Some(*value) {
                            state.apply_gate(self.c, gate);
                        }
                    }
                    Instruction::Measure { qubit, into } => {
                        let wire = self.c.wire(*qubit);
                        // The wire's position inside the ancilla block, as a
                        // bit of the final ancilla pattern.
                        let anc_bit = 1usize
                            << (self.c.ancilla_qubits() - 1
                                - (wire - self.c.data_qubits()));
                        for outcome in [false, true] {
                            let mut child = state.clone();
                            child.project(wire, outcome);
                            if child.norm_sqr() < 1e-30 {
                                continue; // unreachable record: zero column
                            }
                            let child_key = key | ((outcome as u64) << next_meas);
                            let child_pattern =
                                anc_pattern | if outcome { anc_bit } else { 0 };
                            bits[into.0] = Some(outcome);
                            self.go(child, pc + 1, child_key, next_meas + 1, bits, child_pattern);
                            bits[into.0] = None;
                        }
                        return;
                    }
                }
            }
            // End of path: slice out the data block at the measured/zero
            // ancilla pattern; everything else is leaked probability.
            let anc = self.c.ancilla_qubits();
            let d = self.c.data_qubits();
            let dim = 1usize << d;
            let total = state.norm_sqr();
            let k = self
                .branches
                .entry(key)
                .or_insert_with(|| CMatrix::zeros(dim, dim));
            let mut kept = 0.0;
            for y in 0..dim {
                let amp = state.amps[(y << anc) | anc_pattern];
                kept += amp.norm_sqr();
                k[(y, self.column)] = amp;
            }
            self.col_leak += total - kept;
        }
    }

    for x in 0..dim {
        let state = StateVector::basis(c.total_qubits(), x << anc);
        let mut bits: Vec<Option<bool>> = vec![None; c.classical_bits()];
        let mut walk = Walk { c, branches: &mut branches, column: x, col_leak: 0.0 };
        walk.go(state, 0, 0, 0, &mut bits, 0);
        leakage_max = leakage_max.max(walk.col_leak);
    }

    Ok(BranchChannel { data_qubits: d, measurements: m, branches, leakage: leakage_max })
}

fn c_one() -> Complex64 {
    c(1.0, 0.0)
}

/// The unitary a measurement-free circuit implements on its data register.
///
/// Errors if the circuit measures/conditions, or if any ancilla fails to
/// return to |0⟩ (residual above 1e-9 in norm²).
pub fn unitary_of(c: &Circuit) -> Result<CMatrix, SimError> {
    for (index, ins) in c.instructions().iter().enumerate() {
        if !matches!(ins, Instruction::Gate(_)) {
            return Err(SimError::NotUnitary { index });
        }
    }
    let channel = kraus_of(c)?;
    if channel.leakage > 1e-9 {
        return Err(SimError::AncillaNotRestored { defect: channel.leakage });
    }
    Ok(channel
        .branches
        .into_values()
        .next()
        .expect("a measurement-free circuit has exactly one branch"))
}

/// Verdict of a channel-vs-target comparison. Each measurement branch is
/// allowed its own global phase (physically unobservable); everything else
/// must match.
#[derive(Debug, Clone)]
pub struct EquivalenceVerdict {
    /// True when every branch matches the target up to a phase, the channel
    /// is trace preserving, and nothing leaks into unrestored ancillas — all
    /// within the tolerance the comparison ran at.
    pub equivalent: bool,
    /// Worst entry-wise deviation of any branch from its phase/weight fit.
    pub max_deviation: f64,
    /// Max-entry deviation of Σ K†K from identity.
    pub trace_defect: f64,
    /// Worst-case probability lost to unrestored ancillas.
    pub leakage: f64,
    /// Fitted unit phase of each branch relative to the target.
    pub branch_phases: BTreeMap<u64, Complex64>,
}

/// Compare the channel of `c` against a target unitary on the data register.
///
/// Every branch operator must be proportional to `target`; the
/// proportionality constant's phase is free per branch (least-squares fit),
/// while the weights are pinned collectively by trace preservation.
pub fn assert_equiv(c: &Circuit, target: &CMatrix, tol: f64) -> Result<EquivalenceVerdict, SimError> {
    let channel = kraus_of(c)?;
    let dim = 1usize << channel.data_qubits;
    assert_eq!(
        (target.nrows(), target.ncols()),
        (dim, dim),
        "target matrix must match the data register ({dim}x{dim})"
    );

    let target_norm_sqr: f64 = target.iter().map(|z| z.norm_sqr()).sum();
    let mut max_deviation = 0.0f64;
    let mut branch_phases = BTreeMap::new();
    for (&key, k) in &channel.branches {
        // Least-squares fit of K ≈ w·target over complex weight w.
        let inner: Complex64 = target
            .iter()
            .zip(k.iter())
            .map(|(t, kk)| t.conj() * kk)
            .sum();
        let weight = inner / target_norm_sqr;
        let phase = if weight.norm() > 0.0 { weight / weight.norm() } else { c_one() };
        let mut dev = 0.0f64;
        for (t, kk) in target.iter().zip(k.iter()) {
            dev = dev.max((kk - weight * t).norm());
        }
        max_deviation = max_deviation.max(dev);
        branch_phases.insert(key, phase);
    }

    let trace_defect = channel.trace_preservation_defect();
    let leakage = channel.leakage;
    Ok(EquivalenceVerdict {
        equivalent: max_deviation < tol && trace_defect < tol && leakage < tol,
        max_deviation,
        trace_defect,
        leakage,
        branch_phases,
    })
}

/// The diagonal matrix of the n-controlled Z on n+1 qubits, built directly
/// from the gate's definition (−1 exactly on the all-ones basis state).
/// Capped at 12 wires.
pub fn mcz_matrix(n: usize) -> Result<CMatrix, SimError> {
    let total = n + 1;
    if total > 12 {
        return Err(SimError::MatrixTooLarge { total, max: 12 });
    }
    let dim = 1usize << total;
    let mut m = CMatrix::identity(dim, dim);
    m[(dim - 1, dim - 1)] = c(-1.0, 0.0);
    Ok(m)
}

/// The matrix of a multi-controlled Pauli with explicit control polarities,
/// on `controls.len() + 1` qubits with the target as the last (least
/// significant) wire. Built combinatorially from the gate's definition —
/// independent of the statevector engine.
pub fn mcp_matrix(axis: PauliAxis, controls: &[Polarity]) -> Result<CMatrix, SimError> {
    let n = controls.len();
    let total = n + 1;
    if total > 12 {
        return Err(SimError::MatrixTooLarge { total, max: 12 });
    }
    let dim = 1usize << total;
    let mut m = CMatrix::zeros(dim, dim);
    for i in 0..dim {
        let fires = controls.iter().enumerate().all(|(j, p)| {
            let bit = (i >> (total - 1 - j)) & 1 == 1;
            match p {
                Polarity::Positive => bit,
                Polarity::Negative => !bit,
            }
        });
        if !fires {
            m[(i, i)] = c_one();
            continue;
        }
        let t1 = i & 1 == 1;
        match axis {
            PauliAxis::Z => m[(i, i)] = if t1 { c(-1.0, 0.0) } else { c_one() },
            PauliAxis::X => m[(i ^ 1, i)] = c_one(),
            PauliAxis::Y => m[(i ^ 1, i)] = if t1 { c(0.0, -1.0) } else { c(0.0, 1.0) },
        }
    }
    Ok(m)
}

/// Embed `u` as a controlled operation: identity unless all `controls` top
/// wires are |1⟩, in which case `u` acts on the bottom wires. With wire 0 as
/// MSB the u-block is the trailing diagonal block.
pub fn controlled_matrix(u: &CMatrix, controls: usize) -> CMatrix {
    let udim = u.nrows();
    let dim = udim << controls;
    let mut m = CMatrix::identity(dim, dim);
    let base = dim - udim;
    for r in 0..udim {
        for cidx in 0..udim {
            m[(base + r, base + cidx)] = u[(r, cidx)];
        }
    }
    m
}

/// Haar-random unitary via complex Ginibre + QR, with the R diagonal's
/// phases absorbed so the distribution is exactly Haar.
pub fn random_unitary<R: rand::Rng>(dim: usize, rng: &mut R) -> CMatrix {
    use rand::distributions::Distribution;
    let normal = rand_distr_standard_normal();
    let g = CMatrix::from_fn(dim, dim, |_, _| {
        c(normal.sample(rng), normal.sample(rng))
    });
    let qr = g.qr();
    let r_diag: Vec<Complex64> = (0..dim).map(|i| qr.r()[(i, i)]).collect();
    let mut q = qr.q();
    for (j, d) in r_diag.iter().enumerate() {
        let phase = if d.norm() > 0.0 { d / d.norm() } else { c_one() };
        for i in 0..dim {
            q[(i, j)] *= phase;
        }
    }
    q
}

// rand 0.8 spells the standard normal via rand::distributions::Standard for
// uniform floats only; Box–Muller over uniforms keeps us off the rand_distr
// crate for this one distribution.
fn rand_distr_standard_normal() -> impl rand::distributions::Distribution<f64> {
    struct BoxMuller;
    impl rand::distributions::Distribution<f64> for BoxMuller {
        fn sample<R: rand::Rng + ?Sized>(&self, rng: &mut R) -> f64 {
            let u1: f64 = rng.gen_range(f64::EPSILON..1.0);
            let u2: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
            (-2.0 * u1.ln()).sqrt() * u2.cos()
        }
    }
    BoxMuller
}

/// Largest entry-wise absolute difference between two equal-shape matrices.
pub fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    assert_eq!(a.shape(), b.shape(), "shape mismatch");
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::{CircuitBuilder, GateKind, PauliAxis, Polarity, QubitId};

    const TOL: f64 = 1e-12;

    fn q(i: usize) -> QubitId {
        QubitId::data(i)
    }

    #[test]
    fn alphabet_matrices_are_unitary() {
        let probe = q(0);
        let gates = [
            GateKind::H(probe),
            GateKind::T(probe),
            GateKind::Tdg(probe),
            GateKind::S(probe),
            GateKind::Sdg(probe),
            GateKind::X(probe),
            GateKind::Y(probe),
            GateKind::Z(probe),
            GateKind::SqrtXdg(probe),
        ];
        for g in &gates {
            let m = single_qubit_matrix(g).unwrap();
            // U†U = I, checked entry by entry.
            for i in 0..2 {
                for j in 0..2 {
                    let dot: Complex64 =
                        (0..2).map(|k| m[k][i].conj() * m[k][j]).sum();
                    let want = if i == j { 1.0 } else { 0.0 };
                    assert!(
                        (dot - c(want, 0.0)).norm() < TOL,
                        "{g:?} is not unitary at ({i},{j}): {dot}"
                    );
                }
            }
        }
    }

    #[test]
    fn sqrt_x_dagger_factors_as_h_sdg_h_and_squares_to_x() {
        let m = single_qubit_matrix(&GateKind::SqrtXdg(q(0))).unwrap();
        let h = single_qubit_matrix(&GateKind::H(q(0))).unwrap();
        let sdg = single_qubit_matrix(&GateKind::Sdg(q(0))).unwrap();
        let mul = |a: &[[Complex64; 2]; 2], b: &[[Complex64; 2]; 2]| {
            let mut out = [[c(0.0, 0.0); 2]; 2];
            for i in 0..2 {
                for j in 0..2 {
                    out[i][j] = (0..2).map(|k| a[i][k] * b[k][j]).sum();
                }
            }
            out
        };
        let hsh = mul(&h, &mul(&sdg, &h));
        let sq = mul(&m, &m);
        let x = single_qubit_matrix(&GateKind::X(q(0))).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert!((m[i][j] - hsh[i][j]).norm() < TOL, "√X† ≠ H·S†·H at ({i},{j})");
                assert!((sq[i][j] - x[i][j]).norm() < TOL, "(√X†)² ≠ X at ({i},{j})");
            }
        }
    }

    #[test]
    fn wire_zero_is_most_significant() {
        // CX with control q0, target q1 on |10⟩ must give |11⟩:
        // index 2 maps to index 3 under the MSB-first convention.
        let mut b = CircuitBuilder::new(2);
        b.cx(q(0), q(1));
        let circ = b.finish();
        let mut input = vec![c(0.0, 0.0); 4];
        input[2] = c_one();
        let out = simulate(&circ, &input, &[]).unwrap();
        assert!((out.amplitudes()[3] - c_one()).norm() < TOL);
        assert!(out.amplitudes()[2].norm() < TOL);
    }

    #[test]
    fn mcz_matrix_flips_only_the_all_ones_state() {
        let m = mcz_matrix(2).unwrap();
        for i in 0..8 {
            let want = if i == 7 { c(-1.0, 0.0) } else { c_one() };
            assert_eq!(m[(i, i)], want, "diagonal entry {i}");
        }
        assert!(mcz_matrix(12).is_err(), "cap at 12 wires");
    }

    #[test]
    fn mcp_matrix_honors_negative_polarity() {
        // Z on the target when the single control is |0⟩:
        // flips the sign of |01⟩ only.
        let m = mcp_matrix(PauliAxis::Z, &[Polarity::Negative]).unwrap();
        let diag: Vec<Complex64> = (0..4).map(|i| m[(i, i)]).collect();
        assert_eq!(diag, vec![c_one(), c(-1.0, 0.0), c_one(), c_one()]);
    }

    #[test]
    fn mcp_matrix_matches_simulator_application() {
        // Same gate, two code paths: combinatorial matrix vs statevector
        // engine column by column.
        let controls = [Polarity::Positive, Polarity::Negative];
        for axis in [PauliAxis::X, PauliAxis::Y, PauliAxis::Z] {
            let m = mcp_matrix(axis, &controls).unwrap();
            let mut b = CircuitBuilder::new(3);
            b.mcp(
                axis,
                q(2),
                vec![(q(0), Polarity::Positive), (q(1), Polarity::Negative)],
            );
            let circ = b.finish();
            let u = unitary_of(&circ).unwrap();
            assert!(max_abs_diff(&m, &u) < TOL, "axis {axis:?} disagrees");
        }
    }

    #[test]
    fn controlled_matrix_of_x_is_cx() {
        let x = CMatrix::from_row_slice(2, 2, &[c(0.0, 0.0), c_one(), c_one(), c(0.0, 0.0)]);
        let cx = controlled_matrix(&x, 1);
        let direct = mcp_matrix(PauliAxis::X, &[Polarity::Positive]).unwrap();
        assert!(max_abs_diff(&cx, &direct) < TOL);
    }

    #[test]
    fn kraus_of_cx_then_measure_gives_two_projector_branches() {
        let mut b = CircuitBuilder::new(1);
        let a0 = b.alloc_ancilla();
        b.cx(q(0), a0);
        b.measure(a0);
        let channel = kraus_of(&b.finish()).unwrap();
        assert_eq!(channel.branches.len(), 2);
        let k0 = &channel.branches[&0];
        let k1 = &channel.branches[&1];
        assert!((k0[(0, 0)] - c_one()).norm() < TOL && k0[(1, 1)].norm() < TOL);
        assert!((k1[(1, 1)] - c_one()).norm() < TOL && k1[(0, 0)].norm() < TOL);
        assert!(channel.trace_preservation_defect() < TOL);
        assert!(channel.leakage < TOL);
    }

    #[test]
    fn kraus_rejects_measuring_data_wires() {
        let mut b = CircuitBuilder::new(1);
        b.measure(q(0));
        assert!(matches!(
            kraus_of(&b.finish()),
            Err(SimError::MeasuredDataQubit { .. })
        ));
    }

    #[test]
    fn unrestored_ancilla_shows_up_as_leakage() {
        let mut b = CircuitBuilder::new(1);
        let a0 = b.alloc_ancilla();
        b.h(a0);
        let circ = b.finish();
        let channel = kraus_of(&circ).unwrap();
        // H leaves the ancilla in |+⟩: half the probability lies outside the
        // |0⟩ slice on every input.
        assert!((channel.leakage - 0.5).abs() < 1e-12);
        assert!(matches!(unitary_of(&circ), Err(SimError::AncillaNotRestored { .. })));
    }

    #[test]
    fn global_phase_is_fitted_per_branch() {
        // X·Y·Z in circuit order composes to the matrix Z·Y·X = -i·I.
        let mut b = CircuitBuilder::new(1);
        b.x(q(0)).y(q(0)).z(q(0));
        let circ = b.finish();
        let eye = CMatrix::identity(2, 2);
        let verdict = assert_equiv(&circ, &eye, 1e-9).unwrap();
        assert!(verdict.equivalent, "XYZ ∝ identity: {verdict:?}");
        let phase = verdict.branch_phases[&0];
        assert!((phase - c(0.0, -1.0)).norm() < 1e-9, "expected phase -i, got {phase}");
    }

    #[test]
    fn hzh_equals_x_with_trivial_phase() {
        let mut b = CircuitBuilder::new(1);
        b.h(q(0)).z(q(0)).h(q(0));
        let target = mcp_matrix(PauliAxis::X, &[]).unwrap();
        let verdict = assert_equiv(&b.finish(), &target, 1e-9).unwrap();
        assert!(verdict.equivalent);
        assert!((verdict.branch_phases[&0] - c_one()).norm() < 1e-9);
    }

    #[test]
    fn simulate_forces_measurement_outcomes() {
        // |+⟩ copied onto an ancilla, then the ancilla forced to 1:
        // the surviving amplitude is 1/√2 on |1⟩⊗|1⟩, unnormalized.
        let mut b = CircuitBuilder::new(1);
        let a0 = b.alloc_ancilla();
        b.h(q(0)).cx(q(0), a0);
        b.measure(a0);
        let circ = b.finish();
        let out = simulate(&circ, &[c_one(), c(0.0, 0.0)], &[true]).unwrap();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert!((out.amplitudes()[3] - c(s, 0.0)).norm() < TOL);
        assert!((out.norm_sqr() - 0.5).abs() < TOL);
    }

    #[test]
    fn random_unitaries_are_unitary_and_seeded() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let u = random_unitary(4, &mut rng);
        let eye = CMatrix::identity(4, 4);
        assert!(max_abs_diff(&(u.adjoint() * &u), &eye) < 1e-10);
        let mut rng2 = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let u2 = random_unitary(4, &mut rng2);
        assert!(max_abs_diff(&u, &u2) < TOL, "same seed, same unitary");
    }

    #[test]
    fn width_cap_is_enforced() {
        let b = CircuitBuilder::with_ancillas(10, 7);
        assert!(matches!(
            kraus_of(&b.finish()),
            Err(SimError::TooManyQubits { qubits: 17, .. })
        ));
    }
}
